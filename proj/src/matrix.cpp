#include "p0cert/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace p0cert {

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw input_error("empty rational literal");
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw input_error("zero denominator in rational literal '" + text + "'");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw input_error("malformed rational literal '" + text + "'");
    }
}

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw dimension_error("index set must be nonempty");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1 || (i > 0 && elements_[i] <= elements_[i - 1])) {
            throw dimension_error("index set must be strictly increasing and 1-based");
        }
    }
}

bool IndexSet::contains(int value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

int IndexSet::position_of(int value) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
    if (it == elements_.end() || *it != value) {
        return -1;
    }
    return static_cast<int>(it - elements_.begin());
}

IndexSet full_index_set(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return IndexSet(std::move(all));
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) {
        throw dimension_error("matrix dimensions must be positive");
    }
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1 || cols < 1) {
        throw dimension_error("matrix dimensions must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw dimension_error("entry count does not match matrix shape");
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_ints(int rows, int cols, std::vector<long> values) {
    std::vector<Rational> entries;
    entries.reserve(values.size());
    for (long v : values) {
        entries.emplace_back(v);
    }
    return RationalMatrix(rows, cols, std::move(entries));
}

const Rational& RationalMatrix::at(int row, int col) const {
    return entries_.at(static_cast<std::size_t>(row) * cols_ + col);
}

Rational& RationalMatrix::at(int row, int col) {
    return entries_.at(static_cast<std::size_t>(row) * cols_ + col);
}

SignPattern::SignPattern(int rows, int cols)
    : rows_(rows), cols_(cols), signs_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 1 || cols < 1) {
        throw dimension_error("sign pattern dimensions must be positive");
    }
}

SignPattern::SignPattern(int rows, int cols, std::vector<int> signs) : SignPattern(rows, cols) {
    if (signs.size() != signs_.size()) {
        throw dimension_error("sign count does not match pattern shape");
    }
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] < -1 || signs[i] > 1) {
            throw dimension_error("sign pattern entries must lie in {-1, 0, +1}");
        }
        signs_[i] = static_cast<int8_t>(signs[i]);
    }
}

int SignPattern::at(int row, int col) const {
    return signs_.at(static_cast<std::size_t>(row) * cols_ + col);
}

void SignPattern::set(int row, int col, int sign) {
    if (sign < -1 || sign > 1) {
        throw dimension_error("sign pattern entries must lie in {-1, 0, +1}");
    }
    signs_.at(static_cast<std::size_t>(row) * cols_ + col) = static_cast<int8_t>(sign);
}

int SignPattern::nonzero_count() const {
    int count = 0;
    for (int8_t s : signs_) {
        count += (s != 0);
    }
    return count;
}

static std::string shape_string(int rows, int cols) {
    std::ostringstream os;
    os << rows << "x" << cols;
    return os.str();
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) {
        throw dimension_error("cannot multiply " + shape_string(a.rows(), a.cols()) + " by " +
                              shape_string(b.rows(), b.cols()));
    }
    RationalMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const Rational& ail = a.at(i, l);
            if (ail.is_zero()) {
                continue;
            }
            for (int j = 0; j < b.cols(); ++j) {
                out.at(i, j) += ail * b.at(l, j);
            }
        }
    }
    return out;
}

RationalMatrix product_chain(const std::vector<RationalMatrix>& ms) {
    if (ms.empty()) {
        throw dimension_error("product chain must contain at least one matrix");
    }
    const std::size_t k = ms.size();
    for (std::size_t j = 0; j < k; ++j) {
        const auto& next = ms[(j + 1) % k];
        if (ms[j].cols() != next.rows()) {
            throw dimension_error("chain mismatch between factor " + std::to_string(j) + " (" +
                                  shape_string(ms[j].rows(), ms[j].cols()) + ") and factor " +
                                  std::to_string((j + 1) % k) + " (" +
                                  shape_string(next.rows(), next.cols()) + ")");
        }
    }
    RationalMatrix out = ms[0];
    for (std::size_t j = 1; j < k; ++j) {
        out = multiply(out, ms[j]);
    }
    if (!out.is_square()) {
        throw dimension_error("chain product is not square");
    }
    return out;
}

// Bareiss elimination over the denominator-cleared integer matrix; the
// cleared factors divide back out at the end.
static Rational determinant_bareiss(const RationalMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (int j = 0; j < n; ++j) {
            row_lcm = lcm(row_lcm, denominator(m.at(i, j)));
        }
        scale *= row_lcm;
        a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const Rational& e = m.at(i, j);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                numerator(e) * (row_lcm / denominator(e));
        }
    }

    int det_sign = 1;
    Integer prev_pivot = 1;
    for (int col = 0; col < n - 1; ++col) {
        int pivot_row = -1;
        for (int r = col; r < n; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) {
            return Rational(0);
        }
        if (pivot_row != col) {
            std::swap(a[static_cast<std::size_t>(pivot_row)], a[static_cast<std::size_t>(col)]);
            det_sign = -det_sign;
        }
        const Integer pivot = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c) {
                auto& arc = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                arc = (pivot * arc -
                       a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                           a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]) /
                      prev_pivot;
            }
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
        }
        prev_pivot = pivot;
    }
    Integer det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (det_sign < 0) {
        det = -det;
    }
    return Rational(det, scale);
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) {
        throw dimension_error("determinant requires a square matrix");
    }
    switch (m.rows()) {
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        case 3:
            return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                   m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                   m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        default:
            return determinant_bareiss(m);
    }
}

Rational minor_det(const RationalMatrix& m, const IndexSet& gamma, const IndexSet& delta) {
    if (gamma.size() != delta.size()) {
        throw dimension_error("minor requires equally sized row and column index sets");
    }
    if (gamma.elements().back() > m.rows() || delta.elements().back() > m.cols()) {
        throw dimension_error("minor index out of range");
    }
    const int t = gamma.size();
    RationalMatrix sub(t, t);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            sub.at(i, j) = m.at(gamma.at(i) - 1, delta.at(j) - 1);
        }
    }
    return determinant(sub);
}

void for_each_nonempty_subset(int n, const std::function<bool(const IndexSet&)>& visit) {
    if (n < 1) {
        return;
    }
    std::vector<int> cur{1};
    while (true) {
        if (!visit(IndexSet(cur))) {
            return;
        }
        if (cur.back() < n) {
            cur.push_back(cur.back() + 1);
        } else {
            cur.pop_back();
            if (cur.empty()) {
                return;
            }
            ++cur.back();
        }
    }
}

void for_each_combination(int n, int t, const std::function<bool(const IndexSet&)>& visit) {
    if (t < 1 || t > n) {
        return;
    }
    std::vector<int> cur(static_cast<std::size_t>(t));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        if (!visit(IndexSet(cur))) {
            return;
        }
        int i = t - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (t - 1 - i)) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

static MinorVerdict principal_minor_scan(const RationalMatrix& m, bool strict) {
    if (!m.is_square()) {
        throw dimension_error("P0/P classification requires a square matrix");
    }
    MinorVerdict verdict{true, std::nullopt, std::nullopt};
    for_each_nonempty_subset(m.rows(), [&](const IndexSet& alpha) {
        Rational value = minor_det(m, alpha, alpha);
        const int s = sign_of(value);
        if (s < 0 || (strict && s == 0)) {
            verdict.holds = false;
            verdict.witness = alpha;
            verdict.witness_minor = std::move(value);
            return false;
        }
        return true;
    });
    return verdict;
}

MinorVerdict is_P0(const RationalMatrix& m) {
    return principal_minor_scan(m, false);
}

MinorVerdict is_P(const RationalMatrix& m) {
    return principal_minor_scan(m, true);
}

SignPattern sign_pattern(const RationalMatrix& m) {
    SignPattern s(m.rows(), m.cols());
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            signs.push_back(sign_of(m.at(i, j)));
        }
    }
    return SignPattern(m.rows(), m.cols(), std::move(signs));
}

RationalMatrix sample_qualitative(const SignPattern& s, const Rational& magnitude_bound,
                                  std::uint64_t seed) {
    if (sign_of(magnitude_bound) <= 0) {
        throw dimension_error("magnitude bound must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(1, 16);
    RationalMatrix out(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i) {
        for (int j = 0; j < s.cols(); ++j) {
            const int sg = s.at(i, j);
            if (sg == 0) {
                continue;
            }
            const int p = digit(rng);
            const int q = digit(rng);
            // ratio in (0, 1], so the magnitude stays within the bound
            Rational ratio(std::min(p, q), std::max(p, q));
            out.at(i, j) = Rational(sg) * magnitude_bound * ratio;
        }
    }
    return out;
}

}  // namespace p0cert
