#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "p0cert/error.hpp"
#include "p0cert/rational.hpp"

namespace p0cert {

// Strictly increasing, nonempty list of 1-based indices.
class IndexSet {
public:
    explicit IndexSet(std::vector<int> elements);

    const std::vector<int>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int at(int m) const { return elements_.at(static_cast<std::size_t>(m)); }
    bool contains(int value) const;

    // Position of `value` in the set (0-based), or -1 if absent.
    int position_of(int value) const;

    bool operator==(const IndexSet&) const = default;

private:
    std::vector<int> elements_;
};

// Full index set {1, ..., n}.
IndexSet full_index_set(int n);

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    static RationalMatrix identity(int n);
    static RationalMatrix from_ints(int rows, int cols, std::vector<long> values);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(int row, int col) const;
    Rational& at(int row, int col);

    bool operator==(const RationalMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

// Matrix over {-1, 0, +1} representing a qualitative class.
class SignPattern {
public:
    SignPattern(int rows, int cols);
    SignPattern(int rows, int cols, std::vector<int> signs);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int row, int col) const;
    void set(int row, int col, int sign);
    int nonzero_count() const;

    bool operator==(const SignPattern&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<int8_t> signs_;
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Left-to-right product of a cyclically compatible chain; the result must
// be square.
RationalMatrix product_chain(const std::vector<RationalMatrix>& ms);

// Exact determinant of a square matrix. Laplace expansion for n <= 3,
// fraction-free (Bareiss) elimination above that.
Rational determinant(const RationalMatrix& m);

// det of the submatrix with rows `gamma` and columns `delta`.
Rational minor_det(const RationalMatrix& m, const IndexSet& gamma, const IndexSet& delta);

struct MinorVerdict {
    bool holds;
    std::optional<IndexSet> witness;
    std::optional<Rational> witness_minor;
};

// Enumerates all nonempty principal index sets in lexicographic order and
// short-circuits on the first violation.
MinorVerdict is_P0(const RationalMatrix& m);
MinorVerdict is_P(const RationalMatrix& m);

SignPattern sign_pattern(const RationalMatrix& m);

// Deterministic-under-seed matrix in the qualitative class of `s`, with
// nonzero magnitudes in (0, magnitude_bound].
RationalMatrix sample_qualitative(const SignPattern& s, const Rational& magnitude_bound,
                                  std::uint64_t seed);

// Visits all size-t subsets of {1..n} in lexicographic order. Returns
// early if the visitor returns false.
void for_each_combination(int n, int t, const std::function<bool(const IndexSet&)>& visit);

// Visits all nonempty subsets of {1..n} in lexicographic order of their
// sorted element lists, e.g. for n=3: {1},{1,2},{1,2,3},{1,3},{2},{2,3},{3}.
void for_each_nonempty_subset(int n, const std::function<bool(const IndexSet&)>& visit);

}  // namespace p0cert
