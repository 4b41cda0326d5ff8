#include "p0cert/terms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace p0cert {

Permutation::Permutation(IndexSet domain, std::vector<int> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
    std::vector<int> sorted = image_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != domain_.elements()) {
        throw dimension_error("permutation image must rearrange the domain");
    }
}

int permutation_parity(const Permutation& p) {
    const int r = p.size();
    std::vector<bool> visited(static_cast<std::size_t>(r), false);
    int cycles = 0;
    for (int m = 0; m < r; ++m) {
        if (visited[static_cast<std::size_t>(m)]) {
            continue;
        }
        ++cycles;
        int pos = m;
        while (!visited[static_cast<std::size_t>(pos)]) {
            visited[static_cast<std::size_t>(pos)] = true;
            pos = p.domain().position_of(p.image()[static_cast<std::size_t>(pos)]);
        }
    }
    return ((r - cycles) % 2 == 0) ? +1 : -1;
}

// Edge set of a term: (V_j^{alpha^(j)_m}, V_{j+1}^{beta^(j+1)_m}) for each
// layer j and position m.
static std::vector<SignedEdge> term_edges(const std::vector<IndexSet>& alpha_list,
                                          const std::vector<Permutation>& beta_list,
                                          const std::vector<SignPattern>& patterns) {
    const int k = static_cast<int>(alpha_list.size());
    std::vector<SignedEdge> edges;
    for (int j = 0; j < k; ++j) {
        const auto& tail_set = alpha_list[static_cast<std::size_t>(j)];
        const auto& beta_next = beta_list[static_cast<std::size_t>((j + 1) % k)];
        if (beta_next.domain() != alpha_list[static_cast<std::size_t>((j + 1) % k)]) {
            throw dimension_error("beta^(j) must permute alpha^(j)");
        }
        for (int m = 0; m < tail_set.size(); ++m) {
            const int r = tail_set.at(m);
            const int s = beta_next.image()[static_cast<std::size_t>(m)];
            const int sg = patterns[static_cast<std::size_t>(j)].at(r - 1, s - 1);
            if (sg == 0) {
                throw dimension_error("term references a zero matrix entry");
            }
            edges.push_back(
                SignedEdge{LayeredVertex{j, r}, LayeredVertex{(j + 1) % k, s}, sg});
        }
    }
    return edges;
}

// Splits a 1-in/1-out edge set into its vertex-disjoint simple cycles.
static std::vector<Cycle> decompose_into_cycles(const std::vector<SignedEdge>& edge_set, int k) {
    std::map<LayeredVertex, SignedEdge> out;
    for (const auto& e : edge_set) {
        if (!out.emplace(e.from, e).second) {
            throw dimension_error("edge set has a vertex with two outgoing edges");
        }
    }
    std::vector<Cycle> cycles;
    std::set<LayeredVertex> used;
    for (const auto& [v, first] : out) {
        if (used.count(v) > 0) {
            continue;
        }
        std::vector<SignedEdge> walk;
        LayeredVertex cur = v;
        do {
            auto it = out.find(cur);
            if (it == out.end()) {
                throw dimension_error("edge set does not decompose into cycles");
            }
            walk.push_back(it->second);
            used.insert(cur);
            cur = it->second.to;
        } while (cur != v);
        cycles.push_back(classify_cycle(walk, k));
    }
    return cycles;
}

TermDecomposition make_term_decomposition(std::vector<IndexSet> alpha_list,
                                          std::vector<Permutation> beta_list,
                                          const std::vector<SignPattern>& patterns) {
    if (alpha_list.empty() || alpha_list.size() != beta_list.size() ||
        alpha_list.size() != patterns.size()) {
        throw dimension_error("alpha, beta and pattern lists must have equal length k >= 1");
    }
    const int size = alpha_list.front().size();
    for (const auto& a : alpha_list) {
        if (a.size() != size) {
            throw dimension_error("all alpha^(j) must have equal size");
        }
    }
    TermDecomposition t;
    t.edge_set = term_edges(alpha_list, beta_list, patterns);
    t.alpha_list = std::move(alpha_list);
    t.beta_list = std::move(beta_list);
    const int k = static_cast<int>(t.alpha_list.size());
    for (const auto& c : decompose_into_cycles(t.edge_set, k)) {
        ++t.cycle_count;
        if (c.parity == Parity::e) {
            ++t.e_cycle_count;
            t.theta_e += c.r1;
        } else {
            ++t.o_cycle_count;
            t.theta_o += c.r1;
        }
    }
    return t;
}

int term_sign(const TermDecomposition& t) {
    if (t.cycle_count != t.e_cycle_count + t.o_cycle_count) {
        throw consistency_error("N != N_e + N_o");
    }
    const int size = t.alpha_list.empty() ? 0 : t.alpha_list.front().size();
    if (t.theta_e + t.theta_o != size) {
        throw consistency_error("theta_e + theta_o != |alpha^(0)|");
    }

    // Recount cycles from the edge set.
    const int k = static_cast<int>(t.alpha_list.size());
    int n_e = 0;
    int n_o = 0;
    for (const auto& c : decompose_into_cycles(t.edge_set, k)) {
        (c.parity == Parity::e ? n_e : n_o) += 1;
    }
    if (n_e != t.e_cycle_count || n_o != t.o_cycle_count) {
        throw consistency_error("stored cycle counts disagree with the edge set");
    }

    const int sign_by_cycles = (t.e_cycle_count % 2 == 0) ? +1 : -1;

    // Second route: product of permutation parities times product of edge
    // signs.
    int sign_by_parities = 1;
    for (const auto& beta : t.beta_list) {
        sign_by_parities *= permutation_parity(beta);
    }
    for (const auto& e : t.edge_set) {
        sign_by_parities *= e.sign;
    }
    if (sign_by_parities != sign_by_cycles) {
        throw consistency_error("term sign routes disagree");
    }
    return sign_by_cycles;
}

Rational cauchy_binet_minor(const std::vector<RationalMatrix>& ms, const IndexSet& alpha0) {
    if (ms.empty()) {
        throw dimension_error("chain must contain at least one matrix");
    }
    const int k = static_cast<int>(ms.size());
    for (int j = 0; j < k; ++j) {
        if (ms[static_cast<std::size_t>(j)].cols() != ms[static_cast<std::size_t>((j + 1) % k)].rows()) {
            throw dimension_error("chain is not cyclically compatible");
        }
    }
    if (alpha0.elements().back() > ms.front().rows()) {
        throw dimension_error("alpha^(0) index out of range");
    }
    const int t = alpha0.size();

    std::function<Rational(int, const IndexSet&)> expand = [&](int j,
                                                               const IndexSet& alpha_j) -> Rational {
        const auto& factor = ms[static_cast<std::size_t>(j)];
        if (j == k - 1) {
            return minor_det(factor, alpha_j, alpha0);
        }
        Rational sum(0);
        for_each_combination(factor.cols(), t, [&](const IndexSet& alpha_next) {
            Rational head = minor_det(factor, alpha_j, alpha_next);
            if (!head.is_zero()) {
                sum += head * expand(j + 1, alpha_next);
            }
            return true;
        });
        return sum;   // empty sum stays 0 when a layer is too small
    };
    return expand(0, alpha0);
}

}  // namespace p0cert
