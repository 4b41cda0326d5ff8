#pragma once

#include <vector>

#include "p0cert/bcdigraph.hpp"
#include "p0cert/matrix.hpp"

namespace p0cert {

// A bijection on an index set, given as the image list of the sorted
// domain: image[m] = beta(domain.at(m)).
class Permutation {
public:
    Permutation(IndexSet domain, std::vector<int> image);

    const IndexSet& domain() const { return domain_; }
    const std::vector<int>& image() const { return image_; }
    int size() const { return domain_.size(); }

private:
    IndexSet domain_;
    std::vector<int> image_;
};

// (-1)^(r - s) where r = |domain| and s = the number of disjoint cycles
// in the decomposition, trivial cycles included.
int permutation_parity(const Permutation& p);

// One nonzero term of a principal-minor expansion of a chain product,
// together with the vertex-disjoint cycle packing it induces in the
// associated block-circulant digraph.
struct TermDecomposition {
    std::vector<IndexSet> alpha_list;       // alpha^(0) ... alpha^(k-1)
    std::vector<Permutation> beta_list;     // beta^(0) ... beta^(k-1)
    std::vector<SignedEdge> edge_set;       // edge (V_j^{alpha^(j)_m}, V_{j+1}^{beta^(j+1)_m})
    int cycle_count = 0;                    // N
    int e_cycle_count = 0;                  // N_e
    int o_cycle_count = 0;                  // N_o
    int theta_e = 0;                        // e-cycle edges / k
    int theta_o = 0;                        // o-cycle edges / k
};

// Builds the decomposition induced by (alpha_list, beta_list): derives the
// edge set, splits it into disjoint cycles and fills all counters.
TermDecomposition make_term_decomposition(std::vector<IndexSet> alpha_list,
                                          std::vector<Permutation> beta_list,
                                          const std::vector<SignPattern>& patterns);

// Returns (-1)^{N_e}. Independently recomputes the sign through the
// permutation-parity route (product of P(beta^(j)) times the product of
// edge signs) and throws consistency_error if the two routes disagree or
// any stored counter is inconsistent with the edge set.
int term_sign(const TermDecomposition& t);

// Principal minor A[alpha0] of the chain product, expanded recursively by
// Cauchy-Binet over all index-set chains (alpha^(1), ..., alpha^(k-1)).
// An empty sum (some layer smaller than |alpha0|) yields 0.
Rational cauchy_binet_minor(const std::vector<RationalMatrix>& ms, const IndexSet& alpha0);

}  // namespace p0cert
