#include <doctest.h>

#include <random>

#include "p0cert/terms.hpp"
#include "test_util.hpp"

using namespace p0cert;
using namespace p0cert::testutil;

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation(IndexSet({1, 2}), {1, 1}), dimension_error);
    CHECK_THROWS_AS(Permutation(IndexSet({1, 2}), {1, 3}), dimension_error);
}

TEST_CASE("permutation parity by cycle counting") {
    CHECK(permutation_parity(Permutation(IndexSet({1, 2, 3}), {1, 2, 3})) == +1);
    CHECK(permutation_parity(Permutation(IndexSet({1, 2, 3}), {2, 1, 3})) == -1);
    CHECK(permutation_parity(Permutation(IndexSet({1, 2, 3}), {2, 3, 1})) == +1);
    // non-contiguous domain
    CHECK(permutation_parity(Permutation(IndexSet({2, 5, 7}), {5, 2, 7})) == -1);
}

TEST_CASE("parity law: cycle counting agrees with inversion counting") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> size_dist(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = size_dist(rng);
        std::vector<int> domain = random_subset(rng, 12, n);
        std::vector<int> image = domain;
        std::shuffle(image.begin(), image.end(), rng);
        Permutation p(IndexSet(domain), image);
        CHECK(permutation_parity(p) == oracle_parity(p));
    }
}

TEST_CASE("cauchy_binet_minor") {
    // scalar case
    CHECK(cauchy_binet_minor({rm(1, 2, {1, 2}), rm(2, 1, {3, 4})}, IndexSet({1})) == Rational(11));
    // three-factor worked chain with unit magnitudes
    CHECK(cauchy_binet_minor(chain3_unit_matrices(), IndexSet({1, 2})) == Rational(6));
    // k=1 reduces to a plain principal minor
    RationalMatrix m = rm(3, 3, {1, 2, 0, -1, 3, 1, 0, 0, 2});
    CHECK(cauchy_binet_minor({m}, IndexSet({1, 3})) ==
          minor_det(m, IndexSet({1, 3}), IndexSet({1, 3})));
    // empty sum: middle layer smaller than |alpha0|
    CHECK(cauchy_binet_minor({rm(2, 1, {1, 1}), rm(1, 2, {1, 1})}, IndexSet({1, 2})) ==
          Rational(0));
    CHECK_THROWS_AS(cauchy_binet_minor({rm(1, 2, {1, 2}), rm(3, 1, {1, 1, 1})}, IndexSet({1})),
                    dimension_error);
}

TEST_CASE("exactness: Cauchy-Binet equals the direct product minor") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> k_dist(1, 4);
    std::uniform_int_distribution<int> n_dist(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = k_dist(rng);
        std::vector<int> sizes(static_cast<std::size_t>(k));
        for (auto& n : sizes) {
            n = n_dist(rng);
        }
        std::vector<RationalMatrix> chain;
        for (int j = 0; j < k; ++j) {
            chain.push_back(random_rational_matrix(rng, sizes[static_cast<std::size_t>(j)],
                                                   sizes[static_cast<std::size_t>((j + 1) % k)]));
        }
        const RationalMatrix product = product_chain(chain);
        for_each_nonempty_subset(product.rows(), [&](const IndexSet& alpha) {
            CHECK(cauchy_binet_minor(chain, alpha) == minor_det(product, alpha, alpha));
            return true;
        });
    }
}

TEST_CASE("term_sign on hand-built decompositions") {
    // one o-cycle only: a positive loop (k=1, r1=1, r2=0)
    {
        auto t = make_term_decomposition({IndexSet({1})},
                                         {Permutation(IndexSet({1}), {1})},
                                         {sp(1, 1, {1})});
        CHECK(t.e_cycle_count == 0);
        CHECK(t.o_cycle_count == 1);
        CHECK(t.theta_o == 1);
        CHECK(term_sign(t) == +1);
    }
    // exactly one e-cycle: a positive 2-cycle (r1=2, r2=0)
    {
        auto t = make_term_decomposition({IndexSet({1, 2})},
                                         {Permutation(IndexSet({1, 2}), {2, 1})},
                                         {sp(2, 2, {0, 1, 1, 0})});
        CHECK(t.e_cycle_count == 1);
        CHECK(term_sign(t) == -1);
    }
    // two disjoint e-cycles: two negative loops
    {
        auto t = make_term_decomposition({IndexSet({1, 2})},
                                         {Permutation(IndexSet({1, 2}), {1, 2})},
                                         {sp(2, 2, {-1, 0, 0, -1})});
        CHECK(t.e_cycle_count == 2);
        CHECK(t.cycle_count == 2);
        CHECK(term_sign(t) == +1);
    }
}

TEST_CASE("term_sign flags doctored counters") {
    auto t = make_term_decomposition({IndexSet({1, 2})},
                                     {Permutation(IndexSet({1, 2}), {2, 1})},
                                     {sp(2, 2, {0, 1, 1, 0})});
    t.e_cycle_count = 0;
    t.o_cycle_count = 1;
    CHECK_THROWS_AS(term_sign(t), consistency_error);
}

TEST_CASE("sign-term law: parity route equals cycle route on random packings") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        TermDecomposition t = random_term_decomposition(rng);
        CHECK(t.cycle_count == t.e_cycle_count + t.o_cycle_count);
        CHECK(t.theta_e + t.theta_o == t.alpha_list.front().size());
        // term_sign itself cross-checks the two routes and throws on a bug
        const int sign = term_sign(t);
        CHECK(sign == ((t.e_cycle_count % 2 == 0) ? +1 : -1));
    }
}
