#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "p0cert/bcdigraph.hpp"
#include "p0cert/certify.hpp"
#include "test_util.hpp"

using namespace p0cert;
using namespace p0cert::testutil;

namespace {

// (r1, r2) multiset, for comparing cycle structure across isomorphic graphs
std::multiset<std::pair<int, int>> cycle_signatures(const std::vector<Cycle>& cycles) {
    std::multiset<std::pair<int, int>> sig;
    for (const auto& c : cycles) {
        sig.insert({c.r1, c.r2});
    }
    return sig;
}

std::set<std::vector<std::pair<int, int>>> cycle_vertex_sets(const std::vector<Cycle>& cycles,
                                                             Parity wanted) {
    std::set<std::vector<std::pair<int, int>>> out;
    for (const auto& c : cycles) {
        if (c.parity != wanted) {
            continue;
        }
        std::vector<std::pair<int, int>> vs;
        for (const auto& v : c.vertices()) {
            vs.emplace_back(v.layer, v.index);
        }
        out.insert(vs);
    }
    return out;
}

}  // namespace

TEST_CASE("build_graph on the three-factor worked chain") {
    BCDigraph g = build_graph(chain3_patterns());
    CHECK(g.k() == 3);
    CHECK(g.layer_sizes() == std::vector<int>{2, 3, 2});
    CHECK(g.edges().size() == 12);
    CHECK(g.vertex_count() == 7);
}

TEST_CASE("build_graph edge cases") {
    // zero patterns: no edges
    BCDigraph empty = build_graph({SignPattern(2, 3), SignPattern(3, 2)});
    CHECK(empty.edges().empty());
    // k=1 loop
    BCDigraph loop = build_graph({sp(1, 1, {1})});
    CHECK(loop.edges().size() == 1);
    CHECK(loop.edges().front().from == loop.edges().front().to);
    // incompatible pair
    CHECK_THROWS_AS(build_graph({sp(2, 3, {1, 0, 0, 0, 1, 0}), sp(2, 2, {1, 0, 0, 1})}),
                    dimension_error);
}

TEST_CASE("edge bijection: one edge per nonzero entry") {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> k_dist(1, 4);
        auto patterns = random_pattern_list(rng, k_dist(rng), 4);
        BCDigraph g = build_graph(patterns);
        int nonzeros = 0;
        for (const auto& p : patterns) {
            nonzeros += p.nonzero_count();
        }
        CHECK(static_cast<int>(g.edges().size()) == nonzeros);
        // losslessness: edges reproduce the patterns exactly
        for (const auto& e : g.edges()) {
            CHECK(patterns[static_cast<std::size_t>(e.from.layer)].at(e.from.index - 1,
                                                                      e.to.index - 1) == e.sign);
        }
    }
}

TEST_CASE("adjacency_blocks reproduces the 7x7 block sign matrix") {
    BCDigraph g = build_graph(chain3_patterns());
    SignPattern blocks = adjacency_blocks(g);
    // clang-format off
    SignPattern expected = sp(7, 7, {
        0, 0,   1, -1, -1,   0, 0,
        0, 0,   1,  0,  1,   0, 0,
        0, 0,   0,  0,  0,   1, 0,
        0, 0,   0,  0,  0,  -1, 0,
        0, 0,   0,  0,  0,   0, 1,
        1, 1,   0,  0,  0,   0, 0,
       -1, 1,   0,  0,  0,   0, 0});
    // clang-format on
    CHECK(blocks == expected);
}

TEST_CASE("adjacency_blocks edge cases") {
    CHECK(adjacency_blocks(build_graph({SignPattern(2, 2), SignPattern(2, 2)})) ==
          SignPattern(4, 4));
    // k=1: the pattern itself
    SignPattern p = sp(2, 2, {1, -1, 0, 1});
    CHECK(adjacency_blocks(build_graph({p})) == p);
}

TEST_CASE("classify_cycle") {
    // positive length-3 cycle through layers 0,1,2 of the worked chain
    std::vector<SignedEdge> pos3 = {
        {{0, 1}, {1, 1}, +1}, {{1, 1}, {2, 1}, +1}, {{2, 1}, {0, 1}, +1}};
    Cycle c = classify_cycle(pos3, 3);
    CHECK(c.r1 == 1);
    CHECK(c.r2 == 0);
    CHECK(c.parity == Parity::o);

    // same shape with two negative edges: still o
    std::vector<SignedEdge> twoneg = {
        {{0, 1}, {1, 2}, -1}, {{1, 2}, {2, 1}, -1}, {{2, 1}, {0, 1}, +1}};
    Cycle d = classify_cycle(twoneg, 3);
    CHECK(d.r1 == 1);
    CHECK(d.r2 == 2);
    CHECK(d.parity == Parity::o);

    // k=1 negative loop is an e-cycle
    Cycle loop = classify_cycle({{{0, 1}, {0, 1}, -1}}, 1);
    CHECK(loop.r1 == 1);
    CHECK(loop.r2 == 1);
    CHECK(loop.parity == Parity::e);

    // malformed inputs
    CHECK_THROWS_AS(classify_cycle({{{0, 1}, {1, 1}, +1}}, 2), dimension_error);
    CHECK_THROWS_AS(classify_cycle({{{0, 1}, {1, 1}, +1}, {{1, 2}, {0, 1}, +1}}, 2),
                    dimension_error);
}

TEST_CASE("cycle census of the worked chain: 8 cycles, all o") {
    BCDigraph g = build_graph(chain3_patterns());
    CycleEnumeration enumeration = enumerate_simple_cycles(g);
    CHECK(!enumeration.truncated);
    CHECK(enumeration.cycles.size() == 8);
    int len3 = 0;
    int len6 = 0;
    for (const auto& c : enumeration.cycles) {
        CHECK(c.parity == Parity::o);
        len3 += (c.length() == 3);
        len6 += (c.length() == 6);
    }
    CHECK(len3 == 5);
    CHECK(len6 == 3);

    // cross-check counts against the brute-force oracle
    auto oc = oracle_cycles(chain3_patterns());
    CHECK(oc.size() == 8);
    int oracle_len3 = 0;
    for (const auto& c : oc) {
        oracle_len3 += (c.length == 3);
    }
    CHECK(oracle_len3 == 5);
}

TEST_CASE("enumeration agrees with the oracle on random graphs") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> k_dist(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        auto patterns = random_pattern_list(rng, k_dist(rng), 3);
        BCDigraph g = build_graph(patterns);
        CycleEnumeration enumeration = enumerate_simple_cycles(g);
        REQUIRE(!enumeration.truncated);
        auto oc = oracle_cycles(patterns);
        REQUIRE(enumeration.cycles.size() == oc.size());
        // compare as multisets of (length, negative count)
        std::multiset<std::pair<int, int>> ours;
        std::multiset<std::pair<int, int>> theirs;
        for (const auto& c : enumeration.cycles) {
            ours.insert({c.length(), c.r2});
            // layer law
            CHECK(c.length() % g.k() == 0);
            CHECK(c.length() == g.k() * c.r1);
        }
        for (const auto& c : oc) {
            theirs.insert({c.length, c.negative_edges});
        }
        CHECK(ours == theirs);
    }
}

TEST_CASE("enumeration edge cases") {
    CHECK(enumerate_simple_cycles(build_graph({SignPattern(2, 2)})).cycles.empty());

    BCDigraph two = build_graph({sp(2, 2, {0, 1, 1, 0})});
    auto cycles = enumerate_simple_cycles(two).cycles;
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].r1 == 2);
    CHECK(cycles[0].r2 == 0);
    CHECK(cycles[0].parity == Parity::e);
}

TEST_CASE("enumeration cap yields truncation, never a false free") {
    // complete positive 3x3 single-layer graph: 3 loops + 3 two-cycles + 2 three-cycles
    SignPattern dense = sp(3, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
    BCDigraph g = build_graph({dense});
    CycleEnumeration full = enumerate_simple_cycles(g);
    CHECK(!full.truncated);
    CHECK(full.cycles.size() == 8);

    CycleEnumeration capped = enumerate_simple_cycles(g, 4);
    CHECK(capped.truncated);
    CHECK(capped.cycles.size() == 4);

    EcycleSearch search = is_ecycle_free(g, 0);
    CHECK(search.status == EcycleSearch::Status::undecided);
}

TEST_CASE("is_ecycle_free") {
    CHECK(is_ecycle_free(build_graph(chain3_patterns())).status == EcycleSearch::Status::free);
    CHECK(is_ecycle_free(build_graph({SignPattern(2, 2)})).status == EcycleSearch::Status::free);

    EcycleSearch hit = is_ecycle_free(build_graph({sp(2, 2, {0, 1, 1, 0})}));
    CHECK(hit.status == EcycleSearch::Status::has_ecycle);
    REQUIRE(hit.ecycle.has_value());
    CHECK(hit.ecycle->parity == Parity::e);
    CHECK(hit.ecycle->r1 == 2);
}

TEST_CASE("negate_signs") {
    BCDigraph g = build_graph(chain3_patterns());
    CHECK(negate_signs(negate_signs(g)).edges() == g.edges());

    BCDigraph loop = build_graph({sp(1, 1, {1})});
    CHECK(negate_signs(loop).edges().front().sign == -1);
}

TEST_CASE("k=1 correspondence: e-cycles of G match positive cycles of -G") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> n_dist(1, 4);
        const int n = n_dist(rng);
        SignPattern p = random_pattern(rng, n, n);
        BCDigraph g = build_graph({p});
        auto cycles = enumerate_simple_cycles(g).cycles;
        auto negated = enumerate_simple_cycles(negate_signs(g)).cycles;

        auto ecycles = cycle_vertex_sets(cycles, Parity::e);
        std::set<std::vector<std::pair<int, int>>> positive;
        for (const auto& c : negated) {
            if (c.r2 % 2 == 0) {   // positive cycle: even number of negative edges
                std::vector<std::pair<int, int>> vs;
                for (const auto& v : c.vertices()) {
                    vs.emplace_back(v.layer, v.index);
                }
                positive.insert(vs);
            }
        }
        CHECK(ecycles == positive);
    }
}

TEST_CASE("parity dichotomy: flipping one edge sign flips the cycle parity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> k_dist(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        auto patterns = random_pattern_list(rng, k_dist(rng), 3);
        BCDigraph g = build_graph(patterns);
        for (const auto& c : enumerate_simple_cycles(g).cycles) {
            auto flipped = c.edges;
            flipped.front().sign = -flipped.front().sign;
            Cycle f = classify_cycle(flipped, g.k());
            CHECK(f.parity != c.parity);
        }
    }
}

TEST_CASE("rotation invariance of cycle structure") {
    std::mt19937_64 rng(111);
    std::uniform_int_distribution<int> k_dist(2, 4);
    for (int trial = 0; trial < 40; ++trial) {
        auto patterns = random_pattern_list(rng, k_dist(rng), 3);
        auto base = enumerate_simple_cycles(build_graph(patterns));
        REQUIRE(!base.truncated);
        for (int r = 1; r < static_cast<int>(patterns.size()); ++r) {
            auto rotated = enumerate_simple_cycles(build_graph(cyclic_shift(patterns, r)));
            CHECK(cycle_signatures(base.cycles) == cycle_signatures(rotated.cycles));
        }
    }
}

TEST_CASE("dot_export") {
    BCDigraph g = build_graph(chain3_patterns());
    std::string dot = dot_export(g);

    auto count = [&](const std::string& needle) {
        std::size_t hits = 0;
        for (std::size_t pos = dot.find(needle); pos != std::string::npos;
             pos = dot.find(needle, pos + needle.size())) {
            ++hits;
        }
        return hits;
    };
    CHECK(count("->") == 12);
    CHECK(count("style=dashed") == 4);
    CHECK(count("style=bold") == 8);
    CHECK(count("subgraph cluster_layer") == 3);

    // structural sanity: balanced braces, digraph header, terminated lines
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

    // edgeless graph still yields the isolated nodes
    std::string empty = dot_export(build_graph({SignPattern(2, 2)}));
    CHECK(empty.find("V0_1;") != std::string::npos);
    CHECK(empty.find("->") == std::string::npos);

    // highlighted cycles pick up a color attribute
    auto cycles = enumerate_simple_cycles(g).cycles;
    std::string highlighted = dot_export(g, &cycles);
    CHECK(highlighted.find("color=red") != std::string::npos);
}
