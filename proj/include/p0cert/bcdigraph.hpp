#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "p0cert/matrix.hpp"

namespace p0cert {

// Vertex V_j^i: the i-th vertex (1-based) of layer j.
struct LayeredVertex {
    int layer = 0;
    int index = 1;

    auto operator<=>(const LayeredVertex&) const = default;
};

// Directed edge between consecutive layers, signed by the matrix entry it
// corresponds to.
struct SignedEdge {
    LayeredVertex from;
    LayeredVertex to;
    int sign = +1;

    auto operator<=>(const SignedEdge&) const = default;
};

enum class Parity { e, o };

// Simple directed cycle. Its length is k*r1; r2 counts negative edges.
// Parity is e iff (-1)^(r1+r2) = +1.
struct Cycle {
    std::vector<SignedEdge> edges;
    int r1 = 0;
    int r2 = 0;
    Parity parity = Parity::o;

    int length() const { return static_cast<int>(edges.size()); }
    std::vector<LayeredVertex> vertices() const;

    bool operator==(const Cycle&) const = default;
};

// Signed (k,{1})-block-circulant digraph: k layers, edges only from layer
// j to layer (j+1) mod k, one edge per nonzero matrix entry. Immutable
// after construction.
class BCDigraph {
public:
    BCDigraph(int k, std::vector<int> layer_sizes, std::vector<SignedEdge> edges);

    int k() const { return k_; }
    const std::vector<int>& layer_sizes() const { return layer_sizes_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    int vertex_count() const;

    // Global vertex ordering: layer-major, index-minor.
    int vertex_id(const LayeredVertex& v) const;
    LayeredVertex vertex_of(int id) const;

    // Outgoing edges of a vertex, sorted by head vertex id.
    const std::vector<SignedEdge>& out_edges(const LayeredVertex& v) const;

private:
    int k_;
    std::vector<int> layer_sizes_;
    std::vector<SignedEdge> edges_;
    std::vector<int> layer_offsets_;
    std::vector<std::vector<SignedEdge>> adjacency_;
};

BCDigraph build_graph(const std::vector<SignPattern>& patterns);

// Square (sum n_j) x (sum n_j) sign matrix whose (j, j+1 mod k) block is
// the j-th factor pattern and whose other blocks are zero.
SignPattern adjacency_blocks(const BCDigraph& g);

// Validates that `edges` form a simple directed cycle respecting the layer
// structure and fills r1, r2 and the parity. A second classification route
// (edge-sign product with an auxiliary -1 per layer-0 crossing) is run as a
// self-check; disagreement throws consistency_error.
Cycle classify_cycle(const std::vector<SignedEdge>& edges, int k);

constexpr std::uint64_t kDefaultCycleCap = 1'000'000;

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    bool truncated = false;
};

// All simple directed cycles, each rotated to start at its smallest vertex
// and the list sorted canonically (by length, then vertex sequence). If
// `cap` is exceeded the list is partial and `truncated` is set.
CycleEnumeration enumerate_simple_cycles(const BCDigraph& g,
                                         std::uint64_t cap = kDefaultCycleCap);

struct EcycleSearch {
    enum class Status { free, has_ecycle, undecided };
    Status status = Status::free;
    std::optional<Cycle> ecycle;   // set iff status == has_ecycle
    std::uint64_t cycles_seen = 0;
};

// Short-circuits on the first e-cycle encountered. Reports `free` only
// after exhaustive enumeration; a cap hit without an e-cycle is
// `undecided`, never an unsound `free`.
EcycleSearch is_ecycle_free(const BCDigraph& g, std::uint64_t cap = kDefaultCycleCap);

// Same graph with every edge sign flipped.
BCDigraph negate_signs(const BCDigraph& g);

// Graphviz DOT text: layers as ranked clusters, positive edges bold,
// negative edges dashed; edges on any of `highlight` cycles colored.
std::string dot_export(const BCDigraph& g, const std::vector<Cycle>* highlight = nullptr);

std::string vertex_name(const LayeredVertex& v);

}  // namespace p0cert
