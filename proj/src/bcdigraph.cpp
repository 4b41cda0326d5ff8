#include "p0cert/bcdigraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace p0cert {

std::vector<LayeredVertex> Cycle::vertices() const {
    std::vector<LayeredVertex> vs;
    vs.reserve(edges.size());
    for (const auto& e : edges) {
        vs.push_back(e.from);
    }
    return vs;
}

std::string vertex_name(const LayeredVertex& v) {
    std::ostringstream os;
    os << "V" << v.layer << "_" << v.index;
    return os.str();
}

BCDigraph::BCDigraph(int k, std::vector<int> layer_sizes, std::vector<SignedEdge> edges)
    : k_(k), layer_sizes_(std::move(layer_sizes)), edges_(std::move(edges)) {
    if (k_ < 1 || static_cast<int>(layer_sizes_.size()) != k_) {
        throw dimension_error("layer size list must have length k >= 1");
    }
    layer_offsets_.resize(static_cast<std::size_t>(k_));
    int offset = 0;
    for (int j = 0; j < k_; ++j) {
        if (layer_sizes_[static_cast<std::size_t>(j)] < 1) {
            throw dimension_error("layer sizes must be positive");
        }
        layer_offsets_[static_cast<std::size_t>(j)] = offset;
        offset += layer_sizes_[static_cast<std::size_t>(j)];
    }
    std::set<std::pair<LayeredVertex, LayeredVertex>> seen;
    for (const auto& e : edges_) {
        const bool layers_ok = e.from.layer >= 0 && e.from.layer < k_ &&
                               e.to.layer == (e.from.layer + 1) % k_;
        const bool indices_ok = e.from.index >= 1 &&
                                e.from.index <= layer_sizes_[static_cast<std::size_t>(e.from.layer)] &&
                                e.to.index >= 1 &&
                                e.to.index <= layer_sizes_[static_cast<std::size_t>(e.to.layer)];
        if (!layers_ok || !indices_ok) {
            throw dimension_error("edge violates the block-circulant layer structure");
        }
        if (e.sign != 1 && e.sign != -1) {
            throw dimension_error("edge signs must be +1 or -1");
        }
        if (!seen.insert({e.from, e.to}).second) {
            throw dimension_error("parallel duplicate edge");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    adjacency_.resize(static_cast<std::size_t>(vertex_count()));
    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(vertex_id(e.from))].push_back(e);
    }
    for (auto& out : adjacency_) {
        std::sort(out.begin(), out.end(), [this](const SignedEdge& a, const SignedEdge& b) {
            return vertex_id(a.to) < vertex_id(b.to);
        });
    }
}

int BCDigraph::vertex_count() const {
    int total = 0;
    for (int n : layer_sizes_) {
        total += n;
    }
    return total;
}

int BCDigraph::vertex_id(const LayeredVertex& v) const {
    return layer_offsets_.at(static_cast<std::size_t>(v.layer)) + v.index - 1;
}

LayeredVertex BCDigraph::vertex_of(int id) const {
    for (int j = k_ - 1; j >= 0; --j) {
        if (id >= layer_offsets_[static_cast<std::size_t>(j)]) {
            return LayeredVertex{j, id - layer_offsets_[static_cast<std::size_t>(j)] + 1};
        }
    }
    throw dimension_error("vertex id out of range");
}

const std::vector<SignedEdge>& BCDigraph::out_edges(const LayeredVertex& v) const {
    return adjacency_.at(static_cast<std::size_t>(vertex_id(v)));
}

BCDigraph build_graph(const std::vector<SignPattern>& patterns) {
    if (patterns.empty()) {
        throw dimension_error("pattern list must be nonempty");
    }
    const int k = static_cast<int>(patterns.size());
    std::vector<int> layer_sizes;
    layer_sizes.reserve(patterns.size());
    for (int j = 0; j < k; ++j) {
        const auto& next = patterns[static_cast<std::size_t>((j + 1) % k)];
        if (patterns[static_cast<std::size_t>(j)].cols() != next.rows()) {
            throw dimension_error("pattern " + std::to_string(j) + " has " +
                                  std::to_string(patterns[static_cast<std::size_t>(j)].cols()) +
                                  " columns but pattern " + std::to_string((j + 1) % k) + " has " +
                                  std::to_string(next.rows()) + " rows");
        }
        layer_sizes.push_back(patterns[static_cast<std::size_t>(j)].rows());
    }
    std::vector<SignedEdge> edges;
    for (int j = 0; j < k; ++j) {
        const auto& p = patterns[static_cast<std::size_t>(j)];
        for (int r = 0; r < p.rows(); ++r) {
            for (int s = 0; s < p.cols(); ++s) {
                if (p.at(r, s) != 0) {
                    edges.push_back(SignedEdge{LayeredVertex{j, r + 1},
                                               LayeredVertex{(j + 1) % k, s + 1}, p.at(r, s)});
                }
            }
        }
    }
    return BCDigraph(k, std::move(layer_sizes), std::move(edges));
}

SignPattern adjacency_blocks(const BCDigraph& g) {
    const int n = g.vertex_count();
    SignPattern blocks(n, n);
    for (const auto& e : g.edges()) {
        blocks.set(g.vertex_id(e.from), g.vertex_id(e.to), e.sign);
    }
    return blocks;
}

Cycle classify_cycle(const std::vector<SignedEdge>& edges, int k) {
    if (edges.empty()) {
        throw dimension_error("a cycle must contain at least one edge");
    }
    if (static_cast<int>(edges.size()) % k != 0) {
        throw dimension_error("cycle length must be a multiple of k");
    }
    std::set<LayeredVertex> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const auto& next = edges[(i + 1) % edges.size()];
        if (e.to != next.from) {
            throw dimension_error("edge list is not a closed directed walk");
        }
        if (e.to.layer != (e.from.layer + 1) % k) {
            throw dimension_error("cycle edge violates the layer structure");
        }
        if (!seen.insert(e.from).second) {
            throw dimension_error("cycle revisits a vertex");
        }
    }

    Cycle c;
    c.edges = edges;
    c.r1 = static_cast<int>(edges.size()) / k;
    c.r2 = 0;
    int modified_sign = 1;
    for (const auto& e : edges) {
        if (e.sign < 0) {
            ++c.r2;
        }
        // auxiliary -1 per layer-0 crossing: modified product is
        // (-1)^(r1+r2), so it reads off the parity directly
        modified_sign *= (e.from.layer == 0) ? -e.sign : e.sign;
    }
    c.parity = ((c.r1 + c.r2) % 2 == 0) ? Parity::e : Parity::o;
    const int expected = (c.parity == Parity::e) ? 1 : -1;
    if (modified_sign != expected) {
        throw consistency_error("cycle parity routes disagree");
    }
    return c;
}

namespace {

// Backtracking enumeration of simple cycles: from each start vertex s (in
// ascending id order) explore only vertices with id > s, so every cycle is
// reported exactly once, rotated to start at its smallest vertex.
struct CycleSearch {
    const BCDigraph& g;
    std::uint64_t cap;
    const std::function<bool(Cycle)>& emit;   // returns false to stop
    std::vector<bool> on_path;
    std::vector<SignedEdge> path;
    std::uint64_t found = 0;
    bool stopped = false;
    bool truncated = false;

    CycleSearch(const BCDigraph& graph, std::uint64_t cap_,
                const std::function<bool(Cycle)>& emit_)
        : g(graph), cap(cap_), emit(emit_),
          on_path(static_cast<std::size_t>(graph.vertex_count()), false) {}

    void dfs(int start_id, int current_id) {
        on_path[static_cast<std::size_t>(current_id)] = true;
        for (const auto& e : g.out_edges(g.vertex_of(current_id))) {
            if (stopped) {
                break;
            }
            const int head = g.vertex_id(e.to);
            if (head == start_id) {
                path.push_back(e);
                if (found == cap) {
                    truncated = true;
                    stopped = true;
                } else {
                    ++found;
                    if (!emit(classify_cycle(path, g.k()))) {
                        stopped = true;
                    }
                }
                path.pop_back();
            } else if (head > start_id && !on_path[static_cast<std::size_t>(head)]) {
                path.push_back(e);
                dfs(start_id, head);
                path.pop_back();
            }
        }
        on_path[static_cast<std::size_t>(current_id)] = false;
    }

    void run() {
        for (int s = 0; s < g.vertex_count() && !stopped; ++s) {
            dfs(s, s);
        }
    }
};

std::vector<int> cycle_vertex_ids(const BCDigraph& g, const Cycle& c) {
    std::vector<int> ids;
    ids.reserve(c.edges.size());
    for (const auto& e : c.edges) {
        ids.push_back(g.vertex_id(e.from));
    }
    return ids;
}

}  // namespace

CycleEnumeration enumerate_simple_cycles(const BCDigraph& g, std::uint64_t cap) {
    CycleEnumeration result;
    std::function<bool(Cycle)> collect = [&](Cycle c) {
        result.cycles.push_back(std::move(c));
        return true;
    };
    CycleSearch search(g, cap, collect);
    search.run();
    result.truncated = search.truncated;
    std::sort(result.cycles.begin(), result.cycles.end(), [&](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) {
            return a.length() < b.length();
        }
        return cycle_vertex_ids(g, a) < cycle_vertex_ids(g, b);
    });
    return result;
}

EcycleSearch is_ecycle_free(const BCDigraph& g, std::uint64_t cap) {
    EcycleSearch result;
    std::function<bool(Cycle)> check = [&](Cycle c) {
        ++result.cycles_seen;
        if (c.parity == Parity::e) {
            result.status = EcycleSearch::Status::has_ecycle;
            result.ecycle = std::move(c);
            return false;
        }
        return true;
    };
    CycleSearch search(g, cap, check);
    search.run();
    if (result.status != EcycleSearch::Status::has_ecycle && search.truncated) {
        result.status = EcycleSearch::Status::undecided;
    }
    return result;
}

BCDigraph negate_signs(const BCDigraph& g) {
    std::vector<SignedEdge> flipped = g.edges();
    for (auto& e : flipped) {
        e.sign = -e.sign;
    }
    return BCDigraph(g.k(), g.layer_sizes(), std::move(flipped));
}

std::string dot_export(const BCDigraph& g, const std::vector<Cycle>* highlight) {
    std::set<std::pair<LayeredVertex, LayeredVertex>> marked;
    if (highlight != nullptr) {
        for (const auto& c : *highlight) {
            for (const auto& e : c.edges) {
                marked.insert({e.from, e.to});
            }
        }
    }
    std::ostringstream os;
    os << "digraph bc {\n";
    os << "  rankdir=LR;\n";
    for (int j = 0; j < g.k(); ++j) {
        os << "  subgraph cluster_layer" << j << " {\n";
        os << "    label=\"V" << j << "\";\n";
        for (int i = 1; i <= g.layer_sizes()[static_cast<std::size_t>(j)]; ++i) {
            os << "    " << vertex_name(LayeredVertex{j, i}) << ";\n";
        }
        os << "  }\n";
    }
    for (const auto& e : g.edges()) {
        os << "  " << vertex_name(e.from) << " -> " << vertex_name(e.to) << " [style="
           << (e.sign > 0 ? "bold" : "dashed");
        if (marked.count({e.from, e.to}) > 0) {
            os << ", color=red";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace p0cert
