#include "rainbow/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void check_vertex(const EdgeColouredGraph& g, Vertex v) {
    if (!g.contains(v)) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(g.order()) + ")");
    }
}

}  // namespace

EdgeColouredGraph::EdgeColouredGraph(int n) : EdgeColouredGraph(n, {}) {}

EdgeColouredGraph::EdgeColouredGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw GraphError("negative vertex count");
    incident_.resize(static_cast<std::size_t>(n));
    index_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        e = Edge(e.u, e.v, e.colour);
        if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n) {
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (e.colour < 0) throw GraphError("negative colour " + std::to_string(e.colour));
        auto [it, inserted] = index_.emplace(key(e.u, e.v), static_cast<int>(i));
        if (!inserted) {
            throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
        incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
    }
}

std::uint64_t EdgeColouredGraph::key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

std::span<const int> EdgeColouredGraph::incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
}

int EdgeColouredGraph::degree(Vertex v) const {
    return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
}

std::optional<int> EdgeColouredGraph::edge_index(Vertex a, Vertex b) const {
    if (a == b || !contains(a) || !contains(b)) return std::nullopt;
    auto it = index_.find(key(a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Colour> EdgeColouredGraph::colour(Vertex a, Vertex b) const {
    auto idx = edge_index(a, b);
    if (!idx) return std::nullopt;
    return edge(*idx).colour;
}

bool EdgeColouredGraph::has_edge(const Edge& e) const {
    auto c = colour(e.u, e.v);
    return c && *c == e.colour;
}

EdgeColouredGraph EdgeColouredGraph::induced(std::span<const Vertex> keep) const {
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    for (Vertex v : keep) {
        check_vertex(*this, v);
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) kept.push_back(e);
    }
    return EdgeColouredGraph(n_, std::move(kept));
}

int colour_degree(const EdgeColouredGraph& g, Vertex v) {
    check_vertex(g, v);
    std::vector<Colour> seen;
    seen.reserve(static_cast<std::size_t>(g.degree(v)));
    for (int idx : g.incident(v)) seen.push_back(g.edge(idx).colour);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

int min_colour_degree(const EdgeColouredGraph& g) {
    if (g.order() == 0) throw PreconditionError("min_colour_degree of a graph with no vertices");
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, colour_degree(g, v));
    return best;
}

int min_colour_degree(const EdgeColouredGraph& g, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw PreconditionError("min_colour_degree over an empty vertex set");
    int best = std::numeric_limits<int>::max();
    for (Vertex v : vertices) best = std::min(best, colour_degree(g, v));
    return best;
}

int mono_max_degree(const EdgeColouredGraph& g) {
    int best = 0;
    std::unordered_map<Colour, int> count;
    for (Vertex v = 0; v < g.order(); ++v) {
        count.clear();
        for (int idx : g.incident(v)) best = std::max(best, ++count[g.edge(idx).colour]);
    }
    return best;
}

int max_degree(const EdgeColouredGraph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

ColourSet colours_of(const EdgeColouredGraph& g) { return colours_of(g.edges()); }

ColourSet colours_of(std::span<const Edge> edges) {
    ColourSet out;
    for (const Edge& e : edges) out.insert(e.colour);
    return out;
}

VertexSet vertices_of(std::span<const Edge> edges) {
    VertexSet out;
    out.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_matching(const EdgeColouredGraph& g, std::span<const Edge> m) {
    std::unordered_set<Vertex> used;
    for (const Edge& e : m) {
        if (!g.has_edge(e)) return false;
        if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
    }
    return true;
}

bool is_rainbow_matching(const EdgeColouredGraph& g, std::span<const Edge> m) {
    std::unordered_set<Vertex> used;
    std::unordered_set<Colour> seen;
    bool ok = true;
    for (const Edge& e : m) {
        if (!g.has_edge(e)) {
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " colour " +
                             std::to_string(e.colour) + " is not in the graph");
        }
        if (!used.insert(e.u).second || !used.insert(e.v).second) ok = false;
        if (!seen.insert(e.colour).second) ok = false;
    }
    return ok;
}

EdgeColouredGraph delete_colours(const EdgeColouredGraph& g, const ColourSet& colours) {
    std::vector<Edge> kept;
    kept.reserve(g.size());
    for (const Edge& e : g.edges()) {
        if (!colours.contains(e.colour)) kept.push_back(e);
    }
    return EdgeColouredGraph(g.order(), std::move(kept));
}

Completion complete_with_fresh_colours(const EdgeColouredGraph& g) {
    Colour next = 0;
    for (const Edge& e : g.edges()) next = std::max(next, e.colour + 1);
    std::vector<Edge> all(g.edges().begin(), g.edges().end());
    ColourSet fresh;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.edge_index(u, v)) continue;
            all.emplace_back(u, v, next);
            fresh.insert(next);
            ++next;
        }
    }
    return {EdgeColouredGraph(g.order(), std::move(all)), std::move(fresh)};
}

std::optional<Bipartition> bipartition(const EdgeColouredGraph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            Vertex x = frontier.front();
            frontier.pop();
            for (int idx : g.incident(x)) {
                Vertex y = g.edge(idx).other(x);
                auto& sy = side[static_cast<std::size_t>(y)];
                if (sy == -1) {
                    sy = 1 - side[static_cast<std::size_t>(x)];
                    frontier.push(y);
                } else if (sy == side[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < g.order(); ++v) (side[static_cast<std::size_t>(v)] == 0 ? out.a : out.b).push_back(v);
    return out;
}

}  // namespace rainbow
