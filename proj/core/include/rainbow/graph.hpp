#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

namespace rainbow {

using Vertex = int;
using Colour = std::int64_t;

/// An undirected coloured edge. Endpoints are stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Colour colour = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b, Colour c) : u(a < b ? a : b), v(a < b ? b : a), colour(c) {}

    bool touches(Vertex x) const { return u == x || v == x; }
    bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

using Matching = std::vector<Edge>;
using ColourSet = std::set<Colour>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 with a colour on every edge.
///
/// Immutable once built. Construction rejects loops, duplicate endpoint
/// pairs, out-of-range endpoints and negative colours with GraphError.
/// Edge indices follow insertion order; incidence lists are ascending in
/// edge index.
class EdgeColouredGraph {
public:
    EdgeColouredGraph() = default;
    explicit EdgeColouredGraph(int n);
    EdgeColouredGraph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
    std::span<const int> incident(Vertex v) const;
    int degree(Vertex v) const;

    bool contains(Vertex v) const { return v >= 0 && v < n_; }
    std::optional<Colour> colour(Vertex a, Vertex b) const;
    std::optional<int> edge_index(Vertex a, Vertex b) const;
    /// True iff the endpoint pair is an edge carrying exactly this colour.
    bool has_edge(const Edge& e) const;

    /// Subgraph on the same vertex ids keeping only edges with both
    /// endpoints in `keep`. Vertices outside `keep` become isolated.
    EdgeColouredGraph induced(std::span<const Vertex> keep) const;

private:
    static std::uint64_t key(Vertex a, Vertex b);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::unordered_map<std::uint64_t, int> index_;
};

int colour_degree(const EdgeColouredGraph& g, Vertex v);
/// Minimum colour degree over all vertices. Throws PreconditionError when n = 0.
int min_colour_degree(const EdgeColouredGraph& g);
/// Minimum colour degree over the listed vertices only.
int min_colour_degree(const EdgeColouredGraph& g, std::span<const Vertex> vertices);
/// Largest number of same-coloured edges at a single vertex; 0 when edgeless.
int mono_max_degree(const EdgeColouredGraph& g);
int max_degree(const EdgeColouredGraph& g);

/// Colours present in the graph.
ColourSet colours_of(const EdgeColouredGraph& g);
ColourSet colours_of(std::span<const Edge> edges);
VertexSet vertices_of(std::span<const Edge> edges);

/// Pairwise vertex-disjoint edges, each present in `g` with its colour.
bool is_matching(const EdgeColouredGraph& g, std::span<const Edge> m);
/// Matching with pairwise distinct colours. Throws GraphError if an edge
/// of `m` is not an edge of `g` with that colour.
bool is_rainbow_matching(const EdgeColouredGraph& g, std::span<const Edge> m);

EdgeColouredGraph delete_colours(const EdgeColouredGraph& g, const ColourSet& colours);

struct Completion {
    EdgeColouredGraph graph;
    ColourSet fresh;
};
/// Complete graph on the same vertices; every missing pair gets its own
/// colour, strictly above every original colour.
Completion complete_with_fresh_colours(const EdgeColouredGraph& g);

struct Bipartition {
    VertexSet a;
    VertexSet b;
};
/// BFS 2-colouring from the lowest vertex of each component; that vertex
/// goes to side `a`. Empty optional when an odd cycle exists.
std::optional<Bipartition> bipartition(const EdgeColouredGraph& g);

}  // namespace rainbow
