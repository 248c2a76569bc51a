#pragma once

// Instances built around a fixed starting partition so that no switching
// edge exists and the remainder is already too small to extend: the driver
// has to absorb (and, once a part has weight >= 2, recurse).

#include <algorithm>
#include <vector>

#include <rainbow/adapter.hpp>
#include <rainbow/extend.hpp>
#include <rainbow/random.hpp>

namespace hard {

using namespace rainbow;

struct Instance {
    EdgeColouredGraph graph;
    PartitionState start;
    int k = 0;
};

// Parts of the given weights (a weight-l part on 3l+1 consecutive vertices:
// pairs x_j y_j and edges z_j w sharing colour c_j), a remainder matching of
// l0 edges in fresh colours, and `free_count` unmatched remainder vertices
// whose colours outside C only reach V(M_U).
inline Instance build(const std::vector<int>& weights, int l0, int free_count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    int part_weight = 0;
    int part_vertices = 0;
    for (int l : weights) {
        part_weight += l;
        part_vertices += 3 * l + 1;
    }
    const int k = part_weight + l0 + 1;
    const int free0 = part_vertices + 2 * l0;
    const int n = free0 + free_count;
    const Colour first_mu = part_weight + 1;
    const Colour first_extra = first_mu + l0;
    const int extra = k + 3;

    std::vector<std::vector<Colour>> c(static_cast<std::size_t>(n), std::vector<Colour>(static_cast<std::size_t>(n), 0));
    auto set = [&](int u, int v, Colour col) { c[u][v] = c[v][u] = col; };
    auto part_colour = [&] { return static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(part_weight))); };
    auto any_colour = [&] {
        return static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(part_weight + l0 + extra)));
    };

    Instance out;
    out.k = k;
    std::vector<std::pair<std::vector<std::pair<Vertex, Vertex>>, std::vector<Vertex>>> layout;
    std::vector<Vertex> ws;
    Vertex base = 0;
    Colour colour = 1;
    for (int l : weights) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::vector<Vertex> zs;
        const Vertex w = base + 3 * l;
        for (int j = 0; j < l; ++j, ++colour) {
            pairs.emplace_back(base + 2 * j, base + 2 * j + 1);
            zs.push_back(base + 2 * l + j);
            set(base + 2 * j, base + 2 * j + 1, colour);
            set(base + 2 * l + j, w, colour);
        }
        layout.emplace_back(std::move(pairs), std::move(zs));
        ws.push_back(w);
        base += 3 * l + 1;
    }
    for (int j = 0; j < l0; ++j) set(part_vertices + 2 * j, part_vertices + 2 * j + 1, first_mu + j);

    for (int u = 0; u < free0; ++u) {
        for (int v = u + 1; v < free0; ++v) {
            if (c[u][v] == 0) set(u, v, any_colour());
        }
    }
    for (int z = free0; z < n; ++z) {
        // Part colours towards the parts (each colour at least once) and
        // among the free vertices; other colours only towards V(M_U).
        const auto offset = rng.below(static_cast<std::uint64_t>(part_weight));
        for (int v = 0; v < part_vertices; ++v) {
            set(z, v, static_cast<Colour>(1 + (static_cast<std::uint64_t>(v) + offset) % static_cast<std::uint64_t>(part_weight)));
        }
        for (int v = z + 1; v < n; ++v) set(z, v, part_colour());
        std::vector<Colour> pool;
        for (Colour x = first_mu; x < first_extra + extra; ++x) pool.push_back(x);
        for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
        for (int j = 0; j < 2 * l0; ++j) set(z, part_vertices + j, pool[static_cast<std::size_t>(j) % pool.size()]);
    }

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (c[u][v] != 0) edges.emplace_back(u, v, c[u][v]);
        }
    }
    out.graph = EdgeColouredGraph(n, std::move(edges));
    for (std::size_t i = 0; i < layout.size(); ++i) {
        out.start.parts.push_back({adapter_from_parallel_pairs(out.graph, layout[i].first, layout[i].second, ws[i])});
    }
    std::stable_sort(out.start.parts.begin(), out.start.parts.end(),
                     [](const PartitionPart& a, const PartitionPart& b) { return a.weight() > b.weight(); });
    for (Vertex v = part_vertices; v < n; ++v) out.start.remainder.push_back(v);
    for (int j = 0; j < l0; ++j) {
        out.start.remainder_matching.push_back(Edge(part_vertices + 2 * j, part_vertices + 2 * j + 1, first_mu + j));
    }
    return out;
}

// Smallest free-vertex count meeting |G| >= 7k/2 + 2 with |U| <= 3(l0 + 1).
inline int free_needed(const std::vector<int>& weights, int l0) {
    int weight = 0;
    int vertices = 0;
    for (int l : weights) {
        weight += l;
        vertices += 3 * l + 1;
    }
    const int k = weight + l0 + 1;
    const int n_min = (7 * k + 5) / 2;
    return std::max(1, n_min - vertices - 2 * l0);
}

// Whether the instance starts with the remainder too small to extend.
inline bool stuck(int l0, int free_count) { return 2 * l0 + free_count <= 3 * (l0 + 1); }

}  // namespace hard
