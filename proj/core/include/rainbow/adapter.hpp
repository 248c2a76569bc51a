#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A (C, level)-adapter: a vertex set W together with `level` rainbow
/// matchings inside G[W], each using exactly the colours C, such that
/// every vertex of W is avoided by at least one of them.
///
/// A C-adapter is the case level == |C| + 1. Witnesses are stored
/// explicitly so callers can pick one that avoids a given vertex.
struct Adapter {
    VertexSet vertices;
    ColourSet colours;
    std::vector<Matching> witnesses;

    int level() const { return static_cast<int>(witnesses.size()); }
    bool contains(Vertex v) const;
    /// Smallest witness index whose matching avoids `v`; -1 if none.
    int witness_avoiding(Vertex v) const;
};

/// Checks the three adapter conditions against `g`: every witness is a
/// rainbow matching of `g` using exactly `colours`, every witness vertex
/// lies in `vertices`, and every vertex of `vertices` is missed by some
/// witness. Returns false on any malformed input.
bool verify_adapter(const EdgeColouredGraph& g, std::span<const Vertex> vertices, const ColourSet& colours,
                    int level, std::span<const Matching> witnesses);
bool verify_adapter(const EdgeColouredGraph& g, const Adapter& a);

/// Builds the adapter on {x_i, y_i, z_i, w} from edges x_i y_i and z_i w
/// sharing colour c_i, with c_1..c_l pairwise distinct. Witness i (i < l)
/// is {x_j y_j : j != i} plus w z_i; the last witness is all x_j y_j.
Adapter adapter_from_parallel_pairs(const EdgeColouredGraph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
                                    std::span<const Vertex> zs, Vertex w);

/// Union of adapters on disjoint vertex sets with disjoint colour sets.
/// Shorter witness lists are padded by repeating their last witness.
Adapter adapter_union(std::span<const Adapter> adapters);

/// Grows `a` by three outside vertices x, y, z where xy and zw are edges
/// of one new colour and w is in `a`. The level goes up by one.
Adapter adapter_absorb(const EdgeColouredGraph& g, const Adapter& a, Vertex x, Vertex y, Vertex z, Vertex w);

}  // namespace rainbow
