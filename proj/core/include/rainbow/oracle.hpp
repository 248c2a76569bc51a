#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct RainbowMatchingResult {
    int size = 0;
    Matching matching;
};

/// Maximum rainbow matching by exhaustive branch-and-bound. Exponential;
/// meant for small instances (a couple of dozen edges, or up to ~14 vertices).
RainbowMatchingResult max_rainbow_matching_exact(const EdgeColouredGraph& g);

/// Bipartite compatibility between `left` items and `right` slots.
/// `assigned[i]` is the slot of item i or -1.
struct BipartiteAssignment {
    int right = 0;
    std::vector<std::vector<int>> adjacency;  // item -> compatible slots
    std::vector<int> assigned;

    int left() const { return static_cast<int>(adjacency.size()); }
    int matched() const;
    bool saturated() const { return matched() == left(); }
};

/// Maximum matching (Hopcroft-Karp). Slots are tried in adjacency order, so
/// results are deterministic for a given input.
void max_bipartite_matching(BipartiteAssignment& b);

/// After max_bipartite_matching left some item unassigned: the items
/// reachable by alternating paths from the lowest unassigned item. Their
/// neighbourhood is smaller than the set. Throws PreconditionError when the
/// assignment is saturated.
std::vector<int> hall_violator(const BipartiteAssignment& b);

/// Distinct slots compatible with at least one of `items`.
std::vector<int> neighbourhood(const BipartiteAssignment& b, const std::vector<int>& items);

}  // namespace rainbow
