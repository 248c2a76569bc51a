#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/adapter.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

/// Graph families the extension step is available for.
enum class Family { general, bipartite };

std::string to_string(Family f);

/// A rainbow matching of size k-1 plus one edge disjoint from it. The
/// edge colour may repeat a colour of the matching.
struct ExtensionResult {
    Matching matching;
    Edge edge;
};

/// True iff `r.matching` is a rainbow matching of size k-1 in `g` and
/// `r.edge` is an edge of `g` sharing no vertex with it.
bool is_valid_extension(const EdgeColouredGraph& g, const ExtensionResult& r, int k);

// The extension operations act on the subgraph of `g` induced by `active`
// (sorted vertex list); `g` must not have edges leaving `active`. The
// overloads without `active` use every vertex of `g`.
//
// Colour-degree hypotheses are checked lazily: an early exit that does not
// need them (an edge already disjoint from M) succeeds regardless.

/// Bipartite case: needs |G| >= 2k.
ExtensionResult bipartite_extend(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m, int k);
ExtensionResult bipartite_extend(const EdgeColouredGraph& g, const Matching& m, int k);

/// General case: needs |G| >= 3(k-1)+1. Builds the chain z_{k-1}, ..., z_1
/// with relabelling of the matching edges and returns as soon as an edge
/// w x_i from the unmatched side is exposed.
ExtensionResult general_extend(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m, int k);
ExtensionResult general_extend(const EdgeColouredGraph& g, const Matching& m, int k);

ExtensionResult extend_dispatch(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m, int k,
                                Family family);
ExtensionResult extend_dispatch(const EdgeColouredGraph& g, const Matching& m, int k, Family family);

/// One part W_i of the partition: a C_i-adapter on 3|C_i|+1 vertices.
struct PartitionPart {
    Adapter adapter;
    int weight() const { return static_cast<int>(adapter.colours.size()); }
};

/// Working state of the partition-improvement driver: parts W_1..W_p
/// (kept sorted by non-increasing weight) and the remainder U carrying the
/// rainbow matching M_U.
struct PartitionState {
    std::vector<PartitionPart> parts;
    VertexSet remainder;
    Matching remainder_matching;

    /// The weight string (l_1 >= ... >= l_p).
    std::vector<int> params() const;
    int parts_weight() const;
    ColourSet part_colours() const;
};

/// Checks conditions (a)-(d) for a target size k plus that parts and the
/// remainder partition `active`. On failure `why` (if given) is filled.
bool partition_invariants_hold(const EdgeColouredGraph& g, std::span<const Vertex> active, const PartitionState& s,
                               int k, std::string* why = nullptr);

/// Lexicographic order on zero-padded weight strings.
bool params_less(std::span<const int> a, std::span<const int> b);

/// One record per driver iteration.
struct TraceRecord {
    int invocation = 0;  // driver invocation id, unique within one top-level call
    int depth = 0;       // nesting depth of the recursive step
    int k = 0;
    int iteration = 0;
    std::vector<int> params;
    int remainder_size = 0;
    std::string action;  // extend | recurse | absorb | switch | done
    std::string via;     // for done: the step that produced the matching
};

struct DriverOptions {
    std::function<void(const TraceRecord&)> trace;
    /// Re-verify partition invariants after every iteration (throws InternalError).
    bool check_invariants = false;
};

/// Vertex-count threshold (2 + gamma/2) k + 2(4 - gamma)/(gamma - 2)^2 - 3 + gamma.
Rational size_threshold(int k, const Rational& gamma);
/// Iteration cap per driver invocation.
int iteration_budget(int k);

/// Finds a rainbow matching of size k. Requires gamma in (2, 3] and at least
/// the family's extension factor (general: gamma = 3 only; bipartite: any
/// gamma in (2, 3]), |G| >= size_threshold(k, gamma) and min colour degree >= k.
Matching find_rainbow_matching(const EdgeColouredGraph& g, int k, const Rational& gamma, Family family,
                               const DriverOptions& options = {});

/// Same preconditions, but runs the size-k step from a caller-supplied
/// partition, which must satisfy conditions (a)-(d) for k on all of V(G).
Matching improve_partition(const EdgeColouredGraph& g, int k, const Rational& gamma, Family family,
                           PartitionState initial, const DriverOptions& options = {});

/// n >= 7k/2 + 2 and min colour degree >= k.
Matching theorem1(const EdgeColouredGraph& g, int k, const DriverOptions& options = {});
/// Bipartite, n >= (3 + eps) k + 1/eps^2, min colour degree >= k, 0 < eps <= 1/2.
Matching theorem2(const EdgeColouredGraph& g, int k, const Rational& epsilon, const DriverOptions& options = {});

}  // namespace rainbow
