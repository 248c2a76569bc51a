#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// An ordered list of rainbow matchings partitioning the edges of `host`.
struct Decomposition {
    EdgeColouredGraph host;
    int t = 0;
    std::vector<Matching> parts;

    int nonempty_parts() const;
};

/// floor(t n / 2) in exact integer arithmetic.
std::int64_t decomposition_size(int t, int n);

/// A colour class could not be placed: the auxiliary bipartite graph
/// between its edges and the current matchings violates Hall's condition.
class HallFailure : public std::runtime_error {
public:
    HallFailure(Colour colour, std::vector<Edge> class_edges, std::vector<Edge> violator,
                std::vector<int> violator_parts);

    Colour colour() const { return colour_; }
    const std::vector<Edge>& class_edges() const { return class_edges_; }
    /// Edges S of the class with |N(S)| < |S|.
    const std::vector<Edge>& violator() const { return violator_; }
    /// N(S): indices of the parts compatible with some edge of S.
    const std::vector<int>& violator_parts() const { return violator_parts_; }

private:
    Colour colour_;
    std::vector<Edge> class_edges_;
    std::vector<Edge> violator_;
    std::vector<int> violator_parts_;
};

/// Edge-decomposes `g` into floor(t n / 2) rainbow matchings.
///
/// Missing pairs are first filled with fresh colours; colour classes of the
/// completed graph are then placed in non-increasing size (ties by colour
/// id) through a maximum bipartite matching between class edges (ascending
/// (u, v)) and the current parts (ascending index), an edge being
/// compatible with a part it is vertex-disjoint from. Fresh edges are
/// removed from the result unless `keep_completion` is set, in which case
/// `host` is the completed graph.
///
/// Throws PreconditionError if mono_max_degree(g) > t, HallFailure if some
/// class cannot be placed (impossible for t >= 11).
Decomposition decompose(const EdgeColouredGraph& g, int t, bool keep_completion = false);

/// Independent check: parts are rainbow matchings of `g`, pairwise
/// edge-disjoint, cover E(g), and number floor(t n / 2).
bool verify_decomposition(const EdgeColouredGraph& g, const Decomposition& d);

/// Lower bound on the parts of any rainbow-matching decomposition:
/// max(largest colour class, max degree, ceil(e / floor(n/2))).
std::int64_t cover_lower_bound(const EdgeColouredGraph& g);

/// n vertices whose only colour class (colour 1) is a t-regular circulant:
/// i joined to i+1..i+floor(t/2), plus i+n/2 when t is odd.
EdgeColouredGraph sharpness_instance(int t, int n);

}  // namespace rainbow
