#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class Model { uniform, min_colour_degree, proper, bipartite, sharpness, mono_budget };

std::string to_string(Model m);
std::optional<Model> parse_model(std::string_view name);

/// Instance recipe. Identical specs produce identical graphs.
///
///   uniform            every pair kept with probability p, colour uniform in [0, colours)
///   min_colour_degree  uniform, then repaired until min colour degree >= k
///   proper             G(n, p) with a proper edge colouring using at most max degree + 1 colours
///   bipartite          parts {0..ceil(n/2)-1} and the rest, crossing pairs kept with probability p;
///                      repaired to min colour degree >= k when k > 0
///   sharpness          sharpness_instance(t, n)
///   mono_budget        uniform, then trimmed so that mono_max_degree <= t
struct GenSpec {
    Model model = Model::uniform;
    int n = 0;
    int k = 0;
    int t = 0;
    Rational epsilon{1, 2};
    double p = 0.5;
    int colours = 1;
    std::uint64_t seed = 0;

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Throws PreconditionError for unsatisfiable or inconsistent specs.
void validate(const GenSpec& spec);
EdgeColouredGraph generate(const GenSpec& spec);

/// Proper edge colouring with at most max degree + 1 colours (Misra-Gries).
/// Returns one colour per input pair, in input order; pairs must be a
/// simple graph on n vertices.
std::vector<Colour> proper_edge_colouring(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

}  // namespace rainbow
