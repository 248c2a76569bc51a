#include "rainbow/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

int Decomposition::nonempty_parts() const {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](const Matching& m) { return !m.empty(); }));
}

std::int64_t decomposition_size(int t, int n) { return static_cast<std::int64_t>(t) * n / 2; }

HallFailure::HallFailure(Colour colour, std::vector<Edge> class_edges, std::vector<Edge> violator,
                         std::vector<int> violator_parts)
    : std::runtime_error("colour class " + std::to_string(colour) + " violates Hall's condition: " +
                         std::to_string(violator.size()) + " edges compatible with only " +
                         std::to_string(violator_parts.size()) + " matchings"),
      colour_(colour), class_edges_(std::move(class_edges)), violator_(std::move(violator)),
      violator_parts_(std::move(violator_parts)) {}

Decomposition decompose(const EdgeColouredGraph& g, int t, bool keep_completion) {
    if (t < 0) throw PreconditionError("t must be non-negative");
    const int mono = mono_max_degree(g);
    if (mono > t) {
        throw PreconditionError("mono_max_degree = " + std::to_string(mono) + " > t = " + std::to_string(t));
    }

    Completion completed = complete_with_fresh_colours(g);
    const EdgeColouredGraph& full = completed.graph;
    const int n = full.order();
    const auto part_count = static_cast<std::size_t>(decomposition_size(t, n));

    std::map<Colour, std::vector<Edge>> classes;
    for (const Edge& e : full.edges()) classes[e.colour].push_back(e);
    std::vector<std::pair<Colour, std::vector<Edge>>> order(classes.begin(), classes.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });

    std::vector<Matching> parts(part_count);
    std::vector<std::vector<char>> occupied(part_count, std::vector<char>(static_cast<std::size_t>(n), 0));

    for (auto& [colour, edges] : order) {
        std::sort(edges.begin(), edges.end());
        BipartiteAssignment h;
        h.right = static_cast<int>(part_count);
        h.adjacency.resize(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& f = edges[i];
            for (std::size_t j = 0; j < part_count; ++j) {
                if (!occupied[j][static_cast<std::size_t>(f.u)] && !occupied[j][static_cast<std::size_t>(f.v)]) {
                    h.adjacency[i].push_back(static_cast<int>(j));
                }
            }
        }
        max_bipartite_matching(h);
        if (!h.saturated()) {
            std::vector<int> items = hall_violator(h);
            std::vector<Edge> violator;
            for (int i : items) violator.push_back(edges[static_cast<std::size_t>(i)]);
            throw HallFailure(colour, edges, std::move(violator), neighbourhood(h, items));
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto j = static_cast<std::size_t>(h.assigned[i]);
            parts[j].push_back(edges[i]);
            occupied[j][static_cast<std::size_t>(edges[i].u)] = 1;
            occupied[j][static_cast<std::size_t>(edges[i].v)] = 1;
        }
    }

    Decomposition d{keep_completion ? full : g, t, std::move(parts)};
    for (Matching& m : d.parts) {
        if (!keep_completion) {
            std::erase_if(m, [&](const Edge& e) { return completed.fresh.contains(e.colour); });
        }
        std::sort(m.begin(), m.end());
    }
    return d;
}

bool verify_decomposition(const EdgeColouredGraph& g, const Decomposition& d) {
    if (static_cast<std::int64_t>(d.parts.size()) != decomposition_size(d.t, g.order())) return false;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Matching& m : d.parts) {
        if (!is_matching(g, m)) return false;
        if (colours_of(m).size() != m.size()) return false;
        for (const Edge& e : m) {
            if (!seen.emplace(e.u, e.v).second) return false;
        }
    }
    return seen.size() == g.size();
}

std::int64_t cover_lower_bound(const EdgeColouredGraph& g) {
    std::map<Colour, std::int64_t> class_size;
    for (const Edge& e : g.edges()) ++class_size[e.colour];
    std::int64_t best = max_degree(g);
    for (const auto& [c, s] : class_size) best = std::max(best, s);
    const std::int64_t per_matching = g.order() / 2;
    const auto e = static_cast<std::int64_t>(g.size());
    if (per_matching > 0) best = std::max(best, (e + per_matching - 1) / per_matching);
    return best;
}

EdgeColouredGraph sharpness_instance(int t, int n) {
    if (t < 0 || n < 1) throw PreconditionError("need t >= 0 and n >= 1");
    if (t >= n) throw PreconditionError("t = " + std::to_string(t) + " must be below n = " + std::to_string(n));
    if ((static_cast<std::int64_t>(t) * n) % 2 != 0) {
        throw PreconditionError("t * n = " + std::to_string(static_cast<std::int64_t>(t) * n) +
                                " is odd; no t-regular graph exists");
    }
    constexpr Colour kColour = 1;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (int s = 1; s <= t / 2; ++s) edges.emplace_back(i, (i + s) % n, kColour);
        if (t % 2 == 1 && i < n / 2) edges.emplace_back(i, i + n / 2, kColour);
    }
    return EdgeColouredGraph(n, std::move(edges));
}

}  // namespace rainbow
