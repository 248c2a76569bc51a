#include "rainbow/extend.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

std::string to_string(Family f) { return f == Family::general ? "general" : "bipartite"; }

bool is_valid_extension(const EdgeColouredGraph& g, const ExtensionResult& r, int k) {
    if (k < 1 || static_cast<int>(r.matching.size()) != k - 1) return false;
    if (!is_matching(g, r.matching) || !is_rainbow_matching(g, r.matching)) return false;
    if (!g.has_edge(r.edge)) return false;
    return std::none_of(r.matching.begin(), r.matching.end(), [&](const Edge& e) { return e.shares_vertex(r.edge); });
}

namespace {

VertexSet all_vertices(const EdgeColouredGraph& g) {
    VertexSet v(static_cast<std::size_t>(g.order()));
    for (Vertex i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

// Shared validation; returns a mask of matched vertices.
std::vector<char> check_extension_input(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m,
                                        int k, int min_order, const char* bound_name) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (static_cast<int>(active.size()) < min_order) {
        throw PreconditionError("|G| = " + std::to_string(active.size()) + " < " + bound_name + " = " +
                                std::to_string(min_order));
    }
    if (static_cast<int>(m.size()) != k - 1) {
        throw PreconditionError("matching has size " + std::to_string(m.size()) + ", expected k-1 = " +
                                std::to_string(k - 1));
    }
    if (!is_matching(g, m) || !is_rainbow_matching(g, m)) {
        throw PreconditionError("input is not a rainbow matching of the graph");
    }
    std::vector<char> in_active(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : active) in_active[static_cast<std::size_t>(v)] = 1;
    std::vector<char> matched(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : m) {
        if (!in_active[static_cast<std::size_t>(e.u)] || !in_active[static_cast<std::size_t>(e.v)]) {
            throw PreconditionError("matching leaves the active vertex set");
        }
        matched[static_cast<std::size_t>(e.u)] = matched[static_cast<std::size_t>(e.v)] = 1;
    }
    return matched;
}

[[noreturn]] void colour_degree_violation(Vertex v, int degree, int k) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside the matching has colour degree " +
                            std::to_string(degree) + " < k = " + std::to_string(k));
}

}  // namespace

ExtensionResult bipartite_extend(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m, int k) {
    auto matched = check_extension_input(g, active, m, k, 2 * k, "2k");
    if (!bipartition(g)) throw PreconditionError("graph is not bipartite");

    // Any unmatched z sees at most k-1 matched vertices on the other side,
    // so colour degree >= k leaves a neighbour outside V(M).
    for (Vertex z : active) {
        if (matched[static_cast<std::size_t>(z)]) continue;
        for (int idx : g.incident(z)) {
            const Edge& e = g.edge(idx);
            if (!matched[static_cast<std::size_t>(e.other(z))]) return {m, e};
        }
    }
    for (Vertex z : active) {
        if (matched[static_cast<std::size_t>(z)]) continue;
        int d = colour_degree(g, z);
        if (d < k) colour_degree_violation(z, d, k);
    }
    throw InternalError("bipartite_extend: no edge disjoint from the matching although every unmatched vertex has "
                        "colour degree >= k");
}

ExtensionResult bipartite_extend(const EdgeColouredGraph& g, const Matching& m, int k) {
    return bipartite_extend(g, all_vertices(g), m, k);
}

namespace {

// The z-chain. Slots 1..k-1 hold the matching edges x_i y_i; slots above the
// current step are frozen, slots at or below it may still be permuted.
class ZChain {
public:
    ZChain(const EdgeColouredGraph& g, const Matching& m, int k)
        : g_(g), k_(k), slots_(static_cast<std::size_t>(k)), slot_of_(static_cast<std::size_t>(g.order()), 0) {
        for (int i = 1; i < k; ++i) {
            const Edge& e = m[static_cast<std::size_t>(i - 1)];
            slots_[static_cast<std::size_t>(i)] = {e.u, e.v, e.colour};
            slot_of_[static_cast<std::size_t>(e.u)] = slot_of_[static_cast<std::size_t>(e.v)] = i;
        }
    }

    std::optional<ExtensionResult> run(const VertexSet& unmatched) {
        std::vector<char> is_z(static_cast<std::size_t>(g_.order()), 0);
        for (int i = k_ - 1; i >= 1; --i) {
            ColourSet low;
            for (int j = 1; j <= i; ++j) low.insert(slot(j).colour);

            auto zit = std::find_if(unmatched.begin(), unmatched.end(),
                                    [&](Vertex w) { return !is_z[static_cast<std::size_t>(w)]; });
            if (zit == unmatched.end()) throw InternalError("general_extend: unmatched side exhausted");
            const Vertex z = *zit;

            std::optional<Vertex> u;
            for (int idx : g_.incident(z)) {
                const Edge& e = g_.edge(idx);
                Vertex x = e.other(z);
                int j = slot_of_[static_cast<std::size_t>(x)];
                if (j >= 1 && j <= i && !low.contains(e.colour) && (!u || x < *u)) u = x;
            }
            if (!u) {
                throw InternalError("general_extend: vertex " + std::to_string(z) +
                                    " has no edge into the unprocessed matching edges");
            }

            move_to_slot(*u, i);
            Slot& s = slot(i);
            s.z = z;
            s.yz_colour = *g_.colour(s.y, z);
            is_z[static_cast<std::size_t>(z)] = 1;

            for (Vertex w : unmatched) {
                if (is_z[static_cast<std::size_t>(w)]) continue;
                if (auto c = g_.colour(w, s.x)) {
                    Matching out;
                    for (int j = 1; j < i; ++j) out.emplace_back(slot(j).x, slot(j).y, slot(j).colour);
                    Matching tail = avoiding(i + 1, s.yz_colour);
                    out.insert(out.end(), tail.begin(), tail.end());
                    out.emplace_back(s.y, z, s.yz_colour);
                    return ExtensionResult{std::move(out), Edge(w, s.x, *c)};
                }
            }
        }
        return std::nullopt;
    }

private:
    struct Slot {
        Vertex x = -1;
        Vertex y = -1;
        Colour colour = 0;
        Vertex z = -1;
        Colour yz_colour = 0;
    };

    Slot& slot(int i) { return slots_[static_cast<std::size_t>(i)]; }

    // Swap u's edge into slot i and orient it so that u is y_i.
    void move_to_slot(Vertex u, int i) {
        int j = slot_of_[static_cast<std::size_t>(u)];
        std::swap(slot(i), slot(j));
        for (int t : {i, j}) {
            slot_of_[static_cast<std::size_t>(slot(t).x)] = t;
            slot_of_[static_cast<std::size_t>(slot(t).y)] = t;
        }
        if (slot(i).x == u) std::swap(slot(i).x, slot(i).y);
    }

    // Rainbow matching of size k-i on {x_j, y_j, z_j : j >= i} avoiding the
    // colours of slots 1..i-1 and `colour`.
    Matching avoiding(int i, Colour colour) {
        Matching out;
        for (; i < k_; ++i) {
            const Slot& s = slot(i);
            if (colour != s.colour) {
                out.emplace_back(s.x, s.y, s.colour);
            } else {
                out.emplace_back(s.y, s.z, s.yz_colour);
                colour = s.yz_colour;
            }
        }
        return out;
    }

    const EdgeColouredGraph& g_;
    int k_;
    std::vector<Slot> slots_;
    std::vector<int> slot_of_;
};

}  // namespace

ExtensionResult general_extend(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m, int k) {
    auto matched = check_extension_input(g, active, m, k, 3 * (k - 1) + 1, "3(k-1)+1");

    VertexSet unmatched;
    for (Vertex v : active) {
        if (!matched[static_cast<std::size_t>(v)]) unmatched.push_back(v);
    }
    for (Vertex w : unmatched) {
        for (int idx : g.incident(w)) {
            const Edge& e = g.edge(idx);
            if (!matched[static_cast<std::size_t>(e.other(w))]) return {m, e};
        }
    }
    for (Vertex w : unmatched) {
        int d = colour_degree(g, w);
        if (d < k) colour_degree_violation(w, d, k);
    }

    ZChain chain(g, m, k);
    if (auto r = chain.run(unmatched)) return *r;
    throw InternalError("general_extend: chain z_1..z_{k-1} completed, so some unmatched vertex has colour degree "
                        "below k");
}

ExtensionResult general_extend(const EdgeColouredGraph& g, const Matching& m, int k) {
    return general_extend(g, all_vertices(g), m, k);
}

ExtensionResult extend_dispatch(const EdgeColouredGraph& g, std::span<const Vertex> active, const Matching& m, int k,
                                Family family) {
    if (family == Family::bipartite) return bipartite_extend(g, active, m, k);
    return general_extend(g, active, m, k);
}

ExtensionResult extend_dispatch(const EdgeColouredGraph& g, const Matching& m, int k, Family family) {
    return extend_dispatch(g, all_vertices(g), m, k, family);
}

}  // namespace rainbow
