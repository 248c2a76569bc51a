// Partition-improvement driver for rainbow matchings of size k.
//
// The state is a partition {W_1, ..., W_p, U} of the active vertices where
// each W_i is a C_i-adapter on 3|C_i|+1 vertices and U carries a rainbow
// matching M_U of size k-1-sum|C_i| avoiding every C_i. Each iteration either
// assembles a rainbow k-matching or moves to a partition whose weight string
// is lexicographically larger. The moves are:
//
//   switch   an edge zw, z in U \ V(M_U), w in W, colour outside C
//   extend   an extension of M_U in G[U] - C whose extra edge repeats a colour
//   recurse  drop W_1 and the colours C_1 and solve for k - l_1
//   absorb   rebuild a single part around an unmatched z of U
//
// The colour-degree hypothesis is only consulted for concrete matchings; a
// violation travels upward as LemmaViolation so that the caller can turn it
// into an improvement of its own partition.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "rainbow/errors.hpp"
#include "rainbow/extend.hpp"

namespace rainbow {

std::vector<int> PartitionState::params() const {
    std::vector<int> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.weight());
    return out;
}

int PartitionState::parts_weight() const {
    int s = 0;
    for (const auto& p : parts) s += p.weight();
    return s;
}

ColourSet PartitionState::part_colours() const {
    ColourSet out;
    for (const auto& p : parts) out.insert(p.adapter.colours.begin(), p.adapter.colours.end());
    return out;
}

bool params_less(std::span<const int> a, std::span<const int> b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

bool partition_invariants_hold(const EdgeColouredGraph& g, std::span<const Vertex> active, const PartitionState& s,
                               int k, std::string* why) {
    auto fail = [why](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    ColourSet all_colours;
    VertexSet covered;
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        const Adapter& a = s.parts[i].adapter;
        const int l = s.parts[i].weight();
        if (i > 0 && s.parts[i - 1].weight() < l) return fail("parts not sorted by weight");
        if (l < 1) return fail("empty part colour set");
        for (Colour c : a.colours) {
            if (!all_colours.insert(c).second) return fail("part colour sets overlap");
        }
        if (static_cast<int>(a.vertices.size()) != 3 * l + 1) return fail("part size is not 3l+1");
        if (a.level() != l + 1) return fail("part is not a C-adapter (level != |C|+1)");
        if (!verify_adapter(g, a)) return fail("part fails adapter verification");
        covered.insert(covered.end(), a.vertices.begin(), a.vertices.end());
    }
    covered.insert(covered.end(), s.remainder.begin(), s.remainder.end());
    std::sort(covered.begin(), covered.end());
    if (!std::equal(covered.begin(), covered.end(), active.begin(), active.end())) {
        return fail("parts and remainder do not partition the vertex set");
    }
    const int l0 = k - 1 - s.parts_weight();
    if (l0 < 0) return fail("part weights exceed k-1");
    if (static_cast<int>(s.remainder_matching.size()) != l0) return fail("remainder matching has the wrong size");
    if (!is_matching(g, s.remainder_matching) || !is_rainbow_matching(g, s.remainder_matching)) {
        return fail("remainder matching is not a rainbow matching");
    }
    VertexSet mu = vertices_of(s.remainder_matching);
    if (!std::includes(s.remainder.begin(), s.remainder.end(), mu.begin(), mu.end())) {
        return fail("remainder matching leaves the remainder");
    }
    for (const Edge& e : s.remainder_matching) {
        if (all_colours.contains(e.colour)) return fail("remainder matching uses a part colour");
    }
    if (mu.size() >= s.remainder.size()) return fail("remainder is fully matched");
    return true;
}

Rational size_threshold(int k, const Rational& gamma) {
    const Rational two(2);
    const Rational d = gamma - two;
    return (two + gamma / two) * Rational(k) + two * (Rational(4) - gamma) / (d * d) - Rational(3) + gamma;
}

int iteration_budget(int k) { return k * k + 3 * k; }

namespace {

struct LemmaViolation {
    Matching matching;  // rainbow of size k-1 in the invocation's graph
    Vertex vertex;      // outside the matching, colour degree below k
};

VertexSet subtract(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Matching concat(Matching a, const Matching& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string params_str(const std::vector<int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

PartitionState seeded(const VertexSet& active, Matching seed) {
    PartitionState s;
    s.remainder = active;
    s.remainder_matching = std::move(seed);
    return s;
}

class Driver {
public:
    Driver(const Rational& gamma, Family family, const DriverOptions& options)
        : gamma_(gamma), family_(family), options_(options) {}

    Matching lemma(const EdgeColouredGraph& g, const VertexSet& active, int k, PartitionState initial, int depth);

private:
    // Per-invocation bookkeeping.
    struct Frame {
        const EdgeColouredGraph& g;
        const VertexSet& active;
        int k;
        int depth;
        int invocation;
        PartitionState state;
        std::vector<int> part_of;  // vertex -> part index, -1 outside parts
        std::vector<char> in_remainder;
        std::vector<char> matched;  // in V(M_U)

        int l0() const { return k - 1 - state.parts_weight(); }
        int remainder_size() const { return static_cast<int>(state.remainder.size()); }
    };

    struct Step {
        enum Kind { moved, finished } kind;
        std::string action;
        Matching result;
    };

    static void reindex(Frame& f);
    static void sort_parts(PartitionState& s);
    static Matching union_witness(const PartitionState& s, std::size_t index);
    // Witnesses of every part, choosing for part `part` one that avoids `avoid`.
    static Matching witnesses_avoiding(const PartitionState& s, int part, Vertex avoid);

    std::optional<Step> try_switch(Frame& f);
    std::optional<Step> try_extend(Frame& f);
    std::optional<Step> try_recurse(Frame& f);
    Step absorb(Frame& f);

    void emit(const Frame& f, int iteration, const std::vector<int>& params, int remainder_size, const Step& step);

    Rational gamma_;
    Family family_;
    const DriverOptions& options_;
    int invocations_ = 0;
};

void Driver::reindex(Frame& f) {
    const auto n = static_cast<std::size_t>(f.g.order());
    f.part_of.assign(n, -1);
    f.in_remainder.assign(n, 0);
    f.matched.assign(n, 0);
    for (std::size_t i = 0; i < f.state.parts.size(); ++i) {
        for (Vertex v : f.state.parts[i].adapter.vertices) f.part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (Vertex v : f.state.remainder) f.in_remainder[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : f.state.remainder_matching) {
        f.matched[static_cast<std::size_t>(e.u)] = f.matched[static_cast<std::size_t>(e.v)] = 1;
    }
}

void Driver::sort_parts(PartitionState& s) {
    std::stable_sort(s.parts.begin(), s.parts.end(),
                     [](const PartitionPart& a, const PartitionPart& b) { return a.weight() > b.weight(); });
}

Matching Driver::union_witness(const PartitionState& s, std::size_t index) {
    Matching out;
    for (const auto& p : s.parts) {
        const auto& ws = p.adapter.witnesses;
        const Matching& m = ws[std::min(index, ws.size() - 1)];
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

Matching Driver::witnesses_avoiding(const PartitionState& s, int part, Vertex avoid) {
    Matching out;
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        const Adapter& a = s.parts[i].adapter;
        int idx = static_cast<int>(i) == part ? a.witness_avoiding(avoid) : 0;
        if (idx < 0) throw InternalError("adapter has no witness avoiding vertex " + std::to_string(avoid));
        const Matching& m = a.witnesses[static_cast<std::size_t>(idx)];
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

// Edges leaving an unmatched vertex of U with a colour outside C either
// finish the matching or enlarge the partition.
std::optional<Driver::Step> Driver::try_switch(Frame& f) {
    PartitionState& s = f.state;
    const ColourSet part_colours = s.part_colours();
    const int l0 = f.l0();
    const int u_size = f.remainder_size();

    auto find_matched_edge = [&](Colour c) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < s.remainder_matching.size(); ++i) {
            if (s.remainder_matching[i].colour == c) return i;
        }
        return std::nullopt;
    };

    for (Vertex z : s.remainder) {
        if (f.matched[static_cast<std::size_t>(z)]) continue;
        for (int idx : f.g.incident(z)) {
            const Edge& e = f.g.edge(idx);
            if (part_colours.contains(e.colour)) continue;
            const Vertex x = e.other(z);
            const int part = f.part_of[static_cast<std::size_t>(x)];
            const bool x_free = f.in_remainder[static_cast<std::size_t>(x)] && !f.matched[static_cast<std::size_t>(x)];
            if (part < 0 && !x_free) continue;

            auto ab = find_matched_edge(e.colour);
            if (!ab) {
                Matching out = part >= 0 ? witnesses_avoiding(s, part, x) : union_witness(s, 0);
                out = concat(std::move(out), s.remainder_matching);
                out.push_back(e);
                return Step{Step::finished, part >= 0 ? "switch" : "extend", std::move(out)};
            }
            const Edge used = s.remainder_matching[*ab];
            if (part >= 0 && u_size >= 2 * l0 + 2) {
                Adapter& a = s.parts[static_cast<std::size_t>(part)].adapter;
                a = adapter_absorb(f.g, a, used.u, used.v, z, x);
                VertexSet gone{used.u, used.v, z};
                std::sort(gone.begin(), gone.end());
                s.remainder = subtract(s.remainder, gone);
                s.remainder_matching.erase(s.remainder_matching.begin() + static_cast<std::ptrdiff_t>(*ab));
                sort_parts(s);
                return Step{Step::moved, "switch", {}};
            }
            if (part < 0 && u_size >= 2 * l0 + 3) {
                const std::pair<Vertex, Vertex> pair{used.u, used.v};
                const Vertex zs[] = {x};
                s.parts.push_back({adapter_from_parallel_pairs(f.g, std::span(&pair, 1), zs, z)});
                VertexSet gone{used.u, used.v, x, z};
                std::sort(gone.begin(), gone.end());
                s.remainder = subtract(s.remainder, gone);
                s.remainder_matching.erase(s.remainder_matching.begin() + static_cast<std::ptrdiff_t>(*ab));
                sort_parts(s);
                return Step{Step::moved, "extend", {}};
            }
        }
    }
    return std::nullopt;
}

// |U| > gamma (l0 + 1): extend M_U inside G[U] with the part colours removed.
std::optional<Driver::Step> Driver::try_extend(Frame& f) {
    PartitionState& s = f.state;
    const int l0 = f.l0();
    if (!(Rational(f.remainder_size()) > gamma_ * Rational(l0 + 1))) return std::nullopt;

    const ColourSet part_colours = s.part_colours();
    const EdgeColouredGraph h = delete_colours(f.g.induced(s.remainder), part_colours);
    for (Vertex z : s.remainder) {
        if (f.matched[static_cast<std::size_t>(z)]) continue;
        if (colour_degree(h, z) >= l0 + 1) continue;
        if (colour_degree(f.g, z) >= f.k) {
            throw InternalError("vertex " + std::to_string(z) +
                                " lost colours to the parts although no switching edge exists");
        }
        throw LemmaViolation{concat(s.remainder_matching, union_witness(s, 0)), z};
    }

    ExtensionResult ext;
    try {
        ext = extend_dispatch(h, s.remainder, s.remainder_matching, l0 + 1, family_);
    } catch (const PreconditionError& e) {
        throw InternalError(std::string("extension step rejected its input: ") + e.what());
    }

    auto same = std::find_if(ext.matching.begin(), ext.matching.end(),
                             [&](const Edge& m) { return m.colour == ext.edge.colour; });
    if (same == ext.matching.end()) {
        Matching out = concat(ext.matching, union_witness(s, 0));
        out.push_back(ext.edge);
        return Step{Step::finished, "extend", std::move(out)};
    }

    const Edge xy = *same;
    const std::pair<Vertex, Vertex> pair{xy.u, xy.v};
    const Vertex zs[] = {ext.edge.u};
    s.parts.push_back({adapter_from_parallel_pairs(f.g, std::span(&pair, 1), zs, ext.edge.v)});
    VertexSet gone{xy.u, xy.v, ext.edge.u, ext.edge.v};
    std::sort(gone.begin(), gone.end());
    s.remainder = subtract(s.remainder, gone);
    ext.matching.erase(same);
    s.remainder_matching = std::move(ext.matching);
    sort_parts(s);
    return Step{Step::moved, "extend", {}};
}

// (gamma - 2) l_1 >= 2: solve the smaller problem on G - W_1 - C_1.
std::optional<Driver::Step> Driver::try_recurse(Frame& f) {
    PartitionState& s = f.state;
    const int l1 = s.parts.front().weight();
    if (!((gamma_ - Rational(2)) * Rational(l1) >= Rational(2))) return std::nullopt;

    const Adapter w1 = s.parts.front().adapter;
    const VertexSet rest = subtract(f.active, w1.vertices);
    const EdgeColouredGraph h1 = delete_colours(f.g.induced(rest), w1.colours);
    const int k1 = f.k - l1;
    if (Rational(static_cast<std::int64_t>(rest.size())) < size_threshold(k1, gamma_)) {
        throw InternalError("recursive instance is below the size threshold for k = " + std::to_string(k1));
    }

    Matching seed = s.remainder_matching;
    for (std::size_t i = 1; i < s.parts.size(); ++i) {
        const Matching& m = s.parts[i].adapter.witnesses.front();
        seed.insert(seed.end(), m.begin(), m.end());
    }

    Matching inner;
    try {
        inner = lemma(h1, rest, k1, seeded(rest, std::move(seed)), f.depth + 1);
    } catch (LemmaViolation& v) {
        const Vertex z = v.vertex;
        if (colour_degree(f.g, z) < f.k) throw LemmaViolation{concat(v.matching, w1.witnesses.front()), z};

        // Some colour at z outside C_1 only lives on edges into W_1.
        std::optional<Edge> link;
        for (int idx : f.g.incident(z)) {
            const Edge& e = f.g.edge(idx);
            if (w1.contains(e.other(z)) && !w1.colours.contains(e.colour)) {
                link = e;
                break;
            }
        }
        if (!link) {
            throw InternalError("vertex " + std::to_string(z) + " lost colour degree without an edge into W_1");
        }
        const Vertex w = link->other(z);
        auto ab = std::find_if(v.matching.begin(), v.matching.end(),
                               [&](const Edge& e) { return e.colour == link->colour; });
        if (ab == v.matching.end()) {
            int idx = w1.witness_avoiding(w);
            Matching out = concat(w1.witnesses[static_cast<std::size_t>(idx)], v.matching);
            out.push_back(*link);
            return Step{Step::finished, "switch", std::move(out)};
        }
        const Edge used = *ab;
        v.matching.erase(ab);
        PartitionState next;
        next.parts.push_back({adapter_absorb(f.g, w1, used.u, used.v, z, w)});
        next.remainder = subtract(f.active, next.parts.front().adapter.vertices);
        next.remainder_matching = std::move(v.matching);
        s = std::move(next);
        return Step{Step::moved, "switch", {}};
    }
    return Step{Step::finished, "recurse", concat(w1.witnesses.front(), inner)};
}

// Rebuild one part around an unmatched vertex z of U from the edges z x_j
// whose colours sit on a common witness of W.
Driver::Step Driver::absorb(Frame& f) {
    PartitionState& s = f.state;
    auto zit = std::find_if(s.remainder.begin(), s.remainder.end(),
                            [&](Vertex v) { return !f.matched[static_cast<std::size_t>(v)]; });
    const Vertex z = *zit;
    if (colour_degree(f.g, z) < f.k) throw LemmaViolation{concat(s.remainder_matching, union_witness(s, 0)), z};

    const ColourSet part_colours = s.part_colours();
    const std::size_t level = static_cast<std::size_t>(s.parts.front().weight()) + 1;

    struct Choice {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::vector<Vertex> xs;
        Matching witness;
    };
    Choice best;
    for (std::size_t i = 0; i < level; ++i) {
        Matching witness = union_witness(s, i);
        std::vector<char> blocked = f.matched;
        std::unordered_map<Colour, Edge> by_colour;
        for (const Edge& e : witness) {
            blocked[static_cast<std::size_t>(e.u)] = blocked[static_cast<std::size_t>(e.v)] = 1;
            by_colour.emplace(e.colour, e);
        }
        std::map<Colour, Vertex> pick;  // colour -> lowest usable x
        for (int idx : f.g.incident(z)) {
            const Edge& e = f.g.edge(idx);
            const Vertex x = e.other(z);
            if (!part_colours.contains(e.colour) || blocked[static_cast<std::size_t>(x)]) continue;
            auto [it, inserted] = pick.emplace(e.colour, x);
            if (!inserted) it->second = std::min(it->second, x);
        }
        if (pick.size() <= best.xs.size() && i > 0) continue;
        Choice c;
        for (const auto& [colour, x] : pick) {
            const Edge& m = by_colour.at(colour);
            c.pairs.emplace_back(m.u, m.v);
            c.xs.push_back(x);
        }
        c.witness = std::move(witness);
        best = std::move(c);
    }

    const int q = static_cast<int>(best.xs.size());
    if (q <= s.parts.front().weight()) {
        throw InternalError("no improving move at params " + params_str(s.params()) + " with |U| = " +
                            std::to_string(s.remainder.size()) + "; the partition is maximal but the size bound holds");
    }

    Adapter part = adapter_from_parallel_pairs(f.g, best.pairs, best.xs, z);
    Matching rest;
    for (const Edge& e : concat(best.witness, s.remainder_matching)) {
        if (!part.contains(e.u) && !part.contains(e.v)) rest.push_back(e);
    }
    PartitionState next;
    next.remainder = subtract(f.active, part.vertices);
    next.parts.push_back({std::move(part)});
    next.remainder_matching = std::move(rest);
    s = std::move(next);
    return Step{Step::moved, "absorb", {}};
}

void Driver::emit(const Frame& f, int iteration, const std::vector<int>& params, int remainder_size,
                  const Step& step) {
    if (!options_.trace) return;
    TraceRecord r;
    r.invocation = f.invocation;
    r.depth = f.depth;
    r.k = f.k;
    r.iteration = iteration;
    r.params = params;
    r.remainder_size = remainder_size;
    r.action = step.kind == Step::finished ? "done" : step.action;
    if (step.kind == Step::finished) r.via = step.action;
    options_.trace(r);
}

Matching Driver::lemma(const EdgeColouredGraph& g, const VertexSet& active, int k, PartitionState initial,
                       int depth) {
    if (k == 1) {
        for (Vertex v : active) {
            if (!g.incident(v).empty()) return {g.edge(g.incident(v).front())};
        }
        throw LemmaViolation{{}, active.front()};
    }

    Frame f{g, active, k, depth, invocations_++, std::move(initial), {}, {}, {}};
    sort_parts(f.state);

    const int budget = iteration_budget(k);
    for (int iteration = 0;; ++iteration) {
        if (iteration >= budget) {
            throw InternalError("driver exceeded its iteration budget of " + std::to_string(budget) + " for k = " +
                                std::to_string(k));
        }
        if (options_.check_invariants) {
            std::string why;
            if (!partition_invariants_hold(g, active, f.state, k, &why)) {
                throw InternalError("partition invariant broken at iteration " + std::to_string(iteration) + ": " +
                                    why);
            }
        }
        reindex(f);
        const std::vector<int> params = f.state.params();
        const int u_size = f.remainder_size();

        std::optional<Step> step = try_switch(f);
        if (!step) step = try_extend(f);
        if (!step) {
            if (f.state.parts.empty()) throw InternalError("remainder is small but no parts exist");
            step = try_recurse(f);
        }
        if (!step) step = absorb(f);

        emit(f, iteration, params, u_size, *step);
        if (step->kind == Step::finished) return std::move(step->result);
        if (vertices_of(f.state.remainder_matching).size() >= f.state.remainder.size()) {
            throw InternalError("move after params " + params_str(params) + " left the remainder fully matched");
        }
        if (!params_less(params, f.state.params())) {
            throw InternalError("move did not increase params " + params_str(params));
        }
    }
}

}  // namespace

namespace {

void check_preconditions(const EdgeColouredGraph& g, int k, const Rational& gamma, Family family) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (gamma <= Rational(2) || gamma > Rational(3)) throw PreconditionError("gamma must lie in (2, 3]");
    if (family == Family::general && gamma != Rational(3)) {
        throw PreconditionError("the general family needs gamma = 3");
    }
    if (family == Family::bipartite && !bipartition(g)) throw PreconditionError("graph is not bipartite");
    const Rational bound = size_threshold(k, gamma);
    if (Rational(g.order()) < bound) {
        throw PreconditionError("|G| = " + std::to_string(g.order()) + " < (2 + gamma/2)k + 2(4-gamma)/(gamma-2)^2 - 3 + "
                                "gamma = " + to_string(bound));
    }
    const int dc = min_colour_degree(g);
    if (dc < k) {
        throw PreconditionError("min colour degree " + std::to_string(dc) + " < k = " + std::to_string(k));
    }
}

VertexSet all_vertices(const EdgeColouredGraph& g) {
    VertexSet all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
}

Matching checked(const EdgeColouredGraph& g, int k, Matching m) {
    if (static_cast<int>(m.size()) != k || !is_rainbow_matching(g, m)) {
        throw InternalError("driver produced an invalid matching");
    }
    std::sort(m.begin(), m.end());
    return m;
}

[[noreturn]] void violation(const LemmaViolation& v) {
    throw InternalError("colour-degree hypothesis reported violated at vertex " + std::to_string(v.vertex) +
                        " although min colour degree >= k");
}

}  // namespace

Matching find_rainbow_matching(const EdgeColouredGraph& g, int k, const Rational& gamma, Family family,
                               const DriverOptions& options) {
    check_preconditions(g, k, gamma, family);
    const VertexSet all = all_vertices(g);
    Driver driver(gamma, family, options);
    Matching m;
    try {
        for (int j = 1; j <= k; ++j) m = driver.lemma(g, all, j, seeded(all, std::move(m)), 0);
    } catch (const LemmaViolation& v) {
        violation(v);
    }
    return checked(g, k, std::move(m));
}

Matching improve_partition(const EdgeColouredGraph& g, int k, const Rational& gamma, Family family,
                           PartitionState initial, const DriverOptions& options) {
    check_preconditions(g, k, gamma, family);
    if (k < 2) throw PreconditionError("a starting partition needs k >= 2");
    const VertexSet all = all_vertices(g);
    std::sort(initial.remainder.begin(), initial.remainder.end());
    std::string why;
    if (!partition_invariants_hold(g, all, initial, k, &why)) {
        throw PreconditionError("starting partition is invalid: " + why);
    }
    Driver driver(gamma, family, options);
    Matching m;
    try {
        m = driver.lemma(g, all, k, std::move(initial), 0);
    } catch (const LemmaViolation& v) {
        violation(v);
    }
    return checked(g, k, std::move(m));
}

Matching theorem1(const EdgeColouredGraph& g, int k, const DriverOptions& options) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    const std::int64_t lhs = 2 * static_cast<std::int64_t>(g.order());
    const std::int64_t rhs = 7 * static_cast<std::int64_t>(k) + 4;
    if (lhs < rhs) {
        throw PreconditionError("n >= 7k/2 + 2 fails: 2n = " + std::to_string(lhs) + " < 7k + 4 = " +
                                std::to_string(rhs));
    }
    return find_rainbow_matching(g, k, Rational(3), Family::general, options);
}

Matching theorem2(const EdgeColouredGraph& g, int k, const Rational& epsilon, const DriverOptions& options) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (epsilon <= Rational(0) || epsilon > Rational(1, 2)) throw PreconditionError("epsilon must lie in (0, 1/2]");
    if (!bipartition(g)) throw PreconditionError("graph is not bipartite");
    const Rational bound = (Rational(3) + epsilon) * Rational(k) + Rational(1) / (epsilon * epsilon);
    if (Rational(g.order()) < bound) {
        throw PreconditionError("n >= (3 + eps)k + eps^-2 fails: " + std::to_string(g.order()) + " < " +
                                to_string(bound));
    }
    return find_rainbow_matching(g, k, Rational(2) + Rational(2) * epsilon, Family::bipartite, options);
}

}  // namespace rainbow
