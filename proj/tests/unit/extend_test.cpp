#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "builders.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extend.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/random.hpp"

using namespace rainbow;

namespace {

bool disjoint(const Matching& m, const Edge& e) {
    return std::none_of(m.begin(), m.end(), [&](const Edge& f) { return f.touches(e.u) || f.touches(e.v); });
}

// Independent restatement of the extension invariants.
bool valid_by_hand(const EdgeColouredGraph& g, const ExtensionResult& r, int k) {
    return static_cast<int>(r.matching.size()) == k - 1 && is_rainbow_matching(g, r.matching) && g.has_edge(r.edge) &&
           disjoint(r.matching, r.edge);
}

bool listed(const std::vector<std::pair<Matching, Edge>>& all, const ExtensionResult& r) {
    Matching m = r.matching;
    std::sort(m.begin(), m.end());
    return std::any_of(all.begin(), all.end(), [&](const auto& p) {
        Matching q = p.first;
        std::sort(q.begin(), q.end());
        return q == m && p.second == r.edge;
    });
}

// A rainbow (k-1)-matching of g, or nullopt when g has none.
std::optional<Matching> some_matching(const EdgeColouredGraph& g, int k) {
    auto best = max_rainbow_matching_exact(g);
    if (best.size < k - 1) return std::nullopt;
    best.matching.resize(static_cast<std::size_t>(k - 1));
    return best.matching;
}

}  // namespace

TEST_SUITE("extend") {

TEST_CASE("bipartite_extend examples") {
    // a1=0, a2=1, b1=2, b2=3
    const auto g = build::graph(4, {{0, 2, 1}, {1, 2, 1}, {1, 3, 2}});
    const Matching m{Edge{0, 2, 1}};
    const auto r = bipartite_extend(g, m, 2);
    CHECK(r.matching == m);
    CHECK(r.edge == Edge{1, 3, 2});

    const auto single = build::graph(2, {{0, 1, 5}});
    const auto r1 = bipartite_extend(single, {}, 1);
    CHECK(r1.matching.empty());
    CHECK(r1.edge == Edge{0, 1, 5});
    CHECK_THROWS_AS(bipartite_extend(single, {Edge{0, 1, 5}}, 2), PreconditionError);
}

TEST_CASE("general_extend examples") {
    const auto two = build::graph(4, {{0, 1, 1}, {2, 3, 1}});
    const auto r = general_extend(two, {Edge{0, 1, 1}}, 2);
    CHECK(r.matching == Matching{Edge{0, 1, 1}});
    CHECK(r.edge == Edge{2, 3, 1});

    // x1=0, y1=1, z1=2, w=3
    const auto g = build::graph(4, {{0, 1, 1}, {1, 2, 2}, {0, 2, 4}, {0, 3, 3}, {1, 3, 4}});
    const auto chain = general_extend(g, {Edge{0, 1, 1}}, 2);
    CHECK(valid_by_hand(g, chain, 2));
    CHECK(listed(brute::extensions(g, 2), chain));

    const auto small = build::graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    CHECK_THROWS_AS(general_extend(small, {Edge{0, 1, 1}}, 2), PreconditionError);
}

TEST_CASE("extension inputs are validated") {
    const auto g = build::rainbow_complete(7);
    CHECK_THROWS_AS(general_extend(g, {Edge{0, 1, 0}}, 3), PreconditionError);                    // wrong size
    CHECK_THROWS_AS(general_extend(g, {Edge{0, 1, 0}, Edge{1, 2, 6}}, 3), PreconditionError);     // not a matching
    const auto mono = build::mono_complete(7);
    CHECK_THROWS_AS(general_extend(mono, {Edge{0, 1, 1}, Edge{2, 3, 1}}, 3), PreconditionError);  // not rainbow
}

TEST_CASE("extend_dispatch thresholds") {
    // K_{2,2} rainbow, k = 2: |G| = 4 = 2k but 3(k-1)+1 = 4 too; use K_{3,3}, k = 3.
    const auto g = build::rainbow_complete_bipartite(3);
    VertexSet all{0, 1, 2, 3, 4, 5};
    const Matching m{Edge{0, 3, 0}, Edge{1, 4, 4}};
    const auto r = extend_dispatch(g, all, m, 3, Family::bipartite);
    CHECK(valid_by_hand(g, r, 3));
    CHECK_THROWS_AS(extend_dispatch(g, all, m, 3, Family::general), PreconditionError);  // 6 < 7

    const auto k3 = build::rainbow_complete(3);
    CHECK_THROWS_AS(extend_dispatch(k3, VertexSet{0, 1, 2}, {}, 1, Family::bipartite), PreconditionError);

    const auto big = build::rainbow_complete_bipartite(4);
    VertexSet eight{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(valid_by_hand(big, extend_dispatch(big, eight, {Edge{0, 4, 0}, Edge{1, 5, 5}}, 3, Family::general), 3));
}

TEST_CASE("extension results are genuine on random instances") {
    int checked = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
        SplitMix64 rng(derive_seed(41, i));
        const bool bip = rng.below(2) == 1;
        GenSpec s;
        s.k = rng.between(2, 4);
        s.model = bip ? Model::bipartite : Model::min_colour_degree;
        s.n = bip ? 2 * s.k + rng.between(0, 3) : 3 * (s.k - 1) + 1 + rng.between(0, 3);
        s.colours = rng.between(s.k, s.k + 2);
        s.p = 0.2 + 0.6 * rng.unit();
        s.seed = rng.next();
        const auto g = generate(s);
        const auto m = some_matching(g, s.k);
        if (!m) continue;
        const auto r = bip ? bipartite_extend(g, *m, s.k) : general_extend(g, *m, s.k);
        CHECK(valid_by_hand(g, r, s.k));
        CHECK(is_valid_extension(g, r, s.k));
        if (g.order() <= 9) CHECK(listed(brute::extensions(g, s.k), r));
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("general_extend on a restricted vertex set") {
    // Two copies of a 4-vertex instance; only the second is active.
    const auto g = build::graph(8, {{0, 1, 1}, {2, 3, 1}, {4, 5, 1}, {5, 6, 2}, {4, 6, 4}, {4, 7, 3}, {5, 7, 4}});
    const VertexSet active{4, 5, 6, 7};
    const auto r = general_extend(g, active, {Edge{4, 5, 1}}, 2);
    CHECK(valid_by_hand(g, r, 2));
    for (const Edge& e : r.matching) CHECK(e.u >= 4);
    CHECK(r.edge.u >= 4);
}

TEST_CASE("is_valid_extension negatives") {
    const auto g = build::rainbow_complete(4);
    CHECK(is_valid_extension(g, {{Edge{0, 1, 0}}, Edge{2, 3, 5}}, 2));
    CHECK_FALSE(is_valid_extension(g, {{Edge{0, 1, 0}}, Edge{1, 2, 3}}, 2));  // shares vertex 1
    CHECK_FALSE(is_valid_extension(g, {{Edge{0, 1, 0}}, Edge{2, 3, 4}}, 2));  // wrong colour: not an edge of g
    CHECK_FALSE(is_valid_extension(g, {{}, Edge{2, 3, 5}}, 2));               // wrong size
}

}  // TEST_SUITE
