#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "builders.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/random.hpp"

using namespace rainbow;

namespace {

BipartiteAssignment assignment(int right, std::vector<std::vector<int>> adjacency) {
    BipartiteAssignment b;
    b.right = right;
    b.adjacency = std::move(adjacency);
    return b;
}

BipartiteAssignment random_assignment(SplitMix64& rng) {
    const int left = rng.between(0, 10);
    const int right = rng.between(0, 8);
    const double p = rng.unit() * 0.6;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
    for (auto& row : adj) {
        for (int s = 0; s < right; ++s) {
            if (rng.unit() < p) row.push_back(s);
        }
    }
    return assignment(right, std::move(adj));
}

bool is_valid_assignment(const BipartiteAssignment& b) {
    std::set<int> used;
    for (int i = 0; i < b.left(); ++i) {
        const int s = b.assigned[static_cast<std::size_t>(i)];
        if (s < 0) continue;
        const auto& row = b.adjacency[static_cast<std::size_t>(i)];
        if (std::find(row.begin(), row.end(), s) == row.end()) return false;
        if (!used.insert(s).second) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("max_rainbow_matching_exact examples") {
    // K_4 with colour classes {01, 23}, {02, 13}, {03, 12}.
    const auto k4 = build::graph(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
    CHECK(max_rainbow_matching_exact(k4).size == 1);

    const auto c4 = build::graph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {0, 3, 4}});
    const auto r = max_rainbow_matching_exact(c4);
    CHECK(r.size == 2);
    CHECK(is_rainbow_matching(c4, r.matching));

    CHECK(max_rainbow_matching_exact(build::graph(2, {{0, 1, 7}})).size == 1);
    CHECK(max_rainbow_matching_exact(EdgeColouredGraph(5)).size == 0);
}

TEST_CASE("max_rainbow_matching_exact matches brute force and is monotone") {
    for (std::uint64_t i = 0; i < 150; ++i) {
        SplitMix64 rng(derive_seed(3, i));
        GenSpec s;
        s.model = Model::uniform;
        s.n = rng.between(2, 9);
        s.p = rng.unit();
        s.colours = rng.between(1, 6);
        s.seed = rng.next();
        const auto g = generate(s);
        const auto r = max_rainbow_matching_exact(g);
        CHECK(r.size == brute::max_rainbow_matching(g));
        CHECK(static_cast<int>(r.matching.size()) == r.size);
        CHECK(is_rainbow_matching(g, r.matching));

        // Adding any missing pair never lowers the maximum.
        std::vector<Edge> more(g.edges().begin(), g.edges().end());
        for (Vertex u = 0; u < g.order() && more.size() == g.edges().size(); ++u) {
            for (Vertex v = u + 1; v < g.order(); ++v) {
                if (!g.colour(u, v)) {
                    more.emplace_back(u, v, static_cast<Colour>(rng.below(8)));
                    break;
                }
            }
        }
        CHECK(max_rainbow_matching_exact(EdgeColouredGraph(g.order(), more)).size >= r.size);
    }
}

TEST_CASE("max_bipartite_matching examples") {
    auto full = assignment(2, {{0, 1}, {0, 1}});
    max_bipartite_matching(full);
    CHECK(full.saturated());

    auto path = assignment(2, {{0}, {0, 1}});
    max_bipartite_matching(path);
    CHECK(path.assigned == std::vector<int>{0, 1});

    auto none = assignment(0, {{}, {}});
    max_bipartite_matching(none);
    CHECK(none.matched() == 0);
}

TEST_CASE("max_bipartite_matching equals brute force") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        SplitMix64 rng(derive_seed(17, i));
        auto b = random_assignment(rng);
        max_bipartite_matching(b);
        CHECK(is_valid_assignment(b));
        CHECK(b.matched() == brute::max_assignment(b));
    }
}

TEST_CASE("hall_violator") {
    auto two_on_one = assignment(2, {{0}, {0}});
    max_bipartite_matching(two_on_one);
    const auto s = hall_violator(two_on_one);
    CHECK(s == std::vector<int>{0, 1});
    CHECK(neighbourhood(two_on_one, s) == std::vector<int>{0});

    auto saturated = assignment(2, {{0}, {1}});
    max_bipartite_matching(saturated);
    CHECK_THROWS_AS(hall_violator(saturated), PreconditionError);

    int certified = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
        SplitMix64 rng(derive_seed(23, i));
        auto b = random_assignment(rng);
        max_bipartite_matching(b);
        if (b.saturated()) continue;
        const auto items = hall_violator(b);
        CHECK(neighbourhood(b, items).size() < items.size());
        ++certified;
    }
    CHECK(certified > 50);
}

}  // TEST_SUITE
