#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "rainbow/adapter.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/trials.hpp"

namespace rainbow {

namespace {

constexpr std::array<std::pair<Statement, std::string_view>, 3> kStatementNames{{
    {Statement::adapter_props, "adapter_props"},
    {Statement::L_general_small, "L_general_small"},
    {Statement::P_bipartite_small, "P_bipartite_small"},
}};

using Pair = std::pair<Vertex, Vertex>;

// Stops the enumeration at the first counterexample.
struct Counterexample {
    std::string what;
};

std::string describe(const EdgeColouredGraph& g, const Matching& m) {
    std::string s = "n=" + std::to_string(g.order()) + " edges=[";
    for (const Edge& e : g.edges()) {
        s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.colour) + ")";
    }
    s += "] M=[";
    for (const Edge& e : m) s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    return s + "]";
}

// Every colouring of `pairs` with values absent / 0..colours-1, colours
// introduced in increasing order (one representative per colour renaming).
void for_each_colouring(const std::vector<Pair>& pairs, int colours, int n,
                        const std::function<void(const EdgeColouredGraph&)>& visit) {
    std::vector<int> value(pairs.size(), -1);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == pairs.size()) {
            std::vector<Edge> edges;
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                if (value[j] >= 0) edges.emplace_back(pairs[j].first, pairs[j].second, value[j]);
            }
            visit(EdgeColouredGraph(n, std::move(edges)));
            return;
        }
        value[i] = -1;
        rec(i + 1, used);
        for (int c = 0; c <= std::min(used, colours - 1); ++c) {
            value[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
}

// Every rainbow matching of exactly `size` edges.
void for_each_rainbow_matching(const EdgeColouredGraph& g, int size, const std::function<void(const Matching&)>& visit) {
    Matching current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(current.size()) == size) {
            visit(current);
            return;
        }
        for (std::size_t i = from; i < g.size(); ++i) {
            const Edge& e = g.edge(static_cast<int>(i));
            bool ok = std::none_of(current.begin(), current.end(),
                                   [&](const Edge& f) { return f.shares_vertex(e) || f.colour == e.colour; });
            if (!ok) continue;
            current.push_back(e);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
}

bool hypothesis_holds(const EdgeColouredGraph& g, const Matching& m, int k) {
    const VertexSet covered = vertices_of(m);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!std::binary_search(covered.begin(), covered.end(), v) && colour_degree(g, v) < k) return false;
    }
    return true;
}

double power(int base, std::size_t exponent) { return std::pow(static_cast<double>(base), static_cast<double>(exponent)); }

std::vector<Pair> all_pairs(int n) {
    std::vector<Pair> out;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    }
    return out;
}

std::vector<Pair> crossing_pairs(int n, int a) {
    std::vector<Pair> out;
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < n; ++v) out.emplace_back(u, v);
    }
    return out;
}

// The pair sets to enumerate for an extension statement.
std::vector<std::pair<int, std::vector<Pair>>> extension_shapes(Statement s, const ExhaustiveLimits& lim) {
    std::vector<std::pair<int, std::vector<Pair>>> shapes;
    if (s == Statement::L_general_small) {
        for (int n = 3 * (lim.k - 1) + 1; n <= lim.max_order; ++n) shapes.emplace_back(n, all_pairs(n));
    } else {
        // Side A = {0..a-1}; a <= n/2 covers every bipartite graph up to swapping sides.
        for (int n = 2 * lim.k; n <= lim.max_order; ++n) {
            for (int a = 1; a <= n / 2; ++a) shapes.emplace_back(n, crossing_pairs(n, a));
        }
    }
    return shapes;
}

void check_budget(double estimate, const ExhaustiveLimits& lim) {
    if (estimate > static_cast<double>(lim.budget)) {
        throw PreconditionError("enumeration estimate " + std::to_string(static_cast<long long>(estimate)) +
                                " exceeds the budget of " + std::to_string(lim.budget));
    }
}

std::int64_t check_extension(Statement s, const ExhaustiveLimits& lim) {
    if (lim.k < 1 || lim.max_colours < 1 || lim.max_order < 0) throw PreconditionError("invalid limits");
    const auto shapes = extension_shapes(s, lim);
    double estimate = 0;
    for (const auto& [n, pairs] : shapes) estimate += power(lim.max_colours + 1, pairs.size());
    check_budget(estimate, lim);

    std::int64_t instances = 0;
    for (const auto& [n, pairs] : shapes) {
        for_each_colouring(pairs, lim.max_colours, n, [&](const EdgeColouredGraph& g) {
            for_each_rainbow_matching(g, lim.k - 1, [&](const Matching& m) {
                if (!hypothesis_holds(g, m, lim.k)) return;
                ++instances;
                ExtensionResult r;
                try {
                    r = s == Statement::L_general_small ? general_extend(g, m, lim.k) : bipartite_extend(g, m, lim.k);
                } catch (const std::exception& e) {
                    throw Counterexample{std::string(e.what()) + " on " + describe(g, m)};
                }
                if (!is_valid_extension(g, r, lim.k)) throw Counterexample{"invalid extension on " + describe(g, m)};
            });
        });
    }
    return instances;
}

// Parallel-pairs adapters for every placement of the 3l+1 roles on 7 vertices
// (l = 1, 2), on the bare gadget and on the gadget padded with colour-colliding
// edges; unions of disjoint gadgets; absorb steps at every w.
std::int64_t check_adapters() {
    constexpr int n = 7;
    std::int64_t instances = 0;
    auto fail = [](const std::string& what) { throw Counterexample{what}; };

    auto gadget_graph = [](int order, const std::vector<Pair>& xy, const std::vector<Vertex>& zs, Vertex w,
                           bool padded, Colour base) {
        std::vector<Edge> edges;
        std::vector<std::vector<char>> used(static_cast<std::size_t>(order), std::vector<char>(static_cast<std::size_t>(order), 0));
        auto add = [&](Vertex a, Vertex b, Colour c) {
            edges.emplace_back(a, b, c);
            used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = used[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
        };
        for (std::size_t i = 0; i < xy.size(); ++i) {
            add(xy[i].first, xy[i].second, base + static_cast<Colour>(i));
            add(zs[i], w, base + static_cast<Colour>(i));
        }
        if (padded) {
            for (Vertex a = 0; a < order; ++a) {
                for (Vertex b = a + 1; b < order; ++b) {
                    if (!used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) edges.emplace_back(a, b, base);
                }
            }
        }
        return EdgeColouredGraph(order, std::move(edges));
    };

    for (int l = 1; l <= 2; ++l) {
        const int roles = 3 * l + 1;
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        // Enumerate injective role placements: permutations of 7, deduplicated on the used prefix.
        std::vector<std::vector<Vertex>> placements;
        do {
            std::vector<Vertex> prefix(perm.begin(), perm.begin() + roles);
            if (placements.empty() || placements.back() != prefix) placements.push_back(std::move(prefix));
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(placements.begin(), placements.end());
        placements.erase(std::unique(placements.begin(), placements.end()), placements.end());

        for (const auto& p : placements) {
            // Roles: w, then (x_i, y_i, z_i) per i.
            const Vertex w = p[0];
            std::vector<Pair> xy;
            std::vector<Vertex> zs;
            for (int i = 0; i < l; ++i) {
                xy.emplace_back(p[static_cast<std::size_t>(1 + 3 * i)], p[static_cast<std::size_t>(2 + 3 * i)]);
                zs.push_back(p[static_cast<std::size_t>(3 + 3 * i)]);
            }
            for (bool padded : {false, true}) {
                const EdgeColouredGraph g = gadget_graph(n, xy, zs, w, padded, 1);
                const Adapter a = adapter_from_parallel_pairs(g, xy, zs, w);
                ++instances;
                if (!verify_adapter(g, a)) fail("parallel pairs rejected, l = " + std::to_string(l));
                if (a.vertices.size() != 3 * a.colours.size() + 1) fail("parallel pairs: |W| != 3|C| + 1");
                if (a.level() != l + 1) fail("parallel pairs: level != l + 1");
            }
        }
    }

    // Unions: an l=1 gadget on {0..3} and an l=2 gadget on {4..10}, every
    // role order inside each block.
    {
        std::array<Vertex, 4> p1{0, 1, 2, 3};
        do {
            std::array<Vertex, 7> p2{4, 5, 6, 7, 8, 9, 10};
            int taken = 0;
            do {
                if (taken++ % 7 != 0) continue;  // a spread of 720 orders of the second block
                std::vector<Edge> edges;
                edges.emplace_back(p1[1], p1[2], 1);
                edges.emplace_back(p1[3], p1[0], 1);
                edges.emplace_back(p2[1], p2[2], 2);
                edges.emplace_back(p2[3], p2[0], 2);
                edges.emplace_back(p2[4], p2[5], 3);
                edges.emplace_back(p2[6], p2[0], 3);
                const EdgeColouredGraph g(11, std::move(edges));
                const std::array<Pair, 1> xy1{Pair{p1[1], p1[2]}};
                const std::array<Vertex, 1> z1{p1[3]};
                const std::array<Pair, 2> xy2{Pair{p2[1], p2[2]}, Pair{p2[4], p2[5]}};
                const std::array<Vertex, 2> z2{p2[3], p2[6]};
                const std::array<Adapter, 2> parts{adapter_from_parallel_pairs(g, xy1, z1, p1[0]),
                                                   adapter_from_parallel_pairs(g, xy2, z2, p2[0])};
                const Adapter u = adapter_union(parts);
                ++instances;
                if (!verify_adapter(g, u)) fail("union rejected");
                if (u.vertices.size() != 11 || u.colours.size() != 3 || u.level() != 3) fail("union size identities");
            } while (std::next_permutation(p2.begin(), p2.end()));
        } while (std::next_permutation(p1.begin(), p1.end()));
    }

    // Absorb: l=1 and l=2 gadgets on {0..3l}, new x, y, z in every order, every w.
    for (int l = 1; l <= 2; ++l) {
        const int base = 3 * l + 1;
        const int order = base + 3;
        std::vector<Pair> xy;
        std::vector<Vertex> zs;
        for (int i = 0; i < l; ++i) {
            xy.emplace_back(1 + 3 * i, 2 + 3 * i);
            zs.push_back(3 + 3 * i);
        }
        std::array<Vertex, 3> fresh{base, base + 1, base + 2};
        do {
            for (Vertex w = 0; w < base; ++w) {
                std::vector<Edge> edges;
                for (int i = 0; i < l; ++i) {
                    edges.emplace_back(xy[static_cast<std::size_t>(i)].first, xy[static_cast<std::size_t>(i)].second, 1 + i);
                    edges.emplace_back(zs[static_cast<std::size_t>(i)], 0, 1 + i);
                }
                const Colour c = 1 + l;
                edges.emplace_back(fresh[0], fresh[1], c);
                edges.emplace_back(fresh[2], w, c);
                const EdgeColouredGraph g(order, std::move(edges));
                const Adapter a = adapter_from_parallel_pairs(g, xy, zs, 0);
                const Adapter b = adapter_absorb(g, a, fresh[0], fresh[1], fresh[2], w);
                ++instances;
                if (!verify_adapter(g, b)) fail("absorb rejected, w = " + std::to_string(w));
                if (b.vertices.size() != a.vertices.size() + 3 || b.colours.size() != a.colours.size() + 1 ||
                    b.level() != a.level() + 1) {
                    fail("absorb size identities");
                }
            }
        } while (std::next_permutation(fresh.begin(), fresh.end()));
    }
    return instances;
}

}  // namespace

std::string to_string(Statement s) {
    for (const auto& [st, name] : kStatementNames) {
        if (st == s) return std::string(name);
    }
    return "unknown";
}

std::optional<Statement> parse_statement(std::string_view name) {
    for (const auto& [st, n] : kStatementNames) {
        if (n == name) return st;
    }
    return std::nullopt;
}

ExhaustiveLimits default_limits(Statement statement) {
    ExhaustiveLimits lim;
    if (statement == Statement::L_general_small) {
        lim.max_order = 4;
        lim.max_colours = 4;
    }
    return lim;
}

TrialReport exhaustive_check(Statement statement, const ExhaustiveLimits& limits) {
    TrialReport r;
    r.theorem = to_string(statement);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.instances = statement == Statement::adapter_props ? check_adapters() : check_extension(statement, limits);
        r.outcome = Outcome::verified;
        r.detail = std::to_string(r.instances) + " instances";
    } catch (const Counterexample& c) {
        r.outcome = Outcome::failed;
        r.detail = c.what;
    } catch (const PreconditionError&) {
        throw;
    } catch (const std::exception& e) {
        r.outcome = Outcome::failed;
        r.detail = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace rainbow
