#include "rainbow/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>

#include "rainbow/decompose.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 6> kModelNames{{
    {Model::uniform, "uniform"},
    {Model::min_colour_degree, "min_colour_degree"},
    {Model::proper, "proper"},
    {Model::bipartite, "bipartite"},
    {Model::sharpness, "sharpness"},
    {Model::mono_budget, "mono_budget"},
}};

constexpr Colour kNone = -1;

// Dense colour matrix used while a generator is still editing the graph.
class Canvas {
public:
    explicit Canvas(int n) : n_(n), colour_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNone) {}

    int order() const { return n_; }
    Colour at(Vertex u, Vertex v) const { return colour_[index(u, v)]; }
    void set(Vertex u, Vertex v, Colour c) { colour_[index(u, v)] = colour_[index(v, u)] = c; }

    int colour_degree(Vertex v) const {
        std::vector<Colour> seen;
        for (Vertex u = 0; u < n_; ++u) {
            if (at(v, u) != kNone) seen.push_back(at(v, u));
        }
        std::sort(seen.begin(), seen.end());
        return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }

    EdgeColouredGraph build() const {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = u + 1; v < n_; ++v) {
                if (at(u, v) != kNone) edges.emplace_back(u, v, at(u, v));
            }
        }
        return EdgeColouredGraph(n_, std::move(edges));
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<Colour> colour_;
};

// Raise colour degrees to k. The lowest deficient vertex gets a fresh
// coloured edge to a random allowed non-neighbour; if it has none, one of its
// repeated-colour edges is recoloured fresh instead. Either way its colour
// degree goes up by one and no other vertex loses any.
void repair_colour_degree(Canvas& c, int k, Colour& fresh, SplitMix64& rng,
                          const std::vector<char>& side /* empty: any pair allowed */) {
    const int n = c.order();
    for (;;) {
        Vertex v = -1;
        for (Vertex x = 0; x < n; ++x) {
            if (c.colour_degree(x) < k) {
                v = x;
                break;
            }
        }
        if (v < 0) return;

        std::vector<Vertex> candidates;
        for (Vertex u = 0; u < n; ++u) {
            if (u == v || c.at(v, u) != kNone) continue;
            if (!side.empty() && side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) continue;
            candidates.push_back(u);
        }
        if (!candidates.empty()) {
            c.set(v, candidates[rng.below(candidates.size())], fresh++);
            continue;
        }
        std::map<Colour, int> count;
        for (Vertex u = 0; u < n; ++u) {
            if (c.at(v, u) != kNone) ++count[c.at(v, u)];
        }
        Vertex target = -1;
        for (Vertex u = 0; u < n && target < 0; ++u) {
            if (c.at(v, u) != kNone && count[c.at(v, u)] > 1) target = u;
        }
        if (target < 0) throw InternalError("colour-degree repair stalled at vertex " + std::to_string(v));
        c.set(v, target, fresh++);
    }
}

Canvas uniform_canvas(const GenSpec& s, SplitMix64& rng) {
    Canvas c(s.n);
    for (Vertex u = 0; u < s.n; ++u) {
        for (Vertex v = u + 1; v < s.n; ++v) {
            if (rng.unit() < s.p) c.set(u, v, static_cast<Colour>(rng.below(static_cast<std::uint64_t>(s.colours))));
        }
    }
    return c;
}

}  // namespace

std::string to_string(Model m) {
    for (const auto& [model, name] : kModelNames) {
        if (model == m) return std::string(name);
    }
    return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
    for (const auto& [model, n] : kModelNames) {
        if (n == name) return model;
    }
    return std::nullopt;
}

void validate(const GenSpec& s) {
    auto fail = [](const std::string& msg) { throw PreconditionError(msg); };
    if (s.n < 0) fail("n must be non-negative");
    if (!(s.p >= 0.0 && s.p <= 1.0)) fail("p must lie in [0, 1]");
    switch (s.model) {
        case Model::uniform:
        case Model::mono_budget:
            if (s.colours < 1) fail("colours must be at least 1");
            if (s.model == Model::mono_budget && s.t < 0) fail("t must be non-negative");
            break;
        case Model::min_colour_degree:
            if (s.colours < 1) fail("colours must be at least 1");
            if (s.k < 0) fail("k must be non-negative");
            if (s.k > 0 && s.n <= s.k) fail("min_colour_degree needs n > k (n = " + std::to_string(s.n) +
                                            ", k = " + std::to_string(s.k) + ")");
            break;
        case Model::bipartite:
            if (s.colours < 1) fail("colours must be at least 1");
            if (s.k < 0) fail("k must be non-negative");
            if (s.k > 0 && s.n / 2 < s.k) fail("bipartite repair needs both parts of size >= k");
            break;
        case Model::proper:
            break;
        case Model::sharpness:
            if (s.t < 0 || s.t >= s.n) fail("sharpness needs 0 <= t < n");
            if ((static_cast<std::int64_t>(s.t) * s.n) % 2 != 0) {
                fail("sharpness needs t * n even (t * n = " + std::to_string(static_cast<std::int64_t>(s.t) * s.n) +
                     ")");
            }
            break;
    }
}

EdgeColouredGraph generate(const GenSpec& s) {
    validate(s);
    SplitMix64 rng(s.seed);
    switch (s.model) {
        case Model::uniform:
            return uniform_canvas(s, rng).build();
        case Model::min_colour_degree: {
            Canvas c = uniform_canvas(s, rng);
            Colour fresh = s.colours;
            repair_colour_degree(c, s.k, fresh, rng, {});
            return c.build();
        }
        case Model::proper: {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (Vertex u = 0; u < s.n; ++u) {
                for (Vertex v = u + 1; v < s.n; ++v) {
                    if (rng.unit() < s.p) pairs.emplace_back(u, v);
                }
            }
            std::vector<Colour> colours = proper_edge_colouring(s.n, pairs);
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i) edges.emplace_back(pairs[i].first, pairs[i].second, colours[i]);
            return EdgeColouredGraph(s.n, std::move(edges));
        }
        case Model::bipartite: {
            const int a = (s.n + 1) / 2;
            std::vector<char> side(static_cast<std::size_t>(s.n), 0);
            for (Vertex v = a; v < s.n; ++v) side[static_cast<std::size_t>(v)] = 1;
            Canvas c(s.n);
            for (Vertex u = 0; u < a; ++u) {
                for (Vertex v = a; v < s.n; ++v) {
                    if (rng.unit() < s.p) c.set(u, v, static_cast<Colour>(rng.below(static_cast<std::uint64_t>(s.colours))));
                }
            }
            Colour fresh = s.colours;
            if (s.k > 0) repair_colour_degree(c, s.k, fresh, rng, side);
            return c.build();
        }
        case Model::sharpness:
            return sharpness_instance(s.t, s.n);
        case Model::mono_budget: {
            Canvas c = uniform_canvas(s, rng);
            for (Vertex v = 0; v < s.n; ++v) {
                for (Colour colour = s.colours - 1; colour >= 0; --colour) {
                    int count = 0;
                    for (Vertex u = 0; u < s.n; ++u) count += c.at(v, u) == colour;
                    for (Vertex u = s.n - 1; u >= 0 && count > s.t; --u) {
                        if (c.at(v, u) == colour) {
                            c.set(v, u, kNone);
                            --count;
                        }
                    }
                }
            }
            return c.build();
        }
    }
    throw InternalError("unknown model");
}

std::vector<Colour> proper_edge_colouring(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : pairs) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t delta = 0;
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        delta = std::max(delta, a.size());
    }
    const std::size_t palette = delta + 1;
    const auto un = static_cast<std::size_t>(n);

    std::vector<int> colour(un * un, -1);           // colour of pair, -1 uncoloured
    std::vector<Vertex> endpoint(un * palette, -1);  // (x, c) -> neighbour along colour c
    auto col = [&](Vertex a, Vertex b) -> int& {
        return colour[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)];
    };
    auto along = [&](Vertex x, int c) -> Vertex& {
        return endpoint[static_cast<std::size_t>(x) * palette + static_cast<std::size_t>(c)];
    };
    auto is_free = [&](Vertex x, int c) { return along(x, c) == -1; };
    auto paint = [&](Vertex a, Vertex b, int c) {
        int old = col(a, b);
        if (old >= 0) along(a, old) = along(b, old) = -1;
        col(a, b) = col(b, a) = c;
        if (c >= 0) {
            along(a, c) = b;
            along(b, c) = a;
        }
    };
    auto first_free = [&](Vertex x) {
        for (std::size_t c = 0; c < palette; ++c) {
            if (is_free(x, static_cast<int>(c))) return static_cast<int>(c);
        }
        throw InternalError("no free colour in palette");
    };

    for (const auto& [u, v] : pairs) {
        // Maximal fan at u starting with v.
        std::vector<Vertex> fan{v};
        std::vector<char> in_fan(un, 0);
        in_fan[static_cast<std::size_t>(v)] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (Vertex w : adj[static_cast<std::size_t>(u)]) {
                if (in_fan[static_cast<std::size_t>(w)] || col(u, w) < 0 || !is_free(fan.back(), col(u, w))) continue;
                fan.push_back(w);
                in_fan[static_cast<std::size_t>(w)] = 1;
                grew = true;
                break;
            }
        }
        const int c = first_free(u);
        const int d = first_free(fan.back());

        // Swap c and d along the cd-path starting at u.
        if (c != d) {
            std::vector<std::tuple<Vertex, Vertex, int>> path;
            Vertex x = u;
            int want = d;
            while (along(x, want) != -1) {
                Vertex y = along(x, want);
                path.emplace_back(x, y, want);
                x = y;
                want = want == d ? c : d;
            }
            for (const auto& [a, b, k] : path) paint(a, b, -1);
            for (const auto& [a, b, k] : path) paint(a, b, k == c ? d : c);
        }

        // First fan vertex with d free whose prefix is still a fan.
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = col(u, fan[i]);
                if (ci < 0 || !is_free(fan[i - 1], ci)) break;
            }
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        if (w == fan.size()) throw InternalError("Misra-Gries: no rotatable fan prefix");

        for (std::size_t i = 0; i < w; ++i) {
            int next = col(u, fan[i + 1]);
            paint(u, fan[i + 1], -1);
            paint(u, fan[i], next);
        }
        paint(u, fan[w], d);
    }

    std::vector<Colour> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) out.push_back(col(u, v));
    return out;
}

}  // namespace rainbow
