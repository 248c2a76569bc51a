#include "rainbow/trials.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "rainbow/errors.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 5> kTheoremNames{{
    {Theorem::T1, "T1"},
    {Theorem::T2, "T2"},
    {Theorem::T3, "T3"},
    {Theorem::L_general, "L_general"},
    {Theorem::P_bipartite, "P_bipartite"},
}};

constexpr std::array<std::pair<Outcome, std::string_view>, 3> kOutcomeNames{{
    {Outcome::verified, "verified"},
    {Outcome::failed, "failed"},
    {Outcome::precondition_unmet, "precondition_unmet"},
}};

constexpr int kTheorem3MinT = 11;

// Hypothesis not met: the trial is skipped, not failed.
struct Unmet {
    std::string why;
};

// Groups trace records by invocation and watches the params strings.
class TraceMonitor {
public:
    void record(const TraceRecord& r) {
        auto [it, fresh] = seen_.try_emplace(r.invocation);
        Seen& s = it->second;
        if (!fresh && !params_less(s.last, r.params)) stats_.params_increasing = false;
        s.last = r.params;
        ++s.iterations;
        stats_.max_iterations = std::max(stats_.max_iterations, s.iterations);
        if (s.iterations > iteration_budget(r.k)) stats_.within_budget = false;
    }

    DriverStats stats() const {
        DriverStats s = stats_;
        s.invocations = static_cast<int>(seen_.size());
        return s;
    }

private:
    struct Seen {
        std::vector<int> last;
        int iterations = 0;
    };
    std::map<int, Seen> seen_;
    DriverStats stats_;
};

void require(bool ok, const std::string& why) {
    if (!ok) throw Unmet{why};
}

void require_min_colour_degree(const EdgeColouredGraph& g, int k) {
    const int dc = g.order() > 0 ? min_colour_degree(g) : 0;
    require(dc >= k, "min colour degree " + std::to_string(dc) + " < k = " + std::to_string(k));
}

// Checks the driver output and, on small graphs, the oracle.
void check_matching(TrialReport& r, const EdgeColouredGraph& g, const Matching& m, int k, const TrialOptions& opt) {
    r.matching = m;
    if (static_cast<int>(m.size()) != k || !is_rainbow_matching(g, m)) {
        r.outcome = Outcome::failed;
        r.detail = "output is not a rainbow matching of size " + std::to_string(k);
        return;
    }
    if (g.order() <= opt.oracle_max_order) {
        r.oracle_size = max_rainbow_matching_exact(g).size;
        if (*r.oracle_size < k) {
            r.outcome = Outcome::failed;
            r.detail = "oracle maximum " + std::to_string(*r.oracle_size) + " < k";
            return;
        }
    }
    r.outcome = Outcome::verified;
}

DriverOptions monitored(TraceMonitor& monitor, const TrialOptions& opt) {
    DriverOptions d;
    d.trace = [&monitor](const TraceRecord& t) { monitor.record(t); };
    d.check_invariants = opt.check_invariants;
    return d;
}

void trial_t1(TrialReport& r, const GenSpec& spec, const TrialOptions& opt) {
    const EdgeColouredGraph g = generate(spec);
    const int k = spec.k;
    require(k >= 1, "k must be at least 1");
    const std::int64_t lhs = 2 * static_cast<std::int64_t>(g.order());
    require(lhs >= 7 * static_cast<std::int64_t>(k) + 4,
            "2n = " + std::to_string(lhs) + " < 7k + 4 = " + std::to_string(7 * k + 4));
    require_min_colour_degree(g, k);

    TraceMonitor monitor;
    const Matching m = theorem1(g, k, monitored(monitor, opt));
    r.driver = monitor.stats();
    check_matching(r, g, m, k, opt);
}

void trial_t2(TrialReport& r, const GenSpec& spec, const TrialOptions& opt) {
    const EdgeColouredGraph g = generate(spec);
    const int k = spec.k;
    const Rational eps = spec.epsilon;
    require(k >= 1, "k must be at least 1");
    require(eps > Rational(0) && eps <= Rational(1, 2), "epsilon must lie in (0, 1/2]");
    require(bipartition(g).has_value(), "graph is not bipartite");
    const Rational bound = (Rational(3) + eps) * Rational(k) + Rational(1) / (eps * eps);
    require(Rational(g.order()) >= bound,
            "n = " + std::to_string(g.order()) + " < (3 + eps)k + eps^-2 = " + to_string(bound));
    require_min_colour_degree(g, k);

    TraceMonitor monitor;
    const Matching m = theorem2(g, k, eps, monitored(monitor, opt));
    r.driver = monitor.stats();
    check_matching(r, g, m, k, opt);
}

void trial_t3(TrialReport& r, const GenSpec& spec) {
    const EdgeColouredGraph g = generate(spec);
    const int t = spec.t;
    require(t >= kTheorem3MinT, "t = " + std::to_string(t) + " < 11");
    const int mono = mono_max_degree(g);
    require(mono <= t, "mono_max_degree = " + std::to_string(mono) + " > t = " + std::to_string(t));

    Decomposition d = decompose(g, t);
    const bool ok = verify_decomposition(g, d) &&
                    static_cast<std::int64_t>(d.parts.size()) == decomposition_size(t, g.order()) &&
                    d.nonempty_parts() >= cover_lower_bound(g);
    r.outcome = ok ? Outcome::verified : Outcome::failed;
    if (!ok) r.detail = "decomposition failed verification";
    r.decomposition = std::move(d);
}

void trial_extension(TrialReport& r, const GenSpec& spec, Family family) {
    const EdgeColouredGraph g = generate(spec);
    const int k = spec.k;
    require(k >= 1, "k must be at least 1");
    const int need = family == Family::general ? 3 * (k - 1) + 1 : 2 * k;
    require(g.order() >= need, "|G| = " + std::to_string(g.order()) + " < " + std::to_string(need));
    if (family == Family::bipartite) require(bipartition(g).has_value(), "graph is not bipartite");

    RainbowMatchingResult best = max_rainbow_matching_exact(g);
    r.oracle_size = best.size;
    require(best.size >= k - 1, "no rainbow matching of size k-1");
    Matching m(best.matching.begin(), best.matching.begin() + (k - 1));

    const VertexSet covered = vertices_of(m);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (std::binary_search(covered.begin(), covered.end(), v)) continue;
        const int d = colour_degree(g, v);
        require(d >= k, "vertex " + std::to_string(v) + " outside M has colour degree " + std::to_string(d) + " < k");
    }

    ExtensionResult e = family == Family::general ? general_extend(g, m, k) : bipartite_extend(g, m, k);
    r.outcome = is_valid_extension(g, e, k) ? Outcome::verified : Outcome::failed;
    if (r.outcome == Outcome::failed) r.detail = "invalid extension result";
    r.extension = std::move(e);
}

template <class F>
std::vector<TrialReport> parallel_map(int count, int jobs, F&& body) {
    std::vector<TrialReport> out(static_cast<std::size_t>(std::max(count, 0)));
    if (count <= 0) return out;
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, static_cast<unsigned>(count));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < count; i = next++) out[static_cast<std::size_t>(i)] = body(i);
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    return out;
}

}  // namespace

std::string to_string(Theorem t) {
    for (const auto& [th, name] : kTheoremNames) {
        if (th == t) return std::string(name);
    }
    return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
    for (const auto& [th, n] : kTheoremNames) {
        if (n == name) return th;
    }
    return std::nullopt;
}

std::string to_string(Outcome o) {
    for (const auto& [oc, name] : kOutcomeNames) {
        if (oc == o) return std::string(name);
    }
    return "unknown";
}

std::optional<Outcome> parse_outcome(std::string_view name) {
    for (const auto& [oc, n] : kOutcomeNames) {
        if (n == name) return oc;
    }
    return std::nullopt;
}

TrialReport run_trial(Theorem theorem, const GenSpec& spec, const TrialOptions& options) {
    TrialReport r;
    r.theorem = to_string(theorem);
    r.spec = spec;
    const auto start = std::chrono::steady_clock::now();
    try {
        validate(spec);
    } catch (const PreconditionError& e) {
        r.outcome = Outcome::precondition_unmet;
        r.detail = e.what();
        return r;
    }
    try {
        switch (theorem) {
            case Theorem::T1: trial_t1(r, spec, options); break;
            case Theorem::T2: trial_t2(r, spec, options); break;
            case Theorem::T3: trial_t3(r, spec); break;
            case Theorem::L_general: trial_extension(r, spec, Family::general); break;
            case Theorem::P_bipartite: trial_extension(r, spec, Family::bipartite); break;
        }
    } catch (const Unmet& u) {
        r.outcome = Outcome::precondition_unmet;
        r.detail = u.why;
    } catch (const std::exception& e) {
        // Hypotheses were checked above, so anything thrown now is a failure.
        r.outcome = Outcome::failed;
        r.detail = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

GenSpec sample_spec(Theorem theorem, std::uint64_t seed) {
    SplitMix64 rng(seed);
    GenSpec s;
    s.seed = rng.next();
    switch (theorem) {
        case Theorem::T1:
            s.model = Model::min_colour_degree;
            s.k = rng.between(2, 4);
            s.n = (7 * s.k + 5) / 2 + rng.between(0, 4);
            s.colours = rng.between(s.k, s.k + 2);
            s.p = 0.3 + 0.6 * rng.unit();
            break;
        case Theorem::T2:
            s.model = Model::bipartite;
            s.k = rng.between(2, 3);
            s.epsilon = Rational(1, 2);
            s.n = (7 * s.k + 9) / 2 + rng.between(0, 4);
            s.colours = rng.between(s.k, s.k + 2);
            s.p = 0.4 + 0.5 * rng.unit();
            break;
        case Theorem::T3:
            s.model = Model::mono_budget;
            s.n = rng.between(5, 40);
            s.t = rng.between(11, 13);
            s.colours = rng.between(1, 4);
            s.p = 0.3 + 0.7 * rng.unit();
            break;
        case Theorem::L_general:
            s.model = Model::min_colour_degree;
            s.k = rng.between(2, 4);
            s.n = 3 * s.k - 2 + rng.between(0, 3);
            s.colours = rng.between(s.k, s.k + 2);
            s.p = 0.3 + 0.6 * rng.unit();
            break;
        case Theorem::P_bipartite:
            s.model = Model::bipartite;
            s.k = rng.between(2, 4);
            s.n = 2 * s.k + rng.between(0, 3);
            s.colours = rng.between(s.k, s.k + 2);
            s.p = 0.3 + 0.6 * rng.unit();
            break;
    }
    return s;
}

std::vector<TrialReport> run_batch(Theorem theorem, int count, std::uint64_t seed, int jobs,
                                   const TrialOptions& options) {
    return parallel_map(count, jobs, [&](int i) {
        return run_trial(theorem, sample_spec(theorem, derive_seed(seed, static_cast<std::uint64_t>(i))), options);
    });
}

TrialReport run_adapter_trial(std::uint64_t seed) {
    TrialReport r;
    r.theorem = "adapters";
    r.instances = 3;
    const auto start = std::chrono::steady_clock::now();
    try {
        SplitMix64 rng(seed);
        const int l1 = rng.between(1, 4);
        const int l2 = rng.between(1, 4);
        const int extra = rng.between(0, 3);
        const int n = 3 * l1 + 1 + 3 * l2 + 1 + 3 + extra;

        // Random labels so roles land on arbitrary vertex ids.
        std::vector<Vertex> label(static_cast<std::size_t>(n));
        std::iota(label.begin(), label.end(), 0);
        for (std::size_t i = label.size(); i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
        int cursor = 0;
        auto fresh_vertex = [&] { return label[static_cast<std::size_t>(cursor++)]; };

        std::vector<Colour> palette(static_cast<std::size_t>(l1 + l2 + 1));
        std::iota(palette.begin(), palette.end(), 0);
        for (Colour& c : palette) c = c * 3 + static_cast<Colour>(rng.below(3));
        int next_colour = 0;

        std::map<std::pair<Vertex, Vertex>, Colour> edges;
        auto add = [&](Vertex a, Vertex b, Colour c) { edges[{std::min(a, b), std::max(a, b)}] = c; };

        struct Gadget {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            std::vector<Vertex> zs;
            Vertex w = -1;
        };
        auto gadget = [&](int l) {
            Gadget gd;
            gd.w = fresh_vertex();
            for (int i = 0; i < l; ++i) {
                Vertex x = fresh_vertex(), y = fresh_vertex(), z = fresh_vertex();
                Colour c = palette[static_cast<std::size_t>(next_colour++)];
                add(x, y, c);
                add(z, gd.w, c);
                gd.pairs.emplace_back(x, y);
                gd.zs.push_back(z);
            }
            return gd;
        };
        Gadget a = gadget(l1);
        Gadget b = gadget(l2);
        const Vertex x = fresh_vertex(), y = fresh_vertex(), z = fresh_vertex();
        const Colour c_new = palette[static_cast<std::size_t>(next_colour++)];
        add(x, y, c_new);
        // w is chosen after the union exists; record the colour for now.

        // Noise on unused pairs, with colours that may collide with the gadgets'.
        const double density = rng.unit() * 0.5;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.unit() < density && !edges.contains({u, v})) {
                    edges.emplace(std::pair{u, v}, static_cast<Colour>(rng.below(palette.size() * 3)));
                }
            }
        }
        std::vector<Vertex> union_vertices;
        for (const Gadget* gd : {&a, &b}) {
            union_vertices.push_back(gd->w);
            for (const auto& [p, q] : gd->pairs) union_vertices.insert(union_vertices.end(), {p, q});
            union_vertices.insert(union_vertices.end(), gd->zs.begin(), gd->zs.end());
        }
        const Vertex w = union_vertices[rng.below(union_vertices.size())];
        edges[{std::min(z, w), std::max(z, w)}] = c_new;

        std::vector<Edge> list;
        for (const auto& [p, c] : edges) list.emplace_back(p.first, p.second, c);
        const EdgeColouredGraph g(n, std::move(list));

        std::string failure;
        auto check = [&](bool ok, const std::string& what) {
            if (!ok && failure.empty()) failure = what;
        };
        const Adapter aa = adapter_from_parallel_pairs(g, a.pairs, a.zs, a.w);
        const Adapter ab = adapter_from_parallel_pairs(g, b.pairs, b.zs, b.w);
        for (const Adapter* ad : {&aa, &ab}) {
            check(verify_adapter(g, *ad), "parallel pairs: verify_adapter rejected the output");
            check(ad->vertices.size() == 3 * ad->colours.size() + 1, "parallel pairs: |W| != 3|C| + 1");
            check(ad->level() == static_cast<int>(ad->colours.size()) + 1, "parallel pairs: level != |C| + 1");
        }
        const std::array<Adapter, 2> both{aa, ab};
        const Adapter un = adapter_union(both);
        check(verify_adapter(g, un), "union: verify_adapter rejected the output");
        check(un.vertices.size() == aa.vertices.size() + ab.vertices.size(), "union: |W| is not additive");
        check(un.colours.size() == aa.colours.size() + ab.colours.size(), "union: |C| is not additive");
        check(un.level() == std::max(aa.level(), ab.level()), "union: level is not the maximum");

        const Adapter grown = adapter_absorb(g, un, x, y, z, w);
        check(verify_adapter(g, grown), "absorb: verify_adapter rejected the output");
        check(grown.vertices.size() == un.vertices.size() + 3, "absorb: |W| did not grow by 3");
        check(grown.colours.size() == un.colours.size() + 1, "absorb: |C| did not grow by 1");
        check(grown.level() == un.level() + 1, "absorb: level did not grow by 1");

        r.outcome = failure.empty() ? Outcome::verified : Outcome::failed;
        r.detail = failure.empty() ? "l = (" + std::to_string(l1) + ", " + std::to_string(l2) + ")"
                                   : failure + " (seed " + std::to_string(seed) + ")";
    } catch (const std::exception& e) {
        r.outcome = Outcome::failed;
        r.detail = std::string(e.what()) + " (seed " + std::to_string(seed) + ")";
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<TrialReport> run_adapter_batch(int count, std::uint64_t seed, int jobs) {
    return parallel_map(count, jobs,
                        [&](int i) { return run_adapter_trial(derive_seed(seed, static_cast<std::uint64_t>(i))); });
}

}  // namespace rainbow
