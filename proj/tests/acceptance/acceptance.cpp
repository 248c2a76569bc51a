// Release gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every comparison is exact; there are no floating-point tolerances.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "brute.hpp"
#include "rainbow/adapter.hpp"
#include "rainbow/decompose.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extend.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/random.hpp"
#include "rainbow/trials.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << secs << " s) " << v.note.str()
              << std::endl;
}

int count(const std::vector<TrialReport>& reports, Outcome o) {
    int c = 0;
    for (const auto& r : reports) c += r.outcome == o;
    return c;
}

// 1: decompositions of bounded-monochromatic-degree graphs.
void mono_budget_sweep(Verdict& v) {
    for (std::uint64_t i = 0; i < 500; ++i) {
        SplitMix64 rng(derive_seed(kSeed, i));
        GenSpec s;
        s.model = Model::mono_budget;
        s.n = rng.between(5, 40);
        s.t = rng.between(11, 13);
        s.colours = rng.between(1, 4);
        s.p = 0.3 + 0.7 * rng.unit();
        s.seed = rng.next();
        const auto g = generate(s);
        v.require(mono_max_degree(g) <= s.t, "generator exceeded the budget: " + spec_to_json(s));
        const auto d = decompose(g, s.t);
        v.require(verify_decomposition(g, d), "verify_decomposition: " + spec_to_json(s));
        v.require(static_cast<std::int64_t>(d.parts.size()) == static_cast<std::int64_t>(s.t) * s.n / 2,
                  "part count: " + spec_to_json(s));
    }
    v.note << "500/500 decomposed and verified; ";
}

void sharpness(Verdict& v) {
    const auto g = sharpness_instance(11, 12);
    const auto d = decompose(g, 11);
    v.require(verify_decomposition(g, d), "verify");
    v.require(d.nonempty_parts() == 66, "nonempty parts " + std::to_string(d.nonempty_parts()));
    v.require(cover_lower_bound(g) == 66, "lower bound " + std::to_string(cover_lower_bound(g)));
    v.require(decomposition_size(11, 12) == 66, "floor(tn/2)");
    v.note << "nonempty = lower bound = 66; ";
}

std::vector<TrialReport> t1_reports;

void t1_sweep(Verdict& v) {
    TrialOptions o;
    o.oracle_max_order = 14;
    t1_reports = run_batch(Theorem::T1, 500, kSeed, 0, o);
    int small = 0;
    for (const auto& r : t1_reports) {
        const GenSpec& s = *r.spec;
        v.require(s.model == Model::min_colour_degree && s.k >= 2 && s.k <= 4 && 2 * s.n >= 7 * s.k + 4,
                  "sample outside the criterion's range: " + spec_to_json(s));
        v.require(r.outcome == Outcome::verified, "outcome " + to_string(r.outcome) + ": " + r.detail);
        if (r.outcome != Outcome::verified) continue;
        const auto g = generate(s);
        v.require(r.matching && static_cast<int>(r.matching->size()) == s.k && is_rainbow_matching(g, *r.matching),
                  "witness does not re-verify: " + spec_to_json(s));
        if (s.n <= 14) {
            ++small;
            v.require(r.oracle_size && *r.oracle_size >= s.k, "oracle below k: " + spec_to_json(s));
        }
    }
    v.note << count(t1_reports, Outcome::verified) << "/500 verified, oracle-confirmed on " << small << "; ";
}

void t2_sweep(Verdict& v) {
    const auto reports = run_batch(Theorem::T2, 300, kSeed, 0);
    for (const auto& r : reports) {
        const GenSpec& s = *r.spec;
        v.require(s.epsilon == Rational(1, 2) && s.k >= 2 && s.k <= 3 &&
                      Rational(s.n) >= Rational(7, 2) * Rational(s.k) + Rational(4),
                  "sample outside the criterion's range: " + spec_to_json(s));
        v.require(r.outcome == Outcome::verified, "outcome " + to_string(r.outcome) + ": " + r.detail);
        if (r.outcome != Outcome::verified) continue;
        const auto g = generate(s);
        v.require(bipartition(g).has_value(), "not bipartite");
        v.require(r.matching && static_cast<int>(r.matching->size()) == s.k && is_rainbow_matching(g, *r.matching),
                  "witness does not re-verify: " + spec_to_json(s));
    }
    v.note << count(reports, Outcome::verified) << "/300 verified; ";
}

void exhaustive_lemmas(Verdict& v) {
    ExhaustiveLimits bip;
    bip.max_order = 6;
    bip.k = 2;
    bip.max_colours = 3;
    const auto b = exhaustive_check(Statement::P_bipartite_small, bip);
    v.require(b.outcome == Outcome::verified, "bipartite: " + b.detail);

    ExhaustiveLimits gen = default_limits(Statement::L_general_small);
    gen.max_order = 4;
    gen.k = 2;
    const auto g = exhaustive_check(Statement::L_general_small, gen);
    v.require(g.outcome == Outcome::verified, "general: " + g.detail);
    v.note << b.instances << " bipartite and " << g.instances << " general instances, 0 counterexamples; ";
}

void adapters(Verdict& v) {
    const auto randomized = run_adapter_batch(1000, kSeed, 0);
    v.require(count(randomized, Outcome::verified) == 1000, "randomized gadget sweep");
    for (const auto& r : randomized) {
        if (r.outcome != Outcome::verified) {
            v.require(false, r.detail);
            break;
        }
    }
    const auto exhaustive = exhaustive_check(Statement::adapter_props);
    v.require(exhaustive.outcome == Outcome::verified, "exhaustive: " + exhaustive.detail);
    v.note << "1000 randomized + " << exhaustive.instances << " exhaustive constructions; ";
}

void oracles(Verdict& v) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        SplitMix64 rng(derive_seed(kSeed + 7, i));
        BipartiteAssignment b;
        b.right = rng.between(1, 10);
        b.adjacency.resize(static_cast<std::size_t>(rng.between(1, 10)));
        const double p = 0.1 + 0.5 * rng.unit();
        for (auto& row : b.adjacency) {
            for (int s = 0; s < b.right; ++s) {
                if (rng.unit() < p) row.push_back(s);
            }
        }
        max_bipartite_matching(b);
        v.require(b.matched() == brute::max_assignment(b), "Hopcroft-Karp differs from brute force");
    }
    std::vector<Edge> k4{{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}};
    v.require(max_rainbow_matching_exact(EdgeColouredGraph(4, k4)).size == 1, "properly 3-coloured K_4");
    std::vector<Edge> c4{{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {0, 3, 4}};
    v.require(max_rainbow_matching_exact(EdgeColouredGraph(4, c4)).size == 2, "rainbow C_4");
    v.note << "200/200 bipartite matchings exact; K_4 -> 1, C_4 -> 2; ";
}

int shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void determinism(Verdict& v) {
    const fs::path dir = fs::temp_directory_path() / "rainbow_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = std::string("\"") + RAINBOW_CLI + "\"";
    auto p = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };

    for (int run = 0; run < 2; ++run) {
        const std::string r = std::to_string(run);
        v.require(shell(cli + " gen --model min_colour_degree --n 30 --k 8 --colours 8 --seed 7 --out " + p("g" + r + ".ecg")) == 0,
                  "gen");
        v.require(shell(cli + " gen --model mono_budget --n 30 --t 11 --colours 3 --p 0.9 --seed 7 --out " +
                        p("m" + r + ".ecg")) == 0,
                  "gen mono_budget");
        v.require(shell(cli + " solve --input " + p("g0.ecg") + " --k 8 --trace " + p("trace" + r + ".jsonl") +
                        " --out " + p("s" + r + ".json")) == 0,
                  "solve");
        v.require(shell(cli + " decompose --input " + p("m0.ecg") + " --t 11 --out " + p("d" + r + ".json")) == 0,
                  "decompose");
    }
    for (const std::string stem : {"g", "m", "s", "d", "trace"}) {
        const std::string ext = stem == "g" || stem == "m" ? ".ecg" : stem == "trace" ? ".jsonl" : ".json";
        const auto a = read_file(dir / (stem + "0" + ext));
        const auto b = read_file(dir / (stem + "1" + ext));
        v.require(!a.empty() && a == b, stem + ext + " differs between runs");
    }
    fs::remove_all(dir);
    v.note << "gen/solve/decompose outputs byte-identical across two runs; ";
}

void driver_sanity(Verdict& v) {
    v.require(t1_reports.size() == 500, "criterion 3 sweep missing");
    int max_iterations = 0;
    int invocations = 0;
    for (const auto& r : t1_reports) {
        v.require(r.driver.has_value(), "no driver stats");
        if (!r.driver) continue;
        v.require(r.driver->params_increasing, "params not strictly increasing: " + spec_to_json(*r.spec));
        v.require(r.driver->within_budget, "iteration budget exceeded: " + spec_to_json(*r.spec));
        max_iterations = std::max(max_iterations, r.driver->max_iterations);
        invocations += r.driver->invocations;
    }
    v.note << invocations << " invocations, at most " << max_iterations << " iterations each; ";
}

}  // namespace

int main() {
    criterion(1, "mono_budget decomposition sweep", mono_budget_sweep);
    criterion(2, "sharpness instance is tight", sharpness);
    criterion(3, "colour-degree matching sweep", t1_sweep);
    criterion(4, "bipartite matching sweep", t2_sweep);
    criterion(5, "exhaustive extension lemmas", exhaustive_lemmas);
    criterion(6, "adapter algebra", adapters);
    criterion(7, "oracle cross-validation", oracles);
    criterion(8, "CLI determinism", determinism);
    criterion(9, "driver sanity", driver_sanity);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
