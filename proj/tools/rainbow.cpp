// rainbow: command-line front end for the rainbow matching library.
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 precondition violated,
// 3 internal error, 4 Hall failure in decompose, 5 verification failed.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/decompose.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extend.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/trials.hpp"

namespace {

using namespace rainbow;
using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, io_error = 1, precondition = 2, internal = 3, hall = 4, unverified = 5 };

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << std::flush;
    } else {
        write_file(path, text);
    }
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return precondition;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return io_error;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return io_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
}

struct SolveArgs {
    std::string input, out, trace, epsilon = "1/2";
    int k = 0;
    bool bipartite = false, no_verify = false;
};

int solve(const SolveArgs& a) {
    const EdgeColouredGraph g = load_graph(a.input);
    std::ofstream trace_file;
    DriverOptions opts;
    if (!a.trace.empty()) {
        trace_file.open(a.trace, std::ios::binary | std::ios::trunc);
        if (!trace_file) throw std::runtime_error("cannot write '" + a.trace + "'");
        opts.trace = [&trace_file](const TraceRecord& r) { trace_file << trace_to_json(r) << '\n'; };
    }
    const Matching m = a.bipartite ? theorem2(g, a.k, parse_rational(a.epsilon), opts) : theorem1(g, a.k, opts);
    bool verified = false;
    if (!a.no_verify) {
        verified = static_cast<int>(m.size()) == a.k && is_rainbow_matching(g, m);
        if (!verified) throw InternalError("solver output failed verification");
    }
    Json out{{"k", a.k}, {"matching", Json::parse(matching_to_json(m))}, {"verified", verified}};
    emit(a.out, out.dump() + "\n");
    return ok;
}

struct DecomposeArgs {
    std::string input, out;
    int t = 0;
    bool keep_completion = false, no_verify = false;
};

int decompose_cmd(const DecomposeArgs& a) {
    const EdgeColouredGraph g = load_graph(a.input);
    try {
        const Decomposition d = decompose(g, a.t, a.keep_completion);
        if (!a.no_verify && !verify_decomposition(d.host, d)) {
            throw InternalError("decomposition failed verification");
        }
        emit(a.out, decomposition_to_json(d) + "\n");
        return ok;
    } catch (const HallFailure& h) {
        std::cerr << "Hall failure: " << h.what() << '\n';
        emit(a.out, hall_failure_to_json(h) + "\n");
        return hall;
    }
}

struct VerifyArgs {
    std::string input, parts, matching;
    int k = 0;
};

int verify_cmd(const VerifyArgs& a) {
    const EdgeColouredGraph g = load_graph(a.input);
    if (!a.parts.empty()) {
        DecompositionFile f = decomposition_from_json(read_file(a.parts));
        if (f.n != g.order()) {
            std::cerr << "decomposition is for n = " << f.n << " but the graph has " << g.order() << " vertices\n";
            return unverified;
        }
        for (const Matching& m : f.parts) {
            for (const Edge& e : m) {
                if (!g.has_edge(e)) {
                    std::cerr << "edge (" << e.u << ", " << e.v << ", " << e.colour << ") is not in the graph\n";
                    return unverified;
                }
            }
        }
        const Decomposition d{g, f.t, std::move(f.parts)};
        if (!verify_decomposition(g, d)) {
            std::cerr << "not a decomposition into " << decomposition_size(f.t, g.order())
                      << " edge-disjoint rainbow matchings covering the graph\n";
            return unverified;
        }
        std::cerr << "decomposition verified\n";
        return ok;
    }
    const Matching m = matching_from_json(read_file(a.matching));
    for (const Edge& e : m) {
        if (!g.has_edge(e)) {
            std::cerr << "edge (" << e.u << ", " << e.v << ", " << e.colour << ") is not in the graph\n";
            return unverified;
        }
    }
    if (!is_rainbow_matching(g, m)) {
        std::cerr << "not a rainbow matching\n";
        return unverified;
    }
    if (static_cast<int>(m.size()) < a.k) {
        std::cerr << "matching has " << m.size() << " edges, fewer than k = " << a.k << '\n';
        return unverified;
    }
    std::cerr << "rainbow matching of size " << m.size() << " verified\n";
    return ok;
}

struct GenArgs {
    std::string spec, model = "uniform", epsilon = "1/2", out;
    GenSpec values;
};

int gen(const GenArgs& a) {
    GenSpec s;
    if (!a.spec.empty()) {
        s = spec_from_json(a.spec.front() == '{' ? a.spec : read_file(a.spec));
    } else {
        s = a.values;
        const auto model = parse_model(a.model);
        if (!model) throw std::invalid_argument("unknown model '" + a.model + "'");
        s.model = *model;
        s.epsilon = parse_rational(a.epsilon);
    }
    const EdgeColouredGraph g = generate(s);
    if (a.out.empty()) {
        write_ecg(std::cout, g);
    } else {
        save_graph(a.out, g);
    }
    return ok;
}

int oracle_cmd(const std::string& input, const std::string& out) {
    const EdgeColouredGraph g = load_graph(input);
    const RainbowMatchingResult r = max_rainbow_matching_exact(g);
    emit(out, Json{{"size", r.size}, {"matching", Json::parse(matching_to_json(r.matching))}}.dump() + "\n");
    return ok;
}

struct CheckArgs {
    std::string suite = "all", out;
    int trials = 100, jobs = 0;
    std::uint64_t seed = 1;
};

std::vector<TrialReport> run_suite(const CheckArgs& a) {
    std::vector<TrialReport> all;
    auto append = [&](std::vector<TrialReport> more) {
        all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    const std::string& s = a.suite;
    if (s == "T1" || s == "all") append(run_batch(Theorem::T1, a.trials, a.seed, a.jobs));
    if (s == "T2" || s == "all") append(run_batch(Theorem::T2, a.trials, a.seed, a.jobs));
    if (s == "T3" || s == "all") append(run_batch(Theorem::T3, a.trials, a.seed, a.jobs));
    if (s == "lemmas" || s == "all") {
        append(run_batch(Theorem::L_general, a.trials, a.seed, a.jobs));
        append(run_batch(Theorem::P_bipartite, a.trials, a.seed, a.jobs));
        for (Statement st : {Statement::L_general_small, Statement::P_bipartite_small}) {
            all.push_back(exhaustive_check(st, default_limits(st)));
        }
    }
    if (s == "adapters" || s == "all") {
        all.push_back(exhaustive_check(Statement::adapter_props));
        append(run_adapter_batch(a.trials, a.seed, a.jobs));
    }
    return all;
}

int check(const CheckArgs& a) {
    const std::vector<TrialReport> reports = run_suite(a);
    std::string lines;
    std::int64_t counts[3] = {0, 0, 0};
    for (const TrialReport& r : reports) {
        lines += report_to_json(r) + "\n";
        ++counts[static_cast<int>(r.outcome)];
        if (r.outcome == Outcome::failed) {
            std::cerr << "FAILED " << r.theorem << ": " << r.detail << '\n';
            if (r.spec) std::cerr << "  reproduce with --spec '" << spec_to_json(*r.spec) << "'\n";
        }
    }
    emit(a.out, lines);
    std::cerr << "summary: suite=" << a.suite << " reports=" << reports.size() << " verified=" << counts[0]
              << " failed=" << counts[1] << " precondition_unmet=" << counts[2] << '\n';
    return counts[1] == 0 ? ok : unverified;
}

int bench(const CheckArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<TrialReport> reports = run_suite(a);
    const double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    double total = 0, worst = 0;
    std::int64_t failed = 0;
    for (const TrialReport& r : reports) {
        total += r.elapsed_ms;
        worst = std::max(worst, r.elapsed_ms);
        failed += r.outcome == Outcome::failed;
    }
    Json out{{"suite", a.suite},
             {"reports", reports.size()},
             {"wall_ms", wall},
             {"mean_ms", reports.empty() ? 0.0 : total / static_cast<double>(reports.size())},
             {"max_ms", worst},
             {"failed", failed}};
    emit(a.out, out.dump() + "\n");
    return failed == 0 ? ok : unverified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow matchings in edge-coloured graphs"};
    app.require_subcommand(1);
    int rc = ok;

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Find a rainbow matching of size k");
    solve_cmd->add_option("--input", sa.input, "Graph file (.ecg or .json)")->required();
    solve_cmd->add_option("--k", sa.k, "Matching size")->required();
    solve_cmd->add_flag("--bipartite", sa.bipartite, "Use the bipartite bound (n >= (3 + eps)k + eps^-2)");
    solve_cmd->add_option("--epsilon", sa.epsilon, "Exact fraction p/q in (0, 1/2]")->capture_default_str();
    solve_cmd->add_option("--trace", sa.trace, "Write one JSON line per driver iteration");
    solve_cmd->add_option("--out", sa.out, "Output file (default stdout)");
    solve_cmd->add_flag("--no-verify", sa.no_verify, "Skip re-verification of the output");
    solve_cmd->callback([&] { rc = guarded([&] { return solve(sa); }); });

    DecomposeArgs da;
    auto* dec_cmd = app.add_subcommand("decompose", "Decompose into floor(tn/2) rainbow matchings");
    dec_cmd->add_option("--input", da.input, "Graph file")->required();
    dec_cmd->add_option("--t", da.t, "Monochromatic degree budget")->required();
    dec_cmd->add_flag("--keep-completion", da.keep_completion, "Keep the fresh-colour completion edges");
    dec_cmd->add_option("--out", da.out, "Output file (default stdout)");
    dec_cmd->add_flag("--no-verify", da.no_verify, "Skip re-verification of the output");
    dec_cmd->callback([&] { rc = guarded([&] { return decompose_cmd(da); }); });

    VerifyArgs va;
    auto* ver_cmd = app.add_subcommand("verify", "Check a decomposition or a matching against a graph");
    ver_cmd->add_option("--input", va.input, "Graph file")->required();
    auto* parts_opt = ver_cmd->add_option("--parts", va.parts, "Decomposition JSON");
    auto* match_opt = ver_cmd->add_option("--matching", va.matching, "Matching JSON");
    auto* k_opt = ver_cmd->add_option("--k", va.k, "Required matching size");
    parts_opt->excludes(match_opt);
    match_opt->needs(k_opt);
    ver_cmd->callback([&] {
        if (va.parts.empty() && va.matching.empty()) throw CLI::RequiredError("--parts or --matching");
        rc = guarded([&] { return verify_cmd(va); });
    });

    GenArgs ga;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
    gen_cmd->add_option("--spec", ga.spec, "GenSpec JSON (file path or inline object)");
    gen_cmd->add_option("--model", ga.model, "uniform|min_colour_degree|proper|bipartite|sharpness|mono_budget")
        ->capture_default_str();
    gen_cmd->add_option("--n", ga.values.n, "Vertex count");
    gen_cmd->add_option("--k", ga.values.k, "Colour-degree target");
    gen_cmd->add_option("--t", ga.values.t, "Monochromatic degree budget / regularity");
    gen_cmd->add_option("--epsilon", ga.epsilon, "Exact fraction p/q")->capture_default_str();
    gen_cmd->add_option("--p", ga.values.p, "Edge probability")->capture_default_str();
    gen_cmd->add_option("--colours", ga.values.colours, "Colour count")->capture_default_str();
    gen_cmd->add_option("--seed", ga.values.seed, "64-bit seed")->capture_default_str();
    gen_cmd->add_option("--out", ga.out, "Output file, .ecg or .json (default: ecg on stdout)");
    gen_cmd->callback([&] { rc = guarded([&] { return gen(ga); }); });

    std::string oracle_input, oracle_out;
    auto* oracle = app.add_subcommand("oracle", "Exact maximum rainbow matching (exponential)");
    oracle->add_option("--input", oracle_input, "Graph file")->required();
    oracle->add_option("--out", oracle_out, "Output file (default stdout)");
    oracle->callback([&] { rc = guarded([&] { return oracle_cmd(oracle_input, oracle_out); }); });

    CheckArgs ca;
    auto* check_cmd = app.add_subcommand("check", "Run seeded theorem trials and exhaustive checks (JSONL)");
    auto* bench_cmd = app.add_subcommand("bench", "Time a suite; one JSON summary line");
    for (auto* cmd : {check_cmd, bench_cmd}) {
        cmd->add_option("--suite", ca.suite, "T1|T2|T3|lemmas|adapters|all")
            ->check(CLI::IsMember({"T1", "T2", "T3", "lemmas", "adapters", "all"}))
            ->capture_default_str();
        cmd->add_option("--trials", ca.trials, "Trials per randomized batch")->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        cmd->add_option("--seed", ca.seed, "Base seed")->capture_default_str();
        cmd->add_option("--jobs", ca.jobs, "Worker threads (0: logical cores)")->capture_default_str();
        cmd->add_option("--out", ca.out, "Output file (default stdout)");
    }
    check_cmd->callback([&] { rc = guarded([&] { return check(ca); }); });
    bench_cmd->callback([&] { rc = guarded([&] { return bench(ca); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : io_error;
    }
    return rc;
}
