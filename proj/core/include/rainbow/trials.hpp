#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/decompose.hpp"
#include "rainbow/extend.hpp"
#include "rainbow/generate.hpp"

namespace rainbow {

enum class Theorem { T1, T2, T3, L_general, P_bipartite };

std::string to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

enum class Outcome { verified, failed, precondition_unmet };

std::string to_string(Outcome o);
std::optional<Outcome> parse_outcome(std::string_view name);

/// Driver behaviour observed through the trace during one trial.
struct DriverStats {
    int invocations = 0;
    int max_iterations = 0;          // most iterations used by a single invocation
    bool params_increasing = true;   // strictly, within every invocation
    bool within_budget = true;       // no invocation above k^2 + 3k iterations
};

struct TrialReport {
    std::string theorem;  // T1, T2, T3, L_general, P_bipartite, or an exhaustive statement name
    std::optional<GenSpec> spec;
    Outcome outcome = Outcome::verified;
    std::optional<Matching> matching;
    std::optional<ExtensionResult> extension;
    std::optional<Decomposition> decomposition;
    std::optional<int> oracle_size;  // exact maximum rainbow matching, when computed
    std::optional<DriverStats> driver;
    std::int64_t instances = 1;  // graphs examined (exhaustive checks examine many)
    std::string detail;
    double elapsed_ms = 0.0;
};

struct TrialOptions {
    /// Cross-check T1/T2 outputs with the exact oracle on graphs this small.
    int oracle_max_order = 14;
    /// Re-check partition invariants inside the driver.
    bool check_invariants = false;
};

/// Checks the theorem's hypotheses on generate(spec); if they hold, runs the
/// constructive operation and re-verifies its output independently. Never
/// throws: every failure is encoded in the outcome.
///
/// For L_general / P_bipartite the (k-1)-matching fed to the extension step
/// is a maximum rainbow matching from the exact oracle, truncated.
TrialReport run_trial(Theorem theorem, const GenSpec& spec, const TrialOptions& options = {});

/// Default-size spec for a theorem, a pure function of the seed.
GenSpec sample_spec(Theorem theorem, std::uint64_t seed);

/// `count` trials with specs sample_spec(theorem, derive_seed(seed, i)) run
/// on `jobs` threads (0: hardware concurrency). Reports come back in index order.
std::vector<TrialReport> run_batch(Theorem theorem, int count, std::uint64_t seed, int jobs = 0,
                                   const TrialOptions& options = {});

/// Random gadget for the adapter constructions: parallel pairs, union of two
/// such adapters, and an absorb step, each checked with verify_adapter and
/// the vertex/colour/level identities.
TrialReport run_adapter_trial(std::uint64_t seed);

std::vector<TrialReport> run_adapter_batch(int count, std::uint64_t seed, int jobs = 0);

enum class Statement { adapter_props, L_general_small, P_bipartite_small };

std::string to_string(Statement s);
std::optional<Statement> parse_statement(std::string_view name);

struct ExhaustiveLimits {
    int max_order = 6;
    int k = 2;
    int max_colours = 3;
    /// Refuse (PreconditionError) when the estimated number of coloured
    /// graphs to enumerate exceeds this.
    std::int64_t budget = 50'000'000;
};

/// Enumerates every instance within `limits` (coloured graphs up to colour
/// renaming, every rainbow (k-1)-matching), keeps those meeting the
/// statement's hypotheses and verifies the construction on each. Reports the
/// first counterexample, or verified with the instance count.
///
/// adapter_props ignores `limits` apart from the budget: it runs every role
/// assignment of the parallel-pairs construction with l <= 2 on 7 vertices,
/// unions of those, and absorb steps.
TrialReport exhaustive_check(Statement statement, const ExhaustiveLimits& limits = {});

/// Default limits for each statement (n <= 6 bipartite, n <= 4 general).
ExhaustiveLimits default_limits(Statement statement);

}  // namespace rainbow
