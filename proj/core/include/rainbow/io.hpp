#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/decompose.hpp"
#include "rainbow/extend.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/trials.hpp"

namespace rainbow {

// Text format, '#' starts a comment:
//
//   ecg 1
//   n <vertex-count>
//   e <u> <v> <c>        one line per edge
//
// All readers throw GraphError on malformed input; writers are
// deterministic (edges in ascending (u, v) order, compact JSON).

EdgeColouredGraph read_ecg(std::istream& in);
void write_ecg(std::ostream& out, const EdgeColouredGraph& g);

/// {"n": N, "edges": [[u, v, c], ...]}
std::string graph_to_json(const EdgeColouredGraph& g);
EdgeColouredGraph graph_from_json(std::string_view text);

/// Format chosen by extension: .json is JSON, anything else is ecg.
EdgeColouredGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const EdgeColouredGraph& g);

/// [[u, v, c], ...]
std::string matching_to_json(const Matching& m);
/// Accepts a bare edge array or an object with a "matching" member.
Matching matching_from_json(std::string_view text);

/// {"n": N, "t": T, "parts": [[[u, v, c], ...], ...]}
std::string decomposition_to_json(const Decomposition& d);

struct DecompositionFile {
    int n = 0;
    int t = 0;
    std::vector<Matching> parts;
};
DecompositionFile decomposition_from_json(std::string_view text);

std::string extension_to_json(const ExtensionResult& r);

/// {"model", "n", "k", "t", "epsilon": "p/q", "p", "colours", "seed"}.
/// Missing members take GenSpec defaults; "model" is required.
std::string spec_to_json(const GenSpec& s);
GenSpec spec_from_json(std::string_view text);

/// One line; a decomposition witness is summarised by its part counts.
std::string report_to_json(const TrialReport& r);
std::string trace_to_json(const TraceRecord& r);
/// {"error": "hall", "colour", "class_edges", "violator", "violator_parts"}
std::string hall_failure_to_json(const HallFailure& h);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace rainbow
