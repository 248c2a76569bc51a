#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rainbow/errors.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw GraphError(what); }

template <class Int>
Int parse_int(std::string_view s, const char* what) {
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return value;
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v, e.colour}); }

Json edges_json(std::span<const Edge> edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(edge_json(e));
    return out;
}

Json sorted_edges_json(std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    return edges_json(sorted);
}

Edge edge_from(const Json& j) {
    if (!j.is_array() || j.size() != 3) bad("edge must be [u, v, c]");
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad("edge entries must be integers");
    }
    return Edge(j[0].get<Vertex>(), j[1].get<Vertex>(), j[2].get<Colour>());
}

Matching edges_from(const Json& j) {
    if (!j.is_array()) bad("expected an array of edges");
    Matching m;
    for (const auto& e : j) m.push_back(edge_from(e));
    return m;
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

template <class T>
T member(const Json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing member '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        bad(std::string("bad member '") + key + "': " + e.what());
    }
}

Json spec_json(const GenSpec& s) {
    return Json{{"model", to_string(s.model)}, {"n", s.n},           {"k", s.k},
                {"t", s.t},                    {"epsilon", to_string(s.epsilon)},
                {"p", s.p},                    {"colours", s.colours}, {"seed", s.seed}};
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("not a fraction p/q: '" + std::string(text) + "'"); };
    auto number = [&](std::string_view s) {
        std::int64_t v{};
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail();
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(number(text));
    const std::int64_t q = number(text.substr(slash + 1));
    if (q == 0) fail();
    return Rational(number(text.substr(0, slash)), q);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

EdgeColouredGraph read_ecg(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_magic = false;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        const std::string at = " (line " + std::to_string(line_no) + ")";
        if (!have_magic) {
            if (tok.size() != 2 || tok[0] != "ecg" || tok[1] != "1") bad("expected header 'ecg 1'" + at);
            have_magic = true;
        } else if (n < 0) {
            if (tok.size() != 2 || tok[0] != "n") bad("expected 'n <vertex-count>'" + at);
            n = parse_int<int>(tok[1], "vertex count");
            if (n < 0) bad("negative vertex count" + at);
        } else {
            if (tok.size() != 4 || tok[0] != "e") bad("expected 'e <u> <v> <c>'" + at);
            edges.emplace_back(parse_int<Vertex>(tok[1], "vertex"), parse_int<Vertex>(tok[2], "vertex"),
                               parse_int<Colour>(tok[3], "colour"));
        }
    }
    if (!have_magic) bad("empty input: expected header 'ecg 1'");
    if (n < 0) bad("missing 'n <vertex-count>' line");
    return EdgeColouredGraph(n, std::move(edges));
}

void write_ecg(std::ostream& out, const EdgeColouredGraph& g) {
    std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
    std::sort(sorted.begin(), sorted.end());
    out << "ecg 1\nn " << g.order() << '\n';
    for (const Edge& e : sorted) out << "e " << e.u << ' ' << e.v << ' ' << e.colour << '\n';
}

std::string graph_to_json(const EdgeColouredGraph& g) {
    return Json{{"n", g.order()}, {"edges", sorted_edges_json(g.edges())}}.dump();
}

EdgeColouredGraph graph_from_json(std::string_view text) {
    const Json j = parse(text);
    if (!j.is_object()) bad("graph JSON must be an object");
    const int n = member<int>(j, "n");
    if (!j.contains("edges")) bad("missing member 'edges'");
    return EdgeColouredGraph(n, edges_from(j.at("edges")));
}

EdgeColouredGraph load_graph(const std::filesystem::path& path) {
    if (path.extension() == ".json") return graph_from_json(read_file(path));
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path.string() + "'");
    return read_ecg(in);
}

void save_graph(const std::filesystem::path& path, const EdgeColouredGraph& g) {
    if (path.extension() == ".json") {
        write_file(path, graph_to_json(g) + "\n");
        return;
    }
    std::ostringstream out;
    write_ecg(out, g);
    write_file(path, out.str());
}

std::string matching_to_json(const Matching& m) { return edges_json(m).dump(); }

Matching matching_from_json(std::string_view text) {
    const Json j = parse(text);
    if (j.is_object()) {
        if (!j.contains("matching")) bad("missing member 'matching'");
        return edges_from(j.at("matching"));
    }
    return edges_from(j);
}

std::string decomposition_to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const Matching& m : d.parts) parts.push_back(edges_json(m));
    return Json{{"n", d.host.order()}, {"t", d.t}, {"parts", std::move(parts)}}.dump();
}

DecompositionFile decomposition_from_json(std::string_view text) {
    const Json j = parse(text);
    if (!j.is_object()) bad("decomposition JSON must be an object");
    DecompositionFile d;
    d.n = member<int>(j, "n");
    d.t = member<int>(j, "t");
    if (!j.contains("parts") || !j.at("parts").is_array()) bad("missing array member 'parts'");
    for (const auto& p : j.at("parts")) d.parts.push_back(edges_from(p));
    return d;
}

std::string extension_to_json(const ExtensionResult& r) {
    return Json{{"matching", edges_json(r.matching)}, {"edge", edge_json(r.edge)}}.dump();
}

std::string spec_to_json(const GenSpec& s) { return spec_json(s).dump(); }

GenSpec spec_from_json(std::string_view text) {
    const Json j = parse(text);
    if (!j.is_object()) bad("spec JSON must be an object");
    GenSpec s;
    const auto name = member<std::string>(j, "model");
    const auto model = parse_model(name);
    if (!model) bad("unknown model '" + name + "'");
    s.model = *model;
    if (j.contains("n")) s.n = member<int>(j, "n");
    if (j.contains("k")) s.k = member<int>(j, "k");
    if (j.contains("t")) s.t = member<int>(j, "t");
    if (j.contains("p")) s.p = member<double>(j, "p");
    if (j.contains("colours")) s.colours = member<int>(j, "colours");
    if (j.contains("seed")) s.seed = member<std::uint64_t>(j, "seed");
    if (j.contains("epsilon")) {
        try {
            s.epsilon = parse_rational(member<std::string>(j, "epsilon"));
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
    }
    return s;
}

std::string report_to_json(const TrialReport& r) {
    Json j{{"theorem", r.theorem}, {"outcome", to_string(r.outcome)}};
    if (r.spec) j["spec"] = spec_json(*r.spec);
    j["instances"] = r.instances;
    if (r.matching) j["matching"] = edges_json(*r.matching);
    if (r.extension) j["extension"] = Json{{"matching", edges_json(r.extension->matching)},
                                           {"edge", edge_json(r.extension->edge)}};
    if (r.decomposition) {
        j["decomposition"] = Json{{"parts", r.decomposition->parts.size()},
                                  {"nonempty", r.decomposition->nonempty_parts()}};
    }
    if (r.oracle_size) j["oracle_size"] = *r.oracle_size;
    if (r.driver) {
        j["driver"] = Json{{"invocations", r.driver->invocations},
                           {"max_iterations", r.driver->max_iterations},
                           {"params_increasing", r.driver->params_increasing},
                           {"within_budget", r.driver->within_budget}};
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string trace_to_json(const TraceRecord& r) {
    Json j{{"invocation", r.invocation}, {"depth", r.depth},         {"k", r.k},
           {"iteration", r.iteration},   {"params", r.params},       {"remainder_size", r.remainder_size},
           {"action", r.action}};
    if (!r.via.empty()) j["via"] = r.via;
    return j.dump();
}

std::string hall_failure_to_json(const HallFailure& h) {
    return Json{{"error", "hall"},
                {"colour", h.colour()},
                {"class_edges", edges_json(h.class_edges())},
                {"violator", edges_json(h.violator())},
                {"violator_parts", h.violator_parts()}}
        .dump();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace rainbow
