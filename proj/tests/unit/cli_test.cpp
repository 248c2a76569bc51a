#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "builders.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "rainbow_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs the CLI with stdout to `out` (inside workdir) and returns its exit code.
int run(const std::string& args, const std::string& out = "stdout.txt") {
    const std::string cmd = std::string("\"") + RAINBOW_CLI + "\" " + args + " > \"" + (workdir() / out).string() +
                            "\" 2> \"" + (workdir() / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return "\"" + (workdir() / name).string() + "\""; }
std::string slurp(const std::string& name) { return read_file(workdir() / name); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve") {
    save_graph(workdir() / "k9.ecg", build::rainbow_complete(9));
    CHECK(run("solve --input " + path("k9.ecg") + " --k 2", "solve.json") == 0);
    const auto m = matching_from_json(slurp("solve.json"));
    CHECK(m.size() == 2);
    CHECK(slurp("solve.json").find("\"verified\":true") != std::string::npos);

    CHECK(run("solve --input " + path("k9.ecg") + " --k 3") == 2);
    CHECK(slurp("stderr.txt").find("18 < 7k + 4 = 25") != std::string::npos);

    write_file(workdir() / "bad.ecg", "ecg 1\nn 2\ne 0 5 1\n");
    CHECK(run("solve --input " + path("bad.ecg") + " --k 1") == 1);
    CHECK(run("solve --input " + path("absent.ecg") + " --k 1") == 1);

    save_graph(workdir() / "k66.ecg", build::rainbow_complete_bipartite(6));
    CHECK(run("solve --input " + path("k66.ecg") + " --k 2 --bipartite --epsilon 1/2 --trace " + path("trace.jsonl")) == 0);
    CHECK(slurp("trace.jsonl").find("\"action\"") != std::string::npos);
    CHECK(run("solve --input " + path("k66.ecg") + " --k 2 --bipartite --epsilon 0.5") == 1);
}

TEST_CASE("gen, decompose and verify") {
    CHECK(run("gen --model sharpness --t 11 --n 12 --out " + path("k12.ecg")) == 0);
    CHECK(load_graph(workdir() / "k12.ecg").size() == 66);
    CHECK(run("decompose --input " + path("k12.ecg") + " --t 11 --out " + path("k12.parts.json")) == 0);
    const auto d = decomposition_from_json(slurp("k12.parts.json"));
    CHECK(d.parts.size() == 66);
    for (const auto& part : d.parts) CHECK(part.size() == 1);
    CHECK(run("verify --input " + path("k12.ecg") + " --parts " + path("k12.parts.json")) == 0);
    CHECK(run("decompose --input " + path("k12.ecg") + " --t 10") == 2);

    // Tamper: duplicate the first edge into the second part.
    auto tampered = d;
    tampered.parts[1].push_back(tampered.parts[0][0]);
    std::string parts = "[";
    for (std::size_t i = 0; i < tampered.parts.size(); ++i) parts += (i ? "," : "") + matching_to_json(tampered.parts[i]);
    write_file(workdir() / "tampered.json", R"({"n":12,"t":11,"parts":)" + parts + "]}");
    CHECK(run("verify --input " + path("k12.ecg") + " --parts " + path("tampered.json")) == 5);

    CHECK(run("gen --model sharpness --t 3 --n 5") == 2);
    CHECK(run("gen --model mono_budget --n 25 --t 11 --colours 3 --p 0.8 --seed 4 --out " + path("mb.ecg")) == 0);
    CHECK(run("decompose --input " + path("mb.ecg") + " --t 11 --out " + path("mb.parts.json")) == 0);
    CHECK(run("verify --input " + path("mb.ecg") + " --parts " + path("mb.parts.json")) == 0);

    write_file(workdir() / "empty4.ecg", "ecg 1\nn 4\n");
    CHECK(run("decompose --input " + path("empty4.ecg") + " --t 1", "hall.json") == 4);
    CHECK(slurp("hall.json").find("\"error\":\"hall\"") != std::string::npos);
}

TEST_CASE("verify matchings") {
    save_graph(workdir() / "k9m.ecg", build::rainbow_complete(9));
    write_file(workdir() / "m1.json", "[[0,1,0]]");
    CHECK(run("verify --input " + path("k9m.ecg") + " --matching " + path("m1.json") + " --k 1") == 0);
    CHECK(run("verify --input " + path("k9m.ecg") + " --matching " + path("m1.json") + " --k 2") == 5);
    write_file(workdir() / "m2.json", "[[0,1,3]]");  // wrong colour
    CHECK(run("verify --input " + path("k9m.ecg") + " --matching " + path("m2.json") + " --k 1") == 5);
    write_file(workdir() / "m3.json", "[[0,1");
    CHECK(run("verify --input " + path("k9m.ecg") + " --matching " + path("m3.json") + " --k 1") == 1);
}

TEST_CASE("gen determinism and spec input") {
    const std::string args = "gen --model min_colour_degree --n 13 --k 3 --colours 3 --seed 7";
    CHECK(run(args, "a.ecg") == 0);
    CHECK(run(args, "b.ecg") == 0);
    CHECK(slurp("a.ecg") == slurp("b.ecg"));
    CHECK(min_colour_degree(load_graph(workdir() / "a.ecg")) >= 3);

    write_file(workdir() / "spec.json", R"({"model":"min_colour_degree","n":13,"k":3,"colours":3,"seed":7})");
    CHECK(run("gen --spec " + path("spec.json"), "c.ecg") == 0);
    CHECK(slurp("c.ecg") == slurp("a.ecg"));
    CHECK(run("gen --spec '{\"model\":\"min_colour_degree\",\"n\":13,\"k\":3,\"colours\":3,\"seed\":7}'", "d.ecg") == 0);
    CHECK(slurp("d.ecg") == slurp("a.ecg"));
}

TEST_CASE("oracle") {
    save_graph(workdir() / "c4.ecg", build::graph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {0, 3, 4}}));
    CHECK(run("oracle --input " + path("c4.ecg"), "oracle.json") == 0);
    CHECK(slurp("oracle.json").find("\"size\":2") != std::string::npos);
}

TEST_CASE("check and bench") {
    CHECK(run("check --suite T3 --trials 200 --seed 1", "t3.jsonl") == 0);
    const auto lines = slurp("t3.jsonl");
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 200);
    CHECK(slurp("stderr.txt").find("verified") != std::string::npos);
    CHECK(run("check --suite adapters --trials 20") == 0);
    CHECK(run("check --suite T1 --trials 0") == 0);
    CHECK(run("check --suite T9") == 1);
    CHECK(run("bench --suite T1 --trials 5", "bench.json") == 0);
    CHECK(slurp("bench.json").find('{') != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run("") != 0);
    CHECK(run("solve --k 2") == 1);
    CHECK(run("--help") == 0);
}

}  // TEST_SUITE
