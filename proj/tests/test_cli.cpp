#include <doctest.h>

#include "pebble/cli.hpp"
#include "pebble/json_io.hpp"

#include <filesystem>
#include <sstream>

using namespace pebble;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("pebble_cli_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text = "") const {
        const auto p = (path / name).string();
        if (!text.empty()) write_file(p, text);
        return p;
    }
};

}  // namespace

TEST_CASE("lambda") {
    TempDir dir;
    const auto k5 = dir.file("k5.json");
    REQUIRE(run({"gen", "--family", "kn", "--n", "5", "--out", k5}).code == kExitOk);
    const auto r = run({"lambda", "--graph", k5});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "{\"lambda\": \"9\", \"argmax\": 0}\n");

    const auto p70 = dir.file("p70.json");
    REQUIRE(run({"gen", "--family", "pn", "--n", "70", "--out", p70}).code == kExitOk);
    CHECK(run({"lambda", "--graph", p70}).out == "{\"lambda\": \"1180591620717411303423\", \"argmax\": 0}\n");

    const auto split = dir.file("split.json", R"({"n": 3, "edges": [[0,1]]})");
    const auto bad = run({"lambda", "--graph", split});
    CHECK(bad.code == kExitDataError);
    CHECK(bad.err.find("disconnected") != std::string::npos);
}

TEST_CASE("solve and verify") {
    TempDir dir;
    const auto p3 = dir.file("p3.json", R"({"n": 3, "edges": [[0,1],[1,2]]})");
    const auto six = dir.file("600.json", R"({"pebbles": [6, 0, 0]})");
    const auto seven = dir.file("700.json", R"({"pebbles": [7, 0, 0]})");
    const auto cert = dir.file("cert.json");

    CHECK(run({"solve", "--graph", p3, "--config", six}).code == kExitNegative);
    CHECK(run({"solve", "--graph", p3, "--config", six, "--oracle"}).code == kExitNegative);
    const auto ok = run({"solve", "--graph", p3, "--config", seven, "--certificate", cert});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("\"solvable\"") != std::string::npos);
    CHECK(read_file(cert) == "{\"moves\":[[0,1,3],[1,2,1]]}\n");
    CHECK(run({"verify", "--graph", p3, "--config", seven, "--certificate", cert}).code == kExitOk);
    CHECK(run({"verify", "--graph", p3, "--config", six, "--certificate", cert}).code == kExitNegative);
    CHECK(run({"solve", "--graph", p3, "--config", seven, "--budget", "0"}).code == kExitUndecided);

    // --oracle and --certificate are mutually exclusive.
    CHECK(run({"solve", "--graph", p3, "--config", seven, "--oracle", "--certificate", cert}).code == kExitUsage);
    const auto wrong_size = dir.file("short.json", R"({"pebbles": [7, 0]})");
    CHECK(run({"solve", "--graph", p3, "--config", wrong_size}).code == kExitDataError);
    const auto garbage = dir.file("garbage.json", "{");
    CHECK(run({"solve", "--graph", garbage, "--config", seven}).code == kExitDataError);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"dist", "--n", "2"}).code == kExitUsage);
    CHECK(run({"dist", "--n", "2", "--t", "2", "--bogus"}).code == kExitUsage);
    CHECK(run({"sample", "--model", "mb", "--n", "3", "--t", "4"}).code == kExitUsage);  // no seed
    CHECK(run({"sample", "--model", "xx", "--n", "3", "--t", "4", "--seed", "1"}).code == kExitUsage);
    CHECK(run({"gen", "--family", "tree", "--n", "5", "--out", "/tmp/x.json"}).code == kExitUsage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("dist") {
    const auto r = run({"dist", "--n", "2", "--t", "2", "--x", "0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "2/3\n");
    CHECK(run({"dist", "--n", "5", "--t", "4", "--x", "3"}).out == "0/1\n");
    const auto table = run({"dist", "--n", "2", "--t", "2"});
    CHECK(table.out.find("0 2/3 0.666666666667\n2 1/3 0.333333333333\n") == 0);
    CHECK(table.out.find("# mean 2/3") != std::string::npos);
}

TEST_CASE("sample is deterministic") {
    const std::vector<std::string> args{"sample", "--model", "be", "--n", "6", "--t", "9", "--seed", "42", "--count", "4"};
    const auto a = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == run(args).out);
    std::istringstream lines(a.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(config_from_json(line).total() == 9);
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("threshold CSV") {
    TempDir dir;
    const std::vector<std::string> args{"threshold", "--model", "mb", "--n", "50", "--t-min", "60",  "--t-max",
                                        "100",       "--step",  "10", "--trials", "300", "--seed", "5", "--crossing"};
    const auto a = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out.rfind("model,n,t,trials,solvable_count,p_hat,seed\n", 0) == 0);
    CHECK(a.out.find("# crossing t*=") != std::string::npos);
    auto with_workers = args;
    with_workers.insert(with_workers.end(), {"--workers", "3"});
    CHECK(run(with_workers).out == a.out);
    const auto csv = dir.file("curve.csv");
    auto to_file = args;
    to_file.insert(to_file.end(), {"--out", csv});
    CHECK(run(to_file).code == kExitOk);
    CHECK(read_file(csv) == a.out);
}

TEST_CASE("reduce, xcover and gen round trip into solve") {
    TempDir dir;
    const auto fig = dir.file("fig.json", R"({"ground_set_size": 8, "sets": [[0,1,2,3],[2,3,4,5],[4,5,6,7]]})");
    const auto neg = dir.file("neg.json", R"({"ground_set_size": 8, "sets": [[0,1,2,3],[3,4,5,6],[0,5,6,7]]})");
    const auto g = dir.file("g.json");
    const auto c = dir.file("c.json");

    const auto reduced = run({"reduce", "--instance", fig, "--out-graph", g, "--out-config", c});
    CHECK(reduced.code == kExitOk);
    CHECK(reduced.out.find("\"vertices\": 19, \"edges\": 22, \"pebbles\": 35") != std::string::npos);
    CHECK(run({"solve", "--graph", g, "--config", c}).code == kExitOk);
    CHECK(run({"xcover", "--instance", fig}).out == "[0, 2]\n");

    CHECK(run({"reduce", "--instance", neg, "--out-graph", g, "--out-config", c}).code == kExitOk);
    CHECK(run({"solve", "--graph", g, "--config", c}).code == kExitNegative);
    const auto none = run({"xcover", "--instance", neg});
    CHECK(none.code == kExitNegative);
    CHECK(none.out == "none\n");

    const auto bad = dir.file("bad.json", R"({"ground_set_size": 6, "sets": [[0,1,2,3]]})");
    CHECK(run({"xcover", "--instance", bad}).code == kExitDataError);

    const auto tree = dir.file("tree.json");
    const auto tree2 = dir.file("tree2.json");
    CHECK(run({"gen", "--family", "tree", "--n", "9", "--seed", "4", "--out", tree}).code == kExitOk);
    CHECK(run({"gen", "--family", "tree", "--n", "9", "--seed", "4", "--out", tree2}).code == kExitOk);
    CHECK(read_file(tree) == read_file(tree2));
    CHECK(graph_from_json(read_file(tree)).edge_count() == 8);
    const auto multi = dir.file("multi.json");
    CHECK(run({"gen", "--family", "kmulti", "--parts", "3,2,2", "--out", multi}).code == kExitOk);
    CHECK(run({"lambda", "--graph", multi}).out == "{\"lambda\": \"17\", \"argmax\": 0}\n");
    const auto cube = dir.file("cube.json");
    CHECK(run({"gen", "--family", "qd", "--d", "3", "--out", cube}).code == kExitOk);
    CHECK(run({"lambda", "--graph", cube}).out == "{\"lambda\": \"27\", \"argmax\": 0}\n");
    CHECK(run({"gen", "--family", "kmulti", "--parts", "1,2", "--out", multi}).code == kExitDataError);
    CHECK(run({"gen", "--family", "gnp", "--n", "6", "--p", "0.5", "--seed", "1", "--out", multi}).code == kExitOk);
}
