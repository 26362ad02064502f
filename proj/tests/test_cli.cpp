#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "bicover/covering.hpp"
#include "bicover/graph.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bicover");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = bicover::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("bicover-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("cli construct and verify") {
    TempDir tmp;
    auto ew = tmp.file("ew.json");
    auto r = run({"construct", "--n", "4", "--lambda", "2", "--method", "even-weight", "--out", ew});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["capacity"] == 12);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["config"]["method"] == "even-weight");
    CHECK(fs::exists(ew + ".report.json"));
    CHECK(json::parse(std::ifstream(ew + ".report.json"))["guaranteed_lambda"] == 2);

    auto h = tmp.file("h.json");
    REQUIRE(run({"construct", "--n", "4", "--lambda", "2", "--method", "hadamard", "--out", h}).code == 0);
    CHECK(bicover::capacity(bicover::parse_covering(json::parse(std::ifstream(h)).dump())) == 12);

    auto bad = run({"construct", "--n", "4", "--lambda", "3", "--method", "even-weight", "--out", tmp.file("x.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("lambda = 2 only") != std::string::npos);

    auto v2 = run({"verify", h, "--n", "4", "--lambda", "2"});
    CHECK(v2.code == 0);
    CHECK(json::parse(v2.out)["report"]["min_multiplicity"] == 2);

    auto v3 = run({"verify", h, "--n", "4", "--lambda", "3"});
    CHECK(v3.code == 1);
    CHECK(json::parse(v3.out)["report"]["violating_pairs"].size() == 6);

    auto mismatch = run({"verify", h, "--n", "5"});
    CHECK(mismatch.code == 2);

    auto g = tmp.file("g.json");
    write(g, R"({"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]]})");
    CHECK(run({"verify", h, "--graph", g}).code == 2);

    auto junk = tmp.file("junk.json");
    write(junk, "{\"n\": 4, \"blocks\": [");
    CHECK(run({"verify", junk}).code == 2);
}

TEST_CASE("cli verify of every construction in a small matrix") {
    TempDir tmp;
    struct Case {
        const char* method;
        int n, lam;
    };
    for (auto c : {Case{"even-weight", 7, 2}, Case{"gv", 9, 3}, Case{"bch", 10, 4}, Case{"hadamard", 8, 4},
                   Case{"balanced", 6, 6}, Case{"bch", 16, 3}}) {
        auto out = tmp.file(std::string(c.method) + std::to_string(c.n) + ".json");
        REQUIRE(run({"construct", "--n", std::to_string(c.n), "--lambda", std::to_string(c.lam), "--method", c.method,
                     "--out", out})
                    .code == 0);
        CHECK(run({"verify", out, "--lambda", std::to_string(c.lam)}).code == 0);
    }

    auto g = tmp.file("c5.json");
    write(g, bicover::serialize_graph(bicover::Graph::cycle(5)));
    auto col = tmp.file("col.json");
    REQUIRE(run({"construct", "--graph", g, "--lambda", "1", "--method", "coloring", "--out", col}).code == 0);
    CHECK(run({"verify", col, "--graph", g}).code == 0);
    CHECK(run({"construct", "--n", "5", "--method", "coloring", "--out", col}).code == 2);
}

TEST_CASE("cli bounds") {
    auto r = run({"bounds", "--n", "16", "--lambda", "3"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    std::map<std::string, json> rows;
    for (const auto& e : doc["report"]["entries"]) rows[e["name"]] = e;
    CHECK(rows["edge_count"]["value"] == 90.0);
    CHECK(rows["thm11"]["value"].get<double>() == doctest::Approx(96));
    CHECK(rows["item1"]["value"].is_null());

    auto r8 = json::parse(run({"bounds", "--n", "8", "--lambda", "1"}).out);
    for (const auto& e : r8["report"]["entries"]) rows[e["name"]] = e;
    CHECK(rows["thm11"]["value"] == 24.0);
    CHECK(rows["item1"]["value"] == 32.0);

    TempDir tmp;
    auto g = tmp.file("c5.json");
    write(g, bicover::serialize_graph(bicover::Graph::cycle(5)));
    auto rg = json::parse(run({"bounds", "--graph", g}).out);
    for (const auto& e : rg["report"]["entries"]) rows[e["name"]] = e;
    CHECK(rows["ks"]["value"].get<double>() == doctest::Approx(3.6848).epsilon(1e-4));
    CHECK(rows["alpha"]["value"].get<double>() == doctest::Approx(6.6096).epsilon(1e-4));

    auto table = run({"bounds", "--n", "8", "--lambda", "1", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.rfind("# config:", 0) == 0);
    CHECK(run({"bounds", "--n", "8"}).code == 2);
}

TEST_CASE("cli exact") {
    auto r = run({"exact", "--n", "3", "--lambda", "1"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["value"] == 5);
    CHECK(doc["status"] == "optimal");
    auto witness = bicover::covering_from_json(doc["witness"]);
    CHECK(bicover::verify(witness, 3, 1).valid());
    CHECK(run({"exact", "--n", "9", "--lambda", "1"}).code == 1);
}

TEST_CASE("cli proofcheck") {
    TempDir tmp;
    auto cover = tmp.file("cover.json");
    REQUIRE(run({"construct", "--n", "4", "--lambda", "2", "--method", "hadamard", "--out", cover}).code == 0);
    auto r = run({"proofcheck", cover, "--n", "4", "--lambda", "2", "--exhaustive"});
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["ok"] == true);
    for (const auto& c : doc["checks"]) CHECK(c["ok"] == true);

    auto h8 = tmp.file("h8.json");
    REQUIRE(run({"construct", "--n", "8", "--lambda", "4", "--method", "hadamard", "--out", h8}).code == 0);
    auto s = json::parse(run({"proofcheck", h8, "--lambda", "4", "--samples", "1000", "--seed", "3"}).out);
    CHECK(s["ok"] == true);
    CHECK(s["config"]["seed"] == 3);
    CHECK(s["checks"].size() == 4);

    CHECK(run({"proofcheck", cover, "--lambda", "3"}).code == 1);

    auto g = tmp.file("c5.json");
    write(g, bicover::serialize_graph(bicover::Graph::cycle(5)));
    auto col = tmp.file("col.json");
    REQUIRE(run({"construct", "--graph", g, "--method", "coloring", "--out", col}).code == 0);
    auto gr = json::parse(run({"proofcheck", col, "--graph", g, "--exhaustive"}).out);
    CHECK(gr["ok"] == true);
    CHECK(gr["checks"].size() == 2);
}

TEST_CASE("cli sweep") {
    auto r = run({"sweep", "--n-list", "2,4,8", "--lambda-list", "1,2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# config:", 0) == 0);
    std::getline(in, line);
    CHECK(line == "n,lambda,lb_edgecount,lb_thm11,ub_item1,ub_item2,ub_item3,ub_item4,best_construction,best_capacity,exact");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 6);

    auto doc = json::parse(run({"sweep", "--n-list", "2,4,8", "--lambda-list", "1,2"}).out);
    REQUIRE(doc["rows"].size() == 6);
    for (const auto& row : doc["rows"]) {
        double lower = row["lb_thm11"];
        double best = row["best_capacity"];
        CHECK(lower <= best + 1e-9);
        if (!row["exact"].is_null()) {
            CHECK(lower <= row["exact"].get<double>() + 1e-9);
            CHECK(row["exact"].get<double>() <= best);
        }
    }
    CHECK(run({"sweep", "--n-list", "2,x", "--lambda-list", "1"}).code == 2);
}

TEST_CASE("cli usage errors and determinism") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bounds", "--n", "4", "--lambda", "1", "--bogus"}).code == 2);
    CHECK(run({"construct", "--n", "4", "--method", "magic", "--out", "x"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    TempDir tmp;
    auto a = run({"random-graph", "--n", "30", "--p", "0.5", "--seed", "7", "--out", tmp.file("a.json")});
    auto b = run({"--threads", "4", "random-graph", "--n", "30", "--p", "0.5", "--seed", "7", "--out", tmp.file("b.json")});
    CHECK(a.code == 0);
    CHECK(bicover::parse_graph(json::parse(std::ifstream(tmp.file("a.json"))).dump()) ==
          bicover::parse_graph(json::parse(std::ifstream(tmp.file("b.json"))).dump()));

    auto g = tmp.file("a.json");
    auto one = run({"--threads", "1", "bounds", "--graph", g});
    auto four = run({"--threads", "4", "bounds", "--graph", g});
    CHECK(one.out == four.out);
}
