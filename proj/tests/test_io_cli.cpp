#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "quivarity/cli.hpp"
#include "quivarity/io.hpp"
#include "test_support.hpp"

using namespace quivarity;
using test_support::make_setting;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "quivarity_test_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = quivarity::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kTwoLoops = R"({
  "vertices": [{"id": "v", "dim": 2}],
  "arrows": [{"from": "v", "to": "v", "count": 2}]
})";

}  // namespace

TEST_CASE("quiver file parsing") {
    SUBCASE("counts expand to repeated arrows") {
        QuiverSetting s = parse_quiver_file(kTwoLoops);
        CHECK(s.quiver.vertex_count() == 1);
        CHECK(s.quiver.loop_count(0) == 2);
        CHECK(s.alpha[0] == 2);
    }
    SUBCASE("missing count defaults to one") {
        QuiverSetting s = parse_quiver_file(
            R"({"vertices": [{"id": "a", "dim": 1}, {"id": "b", "dim": 2}],
                "arrows": [{"from": "a", "to": "b"}]})");
        CHECK(s.quiver.arrow_count() == 1);
    }
    SUBCASE("syntax errors carry a position") {
        try {
            parse_quiver_file("{\n  \"vertices\": [\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SUBCASE("validation errors") {
        CHECK_THROWS_AS(parse_quiver_file(R"({"vertices": [{"id": "a", "dim": 1}],
                                              "arrows": [{"from": "a", "to": "zz"}]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_quiver_file(R"({"vertices": [{"id": "a", "dim": -2}]})"), ParseError);
        CHECK_THROWS_AS(
            parse_quiver_file(R"({"vertices": [{"id": "a", "dim": 1}, {"id": "a", "dim": 2}]})"),
            ParseError);
        CHECK_THROWS_AS(parse_quiver_file(R"({"vertices": [{"id": "a", "dim": 1}],
                                              "arrows": [{"from": "a", "to": "a", "count": 0}]})"),
                        ParseError);
    }
}

TEST_CASE("serialize round-trips") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<std::pair<std::string, Int>> vertices;
        for (int v = 0; v < n; ++v)
            vertices.emplace_back("v" + std::to_string(v), static_cast<Int>(rng() % 4));
        std::vector<std::tuple<std::string, std::string, int>> arrows;
        for (int a = 0, m = static_cast<int>(rng() % 6); a < m; ++a)
            arrows.emplace_back("v" + std::to_string(rng() % static_cast<unsigned>(n)),
                                "v" + std::to_string(rng() % static_cast<unsigned>(n)),
                                1 + static_cast<int>(rng() % 3));
        QuiverSetting s = make_setting(vertices, arrows);
        std::string text = serialize_quiver_file(s);
        CHECK(parse_quiver_file(text) == s);
        CHECK(serialize_quiver_file(parse_quiver_file(text)) == text);
    }
}

TEST_CASE("DOT output is byte-stable") {
    auto s = make_setting({{"b", 1}, {"a", 2}}, {{"a", "b", 2}, {"a", "a", 1}});
    std::string expected =
        "digraph quiver {\n"
        "  \"a\" [label=\"a/2\"];\n"
        "  \"b\" [label=\"b/1\"];\n"
        "  \"a\" -> \"a\";\n"
        "  \"a\" -> \"b\";\n"
        "  \"a\" -> \"b\";\n"
        "}\n";
    CHECK(to_dot(s) == expected);
    CHECK(to_dot(s) == to_dot(s));
}

TEST_CASE("cli classify") {
    SUBCASE("coregular exits 0") {
        TempFile file(kTwoLoops);
        CliResult r = run_cli({"classify", file.path});
        CHECK(r.code == 0);
        CHECK(r.out.find("coregular") != std::string::npos);
        CHECK(r.out.find("T3") != std::string::npos);
    }
    SUBCASE("non-coregular exits 2") {
        TempFile file(R"({"vertices": [{"id": "v", "dim": 2}],
                          "arrows": [{"from": "v", "to": "v", "count": 3}]})");
        CliResult r = run_cli({"classify", file.path});
        CHECK(r.code == 2);
        CHECK(r.out.find("not coregular") != std::string::npos);
    }
    SUBCASE("parse errors exit 3") {
        TempFile file(R"({"vertices": [{"id": "v", "dim": 1}],
                          "arrows": [{"from": "v", "to": "w"}]})");
        CliResult r = run_cli({"classify", file.path});
        CHECK(r.code == 3);
        CHECK(r.err.find("undeclared") != std::string::npos);
        CliResult missing = run_cli({"classify", "no_such_file.json"});
        CHECK(missing.code == 3);
    }
    SUBCASE("--quiet prints nothing") {
        TempFile file(kTwoLoops);
        CliResult r = run_cli({"classify", file.path, "--quiet"});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
    }
    SUBCASE("--json carries the schema tag") {
        TempFile file(kTwoLoops);
        CliResult r = run_cli({"classify", file.path, "--json"});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["schema"] == "quivarity/1");
        CHECK(doc["coregular"] == true);
        CHECK(doc["total_dimension"] == 5);
        CHECK(doc["iss_dimension"] == 5);
        CHECK(doc["components"][0]["terminal"] == "T3");
    }
}

TEST_CASE("cli reduce") {
    TempFile file(R"({"vertices": [{"id": "a", "dim": 1}, {"id": "b", "dim": 5}],
                      "arrows": [{"from": "a", "to": "b", "count": 2},
                                 {"from": "b", "to": "a", "count": 2}]})");
    SUBCASE("trace lists the applied steps") {
        CliResult r = run_cli({"reduce", file.path, "--trace"});
        CHECK(r.code == 0);
        CHECK(r.out.find("RI at b") != std::string::npos);
        CHECK(r.out.find("RII at a: removed 4 loops") != std::string::npos);
        CHECK(r.out.find("polynomial part: 4") != std::string::npos);
        CHECK(r.out.find("terminal: T1") != std::string::npos);
    }
    SUBCASE("already terminal means an empty trace") {
        TempFile terminal(kTwoLoops);
        CliResult r = run_cli({"reduce", terminal.path, "--trace"});
        CHECK(r.code == 0);
        CHECK(r.out.find("no steps applicable") != std::string::npos);
    }
    SUBCASE("randomized seeds give identical verdicts") {
        CliResult a = run_cli({"reduce", file.path, "--seed", "7", "--json"});
        CliResult b = run_cli({"reduce", file.path, "--seed", "11", "--json"});
        auto da = nlohmann::json::parse(a.out);
        auto db = nlohmann::json::parse(b.out);
        CHECK(da["terminal"] == db["terminal"]);
        CHECK(da["polynomial_part"] == db["polynomial_part"]);
    }
    SUBCASE("--dot prints graphviz") {
        CliResult r = run_cli({"reduce", file.path, "--dot"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("digraph quiver {", 0) == 0);
    }
}

TEST_CASE("cli simples, dim, cycles, local, oracle") {
    TempFile file(kTwoLoops);
    SUBCASE("simples") {
        CliResult r = run_cli({"simples", file.path, "--json"});
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["exists"] == true);
        CHECK(doc["class_count"] == "infinite");
        CHECK(doc["iss_dimension"] == 5);
    }
    SUBCASE("dim prints the number") {
        CliResult r = run_cli({"dim", file.path});
        CHECK(r.code == 0);
        CHECK(r.out == "5\n");
    }
    SUBCASE("cycles respects --max-len") {
        CliResult r = run_cli({"cycles", file.path, "--max-len", "5", "--json"});
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["count"] == 23);
    }
    SUBCASE("local --enumerate lists three decompositions") {
        CliResult r = run_cli({"local", file.path, "--enumerate", "--json"});
        auto doc = nlohmann::json::parse(r.out);
        REQUIRE(doc["decompositions"].size() == 3);
        for (const auto& entry : doc["decompositions"]) CHECK(entry["coregular"] == true);
    }
    SUBCASE("local --decomposition parses terms") {
        CliResult r = run_cli({"local", file.path, "--decomposition", "2x(1)", "--json"});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["coregular"] == true);
        CHECK(doc["local"]["vertices"][0]["dim"] == 2);
    }
    SUBCASE("invalid decompositions exit 4") {
        CliResult wrong_sum = run_cli({"local", file.path, "--decomposition", "1x(1)"});
        CHECK(wrong_sum.code == 4);
        CliResult garbage = run_cli({"local", file.path, "--decomposition", "nonsense"});
        CHECK(garbage.code == 4);
    }
    SUBCASE("oracle agrees with the formula") {
        CliResult r = run_cli({"oracle", file.path, "--samples", "4", "--json"});
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["estimated_dimension"] == 5);
        CHECK(doc["iss_dimension"] == 5);
    }
}
