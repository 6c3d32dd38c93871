#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "sturmian/cli.hpp"
#include "sturmian/json_io.hpp"
#include "sturmian/mapping.hpp"
#include "sturmian/render.hpp"

using namespace sturmian;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

Json parse(const std::string& text) { return Json::parse(text); }

Json schemas() {
    std::ifstream in(std::string(STURMIAN_SOURCE_DIR) + "/schemas/cli_outputs.json");
    REQUIRE(in.good());
    return Json::parse(in);
}

void check_schema(const Json& doc, const char* name) {
    std::string why = schema_mismatch(doc, schemas().at(name));
    INFO(name, ": ", why);
    CHECK(why.empty());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_substr(const std::string& text, const std::string& pat) {
    std::size_t count = 0;
    for (std::size_t at = text.find(pat); at != std::string::npos; at = text.find(pat, at + 1)) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("count by each method") {
    RunResult formula = run({"count", "10", "--method", "formula"});
    REQUIRE(formula.code == 0);
    Json j = parse(formula.out);
    check_schema(j, "census");
    CHECK(j["formula_count"] == "136");
    CHECK(j["brute_count"].is_null());

    RunResult brute = run({"count", "10", "--method", "brute"});
    REQUIRE(brute.code == 0);
    Json jb = parse(brute.out);
    check_schema(jb, "census");
    CHECK(jb["brute_count"] == "136");
    CHECK(jb["palindrome_brute"] == "14");

    RunResult geom = run({"count", "12", "--method", "geometric"});
    REQUIRE(geom.code == 0);
    CHECK(parse(geom.out)["geometric_count"] == "224");
}

TEST_CASE("census guard applies to enumeration methods") {
    if (std::getenv("STURMIAN_BRUTE_LIMIT") != nullptr) return;
    CHECK(run({"count", "40", "--method", "geometric"}).code == 2);
    CHECK(run({"count", "15", "--method", "brute"}).code == 2);
    CHECK(run({"count", "40", "--method", "formula"}).code == 0);
}

TEST_CASE("palindromes listing") {
    RunResult r = run({"palindromes", "10", "--list"});
    REQUIRE(r.code == 0);
    Json j = parse(r.out);
    check_schema(j, "palindromes");
    CHECK(j["count"] == "14");
    CHECK(j["words"].size() == 14);

    RunResult bare = run({"palindromes", "3"});
    CHECK(parse(bare.out)["words"].is_null());
}

TEST_CASE("map-line prints the worked example") {
    RunResult r = run({"map-line", "--line", "2:1:1", "--n", "10"});
    REQUIRE(r.code == 0);
    Json j = parse(r.out);
    check_schema(j, "image_set");
    CHECK(j["cardinality"] == 4);
    std::set<std::string> words;
    for (const auto& e : j["words"]) words.insert(e["word"].get<std::string>());
    CHECK(words == std::set<std::string>{"1010101010", "0110101010", "0101101010",
                                         "1010101001"});
}

TEST_CASE("locate names the partition line") {
    RunResult r = run({"locate", "--word", "1010101001"});
    REQUIRE(r.code == 0);
    Json j = parse(r.out);
    check_schema(j, "locate");
    CHECK(j["line"] == "2:1:1");
    CHECK(j["mode"] == "above-first");

    CHECK(run({"locate", "--word", "0011"}).code == 2);
}

TEST_CASE("returns reports the staircase example") {
    RunResult r = run({"returns", "--line", "10:3:7", "--factor", "100", "--horizon", "17"});
    REQUIRE(r.code == 0);
    Json j = parse(r.out);
    check_schema(j, "return_report");
    CHECK(j["interval"]["c1"] == 7);
    CHECK(j["interval"]["c2"] == 9);
    CHECK(j["occurrences"] == Json::array({0, 4, 7, 10, 14}));
    CHECK(j["start_residues"] == Json::array({7, 9, 8, 7, 9}));
    CHECK(j["distinct_returns"] == Json::array({"100", "1000"}));
    CHECK(j["pass"] == true);
}

TEST_CASE("extend emits the smallest full-contact witness") {
    RunResult r = run({"extend", "--word", "01"});
    REQUIRE(r.code == 0);
    Json j = parse(r.out);
    check_schema(j, "extend");
    CHECK(j["extension"] == "01");
    CHECK(j["line"] == "2:1:0");

    RunResult longer = run({"extend", "--word", "10"});
    CHECK(parse(longer.out)["extension"] == "101");
}

TEST_CASE("verify suites exit zero when the properties hold") {
    CHECK(run({"verify", "identity", "--n", "20"}).code == 0);
    CHECK(run({"verify", "partition", "--n", "5"}).code == 0);
    CHECK(run({"verify", "census", "--n", "6"}).code == 0);
    CHECK(run({"verify", "palindromes", "--n", "6"}).code == 0);
    CHECK(run({"verify", "returns", "--n", "8"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"map-line", "--line", "4:2:1", "--n", "8"}).code == 2);
    CHECK(run({"returns", "--line", "10:3:7", "--factor", "11"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("svg figures are structurally sound and deterministic") {
    RunResult r = run({"render", "--line", "2:1:1", "--n", "10", "--word", "1010101001",
                       "--format", "svg"});
    REQUIRE(r.code == 0);
    CHECK(count_substr(r.out, "<polyline") == 1);
    CHECK(count_substr(r.out, "<line") == 1);
    CHECK(count_substr(r.out, "<svg") == 1);
    CHECK(count_substr(r.out, "<circle") == 5);

    // The polyline must carry n+1 coordinate pairs.
    std::size_t at = r.out.find("points=\"");
    REQUIRE(at != std::string::npos);
    std::string points = r.out.substr(at + 8, r.out.find('"', at + 8) - at - 8);
    CHECK(count_substr(points, ",") == 11);

    RunResult again = run({"render", "--line", "2:1:1", "--n", "10", "--word", "1010101001",
                           "--format", "svg"});
    CHECK(r.out == again.out);
}

TEST_CASE("figure goldens") {
    std::string dir = std::string(STURMIAN_TEST_DATA_DIR) + "/golden/";
    RunResult svg = run({"render", "--line", "2:1:1", "--n", "10", "--word", "1010101001",
                         "--format", "svg"});
    REQUIRE(svg.code == 0);
    CHECK(svg.out == read_file(dir + "halfslope_10.svg"));

    RunResult ascii = run({"render", "--line", "10:3:7", "--n", "17", "--word",
                           "10001001001000100", "--format", "ascii"});
    REQUIRE(ascii.code == 0);
    CHECK(ascii.out == read_file(dir + "staircase_17.txt"));

    RunResult fig1 = run({"render", "--alpha", "34/89", "--rho", "2/5", "--n", "11", "--word",
                          "01001010010", "--format", "ascii"});
    REQUIRE(fig1.code == 0);
    CHECK(fig1.out == read_file(dir + "defining_11.txt"));
}

TEST_CASE("flat line renders a flat broken line") {
    RunResult r = run({"render", "--line", "1:0:0", "--n", "3", "--word", "000",
                       "--format", "svg"});
    REQUIRE(r.code == 0);
    std::size_t at = r.out.find("points=\"");
    REQUIRE(at != std::string::npos);
    std::string points = r.out.substr(at + 8, r.out.find('"', at + 8) - at - 8);
    CHECK(points == "0.000,0.000 32.000,0.000 64.000,0.000 96.000,0.000");

    RunResult tiny = run({"render", "--line", "1:0:0", "--n", "1", "--format", "ascii"});
    CHECK(tiny.code == 0);
}

TEST_CASE("render validation") {
    CHECK(run({"render", "--n", "5", "--format", "svg"}).code == 2);
    CHECK(run({"render", "--line", "2:1:1", "--n", "4", "--word", "10", "--format", "svg"}).code ==
          2);
    CHECK(run({"render", "--line", "2:1:1", "--alpha", "1/2", "--rho", "1/3", "--n", "4",
               "--format", "svg"}).code == 2);
    CHECK(run({"render", "--alpha", "1/2", "--n", "4", "--format", "svg"}).code == 2);
}

TEST_CASE("partition reports serialize to the documented shape") {
    Json j = to_json(verify_partition(6));
    check_schema(j, "partition_report");
    CHECK(j["brute_count"] == 36);
    CHECK(j["geometric_sum"] == 36);
    CHECK(j["pass"] == true);
}

TEST_CASE("schema checker rejects shape drift") {
    Json schema = schemas().at("locate");
    Json good = {{"word", "10"}, {"line", "1:0:1"}, {"mode", "below-first"}, {"count", 1}};
    CHECK(schema_mismatch(good, schema).empty());
    Json missing = {{"word", "10"}};
    CHECK_FALSE(schema_mismatch(missing, schema).empty());
    Json wrong_type = {{"word", "10"}, {"line", 7}, {"mode", "below-first"}, {"count", 1}};
    CHECK_FALSE(schema_mismatch(wrong_type, schema).empty());
}
