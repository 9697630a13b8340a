#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mstep/cli.hpp"

using namespace mstep;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MSTEP_DATA_DIR) + "/" + name; }

const std::string kCycle3 = "3\n010\n001\n100\n";
const std::string kArc = "2\n01\n00\n";

}  // namespace

TEST_CASE("analyze the six-vertex example") {
  const Run r = run({"analyze", data("figure1.txt"), "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["s"] == 2);
  CHECK(j["kappa"] == 4);
  CHECK(j["cperiod"] == 1);
  CHECK(j["sinks"].empty());
  CHECK(j["parts"] == nlohmann::json::parse("[[0],[1,2,3],[4,5]]"));

  const Run text = run({"analyze", data("figure1.txt")});
  CHECK(text.code == 0);
  CHECK(text.out.find("kappa(Q_s): 4") != std::string::npos);
}

TEST_CASE("analyze reports sinks and parse errors") {
  const Run r = run({"analyze", "-", "--format", "json"}, kArc);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sinks"] == nlohmann::json::parse("[1]"));
  CHECK(j["kappa"].is_null());

  const Run bad = run({"analyze", "-"}, "3\n010\n0011\n100\n");
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("line 3") != std::string::npos);

  const Run invalid = run({"analyze", "-", "--input-format", "edges"}, "2 2\n0\n1\n");
  CHECK(invalid.code == kExitValidation);

  CHECK(run({"analyze", "/nonexistent/file"}).code == kExitUsage);
}

TEST_CASE("limit of the six-vertex example") {
  const Run r = run({"limit", data("figure1.txt"), "--format", "json", "--trace"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["label"] == "G2");
  CHECK(j["template"] == "M2");
  CHECK(j["limit"] == nlohmann::json::parse(
                          R"(["111111","111000","111000","100100","100010","100001"])"));
  CHECK(j["cliques"]["K1"] == nlohmann::json::parse("[0]"));
  CHECK_FALSE(j["cliques"].contains("K2"));
  CHECK(j["trace"]["branch"] == "kappa4");
  CHECK(j["trace"]["t"] == 1);

  const Run dot = run({"limit", data("figure1.txt"), "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("subgraph cluster_K4") != std::string::npos);
  CHECK(dot.out.find("v0 -- v1;") != std::string::npos);
}

TEST_CASE("limit of the directed 3-cycle") {
  const Run r = run({"limit", "-", "--format", "json"}, kCycle3);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["label"] == "G3");
  CHECK(j["edges"].empty());
}

TEST_CASE("limit with sinks") {
  const Run refused = run({"limit", "-"}, kArc);
  CHECK(refused.code == kExitSinks);
  CHECK(refused.err.find("sinks") != std::string::npos);
  CHECK(refused.out.find("cperiod: 1") != std::string::npos);

  const Run oracle = run({"limit", "-", "--oracle-only", "--format", "json"}, kArc);
  REQUIRE(oracle.code == 0);
  const auto j = nlohmann::json::parse(oracle.out);
  CHECK(j["cperiod"].get<int>() <= 3);
  CHECK(run({"limit", "-", "--oracle-only", "--format", "dot"}, kArc).code == kExitUsage);
}

TEST_CASE("verify campaigns") {
  const Run ok = run({"verify", "--count", "300", "--seed", "5", "--format", "json",
                      "--dump", ""});
  REQUIRE(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["equal"] == 300);
  CHECK(j["mismatch"] == 0);
  CHECK(j["max_cperiod"] == 1);

  const Run bip = run({"verify", "--count", "300", "--k-min", "2", "--k-max", "2",
                       "--constraint", "none", "--format", "json", "--dump", ""});
  REQUIRE(bip.code == 0);
  CHECK(nlohmann::json::parse(bip.out)["max_cperiod"].get<int>() <= 2);

  const Run sinks = run({"verify", "--count", "300", "--constraint", "none", "--format",
                         "json", "--dump", ""});
  REQUIRE(sinks.code == 0);
  const auto js = nlohmann::json::parse(sinks.out);
  CHECK(js["max_cperiod"].get<int>() <= 3);
  CHECK(js["refused_with_sinks"].get<int>() > 0);

  const Run text = run({"verify", "--count", "50", "--trace", "--sizes", "2,2,2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("branch counters") != std::string::npos);
  CHECK(text.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify is deterministic across thread counts") {
  const Run one = run({"verify", "--count", "200", "--threads", "1", "--format", "json"});
  const Run four = run({"verify", "--count", "200", "--threads", "4", "--format", "json"});
  auto a = nlohmann::json::parse(one.out), b = nlohmann::json::parse(four.out);
  a.erase("seconds");
  b.erase("seconds");
  CHECK(a == b);
}

TEST_CASE("gen") {
  const Run a = run({"gen", "--sizes", "2,3,2", "--seed", "42"});
  const Run b = run({"gen", "--sizes", "2,3,2", "--seed", "42"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("7 3\n", 0) == 0);

  const Run m = run({"gen", "--sizes", "3,3", "--seed", "1", "--format", "matrix",
                     "--constraint", "sink_free"});
  REQUIRE(m.code == 0);
  CHECK(run({"analyze", "-"}, m.out).out.find("sinks: none") != std::string::npos);

  const Run j = run({"gen", "--sizes", "1,1,1,1,1,1", "--constraint", "unusual_pair",
                     "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(run({"limit", "-", "--trace"}, j.out).out.find("kappa3-unusual") != std::string::npos);

  CHECK(run({"gen", "--sizes", "3,3", "--constraint", "last_kappa(3)", "--max-tries", "50"})
            .code == kExitUsage);
}

TEST_CASE("bench renders text and json") {
  const Run t = run({"bench", "--sizes", "32,64", "--limit-sizes", "8,12", "--count", "2",
                     "--reps", "1"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("bit-parallel") != std::string::npos);
  const Run j = run({"bench", "--sizes", "32", "--limit-sizes", "8", "--count", "2",
                     "--reps", "1", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto js = nlohmann::json::parse(j.out);
  CHECK(js["multiply"][0]["agree"] == true);
  CHECK(js["limit"][0]["agree"] == js["limit"][0]["instances"]);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"limit", "-", "--format", "xml"}, kCycle3).code == kExitUsage);
  CHECK(run({"verify", "--constraint", "sometimes"}).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("size lists") {
  CHECK(parse_sizes("2,3,2") == std::vector<std::size_t>{2, 3, 2});
  CHECK(parse_sizes("2 3, 4") == std::vector<std::size_t>{2, 3, 4});
  CHECK_THROWS(parse_sizes(""));
  CHECK_THROWS(parse_sizes("2,-1"));
}
