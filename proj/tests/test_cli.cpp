#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mdecomp/matroid.hpp"

#include <json.hpp>

namespace {

constexpr const char* kK4MinusEdge =
    R"({"kind":"graphic","vertices":["a","b","c","d"],
        "edges":[["a","b"],["b","c"],["a","c"],["c","d"],["a","d"]]})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = mdecomp::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string uniform_spec(int r, int n) {
  return R"({"kind":"uniform","r":)" + std::to_string(r) + R"(,"n":)" + std::to_string(n) + "}";
}

}  // namespace

using mdecomp::cli::Exit;

TEST_CASE("info") {
  const Result u24 = run({"info"}, uniform_spec(2, 4));
  CHECK(u24.code == Exit::kOk);
  CHECK(u24.out.find("3-connected: true") != std::string::npos);
  const Result triangle =
      run({"info", "-"}, R"({"kind":"graphic","vertices":[1,2,3],"edges":[[1,2],[2,3],[1,3]]})");
  CHECK(triangle.out.find("rank: 2") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"info", "--format", "json"}, kK4MinusEdge).out);
  CHECK(j["rank"] == 3);
  CHECK(j["circuits"] == 3);
  CHECK(j["three_connected"] == false);
}

TEST_CASE("separations") {
  const auto k4e = nlohmann::json::parse(run({"separations"}, kK4MinusEdge).out);
  CHECK(k4e["count"] == 2);
  for (const auto& s : k4e["separations"]) CHECK(s["good"] == true);
  const auto u34 = nlohmann::json::parse(run({"separations", "--good-only"}, uniform_spec(3, 4)).out);
  CHECK(u34["count"] == 0);
  CHECK(nlohmann::json::parse(run({"separations"}, uniform_spec(3, 4)).out)["count"] == 3);
  CHECK(nlohmann::json::parse(run({"separations"}, uniform_spec(2, 4)).out)["count"] == 0);
  const auto k3 = nlohmann::json::parse(run({"separations", "--k", "3"}, uniform_spec(2, 4)).out);
  CHECK(k3["k"] == 3);
}

TEST_CASE("decompose") {
  const Result k4e = run({"decompose"}, kK4MinusEdge);
  REQUIRE(k4e.code == Exit::kOk);
  const auto j = nlohmann::json::parse(k4e.out);
  CHECK(j["nodes"].size() == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["adhesion"] == 2);
  CHECK(j["irredundant"] == true);

  const auto u24 = nlohmann::json::parse(run({"decompose"}, uniform_spec(2, 4)).out);
  CHECK(u24["nodes"].size() == 1);
  CHECK(u24["nodes"][0]["torso"]["kind"] == "3-connected");

  const Result dot = run({"decompose", "--format", "dot"}, kK4MinusEdge);
  CHECK(dot.out.rfind("graph decomposition {", 0) == 0);
  std::size_t edges = 0;
  for (auto pos = dot.out.find(" -- "); pos != std::string::npos; pos = dot.out.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 2);
}

TEST_CASE("decompose output is byte-identical across runs") {
  const std::string first = run({"decompose"}, kK4MinusEdge).out;
  for (int i = 0; i < 10; ++i) CHECK(run({"decompose"}, kK4MinusEdge).out == first);
}

TEST_CASE("verify") {
  const Result ok = run({"verify", "--suite", "duality"}, kK4MinusEdge);
  CHECK(ok.code == Exit::kOk);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(run({"verify"}, uniform_spec(3, 5)).code == Exit::kOk);
  const Result bad = run({"verify"}, R"({"kind":"circuits","ground":["a","b"],"circuits":[["a"],["a","b"]]})");
  CHECK(bad.code == Exit::kBadInput);
  CHECK(bad.err.find("AxiomViolation") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"info"}, "{not json").code == Exit::kBadInput);
  CHECK(run({"frobnicate"}, kK4MinusEdge).code == Exit::kBadInput);
  CHECK(run({"decompose"}, uniform_spec(1, 2)).code == Exit::kInputTooSmall);
  const std::string split = R"({"kind":"circuits","ground":["a","b","c","x","y","z"],
                                "circuits":[["a","b","c"],["x","y","z"]]})";
  CHECK(run({"decompose"}, split).code == Exit::kDisconnectedInput);
  CHECK(run({"separations", "--good-only"}, split).code == Exit::kDisconnectedInput);
  CHECK(run({"info"}, split).code == Exit::kOk);
  CHECK(run({"info"}, uniform_spec(2, 16)).code == Exit::kOverCap);
  CHECK(run({"--cap", "16", "info"}, uniform_spec(2, 16)).code == Exit::kOk);
  CHECK(run({"--cap", "30", "info"}, uniform_spec(2, 4)).code == Exit::kBadInput);
  CHECK(run({"info", "/nonexistent/spec.json"}, "").code == Exit::kBadInput);
  // The cap is restored after each run.
  CHECK(mdecomp::enumeration_cap() == mdecomp::kDefaultEnumerationCap);
}

TEST_CASE("validation level is selectable") {
  const std::string bowtie = R"({"kind":"circuits","ground":[0,1,2,3,4],"circuits":[[0,1,2],[2,3,4]]})";
  CHECK(run({"info"}, bowtie).code == Exit::kBadInput);
  CHECK(run({"--validate", "antichain", "info"}, bowtie).code == Exit::kOk);
}
