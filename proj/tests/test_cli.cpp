#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hdecomp/decomposition.hpp"
#include "hdecomp/io.hpp"

using namespace hdecomp;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const char* dir = std::getenv("HDECOMP_TMP");
  const auto base = dir ? std::filesystem::path(dir) : std::filesystem::temp_directory_path();
  return (base / ("cli_" + name)).string();
}

}  // namespace

TEST_CASE("gen writes hypergraph JSON") {
  const auto a = run({"gen", "--n", "11", "--r", "2", "--k", "2"});
  CHECK(a.code == cli::kOk);
  CHECK(hypergraph_from_json(Json::parse(a.out)).edge_count() == 55);

  const auto b = run({"gen", "--n", "21", "--r", "2", "--k", "3"});
  CHECK(b.code == cli::kOk);
  const auto g = hypergraph_from_json(Json::parse(b.out));
  CHECK(g.edge_count() == 209);
  CHECK(g == extremal_candidate(21, 2, 3));
}

TEST_CASE("bad input exits 1") {
  CHECK(run({"gen", "--n", "2", "--r", "3"}).code == cli::kBadInput);
  CHECK(run({"phi", "--n", "5", "--r", "3", "--pattern", "triangle", "--k", "1"}).code == cli::kBadInput);
  CHECK(run({"phi", "--n", "5", "--r", "3", "--pattern", "two-edge", "--k", "3"}).code == cli::kBadInput);
  CHECK(run({"phi", "--n", "5", "--r", "3"}).code == cli::kBadInput);
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"verify"}).code == cli::kBadInput);
  CHECK(run({"phi", "--in", scratch("missing.json"), "--k", "1"}).code == cli::kBadInput);

  const auto path = scratch("broken.json");
  write_file(path, R"({"n":4,"r":2,"edges":[[1,0]]})");
  CHECK(run({"phi", "--in", path, "--pattern", "k-matching", "--k", "2"}).code == cli::kBadInput);
  write_file(path, "not json");
  CHECK(run({"phi", "--in", path, "--pattern", "k-matching", "--k", "2"}).code == cli::kBadInput);
}

TEST_CASE("phi prints value and source") {
  const auto a = run({"phi", "--n", "5", "--r", "3", "--pattern", "two-edge", "--k", "1"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == "phi 5\nsource constructive\nexact true\n");
  CHECK(a.err.rfind("elapsed_ms ", 0) == 0);

  const auto b = run({"phi", "--n", "11", "--r", "2", "--pattern", "k-matching", "--k", "2", "--format", "json"});
  CHECK(b.code == cli::kOk);
  const auto j = Json::parse(b.out);
  CHECK(j["phi"] == 28);
  CHECK(j["exact"] == true);
}

TEST_CASE("budget exhaustion exits 2 with an upper bound") {
  const auto path = scratch("k30.json");
  REQUIRE(run({"gen", "--n", "30", "--r", "2", "--out", path}).code == cli::kOk);
  const auto a = run({"phi", "--in", path, "--pattern", "common-i", "--k", "3", "--i", "1", "--budget-nodes", "10"});
  CHECK(a.code == cli::kBudget);
  CHECK(a.out.find("exact false") != std::string::npos);
  CHECK(a.out.find("bound upper") != std::string::npos);
}

TEST_CASE("verify runs grids and exits 0 when everything agrees") {
  const auto a = run({"verify", "--theorem", "1", "--rmax", "3", "--nmax", "7"});
  CHECK(a.code == cli::kOk);
  std::istringstream lines(a.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = Json::parse(line);
    CHECK(j["check"] == "theorem1");
    ++count;
  }
  CHECK(count == theorem1_grid(3, 7).size());

  CHECK(run({"verify", "--theorem", "2", "--k", "2", "--r", "2", "--nmax", "12"}).code == cli::kOk);
  CHECK(run({"verify", "--inequality", "6", "--kmax", "3", "--rmax", "3", "--span", "50"}).code == cli::kOk);
  CHECK(run({"verify", "--inequality", "ratio", "--rmax", "3", "--nmax", "40"}).code == cli::kOk);
  CHECK(run({"verify", "--theorem", "1", "--inequality", "6"}).code == cli::kBadInput);
}

TEST_CASE("verify output is byte-identical across runs and job counts") {
  const std::vector<std::string> base{"verify", "--theorem", "1", "--rmax", "3", "--nmax", "8", "--samples", "20"};
  auto parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const auto a = run(base);
  const auto b = run(base);
  const auto c = run(parallel);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto reseeded = base;
  reseeded.insert(reseeded.end(), {"--seed", "7"});
  CHECK(run(reseeded).code == cli::kOk);
}

TEST_CASE("probe prints a verdict and exits 0") {
  const auto a = run({"probe", "--n", "6", "--r", "2", "--k", "2", "--i", "1"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == "n=6 r=2 k=2 i=1 phi=8 conjectured=8 verdict=agree\n");
  const auto b = run({"probe", "--n", "7", "--r", "3", "--k", "2", "--i", "2", "--format", "json"});
  CHECK(b.code == cli::kOk);
  CHECK(Json::parse(b.out)["check"] == "probe");
}

TEST_CASE("graph export") {
  const auto text = run({"graph", "--n", "4", "--r", "2", "--k", "0"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out == "p edge 6 3\ne 1 6\ne 2 5\ne 3 4\n");
  const auto json = run({"graph", "--n", "5", "--r", "3", "--k", "1", "--format", "json"});
  const auto j = Json::parse(json.out);
  CHECK(j["vertex_count"] == 10);
  CHECK(j["adjacency"].size() == 10);
}

TEST_CASE("files written by the CLI round-trip through the readers") {
  const auto graph_path = scratch("g.json");
  const auto decomposition_path = scratch("d.json");
  REQUIRE(run({"gen", "--n", "12", "--r", "2", "--k", "2", "--out", graph_path}).code == cli::kOk);
  const auto g = hypergraph_from_json(Json::parse(read_file(graph_path)));
  CHECK(g.edge_count() == 65);

  const auto a = run({"phi", "--in", graph_path, "--pattern", "k-matching", "--k", "2", "--out", decomposition_path});
  CHECK(a.code == cli::kOk);
  CHECK(a.out.rfind("phi 33\n", 0) == 0);
  const auto d = decomposition_from_json(Json::parse(read_file(decomposition_path)));
  CHECK(validate_decomposition(g, PatternH::independent_edges(2, 2), d));
  CHECK(d.size() == 33);

  const auto reports_path = scratch("reports.jsonl");
  REQUIRE(run({"verify", "--theorem", "1", "--rmax", "2", "--nmax", "5", "--out", reports_path}).code == cli::kOk);
  const auto written = read_file(reports_path);
  CHECK(written == run({"verify", "--theorem", "1", "--rmax", "2", "--nmax", "5"}).out);
}
