#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hdecomp/bounds.hpp"
#include "hdecomp/decomposition.hpp"
#include "hdecomp/io.hpp"
#include "hdecomp/verification.hpp"

namespace hdecomp::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20180501;

struct RunConfig {
  std::optional<Vertex> n;
  std::optional<Vertex> r;
  std::optional<Vertex> k;
  std::optional<Vertex> i;
  std::string pattern = "two-edge";
  std::string in;
  std::string out;
  std::string format = "text";
  std::uint64_t budget_nodes = 10'000'000;
  std::optional<double> budget_seconds;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::optional<int> theorem;
  std::string inequality;
  Vertex rmax = 4;
  Vertex nmax = 9;
  std::optional<Vertex> nmin;
  Vertex kmax = 6;
  std::int64_t span = 1000;
  std::size_t samples = 0;
  bool timings = false;

  SearchBudget budget() const { return SearchBudget{budget_nodes, budget_seconds}; }
};

Vertex require(const std::optional<Vertex>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing --") + flag);
  return *v;
}

PatternH make_pattern(const RunConfig& c, Vertex r) {
  const Vertex k = require(c.k, "k");
  if (c.pattern == "two-edge") return PatternH::two_edge(r, k);
  if (c.pattern == "k-matching") return PatternH::independent_edges(r, k);
  if (c.pattern == "common-i") return PatternH::common_intersection(r, k, require(c.i, "i"));
  throw InvalidArgument("unknown pattern \"" + c.pattern + "\"");
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  const Vertex n = require(c.n, "n");
  const Vertex r = require(c.r, "r");
  if (r < 1 || n < r) throw InvalidArgument("gen needs n >= r >= 1");
  const auto g = c.k ? extremal_candidate(n, r, *c.k) : complete_hypergraph(n, r);
  emit(c, out, to_json(g).dump() + "\n");
  return kOk;
}

int cmd_phi(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Hypergraph g = c.in.empty() ? complete_hypergraph(require(c.n, "n"), require(c.r, "r"))
                                    : hypergraph_from_json(Json::parse(read_file(c.in)));
  const auto pattern = make_pattern(c, g.r());
  const auto result = phi(g, pattern, c.budget());
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (c.format == "json") {
    Json j;
    j["phi"] = result.value;
    j["source"] = to_string(result.source);
    j["exact"] = result.exact;
    j["edges"] = g.edge_count();
    j["pattern"] = pattern.name();
    if (result.factor_status) j["factor_status"] = to_string(*result.factor_status);
    out << j.dump() << '\n';
  } else {
    out << "phi " << result.value << '\n';
    out << "source " << to_string(result.source) << '\n';
    out << "exact " << (result.exact ? "true" : "false") << '\n';
    if (!result.exact) out << "bound upper\n";
  }
  err << "elapsed_ms " << ms << '\n';

  if (!c.out.empty()) {
    if (result.decomposition) {
      write_file(c.out, to_json(*result.decomposition, result.value).dump() + "\n");
    } else {
      err << "no explicit decomposition (factor certified, not constructed); nothing written\n";
    }
  }
  return result.exact ? kOk : kBudget;
}

int report_exit(const std::vector<VerificationReport>& reports) {
  bool budget = false;
  for (const auto& report : reports) {
    if (std::any_of(report.flags.begin(), report.flags.end(), [](const auto& f) { return !f.second; })) {
      return kMismatch;
    }
    budget = budget || report.budget_exceeded;
  }
  return budget ? kBudget : kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions options;
  options.budget = c.budget();
  options.jobs = c.jobs;
  std::vector<VerificationReport> reports;
  if (c.theorem && !c.inequality.empty()) throw InvalidArgument("choose one of --theorem and --inequality");
  if (c.theorem == 1) {
    const auto grid = theorem1_grid(c.rmax, c.nmax);
    reports = verify_theorem1(grid, options);
    if (c.samples > 0) {
      auto extra = verify_monotonicity(grid, c.samples, c.seed, c.jobs);
      reports.insert(reports.end(), extra.begin(), extra.end());
    }
  } else if (c.theorem == 2) {
    const auto grid = theorem2_grid(require(c.r, "r"), require(c.k, "k"), c.nmax, c.nmin);
    reports = verify_theorem2(grid, options);
  } else if (c.inequality == "6") {
    reports = verify_degree_condition(c.kmax, c.rmax, c.span, c.jobs);
  } else if (c.inequality == "ratio") {
    reports = verify_ratio_inequality(c.rmax, c.nmax, c.jobs);
  } else {
    throw InvalidArgument("verify needs --theorem {1|2} or --inequality {6|ratio}");
  }
  std::ostringstream lines;
  for (const auto& report : reports) lines << to_json(report, c.timings).dump() << '\n';
  emit(c, out, lines.str());
  return report_exit(reports);
}

int cmd_probe(const RunConfig& c, std::ostream& out) {
  const auto report = conjecture_probe(require(c.n, "n"), require(c.r, "r"), require(c.k, "k"), require(c.i, "i"),
                                       c.budget());
  if (c.format == "json") {
    out << to_json(report, c.timings).dump() << '\n';
  } else {
    out << "n=" << *c.n << " r=" << *c.r << " k=" << *c.k << " i=" << *c.i << " phi=" << *report.value("phi")
        << " conjectured=" << *report.value("conjectured")
        << " verdict=" << (*report.flag("matches_conjecture") ? "agree" : "disagree")
        << (report.budget_exceeded ? " (budget exceeded: phi is an upper bound)" : "") << '\n';
  }
  return report.budget_exceeded ? kBudget : kOk;
}

int cmd_graph(const RunConfig& c, std::ostream& out) {
  IntersectionGraph g;
  if (c.in.empty()) {
    g = johnson_general(require(c.n, "n"), require(c.r, "r"), require(c.k, "k"));
  } else {
    const auto h = hypergraph_from_json(Json::parse(read_file(c.in)));
    g = intersection_graph(h, c.k.value_or(0));
  }
  emit(c, out, c.format == "json" ? to_json(g).dump() + "\n" : to_edge_list_text(g));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"H-decomposition numbers of r-uniform hypergraphs"};
  app.require_subcommand(1);

  auto add_nrk = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "vertex count");
    sub->add_option("--r", c.r, "uniformity");
    sub->add_option("--k", c.k, "pattern parameter k");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", c.budget_nodes, "search node limit")->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", c.budget_seconds, "search wall-clock limit")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "write K_n^r, or the canonical K_n^r - le when --k is given");
  add_nrk(gen);
  gen->add_option("--out", c.out, "output file (default: stdout)");

  auto* phi_cmd = app.add_subcommand("phi", "compute phi_H(G) for K_n^r or --in");
  add_nrk(phi_cmd);
  phi_cmd->add_option("--i", c.i, "core size for common-i");
  phi_cmd->add_option("--pattern", c.pattern)->check(CLI::IsMember({"two-edge", "k-matching", "common-i"}));
  phi_cmd->add_option("--in", c.in, "hypergraph JSON");
  phi_cmd->add_option("--out", c.out, "decomposition JSON output");
  phi_cmd->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  add_budget(phi_cmd);

  auto* verify = app.add_subcommand("verify", "run verification grids; JSON lines out");
  add_nrk(verify);
  verify->add_option("--theorem", c.theorem)->check(CLI::IsMember({1, 2}));
  verify->add_option("--inequality", c.inequality)->check(CLI::IsMember({"6", "ratio"}));
  verify->add_option("--rmax", c.rmax);
  verify->add_option("--nmax", c.nmax);
  verify->add_option("--nmin", c.nmin, "first n of a theorem-2 grid (default n0)");
  verify->add_option("--kmax", c.kmax);
  verify->add_option("--span", c.span);
  verify->add_option("--samples", c.samples, "random subgraphs per theorem-1 point");
  verify->add_option("--seed", c.seed, "seed for sampled checks");
  verify->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", c.out, "JSON lines output (default: stdout)");
  verify->add_flag("--timings", c.timings, "include elapsed_ms in reports");
  add_budget(verify);

  auto* probe = app.add_subcommand("probe", "compare phi(K_n^r) for the common-i pattern with the k-matching formula");
  add_nrk(probe);
  probe->add_option("--i", c.i, "core size");
  probe->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  probe->add_flag("--timings", c.timings, "include elapsed_ms in JSON");
  add_budget(probe);

  auto* graph = app.add_subcommand("graph", "export J(n,r,k), or the intersection graph of --in");
  add_nrk(graph);
  graph->add_option("--in", c.in, "hypergraph JSON");
  graph->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  graph->add_option("--out", c.out, "output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(c, out);
    if (phi_cmd->parsed()) return cmd_phi(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out);
    if (probe->parsed()) return cmd_probe(c, out);
    if (graph->parsed()) return cmd_graph(c, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const TheoryViolation& e) {
    err << "theory violation: " << e.what() << '\n';
    return kMismatch;
  }
  return kBadInput;
}

}  // namespace hdecomp::cli
