#include <fstream>
#include <iostream>
#include <algorithm>
#include <memory>
#include <random>
#include <unordered_map>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "inputs.hpp"
#include "ledger.hpp"
#include "wsat/count_matroid.hpp"
#include "wsat/error.hpp"
#include "wsat/experiments.hpp"
#include "wsat/generators.hpp"
#include "wsat/hyper_tools.hpp"
#include "wsat/io.hpp"
#include "wsat/lift.hpp"
#include "wsat/linear_matroid.hpp"
#include "wsat/report_json.hpp"
#include "wsat/solver.hpp"

using nlohmann::json;
using namespace wsat;

namespace {

enum ExitCode { kOk = 0, kBadInput = 1, kTimeout = 2, kVerificationFailure = 3 };

struct Config {
  std::string host;
  std::string pattern;
  std::string start;
  std::string matroid;
  std::string mode = "exact";
  std::string out;
  std::string csv;
  std::uint32_t q = 0;
  std::uint32_t k = 1;
  std::size_t d = 0;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 0;
  double timeout = 0;
  unsigned threads = 1;
  std::size_t limit = 0;
  std::int64_t n = 0, r = 2, s = 0;
  std::uint32_t v1 = 0, v2 = 0;
  double p = 0.5;
  std::size_t trials = 20;
  bool shuffle = false;
};

json config_json(const std::string& command, const Config& c) {
  return {{"command", command}, {"host", c.host},   {"pattern", c.pattern}, {"start", c.start},
          {"matroid", c.matroid}, {"mode", c.mode}, {"q", c.q},             {"k", c.k},
          {"d", c.d},             {"prime", c.prime}, {"seed", c.seed},     {"timeout", c.timeout},
          {"limit", c.limit},     {"n", c.n},       {"r", c.r},             {"s", c.s},
          {"v1", c.v1},           {"v2", c.v2},     {"p", c.p},             {"trials", c.trials},
          {"shuffle", c.shuffle}};
}

// Lower-bound matroid on the instances of `host` as selected by --matroid.
std::unique_ptr<MatroidOracle> make_matroid(const Config& c, const UniformHypergraph& host, std::uint32_t default_q) {
  const GroundSet ground(host);
  if (c.matroid == "count") {
    const std::uint32_t q = c.q ? c.q : default_q;
    if (q == 0) throw InvalidInput("--matroid count needs --q");
    return std::make_unique<CountMatroid>(ground, q);
  }
  if (c.matroid == "linear") {
    if (c.d == 0) throw InvalidInput("--matroid linear needs --d");
    const int r = host.uniformity();
    VectorAssignment a = r == 2 ? hyperconnectivity(host.vertex_count(), c.d, c.prime, c.seed)
                                : hyper_clique_assignment(host.vertex_count(), r, static_cast<int>(c.d) + r,
                                                          c.prime, c.seed);
    return std::make_unique<LinearMatroid>(ground, std::move(a));
  }
  if (c.matroid.rfind("file:", 0) == 0) {
    std::ifstream in(c.matroid.substr(5));
    if (!in) throw InvalidInput("cannot open " + c.matroid.substr(5));
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("bad assignment file: ") + e.what());
    }
    return std::make_unique<LinearMatroid>(ground, assignment_from_json(j));
  }
  throw InvalidInput("unknown matroid '" + c.matroid + "' (count|linear|file:<path>)");
}

int run_wsat(const Config& c, json& result) {
  const UniformHypergraph host = cli::resolve_hypergraph(c.host);
  const PatternFamily family = cli::resolve_family(c.pattern);
  std::unique_ptr<MatroidOracle> m;
  if (!c.matroid.empty()) m = make_matroid(c, host, 0);
  std::vector<const MatroidOracle*> oracles;
  if (m) oracles.push_back(m.get());
  SolverOptions opts;
  opts.timeout_seconds = c.timeout;

  WsatReport r;
  if (c.mode == "exhaustive") {
    r = wsat_exhaustive(host, family, opts);
  } else if (c.mode == "bnb") {
    r = wsat_bnb(host, family, oracles, opts);
  } else if (c.mode == "bounds") {
    r = wsat_bounds(host, family, oracles);
  } else if (c.mode == "exact") {
    r = host.instance_count() <= kExhaustiveInstanceCap && oracles.empty() ? wsat_exhaustive(host, family, opts)
                                                                            : wsat_bnb(host, family, oracles, opts);
  } else {
    throw InvalidInput("unknown mode '" + c.mode + "'");
  }
  result = to_json(r);
  return r.timed_out ? kTimeout : kOk;
}

int run_lift(const Config& c, json& result) {
  const UniformHypergraph host = cli::resolve_hypergraph(c.host);
  const UniformHypergraph pattern = cli::resolve_hypergraph(c.pattern);
  const std::string kind = c.matroid.empty() ? "count" : c.matroid;
  Config cc = c;
  cc.matroid = kind;
  const auto m = make_matroid(cc, with_multiplicity(host, c.k), static_cast<std::uint32_t>(binomial(c.k, 2)));
  LiftReport r = lift_bound(host, pattern, c.k, *m);
  r.upper = greedy_upper(host, PatternFamily({pattern})).upper;
  result = to_json(r);
  result.erase("host");
  return kOk;
}

int run_formula(const Config& c, json& result) {
  result = {{"value", clique_wsat_formula(c.n, c.r, c.s)}, {"n", c.n}, {"r", c.r}, {"s", c.s}};
  return kOk;
}

int run_sharpness(const Config& c, json& result) {
  result = to_json(sharpness(cli::resolve_hypergraph(c.pattern)));
  return kOk;
}

int run_appendix(const Config& c, json& result) {
  const AppendixFamily a = appendix_family(static_cast<int>(c.r), c.v1, c.v2);
  json added = json::array();
  for (const Edge& e : a.added_edges) added.push_back(to_json(e));
  result = {{"r", a.uniformity},
            {"v1", a.v1},
            {"v2", a.v2},
            {"components", a.components()},
            {"vertices", a.family.vertex_count()},
            {"edges", a.family.edge_count()},
            {"sharpness", to_json(sharpness(a.family))},
            {"base", to_json(a.base)},
            {"added_edges", added}};
  if (c.limit == 0) result["family"] = to_json(a.family);
  return kOk;
}

int run_closure(const Config& c, json& result) {
  const UniformHypergraph host = cli::resolve_hypergraph(c.host);
  const PatternFamily family = cli::resolve_family(c.pattern);
  const UniformHypergraph start =
      c.start.empty() ? UniformHypergraph(host.uniformity(), host.vertex_count()) : cli::resolve_hypergraph(c.start);
  ClosureOptions opts;
  if (c.shuffle) {
    opts.scan_order.resize(host.edge_count());
    for (std::size_t i = 0; i < host.edge_count(); ++i) opts.scan_order[i] = i;
    std::mt19937_64 rng(c.seed);
    std::shuffle(opts.scan_order.begin(), opts.scan_order.end(), rng);
  }
  const ClosureReport r = closure(host, start, family, opts);
  if (!replay_trace(host, start, family, r)) throw VerificationFailure("closure trace failed to replay");
  result = to_json(r);
  return kOk;
}

int run_verify(const Config& c, json& result) {
  const UniformHypergraph host = cli::resolve_hypergraph(c.host);
  const PatternFamily family = cli::resolve_family(c.pattern);
  if (c.matroid.empty()) throw InvalidInput("verify needs --matroid");
  const auto m = make_matroid(c, host, 0);
  VerifyOptions opts;
  if (c.limit) opts.copy_limit = c.limit;
  const VerificationResult v = verify_weakly_saturated(*m, GroundSet(host), family, opts);
  result = {{"matroid", m->describe()}, {"verification", to_json(v)}, {"rank", rank_full(*m).rank}};
  return v.verified() ? kOk : kVerificationFailure;
}

int run_remark(const Config& c, json& result) {
  RemarkOptions opts;
  opts.trials = c.trials;
  opts.seed = c.seed;
  opts.threads = c.threads;
  opts.timeout_seconds = c.timeout;
  const UniformHypergraph f = c.pattern.empty() ? make_clique(3) : cli::resolve_hypergraph(c.pattern);
  const RemarkSummary s = remark_check(static_cast<Vertex>(c.n), c.p, f, opts);
  if (!c.csv.empty()) {
    std::ofstream out(c.csv);
    if (!out) throw InvalidInput("cannot write " + c.csv);
    out << remark_csv(s);
  }
  result = to_json(s);
  if (s.violations() > 0) return kVerificationFailure;
  return s.skipped() > 0 ? kTimeout : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak saturation numbers of (multi)hypergraphs"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Report path (default stdout)");
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--threads", c.threads, "Worker cap")->check(CLI::PositiveNumber);
    sub->add_option("--timeout", c.timeout, "Time budget in seconds, 0 for none")->check(CLI::NonNegativeNumber);
  };
  auto add_matroid = [&](CLI::App* sub) {
    sub->add_option("--matroid", c.matroid, "count | linear | file:<path>");
    sub->add_option("--q", c.q, "Count matroid capacity");
    sub->add_option("--d", c.d, "Linear construction dimension");
    sub->add_option("--prime", c.prime, "Field characteristic");
  };

  auto* wsat = app.add_subcommand("wsat", "Compute wsat(host, family)");
  wsat->add_option("--host", c.host, "Host generator or file")->required();
  wsat->add_option("--pattern", c.pattern, "Pattern generator or family file")->required();
  wsat->add_option("--mode", c.mode, "exact | bnb | exhaustive | bounds")
      ->check(CLI::IsMember({"exact", "bnb", "exhaustive", "bounds"}));
  add_matroid(wsat);
  add_common(wsat);

  auto* lift = app.add_subcommand("lift", "Lower bound from the k-fold multigraph lift");
  lift->add_option("--host", c.host)->required();
  lift->add_option("--pattern", c.pattern)->required();
  lift->add_option("--k", c.k, "Lift multiplicity")->check(CLI::PositiveNumber);
  add_matroid(lift);
  add_common(lift);

  auto* formula = app.add_subcommand("formula", "C(n,r) - C(n-s+r,r)");
  formula->add_option("--n", c.n)->required();
  formula->add_option("--r", c.r);
  formula->add_option("--s", c.s)->required();
  add_common(formula);

  auto* sharp = app.add_subcommand("sharpness", "Sharpness of a hypergraph");
  sharp->add_option("--pattern", c.pattern)->required();
  add_common(sharp);

  auto* appendix = app.add_subcommand("appendix-family", "Build F(v1, v2)");
  appendix->add_option("--r", c.r)->required();
  appendix->add_option("--v1", c.v1)->required();
  appendix->add_option("--v2", c.v2)->required();
  appendix->add_option("--limit", c.limit, "Nonzero omits the full family from the report");
  add_common(appendix);

  auto* clo = app.add_subcommand("closure", "Bootstrap closure with trace");
  clo->add_option("--host", c.host)->required();
  clo->add_option("--pattern", c.pattern)->required();
  clo->add_option("--start", c.start, "Start graph (default empty)");
  clo->add_flag("--shuffle", c.shuffle, "Scan edges in a seeded random order");
  add_common(clo);

  auto* ver = app.add_subcommand("verify", "Check a matroid is weakly saturated");
  ver->add_option("--host", c.host)->required();
  ver->add_option("--pattern", c.pattern)->required();
  ver->add_option("--limit", c.limit, "Copy limit per pattern (uncertified)");
  add_matroid(ver);
  add_common(ver);

  auto* remark = app.add_subcommand("remark", "Random graph comparison against K_n");
  remark->add_option("--n", c.n)->required();
  remark->add_option("--p", c.p)->check(CLI::Range(0.0, 1.0));
  remark->add_option("--pattern", c.pattern, "Graph pattern (default clique:3)");
  remark->add_option("--trials", c.trials);
  remark->add_option("--csv", c.csv, "Per-trial CSV output");
  add_common(remark);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::unordered_map<std::string, int (*)(const Config&, json&)> handlers = {
      {"wsat", run_wsat},       {"lift", run_lift},       {"formula", run_formula},
      {"sharpness", run_sharpness}, {"appendix-family", run_appendix}, {"closure", run_closure},
      {"verify", run_verify},   {"remark", run_remark}};

  json result;
  int code = kOk;
  try {
    code = handlers.at(command)(c, result);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    result = {{"error", e.what()}};
    code = kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    result = {{"error", e.what()}};
    code = kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    result = {{"error", e.what()}};
    code = kBadInput;
  }

  const json config = config_json(command, c);
  json report = result;
  report["config"] = config;
  report["config_hash"] = cli::hex64(cli::fnv1a(config.dump()));
  report["exit_code"] = code;
  report["timestamp"] = cli::utc_timestamp();

  const std::string text = report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out);
    if (!out) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kBadInput;
    }
    out << text;
  }
  cli::append_ledger(command, config, result, code);
  return code;
}
