#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "kcut/bench.hpp"
#include "kcut/cut_primitives.hpp"
#include "kcut/io.hpp"
#include "kcut/laminar.hpp"
#include "kcut/mincut_tree.hpp"
#include "kcut/partial_vc.hpp"
#include "kcut/reduction.hpp"
#include "kcut/report.hpp"
#include "kcut/rng.hpp"

namespace kcut::cli {

using nlohmann::json;

std::string format_weight(double w) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
  std::string s(buf, ec == std::errc{} ? end : buf);
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

namespace {

struct Common {
  std::string file;
  int k = 2;
  std::uint64_t seed = 0;
  bool json = false;
  bool with_oracle = false;
};

struct Options {
  Common c;
  // gen
  std::string kind;
  std::string out_path;
  InstanceSpec spec;
  std::uint64_t gen_seed = 0;
  bool gen_seed_given = false;
  // algorithms
  double eps1 = 0.05;
  double delta = 0.1;
  std::string config_path;
  std::string tie_break = "first";
  bool randomized = false;
  // bench
  std::string suite;
  std::uint64_t bench_seed = 1;
  bool no_timing = false;
};

json partition_json(const Partition& p) {
  json parts = json::array();
  for (const auto& part : canonical(p).parts) parts.push_back(part);
  return parts;
}

RunReport file_report(const Common& c, const std::string& algorithm, json config) {
  RunReport r;
  r.instance.kind = InstanceKind::file;
  r.instance.path = c.file;
  r.algorithm = algorithm;
  r.config = std::move(config);
  r.seed = c.seed;
  return r;
}

class Timer {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs a k-cut command and prints its partition and weight, or the report.
void emit_partition(std::ostream& out, const Common& c, const WeightedGraph& g, RunReport report,
                    const Partition& p, std::int64_t ms) {
  report.weight = p.cut_weight;
  report.wall_time_ms = ms;
  if (c.with_oracle) attach_oracle(report, exact_kcut_oracle(g, static_cast<int>(p.size())).cut_weight);
  if (c.json) {
    json j = to_json(report);
    j["partition"] = partition_json(p);
    out << j.dump(2) << '\n';
    return;
  }
  write_partition(p, out);
  out << "weight " << format_weight(p.cut_weight) << '\n';
  if (report.oracle_weight) out << "oracle " << format_weight(*report.oracle_weight) << '\n';
}

void add_common(CLI::App* cmd, Common& c, bool with_k) {
  cmd->add_option("file", c.file, "Graph file")->required()->check(CLI::ExistingFile);
  if (with_k) cmd->add_option("-k", c.k, "Number of parts")->required()->check(CLI::PositiveNumber);
  cmd->add_flag("--json", c.json, "Print a JSON run report");
  cmd->add_flag("--with-oracle", c.with_oracle, "Also compute the exact optimum");
}

int dispatch(CLI::App& app, Options& o, std::ostream& out, std::ostream& err) {
  const Common& c = o.c;
  if (app.got_subcommand("gen")) {
    InstanceSpec spec = o.spec;
    spec.kind = instance_kind_from_string(o.kind);
    if (o.gen_seed_given) spec.seed = o.gen_seed;
    const auto inst = make_instance(spec);
    write_graph(inst.graph, o.out_path);
    out << "wrote " << o.out_path << ": n=" << inst.graph.num_vertices()
        << " m=" << inst.graph.num_edges() << '\n';
    if (inst.planted) {
      out << "planted weight " << format_weight(inst.planted->cut_weight) << '\n';
      write_partition(*inst.planted, out);
    }
    return kOk;
  }
  if (app.got_subcommand("bench")) {
    BenchOptions bo;
    bo.seed = o.bench_seed;
    bo.timing = !o.no_timing;
    const auto reports = run_suite(suite_from_string(o.suite), bo);
    std::ofstream file(o.out_path);
    if (!file) throw InvalidInput("cannot write " + o.out_path);
    file << to_json(reports).dump(2) << '\n';
    out << "wrote " << reports.size() << " reports to " << o.out_path << '\n';
    return kOk;
  }

  const WeightedGraph g = read_graph(c.file);
  if (app.got_subcommand("dump-tree")) {
    write_tree(out, build_mincut_tree(g, o.eps1));
    return kOk;
  }
  if (app.got_subcommand("pvc")) {
    const PvcInstance instance{g, c.k, o.delta};
    validate(instance);
    Timer timer;
    const auto sol = pvc_general(instance, derive_seed(c.seed, "pvc"));
    RunReport r = file_report(c, "pvc_general", {{"k", c.k}, {"delta", o.delta}});
    r.weight = sol.value;
    r.wall_time_ms = timer.elapsed_ms();
    if (c.with_oracle) attach_oracle(r, pvc_bruteforce(instance).value);
    if (c.json) {
      json j = to_json(r);
      j["chosen"] = sol.chosen;
      out << j.dump(2) << '\n';
    } else {
      out << "chosen";
      for (Vertex v : sol.chosen) out << ' ' << v;
      out << "\nvalue " << format_weight(sol.value) << '\n';
      if (r.oracle_weight) out << "oracle " << format_weight(*r.oracle_weight) << '\n';
    }
    return kOk;
  }

  Timer timer;
  if (app.got_subcommand("mincut")) {
    const Cut cut = global_mincut(g);
    const auto p = make_partition(g, {complement(cut.side, g.num_vertices()), cut.side});
    emit_partition(out, c, g, file_report(c, "mincut", json::object()), p, timer.elapsed_ms());
  } else if (app.got_subcommand("min4cut")) {
    MinFourCutOptions mo;
    mo.mode = o.randomized ? FourCutMode::randomized : FourCutMode::exact;
    mo.seed = derive_seed(c.seed, "min4");
    mo.max_exact_vertices = default_oracle_max_vertices();
    const auto p = min_four_cut(g, mo);
    if (!p) throw InvalidInput("min4cut needs at least four vertices");
    emit_partition(out, c, g,
                   file_report(c, "min4cut", {{"mode", o.randomized ? "randomized" : "exact"}}), *p,
                   timer.elapsed_ms());
  } else if (app.got_subcommand("oracle")) {
    const auto p = exact_kcut_oracle(g, c.k);
    emit_partition(out, c, g, file_report(c, "oracle", {{"k", c.k}}), p, timer.elapsed_ms());
  } else if (app.got_subcommand("laminar")) {
    LaminarOptions lo;
    lo.seed = derive_seed(c.seed, "laminar");
    const auto p = laminar(g, c.k, o.eps1, o.delta, lo);
    emit_partition(out, c, g,
                   file_report(c, "laminar", {{"k", c.k}, {"eps1", o.eps1}, {"delta", o.delta}}), p,
                   timer.elapsed_ms());
  } else if (app.got_subcommand("solve")) {
    EpsilonConfig cfg = default_config();
    if (!o.config_path.empty()) {
      std::ifstream in(o.config_path);
      if (!in) throw InvalidInput("cannot open " + o.config_path);
      cfg = config_from_json(json::parse(in));
    }
    ReductionOptions ro;
    ro.seed = c.seed;
    const auto result = main_kcut_detailed(g, c.k, cfg, ro);
    json config = to_json(cfg);
    config["k"] = c.k;
    for (const auto& w : result.stats.warnings) err << "warning: " << w << '\n';
    emit_partition(out, c, g, file_report(c, "main_kcut", std::move(config)), result.partition,
                   timer.elapsed_ms());
  } else if (app.got_subcommand("baseline")) {
    const TieBreak tie = o.tie_break == "adversarial" ? TieBreak::adversarial : TieBreak::first;
    const auto p = greedy_sv(g, c.k, tie);
    emit_partition(out, c, g, file_report(c, "greedy_sv", {{"k", c.k}, {"tie_break", o.tie_break}}),
                   p, timer.elapsed_ms());
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate minimum k-cut toolkit", "kcut"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("kind", o.kind, "two_clique | planted_laminar | random_gnp | star_pvc")
      ->required()
      ->check(CLI::IsMember({"two_clique", "planted_laminar", "random_gnp", "star_pvc"}));
  gen->add_option("-o,--out", o.out_path, "Output graph file")->required();
  gen->add_option("-k", o.spec.k, "Clique size or number of planted parts");
  gen->add_option("-n", o.spec.n, "Vertices (random_gnp), per part (planted_laminar) or leaves");
  gen->add_option("-p,--p", o.spec.p, "Edge probability");
  gen->add_option("--w-min", o.spec.w_min, "Smallest edge weight");
  gen->add_option("--w-max", o.spec.w_max, "Largest edge weight");
  gen->add_option("--vertex-w-max", o.spec.vertex_w_max, "Largest vertex weight (0: none)");
  gen->add_option("--eps1", o.spec.eps1, "Near-mincut slack of planted boundaries");
  gen->add_option("--seed", o.gen_seed, "Generator seed")->each([&](const std::string&) {
    o.gen_seed_given = true;
  });

  auto* mincut = app.add_subcommand("mincut", "Global minimum cut");
  add_common(mincut, o.c, false);

  auto* min4 = app.add_subcommand("min4cut", "Minimum 4-cut");
  add_common(min4, o.c, false);
  min4->add_flag("--randomized", o.randomized, "Use random contraction");
  min4->add_option("--seed", o.c.seed, "Seed");

  auto* oracle = app.add_subcommand("oracle", "Exact minimum k-cut");
  add_common(oracle, o.c, true);

  auto* pvc = app.add_subcommand("pvc", "Partial vertex cover (k vertices)");
  add_common(pvc, o.c, true);
  pvc->add_option("--delta", o.delta, "Accuracy")->check(CLI::Range(0.0, 1.0));
  pvc->add_option("--seed", o.c.seed, "Seed");

  auto* lam = app.add_subcommand("laminar", "k-cut for laminar near-mincut families");
  add_common(lam, o.c, true);
  lam->add_option("--eps1", o.eps1, "Near-mincut slack")->required();
  lam->add_option("--delta", o.delta, "Partial VC accuracy (0: exact)");
  lam->add_option("--seed", o.c.seed, "Seed");

  auto* solve = app.add_subcommand("solve", "Approximate minimum k-cut");
  add_common(solve, o.c, true);
  solve->add_option("--config", o.config_path, "Epsilon config (JSON)")->check(CLI::ExistingFile);
  solve->add_option("--seed", o.c.seed, "Seed");

  auto* baseline = app.add_subcommand("baseline", "Iterative greedy mincut splitting");
  add_common(baseline, o.c, true);
  baseline->add_option("--tie-break", o.tie_break, "first | adversarial")
      ->check(CLI::IsMember({"first", "adversarial"}));

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", o.suite, "oracle | paper | pvc")
      ->required()
      ->check(CLI::IsMember({"oracle", "paper", "pvc"}));
  bench->add_option("--out", o.out_path, "Report file (JSON array)")->required();
  bench->add_option("--seed", o.bench_seed, "Suite seed")->capture_default_str();
  bench->add_flag("--no-timing", o.no_timing, "Report wall_time_ms as 0");

  auto* tree = app.add_subcommand("dump-tree", "Print the (1+eps1)-mincut tree");
  tree->add_option("file", o.c.file, "Graph file")->required()->check(CLI::ExistingFile);
  tree->add_option("--eps1", o.eps1, "Near-mincut slack")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    return dispatch(app, o, out, err);
  } catch (const NotLaminar& e) {
    err << "not laminar: " << e.what() << '\n';
    return kAlgorithmError;
  } catch (const SizeGuardExceeded& e) {
    err << "size guard: " << e.what() << '\n';
    return kAlgorithmError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAlgorithmError;
  }
}

}  // namespace kcut::cli
