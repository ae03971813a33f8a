// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. Arguments, if any, select criteria by number.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "kcut/bench.hpp"
#include "kcut/cut_primitives.hpp"
#include "kcut/generators.hpp"
#include "kcut/laminar.hpp"
#include "kcut/mincut_tree.hpp"
#include "kcut/partial_vc.hpp"
#include "kcut/reduction.hpp"
#include "kcut/report.hpp"
#include "kcut/rng.hpp"

using namespace kcut;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

constexpr double kTol = 1e-9;

Verdict mincut_equivalence() {
  std::mt19937_64 rng(1001);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 8);
    const auto g = gen_random_gnp(n, 0.5, 1, 10, rng());
    if (global_mincut(g).weight != exact_kcut_oracle(g, 2).cut_weight) ++bad;
  }
  return {bad == 0, std::to_string(bad) + "/200 mismatches"};
}

Verdict min4_equivalence() {
  std::mt19937_64 rng(1002);
  int exact_bad = 0, randomized_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 6);
    const auto g = gen_random_gnp(n, 0.5, 1, 10, rng());
    const double opt = exact_kcut_oracle(g, 4).cut_weight;
    if (min_four_cut(g)->cut_weight != opt) ++exact_bad;
    MinFourCutOptions o;
    o.mode = FourCutMode::randomized;
    o.seed = rng();
    if (min_four_cut(g, o)->cut_weight == opt) ++randomized_ok;
  }
  return {exact_bad == 0 && randomized_ok >= 99,
          "exact mismatches " + std::to_string(exact_bad) + ", randomized matches " +
              std::to_string(randomized_ok) + "/100"};
}

Verdict pvc_ratio(const std::vector<RunReport>& reports) {
  std::size_t within = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    if (r.ratio && *r.ratio <= 1.1 + kTol) ++within;
    worst = std::max(worst, r.ratio.value_or(std::numeric_limits<double>::infinity()));
  }
  return {100 * within >= 99 * reports.size(),
          std::to_string(within) + "/" + std::to_string(reports.size()) + " within 1.1, worst " + fmt(worst)};
}

// Brute-force near-mincut family as sorted canonical sides.
std::vector<std::pair<VertexSet, double>> brute_near(const WeightedGraph& g, double eps) {
  const auto cuts = fixtures::all_cuts(g);
  double mc = std::numeric_limits<double>::infinity();
  for (const auto& c : cuts) mc = std::min(mc, c.second);
  std::vector<std::pair<VertexSet, double>> out;
  for (const auto& [mask, w] : cuts)
    if (w <= (1 + eps) * mc + kTol) out.push_back({fixtures::mask_to_set(mask), w});
  std::sort(out.begin(), out.end());
  return out;
}

WeightedGraph random_tree(std::mt19937_64& rng, Vertex n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v)
    es.push_back({static_cast<Vertex>(rng() % v), v, 1.0 + static_cast<double>(rng() % 3)});
  return WeightedGraph(n, es);
}

Verdict tree_equivalence() {
  std::mt19937_64 rng(1004);
  int bad = 0, total = 0;
  auto check = [&](const WeightedGraph& g, double eps) {
    ++total;
    const auto t = build_mincut_tree(g, eps);
    const auto family = enumerate_near_mincuts(g, eps);
    const auto brute = brute_near(g, eps);
    const auto got = tree_cuts(g, t);
    bool ok = got.size() == family.cuts.size() && got.size() == brute.size();
    for (std::size_t i = 0; ok && i < got.size(); ++i) {
      ok = got[i].side == family.cuts[i].side && got[i].side == brute[i].first &&
           std::abs(got[i].weight - family.cuts[i].weight) <= kTol &&
           std::abs(got[i].weight - brute[i].second) <= kTol;
    }
    if (!ok) ++bad;
  };
  for (int i = 0; i < 50; ++i) {
    const int k = 2 + i % 4;
    const double eps1 = 0.02 + 0.01 * (i % 3);
    const auto pl = gen_planted_laminar(k, 3, eps1, 4000 + i);
    check(pl.graph, eps1);
  }
  for (int i = 0; i < 20; ++i) check(random_tree(rng, 2 + static_cast<Vertex>(rng() % 15)), 0.5);
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " trees match"};
}

Verdict saved_identity() {
  std::mt19937_64 rng(1005);
  int checked = 0, bad = 0;
  for (int round = 0; checked < 500; ++round) {
    const auto pl = gen_planted_laminar(3 + round % 4, 3, 0.05, 5000 + round);
    const auto tree = build_mincut_tree(pl.graph, 0.05);
    for (int trial = 0; trial < 25 && checked < 500; ++trial) {
      const auto t = tree.reroot(static_cast<Node>(rng() % tree.num_nodes()));
      std::vector<Node> pick;
      for (Node a : t.preorder()) {
        if (a == t.root() || rng() % 3 != 0) continue;
        bool ok = true;
        for (Node b : pick) ok = ok && !t.is_ancestor(b, a);
        if (ok) pick.push_back(a);
      }
      if (pick.empty()) continue;
      VertexSet covered;
      for (Node a : pick) covered = set_union(covered, t.vertices_under(a));
      if (covered.size() == static_cast<std::size_t>(pl.graph.num_vertices())) continue;
      double sum = 0.0;
      for (Node a : pick) sum += t.edge_weight(a);
      const auto p = partition_from_selection(pl.graph, t, pick);
      if (std::abs(p.cut_weight - (sum - saved(pl.graph, t, pick))) > kTol) ++bad;
      ++checked;
    }
  }
  return {bad == 0, std::to_string(bad) + "/500 violations"};
}

Verdict knapsack_bound() {
  std::mt19937_64 rng(1006);
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 5 + static_cast<int>(rng() % 26);
    std::vector<KnapsackItem> items;
    for (int i = 0; i < k - 1; ++i) {
      const int size = 2 + static_cast<int>(rng() % (k - 2));
      items.push_back({size, size - 1, static_cast<std::size_t>(i)});
    }
    int value = 0, used = 0;
    for (auto i : knapsack_greedy(items, k - 1)) {
      value += items[i].value;
      used += items[i].size;
    }
    if (used > k - 1 || 4 * value < k - 1) ++bad;
  }
  return {bad == 0, std::to_string(bad) + "/1000 failures"};
}

Verdict laminar_bound() {
  const double eps1 = kLaminarSuiteEps1, delta = kLaminarSuiteDelta;
  const double eps2 = 1.0 / 6 - 2 * eps1 - 4 * delta;
  const std::uint64_t seed = BenchOptions{}.seed;
  int bad_weight = 0, bad_saved = 0, saved_checked = 0;
  double worst = 0.0;
  for (const auto& c : laminar_suite_cases(seed)) {
    const auto inst = make_instance(c.spec);
    const auto& g = inst.graph;
    LaminarOptions lo;
    lo.seed = derive_seed(seed, "laminar");
    const auto r = laminar_detailed(g, c.k, eps1, delta, lo);
    const double planted = inst.planted->cut_weight;
    worst = std::max(worst, r.partition.cut_weight / planted);
    if (r.partition.cut_weight > (2 - eps2) * planted + kTol) ++bad_weight;
    const auto tree = build_mincut_tree(g, eps1);
    if (tree.num_nodes() > 20) continue;
    const double ell = fixtures::best_saved_antichain(g, tree, c.k - 1);
    const double mc = global_mincut(g).weight;
    ++saved_checked;
    if (r.best_selection.saved_value < ell / 6 - 2 * delta * (c.k - 1) * mc - kTol) ++bad_saved;
  }
  return {bad_weight == 0 && bad_saved == 0,
          "weight violations " + std::to_string(bad_weight) + ", saved violations " +
              std::to_string(bad_saved) + "/" + std::to_string(saved_checked) + ", worst weight/planted " + fmt(worst)};
}

bool valid_partition(const WeightedGraph& g, const Partition& p, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  std::vector<int> label(g.num_vertices(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.parts[i].empty()) return false;
    for (Vertex v : p.parts[i]) {
      if (v < 0 || v >= g.num_vertices() || label[v] != -1) return false;
      label[v] = static_cast<int>(i);
    }
  }
  for (int l : label)
    if (l < 0) return false;
  return std::abs(fixtures::crossing_weight(g, label) - p.cut_weight) <= kTol;
}

struct OracleCase {
  BenchCase c;
  WeightedGraph g;
  double opt;
};

std::vector<OracleCase> oracle_cases() {
  std::vector<OracleCase> out;
  for (const auto& c : oracle_suite_cases(BenchOptions{}.seed)) {
    auto g = make_instance(c.spec).graph;
    const double opt = exact_kcut_oracle(g, c.k).cut_weight;
    out.push_back({c, std::move(g), opt});
  }
  return out;
}

Verdict main_end_to_end(const std::vector<OracleCase>& cases) {
  const std::uint64_t seed = derive_seed(BenchOptions{}.seed, "main");
  int invalid = 0, over = 0, tc_bad = 0;
  double worst = 0.0;
  for (const auto& oc : cases) {
    const auto p = main_kcut(oc.g, oc.c.k, default_config(), seed);
    if (!valid_partition(oc.g, p, oc.c.k)) ++invalid;
    if (p.cut_weight > 2 * oc.opt + kTol) ++over;
    if (oc.opt > 0) worst = std::max(worst, p.cut_weight / oc.opt);
    if (oc.c.spec.kind == InstanceKind::two_clique &&
        p.cut_weight != oc.c.k * (oc.c.k - 1) / 2.0)
      ++tc_bad;
  }
  return {invalid == 0 && over == 0 && tc_bad == 0,
          "invalid " + std::to_string(invalid) + ", over 2x " + std::to_string(over) +
              ", two-clique misses " + std::to_string(tc_bad) + ", worst ratio " + fmt(worst)};
}

Verdict greedy_baseline(const std::vector<OracleCase>& cases) {
  int over = 0;
  for (const auto& oc : cases) {
    const double w = greedy_sv(oc.g, oc.c.k).cut_weight;
    if (w > 2 * (1 - 1.0 / oc.c.k) * oc.opt + kTol) ++over;
  }
  const double adv = greedy_sv(gen_two_clique(3), 3, TieBreak::adversarial).cut_weight;
  return {over == 0 && adv == 4.0,
          "bound violations " + std::to_string(over) + ", adversarial two-clique(3) weight " + fmt(adv) +
              " (required 4)"};
}

Verdict determinism() {
  BenchOptions o;
  o.timing = false;
  std::vector<std::string> diffs;
  const std::pair<Suite, const char*> suites[] = {
      {Suite::pvc, "pvc"}, {Suite::paper, "paper"}, {Suite::oracle, "oracle"}};
  for (const auto& [s, name] : suites) {
    const auto a = to_json(run_suite(s, o)).dump();
    const auto b = to_json(run_suite(s, o)).dump();
    if (a != b) diffs.push_back(name);
  }
  std::string detail = diffs.empty() ? "pvc, paper, oracle identical" : "differs:";
  for (const auto& d : diffs) detail += " " + d;
  return {diffs.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Verdict()>& run) {
    if (!only.empty() && !only.count(id)) return;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failed;
    std::printf("%s criterion %d %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", id, name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  };

  report(1, "mincut-oracle", mincut_equivalence);
  report(2, "min4cut-oracle", min4_equivalence);
  report(3, "partial-vc", [] {
    BenchOptions o;
    o.timing = false;
    return pvc_ratio(run_suite(Suite::pvc, o));
  });
  report(4, "mincut-tree", tree_equivalence);
  report(5, "saved-identity", saved_identity);
  report(6, "knapsack", knapsack_bound);
  report(7, "laminar-bound", laminar_bound);
  std::vector<OracleCase> cases;
  report(8, "main-end-to-end", [&] {
    cases = oracle_cases();
    return main_end_to_end(cases);
  });
  report(9, "greedy-baseline", [&] {
    if (cases.empty()) cases = oracle_cases();
    return greedy_baseline(cases);
  });
  report(10, "determinism", determinism);
  return failed;
}
