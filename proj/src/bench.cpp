#include "kcut/bench.hpp"

#include <chrono>
#include <random>

#include "kcut/cut_primitives.hpp"
#include "kcut/laminar.hpp"
#include "kcut/partial_vc.hpp"
#include "kcut/rng.hpp"

namespace kcut {

using nlohmann::json;

namespace {

constexpr double kDensities[] = {0.3, 0.5, 0.7, 0.9};

BenchCase gnp_case(Rng& rng, Vertex n_lo, Vertex n_hi, int k_lo, int k_hi, int vertex_w_max,
                   std::uint64_t seed) {
  std::uniform_int_distribution<int> target(k_lo, k_hi);
  const int k = target(rng);
  std::uniform_int_distribution<Vertex> size(std::max<Vertex>(n_lo, k), n_hi);
  std::uniform_int_distribution<int> density(0, 3);
  BenchCase c;
  c.k = k;
  c.spec.kind = InstanceKind::random_gnp;
  c.spec.n = size(rng);
  c.spec.p = kDensities[density(rng)];
  c.spec.w_min = 1;
  c.spec.w_max = 10;
  c.spec.vertex_w_max = vertex_w_max;
  c.spec.seed = seed;
  return c;
}

template <typename Run>
RunReport timed(const BenchOptions& options, Run&& run) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = run();
  if (options.timing) {
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return r;
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "oracle") return Suite::oracle;
  if (name == "paper") return Suite::paper;
  if (name == "pvc") return Suite::pvc;
  throw InvalidInput("unknown suite '" + name + "'");
}

std::vector<BenchCase> oracle_suite_cases(std::uint64_t seed) {
  Rng rng(derive_seed(seed, "oracle-suite"));
  std::vector<BenchCase> out;
  for (std::uint64_t i = 0; i < 100; ++i) {
    out.push_back(gnp_case(rng, 4, 10, 2, 4, 0, derive_seed(seed, i)));
  }
  for (int k : {3, 4}) {
    BenchCase c;
    c.k = k;
    c.spec.kind = InstanceKind::two_clique;
    c.spec.k = k;
    out.push_back(c);
  }
  BenchCase pl;
  pl.k = 6;
  pl.spec.kind = InstanceKind::planted_laminar;
  pl.spec.k = 6;
  pl.spec.n = 4;
  pl.spec.eps1 = 0.05;
  pl.spec.seed = 7;
  out.push_back(pl);
  return out;
}

std::vector<BenchCase> laminar_suite_cases(std::uint64_t seed) {
  std::vector<BenchCase> out;
  for (std::uint64_t i = 0; i < 20; ++i) {
    BenchCase c;
    c.k = i % 2 == 0 ? 5 : 6;
    c.spec.kind = InstanceKind::planted_laminar;
    c.spec.k = c.k;
    c.spec.n = 3;
    c.spec.eps1 = kLaminarSuiteEps1;
    c.spec.seed = derive_seed(seed, i);
    out.push_back(c);
  }
  return out;
}

std::vector<BenchCase> pvc_suite_cases(std::uint64_t seed) {
  Rng rng(derive_seed(seed, "pvc-suite"));
  std::vector<BenchCase> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    out.push_back(gnp_case(rng, 4, 14, 1, 3, 5, derive_seed(seed, i)));
  }
  return out;
}

std::vector<RunReport> run_suite(Suite suite, const BenchOptions& options) {
  std::vector<RunReport> out;
  switch (suite) {
    case Suite::oracle: {
      const auto cfg = default_config();
      for (const auto& c : oracle_suite_cases(options.seed)) {
        const auto inst = make_instance(c.spec);
        const double opt = exact_kcut_oracle(inst.graph, c.k).cut_weight;
        const std::uint64_t run_seed = derive_seed(options.seed, "main");
        out.push_back(timed(options, [&] {
          RunReport r;
          r.instance = c.spec;
          r.algorithm = "main_kcut";
          r.config = to_json(cfg);
          r.config["k"] = c.k;
          r.seed = run_seed;
          r.weight = main_kcut(inst.graph, c.k, cfg, run_seed).cut_weight;
          attach_oracle(r, opt);
          return r;
        }));
        out.push_back(timed(options, [&] {
          RunReport r;
          r.instance = c.spec;
          r.algorithm = "greedy_sv";
          r.config = {{"k", c.k}, {"tie_break", "first"}};
          r.seed = options.seed;
          r.weight = greedy_sv(inst.graph, c.k).cut_weight;
          attach_oracle(r, opt);
          return r;
        }));
      }
      break;
    }
    case Suite::paper: {
      for (const auto& c : laminar_suite_cases(options.seed)) {
        const auto inst = make_instance(c.spec);
        const double opt = exact_kcut_oracle(inst.graph, c.k).cut_weight;
        out.push_back(timed(options, [&] {
          RunReport r;
          r.instance = c.spec;
          r.algorithm = "laminar";
          r.config = {{"k", c.k}, {"eps1", kLaminarSuiteEps1}, {"delta", kLaminarSuiteDelta}};
          r.seed = derive_seed(options.seed, "laminar");
          LaminarOptions lo;
          lo.seed = r.seed;
          r.weight = laminar(inst.graph, c.k, kLaminarSuiteEps1, kLaminarSuiteDelta, lo).cut_weight;
          attach_oracle(r, opt);
          return r;
        }));
      }
      for (int k : {3, 4}) {
        InstanceSpec spec;
        spec.kind = InstanceKind::two_clique;
        spec.k = k;
        const auto inst = make_instance(spec);
        const double opt = exact_kcut_oracle(inst.graph, k).cut_weight;
        out.push_back(timed(options, [&] {
          RunReport r;
          r.instance = spec;
          r.algorithm = "greedy_sv";
          r.config = {{"k", k}, {"tie_break", "adversarial"}};
          r.seed = options.seed;
          r.weight = greedy_sv(inst.graph, k, TieBreak::adversarial).cut_weight;
          attach_oracle(r, opt);
          return r;
        }));
      }
      break;
    }
    case Suite::pvc: {
      for (const auto& c : pvc_suite_cases(options.seed)) {
        const PvcInstance instance{make_instance(c.spec).graph, c.k, kPvcSuiteDelta};
        const double opt = pvc_bruteforce(instance).value;
        out.push_back(timed(options, [&] {
          RunReport r;
          r.instance = c.spec;
          r.algorithm = "pvc_general";
          r.config = {{"k", c.k}, {"delta", kPvcSuiteDelta}};
          r.seed = derive_seed(options.seed, "pvc");
          r.weight = pvc_general(instance, r.seed).value;
          attach_oracle(r, opt);
          return r;
        }));
      }
      break;
    }
  }
  return out;
}

}  // namespace kcut
