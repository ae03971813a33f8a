#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcut/report.hpp"

namespace kcut {

enum class Suite { oracle, paper, pvc };

Suite suite_from_string(const std::string& name);

struct BenchCase {
  InstanceSpec spec;
  /// Target number of parts (k of the Partial VC instance for the pvc suite).
  int k = 2;
};

/// 100 G(n, p) graphs with n in [4, 10] and k in {2, 3, 4}, then TC(3),
/// TC(4) and PL(6) = planted_laminar(6, 4, 0.05, seed 7).
std::vector<BenchCase> oracle_suite_cases(std::uint64_t seed);

/// 20 planted laminar instances, k alternating 5 and 6, three vertices per
/// part, eps1 = 0.02.
std::vector<BenchCase> laminar_suite_cases(std::uint64_t seed);

/// 200 G(n, p) graphs with n in [4, 14], k in [1, 3], edge weights in
/// [1, 10] and vertex weights in [0, 5].
std::vector<BenchCase> pvc_suite_cases(std::uint64_t seed);

inline constexpr double kLaminarSuiteEps1 = 0.02;
inline constexpr double kLaminarSuiteDelta = 0.01;
inline constexpr double kPvcSuiteDelta = 0.1;

struct BenchOptions {
  std::uint64_t seed = 1;
  /// When false every wall_time_ms is 0, so reruns are byte-identical.
  bool timing = true;
};

/// oracle: main_kcut and greedy_sv on every case against exact_kcut_oracle.
/// paper:  laminar on the planted cases, plus adversarial greedy on TC(3)
///         and TC(4), against exact_kcut_oracle.
/// pvc:    pvc_general against pvc_bruteforce.
std::vector<RunReport> run_suite(Suite suite, const BenchOptions& options = {});

}  // namespace kcut
