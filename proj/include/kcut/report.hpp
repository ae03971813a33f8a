#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcut/graph.hpp"
#include "kcut/reduction.hpp"

namespace kcut {

inline constexpr int kReportSchema = 1;

enum class InstanceKind { two_clique, planted_laminar, random_gnp, star_pvc, file };

std::string to_string(InstanceKind kind);
InstanceKind instance_kind_from_string(const std::string& name);

/// Recipe for a benchmark graph. Only the fields of the chosen kind are
/// read:
///   two_clique       k
///   planted_laminar  k, n (vertices per part), eps1, seed
///   random_gnp       n, p, w_min, w_max, vertex_w_max, seed
///   star_pvc         n (leaves), seed
///   file             path
struct InstanceSpec {
  InstanceKind kind = InstanceKind::file;
  int k = 0;
  Vertex n = 0;
  double p = 0.5;
  int w_min = 1;
  int w_max = 10;
  int vertex_w_max = 0;
  double eps1 = 0.05;
  std::optional<std::uint64_t> seed;
  std::string path;
};

/// Throws InvalidInput on missing or out-of-range parameters.
void validate(const InstanceSpec& spec);

struct Instance {
  WeightedGraph graph;
  /// The planted k-cut for planted_laminar instances.
  std::optional<Partition> planted;
};

Instance make_instance(const InstanceSpec& spec);

struct RunReport {
  InstanceSpec instance;
  std::string algorithm;
  /// Target k and accuracy parameters of the run.
  nlohmann::json config = nlohmann::json::object();
  double weight = 0.0;
  std::optional<double> oracle_weight;
  std::optional<double> ratio;
  std::int64_t wall_time_ms = 0;
  std::uint64_t seed = 0;
};

/// Sets oracle_weight and ratio = weight / oracle (1 when both are zero,
/// left empty when only the oracle is zero).
void attach_oracle(RunReport& report, double oracle_weight);

nlohmann::json to_json(const InstanceSpec& spec);
nlohmann::json to_json(const RunReport& report);
nlohmann::json to_json(const std::vector<RunReport>& reports);

/// Problems with a report object against schema 1; empty when it conforms.
std::vector<std::string> report_schema_errors(const nlohmann::json& report);

nlohmann::json to_json(const EpsilonConfig& cfg);

/// Reads an EpsilonConfig. A lone "delta" expands through config_for_delta;
/// any other listed field overrides the expanded value. Validated.
EpsilonConfig config_from_json(const nlohmann::json& j);

}  // namespace kcut
