#include "kcut/report.hpp"

#include <algorithm>
#include <cmath>

#include "kcut/generators.hpp"
#include "kcut/io.hpp"

namespace kcut {

using nlohmann::json;

namespace {

constexpr std::pair<InstanceKind, const char*> kKindNames[] = {
    {InstanceKind::two_clique, "two_clique"},
    {InstanceKind::planted_laminar, "planted_laminar"},
    {InstanceKind::random_gnp, "random_gnp"},
    {InstanceKind::star_pvc, "star_pvc"},
    {InstanceKind::file, "file"},
};

std::uint64_t need_seed(const InstanceSpec& spec) {
  if (!spec.seed) throw InvalidInput(to_string(spec.kind) + " instances need a seed");
  return *spec.seed;
}

}  // namespace

std::string to_string(InstanceKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

InstanceKind instance_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw InvalidInput("unknown instance kind '" + name + "'");
}

void validate(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::two_clique:
      if (spec.k < 2) throw InvalidInput("two_clique needs k >= 2");
      break;
    case InstanceKind::planted_laminar:
      need_seed(spec);
      if (spec.k < 2 || spec.n < 2) throw InvalidInput("planted_laminar needs k >= 2 and n >= 2");
      if (!(spec.eps1 > 0.0 && spec.eps1 < 0.25)) {
        throw InvalidInput("planted_laminar needs eps1 in (0, 1/4)");
      }
      break;
    case InstanceKind::random_gnp:
      need_seed(spec);
      if (spec.n < 1) throw InvalidInput("random_gnp needs n >= 1");
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidInput("random_gnp needs p in [0, 1]");
      if (spec.w_min < 0 || spec.w_max < spec.w_min || spec.vertex_w_max < 0) {
        throw InvalidInput("random_gnp needs 0 <= w_min <= w_max and vertex_w_max >= 0");
      }
      break;
    case InstanceKind::star_pvc:
      need_seed(spec);
      if (spec.n < 1) throw InvalidInput("star_pvc needs at least one leaf");
      break;
    case InstanceKind::file:
      if (spec.path.empty()) throw InvalidInput("file instances need a path");
      break;
  }
}

Instance make_instance(const InstanceSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case InstanceKind::two_clique:
      return {gen_two_clique(spec.k), std::nullopt};
    case InstanceKind::planted_laminar: {
      auto pl = gen_planted_laminar(spec.k, spec.n, spec.eps1, *spec.seed);
      return {std::move(pl.graph), std::move(pl.planted)};
    }
    case InstanceKind::random_gnp:
      return {gen_random_gnp(spec.n, spec.p, spec.w_min, spec.w_max, *spec.seed, spec.vertex_w_max),
              std::nullopt};
    case InstanceKind::star_pvc:
      return {gen_star_pvc(spec.n, *spec.seed), std::nullopt};
    case InstanceKind::file:
      return {read_graph(spec.path), std::nullopt};
  }
  throw InvalidInput("unknown instance kind");
}

void attach_oracle(RunReport& report, double oracle_weight) {
  report.oracle_weight = oracle_weight;
  if (oracle_weight > 0.0) {
    report.ratio = report.weight / oracle_weight;
  } else if (report.weight <= kWeightTolerance) {
    report.ratio = 1.0;
  } else {
    report.ratio.reset();
  }
}

json to_json(const InstanceSpec& spec) {
  json params = json::object();
  switch (spec.kind) {
    case InstanceKind::two_clique:
      params["k"] = spec.k;
      break;
    case InstanceKind::planted_laminar:
      params = {{"k", spec.k}, {"n_per_part", spec.n}, {"eps1", spec.eps1}};
      break;
    case InstanceKind::random_gnp:
      params = {{"n", spec.n},         {"p", spec.p},
                {"w_min", spec.w_min}, {"w_max", spec.w_max},
                {"vertex_w_max", spec.vertex_w_max}};
      break;
    case InstanceKind::star_pvc:
      params["leaves"] = spec.n;
      break;
    case InstanceKind::file:
      params["path"] = spec.path;
      break;
  }
  if (spec.seed) params["seed"] = *spec.seed;
  return {{"kind", to_string(spec.kind)}, {"params", std::move(params)}};
}

json to_json(const RunReport& r) {
  json out = json::object();
  out["schema"] = kReportSchema;
  out["instance"] = to_json(r.instance);
  out["algorithm"] = {{"name", r.algorithm}, {"config", r.config}};
  out["weight"] = r.weight;
  out["oracle_weight"] = r.oracle_weight ? json(*r.oracle_weight) : json(nullptr);
  out["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  out["wall_time_ms"] = r.wall_time_ms;
  out["seed"] = r.seed;
  return out;
}

json to_json(const std::vector<RunReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::vector<std::string> report_schema_errors(const json& r) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  };
  if (!r.is_object()) return {"report is not an object"};
  require(r.value("schema", 0) == kReportSchema, "schema must be 1");
  const bool has_instance = r.contains("instance") && r["instance"].is_object();
  require(has_instance, "instance must be an object");
  if (has_instance) {
    const auto& inst = r["instance"];
    require(inst.contains("kind") && inst["kind"].is_string(), "instance.kind must be a string");
    if (inst.contains("kind") && inst["kind"].is_string()) {
      try {
        instance_kind_from_string(inst["kind"].get<std::string>());
      } catch (const InvalidInput& e) {
        errors.emplace_back(e.what());
      }
    }
    require(inst.contains("params") && inst["params"].is_object(), "instance.params must be an object");
  }
  const bool has_algorithm = r.contains("algorithm") && r["algorithm"].is_object();
  require(has_algorithm, "algorithm must be an object");
  if (has_algorithm) {
    require(r["algorithm"].contains("name") && r["algorithm"]["name"].is_string(),
            "algorithm.name must be a string");
    require(r["algorithm"].contains("config") && r["algorithm"]["config"].is_object(),
            "algorithm.config must be an object");
  }
  require(r.contains("weight") && r["weight"].is_number() && r["weight"].get<double>() >= 0.0,
          "weight must be a non-negative number");
  const bool oracle = r.contains("oracle_weight") && r["oracle_weight"].is_number();
  require(r.contains("oracle_weight") && (oracle || r["oracle_weight"].is_null()),
          "oracle_weight must be a number or null");
  require(r.contains("ratio") && (r["ratio"].is_number() || r["ratio"].is_null()),
          "ratio must be a number or null");
  if (oracle && r.contains("ratio") && r["ratio"].is_number() && r["weight"].is_number()) {
    const double ratio = r["ratio"].get<double>();
    const double o = r["oracle_weight"].get<double>();
    require(ratio >= 1.0 - 1e-9, "ratio must be >= 1 - 1e-9");
    if (o > 0.0) {
      require(std::abs(ratio - r["weight"].get<double>() / o) <= 1e-9 * std::max(1.0, ratio),
              "ratio must equal weight / oracle_weight");
    }
  }
  if (!oracle && r.contains("ratio")) require(r["ratio"].is_null(), "ratio needs an oracle_weight");
  require(r.contains("wall_time_ms") && r["wall_time_ms"].is_number_integer() &&
              r["wall_time_ms"].get<std::int64_t>() >= 0,
          "wall_time_ms must be a non-negative integer");
  require(r.contains("seed") && r["seed"].is_number_unsigned(), "seed must be an unsigned integer");
  return errors;
}

json to_json(const EpsilonConfig& c) {
  return {{"eps1", c.eps1}, {"eps2", c.eps2}, {"eps3_final", c.eps3_final},
          {"eps4", c.eps4}, {"eps5", c.eps5}, {"delta", c.delta}};
}

EpsilonConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("epsilon config must be a JSON object");
  static const char* known[] = {"eps1", "eps2", "eps3_final", "eps4", "eps5", "delta"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw InvalidInput("unknown epsilon config field '" + key + "'");
    }
    if (!value.is_number()) throw InvalidInput("epsilon config field '" + key + "' must be a number");
  }
  EpsilonConfig cfg = j.contains("delta") ? config_for_delta(j["delta"].get<double>()) : default_config();
  auto take = [&](const char* key, double& field) {
    if (j.contains(key)) field = j[key].get<double>();
  };
  take("eps1", cfg.eps1);
  take("eps2", cfg.eps2);
  take("eps3_final", cfg.eps3_final);
  take("eps4", cfg.eps4);
  take("eps5", cfg.eps5);
  validate(cfg);
  return cfg;
}

}  // namespace kcut
