#include "kcut/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "kcut/cut_primitives.hpp"
#include "kcut/rng.hpp"

namespace kcut {

EpsilonConfig config_for_delta(double delta) {
  EpsilonConfig cfg;
  cfg.delta = delta;
  cfg.eps1 = 1.0 / 18.0 - 4.0 * delta / 3.0;
  cfg.eps2 = cfg.eps1;
  cfg.eps4 = std::min(cfg.eps1, cfg.eps2) / 3.0;
  cfg.eps5 = cfg.eps4;
  cfg.eps3_final = cfg.eps4 * cfg.eps4;
  return cfg;
}

EpsilonConfig default_config() {
  EpsilonConfig cfg = config_for_delta(kDeltaCeiling / 100.0);
  validate(cfg);
  return cfg;
}

std::vector<std::string> config_violations(const EpsilonConfig& c) {
  std::vector<std::string> out;
  auto require = [&](bool ok, const char* what) {
    if (!ok) out.emplace_back(what);
  };
  require(c.eps1 > 0.0 && c.eps1 < 0.25, "eps1 must lie in (0, 1/4)");
  require(c.eps2 > 0.0 && c.eps2 < 1.0, "eps2 must lie in (0, 1)");
  require(c.eps3_final > 0.0, "eps3_final must be positive");
  require(c.eps4 > 0.0 && c.eps5 > 0.0, "eps4 and eps5 must be positive");
  require(c.delta > 0.0 && c.delta < kDeltaCeiling, "delta must lie in (0, 1/24)");
  require(c.eps1 < 1.0 / 6.0 - 4.0 * c.delta, "eps1 must be below 1/6 - 4 delta");
  require(2.0 / 3.0 * c.eps1 * c.eps4 >= c.eps3_final, "need (2/3) eps1 eps4 >= eps3_final");
  require((1.0 + c.eps1 * c.eps5 / 3.0) * (2.0 - c.eps3_final) >= 2.0,
          "need (1 + eps1 eps5 / 3)(2 - eps3_final) >= 2");
  require(c.eps3_final <= c.eps2 - 2.0 * c.eps5, "need eps3_final <= eps2 - 2 eps5");
  return out;
}

void validate(const EpsilonConfig& cfg) {
  const auto problems = config_violations(cfg);
  if (!problems.empty()) throw InvalidInput("invalid epsilon config: " + problems.front());
}

bool BestTracker::record(const Partition& p) {
  if (static_cast<int>(p.size()) != k_) {
    throw InvalidInput("recorded partition has " + std::to_string(p.size()) + " parts, expected " +
                       std::to_string(k_));
  }
  if (best_ && !(p.cut_weight < best_->cut_weight)) return false;
  best_ = p;
  return true;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t set_hash(const VertexSet& s) {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (Vertex v : s) h = splitmix64(h ^ static_cast<std::uint64_t>(v));
  return h;
}

VertexSet lift(const InducedSubgraph& sub, const VertexSet& local) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.vertices[v]);
  return out;
}

std::vector<VertexSet> lift(const InducedSubgraph& sub, const std::vector<VertexSet>& parts) {
  std::vector<VertexSet> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(lift(sub, p));
  return out;
}

std::vector<VertexSet> sorted_parts(std::vector<VertexSet> parts) {
  std::sort(parts.begin(), parts.end());
  return parts;
}

struct MainTrace {
  std::vector<double> c_values;
  std::vector<VertexSet> reference;
};

// Main and Guess on induced subgraphs G[s], with every vertex set kept in
// the ids of the input graph.
class Reducer {
 public:
  Reducer(const WeightedGraph& g, const EpsilonConfig& cfg, const ReductionOptions& options,
          ReductionStats& stats)
      : g_(g), cfg_(cfg), options_(options), stats_(stats), label_(g.num_vertices(), -1) {}

  Partition solve(const VertexSet& s, int k, MainTrace* trace = nullptr);
  Partition guess(const VertexSet& s, int k, const std::vector<VertexSet>& parts);

  Partition weighed(std::vector<VertexSet> parts) {
    const double w = weight_within(parts);
    return {std::move(parts), w};
  }

 private:
  struct Split {
    std::vector<VertexSet> parts;
    double weight = kInf;
  };

  double weight_within(const std::vector<VertexSet>& parts);
  double weight_between(const VertexSet& a, const VertexSet& b);
  const Split& mincut_of(const VertexSet& s);
  const Split& min4_of(const VertexSet& s);
  const std::optional<std::vector<VertexSet>>& laminar_of(const VertexSet& s, int r);
  std::vector<VertexSet> complete_within(const VertexSet& s, int k, std::vector<VertexSet> parts);
  std::vector<std::vector<int>> branch_vectors(const VertexSet& s, int k,
                                               const std::vector<VertexSet>& reference);
  void warn(const std::string& message);

  const WeightedGraph& g_;
  EpsilonConfig cfg_;
  const ReductionOptions& options_;
  ReductionStats& stats_;
  std::vector<int> label_;

  std::map<std::pair<VertexSet, int>, Partition> main_memo_;
  std::map<std::vector<VertexSet>, Partition> guess_memo_;
  std::map<VertexSet, Split> mincut_cache_;
  std::map<VertexSet, Split> min4_cache_;
  std::map<std::pair<VertexSet, int>, std::optional<std::vector<VertexSet>>> laminar_cache_;
};

void Reducer::warn(const std::string& message) {
  if (std::find(stats_.warnings.begin(), stats_.warnings.end(), message) == stats_.warnings.end()) {
    stats_.warnings.push_back(message);
  }
}

double Reducer::weight_within(const std::vector<VertexSet>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) label_[v] = static_cast<int>(i);
  }
  double w = 0.0;
  for (const auto& part : parts) {
    for (Vertex u : part) {
      for (const auto& nb : g_.neighbors(u)) {
        if (nb.to > u && label_[nb.to] >= 0 && label_[nb.to] != label_[u]) w += nb.w;
      }
    }
  }
  for (const auto& part : parts) {
    for (Vertex v : part) label_[v] = -1;
  }
  return w;
}

double Reducer::weight_between(const VertexSet& a, const VertexSet& b) {
  for (Vertex v : b) label_[v] = 1;
  double w = 0.0;
  for (Vertex u : a) {
    for (const auto& nb : g_.neighbors(u)) {
      if (label_[nb.to] == 1) w += nb.w;
    }
  }
  for (Vertex v : b) label_[v] = -1;
  return w;
}

const Reducer::Split& Reducer::mincut_of(const VertexSet& s) {
  auto it = mincut_cache_.find(s);
  if (it != mincut_cache_.end()) return it->second;
  Split out;
  if (s.size() >= 2) {
    const auto sub = induced_subgraph(g_, s);
    const Cut cut = global_mincut(sub.graph);
    VertexSet side = lift(sub, cut.side);
    VertexSet rest = set_difference(s, side);
    if (side.front() < rest.front()) std::swap(side, rest);
    out.parts = {std::move(rest), std::move(side)};
    out.weight = cut.weight;
  }
  return mincut_cache_.emplace(s, std::move(out)).first->second;
}

const Reducer::Split& Reducer::min4_of(const VertexSet& s) {
  auto it = min4_cache_.find(s);
  if (it != min4_cache_.end()) return it->second;
  Split out;
  if (s.size() >= 4) {
    const auto sub = induced_subgraph(g_, s);
    MinFourCutOptions opts;
    opts.max_exact_vertices = options_.min4_exact_max_vertices;
    opts.max_trials = options_.min4_max_trials;
    opts.mode = sub.graph.num_vertices() <= opts.max_exact_vertices ? FourCutMode::exact
                                                                     : FourCutMode::randomized;
    opts.seed = derive_seed(derive_seed(options_.seed, "min4"), set_hash(s));
    if (auto p = min_four_cut(sub.graph, opts)) {
      out.parts = sorted_parts(lift(sub, p->parts));
      out.weight = p->cut_weight;
    }
  }
  return min4_cache_.emplace(s, std::move(out)).first->second;
}

const std::optional<std::vector<VertexSet>>& Reducer::laminar_of(const VertexSet& s, int r) {
  auto key = std::make_pair(s, r);
  auto it = laminar_cache_.find(key);
  if (it != laminar_cache_.end()) return it->second;
  std::optional<std::vector<VertexSet>> out;
  if (r == 1) {
    out = std::vector<VertexSet>{s};
  } else {
    ++stats_.laminar_calls;
    const auto sub = induced_subgraph(g_, s);
    LaminarOptions opts = options_.laminar;
    opts.seed = derive_seed(derive_seed(options_.seed, "laminar"),
                            set_hash(s) ^ static_cast<std::uint64_t>(r));
    try {
      out = lift(sub, laminar(sub.graph, r, cfg_.eps1, cfg_.delta, opts).parts);
    } catch (const NotLaminar&) {
      ++stats_.laminar_skipped;
    } catch (const SizeGuardExceeded& e) {
      ++stats_.laminar_skipped;
      warn(std::string("laminar skipped: ") + e.what());
    }
  }
  return laminar_cache_.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<VertexSet> Reducer::complete_within(const VertexSet& s, int k,
                                                std::vector<VertexSet> parts) {
  const auto sub = induced_subgraph(g_, s);
  std::vector<int> local(g_.num_vertices(), -1);
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) local[sub.vertices[i]] = static_cast<int>(i);
  for (auto& p : parts) {
    for (auto& v : p) v = local[v];
  }
  return lift(sub, complete(sub.graph, k, std::move(parts)).partition.parts);
}

std::vector<std::vector<int>> Reducer::branch_vectors(const VertexSet& s, int k,
                                                      const std::vector<VertexSet>& reference) {
  const auto width = reference.size();
  const std::uint64_t cap = options_.max_branch_vectors.value_or(
      k <= 5 ? std::numeric_limits<std::uint64_t>::max() : kSampledBranchVectors);
  std::uint64_t total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < width && !overflow; ++i) {
    if (total > cap / static_cast<std::uint64_t>(k)) overflow = true;
    total *= static_cast<std::uint64_t>(k);
  }
  std::vector<std::vector<int>> out;
  if (!overflow && total <= cap) {
    std::vector<int> r(width, 1);
    for (;;) {
      out.push_back(r);
      std::size_t i = width;
      while (i > 0 && r[i - 1] == k) r[--i] = 1;
      if (i == 0) break;
      ++r[i - 1];
    }
    return out;
  }
  stats_.sampled_branch_vectors = true;
  warn("r-vector enumeration capped at " + std::to_string(cap) + " sampled vectors");
  Rng rng(derive_seed(derive_seed(options_.seed, "branch-vectors"),
                      set_hash(s) ^ static_cast<std::uint64_t>(width)));
  std::uniform_int_distribution<int> pick(1, k);
  out.emplace_back(width, 1);
  while (out.size() < cap) {
    std::vector<int> r(width);
    for (auto& x : r) x = pick(rng);
    out.push_back(std::move(r));
  }
  return out;
}

Partition Reducer::solve(const VertexSet& s, int k, MainTrace* trace) {
  ++stats_.main_calls;
  const auto key = std::make_pair(s, k);
  if (options_.memoize && trace == nullptr) {
    auto it = main_memo_.find(key);
    if (it != main_memo_.end()) {
      ++stats_.main_memo_hits;
      return it->second;
    }
  }

  BestTracker best(k);
  std::vector<VertexSet> reference{s};
  std::vector<double> c_values;
  while (static_cast<int>(reference.size()) < k) {
    for (const auto& r : branch_vectors(s, k, reference)) {
      ++stats_.branch_vectors;
      std::vector<VertexSet> parts;
      bool usable = true;
      for (std::size_t i = 0; i < reference.size() && usable; ++i) {
        if (static_cast<std::size_t>(r[i]) > reference[i].size()) {
          usable = false;
          break;
        }
        const auto& split = laminar_of(reference[i], r[i]);
        if (!split) {
          usable = false;
          break;
        }
        parts.insert(parts.end(), split->begin(), split->end());
      }
      if (!usable) continue;
      if (static_cast<int>(parts.size()) >= k) {
        for (std::size_t j = k; j < parts.size(); ++j) {
          parts[k - 1] = set_union(parts[k - 1], parts[j]);
        }
        parts.resize(k);
      } else {
        parts = complete_within(s, k, std::move(parts));
      }
      best.record(guess(s, k, parts));
    }

    const int kp = static_cast<int>(reference.size());
    std::size_t two = 0;
    for (std::size_t i = 1; i < reference.size(); ++i) {
      if (mincut_of(reference[i]).weight < mincut_of(reference[two]).weight) two = i;
    }
    const double min_two = mincut_of(reference[two]).weight;
    std::size_t four = 0;
    double min_four = kInf;
    if (kp <= k - 3) {
      for (std::size_t i = 0; i < reference.size(); ++i) {
        const double w = min4_of(reference[i]).weight;
        if (w < min_four) {
          min_four = w;
          four = i;
        }
      }
    }
    if (kp > k - 3 || min_two <= min_four / 3.0) {
      const auto parts = mincut_of(reference[two]).parts;
      reference[two] = parts[0];
      reference.push_back(parts[1]);
      c_values.push_back(min_two);
    } else {
      const auto parts = min4_of(reference[four]).parts;
      reference[four] = parts[0];
      for (int j = 1; j < 4; ++j) {
        reference.push_back(parts[j]);
        c_values.push_back(min_four / 3.0);
      }
    }
  }
  best.record(guess(s, k, reference));

  Partition out = *best.best();
  if (trace != nullptr) {
    trace->c_values = std::move(c_values);
    trace->reference = std::move(reference);
  }
  if (options_.memoize) main_memo_.insert_or_assign(key, out);
  return out;
}

Partition Reducer::guess(const VertexSet& s, int k, const std::vector<VertexSet>& parts) {
  ++stats_.guess_calls;
  auto key = sorted_parts(parts);
  if (options_.memoize) {
    auto it = guess_memo_.find(key);
    if (it != guess_memo_.end()) return it->second;
  }
  BestTracker best(k);
  best.record(weighed(parts));
  const auto count = static_cast<unsigned>(parts.size());
  for (std::uint32_t mask = 1; mask + 1 < (1u << count); ++mask) {
    VertexSet left;
    for (unsigned j = 0; j < count; ++j) {
      if (mask >> j & 1u) left = set_union(left, parts[j]);
    }
    const VertexSet right = set_difference(s, left);
    const double across = weight_between(left, right);
    for (int kp = 1; kp < k; ++kp) {
      if (static_cast<std::size_t>(kp) > left.size() ||
          static_cast<std::size_t>(k - kp) > right.size()) {
        continue;
      }
      Partition d1 = solve(left, kp);
      Partition d2 = solve(right, k - kp);
      Partition joined{std::move(d1.parts), d1.cut_weight + d2.cut_weight + across};
      joined.parts.insert(joined.parts.end(), std::make_move_iterator(d2.parts.begin()),
                          std::make_move_iterator(d2.parts.end()));
      best.record(joined);
    }
  }
  Partition out = *best.best();
  if (options_.memoize) guess_memo_.insert_or_assign(std::move(key), out);
  return out;
}

void check_k(const WeightedGraph& g, int k) {
  if (k < 1 || k > g.num_vertices()) {
    throw InvalidInput("k must lie in [1, |V|], got k=" + std::to_string(k) +
                       " for |V|=" + std::to_string(g.num_vertices()));
  }
}

}  // namespace

ReductionResult main_kcut_detailed(const WeightedGraph& g, int k, const EpsilonConfig& cfg,
                                   const ReductionOptions& options) {
  check_k(g, k);
  validate(cfg);
  ReductionResult result;
  Reducer reducer(g, cfg, options, result.stats);
  MainTrace trace;
  Partition best = reducer.solve(all_vertices(g.num_vertices()), k, &trace);
  result.partition = canonical(make_partition(g, std::move(best.parts)));
  result.c_values = std::move(trace.c_values);
  result.reference = canonical(make_partition(g, std::move(trace.reference)));
  return result;
}

Partition main_kcut(const WeightedGraph& g, int k, const EpsilonConfig& cfg, std::uint64_t seed) {
  ReductionOptions options;
  options.seed = seed;
  return main_kcut_detailed(g, k, cfg, options).partition;
}

Partition guess(const WeightedGraph& g, int k, const Partition& parts, const EpsilonConfig& cfg,
                std::uint64_t seed) {
  check_k(g, k);
  validate(cfg);
  const Partition checked = make_partition(g, parts.parts);
  if (static_cast<int>(checked.size()) != k) {
    throw InvalidInput("guess needs a " + std::to_string(k) + "-partition");
  }
  ReductionStats stats;
  ReductionOptions options;
  options.seed = seed;
  Reducer reducer(g, cfg, options, stats);
  Partition best = reducer.guess(all_vertices(g.num_vertices()), k, checked.parts);
  return canonical(make_partition(g, std::move(best.parts)));
}

}  // namespace kcut
