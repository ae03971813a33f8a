#include "kcut/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

namespace kcut {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(std::move(t));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

long long to_int(const std::string& s, std::size_t line) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

double to_weight(const std::string& s, std::size_t line) {
  double v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) fail(line, "expected a number, got '" + s + "'");
  if (!(v >= 0.0) || v == std::numeric_limits<double>::infinity()) {
    fail(line, "weights must be finite and non-negative");
  }
  return v;
}

Vertex to_vertex(const std::string& s, long long n, std::size_t line) {
  const long long v = to_int(s, line);
  if (v < 0 || v >= n) fail(line, "vertex " + s + " out of range [0, " + std::to_string(n) + ")");
  return static_cast<Vertex>(v);
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<double> vertex_weights;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t[0] == "p") {
      if (n >= 0) fail(number, "second header line");
      if (t.size() != 4 || t[1] != "cut") fail(number, "header must read 'p cut <n> <m>'");
      n = to_int(t[2], number);
      m = to_int(t[3], number);
      if (n < 1) fail(number, "graph needs at least one vertex");
      if (m < 0) fail(number, "negative edge count");
      continue;
    }
    if (n < 0) fail(number, "missing 'p cut <n> <m>' header");
    if (t[0] == "e") {
      if (t.size() != 4) fail(number, "edge line must read 'e <u> <v> <w>'");
      edges.push_back({to_vertex(t[1], n, number), to_vertex(t[2], n, number), to_weight(t[3], number)});
    } else if (t[0] == "v") {
      if (t.size() != 3) fail(number, "vertex line must read 'v <u> <w>'");
      if (vertex_weights.empty()) vertex_weights.assign(static_cast<std::size_t>(n), 0.0);
      vertex_weights[to_vertex(t[1], n, number)] = to_weight(t[2], number);
    } else {
      fail(number, "unknown line type '" + t[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'p cut <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return WeightedGraph(static_cast<Vertex>(n), std::move(edges), std::move(vertex_weights));
}

WeightedGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_graph(in);
}

void write_graph(const WeightedGraph& g, std::ostream& out) {
  const auto old = out.precision(17);
  out << "p cut " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex_weight(v) != 0.0) out << "v " << v << ' ' << g.vertex_weight(v) << '\n';
  }
  out.precision(old);
}

void write_graph(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_graph(g, out);
}

void write_partition(const Partition& p, std::ostream& out) {
  for (const auto& part : canonical(p).parts) {
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i];
    out << '\n';
  }
}

}  // namespace kcut
