#pragma once

#include <iosfwd>
#include <string>

#include "kcut/graph.hpp"
#include "kcut/mincut_tree.hpp"

namespace kcut {

/// Malformed graph text. The message carries the 1-based line number.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Reads the text format
///
///     p cut <n> <m>
///     e <u> <v> <w>      (m lines, 0-based ids)
///     v <u> <w>          (optional vertex weights)
///
/// Tokens are whitespace-separated and `#` starts a comment.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph(const std::string& path);

/// Writes weights with 17 significant digits, so read_graph restores them
/// exactly. Vertex lines are emitted for non-zero vertex weights only.
void write_graph(const WeightedGraph& g, std::ostream& out);
void write_graph(const WeightedGraph& g, const std::string& path);

/// One part per line, ids space-separated, parts ordered by smallest member.
void write_partition(const Partition& p, std::ostream& out);

}  // namespace kcut
