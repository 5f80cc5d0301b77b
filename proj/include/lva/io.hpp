#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "lva/graph.hpp"

namespace lva {

/// Decode one graph6 line (short header only, n <= 62). A trailing newline or
/// carriage return is tolerated. Errors carry the byte offset.
Graph parse_graph6(std::string_view line);
/// Throws std::invalid_argument for n > 62.
std::string emit_graph6(const Graph& g);

// Labeled adjacency-list text:
//
//   # comment
//   n m
//   u v            (m lines, 0-based ids)
//   label u token  (optional, token runs to end of line)
//
// Blank lines and '#' comments are ignored anywhere. ParseError offsets are
// 1-based line numbers.
Graph parse_labeled(std::istream& in);
Graph parse_labeled(std::string_view text);
std::string emit_labeled(const Graph& g);

/// Read a graph file, guessing the format: a single non-comment line that is
/// not "n m" is treated as graph6.
Graph read_graph_file(const std::string& path);

}  // namespace lva
