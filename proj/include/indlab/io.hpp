#pragma once

#include <iosfwd>
#include <string>

#include "indlab/graph.hpp"

namespace indlab {

// Text formats, vertices 1-indexed, '#' starts a comment, blank lines are skipped.
//   pattern k=<int>              graph n=<int> palette=<int>
//   <u> <v>                      <u> <v> <color>
// Pattern edges get colors 1..|E| in file order. Graph pairs not listed are empty.

Pattern parse_pattern(std::istream& in);
ColoredGraph parse_graph(std::istream& in);

/// Edges in color order; needs colors exactly 1..|E|.
std::string format_pattern(const Pattern& p);
/// Non-empty pairs in (u, v) order.
std::string format_graph(const ColoredGraph& g);

Pattern read_pattern(const std::string& path);
ColoredGraph read_graph(const std::string& path);
void write_pattern(const std::string& path, const Pattern& p);
void write_graph(const std::string& path, const ColoredGraph& g);

/// A file path, or one of clique:K, path:K, cycle:K, matching:M.
Pattern load_pattern(const std::string& spec);

}  // namespace indlab
