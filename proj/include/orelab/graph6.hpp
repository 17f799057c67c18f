#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Standard graph6: N(n) header, then the upper triangle in column order
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte,
/// big-endian within each byte, each byte biased by 63.
std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and trailing CR/LF. Throws
/// ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

/// One graph per non-blank line.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

/// Graphviz DOT, vertex labels are ids.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace orelab
