#include "orelab/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "orelab/errors.hpp"

namespace orelab {

namespace {

constexpr char kHeader[] = ">>graph6<<";

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, sizeof(kHeader) - 1) == kHeader) pos = sizeof(kHeader) - 1;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: truncated input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
    return c - 63;
  };

  int n = byte_at(pos);
  ++pos;
  if (n == 63) {
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      throw ParseError("graph6: order exceeds 64", pos);
    }
    n = (byte_at(pos) << 12) | (byte_at(pos + 1) << 6) | byte_at(pos + 2);
    if (n <= 62) throw ParseError("graph6: non-canonical long order for n <= 62", pos);
    pos += 3;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order exceeds 64", pos - 1);

  const std::size_t want = body_length(n);
  if (text.size() - pos != want) {
    throw ParseError("graph6: expected " + std::to_string(want) + " body bytes, found " +
                         std::to_string(text.size() - pos),
                     std::min(text.size(), pos + want));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = byte_at(pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = pos + bit / 6;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if ((byte_at(last) & pad_mask) != 0) throw ParseError("graph6: nonzero padding bits", last);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  return read_graph6_stream(in);
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orelab
