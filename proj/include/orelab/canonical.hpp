#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Canonical adjacency of a graph plus the relabeling that produced it.
/// Equality ignores the relabeling: two forms are equal iff the graphs are
/// isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<VertexSet> rows;
  /// labeling[v] = canonical position of vertex v.
  std::vector<int> labeling;

  bool operator==(const CanonicalForm& other) const { return n == other.n && rows == other.rows; }
  bool operator<(const CanonicalForm& other) const {
    return n != other.n ? n < other.n : rows < other.rows;
  }
  Graph graph() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Result of the individualization-refinement search: the canonical form and
/// a generating set of the automorphism group.
struct Canonization {
  CanonicalForm form;
  std::vector<std::vector<int>> generators;
  /// orbit[v] = smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
  long leaves_visited = 0;
};

/// `colors`, when given, is an initial vertex coloring that isomorphisms must
/// preserve (colors are compared by value, not by the vertex they start on).
Canonization canonize(const Graph& g, std::span<const int> colors = {});

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// iso[v] for v in a is the image vertex in b.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace orelab
