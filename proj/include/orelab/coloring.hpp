#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// color[v] in 0..t-1, or kUncolored. Colors are 0-based throughout.
using Coloring = std::vector<int>;
inline constexpr int kUncolored = -1;

/// No edge has both ends colored alike. Uncolored vertices are ignored.
bool is_proper(const Graph& g, std::span<const int> coloring);

/// A proper coloring with at most t colors, or nullopt if chi(G) > t.
std::optional<Coloring> colorable(const Graph& g, int t);

/// 0 for the empty graph.
int chromatic_number(const Graph& g);

/// chi(G) = k and every proper subgraph is (k-1)-colorable.
///
/// A proper subgraph of G lies inside some G - e, or drops only isolated
/// vertices, so the test is: chi(G) = k, no isolated vertex (k >= 2), and
/// every G - e is (k-1)-colorable.
bool is_k_critical(const Graph& g, int k);

/// True iff every assignment of lists L(v) ⊆ {0..universe-1} with
/// |L(v)| = f[v] admits a proper list coloring. Caps: n <= 8, universe <= 6.
bool f_choosable_bruteforce(const Graph& g, std::span<const int> f, int universe);

struct EdgeCountViolation {
  VertexSet a = 0;
  VertexSet b0 = 0;
  VertexSet b1 = 0;
  int lhs = 0;
  int rhs = 0;
};

struct EdgeCountLemmaReport {
  long independent_sets_checked = 0;
  std::vector<EdgeCountViolation> violations;
};

/// For a k-critical G, checks e(A, B0 ∪ B1) < |A| + 2|B0| + 3|B1| over every
/// nonempty independent A of degree-(k-1) vertices and every B0 ⊆ {deg k},
/// B1 ⊆ {deg k+1}. For fixed A the worst B is found exactly (take b iff it
/// has more A-neighbors than its weight), so all triples are covered.
/// Throws SizeError once more than `subset_cap` sets A are enumerated.
EdgeCountLemmaReport edge_count_lemma_check(const Graph& g, int k, long subset_cap = 1L << 20);

}  // namespace orelab
