#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orelab/coloring.hpp"
#include "orelab/graph.hpp"
#include "orelab/rational.hpp"

namespace orelab {

struct Cluster {
  VertexSet members = 0;
  VertexSet closed_neighborhood = 0;
};

/// Maximal sets of degree-(k-1) vertices with equal closed neighborhoods,
/// ordered by smallest member.
std::vector<Cluster> clusters(const Graph& g, int k);
/// Index into clusters(g, k) for each vertex, -1 if deg(v) != k-1.
std::vector<int> cluster_index(const Graph& g, int k);

struct DiamondOrEmerald {
  enum class Kind { Diamond, Emerald };
  Kind kind = Kind::Emerald;
  VertexSet vertices = 0;
  Vertex u = -1;  ///< diamond endpoints; -1 for emeralds
  Vertex v = -1;
};

/// Every diamond (K_k - uv whose other vertices have degree k-1) and emerald
/// (K_{k-1} of degree-(k-1) vertices) sharing no vertex with `forbidden`.
std::vector<DiamondOrEmerald> find_diamonds_emeralds(const Graph& g, int k, VertexSet forbidden);

/// G_{y->x}: y is replaced by a copy of x adjacent to x and to N(x). The copy
/// takes y's id. Requires xy in E(G) and deg(x) = k-1.
Graph clone(const Graph& g, int k, Vertex x, Vertex y);

struct ColorReduction {
  Graph graph;
  /// Vertex of G to vertex of the reduced graph; R maps to its color vertex.
  std::vector<int> old_to_new;
  /// x_1, x_2, ... in increasing order of the color values used by phi.
  std::vector<Vertex> color_vertices;
  /// Original color value of each color vertex.
  std::vector<int> color_values;
};

/// G_{R,phi}. `phi` is indexed by vertex of G; entries outside R are ignored.
/// phi must be proper and total on G[R] and use exactly chi(G[R]) colors.
/// Vertices outside R keep their relative order; the color vertices follow.
ColorReduction color_reduce(const Graph& g, VertexSet r, std::span<const int> phi);

struct IncompletenessSources {
  int unused_cross_edges = 0;   ///< (y, color) pairs with R-edges whose edge to x_color is not in W
  int repeated_color_edges = 0; ///< extra R-edges from y into one color class
  int unused_core_edges = 0;    ///< x_i x_j edges of K_|X| absent from W
  int unused_inner_edges = 0;   ///< G-edges inside V(W) - X absent from W

  int total() const {
    return unused_cross_edges + repeated_color_edges + unused_core_edges + unused_inner_edges;
  }
};

struct ExtensionRecord {
  VertexSet r = 0;
  Coloring phi;
  ColorReduction reduced;
  /// W as a subgraph of the reduced graph: vertex set and edges in reduced ids.
  VertexSet w_vertices = 0;
  std::vector<Edge> w_edges;
  VertexSet core = 0;  ///< X, in reduced ids
  int core_size = 0;
  VertexSet r_prime = 0;  ///< in G ids
  int incompleteness = 0;
  IncompletenessSources sources;
  bool spanning = false;

  int t_r = 0, t_r_prime = 0, t_w = 0, t_core = 0;
  Rational rho_r, rho_r_prime, rho_w, rho_core;
  /// rho_G(R) + rho(W) - (rho(K_|X|) + delta T(K_|X|) - delta |X|)
  Rational extension_bound;
  bool extension_bound_holds = false;

  Graph w_graph() const;
};

struct ExtensionOptions {
  int max_records = 4;
  int attempts = 8;  ///< minimization restarts (first in index order, then shuffled)
  std::uint64_t seed = 1;
};

struct ExtensionResult {
  std::vector<ExtensionRecord> records;
  bool truncated = false;  ///< max_records reached before attempts ran out
};

/// Critical extensions of R for distinct minimal k-critical W in G_{R,phi}.
/// G must be k-critical and R a proper subset.
ExtensionResult build_extension(const Graph& g, int k, VertexSet r, std::span<const int> phi,
                                const ExtensionOptions& options = {});

/// A minimal non-(k-1)-colorable subgraph of g, which is k-critical. Vertices
/// then edges are tried for deletion in the given order.
struct Subgraph {
  VertexSet vertices = 0;
  std::vector<Edge> edges;
};
Subgraph minimal_critical_subgraph(const Graph& g, int k, std::span<const int> vertex_order,
                                   std::span<const int> edge_order);

struct CollapseResult {
  /// Least i for which R is i-collapsible; a lower bound if !complete.
  int value = 0;
  long colorings = 0;  ///< colorings examined, up to color permutation
  bool complete = true;
};

/// max over proper (k-1)-colorings phi of G[R] of the edges leaving R from
/// outside the heaviest color class.
CollapseResult collapsibility(const Graph& g, int k, VertexSet r, long coloring_cap = 1'000'000);

struct EdgeAddition {
  std::vector<Edge> s;
  VertexSet h_vertices = 0;
  std::vector<Edge> h_edges;
};

struct EdgeAdditionOptions {
  int pool_cap = 64;         ///< above this many non-edges, use only those at distance 2
  long candidate_cap = 200'000;
};

struct EdgeAdditionResult {
  std::optional<EdgeAddition> found;
  long candidates = 0;
  /// Every non-edge set up to the budget was tested; absence is then exact.
  bool exhaustive = true;
};

/// Witness that this particular set of non-edges is an edge-addition, if the
/// search finds one. Exact for a single edge when G is k-critical.
std::optional<EdgeAddition> check_edge_addition(const Graph& g, int k, std::span<const Edge> s);

/// Tries non-edge sets by increasing size up to the budget.
EdgeAdditionResult find_edge_addition(const Graph& g, int k, int budget, const EdgeAdditionOptions& options = {});

struct MicResult {
  int value = 0;
  VertexSet witness = 0;
};

/// Maximum degree sum over independent sets. n <= 40.
MicResult mic(const Graph& g);

/// Injective map of pattern vertices into host vertices carrying edges to
/// edges (not necessarily induced). If `pin` >= 0 it must map to `target`.
std::optional<std::vector<int>> subgraph_embedding(const Graph& pattern, const Graph& host, Vertex pin = -1,
                                                   Vertex target = -1);

/// Vertices of R with a neighbor outside R.
VertexSet boundary(const Graph& g, VertexSet r);
/// Sum over a in A of |N(a) ∩ B| in G[A ∪ B].
int edge_between(const Graph& g, VertexSet a, VertexSet b);

/// Unordered pairs of vertices with equal closed neighborhoods.
int closed_twin_pairs(const Graph& g);
/// H is smaller than G: fewer vertices, else fewer edges, else G has fewer
/// closed-twin pairs.
bool is_smaller(const Graph& h, const Graph& g);

}  // namespace orelab
