#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace orelab {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

// Bitset helpers over vertex ids 0..63.
namespace vset {

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr VertexSet range(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr int size(VertexSet s) { return std::popcount(s); }
constexpr Vertex first(VertexSet s) { return std::countr_zero(s); }
constexpr bool subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Calls f(v) for each member in increasing order.
template <typename F>
constexpr void for_each(VertexSet s, F&& f) {
  while (s != 0) {
    f(static_cast<Vertex>(std::countr_zero(s)));
    s &= s - 1;
  }
}

std::vector<Vertex> to_vector(VertexSet s);
VertexSet from(std::span<const Vertex> vs);

}  // namespace vset

struct Relabeled;

/// Simple undirected graph on dense vertex ids 0..n-1, n <= 64.
///
/// Values are immutable: every "modifying" operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// Hub 0 joined to a cycle on 1..rim.
  static Graph wheel(int rim);
  static Graph petersen();

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return vset::range(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v] | vset::bit(v); }
  bool adjacent(Vertex u, Vertex v) const { return vset::contains(adj_[u], v); }
  int degree(Vertex v) const { return vset::size(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;
  /// Edges with both ends in `s`.
  int edges_within(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  std::span<const VertexSet> rows() const { return adj_; }

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Appends vertex n adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;
  Relabeled induced(VertexSet keep) const;
  Relabeled without_vertex(Vertex v) const;
  /// perm[old] = new.
  Graph permuted(std::span<const int> perm) const;
  Graph complement() const;
  /// Disjoint union; vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;
  void set_edge(Vertex u, Vertex v);

  std::vector<VertexSet> adj_;
};

/// A graph together with the old->new vertex map that produced it.
/// Deleted vertices map to -1.
struct Relabeled {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;

  VertexSet map_set(VertexSet old_ids) const;
};

/// G/xy: x and y replaced by one vertex adjacent to N(x) ∪ N(y) - {x, y}.
/// The merged vertex takes the smaller id; ids above the larger shift down.
Relabeled identify(const Graph& g, Vertex x, Vertex y);

/// Connected components of G[within], in order of their smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);

bool is_connected(const Graph& g);

}  // namespace orelab
