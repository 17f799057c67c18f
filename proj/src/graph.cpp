#include "orelab/graph.hpp"

#include <algorithm>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

namespace vset {

std::vector<Vertex> to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(size(s));
  for_each(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet from(std::span<const Vertex> vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

}  // namespace vset

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("graph order " + std::to_string(n) + " outside 0..64");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = vset::range(n) & ~vset::bit(v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
  return g;
}

Graph Graph::wheel(int rim) {
  if (rim < 3) throw ArgumentError("wheel needs a rim of at least 3 vertices");
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.set_edge(0, 1 + i);
    g.set_edge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.set_edge(i, (i + 1) % 5);
    g.set_edge(i, i + 5);
    g.set_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += vset::size(row);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (VertexSet row : adj_) best = std::min(best, vset::size(row));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet row : adj_) best = std::max(best, vset::size(row));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    vset::for_each(adj_[u] & ~vset::range(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  vset::for_each(s, [&](Vertex v) { twice += vset::size(adj_[v] & s); });
  return twice / 2;
}

bool Graph::is_clique(VertexSet s) const {
  bool ok = true;
  vset::for_each(s, [&](Vertex v) { ok = ok && vset::subset(s & ~vset::bit(v), adj_[v]); });
  return ok;
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  vset::for_each(s, [&](Vertex v) { ok = ok && (adj_[v] & s) == 0; });
  return ok;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw ArgumentError("vertex " + std::to_string(v) + " not in graph of order " +
                        std::to_string(order()));
  }
}

void Graph::set_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= vset::bit(v);
  adj_[v] |= vset::bit(u);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  g.set_edge(u, v);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.adj_[u] &= ~vset::bit(v);
  g.adj_[v] &= ~vset::bit(u);
  return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (order() >= kMaxVertices) throw SizeError("graph already has 64 vertices");
  if (!vset::subset(nbrs, vertices())) throw ArgumentError("neighbor set outside vertex range");
  Graph g = *this;
  const Vertex v = order();
  g.adj_.push_back(nbrs);
  vset::for_each(nbrs, [&](Vertex u) { g.adj_[u] |= vset::bit(v); });
  return g;
}

Relabeled Graph::induced(VertexSet keep) const {
  keep &= vertices();
  Relabeled out;
  out.old_to_new.assign(adj_.size(), -1);
  out.new_to_old = vset::to_vector(keep);
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) out.old_to_new[out.new_to_old[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(out.new_to_old.size()));
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    vset::for_each(adj_[out.new_to_old[i]] & keep,
                   [&](Vertex u) { g.adj_[i] |= vset::bit(out.old_to_new[u]); });
  }
  out.graph = std::move(g);
  return out;
}

Relabeled Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  return induced(vertices() & ~vset::bit(v));
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (perm.size() != adj_.size()) throw ArgumentError("permutation length mismatch");
  Graph g(order());
  for (Vertex v = 0; v < order(); ++v) {
    VertexSet row = 0;
    vset::for_each(adj_[v], [&](Vertex u) { row |= vset::bit(perm[u]); });
    g.adj_[perm[v]] = row;
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(order());
  for (Vertex v = 0; v < order(); ++v) g.adj_[v] = vertices() & ~adj_[v] & ~vset::bit(v);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (order() + other.order() > kMaxVertices) throw SizeError("disjoint union exceeds 64 vertices");
  Graph g = *this;
  const int shift = order();
  for (VertexSet row : other.adj_) g.adj_.push_back(row << shift);
  return g;
}

VertexSet Relabeled::map_set(VertexSet old_ids) const {
  VertexSet out = 0;
  vset::for_each(old_ids, [&](Vertex v) {
    if (old_to_new[v] >= 0) out |= vset::bit(old_to_new[v]);
  });
  return out;
}

Relabeled identify(const Graph& g, Vertex x, Vertex y) {
  const int n = g.order();
  if (x < 0 || x >= n || y < 0 || y >= n) throw ArgumentError("identify: vertex out of range");
  if (x == y) throw ArgumentError("identify: vertices must differ");
  const Vertex keep = std::min(x, y);
  const Vertex drop = std::max(x, y);
  const VertexSet merged = (g.neighbors(x) | g.neighbors(y)) & ~vset::bit(x) & ~vset::bit(y);

  Relabeled out;
  out.old_to_new.resize(n);
  for (Vertex v = 0; v < n; ++v) out.old_to_new[v] = v < drop ? v : v - 1;
  out.old_to_new[drop] = keep;
  out.new_to_old.resize(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v != drop) out.new_to_old[out.old_to_new[v]] = v;
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (u == x || u == y || v == x || v == y) continue;
    edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  }
  vset::for_each(merged, [&](Vertex u) { edges.emplace_back(keep, out.old_to_new[u]); });
  out.graph = Graph::from_edges(n - 1, edges);
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet comp = vset::bit(vset::first(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      vset::for_each(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g, g.vertices()).size() <= 1; }

}  // namespace orelab
