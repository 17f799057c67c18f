#include "orelab/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "orelab/errors.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/rng.hpp"

namespace orelab {

std::vector<Cluster> clusters(const Graph& g, int k) {
  std::vector<Cluster> out;
  std::map<VertexSet, std::size_t> by_neighborhood;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k - 1) continue;
    const VertexSet key = g.closed_neighbors(v);
    auto [it, fresh] = by_neighborhood.try_emplace(key, out.size());
    if (fresh) out.push_back({0, key});
    out[it->second].members |= vset::bit(v);
  }
  return out;
}

std::vector<int> cluster_index(const Graph& g, int k) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  const std::vector<Cluster> cs = clusters(g, k);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    vset::for_each(cs[i].members, [&](Vertex v) { index[v] = static_cast<int>(i); });
  }
  return index;
}

std::vector<DiamondOrEmerald> find_diamonds_emeralds(const Graph& g, int k, VertexSet forbidden) {
  if (k < 3) throw ArgumentError("find_diamonds_emeralds: k must be at least 3");
  VertexSet low = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == k - 1) low |= vset::bit(v);
  }
  low &= ~forbidden;
  const VertexSet allowed = g.vertices() & ~forbidden;
  std::vector<DiamondOrEmerald> out;
  for (VertexSet c : cliques_of_order(g, k - 1, 1'000'000, low)) {
    out.push_back({DiamondOrEmerald::Kind::Emerald, c, -1, -1});
  }
  for (VertexSet inner : cliques_of_order(g, k - 2, 1'000'000, low)) {
    VertexSet common = allowed & ~inner;
    vset::for_each(inner, [&](Vertex v) { common &= g.neighbors(v); });
    const std::vector<Vertex> ends = vset::to_vector(common);
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        out.push_back({DiamondOrEmerald::Kind::Diamond, inner | vset::bit(ends[i]) | vset::bit(ends[j]), ends[i],
                       ends[j]});
      }
    }
  }
  return out;
}

Graph clone(const Graph& g, int k, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
    throw ArgumentError("clone: xy must be an edge");
  }
  if (g.degree(x) != k - 1) throw ArgumentError("clone: x must have degree k-1");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (u != y && v != y) edges.emplace_back(u, v);
  }
  const VertexSet copy_nbrs = (g.neighbors(x) & ~vset::bit(y)) | vset::bit(x);
  vset::for_each(copy_nbrs, [&](Vertex v) { edges.emplace_back(y, v); });
  return Graph::from_edges(g.order(), edges);
}

ColorReduction color_reduce(const Graph& g, VertexSet r, std::span<const int> phi) {
  const int n = g.order();
  if (!vset::subset(r, g.vertices())) throw ArgumentError("color_reduce: R is not a vertex subset");
  if (static_cast<int>(phi.size()) != n) throw ArgumentError("color_reduce: coloring must be indexed by vertex");
  std::set<int> used;
  bool total = true;
  vset::for_each(r, [&](Vertex v) {
    if (phi[v] < 0) total = false;
    used.insert(phi[v]);
  });
  if (!total) throw ArgumentError("color_reduce: coloring is partial on R");
  for (auto [u, v] : g.edges()) {
    if (vset::contains(r, u) && vset::contains(r, v) && phi[u] == phi[v]) {
      throw ArgumentError("color_reduce: coloring is improper on G[R]");
    }
  }
  if (r != 0 && static_cast<int>(used.size()) != chromatic_number(g.induced(r).graph)) {
    throw ArgumentError("color_reduce: coloring must use chi(G[R]) colors");
  }

  ColorReduction out;
  out.old_to_new.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!vset::contains(r, v)) out.old_to_new[v] = next++;
  }
  std::map<int, Vertex> color_vertex;
  for (int c : used) {
    color_vertex[c] = next;
    out.color_vertices.push_back(next++);
    out.color_values.push_back(c);
  }
  vset::for_each(r, [&](Vertex v) { out.old_to_new[v] = color_vertex[phi[v]]; });
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const int a = out.old_to_new[u];
    const int b = out.old_to_new[v];
    if (a != b) edges.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < out.color_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.color_vertices.size(); ++j) {
      edges.emplace_back(out.color_vertices[i], out.color_vertices[j]);
    }
  }
  out.graph = Graph::from_edges(next, edges);
  return out;
}

Graph ExtensionRecord::w_graph() const {
  std::vector<int> dense(static_cast<std::size_t>(reduced.graph.order()), -1);
  int next = 0;
  vset::for_each(w_vertices, [&](Vertex v) { dense[v] = next++; });
  std::vector<Edge> edges;
  for (auto [u, v] : w_edges) edges.emplace_back(dense[u], dense[v]);
  return Graph::from_edges(next, edges);
}

Subgraph minimal_critical_subgraph(const Graph& g, int k, std::span<const int> vertex_order,
                                   std::span<const int> edge_order) {
  if (colorable(g, k - 1)) throw ArgumentError("minimal_critical_subgraph: graph is (k-1)-colorable");
  Graph h = g;
  VertexSet alive = g.vertices();
  for (int v : vertex_order) {
    if (!vset::contains(alive, v)) continue;
    Graph trial = h;
    vset::for_each(h.neighbors(v), [&](Vertex u) { trial = trial.without_edge(u, v); });
    if (!colorable(trial, k - 1)) {
      h = std::move(trial);
      alive &= ~vset::bit(v);
    }
  }
  const std::vector<Edge> all = g.edges();
  for (int idx : edge_order) {
    const auto [u, v] = all[idx];
    if (!h.adjacent(u, v)) continue;
    Graph trial = h.without_edge(u, v);
    if (!colorable(trial, k - 1)) h = std::move(trial);
  }
  Subgraph out;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) out.vertices |= vset::bit(v);
  }
  out.edges = h.edges();
  return out;
}

namespace {

Rational rho_of(const Graph& h, int k, int* t_out) {
  const int t = compute_T(h, k).value;
  if (t_out != nullptr) *t_out = t;
  return rho(h, k, t);
}

void fill_record(const Graph& g, int k, ExtensionRecord& rec) {
  const ColorReduction& red = rec.reduced;
  VertexSet color_set = 0;
  for (Vertex x : red.color_vertices) color_set |= vset::bit(x);
  rec.core = rec.w_vertices & color_set;
  rec.core_size = vset::size(rec.core);
  if (rec.core == 0) throw std::logic_error("build_extension: W contains no color vertex");

  std::vector<int> to_g(static_cast<std::size_t>(red.graph.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!vset::contains(rec.r, v)) to_g[red.old_to_new[v]] = v;
  }
  const VertexSet y_reduced = rec.w_vertices & ~rec.core;
  VertexSet y = 0;
  vset::for_each(y_reduced, [&](Vertex v) { y |= vset::bit(to_g[v]); });
  rec.r_prime = rec.r | y;
  rec.spanning = rec.r_prime == g.vertices();

  const Graph w = rec.w_graph();
  const int x = rec.core_size;
  rec.incompleteness = g.edges_within(rec.r_prime) - (g.edges_within(rec.r) + w.size() - x * (x - 1) / 2);

  // Itemize the defect.
  std::set<Edge> w_edges;
  for (auto [u, v] : rec.w_edges) w_edges.insert({std::min(u, v), std::max(u, v)});
  auto in_w = [&](Vertex a, Vertex b) { return w_edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  IncompletenessSources& s = rec.sources;
  vset::for_each(y, [&](Vertex yv) {
    std::map<Vertex, int> per_color;
    vset::for_each(g.neighbors(yv) & rec.r, [&](Vertex u) { ++per_color[red.old_to_new[u]]; });
    for (auto [xc, count] : per_color) {
      s.repeated_color_edges += count - 1;
      if (!in_w(red.old_to_new[yv], xc)) ++s.unused_cross_edges;
    }
  });
  const std::vector<Vertex> core = vset::to_vector(rec.core);
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j) s.unused_core_edges += !in_w(core[i], core[j]);
  }
  for (auto [u, v] : g.edges()) {
    if (vset::contains(y, u) && vset::contains(y, v)) s.unused_inner_edges += !in_w(red.old_to_new[u], red.old_to_new[v]);
  }
  if (rec.incompleteness < 0 || rec.incompleteness != s.total()) {
    throw std::logic_error("build_extension: incompleteness accounting is inconsistent");
  }

  const PotentialParams p(k);
  rec.rho_r = rho_of(g.induced(rec.r).graph, k, &rec.t_r);
  rec.rho_r_prime = rho_of(g.induced(rec.r_prime).graph, k, &rec.t_r_prime);
  rec.rho_w = rho_of(w, k, &rec.t_w);
  rec.t_core = complete_graph_T(x, k);
  rec.rho_core = rho(x, x * (x - 1) / 2, rec.t_core, p);
  rec.extension_bound = rec.rho_r + rec.rho_w - (rec.rho_core + p.delta * rec.t_core - p.delta * x);
  rec.extension_bound_holds = rec.rho_r_prime <= rec.extension_bound;
}

}  // namespace

ExtensionResult build_extension(const Graph& g, int k, VertexSet r, std::span<const int> phi,
                                const ExtensionOptions& options) {
  if (r == 0 || r == g.vertices() || !vset::subset(r, g.vertices())) {
    throw ArgumentError("build_extension: R must be a nonempty proper vertex subset");
  }
  if (!is_k_critical(g, k)) throw ArgumentError("build_extension: G is not k-critical");
  ExtensionRecord base;
  base.r = r;
  base.phi.assign(phi.begin(), phi.end());
  base.reduced = color_reduce(g, r, phi);
  const Graph& h = base.reduced.graph;
  if (colorable(h, k - 1)) throw std::logic_error("build_extension: reduced graph is (k-1)-colorable");

  std::vector<int> vorder(static_cast<std::size_t>(h.order()));
  std::iota(vorder.begin(), vorder.end(), 0);
  std::vector<int> eorder(static_cast<std::size_t>(h.size()));
  std::iota(eorder.begin(), eorder.end(), 0);
  Rng rng(options.seed);

  ExtensionResult out;
  std::set<std::pair<VertexSet, std::vector<Edge>>> seen;
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    if (attempt > 0) {
      for (std::size_t i = vorder.size(); i > 1; --i) std::swap(vorder[i - 1], vorder[uniform_below(rng, i)]);
      for (std::size_t i = eorder.size(); i > 1; --i) std::swap(eorder[i - 1], eorder[uniform_below(rng, i)]);
    }
    Subgraph w = minimal_critical_subgraph(h, k, vorder, eorder);
    if (!seen.insert({w.vertices, w.edges}).second) continue;
    if (static_cast<int>(out.records.size()) == options.max_records) {
      out.truncated = true;
      break;
    }
    ExtensionRecord rec = base;
    rec.w_vertices = w.vertices;
    rec.w_edges = std::move(w.edges);
    fill_record(g, k, rec);
    out.records.push_back(std::move(rec));
  }
  return out;
}

CollapseResult collapsibility(const Graph& g, int k, VertexSet r, long coloring_cap) {
  if (!vset::subset(r, g.vertices()) || (r == g.vertices() && g.order() > 0)) {
    throw ArgumentError("collapsibility: R must be a proper vertex subset");
  }
  CollapseResult out;
  if (r == 0) return out;
  const std::vector<Vertex> order = vset::to_vector(r);
  std::vector<int> out_edges(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out_edges[i] = vset::size(g.neighbors(order[i]) & ~r);
  const int palette = k - 1;
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> class_out(static_cast<std::size_t>(std::max(palette, 0)), 0);
  int total = 0;
  for (int w : out_edges) total += w;
  bool stop = false;
  auto dfs = [&](auto&& self, std::size_t i, int used) -> void {
    if (stop) return;
    if (i == order.size()) {
      if (++out.colorings > coloring_cap) {
        out.complete = false;
        stop = true;
        return;
      }
      const int heaviest = *std::max_element(class_out.begin(), class_out.end());
      out.value = std::max(out.value, total - heaviest);
      return;
    }
    const Vertex v = order[i];
    const int limit = std::min(used + 1, palette);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      vset::for_each(g.neighbors(v) & r, [&](Vertex u) { ok = ok && color[u] != c; });
      if (!ok) continue;
      color[v] = c;
      class_out[c] += out_edges[i];
      self(self, i + 1, std::max(used, c + 1));
      class_out[c] -= out_edges[i];
      color[v] = -1;
    }
  };
  if (palette > 0) dfs(dfs, 0, 0);
  return out;
}

std::optional<EdgeAddition> check_edge_addition(const Graph& g, int k, std::span<const Edge> s) {
  Graph plus = g;
  VertexSet endpoints = 0;
  for (auto [u, v] : s) {
    if (g.adjacent(u, v) || u == v) throw ArgumentError("check_edge_addition: S must consist of non-edges");
    plus = plus.with_edge(u, v);
    endpoints |= vset::bit(u) | vset::bit(v);
  }
  if (colorable(plus, k - 1)) return std::nullopt;
  std::vector<int> vorder(static_cast<std::size_t>(g.order()));
  std::iota(vorder.begin(), vorder.end(), 0);
  for (Vertex drop = 0; drop < g.order(); ++drop) {
    if (vset::contains(endpoints, drop)) continue;
    Graph h = plus;
    vset::for_each(plus.neighbors(drop), [&](Vertex u) { h = h.without_edge(u, drop); });
    if (colorable(h, k - 1)) continue;
    // Minimize while keeping every vertex of S and every edge of S.
    for (Vertex v : vorder) {
      if (vset::contains(endpoints, v) || h.degree(v) == 0) continue;
      Graph trial = h;
      vset::for_each(h.neighbors(v), [&](Vertex u) { trial = trial.without_edge(u, v); });
      if (!colorable(trial, k - 1)) h = std::move(trial);
    }
    for (auto [u, v] : h.edges()) {
      if (!g.adjacent(u, v)) continue;
      Graph trial = h.without_edge(u, v);
      if (!colorable(trial, k - 1)) h = std::move(trial);
    }
    VertexSet hv = 0;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (h.degree(v) > 0) hv |= vset::bit(v);
    }
    const Graph dense = h.induced(hv).graph;
    if (!is_k_critical(dense, k)) continue;
    EdgeAddition out;
    out.s.assign(s.begin(), s.end());
    out.h_vertices = hv;
    out.h_edges = h.edges();
    return out;
  }
  return std::nullopt;
}

EdgeAdditionResult find_edge_addition(const Graph& g, int k, int budget, const EdgeAdditionOptions& options) {
  if (budget < 0) throw ArgumentError("find_edge_addition: negative budget");
  EdgeAdditionResult out;
  std::vector<Edge> pool;
  int non_edges = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        ++non_edges;
        pool.emplace_back(u, v);
      }
    }
  }
  if (non_edges > options.pool_cap) {
    std::erase_if(pool, [&](Edge e) { return (g.neighbors(e.first) & g.neighbors(e.second)) == 0; });
    out.exhaustive = static_cast<int>(pool.size()) == non_edges;
  }
  // Minimizing G + S - v without protection is exact only for k-critical G.
  const bool critical = is_k_critical(g, k);
  if (!critical) out.exhaustive = false;

  std::vector<int> vorder(static_cast<std::size_t>(g.order()));
  std::iota(vorder.begin(), vorder.end(), 0);
  std::vector<Edge> s;
  bool stop = false;
  auto try_set = [&]() {
    if (++out.candidates > options.candidate_cap) {
      out.exhaustive = false;
      stop = true;
      return;
    }
    Graph plus = g;
    for (auto [u, v] : s) plus = plus.with_edge(u, v);
    if (colorable(plus, k - 1)) return;
    for (Vertex drop = 0; drop < g.order() && !out.found; ++drop) {
      Graph h = plus;
      vset::for_each(plus.neighbors(drop), [&](Vertex u) { h = h.without_edge(u, drop); });
      if (colorable(h, k - 1)) continue;
      std::vector<int> eorder(static_cast<std::size_t>(h.size()));
      std::iota(eorder.begin(), eorder.end(), 0);
      const Subgraph sub = minimal_critical_subgraph(h, k, vorder, eorder);
      std::vector<Edge> added;
      for (auto [u, v] : sub.edges) {
        if (!g.adjacent(u, v)) added.emplace_back(u, v);
      }
      if (!added.empty()) {
        out.found = EdgeAddition{added, sub.vertices, sub.edges};
      } else if (auto w = check_edge_addition(g, k, s)) {
        out.found = std::move(w);
      }
    }
    if (out.found) stop = true;
  };
  auto choose = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (stop) return;
    if (remaining == 0) {
      try_set();
      return;
    }
    for (std::size_t i = start; i < pool.size() && !stop; ++i) {
      s.push_back(pool[i]);
      self(self, i + 1, remaining - 1);
      s.pop_back();
    }
  };
  for (int size = 1; size <= budget && !stop; ++size) choose(choose, 0, size);
  if (out.found) {
    // Independent post-condition check.
    const EdgeAddition& w = *out.found;
    Graph h(g.order());
    for (auto [u, v] : w.h_edges) h = h.with_edge(u, v);
    bool ok = is_k_critical(h.induced(w.h_vertices).graph, k) && vset::size(w.h_vertices) < g.order() &&
              static_cast<int>(w.s.size()) <= budget;
    for (auto [u, v] : w.s) ok = ok && h.adjacent(u, v) && !g.adjacent(u, v);
    for (auto [u, v] : w.h_edges) {
      const bool in_s = std::find(w.s.begin(), w.s.end(), Edge{u, v}) != w.s.end() ||
                        std::find(w.s.begin(), w.s.end(), Edge{v, u}) != w.s.end();
      ok = ok && (in_s || g.adjacent(u, v));
    }
    if (!ok) throw std::logic_error("find_edge_addition: witness failed verification");
  }
  return out;
}

MicResult mic(const Graph& g) {
  if (g.order() > 40) throw SizeError("mic: more than 40 vertices");
  MicResult best;
  best.value = -1;
  auto weight_of = [&](VertexSet s) {
    int w = 0;
    vset::for_each(s, [&](Vertex v) { w += g.degree(v); });
    return w;
  };
  auto search = [&](auto&& self, VertexSet chosen, int value, VertexSet candidates) -> void {
    if (value + weight_of(candidates) <= best.value) return;
    if (candidates == 0) {
      best.value = value;
      best.witness = chosen;
      return;
    }
    const Vertex v = vset::first(candidates);
    self(self, chosen | vset::bit(v), value + g.degree(v), candidates & ~g.closed_neighbors(v));
    self(self, chosen, value, candidates & ~vset::bit(v));
  };
  search(search, 0, 0, g.vertices());
  return best;
}

std::optional<std::vector<int>> subgraph_embedding(const Graph& pattern, const Graph& host, Vertex pin,
                                                   Vertex target) {
  const int p = pattern.order();
  if (p > host.order()) return std::nullopt;
  if (pattern.size() > host.size()) return std::nullopt;
  if (pin >= 0 && (pin >= p || target < 0 || target >= host.order())) {
    throw ArgumentError("subgraph_embedding: pinned vertex out of range");
  }
  // Order pattern vertices so each one after the first has an earlier neighbor
  // where possible; start from the pin or the highest degree.
  std::vector<Vertex> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < p) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < p; ++v) {
      if (vset::contains(placed, v)) continue;
      const int links = vset::size(pattern.neighbors(v) & placed);
      const bool better =
          best < 0 || links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best));
      if (order.empty() && pin >= 0) {
        best = pin;
        break;
      }
      if (better) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed |= vset::bit(best);
  }
  std::vector<int> map(static_cast<std::size_t>(p), -1);
  auto search = [&](auto&& self, std::size_t i, VertexSet used) -> bool {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    VertexSet cand = host.vertices() & ~used;
    vset::for_each(pattern.neighbors(v), [&](Vertex u) {
      if (map[u] >= 0) cand &= host.neighbors(map[u]);
    });
    if (i == 0 && pin >= 0) cand &= vset::bit(target);
    bool found = false;
    vset::for_each(cand, [&](Vertex h) {
      if (found || host.degree(h) < pattern.degree(v)) return;
      map[v] = h;
      if (self(self, i + 1, used | vset::bit(h))) {
        found = true;
        return;
      }
      map[v] = -1;
    });
    return found;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  return map;
}

VertexSet boundary(const Graph& g, VertexSet r) {
  VertexSet out = 0;
  vset::for_each(r, [&](Vertex u) {
    if ((g.neighbors(u) & ~r) != 0) out |= vset::bit(u);
  });
  return out;
}

int edge_between(const Graph& g, VertexSet a, VertexSet b) {
  int total = 0;
  vset::for_each(a, [&](Vertex u) { total += vset::size(g.neighbors(u) & b); });
  return total;
}

int closed_twin_pairs(const Graph& g) {
  int pairs = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) pairs += g.closed_neighbors(u) == g.closed_neighbors(v);
  }
  return pairs;
}

bool is_smaller(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return h.order() < g.order();
  if (h.size() != g.size()) return h.size() < g.size();
  return closed_twin_pairs(g) < closed_twin_pairs(h);
}

}  // namespace orelab
