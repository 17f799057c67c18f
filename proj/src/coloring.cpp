#include "orelab/coloring.hpp"

#include <string>

#include "orelab/errors.hpp"

namespace orelab {

namespace {

// DSATUR backtracking restricted to one vertex subset. A new color may only
// be opened as the next unused index, which fixes the first occurrence of
// every color and removes palette permutations from the search.
class Dsatur {
 public:
  Dsatur(const Graph& g, int t, Coloring& color) : g_(g), t_(t), color_(color), classes_(static_cast<std::size_t>(t), 0) {}

  bool solve(VertexSet todo) { return step(todo, 0); }

 private:
  bool step(VertexSet todo, int used) {
    if (todo == 0) return true;
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    vset::for_each(todo, [&](Vertex v) {
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (g_.neighbors(v) & classes_[c]) != 0;
      const int deg = vset::size(g_.neighbors(v) & todo);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    if (best_sat == t_) return false;
    const VertexSet rest = todo & ~vset::bit(pick);
    const int limit = used < t_ ? used + 1 : t_;
    for (int c = 0; c < limit; ++c) {
      if ((g_.neighbors(pick) & classes_[c]) != 0) continue;
      classes_[c] |= vset::bit(pick);
      color_[pick] = c;
      if (step(rest, c == used ? used + 1 : used)) return true;
      classes_[c] &= ~vset::bit(pick);
      color_[pick] = kUncolored;
    }
    return false;
  }

  const Graph& g_;
  int t_;
  Coloring& color_;
  std::vector<VertexSet> classes_;
};

}  // namespace

bool is_proper(const Graph& g, std::span<const int> coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (coloring[u] != kUncolored && coloring[u] == coloring[v]) return false;
  }
  return true;
}

std::optional<Coloring> colorable(const Graph& g, int t) {
  if (t < 0) throw ArgumentError("colorable: negative color count");
  Coloring color(static_cast<std::size_t>(g.order()), kUncolored);
  if (g.order() == 0) return color;
  if (t == 0) return std::nullopt;
  for (VertexSet comp : components(g, g.vertices())) {
    Dsatur solver(g, t, color);
    if (!solver.solve(comp)) return std::nullopt;
  }
  if (!is_proper(g, color)) throw std::logic_error("colorable: solver produced an improper coloring");
  return color;
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int t = g.size() == 0 ? 1 : 2;
  while (!colorable(g, t)) ++t;
  return t;
}

bool is_k_critical(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("is_k_critical: k must be positive");
  if (g.order() < k) return false;
  if (k == 1) return g.order() == 1;
  if (g.min_degree() < k - 1) return false;
  if (colorable(g, k - 1)) return false;
  for (auto [u, v] : g.edges()) {
    if (!colorable(g.without_edge(u, v), k - 1)) return false;
  }
  // chi(G) <= k follows: G - e is (k-1)-colorable for any edge.
  return true;
}

bool f_choosable_bruteforce(const Graph& g, std::span<const int> f, int universe) {
  const int n = g.order();
  if (n > 8) throw SizeError("f_choosable_bruteforce: more than 8 vertices");
  if (universe < 0 || universe > 6) throw SizeError("f_choosable_bruteforce: universe outside 0..6");
  if (static_cast<int>(f.size()) != n) throw ArgumentError("f_choosable_bruteforce: f has wrong length");
  if (n == 0) return true;

  // Candidate lists per vertex as color bitmasks.
  std::vector<std::vector<unsigned>> lists(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (f[v] < 0 || f[v] > universe) {
      throw ArgumentError("f_choosable_bruteforce: f(" + std::to_string(v) + ") outside 0..universe");
    }
    for (unsigned mask = 0; mask < (1U << universe); ++mask) {
      if (std::popcount(mask) == f[v]) lists[v].push_back(mask);
    }
  }
  // Palette symmetry: vertex 0's list may be fixed to the lowest colors.
  lists[0].assign(1, (1U << f[0]) - 1);

  // A partial coloring of vertices 0..i-1 is packed 3 bits per vertex.
  struct Frame {
    static int color_of(std::uint32_t code, int v) { return static_cast<int>((code >> (3 * v)) & 7U); }
  };

  // Returns false as soon as some completion of the lists is uncolorable.
  auto search = [&](auto&& self, int v, const std::vector<std::uint32_t>& partial) -> bool {
    if (v == n) return true;
    const VertexSet earlier = g.neighbors(v) & vset::range(v);
    for (unsigned list : lists[v]) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t code : partial) {
        unsigned blocked = 0;
        vset::for_each(earlier, [&](Vertex u) { blocked |= 1U << Frame::color_of(code, u); });
        for (unsigned free = list & ~blocked; free != 0; free &= free - 1) {
          next.push_back(code | (static_cast<std::uint32_t>(std::countr_zero(free)) << (3 * v)));
        }
      }
      if (next.empty()) return false;
      if (!self(self, v + 1, next)) return false;
    }
    return true;
  };
  return search(search, 0, std::vector<std::uint32_t>{0});
}

EdgeCountLemmaReport edge_count_lemma_check(const Graph& g, int k, long subset_cap) {
  if (!is_k_critical(g, k)) throw ArgumentError("edge_count_lemma_check: graph is not k-critical");
  VertexSet low = 0;
  VertexSet deg_k = 0;
  VertexSet deg_k1 = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == k - 1) low |= vset::bit(v);
    if (d == k) deg_k |= vset::bit(v);
    if (d == k + 1) deg_k1 |= vset::bit(v);
  }

  EdgeCountLemmaReport report;
  auto check = [&](VertexSet a) {
    if (++report.independent_sets_checked > subset_cap) {
      throw SizeError("edge_count_lemma_check: more than " + std::to_string(subset_cap) +
                      " independent sets among " + std::to_string(vset::size(low)) +
                      " degree-(k-1) vertices; remaining sets skipped");
    }
    EdgeCountViolation worst{a, 0, 0, 0, vset::size(a)};
    auto pick = [&](VertexSet pool, int weight, VertexSet& into) {
      vset::for_each(pool, [&](Vertex b) {
        const int hits = vset::size(g.neighbors(b) & a);
        if (hits > weight) {
          into |= vset::bit(b);
          worst.lhs += hits;
          worst.rhs += weight;
        }
      });
    };
    pick(deg_k, 2, worst.b0);
    pick(deg_k1, 3, worst.b1);
    if (worst.lhs >= worst.rhs) report.violations.push_back(worst);
  };

  // Nonempty independent subsets of `low`, each visited once.
  auto grow = [&](auto&& self, VertexSet chosen, VertexSet candidates) -> void {
    while (candidates != 0) {
      const Vertex v = vset::first(candidates);
      candidates &= ~vset::bit(v);
      const VertexSet next = chosen | vset::bit(v);
      check(next);
      self(self, next, candidates & ~g.neighbors(v));
    }
  };
  grow(grow, 0, low);
  return report;
}

}  // namespace orelab
