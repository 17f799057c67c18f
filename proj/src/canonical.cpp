#include "orelab/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>

namespace orelab {

namespace {

using Partition = std::vector<VertexSet>;

constexpr int kContinue = INT_MAX;

// Splits cells until every cell has a uniform neighbor count into every
// other cell. Cell order depends only on structure, never on vertex ids.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const VertexSet cell = cells[c];
        if (vset::size(cell) == 1) continue;
        std::array<VertexSet, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices + 1;
        int hi = -1;
        vset::for_each(cell, [&](Vertex v) {
          const int cnt = vset::size(g.neighbors(v) & splitter);
          by_count[cnt] |= vset::bit(v);
          lo = std::min(lo, cnt);
          hi = std::max(hi, cnt);
        });
        if (lo == hi) continue;
        Partition pieces;
        for (int k = lo; k <= hi; ++k) {
          if (by_count[k] != 0) pieces.push_back(by_count[k]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        c += pieces.size() - 1;
        changed = true;
      }
    }
  }
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Partition cells) {
    refine(g_, cells);
    dfs(cells);
  }

  Canonization result() const {
    Canonization out;
    out.form.n = n_;
    out.form.rows = best_rows_;
    out.form.labeling.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.form.labeling[best_lab_[i]] = i;
    out.generators = gens_;
    UnionFind uf(n_);
    for (const auto& gen : gens_) {
      for (int v = 0; v < n_; ++v) uf.join(v, gen[v]);
    }
    out.orbit.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    out.leaves_visited = leaves_;
    return out;
  }

 private:
  int dfs(const Partition& cells) {
    const int depth = static_cast<int>(path_.size());
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (vset::size(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) return leaf(cells);

    const VertexSet cell = cells[target];
    VertexSet explored = 0;
    for (VertexSet rest = cell; rest != 0; rest &= rest - 1) {
      const Vertex v = vset::first(rest);
      if (explored != 0 && equivalent_to_explored(v, explored)) continue;
      explored |= vset::bit(v);

      Partition child = cells;
      child[target] = cell & ~vset::bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), vset::bit(v));
      refine(g_, child);
      path_.push_back(v);
      const int r = dfs(child);
      path_.pop_back();
      if (r < depth) return r;
    }
    return kContinue;
  }

  // True if v shares an orbit with an explored sibling under the group
  // generated by known automorphisms that fix the current path pointwise.
  bool equivalent_to_explored(Vertex v, VertexSet explored) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (Vertex p : path_) fixes = fixes && gen[p] == p;
      if (!fixes) continue;
      any = true;
      for (int u = 0; u < n_; ++u) uf.join(u, gen[u]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    bool hit = false;
    vset::for_each(explored, [&](Vertex u) { hit = hit || uf.find(u) == root; });
    return hit;
  }

  int leaf(const Partition& cells) {
    ++leaves_;
    std::vector<int> lab(static_cast<std::size_t>(n_));
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      lab[i] = vset::first(cells[i]);
      pos[lab[i]] = i;
    }
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      vset::for_each(g_.neighbors(lab[i]), [&](Vertex u) { rows[i] |= vset::bit(pos[u]); });
    }
    if (!have_) {
      have_ = true;
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path_;
      return kContinue;
    }
    if (rows == first_rows_) return record_automorphism(first_lab_, lab, first_path_);
    if (rows < best_rows_) {
      best_lab_ = std::move(lab);
      best_rows_ = std::move(rows);
      best_path_ = path_;
      return kContinue;
    }
    if (rows == best_rows_) return record_automorphism(best_lab_, lab, best_path_);
    return kContinue;
  }

  int record_automorphism(const std::vector<int>& ref_lab, const std::vector<int>& lab,
                          const std::vector<Vertex>& ref_path) {
    std::vector<int> gen(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gen[ref_lab[i]] = lab[i];
    gens_.push_back(std::move(gen));
    int common = 0;
    while (common < static_cast<int>(path_.size()) && common < static_cast<int>(ref_path.size()) &&
           path_[common] == ref_path[common]) {
      ++common;
    }
    return common;
  }

  const Graph& g_;
  int n_;
  bool have_ = false;
  std::vector<int> first_lab_, best_lab_;
  std::vector<VertexSet> first_rows_, best_rows_;
  std::vector<Vertex> first_path_, best_path_, path_;
  std::vector<std::vector<int>> gens_;
  long leaves_ = 0;
};

}  // namespace

Graph CanonicalForm::graph() const {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    vset::for_each(rows[i] & ~vset::range(i + 1), [&](Vertex j) { edges.emplace_back(i, j); });
  }
  return Graph::from_edges(n, edges);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(f.n);
  for (VertexSet row : f.rows) {
    h ^= row;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

Canonization canonize(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  if (n == 0) return {};
  Partition cells;
  if (colors.empty()) {
    cells.push_back(g.vertices());
  } else {
    std::map<int, VertexSet> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[v]] |= vset::bit(v);
    for (const auto& [color, members] : by_color) cells.push_back(members);
  }
  Searcher search(g);
  search.run(std::move(cells));
  return search.result();
}

CanonicalForm canonical_form(const Graph& g) { return canonize(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (!(fa == fb)) return std::nullopt;
  std::vector<int> at_position(static_cast<std::size_t>(b.order()));
  for (int v = 0; v < b.order(); ++v) at_position[fb.labeling[v]] = v;
  std::vector<int> iso(static_cast<std::size_t>(a.order()));
  for (int v = 0; v < a.order(); ++v) iso[v] = at_position[fa.labeling[v]];
  return iso;
}

}  // namespace orelab
