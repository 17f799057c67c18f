#include "orelab/packing.hpp"

#include <algorithm>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

namespace {

void require_k(int k) {
  if (k < 4) throw ArgumentError("packing: k must be at least 4, got " + std::to_string(k));
}

class PackingSearch {
 public:
  PackingSearch(int k, std::vector<VertexSet> cliques, int n) : k_(k), cliques_(std::move(cliques)) {
    containing_.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
      vset::for_each(cliques_[i], [&](Vertex v) { containing_[v].push_back(static_cast<int>(i)); });
    }
  }

  PackingWitness run(VertexSet all) {
    search(all, 0);
    PackingWitness out;
    out.k = k_;
    out.value = best_;
    for (int idx : best_pick_) out.cliques.push_back(cliques_[idx]);
    return out;
  }

 private:
  int weight(int idx) const { return vset::size(cliques_[idx]) == k_ - 1 ? 2 : 1; }

  void search(VertexSet avail, int value) {
    VertexSet coverable = 0;
    for (VertexSet c : cliques_) {
      if (vset::subset(c, avail)) coverable |= c;
    }
    const int bound = 2 * vset::size(coverable) / (k_ - 1);
    if (value + bound <= best_) return;
    if (coverable == 0) {
      best_ = value;
      best_pick_ = pick_;
      return;
    }
    avail &= coverable;
    const Vertex v = vset::first(avail);
    for (int idx : containing_[v]) {
      if (!vset::subset(cliques_[idx], avail)) continue;
      pick_.push_back(idx);
      search(avail & ~cliques_[idx], value + weight(idx));
      pick_.pop_back();
    }
    search(avail & ~vset::bit(v), value);
  }

  int k_;
  std::vector<VertexSet> cliques_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> pick_;
  std::vector<int> best_pick_;
  int best_ = -1;
};

}  // namespace

int PackingWitness::big_cliques() const {
  return static_cast<int>(std::count_if(cliques.begin(), cliques.end(),
                                        [&](VertexSet c) { return vset::size(c) == k - 1; }));
}

int PackingWitness::small_cliques() const { return static_cast<int>(cliques.size()) - big_cliques(); }

std::vector<VertexSet> cliques_of_order(const Graph& g, int order, long cap, VertexSet within) {
  std::vector<VertexSet> out;
  if (order <= 0) return out;
  within &= g.vertices();
  auto extend = [&](auto&& self, VertexSet clique, int have, VertexSet candidates) -> void {
    if (have == order) {
      if (static_cast<long>(out.size()) >= cap) {
        throw SizeError("clique enumeration exceeded cap of " + std::to_string(cap));
      }
      out.push_back(clique);
      return;
    }
    while (candidates != 0 && vset::size(candidates) >= order - have) {
      const Vertex v = vset::first(candidates);
      candidates &= ~vset::bit(v);
      self(self, clique | vset::bit(v), have + 1, candidates & g.neighbors(v));
    }
  };
  extend(extend, 0, 0, within);
  return out;
}

PackingWitness compute_T(const Graph& g, int k, const PackingOptions& options) {
  require_k(k);
  std::vector<VertexSet> cliques = cliques_of_order(g, k - 1, options.clique_cap);
  std::vector<VertexSet> small = cliques_of_order(g, k - 2, options.clique_cap);
  if (static_cast<long>(cliques.size() + small.size()) > options.clique_cap) {
    throw SizeError("compute_T: clique count exceeds cap of " + std::to_string(options.clique_cap));
  }
  cliques.insert(cliques.end(), small.begin(), small.end());
  std::sort(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
    return vset::to_vector(a) < vset::to_vector(b);
  });
  PackingSearch search(k, std::move(cliques), g.order());
  PackingWitness w = search.run(g.vertices());
  if (!is_valid_witness(g, w)) throw std::logic_error("compute_T: invalid packing witness");
  return w;
}

int compute_T_bruteforce(const Graph& g, int k) {
  require_k(k);
  const int n = g.order();
  if (n > 12) throw SizeError("compute_T_bruteforce: more than 12 vertices");
  const unsigned full = (1U << n) - 1;
  std::vector<int> memo(std::size_t{1} << n, -1);
  auto complete = [&](unsigned set) {
    for (int u = 0; u < n; ++u) {
      if (!((set >> u) & 1U)) continue;
      for (int v = u + 1; v < n; ++v) {
        if (((set >> v) & 1U) && !g.adjacent(u, v)) return false;
      }
    }
    return true;
  };
  auto best = [&](auto&& self, unsigned set) -> int {
    if (set == 0) return 0;
    if (memo[set] >= 0) return memo[set];
    const int v = std::countr_zero(set);
    const unsigned rest = set & ~(1U << v);
    int value = self(self, rest);
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      const int order = std::popcount(sub) + 1;
      const unsigned c = sub | (1U << v);
      if ((order == k - 1 || order == k - 2) && complete(c)) {
        value = std::max(value, (order == k - 1 ? 2 : 1) + self(self, set & ~c));
      }
      if (sub == 0) break;
    }
    return memo[set] = value;
  };
  return n == 0 ? 0 : best(best, full);
}

bool is_valid_witness(const Graph& g, const PackingWitness& w) {
  VertexSet used = 0;
  int value = 0;
  for (VertexSet c : w.cliques) {
    const int order = vset::size(c);
    if (order != w.k - 1 && order != w.k - 2) return false;
    if ((c & used) != 0 || !vset::subset(c, g.vertices()) || !g.is_clique(c)) return false;
    used |= c;
    value += order == w.k - 1 ? 2 : 1;
  }
  return value == w.value;
}

}  // namespace orelab
