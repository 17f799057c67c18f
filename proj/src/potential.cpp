#include "orelab/potential.hpp"

#include <string>

#include "orelab/errors.hpp"
#include "orelab/packing.hpp"

namespace orelab {

PotentialParams::PotentialParams(int k_) : k(k_) {
  if (k < 2) throw ArgumentError("potential: k must be at least 2, got " + std::to_string(k));
  const long long kk = k;
  eps = Rational(4, kk * kk * kk - 2 * kk * kk + 3 * kk);
  delta = eps * (kk - 1);
}

Rational PotentialParams::vertex_coefficient() const {
  return Rational(static_cast<long long>(k - 2) * (k + 1)) + eps;
}

Rational rho_ky(int n, int m, int k) {
  return Rational(static_cast<long long>(k - 2) * (k + 1) * n - 2LL * (k - 1) * m);
}

Rational rho_ky(const Graph& g, int k) { return rho_ky(g.order(), g.size(), k); }

Rational rho(int n, int m, int t_value, const PotentialParams& p) {
  return p.vertex_coefficient() * n - Rational(2LL * (p.k - 1) * m) - p.delta * t_value;
}

Rational rho(const Graph& g, int k, int t_value) { return rho(g.order(), g.size(), t_value, PotentialParams(k)); }

Rational rho_subset(const Graph& g, VertexSet r, int k) {
  if (!vset::subset(r, g.vertices())) throw ArgumentError("rho_subset: R is not a vertex subset");
  if (r == 0) return Rational(0);
  const Graph sub = g.induced(r).graph;
  return rho(sub, k, compute_T(sub, k).value);
}

int complete_graph_T(int order, int k) {
  if (order >= k - 1) return 2;
  if (order == k - 2) return 1;
  return 0;
}

CompletePotentialTable complete_potentials(int k) {
  if (k < 4) throw ArgumentError("complete_potentials: k must be at least 4");
  const PotentialParams p(k);
  const long long kk = k;
  CompletePotentialTable table;
  table.k = k;
  for (int l = 1; l <= k; ++l) {
    const int t = complete_graph_T(l, k);
    table.rows.push_back({l, t, rho(l, l * (l - 1) / 2, t, p)});
  }
  const auto& at = [&](int l) -> const Rational& { return table.rows[l - 1].rho; };
  table.k_k_matches = at(k) == Rational(kk * kk - 3 * kk) + p.eps * kk - p.delta * 2;
  table.k_1_matches = at(1) == Rational(kk * kk - kk - 2) + p.eps;
  table.k_km1_matches = at(k - 1) == Rational(2 * kk * kk - 6 * kk + 4) + p.eps * (kk - 1) - p.delta * 2;
  const Rational floor_value = Rational(2 * kk * kk - 4 * kk - 2) + p.eps * 2;
  table.middle_bound_holds = true;
  for (int l = 2; l < k - 1; ++l) table.middle_bound_holds = table.middle_bound_holds && at(l) >= floor_value;
  return table;
}

long long ky_edge_bound(int n, int k) {
  if (k < 4) throw ArgumentError("ky_edge_bound: k must be at least 4");
  if (n < k) throw ArgumentError("ky_edge_bound: n must be at least k");
  const long long kk = k;
  const Rational value = (Rational(kk, 2) - Rational(1, kk - 1)) * n - Rational(kk * (kk - 3), 2 * (kk - 1));
  return static_cast<long long>(ceil(value));
}

EpsEdgeBound eps_edge_bound(int n, int k, int t_value) {
  if (k < 4) throw ArgumentError("eps_edge_bound: k must be at least 4");
  if (n < k) throw ArgumentError("eps_edge_bound: n must be at least k");
  const PotentialParams p(k);
  const long long kk = k;
  const Rational numer = p.vertex_coefficient() * n - Rational(kk * (kk - 3)) + p.delta * 2 - p.eps * kk -
                         p.delta * t_value;
  EpsEdgeBound out;
  out.value = numer / (2 * (kk - 1));
  out.ceiling = static_cast<long long>(ceil(out.value));
  return out;
}

Rational ore_potential_complete(int k) {
  const PotentialParams p(k);
  const long long kk = k;
  return Rational(kk * (kk - 3)) + p.eps * kk - p.delta * 2;
}

Rational ore_potential_bound(int n, int k) {
  const PotentialParams p(k);
  const long long kk = k;
  return Rational(kk * (kk - 3)) + p.eps * n - ore_packing_bound(n, k) * p.delta;
}

Rational ore_packing_bound(int n, int k) { return Rational(2) + Rational(n - 1, k - 1); }

}  // namespace orelab
