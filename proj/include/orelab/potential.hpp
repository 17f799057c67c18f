#pragma once

#include <vector>

#include "orelab/graph.hpp"
#include "orelab/rational.hpp"

namespace orelab {

/// epsilon = 4 / (k^3 - 2k^2 + 3k), delta = (k - 1) epsilon.
struct PotentialParams {
  explicit PotentialParams(int k);

  int k;
  Rational eps;
  Rational delta;

  /// (k-2)(k+1) + epsilon, the per-vertex coefficient of the potential.
  Rational vertex_coefficient() const;
};

/// (k-2)(k+1)|V| - 2(k-1)|E|.
Rational rho_ky(const Graph& g, int k);
Rational rho_ky(int n, int m, int k);

/// ((k-2)(k+1) + eps)|V| - 2(k-1)|E| - delta T. The caller supplies T so
/// packings can be shared across checks.
Rational rho(const Graph& g, int k, int t_value);
Rational rho(int n, int m, int t_value, const PotentialParams& p);

/// Potential of G[R]; computes T(G[R]) with the exact packer.
Rational rho_subset(const Graph& g, VertexSet r, int k);

struct CompletePotential {
  int order = 0;
  int t_value = 0;
  Rational rho;
};

struct CompletePotentialTable {
  int k = 0;
  std::vector<CompletePotential> rows;  ///< orders 1..k
  bool k_k_matches = false;             ///< rho(K_k) = k^2 - 3k + k eps - 2 delta
  bool k_1_matches = false;             ///< rho(K_1) = k^2 - k - 2 + eps
  bool k_km1_matches = false;           ///< rho(K_{k-1}) = 2k^2 - 6k + 4 + (k-1) eps - 2 delta
  bool middle_bound_holds = false;      ///< rho(K_l) >= 2k^2 - 4k - 2 + 2 eps for 1 < l < k-1

  bool all_hold() const { return k_k_matches && k_1_matches && k_km1_matches && middle_bound_holds; }
};

/// T(K_l) is 2 for l >= k-1, 1 for l = k-2, 0 below; no solver needed.
int complete_graph_T(int order, int k);
CompletePotentialTable complete_potentials(int k);

/// ceil((k/2 - 1/(k-1)) n - k(k-3)/(2(k-1))). Requires n >= k.
long long ky_edge_bound(int n, int k);

struct EpsEdgeBound {
  Rational value;     ///< before rounding
  long long ceiling;  ///< integral edge bound
};

/// ([(k-2)(k+1)+eps] n - k(k-3) + 2 delta - k eps - delta T) / (2(k-1)).
EpsEdgeBound eps_edge_bound(int n, int k, int t_value);

/// k(k-3) + k eps - 2 delta, the potential of K_k.
Rational ore_potential_complete(int k);
/// k(k-3) + n eps - (2 + (n-1)/(k-1)) delta, the bound for k-Ore graphs other than K_k.
Rational ore_potential_bound(int n, int k);
/// 2 + (n-1)/(k-1), the packing lower bound for k-Ore graphs other than K_k.
Rational ore_packing_bound(int n, int k);

}  // namespace orelab
