#pragma once

#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Vertex-disjoint K_{k-1} / K_{k-2} subgraphs realizing T(G) = 2r + s.
struct PackingWitness {
  int k = 0;
  std::vector<VertexSet> cliques;
  int value = 0;

  int big_cliques() const;    ///< r, number of K_{k-1}
  int small_cliques() const;  ///< s, number of K_{k-2}
};

struct PackingOptions {
  long clique_cap = 1'000'000;
};

/// Exact T(G) for k >= 4, by branch and bound over the conflict structure of
/// enumerated (k-1)- and (k-2)-cliques (weights 2 and 1). Branching always
/// covers the smallest free vertex; the bound charges 2/(k-1) per vertex that
/// still lies in some available clique.
PackingWitness compute_T(const Graph& g, int k, const PackingOptions& options = {});

/// Subset dynamic program over all vertex sets; n <= 12. Test oracle only.
int compute_T_bruteforce(const Graph& g, int k);

/// Checks disjointness, clique orders and the declared value.
bool is_valid_witness(const Graph& g, const PackingWitness& w);

/// All cliques of exactly `order` vertices, in lexicographic order of their
/// sorted vertex lists.
std::vector<VertexSet> cliques_of_order(const Graph& g, int order, long cap = 1'000'000,
                                        VertexSet within = ~VertexSet{0});

}  // namespace orelab
