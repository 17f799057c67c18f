#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orelab/graph.hpp"
#include "orelab/ore.hpp"
#include "orelab/rational.hpp"

namespace orelab {

enum class Role { Structure, Near, Lone, NotLow };
enum class ChargeClass { L, M, P, Q, R };

std::string to_string(Role r);
std::string to_string(ChargeClass c);

/// One gadget shape: a k-Ore graph minus a degree-(k-1) vertex of a cluster
/// of size at least 2, with the host's key vertices in gadget labels.
struct GadgetPattern {
  Graph graph;
  VertexSet keys = 0;
  int compositions = 0;  ///< of the host k-Ore graph
};

struct GadgetCatalog {
  int k = 0;
  int max_compositions = 0;
  std::vector<GadgetPattern> patterns;  ///< only those with at least one key vertex
  bool keys_complete = true;
};

/// Gadgets of every k-Ore graph with at most `max_compositions` compositions.
GadgetCatalog build_gadget_catalog(int k, int max_compositions = 2);

struct RoleMap {
  std::vector<Role> roles;
  VertexSet in_small_clique = 0;  ///< degree-(k-1) vertices in a K_{k-3}
  VertexSet gadget_keys = 0;      ///< degree-(k-1) key vertices of an embedded gadget
  /// False when a gadget larger than the catalog could still fit in G, so a
  /// vertex may be labeled near or lone where it is structure.
  bool complete = true;
};

/// Structure / near / lone labels for the degree-(k-1) vertices.
RoleMap classify_degree_k1(const Graph& g, int k, const GadgetCatalog& catalog);

struct ChargeEntry {
  Vertex v = 0;
  int degree = 0;
  Role role = Role::NotLow;
  ChargeClass cls = ChargeClass::R;
  Rational w;
  Rational w_prime;
};

struct ChargeLedger {
  int k = 0;
  std::vector<ChargeEntry> entries;
  Rational total_w;
  Rational total_w_prime;
  /// Charge of every degree >= k+2 vertex after sending, before receiving.
  bool r1_residue_ok = true;
  bool conserved() const { return total_w == total_w_prime; }
};

/// Initial charge (k-2)(k+1) + eps - deg(v)(k-1), then R1 and R2 applied
/// simultaneously to the initial charges. A structure vertex with no near
/// neighbor sends nothing.
ChargeLedger apply_rules(const Graph& g, int k, const RoleMap& roles);

struct ChargeReport {
  ChargeLedger ledger;
  RoleMap roles;
  int t_value = 0;
  Rational rho;
  bool total_identity = false;  ///< sum w = rho + delta T
  int l = 0, m = 0, p = 0, q = 0, r = 0;
  int e_lm_r = 0;  ///< counted directly
  /// No M vertex is adjacent to a P vertex; the identity below needs it.
  bool identity_applicable = false;
  int e_lm_r_identity = 0;  ///< (k-1)|L| - e(L,P+Q) + (k-2)|M| - e(M,Q)
  bool identity_holds = false;
  std::string note;
  // Observational columns; these need not hold outside minimal counterexamples.
  int r_vertices_above = 0;  ///< R vertices with w' > -2 + eps
  bool lp_bound = false;     ///< |L| + |P| > n(1 - eps/2)
  int oversized_lone_clusters = 0;  ///< lone clusters with more than k-4 vertices
};

ChargeReport charge_report(const Graph& g, int k, const GadgetCatalog& catalog);

nlohmann::json ledger_to_json(const ChargeLedger& ledger);
/// Header line plus one row per vertex: vertex,degree,role,class,w,w_prime.
std::string ledger_to_csv(const ChargeLedger& ledger);
nlohmann::json report_to_json(const ChargeReport& report);

}  // namespace orelab
