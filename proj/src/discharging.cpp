#include "orelab/discharging.hpp"

#include <sstream>

#include "orelab/errors.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/structure.hpp"

namespace orelab {

std::string to_string(Role r) {
  switch (r) {
    case Role::Structure: return "structure";
    case Role::Near: return "near";
    case Role::Lone: return "lone";
    case Role::NotLow: return "-";
  }
  return "?";
}

std::string to_string(ChargeClass c) {
  switch (c) {
    case ChargeClass::L: return "L";
    case ChargeClass::M: return "M";
    case ChargeClass::P: return "P";
    case ChargeClass::Q: return "Q";
    case ChargeClass::R: return "R";
  }
  return "?";
}

GadgetCatalog build_gadget_catalog(int k, int max_compositions) {
  GadgetCatalog out;
  out.k = k;
  out.max_compositions = max_compositions;
  const auto levels = enumerate_k_ore(k, max_compositions);
  for (int l = 0; l <= max_compositions; ++l) {
    for (const Graph& h : levels[l]) {
      const KeyVertexResult keys = key_vertices(h, k);
      out.keys_complete = out.keys_complete && keys.complete;
      for (const Cluster& c : clusters(h, k)) {
        if (vset::size(c.members) < 2) continue;
        // Twins are exchanged by an automorphism, so one deletion per cluster.
        const Relabeled rest = h.without_vertex(vset::first(c.members));
        const VertexSet mapped = rest.map_set(keys.keys & ~vset::bit(vset::first(c.members)));
        if (mapped == 0) continue;
        out.patterns.push_back({rest.graph, mapped, l});
      }
    }
  }
  return out;
}

namespace {

bool in_small_clique(const Graph& g, int k, Vertex x) {
  const int need = k - 4;  // clique order inside N(x)
  if (need <= 0) return true;
  return !cliques_of_order(g, need, 1'000'000, g.neighbors(x)).empty();
}

}  // namespace

RoleMap classify_degree_k1(const Graph& g, int k, const GadgetCatalog& catalog) {
  if (catalog.k != k) throw ArgumentError("classify_degree_k1: catalog built for a different k");
  const int n = g.order();
  RoleMap out;
  out.roles.assign(static_cast<std::size_t>(n), Role::NotLow);
  const std::vector<Cluster> cs = clusters(g, k);
  const std::vector<int> index = cluster_index(g, k);
  bool all_structure = true;
  for (const Cluster& c : cs) {
    const Vertex x = vset::first(c.members);
    bool structure = false;
    if (in_small_clique(g, k, x)) {
      out.in_small_clique |= c.members;
      structure = true;
    }
    for (const GadgetPattern& pat : catalog.patterns) {
      if (pat.graph.order() > n || pat.graph.size() > g.size()) continue;
      bool hit = false;
      vset::for_each(pat.keys, [&](Vertex p) {
        if (!hit && pat.graph.degree(p) <= k - 1) hit = subgraph_embedding(pat.graph, g, p, x).has_value();
      });
      if (hit) {
        out.gadget_keys |= c.members;
        structure = true;
        break;
      }
    }
    if (structure) {
      vset::for_each(c.members, [&](Vertex v) { out.roles[v] = Role::Structure; });
    } else {
      all_structure = false;
    }
  }
  for (const Cluster& c : cs) {
    const Vertex x = vset::first(c.members);
    if (out.roles[x] == Role::Structure) continue;
    bool near = false;
    vset::for_each(g.neighbors(x), [&](Vertex y) {
      const int cy = index[y];
      near = near || (cy >= 0 && cy != index[x]);
    });
    vset::for_each(c.members, [&](Vertex v) { out.roles[v] = near ? Role::Near : Role::Lone; });
  }
  // Largest host whose gadget fits in G.
  const int largest = n >= k - 1 ? (n - k + 1) / (k - 1) : -1;
  out.complete = all_structure || (largest <= catalog.max_compositions && catalog.keys_complete);
  return out;
}

ChargeLedger apply_rules(const Graph& g, int k, const RoleMap& roles) {
  const int n = g.order();
  if (static_cast<int>(roles.roles.size()) != n) throw ArgumentError("apply_rules: role map has the wrong size");
  const PotentialParams p(k);
  const Rational base = Rational((k - 2) * (k + 1)) + p.eps;
  const Rational reserve = Rational(-2) + p.eps;
  ChargeLedger out;
  out.k = k;
  std::vector<Rational> w(static_cast<std::size_t>(n)), wp(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    w[v] = base - Rational(g.degree(v) * (k - 1));
    wp[v] = w[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d >= k + 2) {
      const Rational share = (w[v] - reserve) / d;
      wp[v] -= share * d;
      if (w[v] - share * d != reserve) out.r1_residue_ok = false;
      vset::for_each(g.neighbors(v), [&](Vertex u) { wp[u] += share; });
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (roles.roles[v] != Role::Structure) continue;
    VertexSet near = 0;
    vset::for_each(g.neighbors(v), [&](Vertex u) {
      if (roles.roles[u] == Role::Near) near |= vset::bit(u);
    });
    const int count = vset::size(near);
    if (count == 0) continue;
    // Sending a total of -(k-1) raises the sender by k-1.
    const Rational share = Rational(-(k - 1), count);
    wp[v] -= share * count;
    vset::for_each(near, [&](Vertex u) { wp[u] += share; });
  }
  const std::vector<int> index = cluster_index(g, k);
  std::vector<int> cluster_size(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (index[v] >= 0) ++cluster_size[index[v]];
  }
  for (Vertex v = 0; v < n; ++v) {
    ChargeEntry e;
    e.v = v;
    e.degree = g.degree(v);
    e.role = roles.roles[v];
    if (e.role == Role::Lone && cluster_size[index[v]] == 1) {
      e.cls = ChargeClass::L;
    } else if (e.role == Role::Lone && cluster_size[index[v]] == 2) {
      e.cls = ChargeClass::M;
    } else if (e.degree == k) {
      e.cls = ChargeClass::P;
    } else if (e.degree == k + 1) {
      e.cls = ChargeClass::Q;
    } else {
      e.cls = ChargeClass::R;
    }
    e.w = w[v];
    e.w_prime = wp[v];
    out.total_w += w[v];
    out.total_w_prime += wp[v];
    out.entries.push_back(std::move(e));
  }
  return out;
}

ChargeReport charge_report(const Graph& g, int k, const GadgetCatalog& catalog) {
  ChargeReport out;
  out.roles = classify_degree_k1(g, k, catalog);
  out.ledger = apply_rules(g, k, out.roles);
  const PotentialParams params(k);
  out.t_value = compute_T(g, k).value;
  out.rho = rho(g, k, out.t_value);
  out.total_identity = out.ledger.total_w == out.rho + params.delta * out.t_value;

  VertexSet sets[5] = {0, 0, 0, 0, 0};
  for (const ChargeEntry& e : out.ledger.entries) sets[static_cast<int>(e.cls)] |= vset::bit(e.v);
  const VertexSet L = sets[0], M = sets[1], P = sets[2], Q = sets[3], R = sets[4];
  out.l = vset::size(L);
  out.m = vset::size(M);
  out.p = vset::size(P);
  out.q = vset::size(Q);
  out.r = vset::size(R);
  out.e_lm_r = edge_between(g, L | M, R);
  bool mp_edge = false;
  vset::for_each(M, [&](Vertex v) { mp_edge = mp_edge || (g.neighbors(v) & P) != 0; });
  out.identity_applicable = !mp_edge;
  if (out.identity_applicable) {
    out.e_lm_r_identity =
        (k - 1) * out.l - edge_between(g, L, P | Q) + (k - 2) * out.m - edge_between(g, M, Q);
    out.identity_holds = out.e_lm_r_identity == out.e_lm_r;
  } else {
    out.note = "identity skipped: a vertex of M is adjacent to a vertex of P";
  }

  const Rational reserve = Rational(-2) + params.eps;
  for (const ChargeEntry& e : out.ledger.entries) {
    if (e.cls == ChargeClass::R && e.w_prime > reserve) ++out.r_vertices_above;
  }
  out.lp_bound = Rational(out.l + out.p) > Rational(g.order()) * (Rational(1) - params.eps / 2);
  const std::vector<Cluster> cs = clusters(g, k);
  for (const Cluster& c : cs) {
    if (out.roles.roles[vset::first(c.members)] == Role::Lone && vset::size(c.members) > k - 4) {
      ++out.oversized_lone_clusters;
    }
  }
  return out;
}

nlohmann::json ledger_to_json(const ChargeLedger& ledger) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ChargeEntry& e : ledger.entries) {
    rows.push_back({{"vertex", e.v},
                    {"degree", e.degree},
                    {"role", to_string(e.role)},
                    {"class", to_string(e.cls)},
                    {"w", to_string(e.w)},
                    {"w_prime", to_string(e.w_prime)}});
  }
  return {{"k", ledger.k},
          {"vertices", rows},
          {"total_w", to_string(ledger.total_w)},
          {"total_w_prime", to_string(ledger.total_w_prime)},
          {"conserved", ledger.conserved()},
          {"r1_residue_ok", ledger.r1_residue_ok}};
}

std::string ledger_to_csv(const ChargeLedger& ledger) {
  std::ostringstream os;
  os << "vertex,degree,role,class,w,w_prime\n";
  for (const ChargeEntry& e : ledger.entries) {
    os << e.v << ',' << e.degree << ',' << to_string(e.role) << ',' << to_string(e.cls) << ',' << to_string(e.w)
       << ',' << to_string(e.w_prime) << '\n';
  }
  return os.str();
}

nlohmann::json report_to_json(const ChargeReport& r) {
  nlohmann::json j = {{"ledger", ledger_to_json(r.ledger)},
                      {"T", r.t_value},
                      {"rho", to_string(r.rho)},
                      {"total_identity", r.total_identity},
                      {"L", r.l},
                      {"M", r.m},
                      {"P", r.p},
                      {"Q", r.q},
                      {"R", r.r},
                      {"e_LM_R", r.e_lm_r},
                      {"identity_applicable", r.identity_applicable},
                      {"classification_complete", r.roles.complete},
                      {"observed_R_above_reserve", r.r_vertices_above},
                      {"observed_LP_bound", r.lp_bound},
                      {"observed_oversized_lone_clusters", r.oversized_lone_clusters}};
  if (r.identity_applicable) {
    j["e_LM_R_identity"] = r.e_lm_r_identity;
    j["identity_holds"] = r.identity_holds;
  } else {
    j["note"] = r.note;
  }
  return j;
}

}  // namespace orelab
