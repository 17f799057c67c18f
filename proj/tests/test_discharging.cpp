#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "orelab/canonical.hpp"
#include "orelab/discharging.hpp"
#include "orelab/errors.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/structure.hpp"
#include "support/oracles.hpp"

using namespace orelab;

namespace {

Rational charge(int k, int d) { return Rational((k - 2) * (k + 1)) + PotentialParams(k).eps - Rational(d * (k - 1)); }

bool embeds_bruteforce(const Graph& pattern, const Graph& host, Vertex pin, Vertex target) {
  std::vector<int> pick(static_cast<std::size_t>(host.order()));
  std::iota(pick.begin(), pick.end(), 0);
  // Every injective map via permutations of the host restricted to a prefix.
  do {
    if (pin >= 0 && pick[pin] != target) continue;
    bool ok = true;
    for (auto [u, v] : pattern.edges()) ok = ok && host.adjacent(pick[u], pick[v]);
    if (ok) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

TEST_CASE("subgraph embedding agrees with permutation search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph host = oracle::random_graph(6, 0.6, rng);
    const Graph pattern = oracle::random_graph(2 + static_cast<int>(rng() % 4), 0.6, rng);
    const Vertex pin = static_cast<Vertex>(rng() % pattern.order());
    const Vertex target = static_cast<Vertex>(rng() % host.order());
    const auto free_map = subgraph_embedding(pattern, host);
    CHECK(free_map.has_value() == embeds_bruteforce(pattern, host, -1, -1));
    const auto pinned = subgraph_embedding(pattern, host, pin, target);
    CHECK(pinned.has_value() == embeds_bruteforce(pattern, host, pin, target));
    for (const auto& m : {free_map, pinned}) {
      if (!m) continue;
      for (auto [u, v] : pattern.edges()) CHECK(host.adjacent((*m)[u], (*m)[v]));
      std::set<int> image(m->begin(), m->end());
      CHECK(image.size() == m->size());
    }
    if (pinned) CHECK((*pinned)[pin] == target);
  }
}

TEST_CASE("k-Ore catalog") {
  const auto four = enumerate_k_ore(4, 2);
  REQUIRE(four.size() == 3);
  CHECK(four[0].size() == 1);
  CHECK(four[1].size() == 1);  // the Moser spindle
  for (int k : {4, 5}) {
    const auto levels = enumerate_k_ore(k, 2);
    for (int l = 0; l <= 2; ++l) {
      for (const Graph& g : levels[l]) {
        CHECK(g.order() == k + l * (k - 1));
        CHECK(is_k_ore(g, k).has_value());
      }
    }
    // Random trees land in the catalog.
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const int l = trial % 3;
      const CanonicalForm f = canonical_form(realize(random_ore_tree(k, l, rng), k));
      bool found = false;
      for (const Graph& g : levels[l]) found = found || canonical_form(g) == f;
      CHECK(found);
    }
  }
  // K_5 with a neighbor partition of sizes 1+3 or 2+2.
  CHECK(enumerate_k_ore(5, 1)[1].size() == 2);
}

TEST_CASE("gadget catalog") {
  const GadgetCatalog c = build_gadget_catalog(5, 1);
  CHECK(c.keys_complete);
  REQUIRE_FALSE(c.patterns.empty());
  bool has_k4 = false;
  for (const GadgetPattern& p : c.patterns) {
    CHECK(p.keys != 0);
    CHECK(vset::subset(p.keys, p.graph.vertices()));
    has_k4 = has_k4 || (p.compositions == 0 && p.graph == Graph::complete(4));
    CHECK(p.graph.order() == 5 + p.compositions * 4 - 1);
  }
  CHECK(has_k4);
}

TEST_CASE("roles") {
  // K_k: every vertex lies in a K_{k-3}.
  for (int k : {5, 6, 7}) {
    const GadgetCatalog cat = build_gadget_catalog(k, 0);
    const RoleMap r = classify_degree_k1(Graph::complete(k), k, cat);
    for (Role role : r.roles) CHECK(role == Role::Structure);
    CHECK(r.complete);
  }
  // K_{5,6} at k = 6: the six degree-5 vertices see only degree-6 vertices and
  // lie in no triangle, so they are lone.
  std::vector<Edge> edges;
  for (int a = 0; a < 5; ++a) {
    for (int b = 5; b < 11; ++b) edges.emplace_back(a, b);
  }
  const Graph k56 = Graph::from_edges(11, edges);
  const GadgetCatalog cat6 = build_gadget_catalog(6, 1);
  const RoleMap lone = classify_degree_k1(k56, 6, cat6);
  for (Vertex v = 0; v < 11; ++v) CHECK(lone.roles[v] == (v < 5 ? Role::NotLow : Role::Lone));
  CHECK(lone.complete);
  // K_{5,5} at k = 6: each vertex is adjacent to degree-5 vertices of other clusters.
  edges.clear();
  for (int a = 0; a < 5; ++a) {
    for (int b = 5; b < 10; ++b) edges.emplace_back(a, b);
  }
  for (Role role : classify_degree_k1(Graph::from_edges(10, edges), 6, cat6).roles) CHECK(role == Role::Near);
  // A degree-5 vertex in a triangle at k = 6.
  const Graph tri = k56.with_edge(5, 6);
  CHECK_THROWS_AS(classify_degree_k1(tri, 5, cat6), ArgumentError);

  // Key vertices of an embedded gadget: the host itself contains its gadgets.
  const GadgetCatalog cat5 = build_gadget_catalog(5, 1);
  const auto five = enumerate_k_ore(5, 1);
  for (const Graph& h : five[1]) {
    const RoleMap r = classify_degree_k1(h, 5, cat5);
    const KeyVertexResult keys = key_vertices(h, 5);
    VertexSet expect = 0;
    for (const Cluster& c : clusters(h, 5)) {
      if (vset::size(c.members) >= 2 && vset::size(c.members & keys.keys) >= 2) expect |= c.members & keys.keys;
    }
    CHECK(vset::subset(expect, r.gadget_keys));
  }
}

TEST_CASE("role definitions on random graphs") {
  std::mt19937_64 rng(5);
  const GadgetCatalog cat = build_gadget_catalog(6, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(10, 0.5, rng);
    const RoleMap r = classify_degree_k1(g, 6, cat);
    const auto index = cluster_index(g, 6);
    for (Vertex x = 0; x < g.order(); ++x) {
      CHECK((r.roles[x] == Role::NotLow) == (g.degree(x) != 5));
      if (g.degree(x) != 5) continue;
      // Brute force triangle membership.
      bool tri = false;
      for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
          tri = tri || (g.adjacent(x, a) && g.adjacent(x, b) && g.adjacent(a, b));
        }
      }
      CHECK(vset::contains(r.in_small_clique, x) == tri);
      if (tri) CHECK(r.roles[x] == Role::Structure);
      if (r.roles[x] != Role::Structure) {
        bool other = false;
        vset::for_each(g.neighbors(x), [&](Vertex y) { other = other || (index[y] >= 0 && index[y] != index[x]); });
        CHECK((r.roles[x] == Role::Near) == other);
      }
      for (Vertex y = 0; y < g.order(); ++y) {
        if (index[y] == index[x]) CHECK(r.roles[y] == r.roles[x]);
      }
    }
  }
}

TEST_CASE("rule R1") {
  for (int k : {4, 5, 6}) {
    // A star with k+2 leaves.
    std::vector<Edge> edges;
    for (int i = 1; i <= k + 2; ++i) edges.emplace_back(0, i);
    const Graph star = Graph::from_edges(k + 3, edges);
    RoleMap none;
    none.roles.assign(static_cast<std::size_t>(k + 3), Role::NotLow);
    const ChargeLedger l = apply_rules(star, k, none);
    const PotentialParams p(k);
    CHECK(l.entries[0].w == charge(k, k + 2));
    CHECK(l.entries[0].w_prime == Rational(-2) + p.eps);
    const Rational sent = (Rational(k, k + 2) - 1) * (k - 1);
    for (int i = 1; i <= k + 2; ++i) CHECK(l.entries[i].w_prime == charge(k, 1) + sent);
    CHECK(l.conserved());
    CHECK(l.r1_residue_ok);
  }
  // No high-degree vertex and no structure vertex: nothing moves.
  const Graph c5 = Graph::cycle(5);
  RoleMap none;
  none.roles.assign(5, Role::NotLow);
  for (const ChargeEntry& e : apply_rules(c5, 6, none).entries) CHECK(e.w == e.w_prime);
}

TEST_CASE("rule R2") {
  const int k = 6;
  const Graph path = Graph::path(3);
  RoleMap r;
  r.roles = {Role::Near, Role::Structure, Role::Near};
  const ChargeLedger l = apply_rules(path, k, r);
  CHECK(l.entries[1].w_prime == l.entries[1].w + (k - 1));
  CHECK(l.entries[0].w_prime == l.entries[0].w - Rational(k - 1, 2));
  CHECK(l.entries[2].w_prime == l.entries[2].w - Rational(k - 1, 2));
  CHECK(l.conserved());
  // No near neighbor: the structure vertex keeps its charge.
  r.roles = {Role::Lone, Role::Structure, Role::NotLow};
  for (const ChargeEntry& e : apply_rules(path, k, r).entries) CHECK(e.w == e.w_prime);
  CHECK_THROWS_AS(apply_rules(path, k, RoleMap{}), ArgumentError);
}

TEST_CASE("conservation under arbitrary role labelings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 10), 0.5, rng);
    RoleMap r;
    for (Vertex v = 0; v < g.order(); ++v) r.roles.push_back(static_cast<Role>(rng() % 4));
    const int k = 4 + static_cast<int>(rng() % 3);
    const ChargeLedger l = apply_rules(g, k, r);
    CHECK(l.conserved());
    CHECK(l.r1_residue_ok);
    Rational sum = 0;
    for (const ChargeEntry& e : l.entries) sum += e.w_prime;
    CHECK(sum == l.total_w);
  }
}

TEST_CASE("charge report") {
  const GadgetCatalog cat4 = build_gadget_catalog(4, 1);
  const ChargeReport kk = charge_report(Graph::complete(4), 4, cat4);
  CHECK(kk.l + kk.m + kk.p + kk.q == 0);
  CHECK(kk.r == 4);
  CHECK(kk.total_identity);
  CHECK(kk.identity_applicable);
  CHECK(kk.identity_holds);
  CHECK(kk.e_lm_r == 0);

  std::vector<Edge> edges;
  for (int a = 0; a < 5; ++a) {
    for (int b = 5; b < 11; ++b) edges.emplace_back(a, b);
  }
  const ChargeReport bip = charge_report(Graph::from_edges(11, edges), 6, build_gadget_catalog(6, 1));
  CHECK(bip.l == 6);
  CHECK(bip.p == 5);
  CHECK(bip.identity_applicable);
  CHECK(bip.e_lm_r == 0);
  CHECK(bip.e_lm_r_identity == 0);

  std::mt19937_64 rng(13);
  const GadgetCatalog cat6 = build_gadget_catalog(6, 1);
  int applicable = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 7), 0.45, rng);
    const ChargeReport rep = charge_report(g, 6, cat6);
    CHECK(rep.total_identity);
    CHECK(rep.ledger.conserved());
    CHECK(rep.ledger.total_w == rho(g, 6, compute_T_bruteforce(g, 6)) + PotentialParams(6).delta * rep.t_value);
    CHECK(rep.l + rep.m + rep.p + rep.q + rep.r == g.order());
    // Direct count of edges between L+M and R.
    VertexSet lm = 0, rs = 0;
    for (const ChargeEntry& e : rep.ledger.entries) {
      if (e.cls == ChargeClass::L || e.cls == ChargeClass::M) lm |= vset::bit(e.v);
      if (e.cls == ChargeClass::R) rs |= vset::bit(e.v);
    }
    int direct = 0;
    for (auto [u, v] : g.edges()) direct += (vset::contains(lm, u) && vset::contains(rs, v)) || (vset::contains(lm, v) && vset::contains(rs, u));
    CHECK(rep.e_lm_r == direct);
    if (rep.identity_applicable) {
      ++applicable;
      CHECK(rep.identity_holds);
    } else {
      CHECK_FALSE(rep.note.empty());
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("ledger serialization") {
  const GadgetCatalog cat = build_gadget_catalog(4, 0);
  const ChargeReport rep = charge_report(Graph::wheel(5), 4, cat);
  const nlohmann::json j = ledger_to_json(rep.ledger);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["conserved"] == true);
  const std::string csv = ledger_to_csv(rep.ledger);
  CHECK(csv.rfind("vertex,degree,role,class,w,w_prime\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  const nlohmann::json full = report_to_json(rep);
  CHECK(full.contains("identity_applicable"));
  CHECK(full["T"] == rep.t_value);
}
