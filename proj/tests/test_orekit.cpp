#include <doctest.h>

#include <set>
#include <unordered_set>

#include "orelab/canonical.hpp"
#include "orelab/coloring.hpp"
#include "orelab/errors.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "support/oracles.hpp"

using namespace orelab;

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

Graph moser() {
  return ore_compose(Graph::complete(4), {0, 1}, Graph::complete(4), 0, vset::bit(1), vset::bit(2) | vset::bit(3));
}

// Every Ore composition of a with b, over all edges, split vertices and
// neighbor partitions, up to isomorphism.
FormSet all_compositions(const Graph& a, const Graph& b) {
  FormSet out;
  for (const Edge& e : a.edges()) {
    for (const Edge& flipped : {e, Edge{e.second, e.first}}) {
      for (Vertex z = 0; z < b.order(); ++z) {
        const VertexSet nz = b.neighbors(z);
        for (VertexSet px = (nz - 1) & nz; px != 0; px = (px - 1) & nz) {
          out.insert(canonical_form(ore_compose(a, flipped, b, z, px, nz & ~px)));
        }
      }
    }
  }
  return out;
}

// Every pair-split of g (non-adjacent a, b and a bipartition of the components
// of g - {a, b}) whose two sides satisfy `is_ore`.
template <typename Pred>
std::set<std::tuple<Vertex, Vertex, VertexSet>> brute_decompositions(const Graph& g, Pred is_ore) {
  std::set<std::tuple<Vertex, Vertex, VertexSet>> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (g.adjacent(a, b)) continue;
      const VertexSet rest = g.vertices() & ~vset::bit(a) & ~vset::bit(b);
      const auto comps = components(g, rest);
      for (std::uint32_t mask = 1; mask + 1 < (1U << comps.size()); ++mask) {
        VertexSet h1 = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
          if ((mask >> i) & 1U) h1 |= comps[i];
        }
        const VertexSet h2 = rest & ~h1;
        const Relabeled r1 = g.induced(h1 | vset::bit(a) | vset::bit(b));
        const Graph g1 = r1.graph.with_edge(r1.old_to_new[a], r1.old_to_new[b]);
        const Relabeled r2 = g.induced(h2 | vset::bit(a) | vset::bit(b));
        const Graph g2 = identify(r2.graph, r2.old_to_new[a], r2.old_to_new[b]).graph;
        if (is_ore(g1) && is_ore(g2)) out.insert({a, b, h1});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("composition of two copies of K_4") {
  const Graph g = moser();
  CHECK(g.order() == 7);
  CHECK(g.size() == 11);
  CHECK(compute_T(g, 4).value == 4);
  CHECK(is_k_critical(g, 4));
  // Every choice gives the same graph up to isomorphism.
  CHECK(all_compositions(Graph::complete(4), Graph::complete(4)).size() == 1);
  for (const CanonicalForm& f : all_compositions(Graph::complete(4), Graph::complete(4))) {
    CHECK(f.graph().size() == 11);
  }
}

TEST_CASE("ore_compose argument errors") {
  const Graph k4 = Graph::complete(4);
  const VertexSet all = k4.neighbors(0);
  CHECK_THROWS_AS(ore_compose(k4.without_edge(0, 1), {0, 1}, k4, 0, vset::bit(1), all & ~vset::bit(1)), ArgumentError);
  CHECK_THROWS_AS(ore_compose(k4, {0, 1}, k4, 0, 0, all), ArgumentError);
  CHECK_THROWS_AS(ore_compose(k4, {0, 1}, k4, 0, vset::bit(1), vset::bit(2)), ArgumentError);
  CHECK_THROWS_AS(ore_compose(k4, {0, 1}, k4, 0, vset::bit(1) | vset::bit(2), vset::bit(2) | vset::bit(3)),
                  ArgumentError);
  CHECK_THROWS_AS(OreTree::compose({}, {}, {0, 1}, 0, 0, vset::bit(1)), ArgumentError);
}

TEST_CASE("composition identities on random inputs") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 4 + trial % 3;
    const Graph g1 = realize(random_ore_tree(k, trial % 3, rng), k);
    const Graph g2 = realize(random_ore_tree(k, (trial / 3) % 2, rng), k);
    const auto edges = g1.edges();
    const Edge e = edges[uniform_below(rng, edges.size())];
    const Vertex z = static_cast<Vertex>(uniform_below(rng, g2.order()));
    const VertexSet nz = g2.neighbors(z);
    const VertexSet px = vset::bit(vset::first(nz));
    const Composition c = ore_compose_detailed(g1, e, g2, z, px, nz & ~px);
    CHECK(c.graph.order() == g1.order() + g2.order() - 1);
    CHECK(c.graph.size() == g1.size() + g2.size() - 1);
    CHECK_FALSE(c.graph.adjacent(e.first, e.second));
    CHECK(c.split_side_map[z] == -1);
    // T superadditivity across the composition.
    const int t = compute_T(c.graph, k).value;
    const int t1 = compute_T(g1, k).value;
    const int t2 = compute_T(g2, k).value;
    CHECK(t >= t1 + t2 - 2);
    if (g1.order() == k || g2.order() == k) CHECK(t >= t1 + t2 - 1);
    if (g1.order() == k && g2.order() == k) CHECK(t == 4);
  }
}

TEST_CASE("realize sizes") {
  CHECK(realize(OreTree::leaf(), 4) == Graph::complete(4));
  const Graph seven = realize(OreTree::compose({}, {}, {0, 1}, 0, vset::bit(1), vset::bit(2) | vset::bit(3)), 4);
  CHECK(rho_ky(seven, 4) == 4);
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph ten = realize(random_ore_tree(4, 2, rng), 4);
    CHECK(ten.order() == 10);
    CHECK(ten.size() == 16);
  }
  CHECK_THROWS_AS(random_ore_tree(4, 21, rng), SizeError);
}

TEST_CASE("random trees: counts, potential, criticality") {
  Rng rng(13);
  for (int k : {4, 5}) {
    for (int l = 0; l <= 3; ++l) {
      for (int trial = 0; trial < 6; ++trial) {
        const OreTree t = random_ore_tree(k, l, rng);
        CHECK(t.compositions() == l);
        const Graph g = realize(t, k);
        CHECK(g.order() == k + l * (k - 1));
        CHECK(g.size() == (l + 1) * k * (k - 1) / 2 - l);
        CHECK(ore_counts_match(g.order(), g.size(), k));
        CHECK(rho_ky(g, k) == k * (k - 3));
        if (g.order() <= 13) CHECK(is_k_critical(g, k));
      }
    }
  }
}

TEST_CASE("random tree generation is reproducible") {
  Rng a(77), b(77);
  for (int i = 0; i < 5; ++i) {
    CHECK(ore_tree_to_json(random_ore_tree(5, 3, a), 5) == ore_tree_to_json(random_ore_tree(5, 3, b), 5));
  }
}

TEST_CASE("sequence flattening") {
  Rng rng(17);
  OreRecognizer rec(4);
  for (int trial = 0; trial < 10; ++trial) {
    const OreTree t = random_ore_tree(4, 3, rng);
    const std::vector<Graph> seq = ore_sequence(t, 4);
    CHECK(seq.front() == Graph::complete(4));
    CHECK(seq.back() == realize(t, 4));
    for (std::size_t i = 1; i < seq.size(); ++i) {
      CHECK(seq[i].order() > seq[i - 1].order());
      CHECK((seq[i].order() - seq[i - 1].order()) % 3 == 0);
      CHECK(rec.recognize(seq[i]).has_value());
    }
  }
}

TEST_CASE("json round trip and validation") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const OreTree t = random_ore_tree(5, trial % 4, rng);
    const nlohmann::json j = ore_tree_to_json(t, 5);
    const auto [back, k] = ore_tree_from_json(nlohmann::json::parse(j.dump()));
    CHECK(k == 5);
    CHECK(realize(back, 5) == realize(t, 5));
    CHECK(ore_tree_to_json(back, 5) == j);
  }
  CHECK_THROWS_AS(ore_tree_from_json(nlohmann::json::parse(R"({"k": 4})")), ParseError);
  CHECK_THROWS_AS(ore_tree_from_json(nlohmann::json::parse(R"({"k": 4, "tree": {"type": "twig"}})")), ParseError);
  const auto bad = nlohmann::json::parse(R"({"k": 4, "tree": {"type": "node", "edge_side": {"type": "leaf"},
      "split_side": {"type": "leaf"}, "replaced_edge": [0, 0], "split_vertex": 0, "part_x": [1], "part_y": [2, 3]}})");
  CHECK_THROWS_AS(ore_tree_from_json(bad), ArgumentError);
}

TEST_CASE("recognition basics") {
  const auto leaf = is_k_ore(Graph::complete(4), 4);
  REQUIRE(leaf);
  CHECK(leaf->is_leaf());
  CHECK_FALSE(is_k_ore(Graph::wheel(5), 4));
  CHECK_FALSE(is_k_ore(Graph::wheel(7), 4));
  CHECK_FALSE(is_k_ore(Graph::complete(5), 4));
  CHECK_FALSE(is_k_ore(Graph::complete(4).disjoint_union(Graph::complete(4)), 4));
  CHECK_THROWS_AS(is_k_ore(Graph(26), 4), SizeError);
  CHECK(is_k_ore(Graph::cycle(5), 3));  // odd cycles are the 3-Ore graphs
  CHECK_FALSE(is_k_ore(Graph::cycle(6), 3));
  const auto m = is_k_ore(moser(), 4);
  REQUIRE(m);
  CHECK(isomorphic(realize(*m, 4), moser()));
}

TEST_CASE("recognition round trip on generated trees with relabeling") {
  std::mt19937_64 perm_rng(23);
  Rng rng(29);
  for (int k : {4, 5, 6}) {
    OreRecognizer rec(k);
    for (int l = 0; l <= 3; ++l) {
      for (int trial = 0; trial < 4; ++trial) {
        const Graph g = realize(random_ore_tree(k, l, rng), k);
        if (g.order() > 25) continue;
        const Graph h = g.permuted(oracle::random_permutation(g.order(), perm_rng));
        const auto w = rec.recognize(h);
        REQUIRE(w);
        CHECK(w->compositions() == l);
        CHECK(isomorphic(realize(*w, k), h));
      }
    }
  }
}

TEST_CASE("recognition agrees with exhaustive composition catalogs at k = 4") {
  const FormSet seven = all_compositions(Graph::complete(4), Graph::complete(4));
  const Graph m = moser();
  FormSet ten = all_compositions(Graph::complete(4), m);
  for (const auto& f : all_compositions(m, Graph::complete(4))) ten.insert(f);
  CHECK(ten.size() > 1);
  OreRecognizer rec(4);
  for (const CanonicalForm& f : ten) {
    const Graph g = f.graph();
    CHECK(g.size() == 16);
    CHECK(rec.recognize(g).has_value());
  }
  // Random graphs with the right counts are recognized iff they are in the catalog.
  std::mt19937_64 rng(31);
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    for (auto [n, m_edges, catalog] : {std::tuple{7, 11, &seven}, std::tuple{10, 16, static_cast<const FormSet*>(&ten)}}) {
      std::vector<Edge> pairs;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
      }
      std::shuffle(pairs.begin(), pairs.end(), rng);
      pairs.resize(static_cast<std::size_t>(m_edges));
      const Graph g = Graph::from_edges(n, pairs);
      const bool in_catalog = catalog->count(canonical_form(g)) > 0;
      CHECK(rec.recognize(g).has_value() == in_catalog);
      hits += in_catalog;
    }
  }
  // Permuted catalog members are recognized as well.
  for (const CanonicalForm& f : ten) {
    const Graph g = f.graph().permuted(oracle::random_permutation(10, rng));
    CHECK(rec.recognize(g).has_value());
  }
  MESSAGE("random catalog hits: " << hits);
}

TEST_CASE("decompositions match an independent pair-split scan") {
  const Graph k4 = Graph::complete(4);
  const Graph m = moser();
  auto small_ore = [&](const Graph& g) { return isomorphic(g, k4) || isomorphic(g, m); };
  FormSet ten = all_compositions(k4, m);
  for (const auto& f : all_compositions(m, k4)) ten.insert(f);
  std::vector<Graph> cases{m};
  for (const auto& f : ten) cases.push_back(f.graph());
  for (const Graph& g : cases) {
    OreRecognizer rec(4);
    std::set<std::tuple<Vertex, Vertex, VertexSet>> found;
    for (const OreDecomposition& d : rec.decompositions(g)) {
      found.insert({d.a, d.b, d.edge_side});
      CHECK((d.edge_side | d.split_side | vset::bit(d.a) | vset::bit(d.b)) == g.vertices());
    }
    CHECK_FALSE(rec.truncated());
    CHECK(found == brute_decompositions(g, small_ore));
    CHECK_FALSE(found.empty());
  }
}

TEST_CASE("key vertices") {
  CHECK(key_vertices(OreTree::leaf(), 5).keys == vset::range(5));
  // moser(): edge side {0,1,2,3} with overlap {0,1}; split side {4,5,6}.
  const KeyVertexResult m = key_vertices(moser(), 4);
  CHECK(m.complete);
  // Two decompositions, {0,1} with edge side {2,3} and {1,4} with edge side
  // {5,6}; each excludes the overlap pair and its split side, so no vertex survives.
  CHECK(m.decompositions == 2);
  CHECK((m.keys & (vset::bit(0) | vset::bit(1) | vset::bit(4) | vset::bit(5) | vset::bit(6))) == 0);
  CHECK(m.keys == 0);
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const OreTree t = random_ore_tree(4, 2, rng);
    const Graph g = realize(t, 4);
    OreRecognizer rec(4);
    VertexSet expect = g.vertices();
    for (const OreDecomposition& d : rec.decompositions(g)) expect &= d.edge_side;
    const KeyVertexResult r = key_vertices(t, 4);
    CHECK(r.keys == expect);
    CHECK(r.complete);
  }
  CHECK_THROWS_AS(key_vertices(Graph::wheel(5), 4), ArgumentError);
}

TEST_CASE("truncated key-vertex search is flagged") {
  RecognitionOptions tight;
  tight.node_budget = 2;
  Rng rng(41);
  const KeyVertexResult r = key_vertices(realize(random_ore_tree(4, 3, rng), 4), 4, tight);
  CHECK_FALSE(r.complete);
  CHECK_THROWS_AS(is_k_ore(realize(random_ore_tree(4, 3, rng), 4), 4, tight), SizeError);
}

TEST_CASE("gadgets") {
  const OreTree leaf = OreTree::leaf();
  for (Vertex x = 0; x < 5; ++x) {
    const Gadget g = make_gadget(leaf, 5, x);
    CHECK(g.realized.graph == Graph::complete(4));
    CHECK(g.key_vertices == vset::range(4));
  }
  const OreTree m = OreTree::compose({}, {}, {0, 1}, 0, vset::bit(1), vset::bit(2) | vset::bit(3));
  REQUIRE(realize(m, 4) == moser());
  const Gadget g2 = make_gadget(m, 4, 2);
  CHECK(g2.realized.graph.order() == 6);
  CHECK(g2.realized.graph.size() == 8);
  CHECK(g2.key_vertices == 0);
  CHECK(make_gadget(m, 4, 5).realized.graph.order() == 6);
  CHECK_THROWS_AS(make_gadget(m, 4, 0), ArgumentError);  // overlap vertex, cluster of size 1
  CHECK_THROWS_AS(make_gadget(m, 4, 1), ArgumentError);  // degree 4
  CHECK_THROWS_AS(make_gadget(m, 4, 4), ArgumentError);  // cluster of size 1
}
