#include <doctest.h>

#include "orelab/coloring.hpp"
#include "orelab/errors.hpp"
#include "orelab/ore.hpp"
#include "support/oracles.hpp"

using namespace orelab;

namespace {

Graph moser() { return ore_compose(Graph::complete(4), {0, 1}, Graph::complete(4), 0, vset::bit(1), vset::bit(2) | vset::bit(3)); }

}  // namespace

TEST_CASE("colorable returns verified witnesses") {
  CHECK_FALSE(colorable(Graph::cycle(5), 2));
  const auto c5 = colorable(Graph::cycle(5), 3);
  REQUIRE(c5);
  CHECK(is_proper(Graph::cycle(5), *c5));

  const Graph pet = Graph::petersen();
  CHECK(colorable(pet, 3).has_value() == oracle::colorable_bruteforce(pet, 3));
  CHECK(colorable(pet, 2).has_value() == oracle::colorable_bruteforce(pet, 2));
  CHECK(colorable(pet, 3));
  CHECK_FALSE(colorable(pet, 2));
  CHECK(colorable(Graph(), 0));
  CHECK_FALSE(colorable(Graph(1), 0));
}

TEST_CASE("chromatic numbers of small families") {
  CHECK(chromatic_number(Graph::complete(6)) == 6);
  CHECK(chromatic_number(Graph::cycle(5)) == 3);
  CHECK(chromatic_number(Graph()) == 0);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK(chromatic_number(moser()) == oracle::chromatic_bruteforce(moser()));
  CHECK(chromatic_number(moser()) == 4);
  CHECK(chromatic_number(Graph::wheel(5)) == 4);
  CHECK(chromatic_number(Graph::complete(3).disjoint_union(Graph::cycle(7))) == 3);
}

TEST_CASE("chromatic number agrees with full enumeration on every labeled graph, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = oracle::graph_from_code(n, code);
      const int chi = chromatic_number(g);
      REQUIRE(chi == oracle::chromatic_bruteforce(g));
      if (chi > 0) {
        const auto w = colorable(g, chi);
        REQUIRE(w);
        CHECK(oracle::colorable_bruteforce(g, chi));
        for (auto [u, v] : g.edges()) CHECK((*w)[u] != (*w)[v]);
      }
    }
  }
}

TEST_CASE("random graphs: witnesses are proper and chi matches the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const int chi = chromatic_number(g);
    CHECK(chi == oracle::chromatic_bruteforce(g));
    const auto w = colorable(g, chi);
    REQUIRE(w);
    for (int c : *w) CHECK((c >= 0 && c < chi));
    CHECK(is_proper(g, *w));
  }
}

TEST_CASE("criticality") {
  CHECK(is_k_critical(Graph::complete(4), 4));
  CHECK_FALSE(is_k_critical(Graph::complete(4).without_edge(0, 1), 4));
  CHECK(is_k_critical(moser(), 4));
  CHECK(is_k_critical(Graph::cycle(5), 3));
  CHECK_FALSE(is_k_critical(Graph::cycle(6), 3));
  CHECK(is_k_critical(Graph::wheel(5), 4));
  CHECK_FALSE(is_k_critical(Graph::complete(4).disjoint_union(Graph(1)), 4));
  CHECK_FALSE(is_k_critical(Graph::complete(4), 3));
}

TEST_CASE("edge criticality matches vertex and edge deletion by brute force") {
  std::mt19937_64 rng(23);
  int critical_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(n, 0.6, rng);
    const int k = oracle::chromatic_bruteforce(g);
    if (k < 3) continue;
    bool brute = true;
    for (auto [u, v] : g.edges()) brute = brute && oracle::colorable_bruteforce(g.without_edge(u, v), k - 1);
    for (Vertex v = 0; v < n; ++v) brute = brute && oracle::colorable_bruteforce(g.without_vertex(v).graph, k - 1);
    CHECK(is_k_critical(g, k) == brute);
    critical_seen += brute;
  }
  CHECK(critical_seen > 0);
}

TEST_CASE("f-choosability brute force") {
  const std::vector<int> one{1};
  CHECK(f_choosable_bruteforce(Graph::complete(1), one, 1));
  const std::vector<int> ones{1, 1};
  CHECK_FALSE(f_choosable_bruteforce(Graph::complete(2), ones, 2));
  const std::vector<int> twos(4, 2);
  CHECK(f_choosable_bruteforce(Graph::cycle(4), twos, 3));
  // K_{2,4} is not 2-choosable: lists {01},{23} on one side force a conflict.
  const Graph k24 = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK_FALSE(f_choosable_bruteforce(k24, std::vector<int>(6, 2), 4));
  CHECK(f_choosable_bruteforce(k24, std::vector<int>(6, 3), 5));
  // A triangle needs three colors from any lists of size three.
  CHECK(f_choosable_bruteforce(Graph::complete(3), std::vector<int>(3, 3), 5));
  CHECK(f_choosable_bruteforce(Graph::complete(3), std::vector<int>{3, 3, 2}, 4));
  CHECK_FALSE(f_choosable_bruteforce(Graph::complete(3), std::vector<int>{1, 2, 2}, 3));

  CHECK_THROWS_AS(f_choosable_bruteforce(Graph(9), std::vector<int>(9, 1), 2), SizeError);
  CHECK_THROWS_AS(f_choosable_bruteforce(Graph(2), ones, 7), SizeError);
  CHECK_THROWS_AS(f_choosable_bruteforce(Graph(2), std::vector<int>{1, 4}, 3), ArgumentError);
}

TEST_CASE("edge-count lemma holds on small critical graphs") {
  const auto k4 = edge_count_lemma_check(Graph::complete(4), 4);
  CHECK(k4.violations.empty());
  CHECK(k4.independent_sets_checked == 4);
  const auto m = edge_count_lemma_check(moser(), 4);
  CHECK(m.violations.empty());
  CHECK(m.independent_sets_checked > 0);
  CHECK(edge_count_lemma_check(Graph::wheel(5), 4).violations.empty());
  CHECK_THROWS_AS(edge_count_lemma_check(Graph::cycle(6), 3), ArgumentError);
}

TEST_CASE("edge-count worst case matches enumeration over B0 and B1") {
  // Exhaust every (A, B0, B1) on small 4-critical graphs and compare.
  for (const Graph& g : {moser(), Graph::wheel(5), Graph::wheel(7)}) {
    const int k = 4;
    VertexSet low = 0, d0 = 0, d1 = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == k - 1) low |= vset::bit(v);
      if (g.degree(v) == k) d0 |= vset::bit(v);
      if (g.degree(v) == k + 1) d1 |= vset::bit(v);
    }
    int brute_violations = 0;
    for (VertexSet a = low; a != 0; a = (a - 1) & low) {
      if (!g.is_independent(a)) continue;
      for (VertexSet b0 = d0;; b0 = (b0 - 1) & d0) {
        for (VertexSet b1 = d1;; b1 = (b1 - 1) & d1) {
          int e = 0;
          vset::for_each(a, [&](Vertex v) { e += vset::size(g.neighbors(v) & (b0 | b1)); });
          if (e >= vset::size(a) + 2 * vset::size(b0) + 3 * vset::size(b1)) ++brute_violations;
          if (b1 == 0) break;
        }
        if (b0 == 0) break;
      }
    }
    CHECK(brute_violations == 0);
    CHECK(edge_count_lemma_check(g, k).violations.empty());
  }
}
