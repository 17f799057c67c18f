#include <doctest.h>

#include <set>
#include <string>

#include "orelab/coloring.hpp"
#include "orelab/errors.hpp"
#include "orelab/graph6.hpp"
#include "orelab/harness.hpp"
#include "orelab/ore.hpp"
#include "support/oracles.hpp"

using namespace orelab;

namespace {

Graph moser() {
  return ore_compose(Graph::complete(4), {0, 1}, Graph::complete(4), 0, vset::bit(1), vset::bit(2) | vset::bit(3));
}

/// Isomorphism classes of all labeled graphs on n vertices.
std::set<std::uint64_t> labeled_classes(int n) {
  std::set<std::uint64_t> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    out.insert(oracle::min_code_over_permutations(oracle::graph_from_code(n, code)));
  }
  return out;
}

/// k-critical graphs on n vertices by exhaustive labeled search.
std::set<std::uint64_t> labeled_critical(int n, int k) {
  std::set<std::uint64_t> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const Graph g = oracle::graph_from_code(n, code);
    if (g.min_degree() < k - 1) continue;
    if (oracle::colorable_bruteforce(g, k - 1)) continue;
    bool critical = true;
    for (auto [u, v] : g.edges()) {
      if (!oracle::colorable_bruteforce(g.without_edge(u, v), k - 1)) {
        critical = false;
        break;
      }
    }
    if (critical) out.insert(oracle::min_code_over_permutations(g));
  }
  return out;
}

std::set<std::uint64_t> codes(const std::vector<Graph>& gs) {
  std::set<std::uint64_t> out;
  for (const Graph& g : gs) out.insert(oracle::min_code_over_permutations(g));
  return out;
}

}  // namespace

TEST_CASE("enumerate_graphs matches labeled classification") {
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  for (int n = 0; n <= 6; ++n) {
    const std::vector<Graph> level = enumerate_graph_level(n);
    const std::set<std::uint64_t> expected = labeled_classes(n);
    CHECK(level.size() == expected.size());
    CHECK(codes(level) == expected);
  }
}

TEST_CASE("enumeration: serial and parallel agree, no duplicates") {
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> par = enumerate_graph_level(n, Execution::Parallel);
    const std::vector<Graph> ser = enumerate_graph_level(n, Execution::Serial);
    CHECK(par == ser);
    std::set<std::string> forms;
    for (const Graph& g : par) forms.insert(graph6_encode(canonical_form(g).graph()));
    CHECK(forms.size() == par.size());
  }
  CHECK(enumerate_graph_level(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_graphs(10), SizeError);
  CHECK_THROWS_AS(enumerate_graphs(-1), ArgumentError);
}

TEST_CASE("census_critical against exhaustive labeled search") {
  const Corpus c4 = census_critical(4, 4);
  REQUIRE(c4.size() == 1);
  CHECK(isomorphic(c4.entries()[0].graph, Graph::complete(4)));

  for (int k : {4, 5}) {
    const Corpus census = census_critical(8, k);
    for (int n = k; n <= 8; ++n) {
      std::vector<Graph> at_n;
      for (const CorpusEntry& e : census.entries()) {
        if (e.graph.order() == n) at_n.push_back(e.graph);
      }
      if (n <= 6) {
        CHECK_MESSAGE(codes(at_n) == labeled_critical(n, k), "k=" << k << " n=" << n);
      } else {
        // Larger orders: filter the full enumeration instead of labeled graphs.
        std::vector<Graph> filtered;
        for (const Graph& g : enumerate_graph_level(n)) {
          if (g.min_degree() >= k - 1 && !oracle::colorable_bruteforce(g, k - 1) && is_k_critical(g, k)) {
            filtered.push_back(g);
          }
        }
        CHECK_MESSAGE(codes(at_n) == codes(filtered), "k=" << k << " n=" << n);
      }
    }
  }
  const Corpus c = census_critical(7, 4);
  int five = 0;
  for (const CorpusEntry& e : c.entries()) five += e.graph.order() == 5;
  CHECK(five == 0);
  CHECK(c.contains(moser()));
  CHECK(c.contains(Graph::wheel(5)));
  for (const CorpusEntry& e : c.entries()) CHECK(is_k_critical(e.graph, 4));

  CHECK(census_critical(7, 4, Execution::Serial).graphs() == c.graphs());
  CHECK_THROWS_AS(census_critical(10, 4), SizeError);
  CHECK_THROWS_AS(census_critical(8, 2), ArgumentError);
}

TEST_CASE("corpus deduplicates by canonical form") {
  Corpus c;
  CHECK(c.add(Graph::cycle(5), "a"));
  std::mt19937_64 rng(3);
  CHECK_FALSE(c.add(Graph::cycle(5).permuted(oracle::random_permutation(5, rng)), "b"));
  CHECK(c.size() == 1);
  CHECK(c.entries()[0].provenance == "a");
  const Corpus ore = ore_tree_corpus(4, 20, 2, 9);
  for (const CorpusEntry& e : ore.entries()) CHECK(is_k_ore(e.graph, 4).has_value());
  CHECK(ore.contains(moser()));
}

TEST_CASE("partition chromatic number") {
  CHECK(chromatic_number_partitions(Graph(0)) == 0);
  CHECK(chromatic_number_partitions(Graph(3)) == 1);
  CHECK(chromatic_number_partitions(Graph::cycle(5)) == 3);
  CHECK(chromatic_number_partitions(Graph::petersen()) == 3);
  CHECK(chromatic_number_partitions(Graph::complete(6)) == 6);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    CHECK(chromatic_number_partitions(g) == oracle::chromatic_bruteforce(g));
  }
}

TEST_CASE("superadditivity steps") {
  const OreTree t = OreTree::compose(OreTree::leaf(), OreTree::leaf(), {0, 1}, 0, vset::bit(1),
                                     vset::bit(2) | vset::bit(3));
  const auto steps = superadditivity_steps(t, 4);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].t_edge_side == 2);
  CHECK(steps[0].t_split_side == 2);
  CHECK(steps[0].t_result == 4);
  CHECK(steps[0].holds);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const OreTree tree = random_ore_tree(5, 3, rng);
    const auto s = superadditivity_steps(tree, 5);
    CHECK(s.size() == 3);
    for (const auto& step : s) CHECK(step.holds);
  }
}

TEST_CASE("suites on the census") {
  const Corpus census = census_critical(7, 4);
  SuiteParams p;
  p.k = 4;
  for (const std::string& id : suite_ids()) {
    const SuiteResult r = run_suite(id, census, p);
    CHECK_MESSAGE(r.ok(), id);
    CHECK(r.rows.size() == census.size());
    CHECK(r.passed + r.failed + r.skipped_cap + r.not_applicable == static_cast<int>(r.rows.size()));
    for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i - 1].graph6 <= r.rows[i].graph6);
  }
  const SuiteResult ky = run_suite("ky-bound", census, p);
  CHECK(ky.passed == static_cast<int>(census.size()));
  const SuiteResult eq = run_suite("ky-equality-ore", census, p);
  CHECK(eq.passed == static_cast<int>(census.size()));
  CHECK_THROWS_AS(run_suite("no-such-suite", census, p), ArgumentError);
}

TEST_CASE("charge identity on random graphs") {
  Corpus c(CorpusSource::Random);
  for (const Graph& g : random_graphs(100, 4, 10, 21)) c.add(g, "random");
  SuiteParams p;
  p.k = 4;
  const SuiteResult r = run_suite("charge-identity", c, p);
  CHECK(r.failed == 0);
  CHECK(r.skipped_cap == 0);
  CHECK(r.passed == static_cast<int>(c.size()));
}

TEST_CASE("suite outcomes are deterministic and caps never pass") {
  Corpus c = census_critical(7, 4);
  for (const Graph& g : random_graphs(30, 5, 9, 4)) c.add(g, "random");
  SuiteParams p;
  p.k = 4;
  p.seed = 77;
  for (const char* id : {"extension-potential", "packing-oracle", "charge-identity"}) {
    p.exec = Execution::Parallel;
    const auto a = suite_to_json(run_suite(id, c, p));
    p.exec = Execution::Serial;
    const auto b = suite_to_json(run_suite(id, c, p));
    CHECK(a == b);
    CHECK(a["config"]["seed"] == 77);
  }
  p.bruteforce_max_order = 3;
  const SuiteResult capped = run_suite("packing-oracle", c, p);
  CHECK(capped.skipped_cap > 0);
  CHECK_FALSE(capped.ok());
  for (const SuiteRow& row : capped.rows) {
    if (row.status == RowStatus::SkippedCap) CHECK(row.values.contains("reason"));
  }
}

TEST_CASE("report serialization") {
  const Corpus census = census_critical(6, 4);
  SuiteParams p;
  const SuiteResult r = run_suite("mic-ineq", census, p);
  const std::string csv = suite_to_csv(r);
  CHECK(csv.rfind("# config ", 0) == 0);
  CHECK(csv.find("suite,graph6,claim,status,values\n") != std::string::npos);
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 2 + static_cast<int>(r.rows.size()));
  const auto j = suite_to_json(r);
  CHECK(j["summary"]["pass"] == r.passed);
  CHECK(j["rows"].size() == r.rows.size());
  CHECK(j["rows"][0]["values"].contains("mic"));
}

TEST_CASE("thread environment") {
  CHECK(apply_thread_env() >= 0);
  set_thread_count(0);
}
