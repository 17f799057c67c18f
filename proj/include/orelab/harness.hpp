#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "orelab/canonical.hpp"
#include "orelab/graph.hpp"
#include "orelab/ore.hpp"

namespace orelab {

/// Serial loops are kept as the reference for the OpenMP versions.
enum class Execution { Serial, Parallel };

/// 0 restores the OpenMP default.
void set_thread_count(int threads);
/// Applies ORELAB_THREADS when set; returns the value used (0 if unset).
int apply_thread_env();

enum class CorpusSource { Enumeration, External, OreTrees, Random, Mixed };
std::string to_string(CorpusSource s);

struct CorpusEntry {
  Graph graph;
  std::string graph6;
  std::string provenance;
};

/// Graphs deduplicated by canonical form; the first copy added wins.
class Corpus {
 public:
  explicit Corpus(CorpusSource source = CorpusSource::Mixed) : source_(source) {}
  bool add(const Graph& g, const std::string& provenance);
  void merge(const Corpus& other);
  CorpusSource source() const { return source_; }
  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const Graph& g) const;
  std::vector<Graph> graphs() const;

 private:
  CorpusSource source_;
  std::vector<CorpusEntry> entries_;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen_;
};

inline constexpr int kMaxEnumerationOrder = 9;

/// All graphs on n vertices up to isomorphism (n <= 9), grown one vertex at a
/// time and deduplicated on canonical forms. Entries are in canonical order.
Corpus enumerate_graphs(int n, Execution exec = Execution::Parallel);
/// Raw canonical representatives, same order as enumerate_graphs.
std::vector<Graph> enumerate_graph_level(int n, Execution exec = Execution::Parallel);

/// All k-critical graphs on at most n_max vertices (n_max <= 9, 3 <= k <= 6).
/// Every G - v of a k-critical G is (k-1)-colorable with minimum degree at
/// least k-2, so only those graphs are extended.
Corpus census_critical(int n_max, int k, Execution exec = Execution::Parallel);

Corpus corpus_from_graph6_file(const std::string& path);
/// `count` seeded random Ore trees per number of compositions in 1..max_compositions,
/// plus K_k.
Corpus ore_tree_corpus(int k, int count, int max_compositions, std::uint64_t seed);
/// G(n, p) graphs with n drawn uniformly from [n_min, n_max] and p = 1/2.
std::vector<Graph> random_graphs(int count, int n_min, int n_max, std::uint64_t seed);

/// Minimum number of blocks over all partitions of V into independent sets.
int chromatic_number_partitions(const Graph& g);

enum class RowStatus { Pass, Fail, SkippedCap, NotApplicable };
std::string to_string(RowStatus s);

struct SuiteRow {
  std::string graph6;
  std::string claim;
  nlohmann::ordered_json values;
  RowStatus status = RowStatus::NotApplicable;
};

struct SuiteParams {
  int k = 4;
  std::uint64_t seed = 1;
  long recognition_budget = 2'000'000;
  int recognition_max_order = 25;
  int bruteforce_max_order = 12;  ///< packing oracle
  int partition_max_order = 10;   ///< coloring oracle
  long lemma_subset_cap = 1L << 20;
  long clique_cap = 1'000'000;
  int catalog_compositions = 2;
  int extension_samples = 3;  ///< random R per size in {3,4,5}
  Execution exec = Execution::Parallel;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteRow> rows;  ///< sorted by graph6
  int passed = 0, failed = 0, skipped_cap = 0, not_applicable = 0;
  nlohmann::ordered_json config;
  bool ok() const { return failed == 0 && skipped_cap == 0; }
};

const std::vector<std::string>& suite_ids();
/// Throws ArgumentError for an unknown id.
SuiteResult run_suite(const std::string& suite_id, const Corpus& corpus, const SuiteParams& params);

nlohmann::ordered_json suite_to_json(const SuiteResult& r);
/// suite,graph6,claim,status,values with values as compact JSON.
std::string suite_to_csv(const SuiteResult& r);

struct SuperadditivityStep {
  int t_edge_side = 0;
  int t_split_side = 0;
  int t_result = 0;
  bool edge_side_complete = false;
  bool split_side_complete = false;
  bool holds = false;
};

/// One step per composition node of the tree, children before parents.
std::vector<SuperadditivityStep> superadditivity_steps(const OreTree& tree, int k);

}  // namespace orelab
