#include "orelab/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "orelab/coloring.hpp"
#include "orelab/discharging.hpp"
#include "orelab/errors.hpp"
#include "orelab/graph6.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/rational.hpp"
#include "orelab/rng.hpp"
#include "orelab/structure.hpp"

namespace orelab {

void set_thread_count(int threads) {
  if (threads > 0) {
    omp_set_num_threads(threads);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
}

int apply_thread_env() {
  const char* env = std::getenv("ORELAB_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 4096) {
    throw ArgumentError(std::string("ORELAB_THREADS must be a positive integer, got '") + env + "'");
  }
  set_thread_count(static_cast<int>(value));
  return static_cast<int>(value);
}

std::string to_string(CorpusSource s) {
  switch (s) {
    case CorpusSource::Enumeration: return "enumeration";
    case CorpusSource::External: return "graph6-file";
    case CorpusSource::OreTrees: return "ore-trees";
    case CorpusSource::Random: return "random";
    case CorpusSource::Mixed: return "mixed";
  }
  return "?";
}

bool Corpus::add(const Graph& g, const std::string& provenance) {
  if (!seen_.insert(canonical_form(g)).second) return false;
  entries_.push_back({g, graph6_encode(g), provenance});
  return true;
}

void Corpus::merge(const Corpus& other) {
  if (other.source_ != source_) source_ = CorpusSource::Mixed;
  for (const CorpusEntry& e : other.entries_) add(e.graph, e.provenance);
}

bool Corpus::contains(const Graph& g) const { return seen_.count(canonical_form(g)) > 0; }

std::vector<Graph> Corpus::graphs() const {
  std::vector<Graph> out;
  out.reserve(entries_.size());
  for (const CorpusEntry& e : entries_) out.push_back(e.graph);
  return out;
}

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

/// Vertex sets S with forced ⊆ S ⊆ range(n) and |S| >= min_size.
template <typename F>
void for_each_extension(int n, VertexSet forced, int min_size, F&& f) {
  const VertexSet free = vset::range(n) & ~forced;
  VertexSet sub = 0;
  while (true) {
    const VertexSet s = forced | sub;
    if (vset::size(s) >= min_size) f(s);
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

struct Augmentation {
  std::function<bool(const Graph&)> base_ok;
  std::function<VertexSet(const Graph&)> forced;
  int min_size = 0;
  std::function<bool(const Graph&)> keep;
};

void augment_one(const Graph& base, const Augmentation& a, FormSet& out) {
  if (a.base_ok && !a.base_ok(base)) return;
  const VertexSet forced = a.forced ? a.forced(base) : 0;
  for_each_extension(base.order(), forced, a.min_size, [&](VertexSet s) {
    Graph g = base.with_vertex(s);
    if (!a.keep || a.keep(g)) out.insert(canonical_form(g));
  });
}

std::vector<Graph> augment(const std::vector<Graph>& base, const Augmentation& a, Execution exec) {
  FormSet merged;
  if (exec == Execution::Serial) {
    for (const Graph& g : base) augment_one(g, a, merged);
  } else {
    const long count = static_cast<long>(base.size());
#pragma omp parallel
    {
      FormSet local;
#pragma omp for schedule(dynamic, 1) nowait
      for (long i = 0; i < count; ++i) augment_one(base[static_cast<std::size_t>(i)], a, local);
#pragma omp critical(orelab_augment_merge)
      merged.insert(local.begin(), local.end());
    }
  }
  std::vector<CanonicalForm> forms(merged.begin(), merged.end());
  std::sort(forms.begin(), forms.end());
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(f.graph());
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graph_level(int n, Execution exec) {
  if (n < 0) throw ArgumentError("enumerate_graphs: n must be non-negative");
  if (n > kMaxEnumerationOrder) {
    throw SizeError("enumerate_graphs: built-in enumeration stops at " + std::to_string(kMaxEnumerationOrder) +
                    " vertices; supply a graph6 file instead");
  }
  std::vector<Graph> level{Graph(0)};
  for (int i = 1; i <= n; ++i) level = augment(level, Augmentation{}, exec);
  return level;
}

Corpus enumerate_graphs(int n, Execution exec) {
  Corpus out(CorpusSource::Enumeration);
  for (const Graph& g : enumerate_graph_level(n, exec)) out.add(g, "all graphs n=" + std::to_string(n));
  return out;
}

Corpus census_critical(int n_max, int k, Execution exec) {
  if (k < 3 || k > 6) throw ArgumentError("census_critical: k must be in 3..6");
  if (n_max > kMaxEnumerationOrder) {
    throw SizeError("census_critical: n_max above " + std::to_string(kMaxEnumerationOrder));
  }
  Corpus out(CorpusSource::Enumeration);
  if (n_max < k) return out;

  Augmentation colorable_step;
  colorable_step.keep = [k](const Graph& g) { return colorable(g, k - 1).has_value(); };

  Augmentation critical_step;
  critical_step.base_ok = [k](const Graph& g) { return g.order() == 0 || g.min_degree() >= k - 2; };
  critical_step.forced = [k](const Graph& g) {
    VertexSet low = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == k - 2) low |= vset::bit(v);
    }
    return low;
  };
  critical_step.min_size = k - 1;
  critical_step.keep = [k](const Graph& g) { return !colorable(g, k - 1) && is_k_critical(g, k); };

  std::vector<Graph> level{Graph(0)};
  for (int n = 1; n <= n_max; ++n) {
    if (n >= k) {
      for (const Graph& g : augment(level, critical_step, exec)) {
        out.add(g, "census k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
    if (n < n_max) level = augment(level, colorable_step, exec);
  }
  return out;
}

Corpus corpus_from_graph6_file(const std::string& path) {
  Corpus out(CorpusSource::External);
  int line = 0;
  for (const Graph& g : read_graph6_file(path)) out.add(g, path + ":" + std::to_string(++line));
  return out;
}

Corpus ore_tree_corpus(int k, int count, int max_compositions, std::uint64_t seed) {
  Corpus out(CorpusSource::OreTrees);
  out.add(Graph::complete(k), "K_" + std::to_string(k));
  Rng rng(seed);
  for (int l = 1; l <= max_compositions; ++l) {
    for (int i = 0; i < count; ++i) {
      const OreTree tree = random_ore_tree(k, l, rng);
      out.add(realize(tree, k), "ore tree k=" + std::to_string(k) + " l=" + std::to_string(l) + " #" +
                                    std::to_string(i) + " seed=" + std::to_string(seed));
    }
  }
  return out;
}

std::vector<Graph> random_graphs(int count, int n_min, int n_max, std::uint64_t seed) {
  if (n_min < 0 || n_max < n_min || n_max > kMaxVertices) throw ArgumentError("random_graphs: bad order range");
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_max - n_min + 1)));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (uniform_below(rng, 2) == 1) edges.emplace_back(u, v);
      }
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

namespace {

void partition_search(const Graph& g, Vertex v, std::vector<VertexSet>& blocks, int& best) {
  if (static_cast<int>(blocks.size()) >= best) return;
  if (v == g.order()) {
    best = static_cast<int>(blocks.size());
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if ((g.neighbors(v) & blocks[i]) != 0) continue;
    blocks[i] |= vset::bit(v);
    partition_search(g, v + 1, blocks, best);
    blocks[i] &= ~vset::bit(v);
  }
  blocks.push_back(vset::bit(v));
  partition_search(g, v + 1, blocks, best);
  blocks.pop_back();
}

}  // namespace

int chromatic_number_partitions(const Graph& g) {
  int best = g.order() + 1;
  if (g.order() == 0) return 0;
  std::vector<VertexSet> blocks;
  partition_search(g, 0, blocks, best);
  return best;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::SkippedCap: return "skipped-cap";
    case RowStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::vector<SuperadditivityStep> superadditivity_steps(const OreTree& tree, int k) {
  std::vector<SuperadditivityStep> out;
  std::function<Graph(const OreTree&)> walk = [&](const OreTree& t) -> Graph {
    if (t.is_leaf()) return Graph::complete(k);
    const OreTree::Node& node = t.node();
    walk(node.edge_side);
    walk(node.split_side);
    SuperadditivityStep s;
    s.edge_side_complete = node.edge_side.is_leaf();
    s.split_side_complete = node.split_side.is_leaf();
    s.t_edge_side = compute_T(realize(node.edge_side, k), k).value;
    s.t_split_side = compute_T(realize(node.split_side, k), k).value;
    const Graph g = realize(t, k);
    s.t_result = compute_T(g, k).value;
    const int sum = s.t_edge_side + s.t_split_side;
    if (s.edge_side_complete && s.split_side_complete) {
      s.holds = s.t_result == 4;
    } else if (s.edge_side_complete || s.split_side_complete) {
      s.holds = s.t_result >= sum - 1;
    } else {
      s.holds = s.t_result >= sum - 2;
    }
    out.push_back(s);
    return g;
  };
  walk(tree);
  return out;
}

namespace {

struct Context {
  SuiteParams params;
  PotentialParams potential;
  std::optional<GadgetCatalog> catalog;
  explicit Context(const SuiteParams& p) : params(p), potential(p.k) {}

  RecognitionOptions recognition() const {
    RecognitionOptions o;
    o.max_order = params.recognition_max_order;
    o.node_budget = params.recognition_budget;
    return o;
  }
  PackingOptions packing() const {
    PackingOptions o;
    o.clique_cap = params.clique_cap;
    return o;
  }
};

using RowFn = std::function<SuiteRow(const Graph&, const Context&)>;

SuiteRow row(std::string claim) {
  SuiteRow r;
  r.claim = std::move(claim);
  r.values = nlohmann::ordered_json::object();
  return r;
}

SuiteRow not_applicable(SuiteRow r, const std::string& why) {
  r.status = RowStatus::NotApplicable;
  r.values["reason"] = why;
  return r;
}

RowStatus verdict(bool ok) { return ok ? RowStatus::Pass : RowStatus::Fail; }

std::string to_vector_str(VertexSet s) {
  std::string out = "{";
  vset::for_each(s, [&](Vertex v) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  });
  return out + "}";
}

std::uint64_t row_seed(std::uint64_t seed, const Graph& g) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : graph6_encode(g)) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

SuiteRow ky_bound(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("|E| >= ceil((k/2 - 1/(k-1))|V| - k(k-3)/(2(k-1)))");
  if (!is_k_critical(g, k)) return not_applicable(r, "not k-critical");
  const long long bound = ky_edge_bound(g.order(), k);
  r.values["n"] = g.order();
  r.values["m"] = g.size();
  r.values["bound"] = bound;
  r.status = verdict(g.size() >= bound);
  return r;
}

SuiteRow ky_equality_ore(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("rho_KY = k(k-3) iff k-Ore");
  if (!is_k_critical(g, k)) return not_applicable(r, "not k-critical");
  const Rational value = rho_ky(g, k);
  const bool ore = OreRecognizer(k, c.recognition()).recognize(g).has_value();
  const bool extremal = value == Rational(k * (k - 3));
  r.values["rho_KY"] = to_string(value);
  r.values["k(k-3)"] = k * (k - 3);
  r.values["k_ore"] = ore;
  r.status = verdict(ore == extremal);
  return r;
}

std::optional<OreTree> recognized(const Graph& g, const Context& c) {
  if (!ore_counts_match(g.order(), g.size(), c.params.k)) return std::nullopt;
  return OreRecognizer(c.params.k, c.recognition()).recognize(g);
}

SuiteRow main2_potential(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("K_k: rho = k(k-3) + k eps - 2 delta; other k-Ore: rho <= k(k-3) + n eps - (2 + (n-1)/(k-1)) delta");
  if (!recognized(g, c)) return not_applicable(r, "not k-Ore");
  const int t = compute_T(g, k, c.packing()).value;
  const Rational value = rho(g, k, t);
  const Rational bound = ore_potential_bound(g.order(), k);
  r.values["n"] = g.order();
  r.values["T"] = t;
  r.values["rho"] = to_string(value);
  bool ok = false;
  if (g.order() == k) {
    r.values["complete_value"] = to_string(ore_potential_complete(k));
    ok = value == ore_potential_complete(k);
  } else {
    r.values["bound"] = to_string(bound);
    r.values["equality"] = value == bound;
    ok = value <= bound;
  }
  r.status = verdict(ok);
  return r;
}

SuiteRow t_superadd(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("T(G) >= T(G1) + T(G2) - 2; -1 if a side is K_k; = 4 if both are");
  const std::optional<OreTree> tree = recognized(g, c);
  if (!tree) return not_applicable(r, "not k-Ore");
  if (tree->is_leaf()) return not_applicable(r, "K_k has no composition");
  const std::vector<SuperadditivityStep> steps = superadditivity_steps(*tree, k);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  bool ok = true;
  for (const SuperadditivityStep& s : steps) {
    list.push_back({s.t_edge_side, s.t_split_side, s.t_result});
    ok = ok && s.holds;
  }
  r.values["steps_T1_T2_T"] = list;
  r.status = verdict(ok);
  return r;
}

SuiteRow t_lower(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("k-Ore, not K_k: T >= 2 + (n-1)/(k-1)");
  if (g.order() == k) return not_applicable(r, "K_k or not k-Ore");
  if (!recognized(g, c)) return not_applicable(r, "not k-Ore");
  const int t = compute_T(g, k, c.packing()).value;
  const Rational bound = ore_packing_bound(g.order(), k);
  r.values["T"] = t;
  r.values["bound"] = to_string(bound);
  r.status = verdict(Rational(t) >= bound);
  return r;
}

SuiteRow diamond_emerald(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("k-Ore: a diamond or emerald avoids any vertex, and any K_{k-1} unless G = K_k");
  if (!recognized(g, c)) return not_applicable(r, "not k-Ore");
  int checked = 0, missing = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    ++checked;
    if (find_diamonds_emeralds(g, k, vset::bit(v)).empty()) ++missing;
  }
  const bool complete = g.order() == k;
  for (VertexSet q : complete ? std::vector<VertexSet>{} : cliques_of_order(g, k - 1, c.params.clique_cap)) {
    ++checked;
    if (find_diamonds_emeralds(g, k, q).empty()) ++missing;
  }
  r.values["forbidden_sets"] = checked;
  r.values["without_witness"] = missing;
  r.status = verdict(missing == 0);
  return r;
}

SuiteRow extension_potential(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("rho(R') <= rho(R) + rho(W) - (rho(K_|X|) + incompleteness term)");
  if (!is_k_critical(g, k)) return not_applicable(r, "not k-critical");
  Rng rng(row_seed(c.params.seed, g));
  int records = 0, failing = 0, samples = 0;
  const int n = g.order();
  for (int size : {3, 4, 5}) {
    if (size >= n) continue;
    for (int s = 0; s < c.params.extension_samples; ++s) {
      std::vector<Vertex> order(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) order[i] = i;
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
      VertexSet rset = 0;
      for (int i = 0; i < size; ++i) rset |= vset::bit(order[i]);
      const Relabeled sub = g.induced(rset);
      const int chi = chromatic_number(sub.graph);
      const Coloring local = *colorable(sub.graph, chi);
      Coloring phi(static_cast<std::size_t>(n), kUncolored);
      vset::for_each(rset, [&](Vertex v) { phi[v] = local[sub.old_to_new[v]]; });
      ExtensionOptions opts;
      opts.seed = rng();
      const ExtensionResult ext = build_extension(g, k, rset, phi, opts);
      ++samples;
      for (const ExtensionRecord& rec : ext.records) {
        ++records;
        if (!rec.extension_bound_holds) ++failing;
      }
    }
  }
  if (samples == 0) return not_applicable(r, "fewer than 4 vertices");
  r.values["samples"] = samples;
  r.values["records"] = records;
  r.values["violations"] = failing;
  r.status = verdict(failing == 0 && records > 0);
  return r;
}

SuiteRow kernel_ineq(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("e(A, B0 + B1) < |A| + 2|B0| + 3|B1|");
  if (!is_k_critical(g, k)) return not_applicable(r, "not k-critical");
  const EdgeCountLemmaReport rep = edge_count_lemma_check(g, k, c.params.lemma_subset_cap);
  r.values["independent_sets"] = rep.independent_sets_checked;
  r.values["violations"] = rep.violations.size();
  if (!rep.violations.empty()) {
    const EdgeCountViolation& v = rep.violations.front();
    r.values["first"] = {{"A", to_vector_str(v.a)}, {"B0", to_vector_str(v.b0)}, {"B1", to_vector_str(v.b1)},
                         {"lhs", v.lhs}, {"rhs", v.rhs}};
  }
  r.status = verdict(rep.violations.empty());
  return r;
}

SuiteRow mic_ineq(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("2|E| > (k-2)|V| + mic(G)");
  if (!is_k_critical(g, k)) return not_applicable(r, "not k-critical");
  const MicResult m = mic(g);
  const long lhs = 2L * g.size();
  const long rhs = static_cast<long>(k - 2) * g.order() + m.value;
  r.values["2m"] = lhs;
  r.values["mic"] = m.value;
  r.values["rhs"] = rhs;
  r.status = verdict(lhs > rhs);
  return r;
}

SuiteRow charge_identity(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("sum w = rho + delta T and sum w = sum w' after R1, R2");
  const ChargeReport rep = charge_report(g, k, *c.catalog);
  r.values["T"] = rep.t_value;
  r.values["rho"] = to_string(rep.rho);
  r.values["sum_w"] = to_string(rep.ledger.total_w);
  r.values["sum_w_prime"] = to_string(rep.ledger.total_w_prime);
  r.values["r1_residue_ok"] = rep.ledger.r1_residue_ok;
  r.values["classification_complete"] = rep.roles.complete;
  r.values["e_LM_R"] = rep.e_lm_r;
  if (rep.identity_applicable) {
    r.values["e_LM_R_identity"] = rep.e_lm_r_identity;
  } else {
    r.values["note"] = rep.note;
  }
  r.status = verdict(rep.total_identity && rep.ledger.conserved() && rep.ledger.r1_residue_ok);
  return r;
}

SuiteRow packing_oracle(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("compute_T equals exhaustive T");
  if (g.order() > c.params.bruteforce_max_order) {
    r.status = RowStatus::SkippedCap;
    r.values["reason"] = "order above brute-force cap";
    return r;
  }
  const PackingWitness w = compute_T(g, k, c.packing());
  const int brute = compute_T_bruteforce(g, k);
  r.values["T"] = w.value;
  r.values["T_bruteforce"] = brute;
  r.values["witness_valid"] = is_valid_witness(g, w);
  r.status = verdict(w.value == brute && is_valid_witness(g, w));
  return r;
}

SuiteRow coloring_oracle(const Graph& g, const Context& c) {
  SuiteRow r = row("chromatic_number equals minimum independent partition");
  if (g.order() > c.params.partition_max_order) {
    r.status = RowStatus::SkippedCap;
    r.values["reason"] = "order above partition cap";
    return r;
  }
  const int chi = chromatic_number(g);
  const int brute = chromatic_number_partitions(g);
  r.values["chi"] = chi;
  r.values["chi_partitions"] = brute;
  r.status = verdict(chi == brute);
  return r;
}

SuiteRow graph6_roundtrip(const Graph& g, const Context&) {
  SuiteRow r = row("decode(encode(G)) = G");
  const std::string text = graph6_encode(g);
  r.values["length"] = text.size();
  r.status = verdict(graph6_decode(text) == g);
  return r;
}

SuiteRow main1_observe(const Graph& g, const Context& c) {
  const int k = c.params.k;
  SuiteRow r = row("observed: rho vs k(k-3) - 2(k-1) for non-Ore k-critical graphs");
  if (!is_k_critical(g, k)) return not_applicable(r, "not k-critical");
  if (recognized(g, c)) return not_applicable(r, "k-Ore");
  const int t = compute_T(g, k, c.packing()).value;
  const Rational value = rho(g, k, t);
  const Rational bound(k * (k - 3) - 2 * (k - 1));
  r.values["n"] = g.order();
  r.values["m"] = g.size();
  r.values["T"] = t;
  r.values["rho"] = to_string(value);
  r.values["bound"] = to_string(bound);
  r.values["below_bound"] = value <= bound;
  r.status = RowStatus::Pass;
  return r;
}

const std::map<std::string, RowFn>& registry() {
  static const std::map<std::string, RowFn> table = {
      {"ky-bound", ky_bound},
      {"ky-equality-ore", ky_equality_ore},
      {"main2-potential", main2_potential},
      {"t-superadd", t_superadd},
      {"t-lower", t_lower},
      {"diamond-emerald", diamond_emerald},
      {"extension-potential", extension_potential},
      {"kernel-ineq", kernel_ineq},
      {"mic-ineq", mic_ineq},
      {"charge-identity", charge_identity},
      {"packing-oracle", packing_oracle},
      {"coloring-oracle", coloring_oracle},
      {"graph6-roundtrip", graph6_roundtrip},
      {"main1-observe", main1_observe},
  };
  return table;
}

SuiteRow guarded(const RowFn& fn, const Graph& g, const Context& c) {
  SuiteRow r;
  try {
    r = fn(g, c);
  } catch (const SizeError& e) {
    r = row("cap");
    r.status = RowStatus::SkippedCap;
    r.values["reason"] = e.what();
  }
  r.graph6 = graph6_encode(g);
  return r;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

SuiteResult run_suite(const std::string& suite_id, const Corpus& corpus, const SuiteParams& params) {
  const auto it = registry().find(suite_id);
  if (it == registry().end()) throw ArgumentError("run_suite: unknown suite id '" + suite_id + "'");
  if (params.k < 3) throw ArgumentError("run_suite: k must be at least 3");
  Context ctx(params);
  if (suite_id == "charge-identity") ctx.catalog = build_gadget_catalog(params.k, params.catalog_compositions);

  const std::vector<CorpusEntry>& entries = corpus.entries();
  const long count = static_cast<long>(entries.size());
  std::vector<SuiteRow> rows(entries.size());
  if (params.exec == Execution::Serial) {
    for (long i = 0; i < count; ++i) rows[i] = guarded(it->second, entries[i].graph, ctx);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      try {
        rows[i] = guarded(it->second, entries[i].graph, ctx);
      } catch (...) {
#pragma omp critical(orelab_suite_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SuiteRow& a, const SuiteRow& b) {
    return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.claim < b.claim;
  });

  SuiteResult out;
  out.suite = suite_id;
  for (const SuiteRow& r : rows) {
    switch (r.status) {
      case RowStatus::Pass: ++out.passed; break;
      case RowStatus::Fail: ++out.failed; break;
      case RowStatus::SkippedCap: ++out.skipped_cap; break;
      case RowStatus::NotApplicable: ++out.not_applicable; break;
    }
  }
  out.rows = std::move(rows);
  out.config = {{"k", params.k},
                {"seed", params.seed},
                {"corpus_source", to_string(corpus.source())},
                {"corpus_size", corpus.size()},
                {"caps",
                 {{"recognition_budget", params.recognition_budget},
                  {"recognition_max_order", params.recognition_max_order},
                  {"bruteforce_max_order", params.bruteforce_max_order},
                  {"partition_max_order", params.partition_max_order},
                  {"lemma_subset_cap", params.lemma_subset_cap},
                  {"clique_cap", params.clique_cap},
                  {"catalog_compositions", params.catalog_compositions},
                  {"extension_samples", params.extension_samples}}}};
  return out;
}

nlohmann::ordered_json suite_to_json(const SuiteResult& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SuiteRow& row : r.rows) {
    rows.push_back({{"graph6", row.graph6}, {"claim", row.claim}, {"status", to_string(row.status)},
                    {"values", row.values}});
  }
  return {{"suite", r.suite},
          {"config", r.config},
          {"summary",
           {{"pass", r.passed},
            {"fail", r.failed},
            {"skipped_cap", r.skipped_cap},
            {"not_applicable", r.not_applicable},
            {"ok", r.ok()}}},
          {"rows", rows}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string suite_to_csv(const SuiteResult& r) {
  std::ostringstream os;
  os << "# config " << r.config.dump() << '\n';
  os << "suite,graph6,claim,status,values\n";
  for (const SuiteRow& row : r.rows) {
    os << csv_field(r.suite) << ',' << csv_field(row.graph6) << ',' << csv_field(row.claim) << ','
       << to_string(row.status) << ',' << csv_field(row.values.dump()) << '\n';
  }
  return os.str();
}

}  // namespace orelab
