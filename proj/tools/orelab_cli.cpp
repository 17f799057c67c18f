#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/graph6.hpp"
#include "orelab/harness.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/rational.hpp"
#include "orelab/rng.hpp"

using namespace orelab;

namespace {

/// graph6 lines, or a single JSON document written by gen-ore.
std::vector<Graph> read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const auto [tree, k] = ore_tree_from_json(doc.at("tree"));
    return {realize(tree, k)};
  }
  std::istringstream lines(text);
  return read_graph6_stream(lines);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
}

void apply_caps(const std::vector<std::string>& caps, SuiteParams& p) {
  const std::map<std::string, long*> longs = {{"recognition_budget", &p.recognition_budget},
                                              {"lemma_subset_cap", &p.lemma_subset_cap},
                                              {"clique_cap", &p.clique_cap}};
  const std::map<std::string, int*> ints = {{"recognition_max_order", &p.recognition_max_order},
                                            {"bruteforce_max_order", &p.bruteforce_max_order},
                                            {"partition_max_order", &p.partition_max_order},
                                            {"catalog_compositions", &p.catalog_compositions},
                                            {"extension_samples", &p.extension_samples}};
  for (const std::string& item : caps) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("cap must be key=value: " + item);
    const std::string key = item.substr(0, eq);
    const long value = std::stol(item.substr(eq + 1));
    if (auto it = longs.find(key); it != longs.end()) {
      *it->second = value;
    } else if (auto jt = ints.find(key); jt != ints.end()) {
      *jt->second = static_cast<int>(value);
    } else {
      throw ArgumentError("unknown cap: " + key);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orelab: k-critical and k-Ore graph toolkit"};
  app.require_subcommand(1);

  int k = 4;
  int steps = 1;
  std::uint64_t seed = 1;
  std::string in_path, out_path, json_path, csv_path, format = "g6";
  int n = 0, census_n = 0;
  bool critical = false;
  std::vector<std::string> suites, caps;

  auto* gen = app.add_subcommand("gen-ore", "Random k-Ore graph from a seeded composition tree");
  gen->add_option("--k", k, "k")->required()->check(CLI::Range(3, 64));
  gen->add_option("--steps", steps, "number of compositions")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out_path, "output file (JSON)");

  auto* rec = app.add_subcommand("recognize-ore", "Decide whether each input graph is k-Ore");
  rec->add_option("--k", k, "k")->required()->check(CLI::Range(3, 64));
  rec->add_option("--in", in_path, "graph6 file")->required();

  auto* pot = app.add_subcommand("potential", "Exact potentials of each input graph");
  pot->add_option("--k", k, "k")->required()->check(CLI::Range(3, 64));
  pot->add_option("--in", in_path, "graph6 file")->required();

  auto* pack = app.add_subcommand("pack", "Maximum K_{k-1}/K_{k-2} packing value T");
  pack->add_option("--k", k, "k")->required()->check(CLI::Range(3, 64));
  pack->add_option("--in", in_path, "graph6 file")->required();

  auto* en = app.add_subcommand("enumerate", "All graphs on n vertices, or k-critical graphs up to n");
  en->add_option("--n", n, "order")->required()->check(CLI::NonNegativeNumber);
  en->add_flag("--critical", critical, "k-critical graphs on at most n vertices");
  en->add_option("--k", k, "k for --critical")->check(CLI::Range(3, 6));
  en->add_option("--out", out_path, "output graph6 file");

  auto* ver = app.add_subcommand("verify", "Run verification suites; exit 0 iff all pass");
  ver->add_option("--suite", suites, "suite id, repeatable, or 'all'")->required();
  ver->add_option("--k", k, "k")->required()->check(CLI::Range(3, 64));
  auto* vin = ver->add_option("--in", in_path, "graph6 file");
  auto* vcensus = ver->add_option("--census", census_n, "census of k-critical graphs up to this order");
  vin->excludes(vcensus);
  ver->add_option("--caps", caps, "key=value overrides")->delimiter(',');
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--json", json_path, "JSON report");
  ver->add_option("--csv", csv_path, "CSV report");

  auto* ex = app.add_subcommand("export", "Convert graph6 input to dot or graph6");
  ex->add_option("--format", format, "dot or g6")->check(CLI::IsMember({"dot", "g6"}));
  ex->add_option("--in", in_path, "graph6 file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_thread_env();

    if (*gen) {
      Rng rng(seed);
      const OreTree tree = random_ore_tree(k, steps, rng);
      const Graph g = realize(tree, k);
      nlohmann::ordered_json doc = {{"k", k},
                                    {"steps", steps},
                                    {"seed", seed},
                                    {"graph6", graph6_encode(g)},
                                    {"n", g.order()},
                                    {"m", g.size()}};
      doc["tree"] = ore_tree_to_json(tree, k);
      write_output(out_path, doc.dump(2) + "\n");
      return 0;
    }

    if (*rec) {
      for (const Graph& g : read_input(in_path)) {
        nlohmann::ordered_json row = {{"graph6", graph6_encode(g)}};
        try {
          const auto tree = is_k_ore(g, k);
          row["k_ore"] = tree.has_value();
          if (tree) row["tree"] = ore_tree_to_json(*tree, k);
        } catch (const SizeError& e) {
          row["k_ore"] = nullptr;
          row["error"] = e.what();
        }
        std::cout << row.dump() << '\n';
      }
      return 0;
    }

    if (*pot) {
      const PotentialParams params(k);
      for (const Graph& g : read_input(in_path)) {
        const int t = compute_T(g, k).value;
        nlohmann::ordered_json row = {{"graph6", graph6_encode(g)},
                                      {"n", g.order()},
                                      {"m", g.size()},
                                      {"eps", to_string(params.eps)},
                                      {"delta", to_string(params.delta)},
                                      {"T", t},
                                      {"rho", to_string(rho(g, k, t))},
                                      {"rho_KY", to_string(rho_ky(g, k))}};
        std::cout << row.dump() << '\n';
      }
      return 0;
    }

    if (*pack) {
      for (const Graph& g : read_input(in_path)) {
        const PackingWitness w = compute_T(g, k);
        nlohmann::ordered_json cliques = nlohmann::ordered_json::array();
        for (VertexSet c : w.cliques) cliques.push_back(vset::to_vector(c));
        nlohmann::ordered_json row = {{"graph6", graph6_encode(g)},
                                      {"T", w.value},
                                      {"r", w.big_cliques()},
                                      {"s", w.small_cliques()},
                                      {"cliques", cliques}};
        std::cout << row.dump() << '\n';
      }
      return 0;
    }

    if (*en) {
      const Corpus c = critical ? census_critical(n, k) : enumerate_graphs(n);
      std::string text;
      for (const CorpusEntry& e : c.entries()) text += e.graph6 + "\n";
      write_output(out_path, text);
      std::cerr << c.size() << " graphs\n";
      return 0;
    }

    if (*ver) {
      if (in_path.empty() && census_n == 0) throw ArgumentError("verify needs --in FILE or --census N");
      SuiteParams params;
      params.k = k;
      params.seed = seed;
      apply_caps(caps, params);
      const Corpus corpus = in_path.empty() ? census_critical(census_n, k) : corpus_from_graph6_file(in_path);
      std::vector<std::string> ids;
      for (const std::string& s : suites) {
        if (s == "all") {
          ids.insert(ids.end(), suite_ids().begin(), suite_ids().end());
        } else {
          ids.push_back(s);
        }
      }
      bool all_ok = true;
      nlohmann::ordered_json reports = nlohmann::ordered_json::array();
      std::string csv;
      for (const std::string& id : ids) {
        const SuiteResult r = run_suite(id, corpus, params);
        all_ok = all_ok && r.ok();
        std::cout << (r.ok() ? "PASS " : "FAIL ") << id << "  pass=" << r.passed << " fail=" << r.failed
                  << " skipped-cap=" << r.skipped_cap << " n/a=" << r.not_applicable << '\n';
        reports.push_back(suite_to_json(r));
        csv += suite_to_csv(r);
      }
      if (!json_path.empty()) write_output(json_path, reports.dump(2) + "\n");
      if (!csv_path.empty()) write_output(csv_path, csv);
      return all_ok ? 0 : 1;
    }

    if (*ex) {
      std::string text;
      int index = 0;
      for (const Graph& g : read_input(in_path)) {
        text += format == "dot" ? to_dot(g, "G" + std::to_string(index++)) : graph6_encode(g) + "\n";
      }
      std::cout << text;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
