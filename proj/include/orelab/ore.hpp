#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "orelab/canonical.hpp"
#include "orelab/graph.hpp"
#include "orelab/rng.hpp"

namespace orelab {

/// Composition history of a k-Ore graph. A default-constructed tree is the
/// leaf K_k. Vertex labels inside a node refer to the realizations of its
/// children, so a tree pins down one labeled graph.
class OreTree {
 public:
  struct Node;

  OreTree() = default;
  static OreTree leaf() { return {}; }
  /// `part_x` and `part_y` split N(split_vertex) in realize(split_side).
  static OreTree compose(OreTree edge_side, OreTree split_side, Edge replaced_edge, Vertex split_vertex,
                         VertexSet part_x, VertexSet part_y);

  bool is_leaf() const { return node_ == nullptr; }
  const Node& node() const;
  /// Number of compositions (internal nodes).
  int compositions() const;
  int order(int k) const { return k + compositions() * (k - 1); }

 private:
  std::shared_ptr<const Node> node_;
};

struct OreTree::Node {
  OreTree edge_side;
  OreTree split_side;
  Edge replaced_edge;
  Vertex split_vertex = 0;
  VertexSet part_x = 0;
  VertexSet part_y = 0;
  int compositions = 0;
};

struct Composition {
  Graph graph;
  /// Vertex of G2 to vertex of the result; the split vertex maps to -1.
  std::vector<int> split_side_map;
};

/// Deletes xy from g1, splits z of g2 into a vertex joined to part_x and one
/// joined to part_y, and identifies them with x and y. G1 keeps its labels;
/// the rest of G2 follows in increasing order.
Composition ore_compose_detailed(const Graph& g1, Edge xy, const Graph& g2, Vertex z, VertexSet part_x,
                                 VertexSet part_y);
Graph ore_compose(const Graph& g1, Edge xy, const Graph& g2, Vertex z, VertexSet part_x, VertexSet part_y);

Graph realize(const OreTree& tree, int k);

/// Edge-side spine of the tree, from K_k up to the full graph: each graph is
/// an Ore composition of its predecessor and some k-Ore graph.
std::vector<Graph> ore_sequence(const OreTree& tree, int k);

/// Uniformly random tree with the given number of compositions: the split of
/// internal nodes between the children, the replaced edge, the split vertex
/// and the neighbor partition are each uniform.
OreTree random_ore_tree(int k, int compositions, Rng& rng);

nlohmann::json ore_tree_to_json(const OreTree& tree, int k);
/// Returns the tree and its k. Throws ParseError on malformed structure and
/// ArgumentError if a node does not describe a valid composition.
std::pair<OreTree, int> ore_tree_from_json(const nlohmann::json& doc);

struct RecognitionOptions {
  int max_order = 25;
  long node_budget = 2'000'000;  ///< recursive calls before giving up
};

/// One top-level Ore decomposition of G, in G's labels: G1 = G[edge_side + {a,b}] + ab,
/// G2 = G[split_side + {a,b}] / ab.
struct OreDecomposition {
  Vertex a = 0;
  Vertex b = 0;
  VertexSet edge_side = 0;   ///< H1, excluding a and b
  VertexSet split_side = 0;  ///< H2, excluding a and b
};

/// Searches non-adjacent cut pairs recursively with a memo on canonical forms.
/// One recognizer may be reused across calls; it is not thread-safe.
class OreRecognizer {
 public:
  explicit OreRecognizer(int k, RecognitionOptions options = {});

  /// A tree whose realization is isomorphic to g, or nullopt if g is not k-Ore.
  std::optional<OreTree> recognize(const Graph& g);
  /// Every top-level decomposition of g whose two sides are both k-Ore.
  std::vector<OreDecomposition> decompositions(const Graph& g);

  int k() const { return k_; }
  /// Set when decompositions() ran out of budget and returned a partial list.
  bool truncated() const { return truncated_; }

 private:
  std::optional<OreTree> solve(const Graph& g);
  std::optional<OreTree> try_split(const Graph& g, const OreDecomposition& d);
  bool plausible(const Graph& g) const;
  void search(const Graph& g, std::vector<OreDecomposition>* all, std::optional<OreTree>* first);

  int k_;
  RecognitionOptions options_;
  long calls_ = 0;
  bool truncated_ = false;
  std::unordered_map<CanonicalForm, std::optional<OreTree>, CanonicalFormHash> memo_;
};

std::optional<OreTree> is_k_ore(const Graph& g, int k, RecognitionOptions options = {});

/// True iff n = k + l(k-1) and m = (l+1)k(k-1)/2 - l for some l >= 0.
bool ore_counts_match(int n, int m, int k);

/// Every k-Ore graph with at most `max_compositions` compositions, up to
/// isomorphism; entry l holds those with exactly l compositions.
std::vector<std::vector<Graph>> enumerate_k_ore(int k, int max_compositions);

struct KeyVertexResult {
  VertexSet keys = 0;
  int decompositions = 0;
  /// False when the search was cut short; then `keys` may be too large.
  bool complete = true;
};

/// Vertices on the edge side and off the overlap pair in every decomposition
/// of the realized graph. K_k has every vertex as a key vertex.
KeyVertexResult key_vertices(const Graph& h, int k, RecognitionOptions options = {});
KeyVertexResult key_vertices(const OreTree& tree, int k, RecognitionOptions options = {});

struct Gadget {
  OreTree host;
  int k = 0;
  Vertex deleted = 0;
  Graph host_graph;
  Relabeled realized;  ///< host_graph - deleted
  /// Key vertices of the host, in gadget labels.
  VertexSet key_vertices = 0;
  bool keys_complete = true;
};

/// Requires deg(x) = k-1 and x in a cluster of size at least 2.
Gadget make_gadget(const OreTree& tree, int k, Vertex x, RecognitionOptions options = {});

}  // namespace orelab
