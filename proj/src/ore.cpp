#include "orelab/ore.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "orelab/errors.hpp"
#include "orelab/structure.hpp"

namespace orelab {

namespace {

// Thrown inside the recursion when the call budget runs out.
struct BudgetExceeded {};

void require_k(int k) {
  if (k < 3) throw ArgumentError("Ore graphs: k must be at least 3, got " + std::to_string(k));
}

VertexSet map_through(VertexSet s, const std::vector<int>& map) {
  VertexSet out = 0;
  vset::for_each(s, [&](Vertex v) { out |= vset::bit(map[v]); });
  return out;
}

}  // namespace

OreTree OreTree::compose(OreTree edge_side, OreTree split_side, Edge replaced_edge, Vertex split_vertex,
                         VertexSet part_x, VertexSet part_y) {
  if (part_x == 0 || part_y == 0) throw ArgumentError("OreTree: neighbor partition has an empty part");
  if ((part_x & part_y) != 0) throw ArgumentError("OreTree: neighbor partition parts overlap");
  auto node = std::make_shared<Node>();
  node->compositions = edge_side.compositions() + split_side.compositions() + 1;
  node->edge_side = std::move(edge_side);
  node->split_side = std::move(split_side);
  node->replaced_edge = replaced_edge;
  node->split_vertex = split_vertex;
  node->part_x = part_x;
  node->part_y = part_y;
  OreTree out;
  out.node_ = std::move(node);
  return out;
}

const OreTree::Node& OreTree::node() const {
  if (!node_) throw ArgumentError("OreTree: a leaf has no node");
  return *node_;
}

int OreTree::compositions() const { return node_ ? node_->compositions : 0; }

Composition ore_compose_detailed(const Graph& g1, Edge xy, const Graph& g2, Vertex z, VertexSet part_x,
                                 VertexSet part_y) {
  const auto [x, y] = xy;
  if (x < 0 || y < 0 || x >= g1.order() || y >= g1.order() || !g1.adjacent(x, y)) {
    throw ArgumentError("ore_compose: replaced pair is not an edge of the edge side");
  }
  if (z < 0 || z >= g2.order()) throw ArgumentError("ore_compose: split vertex out of range");
  if (part_x == 0 || part_y == 0) throw ArgumentError("ore_compose: neighbor partition has an empty part");
  if ((part_x & part_y) != 0 || (part_x | part_y) != g2.neighbors(z)) {
    throw ArgumentError("ore_compose: parts do not partition the split vertex's neighborhood");
  }
  const int n1 = g1.order();
  if (n1 + g2.order() - 1 > kMaxVertices) throw SizeError("ore_compose: result exceeds 64 vertices");

  Composition out;
  out.split_side_map.assign(static_cast<std::size_t>(g2.order()), -1);
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (v != z) out.split_side_map[v] = n1 + (v < z ? v : v - 1);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges()) {
    if (!(e == Edge{x, y} || e == Edge{y, x})) edges.push_back(e);
  }
  for (auto [u, v] : g2.edges()) {
    if (u != z && v != z) edges.emplace_back(out.split_side_map[u], out.split_side_map[v]);
  }
  vset::for_each(part_x, [&](Vertex v) { edges.emplace_back(x, out.split_side_map[v]); });
  vset::for_each(part_y, [&](Vertex v) { edges.emplace_back(y, out.split_side_map[v]); });
  out.graph = Graph::from_edges(n1 + g2.order() - 1, edges);
  return out;
}

Graph ore_compose(const Graph& g1, Edge xy, const Graph& g2, Vertex z, VertexSet part_x, VertexSet part_y) {
  return ore_compose_detailed(g1, xy, g2, z, part_x, part_y).graph;
}

Graph realize(const OreTree& tree, int k) {
  require_k(k);
  if (tree.order(k) > kMaxVertices) throw SizeError("realize: tree exceeds 64 vertices");
  if (tree.is_leaf()) return Graph::complete(k);
  const OreTree::Node& node = tree.node();
  return ore_compose(realize(node.edge_side, k), node.replaced_edge, realize(node.split_side, k), node.split_vertex,
                     node.part_x, node.part_y);
}

std::vector<Graph> ore_sequence(const OreTree& tree, int k) {
  std::vector<const OreTree::Node*> spine;
  for (const OreTree* t = &tree; !t->is_leaf(); t = &t->node().edge_side) spine.push_back(&t->node());
  std::vector<Graph> out{realize(OreTree::leaf(), k)};
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    const OreTree::Node& node = **it;
    out.push_back(ore_compose(out.back(), node.replaced_edge, realize(node.split_side, k), node.split_vertex,
                              node.part_x, node.part_y));
  }
  return out;
}

namespace {

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::pair<OreTree, Graph> random_tree(int k, int compositions, Rng& rng) {
  if (compositions == 0) return {OreTree::leaf(), Graph::complete(k)};
  // Split the internal nodes so that every tree shape is equally likely.
  const int rest = compositions - 1;
  std::uint64_t pick = uniform_below(rng, catalan(compositions));
  int left = 0;
  while (true) {
    const std::uint64_t weight = catalan(left) * catalan(rest - left);
    if (pick < weight) break;
    pick -= weight;
    ++left;
  }
  auto [t1, g1] = random_tree(k, left, rng);
  auto [t2, g2] = random_tree(k, rest - left, rng);
  const std::vector<Edge> edges = g1.edges();
  const Edge e = edges[uniform_below(rng, edges.size())];
  const Vertex z = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g2.order())));
  const std::vector<Vertex> nbrs = vset::to_vector(g2.neighbors(z));
  const std::uint64_t subsets = (std::uint64_t{1} << nbrs.size()) - 2;
  const std::uint64_t choice = 1 + uniform_below(rng, subsets);
  VertexSet part_x = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if ((choice >> i) & 1U) part_x |= vset::bit(nbrs[i]);
  }
  const VertexSet part_y = g2.neighbors(z) & ~part_x;
  Graph g = ore_compose(g1, e, g2, z, part_x, part_y);
  return {OreTree::compose(std::move(t1), std::move(t2), e, z, part_x, part_y), std::move(g)};
}

}  // namespace

OreTree random_ore_tree(int k, int compositions, Rng& rng) {
  require_k(k);
  if (compositions < 0) throw ArgumentError("random_ore_tree: negative composition count");
  if (k + compositions * (k - 1) > kMaxVertices) throw SizeError("random_ore_tree: tree exceeds 64 vertices");
  return random_tree(k, compositions, rng).first;
}

namespace {

nlohmann::json set_json(VertexSet s) { return vset::to_vector(s); }

nlohmann::json tree_json(const OreTree& t) {
  if (t.is_leaf()) return {{"type", "leaf"}};
  const OreTree::Node& n = t.node();
  return {{"type", "node"},
          {"edge_side", tree_json(n.edge_side)},
          {"split_side", tree_json(n.split_side)},
          {"replaced_edge", {n.replaced_edge.first, n.replaced_edge.second}},
          {"split_vertex", n.split_vertex},
          {"part_x", set_json(n.part_x)},
          {"part_y", set_json(n.part_y)}};
}

VertexSet set_from_json(const nlohmann::json& j) {
  VertexSet s = 0;
  for (const auto& v : j) {
    const int id = v.get<int>();
    if (id < 0 || id >= kMaxVertices) throw ParseError("OreTree json: vertex id out of range", 0);
    s |= vset::bit(id);
  }
  return s;
}

OreTree tree_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "leaf") return OreTree::leaf();
  if (type != "node") throw ParseError("OreTree json: unknown node type '" + type + "'", 0);
  const auto& e = j.at("replaced_edge");
  if (!e.is_array() || e.size() != 2) throw ParseError("OreTree json: replaced_edge must be a pair", 0);
  return OreTree::compose(tree_from_json(j.at("edge_side")), tree_from_json(j.at("split_side")),
                          {e[0].get<int>(), e[1].get<int>()}, j.at("split_vertex").get<int>(),
                          set_from_json(j.at("part_x")), set_from_json(j.at("part_y")));
}

}  // namespace

nlohmann::json ore_tree_to_json(const OreTree& tree, int k) {
  return {{"k", k}, {"compositions", tree.compositions()}, {"tree", tree_json(tree)}};
}

std::pair<OreTree, int> ore_tree_from_json(const nlohmann::json& doc) {
  OreTree tree;
  int k = 0;
  try {
    k = doc.at("k").get<int>();
    tree = tree_from_json(doc.at("tree"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("OreTree json: ") + e.what(), 0);
  }
  realize(tree, k);  // validates every node
  return {std::move(tree), k};
}

bool ore_counts_match(int n, int m, int k) {
  if (n < k || (n - k) % (k - 1) != 0) return false;
  const long long l = (n - k) / (k - 1);
  return m == (l + 1) * k * (k - 1) / 2 - l;
}

OreRecognizer::OreRecognizer(int k, RecognitionOptions options) : k_(k), options_(options) { require_k(k); }

bool OreRecognizer::plausible(const Graph& g) const {
  return ore_counts_match(g.order(), g.size(), k_) && g.min_degree() >= k_ - 1 && is_connected(g);
}

std::optional<OreTree> OreRecognizer::recognize(const Graph& g) {
  if (g.order() > options_.max_order) {
    throw SizeError("is_k_ore: " + std::to_string(g.order()) + " vertices exceeds cap " +
                    std::to_string(options_.max_order));
  }
  calls_ = 0;
  try {
    return solve(g);
  } catch (const BudgetExceeded&) {
    throw SizeError("is_k_ore: search budget of " + std::to_string(options_.node_budget) + " calls exhausted");
  }
}

std::vector<OreDecomposition> OreRecognizer::decompositions(const Graph& g) {
  if (g.order() > options_.max_order) {
    throw SizeError("key_vertices: " + std::to_string(g.order()) + " vertices exceeds cap " +
                    std::to_string(options_.max_order));
  }
  std::vector<OreDecomposition> out;
  truncated_ = false;
  calls_ = 0;
  if (g.order() <= k_ || !plausible(g)) return out;
  try {
    search(g, &out, nullptr);
  } catch (const BudgetExceeded&) {
    truncated_ = true;
  }
  return out;
}

std::optional<OreTree> OreRecognizer::solve(const Graph& g) {
  if (++calls_ > options_.node_budget) throw BudgetExceeded{};
  if (!plausible(g)) return std::nullopt;
  if (g.order() == k_) return OreTree::leaf();  // the counts force K_k
  const CanonicalForm key = canonical_form(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::optional<OreTree> tree;
  search(g, nullptr, &tree);
  memo_.emplace(key, tree);
  return tree;
}

void OreRecognizer::search(const Graph& g, std::vector<OreDecomposition>* all, std::optional<OreTree>* first) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      const VertexSet rest = g.vertices() & ~vset::bit(a) & ~vset::bit(b);
      const std::vector<VertexSet> comps = components(g, rest);
      const int c = static_cast<int>(comps.size());
      if (c < 2) continue;
      if (c > 20) throw SizeError("is_k_ore: too many components after removing a pair");
      for (std::uint32_t mask = 1; mask + 1 < (1U << c); ++mask) {
        OreDecomposition d{a, b, 0, 0};
        for (int i = 0; i < c; ++i) {
          if ((mask >> i) & 1U) {
            d.edge_side |= comps[i];
          } else {
            d.split_side |= comps[i];
          }
        }
        const int h1 = vset::size(d.edge_side);
        if (h1 + 2 < k_ || (h1 + 2 - k_) % (k_ - 1) != 0) continue;
        if ((g.neighbors(a) & d.split_side) == 0 || (g.neighbors(b) & d.split_side) == 0) continue;
        std::optional<OreTree> tree = try_split(g, d);
        if (!tree) continue;
        if (all != nullptr) {
          all->push_back(d);
        } else {
          *first = std::move(tree);
          return;
        }
      }
    }
  }
}

std::optional<OreTree> OreRecognizer::try_split(const Graph& g, const OreDecomposition& d) {
  const VertexSet pair = vset::bit(d.a) | vset::bit(d.b);
  const Relabeled r1 = g.induced(d.edge_side | pair);
  const Vertex a1 = r1.old_to_new[d.a];
  const Vertex b1 = r1.old_to_new[d.b];
  const Graph g1 = r1.graph.with_edge(a1, b1);
  if (!ore_counts_match(g1.order(), g1.size(), k_)) return std::nullopt;
  const Relabeled r2 = g.induced(d.split_side | pair);
  const Relabeled merged = identify(r2.graph, r2.old_to_new[d.a], r2.old_to_new[d.b]);
  const Graph& g2 = merged.graph;
  if (!ore_counts_match(g2.order(), g2.size(), k_)) return std::nullopt;

  std::optional<OreTree> t1 = solve(g1);
  if (!t1) return std::nullopt;
  std::optional<OreTree> t2 = solve(g2);
  if (!t2) return std::nullopt;

  // Express the split in the labels of the two witness realizations.
  const auto iso1 = find_isomorphism(g1, realize(*t1, k_));
  const auto iso2 = find_isomorphism(g2, realize(*t2, k_));
  if (!iso1 || !iso2) throw std::logic_error("is_k_ore: witness does not realize its graph");
  std::vector<int> to_r2(static_cast<std::size_t>(g.order()), -1);
  vset::for_each(d.split_side, [&](Vertex v) { to_r2[v] = (*iso2)[merged.old_to_new[r2.old_to_new[v]]]; });
  const VertexSet part_x = map_through(g.neighbors(d.a) & d.split_side, to_r2);
  const VertexSet part_y = map_through(g.neighbors(d.b) & d.split_side, to_r2);
  const Vertex z = (*iso2)[merged.old_to_new[r2.old_to_new[d.a]]];
  return OreTree::compose(std::move(*t1), std::move(*t2), {(*iso1)[a1], (*iso1)[b1]}, z, part_x, part_y);
}

std::optional<OreTree> is_k_ore(const Graph& g, int k, RecognitionOptions options) {
  OreRecognizer recognizer(k, options);
  return recognizer.recognize(g);
}

std::vector<std::vector<Graph>> enumerate_k_ore(int k, int max_compositions) {
  require_k(k);
  if (max_compositions < 0) throw ArgumentError("enumerate_k_ore: negative composition count");
  if (k + max_compositions * (k - 1) > 64) throw SizeError("enumerate_k_ore: graphs exceed 64 vertices");
  std::vector<std::vector<Graph>> levels{{Graph::complete(k)}};
  for (int l = 1; l <= max_compositions; ++l) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    for (int l1 = 0; l1 < l; ++l1) {
      for (const Graph& g1 : levels[l1]) {
        for (const Graph& g2 : levels[l - 1 - l1]) {
          const std::vector<int> orbit = canonize(g2).orbit;
          for (const Edge& e : g1.edges()) {
            for (Vertex z = 0; z < g2.order(); ++z) {
              if (orbit[z] != z) continue;
              const VertexSet nz = g2.neighbors(z);
              // Both orientations of e arise as px runs over all proper subsets.
              for (VertexSet px = (nz - 1) & nz; px != 0; px = (px - 1) & nz) {
                seen.insert(canonical_form(ore_compose(g1, e, g2, z, px, nz & ~px)));
              }
            }
          }
        }
      }
    }
    std::vector<CanonicalForm> forms(seen.begin(), seen.end());
    std::sort(forms.begin(), forms.end());
    std::vector<Graph> level;
    for (const CanonicalForm& f : forms) level.push_back(f.graph());
    levels.push_back(std::move(level));
  }
  return levels;
}

KeyVertexResult key_vertices(const Graph& h, int k, RecognitionOptions options) {
  OreRecognizer recognizer(k, options);
  KeyVertexResult out;
  if (h.order() == k && h.is_clique(h.vertices())) {
    out.keys = h.vertices();
    return out;
  }
  const std::vector<OreDecomposition> decs = recognizer.decompositions(h);
  out.complete = !recognizer.truncated();
  if (decs.empty() && out.complete) throw ArgumentError("key_vertices: graph is not k-Ore");
  out.decompositions = static_cast<int>(decs.size());
  out.keys = h.vertices();
  for (const OreDecomposition& d : decs) out.keys &= d.edge_side;
  return out;
}

KeyVertexResult key_vertices(const OreTree& tree, int k, RecognitionOptions options) {
  return key_vertices(realize(tree, k), k, options);
}

Gadget make_gadget(const OreTree& tree, int k, Vertex x, RecognitionOptions options) {
  Gadget out;
  out.host = tree;
  out.k = k;
  out.deleted = x;
  out.host_graph = realize(tree, k);
  const Graph& h = out.host_graph;
  if (x < 0 || x >= h.order()) throw ArgumentError("make_gadget: vertex out of range");
  if (h.degree(x) != k - 1) throw ArgumentError("make_gadget: deleted vertex must have degree k-1");
  const std::vector<int> index = cluster_index(h, k);
  const std::vector<Cluster> cs = clusters(h, k);
  if (vset::size(cs[index[x]].members) < 2) throw ArgumentError("make_gadget: vertex is in a cluster of size 1");
  out.realized = h.induced(h.vertices() & ~vset::bit(x));
  const KeyVertexResult keys = key_vertices(h, k, options);
  out.key_vertices = out.realized.map_set(keys.keys & ~vset::bit(x));
  out.keys_complete = keys.complete;
  return out;
}

}  // namespace orelab
