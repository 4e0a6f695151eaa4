// Copyright 2026 The ggpne Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Structural objects over the players of a game: hypergraphs, primal graphs,
// chordal completions, clique trees, and tree / hypertree decompositions.

#ifndef GGPNE_STRUCTURE_HPP_
#define GGPNE_STRUCTURE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggpne/game.hpp"

namespace ggpne {

using TreeEdge = std::pair<std::size_t, std::size_t>;

inline bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool contains(const VertexSet& set, Player v) {
  return std::binary_search(set.begin(), set.end(), v);
}

/// Undirected, loop-free graph with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t num_vertices = 0) : adjacency_(num_vertices) {}

  std::size_t num_vertices() const { return adjacency_.size(); }

  /// Adds {u, v}; repeated insertion is a no-op.
  void add_edge(Player u, Player v) {
    if (u >= num_vertices() || v >= num_vertices()) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
  }

  bool has_edge(Player u, Player v) const {
    return contains(adjacency_.at(u), v);
  }

  const VertexSet& neighbors(Player v) const { return adjacency_.at(v); }

  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency_) twice += adj.size();
    return twice / 2;
  }

  std::vector<std::pair<Player, Player>> edges() const {
    std::vector<std::pair<Player, Player>> out;
    for (Player u = 0; u < num_vertices(); ++u) {
      for (Player v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool is_supergraph_of(const Graph& other) const {
    if (other.num_vertices() != num_vertices()) return false;
    for (auto [u, v] : other.edges()) {
      if (!has_edge(u, v)) return false;
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static void insert_sorted(VertexSet& set, Player v) {
    auto it = std::lower_bound(set.begin(), set.end(), v);
    if (it == set.end() || *it != v) set.insert(it, v);
  }

  std::vector<VertexSet> adjacency_;
};

/// Duplicate-free family of nonempty vertex subsets.
struct Hypergraph {
  std::size_t num_vertices = 0;
  std::vector<VertexSet> edges;

  /// Index of the hyperedge equal to `edge`, if any.
  std::optional<std::size_t> find(const VertexSet& edge) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == edge) return i;
    }
    return std::nullopt;
  }
};

/// Orders hyperedges by smallest member, then size, then lexicographically,
/// and removes duplicates.
inline void canonicalize(Hypergraph& h) {
  for (auto& e : h.edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  std::sort(h.edges.begin(), h.edges.end(),
            [](const VertexSet& a, const VertexSet& b) {
              const Player ma = a.empty() ? 0 : a.front();
              const Player mb = b.empty() ? 0 : b.front();
              if (ma != mb) return ma < mb;
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
}

inline void check_hypergraph(const Hypergraph& h) {
  std::vector<bool> seen(h.num_vertices, false);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const VertexSet& e = h.edges[i];
    if (e.empty()) throw Error("hyperedge " + std::to_string(i) + " is empty");
    if (!std::is_sorted(e.begin(), e.end()) ||
        std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error("hyperedge " + std::to_string(i) + " is not a sorted set");
    }
    for (Player v : e) {
      if (v >= h.num_vertices) throw Error("hyperedge vertex out of range");
      seen[v] = true;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (h.edges[j] == e) throw Error("duplicate hyperedge");
    }
  }
  for (Player v = 0; v < h.num_vertices; ++v) {
    if (!seen[v]) {
      throw Error("vertex " + std::to_string(v) + " is in no hyperedge");
    }
  }
}

/// H(G): one hyperedge N(p) per player, duplicates merged.
inline Hypergraph game_hypergraph(const GraphicalGame& game) {
  Hypergraph h;
  h.num_vertices = game.num_players();
  h.edges.reserve(game.num_players());
  for (Player p = 0; p < game.num_players(); ++p) {
    h.edges.push_back(game.neighborhood(p));
  }
  canonicalize(h);
  return h;
}

inline Graph game_graph(const GraphicalGame& game) {
  Graph g(game.num_players());
  for (auto [u, v] : game.edges()) g.add_edge(u, v);
  return g;
}

/// Two vertices are adjacent iff some hyperedge contains both.
inline Graph primal_graph(const Hypergraph& h) {
  Graph g(h.num_vertices);
  for (const VertexSet& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
    }
  }
  return g;
}

/// A tree of vertex sets with the clique-intersection property. Width is the
/// largest node cardinality.
struct CliqueTree {
  std::vector<VertexSet> nodes;
  std::vector<TreeEdge> edges;

  std::size_t width() const {
    std::size_t w = 0;
    for (const auto& node : nodes) w = std::max(w, node.size());
    return w;
  }
};

/// Width is the largest bag size minus one.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<TreeEdge> edges;

  std::size_t width() const {
    std::size_t w = 0;
    for (const auto& bag : bags) w = std::max(w, bag.size());
    return w == 0 ? 0 : w - 1;
  }
};

/// Rooted tree with labels chi (vertex sets) and lambda (hyperedge sets).
/// Width is the largest |lambda(v)|.
struct HypertreeDecomposition {
  std::vector<VertexSet> chi;
  std::vector<std::vector<VertexSet>> lambda;
  std::vector<TreeEdge> edges;
  std::size_t root = 0;

  std::size_t width() const {
    std::size_t w = 0;
    for (const auto& l : lambda) w = std::max(w, l.size());
    return w;
  }
};

/// Outcome of a structural check. `condition` names the first violated
/// condition (0 means the object is not a well-formed tree).
struct ValidationResult {
  bool ok = true;
  int condition = 0;
  std::string message;

  static ValidationResult failure(int condition, std::string message) {
    return {false, condition, std::move(message)};
  }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> tree_adjacency(
    std::size_t num_nodes, const std::vector<TreeEdge>& edges) {
  std::vector<std::vector<std::size_t>> adj(num_nodes);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

/// Empty string when `edges` forms a spanning tree over `num_nodes` nodes.
inline std::string tree_shape_error(std::size_t num_nodes,
                                    const std::vector<TreeEdge>& edges) {
  if (num_nodes == 0) {
    return edges.empty() ? "" : "edges without nodes";
  }
  if (edges.size() != num_nodes - 1) {
    return "a tree on " + std::to_string(num_nodes) + " nodes needs " +
           std::to_string(num_nodes - 1) + " edges, got " +
           std::to_string(edges.size());
  }
  for (auto [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes) return "tree edge out of range";
    if (a == b) return "tree edge is a self-loop";
  }
  const auto adj = tree_adjacency(num_nodes, edges);
  std::vector<bool> seen(num_nodes, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != num_nodes) return "tree is not connected";
  return "";
}

/// Index: vertex -> ascending list of nodes containing it.
inline std::vector<std::vector<std::size_t>> occurrence_index(
    std::size_t num_vertices, const std::vector<VertexSet>& nodes) {
  std::vector<std::vector<std::size_t>> occ(num_vertices);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Player v : nodes[i]) {
      if (v < num_vertices) occ[v].push_back(i);
    }
  }
  return occ;
}

/// Empty string iff for every vertex the nodes containing it induce a
/// connected subtree. Assumes `edges` is a tree.
inline std::string running_intersection_error(
    std::size_t num_vertices, const std::vector<VertexSet>& nodes,
    const std::vector<TreeEdge>& edges) {
  std::vector<std::size_t> node_count(num_vertices, 0);
  std::vector<std::size_t> edge_count(num_vertices, 0);
  for (const auto& node : nodes) {
    for (Player v : node) {
      if (v < num_vertices) ++node_count[v];
    }
  }
  for (auto [a, b] : edges) {
    for (Player v : set_intersection(nodes[a], nodes[b])) {
      if (v < num_vertices) ++edge_count[v];
    }
  }
  for (Player v = 0; v < num_vertices; ++v) {
    if (node_count[v] > 0 && edge_count[v] + 1 != node_count[v]) {
      return "nodes containing vertex " + std::to_string(v) +
             " are not connected in the tree";
    }
  }
  return "";
}

inline bool is_sorted_set(const VertexSet& s) {
  return std::is_sorted(s.begin(), s.end()) &&
         std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace detail

/// Checks that (bags, edges) is a tree decomposition of g: a tree (0), every
/// vertex covered (1), every edge covered (2), running intersection (3).
inline ValidationResult validate_tree_decomposition(
    const std::vector<VertexSet>& bags, const std::vector<TreeEdge>& edges,
    const Graph& g) {
  if (auto err = detail::tree_shape_error(bags.size(), edges); !err.empty()) {
    return ValidationResult::failure(0, err);
  }
  for (const auto& bag : bags) {
    if (!detail::is_sorted_set(bag)) {
      return ValidationResult::failure(0, "bag is not a sorted vertex set");
    }
    if (!bag.empty() && bag.back() >= g.num_vertices()) {
      return ValidationResult::failure(0, "bag vertex out of range");
    }
  }
  const auto occ = detail::occurrence_index(g.num_vertices(), bags);
  for (Player v = 0; v < g.num_vertices(); ++v) {
    if (occ[v].empty()) {
      return ValidationResult::failure(
          1, "vertex " + std::to_string(v) + " is in no bag");
    }
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = occ[u];
    const auto& b = occ[v];
    std::vector<std::size_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    if (both.empty()) {
      return ValidationResult::failure(
          2, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                 ") is in no bag");
    }
  }
  if (auto err = detail::running_intersection_error(g.num_vertices(), bags,
                                                    edges);
      !err.empty()) {
    return ValidationResult::failure(3, err);
  }
  return {};
}

inline ValidationResult validate_tree_decomposition(
    const TreeDecomposition& td, const Graph& g) {
  return validate_tree_decomposition(td.bags, td.edges, g);
}

/// A clique tree of g is exactly a tree decomposition of g.
inline ValidationResult validate_clique_tree(const CliqueTree& tree,
                                             const Graph& g) {
  return validate_tree_decomposition(tree.nodes, tree.edges, g);
}

// ---------------------------------------------------------------------------
// Graham / GYO reduction

struct AcyclicityResult {
  bool acyclic = false;
  /// Nodes are exactly the hyperedges of the input, in input order.
  std::optional<CliqueTree> join_tree;
};

/// GYO reduction: repeatedly drop vertices that occur in a single live
/// hyperedge and hyperedges contained in another live hyperedge. The input is
/// acyclic iff at most one (empty) hyperedge survives. Each absorbed
/// hyperedge is attached to its smallest-index absorbing witness.
inline AcyclicityResult grahams_algorithm(const Hypergraph& h) {
  const std::size_t m = h.edges.size();
  const std::size_t n = h.num_vertices;
  std::vector<VertexSet> current = h.edges;
  std::vector<bool> alive(m, true);
  std::set<std::size_t> alive_set;
  for (std::size_t i = 0; i < m; ++i) alive_set.insert(i);
  std::vector<std::vector<std::size_t>> occ(n);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (Player v : current[i]) {
      if (v >= n) throw Error("hyperedge vertex out of range");
      occ[v].push_back(i);
      ++count[v];
    }
  }

  std::deque<std::size_t> edge_queue;
  std::deque<Player> vertex_queue;
  for (std::size_t i = 0; i < m; ++i) edge_queue.push_back(i);
  for (Player v = 0; v < n; ++v) vertex_queue.push_back(v);

  CliqueTree tree;
  tree.nodes = h.edges;

  auto find_witness = [&](std::size_t e) -> std::optional<std::size_t> {
    if (current[e].empty()) {
      for (std::size_t f : alive_set) {
        if (f != e) return f;
      }
      return std::nullopt;
    }
    Player pivot = current[e].front();
    for (Player v : current[e]) {
      if (count[v] < count[pivot]) pivot = v;
    }
    for (std::size_t f : occ[pivot]) {
      if (f != e && alive[f] && is_subset(current[e], current[f])) return f;
    }
    return std::nullopt;
  };

  while (!edge_queue.empty() || !vertex_queue.empty()) {
    if (!edge_queue.empty()) {
      const std::size_t e = edge_queue.front();
      edge_queue.pop_front();
      if (!alive[e]) continue;
      const auto witness = find_witness(e);
      if (!witness) continue;
      alive[e] = false;
      alive_set.erase(e);
      tree.edges.emplace_back(e, *witness);
      for (Player v : current[e]) {
        if (--count[v] == 1) vertex_queue.push_back(v);
      }
      continue;
    }
    const Player v = vertex_queue.front();
    vertex_queue.pop_front();
    if (count[v] != 1) continue;
    for (std::size_t f : occ[v]) {
      if (!alive[f]) continue;
      auto& members = current[f];
      members.erase(std::lower_bound(members.begin(), members.end(), v));
      count[v] = 0;
      edge_queue.push_back(f);
      break;
    }
  }

  AcyclicityResult result;
  result.acyclic = alive_set.size() <= 1;
  if (result.acyclic) result.join_tree = std::move(tree);
  return result;
}

// ---------------------------------------------------------------------------
// Triangulation

enum class TriangulationStrategy { kMinFill, kMinDegree, kExactSmall };

inline constexpr std::size_t kDefaultExactCap = 12;

/// A chordal supergraph together with a perfect elimination order for it.
struct Triangulation {
  Graph chordal;
  std::vector<Player> order;
};

namespace detail {

inline void check_permutation(std::span<const Player> order, std::size_t n) {
  if (order.size() != n) throw Error("elimination order has wrong length");
  std::vector<bool> seen(n, false);
  for (Player v : order) {
    if (v >= n || seen[v]) throw Error("elimination order is not a permutation");
    seen[v] = true;
  }
}

inline std::size_t count_fill(const std::vector<std::set<Player>>& adj,
                              Player v) {
  std::size_t missing = 0;
  for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
    for (auto b = std::next(a); b != adj[v].end(); ++b) {
      if (!adj[*a].count(*b)) ++missing;
    }
  }
  return missing;
}

/// Greedy elimination keyed by fill-in or degree; ties by smallest id.
inline std::vector<Player> greedy_order(const Graph& g, bool by_fill) {
  const std::size_t n = g.num_vertices();
  std::vector<std::set<Player>> adj(n);
  for (Player v = 0; v < n; ++v) {
    adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  auto score = [&](Player v) {
    return by_fill ? count_fill(adj, v) : adj[v].size();
  };
  std::vector<std::size_t> key(n);
  std::set<std::pair<std::size_t, Player>> queue;
  for (Player v = 0; v < n; ++v) {
    key[v] = score(v);
    queue.emplace(key[v], v);
  }
  std::vector<bool> done(n, false);
  std::vector<Player> order;
  order.reserve(n);
  while (!queue.empty()) {
    const Player v = queue.begin()->second;
    queue.erase(queue.begin());
    done[v] = true;
    order.push_back(v);
    const std::vector<Player> nbrs(adj[v].begin(), adj[v].end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[nbrs[i]].insert(nbrs[j]);
        adj[nbrs[j]].insert(nbrs[i]);
      }
    }
    for (Player u : nbrs) adj[u].erase(v);
    adj[v].clear();
    std::set<Player> affected(nbrs.begin(), nbrs.end());
    if (by_fill) {
      for (Player u : nbrs) affected.insert(adj[u].begin(), adj[u].end());
    }
    for (Player u : affected) {
      if (done[u]) continue;
      const std::size_t fresh = score(u);
      if (fresh != key[u]) {
        queue.erase({key[u], u});
        key[u] = fresh;
        queue.emplace(fresh, u);
      }
    }
  }
  return order;
}

/// Vertices outside `eliminated` and v reachable from v through `eliminated`.
inline std::size_t reach_size(const std::vector<std::uint32_t>& adj_mask,
                              std::uint32_t eliminated, Player v) {
  std::uint32_t visited = 1u << v;
  std::uint32_t frontier = 1u << v;
  std::uint32_t reached = 0;
  while (frontier) {
    const int u = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    const std::uint32_t next = adj_mask[u] & ~visited;
    visited |= next;
    reached |= next & ~eliminated;
    frontier |= next & eliminated;
  }
  return static_cast<std::size_t>(__builtin_popcount(reached));
}

/// Elimination order minimizing the largest created clique, by dynamic
/// programming over subsets of eliminated vertices.
inline std::vector<Player> exact_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  std::vector<std::uint32_t> adj_mask(n, 0);
  for (Player v = 0; v < n; ++v) {
    for (Player u : g.neighbors(v)) adj_mask[v] |= 1u << u;
  }
  const std::uint32_t full = static_cast<std::uint32_t>((1ull << n) - 1);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(std::size_t{1} << n, kInf);
  best[0] = 0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    std::size_t value = kInf;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      const std::uint32_t before = set & ~(1u << v);
      const std::size_t cost = std::max(
          best[before], reach_size(adj_mask, before, static_cast<Player>(v)));
      value = std::min(value, cost);
    }
    best[set] = value;
  }
  // Rebuild from the full set backwards: the last vertex is the one whose
  // removal achieves the optimum; prefer the smallest id at each step.
  std::vector<Player> reversed;
  std::uint32_t set = full;
  while (set) {
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      const std::uint32_t before = set & ~(1u << v);
      const std::size_t cost = std::max(
          best[before], reach_size(adj_mask, before, static_cast<Player>(v)));
      if (cost == best[set]) {
        reversed.push_back(static_cast<Player>(v));
        set = before;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace detail

/// Fill-in graph of g under the given elimination order.
inline Triangulation eliminate(const Graph& g, std::span<const Player> order) {
  const std::size_t n = g.num_vertices();
  detail::check_permutation(order, n);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::set<Player>> later(n);
  for (auto [u, v] : g.edges()) {
    if (position[u] < position[v]) {
      later[u].insert(v);
    } else {
      later[v].insert(u);
    }
  }
  Triangulation result{Graph(n), {order.begin(), order.end()}};
  for (Player v : order) {
    const std::vector<Player> nbrs(later[v].begin(), later[v].end());
    for (Player u : nbrs) result.chordal.add_edge(v, u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        Player a = nbrs[i];
        Player b = nbrs[j];
        if (position[a] > position[b]) std::swap(a, b);
        later[a].insert(b);
      }
    }
  }
  return result;
}

inline Triangulation triangulate(const Graph& g,
                                 TriangulationStrategy strategy,
                                 std::size_t exact_cap = kDefaultExactCap) {
  switch (strategy) {
    case TriangulationStrategy::kMinFill: {
      const auto order = detail::greedy_order(g, true);
      return eliminate(g, order);
    }
    case TriangulationStrategy::kMinDegree: {
      const auto order = detail::greedy_order(g, false);
      return eliminate(g, order);
    }
    case TriangulationStrategy::kExactSmall: {
      if (g.num_vertices() > exact_cap || g.num_vertices() > 24) {
        throw Error("exact triangulation is limited to " +
                    std::to_string(std::min<std::size_t>(exact_cap, 24)) +
                    " vertices, graph has " +
                    std::to_string(g.num_vertices()));
      }
      const auto order = detail::exact_order(g);
      return eliminate(g, order);
    }
  }
  throw Error("unknown triangulation strategy");
}

/// Clique tree of a chordal graph whose nodes are its maximal cliques, built
/// from a perfect elimination order. Components are chained through their
/// root cliques (empty separators).
inline CliqueTree clique_tree_from_chordal(const Graph& g,
                                           std::span<const Player> order) {
  const std::size_t n = g.num_vertices();
  detail::check_permutation(order, n);
  CliqueTree tree;
  if (n == 0) return tree;
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  // later[v]: neighbors eliminated after v (sorted by id).
  std::vector<VertexSet> later(n);
  std::vector<std::optional<Player>> parent(n);
  for (Player v = 0; v < n; ++v) {
    for (Player u : g.neighbors(v)) {
      if (position[u] > position[v]) later[v].push_back(u);
    }
    for (Player u : later[v]) {
      if (!parent[v] || position[u] < position[*parent[v]]) parent[v] = u;
    }
  }
  for (Player v = 0; v < n; ++v) {
    if (!parent[v]) continue;
    const Player p = *parent[v];
    for (Player u : later[v]) {
      if (u != p && !contains(later[p], u)) {
        throw Error("graph is not chordal under the given elimination order");
      }
    }
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rep(n, kNone);
  std::vector<std::size_t> absorbed_by(n, kNone);
  for (Player v : order) {
    if (absorbed_by[v] != kNone) {
      rep[v] = rep[absorbed_by[v]];
    } else {
      VertexSet clique = later[v];
      clique.insert(std::lower_bound(clique.begin(), clique.end(), v), v);
      rep[v] = tree.nodes.size();
      tree.nodes.push_back(std::move(clique));
    }
    if (parent[v]) {
      const Player p = *parent[v];
      // C_p is contained in C_v exactly when later[v] = {p} + later[p].
      if (absorbed_by[p] == kNone && later[v].size() == later[p].size() + 1) {
        absorbed_by[p] = v;
      }
    }
  }
  std::optional<std::size_t> first_root;
  for (Player v : order) {
    if (parent[v]) {
      if (absorbed_by[*parent[v]] != v) {
        tree.edges.emplace_back(rep[v], rep[*parent[v]]);
      }
      continue;
    }
    if (!first_root) {
      first_root = rep[v];
    } else {
      tree.edges.emplace_back(*first_root, rep[v]);
    }
  }
  return tree;
}

inline TreeDecomposition to_tree_decomposition(const CliqueTree& tree) {
  return {tree.nodes, tree.edges};
}

// ---------------------------------------------------------------------------
// Lifting decompositions of the game to clique trees of the primal graph

/// Replaces every bag c of a tree decomposition of the game graph by the
/// union of the neighborhoods of its members.
inline CliqueTree lift_tree_decomposition(const TreeDecomposition& td,
                                          const GraphicalGame& game) {
  const ValidationResult check =
      validate_tree_decomposition(td, game_graph(game));
  if (!check.ok) {
    throw Error("invalid tree decomposition (condition " +
                std::to_string(check.condition) + "): " + check.message);
  }
  CliqueTree lifted;
  lifted.edges = td.edges;
  lifted.nodes.reserve(td.bags.size());
  for (const VertexSet& bag : td.bags) {
    VertexSet sigma;
    for (Player p : bag) sigma = set_union(sigma, game.neighborhood(p));
    lifted.nodes.push_back(std::move(sigma));
  }
  const std::size_t bound = (td.width() + 1) * game.max_neighborhood_size();
  if (lifted.width() > bound) {
    throw std::logic_error("lifted tree decomposition exceeds its width bound");
  }
  return lifted;
}

/// Checks the four hypertree-decomposition conditions against h:
/// (1) every hyperedge lies inside some chi(v); (2) for each vertex the nodes
/// whose chi contains it are connected; (3) chi(v) is covered by lambda(v);
/// (4) chi of the subtree rooted at v meets the union of lambda(v) only
/// inside chi(v). Condition 0 reports malformed input.
inline ValidationResult validate_hypertree_decomposition(
    const HypertreeDecomposition& htd, const Hypergraph& h) {
  const std::size_t m = htd.chi.size();
  if (htd.lambda.size() != m) {
    return ValidationResult::failure(0, "chi and lambda sizes differ");
  }
  if (m == 0) {
    return h.edges.empty() ? ValidationResult{}
                           : ValidationResult::failure(1, "no nodes");
  }
  if (auto err = detail::tree_shape_error(m, htd.edges); !err.empty()) {
    return ValidationResult::failure(0, err);
  }
  if (htd.root >= m) return ValidationResult::failure(0, "root out of range");
  for (std::size_t v = 0; v < m; ++v) {
    if (!detail::is_sorted_set(htd.chi[v]) ||
        (!htd.chi[v].empty() && htd.chi[v].back() >= h.num_vertices)) {
      return ValidationResult::failure(
          0, "chi of node " + std::to_string(v) + " is malformed");
    }
    for (const VertexSet& e : htd.lambda[v]) {
      if (!h.find(e)) {
        return ValidationResult::failure(
            0, "lambda of node " + std::to_string(v) +
                   " names a set that is not a hyperedge");
      }
    }
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    bool covered = false;
    for (std::size_t v = 0; v < m && !covered; ++v) {
      covered = is_subset(h.edges[i], htd.chi[v]);
    }
    if (!covered) {
      return ValidationResult::failure(
          1, "hyperedge " + std::to_string(i) + " is not inside any chi");
    }
  }
  if (auto err =
          detail::running_intersection_error(h.num_vertices, htd.chi, htd.edges);
      !err.empty()) {
    return ValidationResult::failure(2, err);
  }
  std::vector<VertexSet> lambda_union(m);
  for (std::size_t v = 0; v < m; ++v) {
    for (const VertexSet& e : htd.lambda[v]) {
      lambda_union[v] = set_union(lambda_union[v], e);
    }
    if (!is_subset(htd.chi[v], lambda_union[v])) {
      return ValidationResult::failure(
          3, "chi of node " + std::to_string(v) + " is not covered by lambda");
    }
  }
  // chi(T_v) by a post-order sweep from the root.
  const auto adj = detail::tree_adjacency(m, htd.edges);
  std::vector<std::size_t> order{htd.root};
  std::vector<std::size_t> parent(m, m);
  parent[htd.root] = htd.root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c : adj[order[i]]) {
      if (parent[c] == m) {
        parent[c] = order[i];
        order.push_back(c);
      }
    }
  }
  std::vector<VertexSet> subtree = htd.chi;
  for (std::size_t i = order.size(); i-- > 1;) {
    const std::size_t v = order[i];
    subtree[parent[v]] = set_union(subtree[parent[v]], subtree[v]);
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (!is_subset(set_intersection(subtree[v], lambda_union[v]),
                   htd.chi[v])) {
      return ValidationResult::failure(
          4, "descendant condition fails at node " + std::to_string(v));
    }
  }
  return {};
}

/// Undirected copy of a hypertree decomposition of H(G) with node sets chi.
inline CliqueTree lift_hypertree_decomposition(
    const HypertreeDecomposition& htd, const GraphicalGame& game) {
  const ValidationResult check =
      validate_hypertree_decomposition(htd, game_hypergraph(game));
  if (!check.ok) {
    throw Error("invalid hypertree decomposition (condition " +
                std::to_string(check.condition) + "): " + check.message);
  }
  CliqueTree lifted{htd.chi, htd.edges};
  const std::size_t bound = htd.width() * game.max_neighborhood_size();
  if (lifted.width() > bound) {
    throw std::logic_error(
        "lifted hypertree decomposition exceeds its width bound");
  }
  return lifted;
}

/// Width-1 hypertree decomposition read off a join tree of h.
inline HypertreeDecomposition hypertree_from_join_tree(const CliqueTree& join) {
  HypertreeDecomposition htd;
  htd.chi = join.nodes;
  for (const auto& node : join.nodes) htd.lambda.push_back({node});
  htd.edges = join.edges;
  return htd;
}

/// Hypertree decomposition of H(G) obtained from a tree decomposition of the
/// game graph: lambda(c) = {N(p) : p in c} and chi(c) = union of lambda(c).
/// Width equals the largest bag size.
inline HypertreeDecomposition hypertree_from_tree_decomposition(
    const TreeDecomposition& td, const GraphicalGame& game) {
  HypertreeDecomposition htd;
  htd.edges = td.edges;
  for (const VertexSet& bag : td.bags) {
    std::vector<VertexSet> lambda;
    VertexSet chi;
    for (Player p : bag) {
      const VertexSet& hood = game.neighborhood(p);
      if (std::find(lambda.begin(), lambda.end(), hood) == lambda.end()) {
        lambda.push_back(hood);
      }
      chi = set_union(chi, hood);
    }
    htd.chi.push_back(std::move(chi));
    htd.lambda.push_back(std::move(lambda));
  }
  return htd;
}

}  // namespace ggpne

#endif  // GGPNE_STRUCTURE_HPP_
