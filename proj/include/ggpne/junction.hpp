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

// Semiring message passing on clique trees: collect toward a root, then
// distribute back. No divisions are performed anywhere.

#ifndef GGPNE_JUNCTION_HPP_
#define GGPNE_JUNCTION_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/mrf.hpp"
#include "ggpne/semiring.hpp"
#include "ggpne/structure.hpp"
#include "ggpne/table.hpp"

namespace ggpne {

/// Clique tree oriented away from its root, with parent separators.
struct RootedTree {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t root = kNone;
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
  /// Breadth-first order starting at the root.
  std::vector<std::size_t> order;
  /// separator[v] = nodes[v] intersected with nodes[parent[v]].
  std::vector<VertexSet> separator;
};

/// Roots the tree at the node holding the smallest member id (lowest node
/// index on ties; empty nodes come last).
inline RootedTree orient(const CliqueTree& tree) {
  RootedTree rooted;
  const std::size_t m = tree.nodes.size();
  rooted.parent.assign(m, RootedTree::kNone);
  rooted.children.assign(m, {});
  rooted.separator.assign(m, {});
  if (m == 0) return rooted;
  std::size_t root = 0;
  auto key = [&](std::size_t i) {
    return tree.nodes[i].empty() ? std::numeric_limits<Player>::max()
                                 : tree.nodes[i].front();
  };
  for (std::size_t i = 1; i < m; ++i) {
    if (key(i) < key(root)) root = i;
  }
  rooted.root = root;
  const auto adj = detail::tree_adjacency(m, tree.edges);
  std::vector<bool> seen(m, false);
  seen[root] = true;
  rooted.order.push_back(root);
  for (std::size_t i = 0; i < rooted.order.size(); ++i) {
    const std::size_t v = rooted.order[i];
    for (std::size_t c : adj[v]) {
      if (seen[c]) continue;
      seen[c] = true;
      rooted.parent[c] = v;
      rooted.children[v].push_back(c);
      rooted.separator[c] = set_intersection(tree.nodes[c], tree.nodes[v]);
      rooted.order.push_back(c);
    }
  }
  if (rooted.order.size() != m) throw Error("clique tree is not connected");
  return rooted;
}

/// Clique tree with one potential per node: the product of the significant
/// cliques assigned to it, or all-ones when none is.
template <Semiring S>
struct LoadedCliqueTree {
  CliqueTree tree;
  std::vector<std::size_t> radices;
  std::vector<PotentialTable<S>> tables;
  /// Node receiving each significant clique, by clique index.
  std::vector<std::size_t> assignment;
};

/// Lowest-index node whose set contains `clique`.
inline std::optional<std::size_t> covering_node(const CliqueTree& tree,
                                                const VertexSet& clique) {
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (is_subset(clique, tree.nodes[i])) return i;
  }
  return std::nullopt;
}

template <Semiring S>
LoadedCliqueTree<S> load_potentials(const CliqueTree& tree,
                                    const MarkovRandomField<S>& mrf) {
  LoadedCliqueTree<S> loaded;
  loaded.tree = tree;
  loaded.radices = mrf.radices;
  loaded.tables.reserve(tree.nodes.size());
  for (const VertexSet& node : tree.nodes) {
    if (!node.empty() && node.back() >= mrf.num_variables()) {
      throw Error("clique tree mentions an unknown player");
    }
    loaded.tables.push_back(
        PotentialTable<S>::filled(node, mrf.radices, S::one()));
  }
  const auto occ = detail::occurrence_index(mrf.num_variables(), tree.nodes);
  for (std::size_t c = 0; c < mrf.cliques.size(); ++c) {
    const VertexSet& clique = mrf.cliques[c];
    std::optional<std::size_t> home;
    for (std::size_t node : occ[clique.front()]) {
      if (is_subset(clique, tree.nodes[node])) {
        home = node;
        break;
      }
    }
    if (!home) {
      std::string members;
      for (Player p : clique) members += (members.empty() ? "" : ",") + std::to_string(p);
      throw Error("significant clique {" + members +
                  "} is not contained in any clique-tree node");
    }
    multiply_in(loaded.tables[*home], mrf.potentials[c]);
    loaded.assignment.push_back(*home);
  }
  return loaded;
}

/// Player -> fixed strategy, or nullopt for free players.
using Evidence = std::vector<std::optional<Strategy>>;

namespace detail {

template <Semiring S>
void times_elementwise(PotentialTable<S>& a, const PotentialTable<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    S::times_into(a.entries[i], b.entries[i]);
  }
}

template <Semiring S>
void apply_evidence(PotentialTable<S>& table, const Evidence& evidence) {
  std::vector<std::pair<std::size_t, Strategy>> fixed;
  for (std::size_t i = 0; i < table.members.size(); ++i) {
    if (const auto& e = evidence[table.members[i]]) fixed.emplace_back(i, *e);
  }
  if (fixed.empty()) return;
  for (std::size_t index = 0; index < table.size(); ++index) {
    const auto values = table.assignment(index);
    for (auto [pos, value] : fixed) {
      if (values[pos] != value) {
        table.entries[index] = S::zero();
        break;
      }
    }
  }
}

/// Upward pass. Returns each node's table times its children's messages;
/// fills `upward` with the message each non-root node sends to its parent.
template <Semiring S>
std::vector<PotentialTable<S>> collect(
    const std::vector<PotentialTable<S>>& tables, const RootedTree& rooted,
    std::vector<PotentialTable<S>>& upward) {
  std::vector<PotentialTable<S>> partial = tables;
  upward.assign(tables.size(), {});
  for (std::size_t i = rooted.order.size(); i-- > 0;) {
    const std::size_t v = rooted.order[i];
    for (std::size_t c : rooted.children[v]) multiply_in(partial[v], upward[c]);
    if (v != rooted.root) {
      upward[v] = marginalize(partial[v], rooted.separator[v]);
    }
  }
  return partial;
}

}  // namespace detail

/// Beliefs and both directions of every separator message. For the Counting
/// semiring, beliefs[v] at y is the number of equilibria extending y.
template <Semiring S>
struct CalibratedTree {
  CliqueTree tree;
  RootedTree rooted;
  std::vector<PotentialTable<S>> beliefs;
  /// Message from node v to its parent, indexed by v (empty at the root).
  std::vector<PotentialTable<S>> upward;
  /// Message from v's parent to v, indexed by v (empty at the root).
  std::vector<PotentialTable<S>> downward;
  std::size_t message_count = 0;

  /// Sum of the root belief: the total mass of the unnormalized density.
  typename S::value_type total() const {
    if (beliefs.empty()) return S::one();
    typename S::value_type sum = S::zero();
    for (const auto& e : beliefs[rooted.root].entries) sum = S::plus(sum, e);
    return sum;
  }
};

template <Semiring S>
CalibratedTree<S> calibrate(const LoadedCliqueTree<S>& loaded) {
  CalibratedTree<S> cal;
  cal.tree = loaded.tree;
  cal.rooted = orient(loaded.tree);
  const std::size_t m = loaded.tables.size();
  cal.downward.assign(m, {});
  if (m == 0) return cal;
  cal.beliefs = detail::collect(loaded.tables, cal.rooted, cal.upward);
  cal.message_count = m - 1;
  // cal.beliefs currently holds table (x) upward messages from children.
  // Distribute: the message to child c uses everything at v except c's own
  // upward message, formed with prefix/suffix products to avoid division.
  for (std::size_t v : cal.rooted.order) {
    PotentialTable<S> base = loaded.tables[v];
    if (v != cal.rooted.root) multiply_in(base, cal.downward[v]);
    const auto& kids = cal.rooted.children[v];
    const std::size_t k = kids.size();
    std::vector<PotentialTable<S>> suffix(k + 1);
    suffix[k] =
        PotentialTable<S>::filled(base.members, loaded.radices, S::one());
    for (std::size_t i = k; i-- > 0;) {
      suffix[i] = suffix[i + 1];
      multiply_in(suffix[i], cal.upward[kids[i]]);
    }
    PotentialTable<S> prefix = base;
    for (std::size_t i = 0; i < k; ++i) {
      PotentialTable<S> outgoing = prefix;
      detail::times_elementwise(outgoing, suffix[i + 1]);
      cal.downward[kids[i]] =
          marginalize(outgoing, cal.rooted.separator[kids[i]]);
      ++cal.message_count;
      multiply_in(prefix, cal.upward[kids[i]]);
    }
    cal.beliefs[v] = std::move(prefix);
  }
  return cal;
}

/// Belief of the lowest-index covering node, summed onto `clique`.
template <Semiring S>
PotentialTable<S> clique_marginal_table(const CalibratedTree<S>& cal,
                                        const VertexSet& clique) {
  const auto node = covering_node(cal.tree, clique);
  if (!node) throw Error("clique is not contained in any clique-tree node");
  return marginalize(cal.beliefs[*node], clique);
}

template <Semiring S>
typename S::value_type clique_marginal(const CalibratedTree<S>& cal,
                                       const VertexSet& clique,
                                       const NeighborhoodAssignment& y) {
  if (y.players != clique) {
    throw Error("assignment players do not match the clique");
  }
  return clique_marginal_table(cal, clique).at(y);
}

/// Total mass of the density restricted to profiles agreeing with
/// `evidence`, by a single collect pass.
template <Semiring S>
typename S::value_type constrained_total(const LoadedCliqueTree<S>& loaded,
                                         const Evidence& evidence) {
  if (loaded.tables.empty()) return S::one();
  std::vector<PotentialTable<S>> tables = loaded.tables;
  for (auto& t : tables) detail::apply_evidence(t, evidence);
  const RootedTree rooted = orient(loaded.tree);
  std::vector<PotentialTable<S>> upward;
  const auto partial = detail::collect(tables, rooted, upward);
  typename S::value_type sum = S::zero();
  for (const auto& e : partial[rooted.root].entries) sum = S::plus(sum, e);
  return sum;
}

struct MapResult {
  /// max_x p_eps(x), kept as eps^(min_x U(x)).
  EpsilonPower best;
  /// best evaluated at the requested eps.
  double value = 0.0;
  StrategyProfile argmax;
};

/// Max-product collect followed by root-to-leaves decoding. Within each node
/// the lowest-index optimal entry consistent with its parent is chosen, which
/// makes the root pick the lexicographically smallest optimal assignment of
/// its members.
inline MapResult map_solve(const LoadedCliqueTree<MaxProductSemiring>& loaded,
                           double epsilon) {
  using S = MaxProductSemiring;
  check_epsilon(epsilon);
  MapResult result;
  result.argmax.assign(loaded.radices.size(), 0);
  if (loaded.tables.empty()) {
    result.best = S::one();
    result.value = 1.0;
    return result;
  }
  const RootedTree rooted = orient(loaded.tree);
  std::vector<PotentialTable<S>> upward;
  const auto partial = detail::collect(loaded.tables, rooted, upward);
  std::vector<bool> assigned(loaded.radices.size(), false);
  for (std::size_t v : rooted.order) {
    const PotentialTable<S>& table = partial[v];
    std::optional<std::size_t> pick;
    for (std::size_t index = 0; index < table.size(); ++index) {
      const auto values = table.assignment(index);
      bool consistent = true;
      for (std::size_t i = 0; i < values.size() && consistent; ++i) {
        const Player p = table.members[i];
        consistent = !assigned[p] || result.argmax[p] == values[i];
      }
      if (!consistent) continue;
      if (!pick || table.entries[index].exponent <
                       table.entries[*pick].exponent) {
        pick = index;
      }
    }
    if (!pick) throw std::logic_error("MAP decoding found no consistent entry");
    if (v == rooted.root) result.best = table.entries[*pick];
    const auto values = table.assignment(*pick);
    for (std::size_t i = 0; i < values.size(); ++i) {
      result.argmax[table.members[i]] = values[i];
      assigned[table.members[i]] = true;
    }
  }
  result.value = result.best.value(epsilon);
  return result;
}

}  // namespace ggpne

#endif  // GGPNE_JUNCTION_HPP_
