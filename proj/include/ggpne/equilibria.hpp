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

// End-to-end exact pipeline: game -> MRF(G, 0) -> clique tree -> calibrated
// tree -> existence, count, per-clique marginals, and equilibria.

#ifndef GGPNE_EQUILIBRIA_HPP_
#define GGPNE_EQUILIBRIA_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/junction.hpp"
#include "ggpne/mrf.hpp"
#include "ggpne/semiring.hpp"
#include "ggpne/structure.hpp"

namespace ggpne {

enum class DecompositionSource {
  kGrahamJoinTree,
  kLiftTreeDecomposition,
  kLiftHypertreeDecomposition,
  kTriangulatePrimal,
};

inline std::string_view to_string(DecompositionSource source) {
  switch (source) {
    case DecompositionSource::kGrahamJoinTree: return "graham-join-tree";
    case DecompositionSource::kLiftTreeDecomposition: return "lift-tree-decomposition";
    case DecompositionSource::kLiftHypertreeDecomposition: return "lift-hypertree-decomposition";
    case DecompositionSource::kTriangulatePrimal: return "triangulate-primal";
  }
  return "unknown";
}

inline std::string_view to_string(TriangulationStrategy strategy) {
  switch (strategy) {
    case TriangulationStrategy::kMinFill: return "min-fill";
    case TriangulationStrategy::kMinDegree: return "min-degree";
    case TriangulationStrategy::kExactSmall: return "exact-small";
  }
  return "unknown";
}

/// How the clique tree is obtained and how many equilibria to list.
struct PipelineStrategy {
  DecompositionSource source = DecompositionSource::kGrahamJoinTree;
  TriangulationStrategy triangulation = TriangulationStrategy::kMinFill;
  std::size_t exact_cap = kDefaultExactCap;
  /// Equilibria to list in solve(); nullopt lists all of them.
  std::optional<std::size_t> limit = 0;
  /// Required by kLiftTreeDecomposition (a decomposition of the game graph).
  std::optional<TreeDecomposition> tree_decomposition;
  /// Required by kLiftHypertreeDecomposition (a decomposition of H(G)).
  std::optional<HypertreeDecomposition> hypertree_decomposition;
};

struct CliqueTreePlan {
  CliqueTree tree;
  DecompositionSource source_used = DecompositionSource::kGrahamJoinTree;
  std::string notice;
};

/// Clique tree of the primal graph covering every neighborhood.
inline CliqueTreePlan build_clique_tree(const GraphicalGame& game,
                                        const PipelineStrategy& strategy) {
  CliqueTreePlan plan;
  plan.source_used = strategy.source;
  const Hypergraph h = game_hypergraph(game);
  auto triangulated = [&] {
    const Graph primal = primal_graph(h);
    const Triangulation tri =
        triangulate(primal, strategy.triangulation, strategy.exact_cap);
    return clique_tree_from_chordal(tri.chordal, tri.order);
  };
  switch (strategy.source) {
    case DecompositionSource::kGrahamJoinTree: {
      AcyclicityResult acyclic = grahams_algorithm(h);
      if (!acyclic.acyclic) {
        plan.notice = "hypergraph is cyclic; fell back to triangulate-primal";
        plan.source_used = DecompositionSource::kTriangulatePrimal;
        plan.tree = triangulated();
        break;
      }
      plan.tree = std::move(*acyclic.join_tree);
      const ValidationResult check =
          validate_clique_tree(plan.tree, primal_graph(h));
      if (!check.ok) {
        throw std::logic_error("join tree is not a clique tree of the primal "
                               "graph: " + check.message);
      }
      break;
    }
    case DecompositionSource::kLiftTreeDecomposition:
      if (!strategy.tree_decomposition) {
        throw Error("lift-tree-decomposition requires a tree decomposition");
      }
      plan.tree = lift_tree_decomposition(*strategy.tree_decomposition, game);
      break;
    case DecompositionSource::kLiftHypertreeDecomposition:
      if (!strategy.hypertree_decomposition) {
        throw Error(
            "lift-hypertree-decomposition requires a hypertree decomposition");
      }
      plan.tree =
          lift_hypertree_decomposition(*strategy.hypertree_decomposition, game);
      break;
    case DecompositionSource::kTriangulatePrimal:
      plan.tree = triangulated();
      break;
  }
  return plan;
}

/// One Counting marginal table per significant clique of MRF(G, 0).
struct SuccinctDescription {
  std::vector<PotentialTable<CountingSemiring>> marginals;
  BigCount count = 0;
  bool existence = false;
};

struct SolveStats {
  DecompositionSource source_used = DecompositionSource::kGrahamJoinTree;
  std::string notice;
  std::size_t nodes = 0;
  std::size_t width = 0;
  std::size_t message_count = 0;
  double structure_seconds = 0.0;
  double inference_seconds = 0.0;
};

struct SolveResult {
  bool existence = false;
  BigCount count = 0;
  SuccinctDescription description;
  std::vector<StrategyProfile> equilibria;
  SolveStats stats;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

/// Every equilibrium, by extending nonzero beliefs from the root outward.
/// Each nonzero entry consistent with its parent extends to an equilibrium,
/// so the search never backtracks out of a dead end.
inline std::vector<StrategyProfile> tree_guided_extension(
    const CalibratedTree<CountingSemiring>& cal, std::size_t num_players) {
  std::vector<StrategyProfile> out;
  const RootedTree& rooted = cal.rooted;
  const std::size_t m = rooted.order.size();
  StrategyProfile profile(num_players, 0);
  if (m == 0) {
    out.push_back(profile);
    return out;
  }
  std::vector<std::vector<std::size_t>> candidates(m);
  std::vector<std::size_t> next(m, 0);
  auto fill_candidates = [&](std::size_t depth) {
    const std::size_t v = rooted.order[depth];
    const auto& belief = cal.beliefs[v];
    std::vector<std::pair<std::size_t, Player>> sep;
    for (std::size_t i = 0; i < belief.members.size(); ++i) {
      if (contains(rooted.separator[v], belief.members[i])) {
        sep.emplace_back(i, belief.members[i]);
      }
    }
    candidates[depth].clear();
    next[depth] = 0;
    for (std::size_t index = 0; index < belief.size(); ++index) {
      if (belief.entries[index].is_zero()) continue;
      const auto values = belief.assignment(index);
      bool ok = true;
      for (auto [pos, p] : sep) {
        if (values[pos] != profile[p]) {
          ok = false;
          break;
        }
      }
      if (ok) candidates[depth].push_back(index);
    }
  };
  fill_candidates(0);
  std::size_t depth = 0;
  while (true) {
    if (depth == m) {
      out.push_back(profile);
      --depth;
      continue;
    }
    if (next[depth] == candidates[depth].size()) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    const std::size_t v = rooted.order[depth];
    const auto& belief = cal.beliefs[v];
    const auto values = belief.assignment(candidates[depth][next[depth]++]);
    for (std::size_t i = 0; i < values.size(); ++i) {
      profile[belief.members[i]] = values[i];
    }
    ++depth;
    if (depth < m) fill_candidates(depth);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The first `limit` equilibria in lexicographic order, fixing players in id
/// order and keeping a strategy only if the constrained mass stays nonzero.
inline std::vector<StrategyProfile> lexicographic_prefix_search(
    const LoadedCliqueTree<BooleanSemiring>& loaded, std::size_t limit) {
  std::vector<StrategyProfile> out;
  const std::size_t n = loaded.radices.size();
  if (limit == 0) return out;
  Evidence evidence(n);
  if (!constrained_total(loaded, evidence)) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // next_choice[p]: next strategy of p to try at this depth.
  std::vector<Strategy> next_choice(n, 0);
  std::size_t p = 0;
  while (true) {
    bool advanced = false;
    while (next_choice[p] < loaded.radices[p]) {
      const Strategy s = next_choice[p]++;
      evidence[p] = s;
      if (constrained_total(loaded, evidence)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      evidence[p].reset();
      next_choice[p] = 0;
      if (p == 0) break;
      --p;
      continue;
    }
    if (p + 1 == n) {
      StrategyProfile profile(n);
      for (std::size_t i = 0; i < n; ++i) profile[i] = *evidence[i];
      out.push_back(std::move(profile));
      if (out.size() == limit) break;
      continue;
    }
    ++p;
  }
  return out;
}

}  // namespace detail

inline SuccinctDescription describe(const CalibratedTree<CountingSemiring>& cal,
                                    const MarkovRandomField<CountingSemiring>& mrf) {
  SuccinctDescription d;
  d.count = cal.total();
  d.existence = !d.count.is_zero();
  for (const VertexSet& clique : mrf.cliques) {
    d.marginals.push_back(clique_marginal_table(cal, clique));
  }
  return d;
}

inline SolveResult solve(const GraphicalGame& game,
                         const PipelineStrategy& strategy) {
  using Clock = std::chrono::steady_clock;
  SolveResult result;
  const auto t0 = Clock::now();
  const auto mrf = build_mrf<CountingSemiring>(game, 0.0);
  CliqueTreePlan plan = build_clique_tree(game, strategy);
  result.stats.structure_seconds = detail::seconds_since(t0);
  result.stats.source_used = plan.source_used;
  result.stats.notice = plan.notice;
  result.stats.nodes = plan.tree.nodes.size();
  result.stats.width = plan.tree.width();

  const auto t1 = Clock::now();
  const auto loaded = load_potentials(plan.tree, mrf);
  const auto cal = calibrate(loaded);
  result.stats.message_count = cal.message_count;
  result.description = describe(cal, mrf);
  result.count = result.description.count;
  result.existence = result.description.existence;
  if (!strategy.limit || *strategy.limit > 0) {
    if (!strategy.limit || BigCount(*strategy.limit) >= result.count) {
      result.equilibria =
          detail::tree_guided_extension(cal, game.num_players());
    } else {
      const auto boolean = load_potentials(plan.tree,
                                           build_mrf<BooleanSemiring>(game, 0.0));
      result.equilibria =
          detail::lexicographic_prefix_search(boolean, *strategy.limit);
    }
  }
  result.stats.inference_seconds = detail::seconds_since(t1);
  return result;
}

/// Existence and count from the upward pass alone: after collecting, the
/// root's table is already its full belief. Leaves the description and the
/// equilibrium list empty and sends |nodes| - 1 messages.
inline SolveResult count_equilibria(const GraphicalGame& game,
                                    const PipelineStrategy& strategy) {
  using Clock = std::chrono::steady_clock;
  SolveResult result;
  const auto t0 = Clock::now();
  const auto mrf = build_mrf<CountingSemiring>(game, 0.0);
  const CliqueTreePlan plan = build_clique_tree(game, strategy);
  result.stats.structure_seconds = detail::seconds_since(t0);
  result.stats.source_used = plan.source_used;
  result.stats.notice = plan.notice;
  result.stats.nodes = plan.tree.nodes.size();
  result.stats.width = plan.tree.width();

  const auto t1 = Clock::now();
  const auto loaded = load_potentials(plan.tree, mrf);
  result.count = 1;
  if (!loaded.tables.empty()) {
    const RootedTree rooted = orient(loaded.tree);
    std::vector<PotentialTable<CountingSemiring>> upward;
    const auto partial = detail::collect(loaded.tables, rooted, upward);
    result.count = 0;
    for (const BigCount& e : partial[rooted.root].entries) result.count += e;
    result.stats.message_count = loaded.tables.size() - 1;
  }
  result.existence = !result.count.is_zero();
  result.description.count = result.count;
  result.description.existence = result.existence;
  result.stats.inference_seconds = detail::seconds_since(t1);
  return result;
}

/// Existence via Boolean calibration.
inline bool decide_existence(const GraphicalGame& game,
                             const PipelineStrategy& strategy) {
  const CliqueTreePlan plan = build_clique_tree(game, strategy);
  const auto loaded =
      load_potentials(plan.tree, build_mrf<BooleanSemiring>(game, 0.0));
  const auto cal = calibrate(loaded);
  for (const auto& belief : cal.beliefs) {
    for (bool e : belief.entries) {
      if (e) return true;
    }
  }
  return cal.beliefs.empty();
}

/// Equilibria in lexicographic order, at most `limit` of them (all when
/// limit is nullopt).
inline std::vector<StrategyProfile> enumerate_equilibria(
    const GraphicalGame& game, const PipelineStrategy& strategy,
    std::optional<std::size_t> limit) {
  PipelineStrategy s = strategy;
  s.limit = limit;
  return solve(game, s).equilibria;
}

inline SuccinctDescription succinct_description(
    const GraphicalGame& game, const PipelineStrategy& strategy) {
  PipelineStrategy s = strategy;
  s.limit = 0;
  return solve(game, s).description;
}

}  // namespace ggpne

#endif  // GGPNE_EQUILIBRIA_HPP_
