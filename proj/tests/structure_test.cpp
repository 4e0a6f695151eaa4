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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "ggpne/random.hpp"
#include "ggpne/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace ggpne {
namespace {

using testing::coord2;
using testing::path3;
using testing::solo;
using testing::star;

Graph make_graph(std::size_t n, const std::vector<std::pair<Player, Player>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Player v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Player u = 0; u < n; ++u) {
    for (Player v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(Rng& rng, std::size_t n, std::size_t edges) {
  Graph g(n);
  if (n < 2) return g;
  for (std::size_t i = 0; i < edges; ++i) {
    const Player u = uniform_below(rng, n);
    const Player v = uniform_below(rng, n);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

std::vector<Player> random_order(Rng& rng, std::size_t n) {
  std::vector<Player> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }
  return order;
}

void expect_clique_tree_of(const CliqueTree& tree, const Graph& g) {
  EXPECT_TRUE(validate_clique_tree(tree, g).ok);
  EXPECT_TRUE(testing::oracle_clique_intersection(tree.nodes, tree.edges));
}

TEST(Hypergraph, FixtureHypergraphs) {
  EXPECT_EQ(game_hypergraph(path3()).edges,
            (std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}}));
  EXPECT_EQ(game_hypergraph(coord2()).edges, (std::vector<VertexSet>{{0, 1}}));
  EXPECT_EQ(game_hypergraph(solo()).edges, (std::vector<VertexSet>{{0}}));
}

TEST(Hypergraph, RandomGamesSatisfyInvariants) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GraphicalGame g = testing::random_game(seed);
    const Hypergraph h = game_hypergraph(g);
    EXPECT_NO_THROW(check_hypergraph(h));
    EXPECT_LE(h.edges.size(), g.num_players());
  }
}

TEST(PrimalGraph, Examples) {
  EXPECT_EQ(primal_graph({3, {{0, 1, 2}}}), complete(3));
  EXPECT_EQ(primal_graph({3, {{0, 1}, {1, 2}}}), make_graph(3, {{0, 1}, {1, 2}}));
  const Graph primal = primal_graph(game_hypergraph(path3()));
  EXPECT_EQ(primal, complete(3));
}

TEST(PrimalGraph, ContainsGameGraph) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GraphicalGame g = testing::random_game(seed);
    EXPECT_TRUE(primal_graph(game_hypergraph(g)).is_supergraph_of(game_graph(g)));
  }
}

TEST(Graph, RejectsLoops) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(1, 1), Error);
}

TEST(Graham, Path3JoinTree) {
  const AcyclicityResult r = grahams_algorithm(game_hypergraph(path3()));
  ASSERT_TRUE(r.acyclic);
  ASSERT_TRUE(r.join_tree);
  const CliqueTree& t = *r.join_tree;
  EXPECT_EQ(t.nodes, (std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}}));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : t.edges) edges.insert({std::min(a, b), std::max(a, b)});
  EXPECT_EQ(edges, (std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

TEST(Graham, TriangleIsCyclic) {
  const AcyclicityResult r = grahams_algorithm({3, {{0, 1}, {0, 2}, {1, 2}}});
  EXPECT_FALSE(r.acyclic);
  EXPECT_FALSE(r.join_tree);
}

TEST(Graham, SingleVertex) {
  const AcyclicityResult r = grahams_algorithm({1, {{0}}});
  ASSERT_TRUE(r.acyclic);
  EXPECT_EQ(r.join_tree->nodes.size(), 1u);
  EXPECT_TRUE(r.join_tree->edges.empty());
}

TEST(Graham, TreeGamesAreAcyclicWithValidJoinTrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GraphicalGame g = testing::random_tree_game(seed);
    const Hypergraph h = game_hypergraph(g);
    const AcyclicityResult r = grahams_algorithm(h);
    ASSERT_TRUE(r.acyclic) << "seed " << seed;
    EXPECT_EQ(r.join_tree->nodes, h.edges);
    expect_clique_tree_of(*r.join_tree, primal_graph(h));
  }
}

TEST(Graham, CycleGamesOfLengthFourAreCyclic) {
  // N(p) on C4 are the 3-paths around the cycle; no hyperedge swallows another.
  const GraphicalGame g = coordination_game({2, 2, 2, 2},
                                            {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_FALSE(grahams_algorithm(game_hypergraph(g)).acyclic);
}

TEST(Graham, DisconnectedForestsAreAcyclic) {
  const GraphicalGame g = coordination_game({2, 2, 2, 2, 2}, {{0, 1}, {2, 3}});
  const Hypergraph h = game_hypergraph(g);
  const AcyclicityResult r = grahams_algorithm(h);
  ASSERT_TRUE(r.acyclic);
  expect_clique_tree_of(*r.join_tree, primal_graph(h));
}

TEST(Triangulate, FourCycleGetsOneChord) {
  const Graph c4 = cycle(4);
  const Triangulation t = triangulate(c4, TriangulationStrategy::kMinFill);
  EXPECT_EQ(t.chordal.num_edges(), 5u);
  const CliqueTree tree = clique_tree_from_chordal(t.chordal, t.order);
  EXPECT_EQ(tree.width(), 3u);
}

TEST(Triangulate, ChordalInputsGainNothing) {
  EXPECT_EQ(triangulate(complete(3), TriangulationStrategy::kMinFill).chordal,
            complete(3));
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(triangulate(path, TriangulationStrategy::kMinFill).chordal, path);
}

TEST(Triangulate, OutputIsChordalSupergraph) {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 10);
    const Graph g = random_graph(rng, n, uniform_below(rng, 3 * n));
    for (auto strategy : {TriangulationStrategy::kMinFill,
                          TriangulationStrategy::kMinDegree,
                          TriangulationStrategy::kExactSmall}) {
      const Triangulation t = triangulate(g, strategy);
      EXPECT_TRUE(t.chordal.is_supergraph_of(g));
      EXPECT_TRUE(testing::oracle_is_chordal(n, t.chordal.edges()));
      const CliqueTree tree = clique_tree_from_chordal(t.chordal, t.order);
      expect_clique_tree_of(tree, g);
      const auto maximal = testing::oracle_maximal_cliques(n, t.chordal.edges());
      const std::set<std::vector<std::size_t>> nodes(tree.nodes.begin(),
                                                     tree.nodes.end());
      EXPECT_EQ(nodes, maximal);
      EXPECT_EQ(nodes.size(), tree.nodes.size());
    }
  }
}

TEST(Triangulate, ExactSmallMatchesKnownTreewidth) {
  Rng rng(5);
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto tree_edges = generate_edges(GraphFamily::kTree, n, 0, rng);
    Graph tree(n);
    for (auto [u, v] : tree_edges) tree.add_edge(u, v);
    auto width = [](const Graph& g) {
      const Triangulation t = triangulate(g, TriangulationStrategy::kExactSmall);
      return clique_tree_from_chordal(t.chordal, t.order).width();
    };
    EXPECT_EQ(width(tree), 2u) << n;
    EXPECT_EQ(width(cycle(n)), 3u) << n;
    EXPECT_EQ(width(complete(n)), n) << n;
  }
}

TEST(Triangulate, ExactSmallNeverWiderThanHeuristics) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const Graph g = random_graph(rng, n, uniform_below(rng, 3 * n));
    auto width = [&](TriangulationStrategy s) {
      const Triangulation t = triangulate(g, s);
      return clique_tree_from_chordal(t.chordal, t.order).width();
    };
    const std::size_t exact = width(TriangulationStrategy::kExactSmall);
    EXPECT_LE(exact, width(TriangulationStrategy::kMinFill));
    EXPECT_LE(exact, width(TriangulationStrategy::kMinDegree));
  }
}

TEST(Triangulate, ExactSmallRespectsCap) {
  EXPECT_THROW(triangulate(cycle(13), TriangulationStrategy::kExactSmall), Error);
  EXPECT_NO_THROW(triangulate(cycle(13), TriangulationStrategy::kExactSmall, 13));
}

TEST(CliqueTreeFromChordal, Examples) {
  const Triangulation k3 = triangulate(complete(3), TriangulationStrategy::kMinFill);
  const CliqueTree t1 = clique_tree_from_chordal(k3.chordal, k3.order);
  EXPECT_EQ(t1.nodes, (std::vector<VertexSet>{{0, 1, 2}}));

  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  const std::vector<Player> order{0, 1, 2};
  const CliqueTree t2 = clique_tree_from_chordal(path, order);
  EXPECT_EQ(std::set<VertexSet>(t2.nodes.begin(), t2.nodes.end()),
            (std::set<VertexSet>{{0, 1}, {1, 2}}));
  EXPECT_EQ(t2.edges.size(), 1u);
  EXPECT_EQ(t2.width(), 2u);

  Graph c4 = cycle(4);
  c4.add_edge(0, 2);
  const std::vector<Player> order4{1, 3, 0, 2};
  const CliqueTree t3 = clique_tree_from_chordal(c4, order4);
  EXPECT_EQ(std::set<VertexSet>(t3.nodes.begin(), t3.nodes.end()),
            (std::set<VertexSet>{{0, 1, 2}, {0, 2, 3}}));
  EXPECT_EQ(t3.width(), 3u);
}

TEST(CliqueTreeFromChordal, RejectsNonChordalOrders) {
  const std::vector<Player> order{0, 1, 2, 3};
  EXPECT_THROW(clique_tree_from_chordal(cycle(4), order), Error);
}

TEST(CliqueTreeFromChordal, DisconnectedGraphs) {
  const Graph g = make_graph(6, {{0, 1}, {2, 3}, {3, 4}});
  const Triangulation t = triangulate(g, TriangulationStrategy::kMinFill);
  const CliqueTree tree = clique_tree_from_chordal(t.chordal, t.order);
  expect_clique_tree_of(tree, g);
  EXPECT_EQ(tree.nodes.size(), 4u);
}

TEST(ValidateTreeDecomposition, ReportsViolatedCondition) {
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(validate_tree_decomposition({{0, 1}, {1, 2}}, {{0, 1}}, path).ok);
  EXPECT_EQ(validate_tree_decomposition({{0, 1}, {1, 2}}, {}, path).condition, 0);
  EXPECT_EQ(validate_tree_decomposition({{0, 1}}, {}, path).condition, 1);
  EXPECT_EQ(validate_tree_decomposition({{0, 1}, {2}}, {{0, 1}}, path).condition, 2);
  EXPECT_EQ(validate_tree_decomposition({{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}}, path)
                .condition,
            3);
}

TEST(LiftTreeDecomposition, Examples) {
  const CliqueTree p = lift_tree_decomposition({{{0, 1}, {1, 2}}, {{0, 1}}}, path3());
  EXPECT_EQ(p.nodes, (std::vector<VertexSet>{{0, 1, 2}, {0, 1, 2}}));
  EXPECT_LE(p.width(), 2u * 3u);

  const CliqueTree s = lift_tree_decomposition({{{0}}, {}}, solo());
  EXPECT_EQ(s.nodes, (std::vector<VertexSet>{{0}}));

  const CliqueTree st = lift_tree_decomposition(
      {{{0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {0, 2}}}, star());
  for (const auto& node : st.nodes) EXPECT_EQ(node, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(st.width(), 4u);
  EXPECT_LE(st.width(), 2u * 4u);
}

TEST(LiftTreeDecomposition, RejectsInvalidInput) {
  EXPECT_THROW(lift_tree_decomposition({{{0}, {1, 2}}, {{0, 1}}}, path3()), Error);
}

TEST(LiftTreeDecomposition, RandomDecompositionsStayWithinBound) {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GraphicalGame game = testing::random_game(seed);
    const Graph g = game_graph(game);
    const auto order = random_order(rng, g.num_vertices());
    const Triangulation t = eliminate(g, order);
    const TreeDecomposition td =
        to_tree_decomposition(clique_tree_from_chordal(t.chordal, t.order));
    const CliqueTree lifted = lift_tree_decomposition(td, game);
    EXPECT_LE(lifted.width(), (td.width() + 1) * game.max_neighborhood_size());
    expect_clique_tree_of(lifted, primal_graph(game_hypergraph(game)));
  }
}

TEST(ValidateHypertree, Examples) {
  const Hypergraph h12{2, {{0, 1}}};
  EXPECT_TRUE(validate_hypertree_decomposition({{{0, 1}}, {{{0, 1}}}, {}, 0}, h12).ok);

  const Hypergraph path{3, {{0, 1}, {1, 2}}};
  const HypertreeDecomposition split{
      {{0, 1}, {1, 2}, {0, 1}},
      {{{0, 1}}, {{1, 2}}, {{0, 1}}},
      {{0, 1}, {1, 2}},
      0};
  const ValidationResult v2 = validate_hypertree_decomposition(split, path);
  EXPECT_FALSE(v2.ok);
  EXPECT_EQ(v2.condition, 2);

  const HypertreeDecomposition wide{{{0, 1, 2}}, {{{0, 1}}}, {}, 0};
  const ValidationResult v3 = validate_hypertree_decomposition(wide, path);
  EXPECT_FALSE(v3.ok);
  EXPECT_EQ(v3.condition, 3);
}

TEST(ValidateHypertree, CoverageAndDescendantConditions) {
  const Hypergraph path{3, {{0, 1}, {1, 2}}};
  const HypertreeDecomposition missing{{{0, 1}}, {{{0, 1}}}, {}, 0};
  EXPECT_EQ(validate_hypertree_decomposition(missing, path).condition, 1);

  // Root {1} with lambda {0,1} sees vertex 0 below it without holding it.
  const Hypergraph h{3, {{0, 1}, {1, 2}}};
  const HypertreeDecomposition descendant{
      {{1}, {0, 1}, {1, 2}},
      {{{0, 1}}, {{0, 1}}, {{1, 2}}},
      {{0, 1}, {0, 2}},
      0};
  const ValidationResult v = validate_hypertree_decomposition(descendant, h);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.condition, 4);

  const HypertreeDecomposition bogus{{{0, 1}}, {{{0, 2}}}, {}, 0};
  EXPECT_EQ(validate_hypertree_decomposition(bogus, path).condition, 0);
}

TEST(LiftHypertree, Examples) {
  const Hypergraph h = game_hypergraph(path3());
  const AcyclicityResult r = grahams_algorithm(h);
  const HypertreeDecomposition htd = hypertree_from_join_tree(*r.join_tree);
  EXPECT_EQ(htd.width(), 1u);
  const CliqueTree lifted = lift_hypertree_decomposition(htd, path3());
  EXPECT_EQ(lifted.nodes, (std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}}));
  EXPECT_LE(lifted.width(), path3().max_neighborhood_size());

  const CliqueTree single = lift_hypertree_decomposition(
      {{{0}}, {{{0}}}, {}, 0}, solo());
  EXPECT_EQ(single.nodes, (std::vector<VertexSet>{{0}}));
}

TEST(LiftHypertree, RandomDecompositionsStayWithinBound) {
  Rng rng(34);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GraphicalGame game = testing::random_game(seed);
    const Graph g = game_graph(game);
    const Triangulation t = eliminate(g, random_order(rng, g.num_vertices()));
    const TreeDecomposition td =
        to_tree_decomposition(clique_tree_from_chordal(t.chordal, t.order));
    const HypertreeDecomposition htd = hypertree_from_tree_decomposition(td, game);
    ASSERT_TRUE(validate_hypertree_decomposition(htd, game_hypergraph(game)).ok);
    const CliqueTree lifted = lift_hypertree_decomposition(htd, game);
    EXPECT_LE(lifted.width(), htd.width() * game.max_neighborhood_size());
    expect_clique_tree_of(lifted, primal_graph(game_hypergraph(game)));
  }
}

}  // namespace
}  // namespace ggpne
