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

// Small named games shared by the tests. Players are numbered from 0.

#ifndef GGPNE_TESTS_SUPPORT_FIXTURES_HPP_
#define GGPNE_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/generate.hpp"

namespace ggpne::testing {

/// Two players on one edge, u_p = 1 iff the strategies agree.
inline GraphicalGame coord2() {
  return GraphicalGame({{"0", "1"}, {"0", "1"}}, {{0, 1}},
                       {{1, 0, 0, 1}, {1, 0, 0, 1}});
}

/// Matching pennies: player 0 wants to match, player 1 to differ.
inline GraphicalGame pennies() {
  return GraphicalGame({{"0", "1"}, {"0", "1"}}, {{0, 1}},
                       {{1, 0, 0, 1}, {0, 1, 1, 0}});
}

/// One player with strategies a, b and u(a) = 2, u(b) = 1.
inline GraphicalGame solo() {
  return GraphicalGame({{"a", "b"}}, {}, {{2, 1}});
}

/// Path 0-1-2, u_p = number of neighbors matching p.
inline GraphicalGame path3() {
  return coordination_game({2, 2, 2}, {{0, 1}, {1, 2}});
}

/// Star with center 0 and leaves 1..3, coordination payoffs.
inline GraphicalGame star() {
  return coordination_game({2, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}});
}

struct NamedGame {
  std::string name;
  GraphicalGame game;
};

inline std::vector<NamedGame> all_fixtures() {
  return {{"coord2", coord2()}, {"pennies", pennies()}, {"solo", solo()},
          {"path3", path3()},   {"star", star()}};
}

/// Seeded random game on a bounded-degree graph: n in [1, max_players],
/// |S_p| in [min_strategies, max_strategies], payoffs in [0, 9].
inline GraphicalGame random_game(std::uint64_t seed, std::size_t max_players = 7,
                                 std::size_t min_strategies = 1,
                                 std::size_t max_strategies = 3,
                                 std::size_t max_degree = 3) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  GeneratorConfig cfg;
  cfg.family = GraphFamily::kRandomBoundedDegree;
  cfg.players = 1 + uniform_below(rng, max_players);
  cfg.min_strategies = min_strategies;
  cfg.max_strategies = max_strategies;
  cfg.max_degree = max_degree;
  cfg.max_payoff = 9;
  cfg.seed = rng();
  return generate_game(cfg);
}

/// Seeded random tree-structured game.
inline GraphicalGame random_tree_game(std::uint64_t seed,
                                      std::size_t max_players = 12) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 7);
  GeneratorConfig cfg;
  cfg.family = GraphFamily::kTree;
  cfg.players = 1 + uniform_below(rng, max_players);
  cfg.min_strategies = 1;
  cfg.max_strategies = 3;
  cfg.max_degree = 0;
  cfg.seed = rng();
  return generate_game(cfg);
}

}  // namespace ggpne::testing

#endif  // GGPNE_TESTS_SUPPORT_FIXTURES_HPP_
