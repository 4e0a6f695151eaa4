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

// Builds a three-player coordination path, prints every pure equilibrium and
// the per-neighborhood counts, then runs the annealer on the same game.

#include <iostream>

#include "ggpne/ggpne.hpp"

int main() {
  using namespace ggpne;
  const GraphicalGame game = coordination_game({2, 2, 2}, {{0, 1}, {1, 2}});

  PipelineStrategy strategy;
  strategy.limit = std::nullopt;
  const SolveResult result = solve(game, strategy);
  std::cout << "equilibria: " << to_string(result.count) << '\n';
  for (const StrategyProfile& s : result.equilibria) {
    std::cout << "  (";
    for (std::size_t p = 0; p < s.size(); ++p) {
      std::cout << (p ? "," : "") << s[p];
    }
    std::cout << ")\n";
  }
  for (const auto& table : result.description.marginals) {
    std::cout << "clique {";
    for (std::size_t i = 0; i < table.members.size(); ++i) {
      std::cout << (i ? "," : "") << table.members[i];
    }
    std::cout << "}:";
    for (const auto& e : table.entries) std::cout << ' ' << to_string(e);
    std::cout << '\n';
  }

  const ChainReport anneal = simulated_anneal(game, default_schedule(), 7);
  std::cout << "annealer best U = " << anneal.best_unsatisfied << '\n';
  return 0;
}
