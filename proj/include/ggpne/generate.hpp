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

#ifndef GGPNE_GENERATE_HPP_
#define GGPNE_GENERATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/random.hpp"

namespace ggpne {

enum class GraphFamily { kPath, kTree, kCycle, kGrid, kRandomBoundedDegree };

enum class PayoffModel {
  /// Independent uniform integers in [0, max_payoff].
  kRandom,
  /// u_p = number of neighbors playing the same strategy index as p.
  kCoordination,
};

inline std::optional<GraphFamily> parse_family(std::string_view name) {
  if (name == "path") return GraphFamily::kPath;
  if (name == "tree") return GraphFamily::kTree;
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "grid") return GraphFamily::kGrid;
  if (name == "random-bounded-degree") return GraphFamily::kRandomBoundedDegree;
  return std::nullopt;
}

struct GeneratorConfig {
  GraphFamily family = GraphFamily::kRandomBoundedDegree;
  std::size_t players = 5;
  std::size_t min_strategies = 2;
  std::size_t max_strategies = 2;
  Payoff max_payoff = 9;
  /// Degree cap for tree and random-bounded-degree families (0 = none).
  std::size_t max_degree = 3;
  PayoffModel payoffs = PayoffModel::kRandom;
  std::uint64_t seed = 0;
};

using EdgeList = std::vector<std::pair<Player, Player>>;

namespace detail {

inline EdgeList random_tree(std::size_t n, std::size_t max_degree, Rng& rng) {
  EdgeList edges;
  std::vector<std::size_t> degree(n, 0);
  for (Player v = 1; v < n; ++v) {
    std::vector<Player> open;
    for (Player u = 0; u < v; ++u) {
      if (max_degree == 0 || degree[u] < max_degree) open.push_back(u);
    }
    if (open.empty()) {
      for (Player u = 0; u < v; ++u) open.push_back(u);
    }
    const Player u = open[uniform_below(rng, open.size())];
    ++degree[u];
    ++degree[v];
    edges.emplace_back(u, v);
  }
  return edges;
}

inline EdgeList random_bounded_degree(std::size_t n, std::size_t max_degree,
                                      Rng& rng) {
  EdgeList edges;
  if (n < 2) return edges;
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  const std::size_t cap = max_degree == 0 ? n : max_degree;
  const std::size_t attempts = n * cap;
  for (std::size_t i = 0; i < attempts; ++i) {
    const Player u = uniform_below(rng, n);
    const Player v = uniform_below(rng, n);
    if (u == v || present[u][v] || degree[u] >= cap || degree[v] >= cap) {
      continue;
    }
    present[u][v] = present[v][u] = true;
    ++degree[u];
    ++degree[v];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return edges;
}

}  // namespace detail

inline EdgeList generate_edges(GraphFamily family, std::size_t n,
                               std::size_t max_degree, Rng& rng) {
  EdgeList edges;
  switch (family) {
    case GraphFamily::kPath:
      for (Player v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case GraphFamily::kTree:
      edges = detail::random_tree(n, max_degree, rng);
      break;
    case GraphFamily::kCycle:
      for (Player v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      if (n >= 3) edges.emplace_back(0, n - 1);
      break;
    case GraphFamily::kGrid: {
      if (n == 0) break;
      const auto rows = static_cast<std::size_t>(
          std::floor(std::sqrt(static_cast<double>(n))));
      const std::size_t cols = (n + rows - 1) / rows;
      for (Player v = 0; v < n; ++v) {
        if ((v % cols) + 1 < cols && v + 1 < n) edges.emplace_back(v, v + 1);
        if (v + cols < n) edges.emplace_back(v, v + cols);
      }
      break;
    }
    case GraphFamily::kRandomBoundedDegree:
      edges = detail::random_bounded_degree(n, max_degree, rng);
      break;
  }
  return edges;
}

/// Game with u_p = number of neighbors (excluding p) whose strategy index
/// equals p's.
inline GraphicalGame coordination_game(std::vector<std::size_t> strategies,
                                       const EdgeList& edges) {
  const std::size_t n = strategies.size();
  std::vector<std::vector<Player>> adjacency(n);
  for (auto [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<std::vector<Payoff>> payoffs(n);
  for (Player p = 0; p < n; ++p) {
    VertexSet hood = adjacency[p];
    hood.push_back(p);
    std::sort(hood.begin(), hood.end());
    std::vector<std::size_t> radices;
    std::size_t size = 1;
    for (Player q : hood) {
      radices.push_back(strategies[q]);
      size *= strategies[q];
    }
    const std::size_t self =
        static_cast<std::size_t>(std::find(hood.begin(), hood.end(), p) - hood.begin());
    std::vector<Strategy> digits(hood.size(), 0);
    payoffs[p].resize(size);
    for (std::size_t index = 0; index < size; ++index) {
      Payoff matches = 0;
      for (std::size_t i = 0; i < hood.size(); ++i) {
        if (i != self && digits[i] == digits[self]) ++matches;
      }
      payoffs[p][index] = matches;
      next_profile(radices, digits);
    }
  }
  return GraphicalGame(numeric_labels(strategies), edges, std::move(payoffs));
}

inline GraphicalGame generate_game(const GeneratorConfig& config) {
  if (config.min_strategies == 0 ||
      config.min_strategies > config.max_strategies) {
    throw Error("strategy range must satisfy 1 <= min <= max");
  }
  Rng rng(config.seed);
  const std::size_t n = config.players;
  const EdgeList edges =
      generate_edges(config.family, n, config.max_degree, rng);
  std::vector<std::size_t> strategies(n);
  for (auto& k : strategies) {
    k = config.min_strategies +
        uniform_below(rng, config.max_strategies - config.min_strategies + 1);
  }
  if (config.payoffs == PayoffModel::kCoordination) {
    return coordination_game(std::move(strategies), edges);
  }
  std::vector<std::size_t> table_size(n, 1);
  for (Player p = 0; p < n; ++p) table_size[p] = strategies[p];
  for (auto [u, v] : edges) {
    table_size[u] = detail::checked_product(table_size[u], strategies[v]);
    table_size[v] = detail::checked_product(table_size[v], strategies[u]);
  }
  std::vector<std::vector<Payoff>> payoffs(n);
  for (Player p = 0; p < n; ++p) {
    payoffs[p].resize(table_size[p]);
    for (auto& u : payoffs[p]) u = uniform_below(rng, config.max_payoff + 1);
  }
  return GraphicalGame(numeric_labels(strategies), edges, std::move(payoffs));
}

}  // namespace ggpne

#endif  // GGPNE_GENERATE_HPP_
