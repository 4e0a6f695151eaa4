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

#ifndef GGPNE_GAME_HPP_
#define GGPNE_GAME_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggpne {

/// Raised for malformed games, decompositions, and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Player = std::size_t;
using Strategy = std::size_t;
using Payoff = std::uint64_t;

/// Sorted, duplicate-free set of players.
using VertexSet = std::vector<Player>;

/// One strategy index per player, indexed by player.
using StrategyProfile = std::vector<Strategy>;

/// Strategies of an ascending subset of players.
struct NeighborhoodAssignment {
  VertexSet players;
  std::vector<Strategy> values;

  friend bool operator==(const NeighborhoodAssignment&,
                         const NeighborhoodAssignment&) = default;
};

namespace detail {

inline std::size_t checked_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw Error("table size overflows size_t");
  }
  return a * b;
}

}  // namespace detail

/// A finite game on an undirected graph where each player's payoff depends
/// only on the strategies of its closed neighborhood N(p).
///
/// Payoff tables are dense over N(p) in ascending player order with the last
/// listed player varying fastest.
class GraphicalGame {
 public:
  GraphicalGame() = default;

  GraphicalGame(std::vector<std::vector<std::string>> strategy_labels,
                std::vector<std::pair<Player, Player>> edges,
                std::vector<std::vector<Payoff>> payoffs)
      : labels_(std::move(strategy_labels)),
        payoffs_(std::move(payoffs)) {
    const std::size_t n = labels_.size();
    if (payoffs_.size() != n) {
      throw Error("expected " + std::to_string(n) + " payoff tables, got " +
                  std::to_string(payoffs_.size()));
    }
    for (Player p = 0; p < n; ++p) {
      if (labels_[p].empty()) {
        throw Error("player " + std::to_string(p) + " has no strategies");
      }
    }
    adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") references an unknown player");
      }
      if (u == v) {
        throw Error("self-loop on player " + std::to_string(u));
      }
      if (std::find(adjacency_[u].begin(), adjacency_[u].end(), v) !=
          adjacency_[u].end()) {
        throw Error("duplicate edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
      }
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    neighborhoods_.resize(n);
    strides_.resize(n);
    self_position_.resize(n);
    for (Player p = 0; p < n; ++p) {
      std::sort(adjacency_[p].begin(), adjacency_[p].end());
      VertexSet& hood = neighborhoods_[p];
      hood = adjacency_[p];
      hood.insert(std::lower_bound(hood.begin(), hood.end(), p), p);
      self_position_[p] = static_cast<std::size_t>(
          std::lower_bound(hood.begin(), hood.end(), p) - hood.begin());
      std::vector<std::size_t>& stride = strides_[p];
      stride.assign(hood.size(), 1);
      std::size_t size = 1;
      for (std::size_t i = hood.size(); i-- > 0;) {
        stride[i] = size;
        size = detail::checked_product(size, labels_[hood[i]].size());
      }
      if (payoffs_[p].size() != size) {
        throw Error("payoff table of player " + std::to_string(p) + " has " +
                    std::to_string(payoffs_[p].size()) + " entries, expected " +
                    std::to_string(size));
      }
    }
  }

  std::size_t num_players() const { return labels_.size(); }
  std::size_t num_strategies(Player p) const { return labels_.at(p).size(); }
  const std::vector<std::string>& strategy_labels(Player p) const {
    return labels_.at(p);
  }
  /// Neighbors of p, excluding p, ascending.
  const VertexSet& neighbors(Player p) const { return adjacency_.at(p); }
  /// N(p): p together with its neighbors, ascending.
  const VertexSet& neighborhood(Player p) const { return neighborhoods_.at(p); }
  const std::vector<std::pair<Player, Player>>& edges() const { return edges_; }
  const std::vector<Payoff>& payoff_table(Player p) const {
    return payoffs_.at(p);
  }

  std::vector<std::size_t> radices() const {
    std::vector<std::size_t> r(num_players());
    for (Player p = 0; p < num_players(); ++p) r[p] = labels_[p].size();
    return r;
  }

  std::size_t max_neighborhood_size() const {
    std::size_t m = 0;
    for (const auto& hood : neighborhoods_) m = std::max(m, hood.size());
    return m;
  }

  void check_profile(const StrategyProfile& s) const {
    if (s.size() != num_players()) {
      throw Error("profile has " + std::to_string(s.size()) +
                  " entries, game has " + std::to_string(num_players()) +
                  " players");
    }
    for (Player p = 0; p < s.size(); ++p) {
      if (s[p] >= labels_[p].size()) {
        throw Error("strategy " + std::to_string(s[p]) +
                    " out of range for player " + std::to_string(p));
      }
    }
  }

  void check_player(Player p) const {
    if (p >= num_players()) {
      throw Error("unknown player " + std::to_string(p));
    }
  }

  /// Index into u_p for the restriction of s to N(p). No validation.
  std::size_t table_index(Player p, const StrategyProfile& s) const {
    const VertexSet& hood = neighborhoods_[p];
    const std::vector<std::size_t>& stride = strides_[p];
    std::size_t index = 0;
    for (std::size_t i = 0; i < hood.size(); ++i) index += s[hood[i]] * stride[i];
    return index;
  }

  /// Stride of p's own digit inside its payoff table.
  std::size_t self_stride(Player p) const {
    return strides_[p][self_position_[p]];
  }
  std::size_t self_position(Player p) const { return self_position_[p]; }

  /// True iff s_p is a best response to s restricted to N(p)\{p}.
  bool is_satisfied(Player p, const StrategyProfile& s) const {
    const std::vector<Payoff>& table = payoffs_[p];
    const std::size_t stride = self_stride(p);
    const std::size_t here = table_index(p, s);
    const std::size_t base = here - s[p] * stride;
    const Payoff mine = table[here];
    for (Strategy t = 0; t < labels_[p].size(); ++t) {
      if (table[base + t * stride] > mine) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<Player>> adjacency_;
  std::vector<std::pair<Player, Player>> edges_;
  std::vector<VertexSet> neighborhoods_;
  std::vector<std::vector<std::size_t>> strides_;
  std::vector<std::size_t> self_position_;
  std::vector<std::vector<Payoff>> payoffs_;
};

/// Strategy labels "0", "1", ... for each of the given counts.
inline std::vector<std::vector<std::string>> numeric_labels(
    const std::vector<std::size_t>& counts) {
  std::vector<std::vector<std::string>> labels(counts.size());
  for (std::size_t p = 0; p < counts.size(); ++p) {
    for (std::size_t s = 0; s < counts[p]; ++s) {
      labels[p].push_back(std::to_string(s));
    }
  }
  return labels;
}

/// u_p at the restriction of s to N(p).
inline Payoff payoff(const GraphicalGame& game, Player p,
                     const StrategyProfile& s) {
  game.check_player(p);
  game.check_profile(s);
  return game.payoff_table(p)[game.table_index(p, s)];
}

/// All strategies of p maximizing u_p against the given neighbor strategies,
/// ascending. Never empty.
inline std::vector<Strategy> best_response_set(
    const GraphicalGame& game, Player p,
    const NeighborhoodAssignment& neighbors) {
  game.check_player(p);
  const VertexSet& expected = game.neighbors(p);
  if (neighbors.players != expected ||
      neighbors.values.size() != expected.size()) {
    throw Error("assignment does not cover exactly the neighbors of player " +
                std::to_string(p));
  }
  StrategyProfile s(game.num_players(), 0);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (neighbors.values[i] >= game.num_strategies(expected[i])) {
      throw Error("strategy out of range for player " +
                  std::to_string(expected[i]));
    }
    s[expected[i]] = neighbors.values[i];
  }
  const std::vector<Payoff>& table = game.payoff_table(p);
  const std::size_t base = game.table_index(p, s);
  const std::size_t stride = game.self_stride(p);
  Payoff best = 0;
  std::vector<Strategy> result;
  for (Strategy t = 0; t < game.num_strategies(p); ++t) {
    const Payoff value = table[base + t * stride];
    if (result.empty() || value > best) {
      best = value;
      result.assign(1, t);
    } else if (value == best) {
      result.push_back(t);
    }
  }
  return result;
}

inline bool is_pure_nash(const GraphicalGame& game, const StrategyProfile& s) {
  game.check_profile(s);
  for (Player p = 0; p < game.num_players(); ++p) {
    if (!game.is_satisfied(p, s)) return false;
  }
  return true;
}

/// Advances s to the next profile in lexicographic order (last player
/// fastest). Returns false after the last profile.
inline bool next_profile(const std::vector<std::size_t>& radices,
                         StrategyProfile& s) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (++s[i] < radices[i]) return true;
    s[i] = 0;
  }
  return false;
}

inline constexpr std::size_t kDefaultProfileCap = 10'000'000;

/// Exhaustive PNE enumeration over all of S. Lexicographic order.
inline std::vector<StrategyProfile> brute_force_equilibria(
    const GraphicalGame& game, std::size_t cap = kDefaultProfileCap) {
  const std::vector<std::size_t> radices = game.radices();
  std::size_t total = 1;
  for (std::size_t r : radices) {
    if (r != 0 && total > cap / r) {
      throw Error("profile space exceeds the brute-force cap of " +
                  std::to_string(cap));
    }
    total *= r;
  }
  if (total > cap) {
    throw Error("profile space exceeds the brute-force cap of " +
                std::to_string(cap));
  }
  std::vector<StrategyProfile> result;
  StrategyProfile s(game.num_players(), 0);
  do {
    bool ok = true;
    for (Player p = 0; p < game.num_players() && ok; ++p) {
      ok = game.is_satisfied(p, s);
    }
    if (ok) result.push_back(s);
  } while (next_profile(radices, s));
  return result;
}

}  // namespace ggpne

#endif  // GGPNE_GAME_HPP_
