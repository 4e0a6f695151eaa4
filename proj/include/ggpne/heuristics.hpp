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

// Metropolis sampling of p_eps(x) = eps^U(x) and simulated annealing over the
// number U(x) of players not playing a best response.

#ifndef GGPNE_HEURISTICS_HPP_
#define GGPNE_HEURISTICS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/random.hpp"

namespace ggpne {

/// Number of players whose strategy is not a best response.
inline std::size_t unsatisfied_count(const GraphicalGame& game,
                                     const StrategyProfile& s) {
  game.check_profile(s);
  std::size_t count = 0;
  for (Player p = 0; p < game.num_players(); ++p) {
    if (!game.is_satisfied(p, s)) ++count;
  }
  return count;
}

struct ChainConfig {
  double epsilon = 0.2;
  std::uint64_t steps = 100'000;
  std::uint64_t seed = 0;
  /// Recompute U from scratch after every accepted move and throw on
  /// disagreement with the incremental value.
  bool check_incremental = false;
};

struct ChainReport {
  StrategyProfile best_profile;
  std::size_t best_unsatisfied = 0;
  StrategyProfile final_profile;
  /// visits[u]: steps after which the chain sat at a profile with U = u.
  std::vector<std::uint64_t> visits;
  std::uint64_t steps = 0;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  bool pne_hit = false;
  /// Step at which U = 0 was first seen (0 = the initial profile).
  std::optional<std::uint64_t> pne_step;

  double acceptance_rate() const {
    return proposals == 0 ? 0.0
                          : static_cast<double>(accepted) /
                                static_cast<double>(proposals);
  }

  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

struct AnnealStage {
  double epsilon = 0.5;
  std::uint64_t steps = 0;
};

/// eps_k = 0.5 * 0.8^k for k = 0..stages-1.
inline std::vector<AnnealStage> default_schedule(
    std::uint64_t steps_per_stage = 2000, std::size_t stages = 10) {
  std::vector<AnnealStage> schedule;
  double epsilon = 0.5;
  for (std::size_t k = 0; k < stages; ++k) {
    schedule.push_back({epsilon, steps_per_stage});
    epsilon *= 0.8;
  }
  return schedule;
}

namespace detail {

/// Metropolis chain state with per-player satisfaction bits.
class Chain {
 public:
  Chain(const GraphicalGame& game, Rng& rng) : game_(game), rng_(rng) {
    const std::size_t n = game.num_players();
    state_.resize(n);
    for (Player p = 0; p < n; ++p) {
      state_[p] = uniform_below(rng_, game.num_strategies(p));
      if (game.num_strategies(p) > 1) movable_.push_back(p);
    }
    satisfied_.resize(n);
    for (Player p = 0; p < n; ++p) {
      satisfied_[p] = game.is_satisfied(p, state_);
      if (!satisfied_[p]) ++unsatisfied_;
    }
  }

  std::size_t unsatisfied() const { return unsatisfied_; }
  const StrategyProfile& state() const { return state_; }

  /// One proposal: a uniform movable player switches to a uniform other
  /// strategy; accepted with probability min(1, eps^dU).
  /// Returns whether the move was accepted (false when nothing can move).
  bool step(double epsilon, bool check) {
    if (movable_.empty()) return false;
    const Player p = movable_[uniform_below(rng_, movable_.size())];
    const std::size_t k = game_.num_strategies(p);
    Strategy next = uniform_below(rng_, k - 1);
    if (next >= state_[p]) ++next;
    const Strategy previous = state_[p];
    state_[p] = next;
    // Dependents of p are the players whose neighborhood contains p: N(p).
    long delta = 0;
    const VertexSet& affected = game_.neighborhood(p);
    scratch_.resize(affected.size());
    for (std::size_t i = 0; i < affected.size(); ++i) {
      const bool now = game_.is_satisfied(affected[i], state_);
      scratch_[i] = now;
      delta += static_cast<long>(!now) -
               static_cast<long>(!satisfied_[affected[i]]);
    }
    bool accept = delta <= 0;
    const double u = uniform_unit(rng_);
    if (!accept) accept = u < std::pow(epsilon, static_cast<double>(delta));
    if (!accept) {
      state_[p] = previous;
      return false;
    }
    for (std::size_t i = 0; i < affected.size(); ++i) {
      satisfied_[affected[i]] = scratch_[i];
    }
    unsatisfied_ = static_cast<std::size_t>(
        static_cast<long>(unsatisfied_) + delta);
    if (check && unsatisfied_ != unsatisfied_count(game_, state_)) {
      throw std::logic_error("incremental unsatisfied count diverged");
    }
    return true;
  }

  bool can_move() const { return !movable_.empty(); }

 private:
  const GraphicalGame& game_;
  Rng& rng_;
  StrategyProfile state_;
  std::vector<Player> movable_;
  std::vector<bool> satisfied_;
  std::vector<bool> scratch_;
  std::size_t unsatisfied_ = 0;
};

inline void check_chain_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error("chain epsilon must lie in (0, 1), got " +
                std::to_string(epsilon));
  }
}

class Recorder {
 public:
  Recorder(ChainReport& report, const detail::Chain& chain)
      : report_(report), chain_(chain) {
    report_.visits.assign(chain.state().size() + 1, 0);
    report_.best_profile = chain.state();
    report_.best_unsatisfied = chain.unsatisfied();
    note(0);
  }

  void after_step(bool proposed, bool accepted) {
    ++report_.steps;
    if (proposed) ++report_.proposals;
    if (accepted) ++report_.accepted;
    ++report_.visits[chain_.unsatisfied()];
    note(report_.steps);
  }

  void finish() { report_.final_profile = chain_.state(); }

 private:
  void note(std::uint64_t step) {
    if (chain_.unsatisfied() < report_.best_unsatisfied) {
      report_.best_unsatisfied = chain_.unsatisfied();
      report_.best_profile = chain_.state();
    }
    if (chain_.unsatisfied() == 0 && !report_.pne_hit) {
      report_.pne_hit = true;
      report_.pne_step = step;
    }
  }

  ChainReport& report_;
  const detail::Chain& chain_;
};

}  // namespace detail

/// Runs the Metropolis chain from a seeded uniform profile for cfg.steps
/// proposals. Players with a single strategy are never proposed.
inline ChainReport metropolis_sample(const GraphicalGame& game,
                                     const ChainConfig& cfg) {
  detail::check_chain_epsilon(cfg.epsilon);
  Rng rng(cfg.seed);
  detail::Chain chain(game, rng);
  ChainReport report;
  detail::Recorder recorder(report, chain);
  for (std::uint64_t i = 0; i < cfg.steps; ++i) {
    const bool accepted = chain.step(cfg.epsilon, cfg.check_incremental);
    recorder.after_step(chain.can_move(), accepted);
  }
  recorder.finish();
  return report;
}

/// Metropolis stages with decreasing eps sharing one state; stops as soon as
/// an equilibrium is reached.
inline ChainReport simulated_anneal(const GraphicalGame& game,
                                    const std::vector<AnnealStage>& schedule,
                                    std::uint64_t seed,
                                    bool check_incremental = false) {
  if (schedule.empty()) throw Error("annealing schedule is empty");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    detail::check_chain_epsilon(schedule[k].epsilon);
    if (k > 0 && !(schedule[k].epsilon < schedule[k - 1].epsilon)) {
      throw Error("annealing epsilons must be strictly decreasing");
    }
  }
  Rng rng(seed);
  detail::Chain chain(game, rng);
  ChainReport report;
  detail::Recorder recorder(report, chain);
  for (const AnnealStage& stage : schedule) {
    for (std::uint64_t i = 0; i < stage.steps && chain.unsatisfied() > 0; ++i) {
      const bool accepted = chain.step(stage.epsilon, check_incremental);
      recorder.after_step(chain.can_move(), accepted);
    }
    if (chain.unsatisfied() == 0) break;
  }
  recorder.finish();
  return report;
}

/// Independent chains with seeds cfg.seed, cfg.seed + 1, ... run
/// concurrently; the report with the lowest best U (then lowest seed) wins.
inline ChainReport metropolis_chains(const GraphicalGame& game,
                                     const ChainConfig& cfg,
                                     std::size_t chains) {
  if (chains == 0) throw Error("need at least one chain");
  std::vector<std::future<ChainReport>> running;
  for (std::size_t i = 0; i < chains; ++i) {
    ChainConfig c = cfg;
    c.seed = cfg.seed + i;
    running.push_back(std::async(std::launch::async, [&game, c] {
      return metropolis_sample(game, c);
    }));
  }
  std::optional<ChainReport> best;
  for (auto& f : running) {
    ChainReport r = f.get();
    if (!best || r.best_unsatisfied < best->best_unsatisfied) best = std::move(r);
  }
  return *best;
}

/// Exact transition matrix of the Metropolis chain over all profiles in
/// lexicographic order, in an arbitrary number type (e.g. a rational).
template <typename Number>
std::vector<std::vector<Number>> transition_matrix(const GraphicalGame& game,
                                                   const Number& epsilon) {
  const std::vector<std::size_t> radices = game.radices();
  std::vector<StrategyProfile> states;
  StrategyProfile s(game.num_players(), 0);
  do {
    states.push_back(s);
  } while (next_profile(radices, s));
  auto index_of = [&](const StrategyProfile& x) {
    std::size_t index = 0;
    for (std::size_t p = 0; p < x.size(); ++p) index = index * radices[p] + x[p];
    return index;
  };
  std::vector<Player> movable;
  for (Player p = 0; p < game.num_players(); ++p) {
    if (radices[p] > 1) movable.push_back(p);
  }
  auto power = [&](std::size_t k) {
    Number r(1);
    for (std::size_t i = 0; i < k; ++i) r *= epsilon;
    return r;
  };
  const std::size_t total = states.size();
  std::vector<std::vector<Number>> matrix(total,
                                          std::vector<Number>(total, Number(0)));
  for (std::size_t i = 0; i < total; ++i) {
    const StrategyProfile& x = states[i];
    const std::size_t ux = unsatisfied_count(game, x);
    Number leaving(0);
    for (Player p : movable) {
      for (Strategy t = 0; t < radices[p]; ++t) {
        if (t == x[p]) continue;
        StrategyProfile y = x;
        y[p] = t;
        const std::size_t uy = unsatisfied_count(game, y);
        Number q = Number(1) / Number(movable.size()) /
                   Number(radices[p] - 1);
        if (uy > ux) q *= power(uy - ux);
        matrix[i][index_of(y)] += q;
        leaving += q;
      }
    }
    matrix[i][i] += Number(1) - leaving;
  }
  return matrix;
}

}  // namespace ggpne

#endif  // GGPNE_HEURISTICS_HPP_
