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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and budgets are the constants below.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ggpne/ggpne.hpp"
#include "support/cli_harness.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/strategies.hpp"

namespace ggpne {
namespace {

constexpr std::uint64_t kRandomGames = 200;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr std::uint64_t kDecompositionInputs = 100;
constexpr std::uint64_t kTreeGames = 500;
constexpr std::size_t kScalingPlayers = 10'000;
constexpr double kScalingBudgetSeconds = 1.0;
constexpr double kScalingGrowthPerDecade = 15.0;
constexpr int kScalingRepeats = 15;
constexpr double kStationarityTolerance = 0.02;
constexpr std::uint64_t kChainSteps = 100'000;
constexpr std::uint64_t kChainSeed = 2026;
constexpr std::size_t kBalanceStateLimit = 64;
constexpr int kAnnealGames = 50;
constexpr int kAnnealRequired = 45;

using Rational = boost::multiprecision::cpp_rational;
using Clock = std::chrono::steady_clock;

/// Thrown by check() to stop a criterion at its first counterexample.
struct Failure {
  std::string what;
};

void check(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

std::string seed_note(std::uint64_t seed, const std::string& what) {
  return "seed " + std::to_string(seed) + ": " + what;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

std::string oracle_equivalence() {
  const auto start = Clock::now();
  std::size_t runs = 0;
  for (std::uint64_t seed = 0; seed < kRandomGames; ++seed) {
    const GraphicalGame g = testing::random_game(seed);
    const auto expected = testing::oracle_equilibria(g);
    for (const auto& [label, strategy] : testing::every_strategy(g)) {
      PipelineStrategy s = strategy;
      s.limit = std::nullopt;
      const SolveResult r = solve(g, s);
      check(r.existence == !expected.empty(), seed_note(seed, label + " existence"));
      check(decide_existence(g, s) == !expected.empty(),
            seed_note(seed, label + " decide"));
      check(r.count == BigCount(expected.size()), seed_note(seed, label + " count"));
      check(r.equilibria.size() == expected.size(), seed_note(seed, label + " list"));
      for (std::size_t i = 0; i < expected.size(); ++i) {
        check(std::equal(expected[i].begin(), expected[i].end(),
                         r.equilibria[i].begin(), r.equilibria[i].end()),
              seed_note(seed, label + " equilibrium " + std::to_string(i)));
      }
      ++runs;
    }
  }
  const double elapsed = seconds_since(start);
  check(elapsed < kOracleBudgetSeconds, "took " + fixed(elapsed) + " s");
  return std::to_string(kRandomGames) + " games, " + std::to_string(runs) +
         " solver runs, " + fixed(elapsed) + " s";
}

std::string closed_form_density() {
  std::size_t checked = 0;
  for (const auto& [name, g] : testing::all_fixtures()) {
    for (double eps : {0.0, 0.1, 0.5, 0.9}) {
      const auto mrf = build_mrf<MaxProductSemiring>(g, eps);
      for (const auto& s : testing::oracle_profiles(g)) {
        const std::size_t u = testing::oracle_unsatisfied(g, s);
        const EpsilonPower d = unnormalized_density(mrf, s);
        check(d.exponent == u && d.value(eps) == (u == 0 ? 1.0 : std::pow(eps, double(u))),
              name + " at eps " + fixed(eps, 1));
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " (game, eps, profile) triples";
}

std::string map_path() {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < kRandomGames; ++seed) {
    const GraphicalGame g = testing::random_game(seed);
    const bool has_pne = !testing::oracle_equilibria(g).empty();
    const CliqueTree tree = build_clique_tree(g, PipelineStrategy{}).tree;
    for (double eps : {0.1, 0.5, 0.9}) {
      const MapResult m =
          map_solve(load_potentials(tree, build_mrf<MaxProductSemiring>(g, eps)), eps);
      check((m.value == 1.0) == has_pne, seed_note(seed, "value vs existence"));
      if (has_pne) {
        check(is_pure_nash(g, m.argmax) &&
                  testing::oracle_unsatisfied(g, m.argmax) == 0,
              seed_note(seed, "argmax is not an equilibrium"));
      }
      ++checked;
    }
  }
  return std::to_string(checked) + " (game, eps) pairs";
}

std::string marginal_path() {
  std::size_t entries = 0;
  for (std::uint64_t seed = 0; seed < kRandomGames; ++seed) {
    const GraphicalGame g = testing::random_game(seed);
    const auto expected = testing::oracle_equilibria(g);
    const SuccinctDescription d = succinct_description(g, PipelineStrategy{});
    const auto listed = enumerate_equilibria(g, PipelineStrategy{}, std::nullopt);
    for (const auto& table : d.marginals) {
      const auto counts = testing::oracle_marginal(expected, table.members);
      for (std::size_t i = 0; i < table.size(); ++i) {
        const auto key = table.assignment(i);
        const auto it = counts.find(key);
        const std::size_t want = it == counts.end() ? 0 : it->second;
        check(table.entries[i] == BigCount(want), seed_note(seed, "marginal entry"));
        if (want > 0) {
          const bool extended = std::any_of(listed.begin(), listed.end(), [&](const auto& s) {
            for (std::size_t j = 0; j < key.size(); ++j) {
              if (s[table.members[j]] != key[j]) return false;
            }
            return true;
          });
          check(extended, seed_note(seed, "nonzero entry without an extension"));
        }
        ++entries;
      }
    }
  }
  return std::to_string(entries) + " marginal entries";
}

std::vector<Player> shuffled(Rng& rng, std::size_t n) {
  std::vector<Player> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  return order;
}

std::string structural_bounds() {
  Rng rng(5);
  std::size_t trees = 0;
  auto intersection_ok = [&](const CliqueTree& t) {
    ++trees;
    return testing::oracle_clique_intersection(t.nodes, t.edges);
  };
  for (std::uint64_t i = 0; i < kDecompositionInputs; ++i) {
    const GraphicalGame game = testing::random_game(1000 + i);
    const Graph g = game_graph(game);
    const Triangulation t = eliminate(g, shuffled(rng, g.num_vertices()));
    const TreeDecomposition td =
        to_tree_decomposition(clique_tree_from_chordal(t.chordal, t.order));
    const std::size_t hood = game.max_neighborhood_size();
    if (i % 2 == 0) {
      const CliqueTree lifted = lift_tree_decomposition(td, game);
      check(lifted.width() <= (td.width() + 1) * hood, seed_note(i, "tree lift width"));
      check(intersection_ok(lifted), seed_note(i, "tree lift intersection"));
    } else {
      const HypertreeDecomposition htd = hypertree_from_tree_decomposition(td, game);
      const CliqueTree lifted = lift_hypertree_decomposition(htd, game);
      check(lifted.width() <= htd.width() * hood, seed_note(i, "hypertree lift width"));
      check(intersection_ok(lifted), seed_note(i, "hypertree lift intersection"));
    }
    for (const auto& [label, strategy] : testing::every_strategy(game)) {
      check(intersection_ok(build_clique_tree(game, strategy).tree),
            seed_note(i, label + " intersection"));
    }
  }
  return std::to_string(kDecompositionInputs) + " decompositions, " +
         std::to_string(trees) + " clique trees checked";
}

std::string acyclicity() {
  for (std::uint64_t seed = 0; seed < kTreeGames; ++seed) {
    const GraphicalGame g = testing::random_tree_game(seed);
    const Hypergraph h = game_hypergraph(g);
    const AcyclicityResult r = grahams_algorithm(h);
    check(r.acyclic && r.join_tree, seed_note(seed, "tree game reported cyclic"));
    check(r.join_tree->nodes == h.edges &&
              validate_clique_tree(*r.join_tree, primal_graph(h)).ok &&
              testing::oracle_clique_intersection(r.join_tree->nodes,
                                                  r.join_tree->edges),
          seed_note(seed, "invalid join tree"));
  }
  const AcyclicityResult triangle = grahams_algorithm({3, {{0, 1}, {1, 2}, {0, 2}}});
  check(!triangle.acyclic, "triangle reported acyclic");
  return std::to_string(kTreeGames) + " tree games acyclic, triangle cyclic";
}

/// Equilibria of the two-strategy coordination path by a transfer matrix over
/// adjacent pairs: an end player must match its neighbor, an inner player
/// must match at least one of its two.
BigCount path_equilibria(std::size_t n) {
  if (n == 1) return 2;
  // ways[a][b]: prefixes ending in (a, b) whose players before b are happy.
  BigCount ways[2][2] = {{1, 0}, {0, 1}};
  for (std::size_t v = 2; v < n; ++v) {
    BigCount next[2][2] = {{0, 0}, {0, 0}};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
          if (a == b || b == c) next[b][c] += ways[a][b];
        }
      }
    }
    std::copy(&next[0][0], &next[0][0] + 4, &ways[0][0]);
  }
  return ways[0][0] + ways[1][1];
}

double best_time(const GraphicalGame& g) {
  const BigCount expected = path_equilibria(g.num_players());
  double best = 1e9;
  for (int i = 0; i < kScalingRepeats; ++i) {
    const auto start = Clock::now();
    const bool exists = decide_existence(g, PipelineStrategy{});
    const SolveResult r = count_equilibria(g, PipelineStrategy{});
    best = std::min(best, seconds_since(start));
    check(exists && r.count == expected, "wrong count on the path game");
  }
  return best;
}

EdgeList path_edges(std::size_t n) {
  EdgeList edges;
  for (Player v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return edges;
}

std::string scaling() {
  for (std::size_t n = 1; n <= 10; ++n) {
    const GraphicalGame small =
        coordination_game(std::vector<std::size_t>(n, 2), path_edges(n));
    check(path_equilibria(n) == testing::oracle_equilibria(small).size(),
          "transfer count disagrees with brute force at n = " + std::to_string(n));
  }
  std::vector<double> times;
  for (std::size_t n = 100; n <= kScalingPlayers; n *= 10) {
    times.push_back(
        best_time(coordination_game(std::vector<std::size_t>(n, 2), path_edges(n))));
  }
  check(times.back() < kScalingBudgetSeconds, "n = 10^4 took " + fixed(times.back()) + " s");
  for (std::size_t i = 1; i < times.size(); ++i) {
    check(times[i] <= kScalingGrowthPerDecade * times[i - 1],
          "growth x" + fixed(times[i] / times[i - 1], 1));
  }
  return "t(1e2, 1e3, 1e4) = " + fixed(times[0], 4) + ", " + fixed(times[1], 4) +
         ", " + fixed(times[2], 4) + " s";
}

double pne_frequency(const GraphicalGame& g) {
  ChainConfig cfg;
  cfg.epsilon = 0.1;
  cfg.steps = kChainSteps;
  cfg.seed = kChainSeed;
  const ChainReport r = metropolis_sample(g, cfg);
  return static_cast<double>(r.visits[0]) / static_cast<double>(r.steps);
}

bool detailed_balance(const GraphicalGame& g, const Rational& eps) {
  const auto p = transition_matrix<Rational>(g, eps);
  const auto profiles = testing::oracle_profiles(g);
  std::vector<Rational> pi;
  for (const auto& s : profiles) {
    Rational w = 1;
    for (std::size_t k = testing::oracle_unsatisfied(g, s); k > 0; --k) w *= eps;
    pi.push_back(w);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[i][j] < 0 || pi[i] * p[i][j] != pi[j] * p[j][i]) return false;
      row += p[i][j];
    }
    if (row != 1) return false;
  }
  return true;
}

std::string stationarity() {
  const double coord = pne_frequency(testing::coord2());
  const double solo = pne_frequency(testing::solo());
  check(std::abs(coord - 2.0 / 2.02) <= kStationarityTolerance, "coord2 " + fixed(coord, 4));
  check(std::abs(solo - 1.0 / 1.1) <= kStationarityTolerance, "solo " + fixed(solo, 4));
  std::vector<GraphicalGame> games;
  for (const auto& f : testing::all_fixtures()) games.push_back(f.game);
  for (std::uint64_t seed = 0; seed < kRandomGames; ++seed) {
    games.push_back(testing::random_game(seed));
  }
  std::size_t balanced = 0;
  for (const GraphicalGame& g : games) {
    std::size_t states = 1;
    for (std::size_t r : g.radices()) states *= r;
    if (states > kBalanceStateLimit) continue;
    for (const Rational& eps : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
      check(detailed_balance(g, eps), "detailed balance fails");
    }
    ++balanced;
  }
  return "coord2 " + fixed(coord, 4) + ", solo " + fixed(solo, 4) + ", " +
         std::to_string(balanced) + " games balanced";
}

std::string annealing() {
  int games = 0;
  int found = 0;
  for (std::uint64_t seed = 0; games < kAnnealGames; ++seed) {
    check(seed < 10'000, "not enough games with an equilibrium");
    const GraphicalGame g = testing::random_game(seed);
    if (testing::oracle_equilibria(g).empty()) continue;
    ++games;
    const ChainReport r = simulated_anneal(g, default_schedule(), seed);
    if (r.best_unsatisfied == 0 && is_pure_nash(g, r.best_profile)) ++found;
  }
  check(found >= kAnnealRequired, std::to_string(found) + "/" + std::to_string(games));
  const ChainReport pennies = simulated_anneal(testing::pennies(), default_schedule(), 0);
  check(pennies.best_unsatisfied == 1, "pennies best U " +
                                           std::to_string(pennies.best_unsatisfied));
  return std::to_string(found) + "/" + std::to_string(games) +
         " equilibria found, pennies best U = 1";
}

std::string golden() {
  for (const testing::GoldenCase& c : testing::golden_cases()) {
    const testing::Outcome first = testing::invoke(c.args);
    const testing::Outcome second = testing::invoke(c.args);
    check(first.code == c.code, c.name + " exit " + std::to_string(first.code));
    check(first.out == second.out, c.name + " differs across runs");
    std::ifstream in(testing::golden_path(c), std::ios::binary);
    const std::string recorded{std::istreambuf_iterator<char>(in), {}};
    check(in.good() || in.eof(), c.name + " has no recorded output");
    check(first.out == recorded, c.name + " differs from the recorded output");
  }
  const auto bad = testing::invoke({"count", testing::data_path("bad_arity.game")});
  check(bad.code == 2, "malformed game exit " + std::to_string(bad.code));
  return std::to_string(testing::golden_cases().size()) + " golden cases";
}

struct Criterion {
  int id;
  const char* name;
  std::function<std::string()> run;
};

}  // namespace
}  // namespace ggpne

int main() {
  using namespace ggpne;
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "closed-form density", closed_form_density},
      {3, "MAP path", map_path},
      {4, "marginal path", marginal_path},
      {5, "structural bounds", structural_bounds},
      {6, "acyclicity", acyclicity},
      {7, "scaling", scaling},
      {8, "sampler stationarity", stationarity},
      {9, "annealer", annealing},
      {10, "CLI golden outputs", golden},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      detail = c.run();
      pass = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += !pass;
    std::printf("%s %2d %s: %s\n", pass ? "PASS" : "FAIL", c.id, c.name, detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
