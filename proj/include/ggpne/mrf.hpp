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

// Reduction of a graphical game to a Markov random field whose unnormalized
// density is eps^U(x), U(x) being the number of players not best-responding.

#ifndef GGPNE_MRF_HPP_
#define GGPNE_MRF_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/semiring.hpp"
#include "ggpne/structure.hpp"
#include "ggpne/table.hpp"

namespace ggpne {

/// Primal graph, one variable per player with states S_p, one potential per
/// distinct neighborhood (the significant cliques).
template <Semiring S>
struct MarkovRandomField {
  Graph graph;
  std::vector<std::size_t> radices;
  std::vector<VertexSet> cliques;
  /// Players whose neighborhood is cliques[i].
  std::vector<std::vector<Player>> owners;
  std::vector<PotentialTable<S>> potentials;
  double epsilon = 0.0;

  std::size_t num_variables() const { return radices.size(); }
};

inline void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw Error("epsilon must lie in [0, 1), got " + std::to_string(epsilon));
  }
}

/// For every entry of u_p, whether p's own strategy there is a best response.
inline std::vector<bool> best_response_mask(const GraphicalGame& game,
                                            Player p) {
  const std::vector<Payoff>& table = game.payoff_table(p);
  const std::size_t stride = game.self_stride(p);
  const std::size_t radix = game.num_strategies(p);
  std::vector<bool> mask(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::size_t base = i - ((i / stride) % radix) * stride;
    bool best = true;
    for (Strategy t = 0; t < radix && best; ++t) {
      best = table[base + t * stride] <= table[i];
    }
    mask[i] = best;
  }
  return mask;
}

/// f_p: 1 when x's entry for p is a best response to the rest of x, else eps.
inline double indicator_f(const GraphicalGame& game, Player p,
                          const NeighborhoodAssignment& x, double epsilon) {
  game.check_player(p);
  check_epsilon(epsilon);
  const VertexSet& hood = game.neighborhood(p);
  if (x.players != hood || x.values.size() != hood.size()) {
    throw Error("assignment does not cover exactly the neighborhood of player " +
                std::to_string(p));
  }
  StrategyProfile s(game.num_players(), 0);
  for (std::size_t i = 0; i < hood.size(); ++i) {
    if (x.values[i] >= game.num_strategies(hood[i])) {
      throw Error("strategy out of range for player " +
                  std::to_string(hood[i]));
    }
    s[hood[i]] = x.values[i];
  }
  return game.is_satisfied(p, s) ? 1.0 : epsilon;
}

/// Builds MRF(G, eps) over semiring S. Boolean and Counting potentials only
/// represent eps = 0; MaxProduct keeps eps symbolic and records it for output.
template <Semiring S>
MarkovRandomField<S> build_mrf(const GraphicalGame& game, double epsilon) {
  check_epsilon(epsilon);
  if (S::kExactOnly && epsilon != 0.0) {
    throw Error(std::string(S::kName) + " semiring requires epsilon = 0");
  }
  MarkovRandomField<S> mrf;
  const Hypergraph h = game_hypergraph(game);
  mrf.graph = primal_graph(h);
  mrf.radices = game.radices();
  mrf.epsilon = epsilon;
  mrf.cliques = h.edges;
  mrf.owners.resize(h.edges.size());
  std::map<VertexSet, std::size_t> index;
  for (std::size_t c = 0; c < h.edges.size(); ++c) index.emplace(h.edges[c], c);
  for (Player p = 0; p < game.num_players(); ++p) {
    mrf.owners[index.at(game.neighborhood(p))].push_back(p);
  }
  for (std::size_t c = 0; c < mrf.cliques.size(); ++c) {
    auto table =
        PotentialTable<S>::filled(mrf.cliques[c], mrf.radices, S::one());
    for (Player p : mrf.owners[c]) {
      // Owners share the clique, so payoff indices coincide with table ones.
      const std::vector<bool> mask = best_response_mask(game, p);
      for (std::size_t i = 0; i < table.size(); ++i) {
        table.entries[i] = S::times(table.entries[i], S::indicator(mask[i]));
      }
    }
    mrf.potentials.push_back(std::move(table));
  }
  return mrf;
}

/// p_eps(x): product of all clique potentials at x, with Z = 1.
template <Semiring S>
typename S::value_type unnormalized_density(const MarkovRandomField<S>& mrf,
                                            const StrategyProfile& x) {
  if (x.size() != mrf.num_variables()) {
    throw Error("profile arity does not match the field");
  }
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] >= mrf.radices[p]) throw Error("strategy out of range");
  }
  typename S::value_type value = S::one();
  for (const auto& potential : mrf.potentials) {
    value = S::times(value, potential.entries[potential.index_of(x)]);
  }
  return value;
}

}  // namespace ggpne

#endif  // GGPNE_MRF_HPP_
