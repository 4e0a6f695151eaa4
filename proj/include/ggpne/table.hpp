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

#ifndef GGPNE_TABLE_HPP_
#define GGPNE_TABLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ggpne/game.hpp"
#include "ggpne/semiring.hpp"
#include "ggpne/structure.hpp"

namespace ggpne {

/// Dense table over the joint strategies of an ascending player subset,
/// mixed-radix indexed with the last member varying fastest (the same layout
/// as payoff tables).
template <Semiring S>
struct PotentialTable {
  using value_type = typename S::value_type;

  VertexSet members;
  std::vector<std::size_t> radices;
  std::vector<value_type> entries;

  /// Table over `members` with every entry equal to `value`. `all_radices`
  /// is indexed by player.
  static PotentialTable filled(VertexSet members,
                               const std::vector<std::size_t>& all_radices,
                               const value_type& value) {
    PotentialTable t;
    t.members = std::move(members);
    std::size_t size = 1;
    for (Player p : t.members) {
      t.radices.push_back(all_radices.at(p));
      size = detail::checked_product(size, all_radices[p]);
    }
    t.entries.assign(size, value);
    return t;
  }

  std::size_t size() const { return entries.size(); }

  /// Index of the restriction of a full profile.
  std::size_t index_of(const StrategyProfile& s) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      index = index * radices[i] + s[members[i]];
    }
    return index;
  }

  std::size_t index_of(const NeighborhoodAssignment& y) const {
    if (y.players != members || y.values.size() != members.size()) {
      throw Error("assignment does not match the table's players");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (y.values[i] >= radices[i]) throw Error("strategy out of range");
      index = index * radices[i] + y.values[i];
    }
    return index;
  }

  /// Member strategies encoded by `index`.
  std::vector<Strategy> assignment(std::size_t index) const {
    std::vector<Strategy> values(members.size());
    for (std::size_t i = members.size(); i-- > 0;) {
      values[i] = index % radices[i];
      index /= radices[i];
    }
    return values;
  }

  const value_type& at(const NeighborhoodAssignment& y) const {
    return entries[index_of(y)];
  }
};

/// For every index of a table over (members, radices), the index of its
/// restriction to `onto`, which must be a subset of members.
inline std::vector<std::size_t> projection(
    const VertexSet& members, const std::vector<std::size_t>& radices,
    const VertexSet& onto) {
  if (!is_subset(onto, members)) {
    throw Error("projection target is not a subset of the table's players");
  }
  const std::size_t k = members.size();
  std::vector<std::size_t> onto_stride(k, 0);
  std::size_t stride = 1;
  for (std::size_t i = k; i-- > 0;) {
    if (contains(onto, members[i])) {
      onto_stride[i] = stride;
      stride *= radices[i];
    }
  }
  std::size_t size = 1;
  for (std::size_t r : radices) size *= r;
  std::vector<std::size_t> map(size);
  std::vector<std::size_t> digits(k, 0);
  std::size_t target = 0;
  for (std::size_t index = 0; index < size; ++index) {
    map[index] = target;
    for (std::size_t i = k; i-- > 0;) {
      if (++digits[i] < radices[i]) {
        target += onto_stride[i];
        break;
      }
      target -= onto_stride[i] * (radices[i] - 1);
      digits[i] = 0;
    }
  }
  return map;
}

/// Sums (in the semiring) a table onto a subset of its members.
template <Semiring S>
PotentialTable<S> marginalize(const PotentialTable<S>& table,
                              const VertexSet& onto) {
  PotentialTable<S> out;
  out.members = onto;
  std::size_t size = 1;
  for (Player p : onto) {
    const auto it =
        std::lower_bound(table.members.begin(), table.members.end(), p);
    if (it == table.members.end() || *it != p) {
      throw Error("cannot marginalize onto a player outside the table");
    }
    const std::size_t r =
        table.radices[static_cast<std::size_t>(it - table.members.begin())];
    out.radices.push_back(r);
    size *= r;
  }
  out.entries.assign(size, S::zero());
  const auto map = projection(table.members, table.radices, onto);
  for (std::size_t i = 0; i < table.size(); ++i) {
    S::plus_into(out.entries[map[i]], table.entries[i]);
  }
  return out;
}

/// table <- table (x) factor, where factor's members are a subset of table's.
template <Semiring S>
void multiply_in(PotentialTable<S>& table, const PotentialTable<S>& factor) {
  const auto map = projection(table.members, table.radices, factor.members);
  for (std::size_t i = 0; i < table.size(); ++i) {
    S::times_into(table.entries[i], factor.entries[map[i]]);
  }
}

}  // namespace ggpne

#endif  // GGPNE_TABLE_HPP_
