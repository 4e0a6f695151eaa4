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

// Game and decomposition documents. Both are JSON Lines: one JSON object per
// line, the first line being a header with "format" and "version". See
// README.md for the schemas.

#ifndef GGPNE_IO_HPP_
#define GGPNE_IO_HPP_

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ggpne/game.hpp"
#include "ggpne/structure.hpp"

namespace ggpne {

inline constexpr int kDocumentVersion = 1;
inline constexpr const char* kGameFormat = "ggpne-game";
inline constexpr const char* kDecompositionFormat = "ggpne-decomposition";
inline constexpr const char* kResultFormat = "ggpne-result";

/// Input error carrying the offending location.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

using Json = nlohmann::ordered_json;

struct JsonLine {
  std::size_t number;
  Json value;
};

inline std::vector<JsonLine> read_json_lines(std::istream& in,
                                             const std::string& source) {
  std::vector<JsonLine> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(source, number, std::string("syntax error: ") + e.what());
    }
    if (!value.is_object()) {
      throw ParseError(source, number, "expected a JSON object");
    }
    lines.push_back({number, std::move(value)});
  }
  return lines;
}

inline void check_header(const std::vector<JsonLine>& lines,
                         const std::string& source, const char* format) {
  if (lines.empty()) throw ParseError(source, 1, "empty document");
  const Json& header = lines.front().value;
  if (!header.contains("format") || header["format"] != format) {
    throw ParseError(source, lines.front().number,
                     std::string("header must declare format \"") + format +
                         "\"");
  }
  if (!header.contains("version")) {
    throw ParseError(source, lines.front().number, "missing version field");
  }
  if (header["version"] != kDocumentVersion) {
    throw ParseError(source, lines.front().number,
                     "unsupported version " + header["version"].dump());
  }
}

template <typename T>
T field(const JsonLine& line, const std::string& source, const char* key) {
  if (!line.value.contains(key)) {
    throw ParseError(source, line.number, std::string("missing field \"") +
                                              key + "\"");
  }
  try {
    return line.value.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(source, line.number,
                     std::string("field \"") + key + "\" has the wrong type");
  }
}

inline VertexSet vertex_set(const JsonLine& line, const std::string& source,
                            const Json& value, std::size_t num_vertices) {
  VertexSet set;
  try {
    set = value.get<VertexSet>();
  } catch (const Json::exception&) {
    throw ParseError(source, line.number, "expected a list of player ids");
  }
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
    throw ParseError(source, line.number, "repeated player id in set");
  }
  if (!set.empty() && set.back() >= num_vertices) {
    throw ParseError(source, line.number,
                     "unknown player " + std::to_string(set.back()));
  }
  return set;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Games

inline GraphicalGame read_game(std::istream& in,
                               const std::string& source = "<game>") {
  using detail::field;
  const auto lines = detail::read_json_lines(in, source);
  detail::check_header(lines, source, kGameFormat);
  const std::size_t n =
      detail::field<std::size_t>(lines.front(), source, "players");

  std::vector<std::optional<std::vector<std::string>>> labels(n);
  std::vector<std::pair<Player, Player>> edges;
  std::set<std::pair<Player, Player>> seen_edges;
  struct PendingTable {
    std::size_t line;
    std::vector<Payoff> table;
    std::optional<VertexSet> neighborhood;
  };
  std::vector<std::optional<PendingTable>> tables(n);
  struct PendingEntry {
    std::size_t line;
    Player player;
    std::vector<std::string> at;
    Payoff value;
  };
  std::vector<PendingEntry> entries;

  auto player_id = [&](const detail::JsonLine& line, const char* key) {
    const auto id = field<long long>(line, source, key);
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      throw ParseError(source, line.number,
                       "unknown player " + std::to_string(id));
    }
    return static_cast<Player>(id);
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::JsonLine& line = lines[i];
    const auto& v = line.value;
    if (v.contains("player")) {
      const Player p = player_id(line, "player");
      if (labels[p]) {
        throw ParseError(source, line.number,
                         "duplicate player " + std::to_string(p));
      }
      auto names = field<std::vector<std::string>>(line, source, "strategies");
      if (names.empty()) {
        throw ParseError(source, line.number,
                         "player " + std::to_string(p) + " has no strategies");
      }
      std::set<std::string> unique(names.begin(), names.end());
      if (unique.size() != names.size()) {
        throw ParseError(source, line.number, "duplicate strategy label");
      }
      labels[p] = std::move(names);
    } else if (v.contains("edge")) {
      const auto ends = field<std::vector<long long>>(line, source, "edge");
      if (ends.size() != 2) {
        throw ParseError(source, line.number, "an edge joins exactly two players");
      }
      for (long long e : ends) {
        if (e < 0 || static_cast<std::size_t>(e) >= n) {
          throw ParseError(source, line.number,
                           "unknown player " + std::to_string(e));
        }
      }
      const auto a = static_cast<Player>(ends[0]);
      const auto b = static_cast<Player>(ends[1]);
      if (a == b) {
        throw ParseError(source, line.number,
                         "self-loop edge on player " + std::to_string(a));
      }
      if (!seen_edges.emplace(std::min(a, b), std::max(a, b)).second) {
        throw ParseError(source, line.number, "duplicate edge");
      }
      edges.emplace_back(a, b);
    } else if (v.contains("payoffs")) {
      const Player p = player_id(line, "payoffs");
      if (tables[p]) {
        throw ParseError(source, line.number,
                         "duplicate payoff table for player " +
                             std::to_string(p));
      }
      PendingTable t{line.number,
                     field<std::vector<Payoff>>(line, source, "table"),
                     std::nullopt};
      if (v.contains("neighborhood")) {
        t.neighborhood = field<VertexSet>(line, source, "neighborhood");
      }
      tables[p] = std::move(t);
    } else if (v.contains("utility")) {
      entries.push_back({line.number, player_id(line, "utility"),
                         field<std::vector<std::string>>(line, source, "at"),
                         field<Payoff>(line, source, "value")});
    } else {
      throw ParseError(source, line.number, "unrecognized line");
    }
  }

  std::vector<std::vector<std::string>> strategy_labels(n);
  for (Player p = 0; p < n; ++p) {
    if (!labels[p]) {
      throw ParseError(source, lines.front().number,
                       "player " + std::to_string(p) + " is not declared");
    }
    strategy_labels[p] = *labels[p];
  }
  // Neighborhoods and table sizes, to check arity with line numbers.
  std::vector<VertexSet> hoods(n);
  for (Player p = 0; p < n; ++p) hoods[p].push_back(p);
  for (auto [a, b] : edges) {
    hoods[a].push_back(b);
    hoods[b].push_back(a);
  }
  std::vector<std::size_t> sizes(n, 1);
  for (Player p = 0; p < n; ++p) {
    std::sort(hoods[p].begin(), hoods[p].end());
    for (Player q : hoods[p]) {
      sizes[p] = detail::checked_product(sizes[p], strategy_labels[q].size());
    }
  }
  std::vector<std::vector<Payoff>> payoffs(n);
  std::vector<bool> has_entries(n, false);
  for (Player p = 0; p < n; ++p) {
    if (!tables[p]) continue;
    const PendingTable& t = *tables[p];
    if (t.neighborhood && *t.neighborhood != hoods[p]) {
      throw ParseError(source, t.line,
                       "declared neighborhood of player " + std::to_string(p) +
                           " does not match the edges");
    }
    if (t.table.size() != sizes[p]) {
      throw ParseError(source, t.line,
                       "payoff table of player " + std::to_string(p) + " has " +
                           std::to_string(t.table.size()) +
                           " entries, its neighborhood has " +
                           std::to_string(sizes[p]) + " joint strategies");
    }
    payoffs[p] = t.table;
  }
  for (const PendingEntry& e : entries) {
    const Player p = e.player;
    if (tables[p]) {
      throw ParseError(source, e.line,
                       "player " + std::to_string(p) +
                           " has both a table and utility entries");
    }
    if (!has_entries[p]) {
      payoffs[p].assign(sizes[p], 0);
      has_entries[p] = true;
    }
    if (e.at.size() != hoods[p].size()) {
      throw ParseError(source, e.line,
                       "utility entry lists " + std::to_string(e.at.size()) +
                           " strategies, neighborhood has " +
                           std::to_string(hoods[p].size()) + " players");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < e.at.size(); ++i) {
      const auto& names = strategy_labels[hoods[p][i]];
      const auto it = std::find(names.begin(), names.end(), e.at[i]);
      if (it == names.end()) {
        throw ParseError(source, e.line,
                         "unknown strategy label \"" + e.at[i] +
                             "\" for player " + std::to_string(hoods[p][i]));
      }
      index = index * names.size() + static_cast<std::size_t>(it - names.begin());
    }
    payoffs[p][index] = e.value;
  }
  for (Player p = 0; p < n; ++p) {
    if (!tables[p] && !has_entries[p]) {
      throw ParseError(source, lines.front().number,
                       "no payoffs given for player " + std::to_string(p));
    }
  }
  try {
    return GraphicalGame(std::move(strategy_labels), std::move(edges),
                         std::move(payoffs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, lines.front().number, e.what());
  }
}

inline GraphicalGame read_game_string(const std::string& text,
                                      const std::string& source = "<game>") {
  std::istringstream in(text);
  return read_game(in, source);
}

inline void write_game(std::ostream& out, const GraphicalGame& game) {
  using detail::Json;
  out << Json{{"format", kGameFormat},
              {"version", kDocumentVersion},
              {"players", game.num_players()}}
             .dump()
      << '\n';
  for (Player p = 0; p < game.num_players(); ++p) {
    out << Json{{"player", p}, {"strategies", game.strategy_labels(p)}}.dump()
        << '\n';
  }
  for (auto [a, b] : game.edges()) {
    out << Json{{"edge", {a, b}}}.dump() << '\n';
  }
  for (Player p = 0; p < game.num_players(); ++p) {
    out << Json{{"payoffs", p},
                {"neighborhood", game.neighborhood(p)},
                {"table", game.payoff_table(p)}}
               .dump()
        << '\n';
  }
}

inline std::string game_to_string(const GraphicalGame& game) {
  std::ostringstream out;
  write_game(out, game);
  return out.str();
}

// ---------------------------------------------------------------------------
// Decompositions

using Decomposition = std::variant<TreeDecomposition, HypertreeDecomposition>;

/// Reads a tree or hypertree decomposition over players [0, num_players).
inline Decomposition read_decomposition(std::istream& in,
                                        std::size_t num_players,
                                        const std::string& source =
                                            "<decomposition>") {
  using detail::field;
  const auto lines = detail::read_json_lines(in, source);
  detail::check_header(lines, source, kDecompositionFormat);
  const auto kind = field<std::string>(lines.front(), source, "kind");
  if (kind != "tree" && kind != "hypertree") {
    throw ParseError(source, lines.front().number,
                     "kind must be \"tree\" or \"hypertree\"");
  }
  const bool hyper = kind == "hypertree";
  std::map<std::size_t, std::pair<std::size_t, detail::Json>> nodes;
  std::vector<TreeEdge> edges;
  std::optional<std::size_t> root;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.value.contains("node")) {
      const auto id = field<std::size_t>(line, source, "node");
      if (!nodes.emplace(id, std::make_pair(line.number, line.value)).second) {
        throw ParseError(source, line.number,
                         "duplicate node " + std::to_string(id));
      }
    } else if (line.value.contains("edge")) {
      const auto ends = field<std::vector<std::size_t>>(line, source, "edge");
      if (ends.size() != 2) {
        throw ParseError(source, line.number, "a tree edge joins two nodes");
      }
      edges.emplace_back(ends[0], ends[1]);
    } else if (line.value.contains("root")) {
      root = field<std::size_t>(line, source, "root");
    } else {
      throw ParseError(source, line.number, "unrecognized line");
    }
  }
  std::size_t expected = 0;
  for (const auto& [id, entry] : nodes) {
    if (id != expected++) {
      throw ParseError(source, entry.first, "node ids must be 0, 1, 2, ...");
    }
  }
  for (auto [a, b] : edges) {
    if (a >= nodes.size() || b >= nodes.size()) {
      throw ParseError(source, lines.front().number,
                       "tree edge references an unknown node");
    }
  }
  if (!hyper) {
    TreeDecomposition td;
    td.edges = edges;
    for (const auto& [id, entry] : nodes) {
      const detail::JsonLine line{entry.first, entry.second};
      if (!line.value.contains("bag")) {
        throw ParseError(source, line.number, "missing field \"bag\"");
      }
      td.bags.push_back(
          detail::vertex_set(line, source, line.value["bag"], num_players));
    }
    return td;
  }
  HypertreeDecomposition htd;
  htd.edges = edges;
  htd.root = root.value_or(0);
  for (const auto& [id, entry] : nodes) {
    const detail::JsonLine line{entry.first, entry.second};
    if (!line.value.contains("chi") || !line.value.contains("lambda") ||
        !line.value["lambda"].is_array()) {
      throw ParseError(source, line.number,
                       "hypertree nodes need \"chi\" and \"lambda\"");
    }
    htd.chi.push_back(
        detail::vertex_set(line, source, line.value["chi"], num_players));
    std::vector<VertexSet> lambda;
    for (const auto& e : line.value["lambda"]) {
      lambda.push_back(detail::vertex_set(line, source, e, num_players));
    }
    htd.lambda.push_back(std::move(lambda));
  }
  return htd;
}

inline void write_decomposition(std::ostream& out, const Decomposition& d) {
  using detail::Json;
  if (const auto* td = std::get_if<TreeDecomposition>(&d)) {
    out << Json{{"format", kDecompositionFormat},
                {"version", kDocumentVersion},
                {"kind", "tree"}}
               .dump()
        << '\n';
    for (std::size_t i = 0; i < td->bags.size(); ++i) {
      out << Json{{"node", i}, {"bag", td->bags[i]}}.dump() << '\n';
    }
    for (auto [a, b] : td->edges) out << Json{{"edge", {a, b}}}.dump() << '\n';
    return;
  }
  const auto& htd = std::get<HypertreeDecomposition>(d);
  out << Json{{"format", kDecompositionFormat},
              {"version", kDocumentVersion},
              {"kind", "hypertree"}}
             .dump()
      << '\n';
  out << Json{{"root", htd.root}}.dump() << '\n';
  for (std::size_t i = 0; i < htd.chi.size(); ++i) {
    out << Json{{"node", i}, {"chi", htd.chi[i]}, {"lambda", htd.lambda[i]}}
               .dump()
        << '\n';
  }
  for (auto [a, b] : htd.edges) out << Json{{"edge", {a, b}}}.dump() << '\n';
}

}  // namespace ggpne

#endif  // GGPNE_IO_HPP_
