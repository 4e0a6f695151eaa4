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

// Command-line front end. Exit codes: 0 success, 1 negative answer
// (`decide` found no equilibrium, `validate` rejected the decomposition),
// 2 input or usage error.

#ifndef GGPNE_CLI_HPP_
#define GGPNE_CLI_HPP_

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggpne/equilibria.hpp"
#include "ggpne/game.hpp"
#include "ggpne/generate.hpp"
#include "ggpne/heuristics.hpp"
#include "ggpne/io.hpp"
#include "ggpne/junction.hpp"
#include "ggpne/mrf.hpp"
#include "ggpne/structure.hpp"

namespace ggpne {

inline constexpr const char* kToolVersion = "ggpne 1.0.0";

namespace cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

using Json = nlohmann::ordered_json;

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return hex.str();
}

inline std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(stdin_stream), {}};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

inline Json count_table(const PotentialTable<CountingSemiring>& table) {
  Json entries = Json::array();
  for (const auto& e : table.entries) entries.push_back(to_string(e));
  return entries;
}

inline Json report_json(const ChainReport& r) {
  Json visits = Json::array();
  for (auto v : r.visits) visits.push_back(v);
  Json j;
  j["best_unsatisfied"] = r.best_unsatisfied;
  j["best_profile"] = r.best_profile;
  j["final_profile"] = r.final_profile;
  j["pne_hit"] = r.pne_hit;
  j["pne_step"] = r.pne_step ? Json(*r.pne_step) : Json(nullptr);
  j["steps"] = r.steps;
  j["proposals"] = r.proposals;
  j["accepted"] = r.accepted;
  j["acceptance_rate"] = r.acceptance_rate();
  j["visits_by_unsatisfied"] = visits;
  return j;
}

/// Collected flag values shared by the subcommands.
struct Options {
  std::string game_path;
  std::string strategy = "graham-join-tree";
  bool strategy_given = false;
  std::string triangulation = "min-fill";
  std::size_t exact_cap = kDefaultExactCap;
  std::string decomposition_path;
  long long limit = -1;
  bool limit_given = false;
  bool dump_potentials = false;
  bool timings = false;
  double epsilon = -1.0;
  std::uint64_t steps = 100'000;
  std::uint64_t seed = 0;
  std::size_t chains = 1;
  std::uint64_t steps_per_stage = 2000;
  std::size_t stages = 10;
  std::string schedule;
  // gen
  std::string family = "random-bounded-degree";
  std::size_t players = 5;
  std::size_t min_strategies = 2;
  std::size_t max_strategies = 2;
  Payoff max_payoff = 9;
  std::size_t max_degree = 3;
  std::string payoffs = "random";
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  int run(const std::string& command, const Options& opt) {
    if (command == "gen") return gen(opt);
    game_bytes_ = slurp(opt.game_path, in_);
    game_ = read_game_string(game_bytes_, opt.game_path);
    if (command == "validate") return validate(opt);
    if (command == "sample") return sample(opt);
    if (command == "anneal") return anneal(opt);
    if (command == "map") return map(opt);
    return exact(command, opt);
  }

 private:
  void emit(const Json& line) { buffer_ << line.dump() << '\n'; }

  void header(const std::string& command) {
    Json h;
    h["format"] = kResultFormat;
    h["version"] = kDocumentVersion;
    h["tool"] = kToolVersion;
    h["command"] = command;
    h["input_sha256"] = sha256_hex(game_bytes_);
    emit(h);
  }

  /// Output is assembled in memory and written once.
  int finish(int code) {
    out_ << buffer_.str();
    out_.flush();
    return code;
  }

  PipelineStrategy pipeline(const Options& opt) {
    PipelineStrategy s;
    static const std::map<std::string, DecompositionSource> sources = {
        {"graham-join-tree", DecompositionSource::kGrahamJoinTree},
        {"lift-tree-decomposition", DecompositionSource::kLiftTreeDecomposition},
        {"lift-hypertree-decomposition",
         DecompositionSource::kLiftHypertreeDecomposition},
        {"triangulate-primal", DecompositionSource::kTriangulatePrimal}};
    static const std::map<std::string, TriangulationStrategy> triangulations = {
        {"min-fill", TriangulationStrategy::kMinFill},
        {"min-degree", TriangulationStrategy::kMinDegree},
        {"exact-small", TriangulationStrategy::kExactSmall}};
    s.source = sources.at(opt.strategy);
    s.triangulation = triangulations.at(opt.triangulation);
    s.exact_cap = opt.exact_cap;
    if (!opt.decomposition_path.empty()) {
      std::istringstream text(slurp(opt.decomposition_path, in_));
      Decomposition d =
          read_decomposition(text, game_.num_players(), opt.decomposition_path);
      const bool tree = std::holds_alternative<TreeDecomposition>(d);
      const DecompositionSource implied =
          tree ? DecompositionSource::kLiftTreeDecomposition
               : DecompositionSource::kLiftHypertreeDecomposition;
      if (opt.strategy_given && s.source != implied) {
        throw Error("--strategy " + opt.strategy +
                    " conflicts with a " + (tree ? "tree" : "hypertree") +
                    " decomposition file");
      }
      s.source = implied;
      if (tree) {
        s.tree_decomposition = std::get<TreeDecomposition>(std::move(d));
      } else {
        s.hypertree_decomposition =
            std::get<HypertreeDecomposition>(std::move(d));
      }
    } else if (s.source == DecompositionSource::kLiftTreeDecomposition ||
               s.source == DecompositionSource::kLiftHypertreeDecomposition) {
      throw Error("--strategy " + opt.strategy + " needs --decomposition");
    }
    return s;
  }

  void stats(const SolveStats& st, const PipelineStrategy& s,
             const Options& opt, double wall) {
    Json j;
    j["source"] = std::string(to_string(st.source_used));
    j["triangulation"] = std::string(to_string(s.triangulation));
    j["nodes"] = st.nodes;
    j["width"] = st.width;
    j["messages"] = st.message_count;
    if (!st.notice.empty()) j["notice"] = st.notice;
    emit(Json{{"stats", j}});
    if (opt.timings) {
      emit(Json{{"timings",
                 {{"structure_seconds", st.structure_seconds},
                  {"inference_seconds", st.inference_seconds},
                  {"wall_seconds", wall}}}});
    }
  }

  void dump_potentials(const PipelineStrategy& s) {
    const auto mrf = build_mrf<CountingSemiring>(game_, 0.0);
    const auto plan = build_clique_tree(game_, s);
    const auto loaded = load_potentials(plan.tree, mrf);
    for (std::size_t c = 0; c < mrf.cliques.size(); ++c) {
      emit(Json{{"potential", mrf.cliques[c]},
                {"owners", mrf.owners[c]},
                {"node", loaded.assignment[c]},
                {"table", count_table(mrf.potentials[c])}});
    }
  }

  int exact(const std::string& command, const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    PipelineStrategy s = pipeline(opt);
    if (command == "enumerate") {
      s.limit = opt.limit_given ? std::optional<std::size_t>(
                                      static_cast<std::size_t>(opt.limit))
                                : std::nullopt;
    } else {
      s.limit = 0;
    }
    header(command);
    if (command == "decide") {
      // Boolean calibration decides; stats come from the upward counting pass.
      const bool exists = decide_existence(game_, s);
      emit(Json{{"existence", exists}});
      const SolveResult r = count_equilibria(game_, s);
      if (opt.dump_potentials) dump_potentials(s);
      stats(r.stats, s, opt, detail::seconds_since(start));
      return finish(exists ? kOk : kNegative);
    }
    const SolveResult r =
        command == "count" ? count_equilibria(game_, s) : solve(game_, s);
    emit(Json{{"existence", r.existence}, {"count", to_string(r.count)}});
    if (command == "marginals") {
      for (const auto& table : r.description.marginals) {
        emit(Json{{"marginal", table.members}, {"table", count_table(table)}});
      }
    }
    if (command == "enumerate") {
      for (const auto& eq : r.equilibria) {
        std::vector<std::string> labels;
        for (Player p = 0; p < eq.size(); ++p) {
          labels.push_back(game_.strategy_labels(p)[eq[p]]);
        }
        emit(Json{{"equilibrium", eq}, {"labels", labels}});
      }
    }
    if (opt.dump_potentials) dump_potentials(s);
    stats(r.stats, s, opt, detail::seconds_since(start));
    return finish(kOk);
  }

  int map(const Options& opt) {
    const double epsilon = opt.epsilon < 0 ? 0.5 : opt.epsilon;
    check_epsilon(epsilon);
    PipelineStrategy s = pipeline(opt);
    header("map");
    const auto plan = build_clique_tree(game_, s);
    const auto loaded = load_potentials(
        plan.tree, build_mrf<MaxProductSemiring>(game_, epsilon));
    const MapResult m = map_solve(loaded, epsilon);
    emit(Json{{"map",
               {{"epsilon", epsilon},
                {"value", m.value},
                {"unsatisfied", m.best.exponent},
                {"equilibrium", m.best.exponent == 0},
                {"profile", m.argmax}}}});
    return finish(kOk);
  }

  int sample(const Options& opt) {
    ChainConfig cfg;
    cfg.epsilon = opt.epsilon < 0 ? 0.2 : opt.epsilon;
    cfg.steps = opt.steps;
    cfg.seed = opt.seed;
    header("sample");
    const ChainReport r = opt.chains > 1 ? metropolis_chains(game_, cfg, opt.chains)
                                         : metropolis_sample(game_, cfg);
    Json j = report_json(r);
    j["epsilon"] = cfg.epsilon;
    j["seed"] = cfg.seed;
    emit(Json{{"chain", j}});
    return finish(kOk);
  }

  int anneal(const Options& opt) {
    std::vector<AnnealStage> schedule;
    if (opt.schedule.empty()) {
      schedule = default_schedule(opt.steps_per_stage, opt.stages);
    } else {
      std::istringstream list(opt.schedule);
      std::string item;
      while (std::getline(list, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw Error("schedule items look like EPSILON:STEPS, got " + item);
        }
        try {
          schedule.push_back({std::stod(item.substr(0, colon)),
                              std::stoull(item.substr(colon + 1))});
        } catch (const std::exception&) {
          throw Error("malformed schedule item " + item);
        }
      }
    }
    header("anneal");
    const ChainReport r = simulated_anneal(game_, schedule, opt.seed);
    Json j = report_json(r);
    j["seed"] = opt.seed;
    j["stages"] = schedule.size();
    emit(Json{{"chain", j}});
    return finish(kOk);
  }

  int validate(const Options& opt) {
    if (opt.decomposition_path.empty()) {
      throw Error("validate needs --decomposition");
    }
    std::istringstream text(slurp(opt.decomposition_path, in_));
    const Decomposition d =
        read_decomposition(text, game_.num_players(), opt.decomposition_path);
    header("validate");
    ValidationResult v;
    std::string kind;
    if (const auto* td = std::get_if<TreeDecomposition>(&d)) {
      kind = "tree";
      v = validate_tree_decomposition(*td, game_graph(game_));
    } else {
      kind = "hypertree";
      v = validate_hypertree_decomposition(std::get<HypertreeDecomposition>(d),
                                           game_hypergraph(game_));
    }
    Json j{{"kind", kind}, {"valid", v.ok}};
    if (!v.ok) {
      j["condition"] = v.condition;
      j["message"] = v.message;
    }
    emit(j);
    return finish(v.ok ? kOk : kNegative);
  }

  int gen(const Options& opt) {
    GeneratorConfig cfg;
    const auto family = parse_family(opt.family);
    if (!family) throw Error("unknown family " + opt.family);
    cfg.family = *family;
    cfg.players = opt.players;
    cfg.min_strategies = opt.min_strategies;
    cfg.max_strategies = std::max(opt.min_strategies, opt.max_strategies);
    cfg.max_payoff = opt.max_payoff;
    cfg.max_degree = opt.max_degree;
    cfg.seed = opt.seed;
    if (opt.payoffs == "coordination") {
      cfg.payoffs = PayoffModel::kCoordination;
    } else if (opt.payoffs != "random") {
      throw Error("unknown payoff model " + opt.payoffs);
    }
    write_game(buffer_, generate_game(cfg));
    return finish(kOk);
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream buffer_;
  std::string game_bytes_;
  GraphicalGame game_;
};

}  // namespace cli

/// Entry point shared by the ggpne executable and the tests.
inline int run(int argc, const char* const* argv, std::istream& in,
               std::ostream& out, std::ostream& err) {
  using cli::Options;
  CLI::App app{"Pure Nash equilibria of graphical games via junction trees",
               "ggpne"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options opt;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("game", opt.game_path, "Game document (- for stdin)")
        ->required();
  };
  auto add_pipeline = [&](CLI::App* sub) {
    sub->add_option("--strategy", opt.strategy,
                    "Clique-tree source (default graham-join-tree)")
        ->check(CLI::IsMember({"graham-join-tree", "lift-tree-decomposition",
                               "lift-hypertree-decomposition",
                               "triangulate-primal"}))
        ->each([&](const std::string&) { opt.strategy_given = true; });
    sub->add_option("--triangulation", opt.triangulation,
                    "Triangulation heuristic (default min-fill)")
        ->check(CLI::IsMember({"min-fill", "min-degree", "exact-small"}));
    sub->add_option("--exact-cap", opt.exact_cap,
                    "Vertex limit for exact-small (default 12)");
    sub->add_option("--decomposition", opt.decomposition_path,
                    "Tree or hypertree decomposition document to lift");
    sub->add_flag("--dump-potentials", opt.dump_potentials,
                  "Also emit every clique potential");
    sub->add_flag("--timings", opt.timings,
                  "Emit wall-clock timings (output is then not reproducible)");
  };

  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"decide", "count", "enumerate", "marginals"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "decide"
                                             ? "Decide whether a PNE exists"
                                         : std::string(name) == "count"
                                             ? "Count pure Nash equilibria"
                                         : std::string(name) == "enumerate"
                                             ? "List equilibria in lexicographic order"
                                             : "Per-neighborhood equilibrium counts");
    add_game(sub);
    add_pipeline(sub);
    subs[name] = sub;
  }
  subs["enumerate"]
      ->add_option("--limit", opt.limit, "Maximum equilibria to list (default all)")
      ->each([&](const std::string&) { opt.limit_given = true; });

  auto* map = app.add_subcommand("map", "Most probable profile of MRF(G, eps)");
  add_game(map);
  add_pipeline(map);
  map->add_option("--epsilon", opt.epsilon, "eps in [0, 1) (default 0.5)");
  subs["map"] = map;

  auto* sample = app.add_subcommand("sample", "Metropolis chain on eps^U");
  add_game(sample);
  sample->add_option("--epsilon", opt.epsilon, "eps in (0, 1) (default 0.2)");
  sample->add_option("--steps", opt.steps, "Proposals (default 100000)");
  sample->add_option("--seed", opt.seed, "RNG seed (default 0)");
  sample->add_option("--chains", opt.chains,
                     "Independent chains run in parallel (default 1)");
  subs["sample"] = sample;

  auto* anneal = app.add_subcommand("anneal", "Simulated annealing on U");
  add_game(anneal);
  anneal->add_option("--seed", opt.seed, "RNG seed (default 0)");
  anneal->add_option("--steps-per-stage", opt.steps_per_stage,
                     "Default schedule: steps per stage (default 2000)");
  anneal->add_option("--stages", opt.stages,
                     "Default schedule: eps_k = 0.5 * 0.8^k stages (default 10)");
  anneal->add_option("--schedule", opt.schedule,
                     "Explicit schedule EPS:STEPS,EPS:STEPS,...");
  subs["anneal"] = anneal;

  auto* gen = app.add_subcommand("gen", "Generate a random game document");
  gen->add_option("--family", opt.family,
                  "path | tree | cycle | grid | random-bounded-degree")
      ->check(CLI::IsMember(
          {"path", "tree", "cycle", "grid", "random-bounded-degree"}));
  gen->add_option("--players", opt.players, "Number of players (default 5)");
  gen->add_option("--strategies", opt.max_strategies,
                  "Maximum strategies per player (default 2)");
  gen->add_option("--min-strategies", opt.min_strategies,
                  "Minimum strategies per player (default 2)");
  gen->add_option("--max-payoff", opt.max_payoff,
                  "Random payoffs lie in [0, max] (default 9)");
  gen->add_option("--degree", opt.max_degree,
                  "Degree cap for tree / random families (default 3)");
  gen->add_option("--payoffs", opt.payoffs, "random | coordination")
      ->check(CLI::IsMember({"random", "coordination"}));
  gen->add_option("--seed", opt.seed, "RNG seed (default 0)");
  subs["gen"] = gen;

  auto* validate =
      app.add_subcommand("validate", "Check a decomposition against a game");
  add_game(validate);
  validate->add_option("--decomposition", opt.decomposition_path,
                       "Decomposition document")
      ->required();
  subs["validate"] = validate;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? cli::kOk : cli::kInputError;
  }
  if (opt.limit_given && opt.limit < 0) {
    err << "error: --limit must be nonnegative\n";
    return cli::kInputError;
  }
  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }
  try {
    cli::Runner runner(in, out, err);
    return runner.run(command, opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
}

}  // namespace ggpne

#endif  // GGPNE_CLI_HPP_
