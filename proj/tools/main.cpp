// Copyright 2026 The Ambigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ambigame/coordination.hpp"
#include "ambigame/equilibrium.hpp"
#include "ambigame/json_io.hpp"
#include "ambigame/preferences.hpp"
#include "ambigame/trade.hpp"
#include "ambigame/version.hpp"

namespace {

using ambigame::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // verified negative finding
constexpr int kExitError = 2;     // IO, schema, or usage error

struct Invocation {
  std::string command;
  json inputs = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void add_input(Invocation& inv, const std::string& role, const std::string& path) {
  inv.inputs[role] = json{{"path", path}, {"digest", ambigame::file_digest(path)}};
}

// Reports are byte-identical for a fixed (input, seed, version); wall time
// goes to stderr only.
int emit(const Invocation& inv, json results, int exit_code) {
  json report;
  report["command"] = inv.command;
  report["engine_version"] = ambigame::kEngineVersion;
  report["inputs"] = inv.inputs;
  report["results"] = std::move(results);
  std::cout << report.dump(2) << "\n";
  const auto elapsed = std::chrono::steady_clock::now() - inv.start;
  std::cerr << "# " << inv.command << " finished in "
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << " ms\n";
  return exit_code;
}

json rational_json(const Rational& r) { return ambigame::rational_to_string(r); }

json witness_json(const ambigame::GameWithAmbiguity& game,
                  const ambigame::DeviationWitness& witness) {
  json deviation = json::object();
  for (std::size_t a = 0; a < witness.deviation.weights.size(); ++a) {
    if (witness.deviation.weights[a] != 0) {
      deviation[game.actions(witness.player)[a]] = rational_json(witness.deviation.weights[a]);
    }
  }
  return json{
      {"player", game.players()[witness.player]},
      {"type", game.partition(witness.player)[witness.cell].name},
      {"deviation", std::move(deviation)},
      {"current_worst", rational_json(witness.before_worst)},
      {"current_best", rational_json(witness.before_best)},
      {"deviation_worst", rational_json(witness.after_worst)},
      {"deviation_best", rational_json(witness.after_best)},
  };
}

int run_solve(Invocation& inv, const std::string& game_path, const std::string& concept_name,
              const std::string& strategies, std::uint64_t budget, int jobs, std::uint64_t seed,
              int max_rounds, unsigned max_denominator) {
  add_input(inv, "game", game_path);
  const ambigame::GameWithAmbiguity game =
      ambigame::validate_game(ambigame::game_from_json(ambigame::load_json_file(game_path)));
  const auto concept_kind = ambigame::concept_by_name(concept_name);
  if (!concept_kind) throw ambigame::Error(ambigame::ErrorCode::SchemaError,
                                           "unknown concept \"" + concept_name + "\"");

  if (strategies == "pure") {
    ambigame::EnumerationOptions options;
    options.budget = budget;
    options.jobs = jobs;
    const auto equilibria = concept_kind == ambigame::SolutionConcept::Lexne
                                ? ambigame::enumerate_pure_lexne(game, options)
                                : ambigame::enumerate_pure_minne(game, options);
    json list = json::array();
    for (const auto& profile : equilibria) list.push_back(ambigame::profile_to_json(game, profile));
    return emit(inv,
                json{{"concept", concept_name},
                     {"strategies", "pure"},
                     {"count", equilibria.size()},
                     {"equilibria", std::move(list)}},
                kExitOk);
  }
  if (strategies != "mixed") {
    throw ambigame::Error(ambigame::ErrorCode::SchemaError,
                          "unknown strategies \"" + strategies + "\"");
  }
  if (concept_kind == ambigame::SolutionConcept::Lexne) {
    throw ambigame::Error(ambigame::ErrorCode::SchemaError, "mixed LEXNE: verification only");
  }
  ambigame::MixedSearchConfig config;
  config.max_rounds = max_rounds;
  config.seed = seed;
  config.max_denominator = max_denominator;
  const ambigame::MixedSearchResult result = ambigame::search_mixed_minne(game, config);
  json out{{"concept", concept_name}, {"strategies", "mixed"}, {"seed", seed},
           {"trace", result.trace}};
  if (result.profile) {
    out["found"] = true;
    out["profile"] = ambigame::profile_to_json(game, *result.profile);
  } else {
    out["found"] = false;
  }
  return emit(inv, std::move(out), kExitOk);
}

int run_verify(Invocation& inv, const std::string& game_path, const std::string& profile_path,
               const std::string& concept_name) {
  add_input(inv, "game", game_path);
  add_input(inv, "profile", profile_path);
  const ambigame::GameWithAmbiguity game =
      ambigame::validate_game(ambigame::game_from_json(ambigame::load_json_file(game_path)));
  const ambigame::StrategyProfile profile =
      ambigame::profile_from_json(game, ambigame::load_json_file(profile_path));
  const auto concept_kind = ambigame::concept_by_name(concept_name);
  if (!concept_kind) throw ambigame::Error(ambigame::ErrorCode::SchemaError,
                                           "unknown concept \"" + concept_name + "\"");
  const ambigame::EquilibriumReport report =
      ambigame::verify_profile(game, profile, *concept_kind);
  json out{{"concept", concept_name},
           {"verdict", report.equilibrium ? "equilibrium" : "not-equilibrium"}};
  if (report.witness) out["witness"] = witness_json(game, *report.witness);
  return emit(inv, std::move(out), report.equilibrium ? kExitOk : kExitNegative);
}

json location_set_json(const ambigame::CoordinationSpec& spec, const ambigame::LocationSet& set) {
  json names = json::array();
  for (int l : set.locations) names.push_back(spec.locations[l]);
  return names;
}

int run_coord_solve(Invocation& inv, const std::string& spec_path) {
  add_input(inv, "spec", spec_path);
  const ambigame::CoordinationSpec spec =
      ambigame::coordination_spec_from_json(ambigame::load_json_file(spec_path));
  const auto equilibria = ambigame::lexne_location_sets(spec);
  json list = json::array();
  for (const auto& eq : equilibria) {
    json profile = json::object();
    for (int p = 0; p < spec.num_players(); ++p) {
      json per_type = json::object();
      for (std::size_t t = 0; t < spec.type_sets[p].size(); ++t) {
        std::string type_name;
        for (std::size_t i = 0; i < spec.type_sets[p][t].size(); ++i) {
          if (i) type_name += '>';
          type_name += spec.type_sets[p][t][i];
        }
        per_type[type_name] =
            spec.locations[eq.profile.actions[p][t].pure_action()];
      }
      profile["p" + std::to_string(p + 1)] = std::move(per_type);
    }
    list.push_back(json{{"locations", location_set_json(spec, eq.set)},
                        {"profile", std::move(profile)}});
  }
  return emit(inv, json{{"count", equilibria.size()}, {"equilibria", std::move(list)}}, kExitOk);
}

int run_coord_euclidean(Invocation& inv, const std::string& spec_path) {
  add_input(inv, "spec", spec_path);
  const ambigame::EuclideanSpec spec =
      ambigame::euclidean_spec_from_json(ambigame::load_json_file(spec_path));
  const auto sets = ambigame::euclidean_lexne(spec);
  json list = json::array();
  for (const auto& set : sets) {
    json names = json::array();
    for (int l : set.locations) names.push_back(spec.locations[l]);
    list.push_back(std::move(names));
  }
  return emit(inv, json{{"count", sets.size()}, {"location_sets", std::move(list)}}, kExitOk);
}

int run_coord_known_peak(Invocation& inv, const std::string& spec_path) {
  add_input(inv, "spec", spec_path);
  const ambigame::KnownPeakInput input =
      ambigame::known_peak_input_from_json(ambigame::load_json_file(spec_path));
  const auto sets = ambigame::known_peak_lexne(input.spec, input.peaks, input.orders);
  json list = json::array();
  for (const auto& set : sets) list.push_back(location_set_json(input.spec, set));
  return emit(inv, json{{"count", sets.size()}, {"location_sets", std::move(list)}}, kExitOk);
}

int run_coord_fraction(Invocation& inv, int m, int t, int n) {
  const Rational bound = ambigame::minne_fraction_lower_bound(m, t, n);
  return emit(inv, json{{"m", m}, {"t", t}, {"n", n}, {"fraction", rational_json(bound)}},
              kExitOk);
}

json trade_strategy_json(const std::vector<Rational>& values,
                         const ambigame::TradeStrategy& strategy) {
  json out = json::object();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string key = ambigame::rational_to_string(values[i]);
    if (strategy.bids[i]) {
      out[key] = ambigame::rational_to_string(*strategy.bids[i]);
    } else {
      out[key] = nullptr;
    }
  }
  return out;
}

int run_trade_solve(Invocation& inv, const std::string& spec_path) {
  add_input(inv, "spec", spec_path);
  ambigame::TradeSpec spec =
      ambigame::trade_spec_from_json(ambigame::load_json_file(spec_path));
  const auto classes = ambigame::enumerate_lexne_analytic(spec);
  json list = json::array();
  for (const auto& eq : classes) {
    list.push_back(json{{"class", eq.classification.label()},
                        {"seller", trade_strategy_json(spec.seller_values, eq.seller)},
                        {"buyer", trade_strategy_json(spec.buyer_values, eq.buyer)}});
  }
  return emit(inv, json{{"count", classes.size()}, {"classes", std::move(list)}}, kExitOk);
}

int run_trade_classify(Invocation& inv, const std::string& spec_path,
                       const std::string& profile_path) {
  add_input(inv, "spec", spec_path);
  add_input(inv, "profile", profile_path);
  ambigame::TradeSpec spec =
      ambigame::trade_spec_from_json(ambigame::load_json_file(spec_path));
  const auto [seller, buyer] =
      ambigame::trade_strategies_from_json(spec, ambigame::load_json_file(profile_path));
  const ambigame::TypeAmbiguityGame compiled = ambigame::build_trade_game(spec);
  const ambigame::TradeClassification cls =
      ambigame::classify_profile(spec, compiled, seller, buyer);
  json out{{"class", cls.label()}};
  if (cls.kind == ambigame::TradeClassKind::TwoPrice) {
    out["canonical_table"] = cls.canonical_table;
  }
  if (cls.witness) out["witness"] = witness_json(compiled.game, *cls.witness);
  return emit(inv, std::move(out),
              cls.kind == ambigame::TradeClassKind::NotEquilibrium ? kExitNegative : kExitOk);
}

int run_trade_cross_validate(Invocation& inv, const std::string& spec_path, std::uint64_t budget,
                             int jobs) {
  add_input(inv, "spec", spec_path);
  ambigame::TradeSpec spec =
      ambigame::trade_spec_from_json(ambigame::load_json_file(spec_path));
  const ambigame::CrossValidationReport report = ambigame::cross_validate(spec, budget, jobs);
  json out{{"match", report.match},
           {"brute_force_count", report.brute_force_count},
           {"missing_analytic", report.missing_analytic},
           {"brute_only_classes", report.brute_only_classes},
           {"analytic_only_classes", report.analytic_only_classes},
           {"anomalies", report.anomalies}};
  return emit(inv, std::move(out), report.match ? kExitOk : kExitNegative);
}

struct AxiomExpectation {
  ambigame::Axiom axiom;
  bool documented_pass;
};

// What each built-in comparator is documented to satisfy on finite batteries.
std::vector<AxiomExpectation> documented_axioms(const std::string& comparator) {
  using ambigame::Axiom;
  const bool is_lex = comparator == "lex";
  const bool is_second_worst = comparator == "second-worst";
  return {
      {Axiom::Monotonicity, true},
      {Axiom::StateSymmetry, true},
      {Axiom::IrrelevantInformation, !is_second_worst},
      {Axiom::CertaintyIndependence, true},
      {Axiom::UncertaintyAversion, !is_lex},
  };
}

int run_axioms(Invocation& inv, const std::string& comparator_name, std::size_t samples,
               std::uint64_t seed) {
  const auto comparator = ambigame::comparator_by_name(comparator_name);
  if (!comparator) {
    throw ambigame::Error(ambigame::ErrorCode::UnknownComparator,
                          "comparator \"" + comparator_name + "\"");
  }

  // Batteries: fixed witnesses plus seeded random act pairs (each pair is a
  // battery over its own state set), plus a permuted-copy pair per sample so
  // indifference-conditioned axioms get exercised.
  std::vector<std::vector<ambigame::Act>> batteries;
  batteries.push_back({ambigame::Act({Rational(2), Rational(0)}),
                       ambigame::Act({Rational(0), Rational(1)})});
  batteries.push_back({ambigame::Act({Rational(2), Rational(0), Rational(0)}),
                       ambigame::Act({Rational(0), Rational(1), Rational(1)}),
                       ambigame::Act({Rational(0), Rational(2), Rational(0)}),
                       ambigame::Act({Rational(0), Rational(0), Rational(2)})});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> num_states(2, 6);
  for (std::size_t i = 0; i < samples; ++i) {
    auto pair = ambigame::random_battery(rng, 2, num_states(rng));
    auto permuted = pair.front();
    std::shuffle(permuted.values.begin(), permuted.values.end(), rng);
    pair.push_back(std::move(permuted));
    batteries.push_back(std::move(pair));
  }

  bool documented_violation = false;
  json axiom_results = json::array();
  for (const AxiomExpectation& expected : documented_axioms(comparator_name)) {
    bool pass = true;
    json violations = json::array();
    for (const auto& battery : batteries) {
      ambigame::AxiomCheckOptions options;
      options.permutation_seed = seed;
      const ambigame::AxiomReport report =
          ambigame::check_axiom(expected.axiom, *comparator, battery, options);
      if (!report.pass) {
        pass = false;
        for (const auto& v : report.violations) {
          if (violations.size() >= 4) break;
          json left = json::array(), right = json::array();
          for (const auto& x : v.left.values) left.push_back(rational_json(x));
          for (const auto& x : v.right.values) right.push_back(rational_json(x));
          violations.push_back(json{{"left", std::move(left)},
                                    {"right", std::move(right)},
                                    {"transform", v.transform},
                                    {"before", ambigame::ordering_name(v.before)},
                                    {"after", ambigame::ordering_name(v.after)}});
        }
      }
    }
    if (!pass && expected.documented_pass) documented_violation = true;
    axiom_results.push_back(json{{"axiom", ambigame::axiom_name(expected.axiom)},
                                 {"documented", expected.documented_pass ? "pass" : "fail"},
                                 {"result", pass ? "pass" : "fail"},
                                 {"violations", std::move(violations)}});
  }

  // Every built-in comparator refines the worst-case order.
  bool refines_min = true;
  for (const auto& battery : batteries) {
    if (!ambigame::check_refinement(ambigame::min_comparator(), *comparator, battery).pass) {
      refines_min = false;
      break;
    }
  }
  if (!refines_min) documented_violation = true;

  json out{{"comparator", comparator_name},
           {"samples", samples},
           {"seed", seed},
           {"axioms", std::move(axiom_results)},
           {"refines_min", refines_min ? "pass" : "fail"}};
  return emit(inv, std::move(out), documented_violation ? kExitNegative : kExitOk);
}

int default_jobs() {
  if (const char* env = std::getenv("AMBIGAME_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equilibrium analysis for games with type ambiguity"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain valid after a subcommand name

  int jobs = default_jobs();
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  app.add_option("--jobs", jobs, "worker threads for enumeration");
  app.add_option("--seed", seed, "seed for randomized procedures");
  app.add_option("--budget", budget, "pure-profile enumeration budget");

  std::string game_path, profile_path, spec_path, concept_name = "minne";
  std::string strategies = "pure";
  int max_rounds = 64;
  unsigned max_denominator = 16;

  CLI::App* solve = app.add_subcommand("solve", "enumerate or search for equilibria");
  solve->add_option("game", game_path)->required();
  solve->add_option("--concept", concept_name, "minne or lexne");
  solve->add_option("--strategies", strategies, "pure or mixed");
  solve->add_option("--max-rounds", max_rounds, "mixed search rounds");
  solve->add_option("--max-denominator", max_denominator, "mixed search rounding ladder");

  CLI::App* verify = app.add_subcommand("verify", "verify a strategy profile");
  verify->add_option("game", game_path)->required();
  verify->add_option("profile", profile_path)->required();
  verify->add_option("--concept", concept_name, "minne or lexne");

  CLI::App* coord = app.add_subcommand("coord", "coordination games");
  coord->require_subcommand(1);
  coord->fallthrough();
  CLI::App* coord_solve = coord->add_subcommand("solve", "location-set equilibria");
  coord_solve->add_option("spec", spec_path)->required();
  CLI::App* coord_euclid = coord->add_subcommand("euclidean", "ideal-point characterization");
  coord_euclid->add_option("spec", spec_path)->required();
  CLI::App* coord_peak = coord->add_subcommand("known-peak", "known-peak characterization");
  coord_peak->add_option("spec", spec_path)->required();
  int frac_m = 0, frac_t = 0, frac_n = 0;
  CLI::App* coord_frac = coord->add_subcommand("minne-fraction", "worst-case equilibrium share");
  coord_frac->add_option("--m", frac_m, "locations")->required();
  coord_frac->add_option("--t", frac_t, "types per player")->required();
  coord_frac->add_option("--n", frac_n, "players")->required();

  CLI::App* trade = app.add_subcommand("trade", "bilateral trade games");
  trade->require_subcommand(1);
  trade->fallthrough();
  CLI::App* trade_solve = trade->add_subcommand("solve", "closed-form equilibrium classes");
  trade_solve->add_option("spec", spec_path)->required();
  CLI::App* trade_classify = trade->add_subcommand("classify", "classify a strategy pair");
  trade_classify->add_option("spec", spec_path)->required();
  trade_classify->add_option("profile", profile_path)->required();
  CLI::App* trade_cross = trade->add_subcommand("cross-validate",
                                                "closed-form classes against brute force");
  trade_cross->add_option("spec", spec_path)->required();

  std::string comparator_name = "lex";
  std::size_t samples = 200;
  CLI::App* axioms = app.add_subcommand("axioms", "finite-sample axiom battery");
  axioms->add_option("--comparator", comparator_name, "min, lex, or second-worst");
  axioms->add_option("--samples", samples, "random act pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  Invocation inv;
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();
       sub = sub->get_subcommands().front()) {
    if (!inv.command.empty()) inv.command += " ";
    inv.command += sub->get_subcommands().front()->get_name();
  }

  try {
    if (solve->parsed()) {
      return run_solve(inv, game_path, concept_name, strategies, budget, jobs, seed, max_rounds,
                       max_denominator);
    }
    if (verify->parsed()) return run_verify(inv, game_path, profile_path, concept_name);
    if (coord->parsed()) {
      if (coord_solve->parsed()) return run_coord_solve(inv, spec_path);
      if (coord_euclid->parsed()) return run_coord_euclidean(inv, spec_path);
      if (coord_peak->parsed()) return run_coord_known_peak(inv, spec_path);
      if (coord_frac->parsed()) return run_coord_fraction(inv, frac_m, frac_t, frac_n);
    }
    if (trade->parsed()) {
      if (trade_solve->parsed()) return run_trade_solve(inv, spec_path);
      if (trade_classify->parsed()) return run_trade_classify(inv, spec_path, profile_path);
      if (trade_cross->parsed()) return run_trade_cross_validate(inv, spec_path, budget, jobs);
    }
    if (axioms->parsed()) return run_axioms(inv, comparator_name, samples, seed);
  } catch (const ambigame::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
