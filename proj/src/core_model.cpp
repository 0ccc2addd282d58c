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

#include "ambigame/core_model.hpp"

#include <algorithm>
#include <set>

namespace ambigame {

MixedAction MixedAction::pure(int action, std::size_t num_actions) {
  MixedAction out;
  out.weights.assign(num_actions, Rational(0));
  out.weights.at(action) = Rational(1);
  return out;
}

MixedAction MixedAction::uniform(std::size_t num_actions) {
  MixedAction out;
  out.weights.assign(num_actions, Rational(1, num_actions));
  return out;
}

bool MixedAction::is_pure() const { return pure_action() >= 0; }

int MixedAction::pure_action() const {
  int found = -1;
  for (std::size_t a = 0; a < weights.size(); ++a) {
    if (weights[a] == 1) {
      if (found >= 0) return -1;
      found = static_cast<int>(a);
    } else if (weights[a] != 0) {
      return -1;
    }
  }
  return found;
}

bool MixedAction::valid() const {
  Rational sum(0);
  for (const Rational& w : weights) {
    if (w < 0) return false;
    sum += w;
  }
  return sum == 1;
}

Act::Act(std::vector<std::string> labels, std::vector<Rational> vals)
    : state_labels(std::move(labels)), values(std::move(vals)) {
  if (state_labels.size() != values.size()) {
    throw Error(ErrorCode::DomainError, "act labels and values differ in length");
  }
  if (values.empty()) throw Error(ErrorCode::DomainError, "act must be non-empty");
}

Act::Act(std::vector<Rational> vals) : values(std::move(vals)) {
  if (values.empty()) throw Error(ErrorCode::DomainError, "act must be non-empty");
  state_labels.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) state_labels.push_back("s" + std::to_string(i));
}

Rational Act::worst() const { return *std::min_element(values.begin(), values.end()); }
Rational Act::best() const { return *std::max_element(values.begin(), values.end()); }

std::vector<Rational> Act::sorted_values() const {
  std::vector<Rational> v = values;
  std::sort(v.begin(), v.end());
  return v;
}

bool Act::same_state_set(const Act& other) const {
  if (state_labels.size() != other.state_labels.size()) return false;
  std::vector<std::string> a = state_labels, b = other.state_labels;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::size_t GameWithAmbiguity::profile_index(std::span<const int> profile) const {
  std::size_t idx = 0;
  for (int p = 0; p < num_players(); ++p) idx += profile_strides_[p] * profile[p];
  return idx;
}

bool GameWithAmbiguity::states_distinguishable() const {
  for (int s = 0; s < num_states(); ++s) {
    for (int u = s + 1; u < num_states(); ++u) {
      bool distinguished = false;
      for (int p = 0; p < num_players(); ++p) {
        if (cell_of_[p][s] != cell_of_[p][u]) { distinguished = true; break; }
      }
      if (!distinguished) return false;
    }
  }
  return true;
}

int GameWithAmbiguity::player_index(const std::string& name) const {
  for (int p = 0; p < num_players(); ++p) {
    if (players_[p] == name) return p;
  }
  throw Error(ErrorCode::UnknownPlayer, "player \"" + name + "\"");
}

int GameWithAmbiguity::action_index(int player, const std::string& name) const {
  for (int a = 0; a < num_actions(player); ++a) {
    if (actions_[player][a] == name) return a;
  }
  throw Error(ErrorCode::UnknownAction,
              "action \"" + name + "\" of player \"" + players_[player] + "\"");
}

int GameWithAmbiguity::state_index(const std::string& id) const {
  for (int s = 0; s < num_states(); ++s) {
    if (state_ids_[s] == id) return s;
  }
  throw Error(ErrorCode::UnknownState, "state \"" + id + "\"");
}

int GameWithAmbiguity::cell_index(int player, const std::string& name) const {
  for (int c = 0; c < num_types(player); ++c) {
    if (partitions_[player][c].name == name) return c;
  }
  throw Error(ErrorCode::UnknownTypeCell,
              "type \"" + name + "\" of player \"" + players_[player] + "\"");
}

namespace {

// Shared tail of both construction paths once partitions are settled.
void fill_utilities(const GameDescription& d, std::vector<std::vector<Rational>>& utilities,
                    std::vector<std::size_t>& strides, std::size_t& num_profiles) {
  const int np = static_cast<int>(d.players.size());
  num_profiles = 1;
  strides.assign(np, 0);
  for (int p = np - 1; p >= 0; --p) {
    strides[p] = num_profiles;
    num_profiles *= d.actions[p].size();
  }

  // Profile keys are action names joined by '|' in player order.
  std::vector<int> digits(np, 0);
  std::vector<std::string> keys(num_profiles);
  for (std::size_t idx = 0; idx < num_profiles; ++idx) {
    std::string key;
    for (int p = 0; p < np; ++p) {
      if (p) key += '|';
      key += d.actions[p][digits[p]];
    }
    keys[idx] = key;
    for (int p = np - 1; p >= 0; --p) {
      if (++digits[p] < static_cast<int>(d.actions[p].size())) break;
      digits[p] = 0;
    }
  }

  utilities.assign(np, {});
  for (int p = 0; p < np; ++p) {
    const std::string& player = d.players[p];
    auto pit = d.utilities.find(player);
    if (pit == d.utilities.end()) {
      throw Error(ErrorCode::MissingUtility, "no utilities for player \"" + player + "\"");
    }
    utilities[p].assign(d.state_ids.size() * num_profiles, Rational(0));
    for (std::size_t s = 0; s < d.state_ids.size(); ++s) {
      const std::string& state = d.state_ids[s];
      auto sit = pit->second.find(state);
      if (sit == pit->second.end()) {
        throw Error(ErrorCode::MissingUtility,
                    "player \"" + player + "\" has no utilities at state \"" + state + "\"");
      }
      for (const auto& [key, value] : sit->second) {
        auto kit = std::find(keys.begin(), keys.end(), key);
        if (kit == keys.end()) {
          throw Error(ErrorCode::UnknownAction,
                      "profile key \"" + key + "\" at state \"" + state + "\"");
        }
      }
      for (std::size_t idx = 0; idx < num_profiles; ++idx) {
        auto kit = sit->second.find(keys[idx]);
        if (kit == sit->second.end()) {
          throw Error(ErrorCode::MissingUtility,
                      "player \"" + player + "\", state \"" + state + "\", profile \"" +
                          keys[idx] + "\"");
        }
        utilities[p][s * num_profiles + idx] = kit->second;
      }
    }
  }
}

void check_description_shape(const GameDescription& d) {
  if (d.players.empty()) throw Error(ErrorCode::SchemaError, "no players");
  if (d.actions.size() != d.players.size()) {
    throw Error(ErrorCode::SchemaError, "actions not aligned with players");
  }
  for (std::size_t p = 0; p < d.players.size(); ++p) {
    if (d.actions[p].empty()) {
      throw Error(ErrorCode::SchemaError, "player \"" + d.players[p] + "\" has no actions");
    }
    std::set<std::string> unique(d.actions[p].begin(), d.actions[p].end());
    if (unique.size() != d.actions[p].size()) {
      throw Error(ErrorCode::SchemaError, "duplicate action for player \"" + d.players[p] + "\"");
    }
  }
  if (d.state_ids.empty()) throw Error(ErrorCode::SchemaError, "no states");
  std::set<std::string> unique_states(d.state_ids.begin(), d.state_ids.end());
  if (unique_states.size() != d.state_ids.size()) {
    throw Error(ErrorCode::SchemaError, "duplicate state id");
  }
}

}  // namespace

GameWithAmbiguity validate_game(const GameDescription& d) {
  check_description_shape(d);
  if (d.state_types.size() != d.state_ids.size()) {
    throw Error(ErrorCode::SchemaError, "state type labels not aligned with states");
  }

  GameWithAmbiguity game;
  game.players_ = d.players;
  game.actions_ = d.actions;
  game.state_ids_ = d.state_ids;

  const int np = game.num_players();
  game.partitions_.assign(np, {});
  game.cell_of_.assign(np, std::vector<int>(d.state_ids.size(), -1));
  for (int p = 0; p < np; ++p) {
    for (std::size_t s = 0; s < d.state_ids.size(); ++s) {
      if (d.state_types[s].size() != d.players.size() || d.state_types[s][p].empty()) {
        throw Error(ErrorCode::UncoveredState,
                    "state \"" + d.state_ids[s] + "\" carries no type of player \"" +
                        d.players[p] + "\"");
      }
      const std::string& label = d.state_types[s][p];
      int cell = -1;
      for (std::size_t c = 0; c < game.partitions_[p].size(); ++c) {
        if (game.partitions_[p][c].name == label) { cell = static_cast<int>(c); break; }
      }
      if (cell < 0) {
        cell = static_cast<int>(game.partitions_[p].size());
        game.partitions_[p].push_back(TypeCell{label, {}});
      }
      game.partitions_[p][cell].states.push_back(static_cast<int>(s));
      game.cell_of_[p][s] = cell;
    }
  }

  fill_utilities(d, game.utilities_, game.profile_strides_, game.num_profiles_);
  return game;
}

GameWithAmbiguity make_game_with_explicit_partitions(
    const GameDescription& d, const std::vector<std::vector<std::vector<std::string>>>& cells) {
  check_description_shape(d);
  if (cells.size() != d.players.size()) {
    throw Error(ErrorCode::SchemaError, "partitions not aligned with players");
  }

  GameWithAmbiguity game;
  game.players_ = d.players;
  game.actions_ = d.actions;
  game.state_ids_ = d.state_ids;

  const int np = game.num_players();
  game.partitions_.assign(np, {});
  game.cell_of_.assign(np, std::vector<int>(d.state_ids.size(), -1));
  for (int p = 0; p < np; ++p) {
    for (std::size_t c = 0; c < cells[p].size(); ++c) {
      if (cells[p][c].empty()) {
        throw Error(ErrorCode::InvalidSpec,
                    "empty partition cell for player \"" + d.players[p] + "\"");
      }
      TypeCell cell{"t" + std::to_string(c), {}};
      for (const std::string& id : cells[p][c]) {
        int s = -1;
        for (std::size_t k = 0; k < d.state_ids.size(); ++k) {
          if (d.state_ids[k] == id) { s = static_cast<int>(k); break; }
        }
        if (s < 0) throw Error(ErrorCode::UnknownState, "state \"" + id + "\" in partition");
        if (game.cell_of_[p][s] >= 0) {
          throw Error(ErrorCode::OverlappingPartitionCells,
                      "state \"" + id + "\" appears in two cells of player \"" + d.players[p] +
                          "\"");
        }
        game.cell_of_[p][s] = static_cast<int>(c);
        cell.states.push_back(s);
      }
      game.partitions_[p].push_back(std::move(cell));
    }
    for (std::size_t s = 0; s < d.state_ids.size(); ++s) {
      if (game.cell_of_[p][s] < 0) {
        throw Error(ErrorCode::UncoveredState,
                    "state \"" + d.state_ids[s] + "\" not covered for player \"" + d.players[p] +
                        "\"");
      }
    }
  }

  fill_utilities(d, game.utilities_, game.profile_strides_, game.num_profiles_);
  return game;
}

TypeAmbiguityGame as_type_ambiguity_game(GameWithAmbiguity game) {
  if (!game.states_distinguishable()) {
    throw Error(ErrorCode::InvalidSpec, "two states share every player's type");
  }
  return TypeAmbiguityGame{std::move(game)};
}

bool StrategyProfile::is_pure() const {
  for (const auto& per_player : actions) {
    for (const MixedAction& a : per_player) {
      if (!a.is_pure()) return false;
    }
  }
  return true;
}

void validate_profile(const GameWithAmbiguity& game, const StrategyProfile& profile) {
  if (static_cast<int>(profile.actions.size()) != game.num_players()) {
    throw Error(ErrorCode::IncompleteOpponentStrategy, "profile does not cover every player");
  }
  for (int p = 0; p < game.num_players(); ++p) {
    if (static_cast<int>(profile.actions[p].size()) != game.num_types(p)) {
      throw Error(ErrorCode::IncompleteOpponentStrategy,
                  "player \"" + game.players()[p] + "\" is missing a type entry");
    }
    for (int c = 0; c < game.num_types(p); ++c) {
      const MixedAction& a = profile.actions[p][c];
      if (static_cast<int>(a.weights.size()) != game.num_actions(p)) {
        throw Error(ErrorCode::UnknownAction,
                    "mixed action arity mismatch for player \"" + game.players()[p] + "\"");
      }
      if (!a.valid()) {
        throw Error(ErrorCode::InvalidSpec,
                    "weights of player \"" + game.players()[p] + "\" type \"" +
                        game.partition(p)[c].name + "\" do not form a distribution");
      }
    }
  }
}

std::vector<int> consistent_states(const GameWithAmbiguity& game, int player, int cell) {
  if (player < 0 || player >= game.num_players()) {
    throw Error(ErrorCode::UnknownPlayer, "player index " + std::to_string(player));
  }
  if (cell < 0 || cell >= game.num_types(player)) {
    throw Error(ErrorCode::UnknownTypeCell,
                "cell index " + std::to_string(cell) + " of player \"" +
                    game.players()[player] + "\"");
  }
  return game.partition(player)[cell].states;
}

namespace {

// Expected utility of (own action, opponents' mixtures at their types in
// this state). Iterates over the support of the opponents' mixed actions.
Rational expected_against(const GameWithAmbiguity& game, int player, int own_action, int state,
                          const StrategyProfile& others) {
  const int np = game.num_players();
  std::vector<const MixedAction*> mixes(np, nullptr);
  std::vector<std::vector<int>> supports(np);
  for (int j = 0; j < np; ++j) {
    if (j == player) continue;
    mixes[j] = &others.actions[j][game.cell_of(j, state)];
    for (std::size_t a = 0; a < mixes[j]->weights.size(); ++a) {
      if (mixes[j]->weights[a] != 0) supports[j].push_back(static_cast<int>(a));
    }
  }

  std::vector<int> profile(np, 0);
  profile[player] = own_action;
  std::vector<std::size_t> pos(np, 0);
  Rational total(0);
  while (true) {
    Rational weight(1);
    for (int j = 0; j < np; ++j) {
      if (j == player) continue;
      profile[j] = supports[j][pos[j]];
      weight *= mixes[j]->weights[profile[j]];
    }
    total += weight * game.utility(player, state, profile);
    int j = np - 1;
    for (; j >= 0; --j) {
      if (j == player) continue;
      if (++pos[j] < supports[j].size()) break;
      pos[j] = 0;
    }
    if (j < 0) break;
  }
  return total;
}

}  // namespace

InducedActs induced_acts(const GameWithAmbiguity& game, int player, int cell,
                         const StrategyProfile& others) {
  if (static_cast<int>(others.actions.size()) != game.num_players()) {
    throw Error(ErrorCode::IncompleteOpponentStrategy, "profile does not cover every player");
  }
  for (int j = 0; j < game.num_players(); ++j) {
    if (j == player) continue;
    if (static_cast<int>(others.actions[j].size()) != game.num_types(j)) {
      throw Error(ErrorCode::IncompleteOpponentStrategy,
                  "player \"" + game.players()[j] + "\" is missing a type entry");
    }
    for (const MixedAction& a : others.actions[j]) {
      if (static_cast<int>(a.weights.size()) != game.num_actions(j) || !a.valid()) {
        throw Error(ErrorCode::IncompleteOpponentStrategy,
                    "invalid mixed action for player \"" + game.players()[j] + "\"");
      }
    }
  }

  const std::vector<int> states = consistent_states(game, player, cell);
  std::vector<std::string> labels;
  labels.reserve(states.size());
  for (int s : states) labels.push_back(game.states()[s]);

  InducedActs out;
  out.actions = game.actions(player);
  out.acts.reserve(out.actions.size());
  for (int a = 0; a < game.num_actions(player); ++a) {
    std::vector<Rational> values;
    values.reserve(states.size());
    for (int s : states) values.push_back(expected_against(game, player, a, s, others));
    out.acts.emplace_back(labels, std::move(values));
  }
  return out;
}

std::vector<Rational> evaluate_profile(const GameWithAmbiguity& game, int state,
                                       const StrategyProfile& profile) {
  validate_profile(game, profile);
  if (state < 0 || state >= game.num_states()) {
    throw Error(ErrorCode::UnknownState, "state index " + std::to_string(state));
  }
  const int np = game.num_players();
  std::vector<const MixedAction*> mixes(np);
  std::vector<std::vector<int>> supports(np);
  for (int j = 0; j < np; ++j) {
    mixes[j] = &profile.actions[j][game.cell_of(j, state)];
    for (std::size_t a = 0; a < mixes[j]->weights.size(); ++a) {
      if (mixes[j]->weights[a] != 0) supports[j].push_back(static_cast<int>(a));
    }
  }

  std::vector<Rational> totals(np, Rational(0));
  std::vector<std::size_t> pos(np, 0);
  std::vector<int> actions(np, 0);
  while (true) {
    Rational weight(1);
    for (int j = 0; j < np; ++j) {
      actions[j] = supports[j][pos[j]];
      weight *= mixes[j]->weights[actions[j]];
    }
    const std::size_t pidx = game.profile_index(actions);
    for (int j = 0; j < np; ++j) totals[j] += weight * game.utility_by_index(j, state, pidx);
    int j = np - 1;
    for (; j >= 0; --j) {
      if (++pos[j] < supports[j].size()) break;
      pos[j] = 0;
    }
    if (j < 0) break;
  }
  return totals;
}

}  // namespace ambigame
