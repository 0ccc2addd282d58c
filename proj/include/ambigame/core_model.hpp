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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ambigame/errors.hpp"
#include "ambigame/rational.hpp"

namespace ambigame {

// A mixed action of one player: one weight per action in the player's
// canonical action order. Weights are non-negative and sum to exactly one.
struct MixedAction {
  std::vector<Rational> weights;

  static MixedAction pure(int action, std::size_t num_actions);
  static MixedAction uniform(std::size_t num_actions);

  bool is_pure() const;
  int pure_action() const;  // -1 when not degenerate
  bool valid() const;       // non-negative, sums to one
  bool operator==(const MixedAction&) const = default;
};

// An act assigns a rational outcome to every state of a (possibly reduced)
// state set. This is the object the preference comparators rank.
struct Act {
  std::vector<std::string> state_labels;
  std::vector<Rational> values;

  Act() = default;
  Act(std::vector<std::string> labels, std::vector<Rational> vals);
  explicit Act(std::vector<Rational> vals);  // labels "s0", "s1", ...

  std::size_t size() const { return values.size(); }
  Rational worst() const;
  Rational best() const;
  std::vector<Rational> sorted_values() const;
  bool same_state_set(const Act& other) const;
  bool operator==(const Act&) const = default;
};

struct TypeCell {
  std::string name;
  std::vector<int> states;  // canonical (construction) order
};

// Raw external description of a game, prior to validation. Mirrors the JSON
// game schema: partitions are implied by per-state type labels, utilities are
// keyed by "action|action|..." profile keys in player order.
struct GameDescription {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;     // aligned with players
  std::vector<std::string> state_ids;
  std::vector<std::vector<std::string>> state_types; // [state][player] type label
  // utilities[player name][state id][profile key] = value
  std::map<std::string, std::map<std::string, std::map<std::string, Rational>>> utilities;
};

class GameWithAmbiguity {
 public:
  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& actions(int player) const { return actions_[player]; }
  const std::vector<std::string>& states() const { return state_ids_; }
  int num_players() const { return static_cast<int>(players_.size()); }
  int num_states() const { return static_cast<int>(state_ids_.size()); }
  int num_actions(int player) const { return static_cast<int>(actions_[player].size()); }

  const std::vector<TypeCell>& partition(int player) const { return partitions_[player]; }
  int num_types(int player) const { return static_cast<int>(partitions_[player].size()); }
  int cell_of(int player, int state) const { return cell_of_[player][state]; }
  const std::string& type_label(int player, int state) const {
    return partitions_[player][cell_of_[player][state]].name;
  }

  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t profile_index(std::span<const int> profile) const;
  const Rational& utility(int player, int state, std::span<const int> profile) const {
    return utility_by_index(player, state, profile_index(profile));
  }
  const Rational& utility_by_index(int player, int state, std::size_t pidx) const {
    return utilities_[player][static_cast<std::size_t>(state) * num_profiles_ + pidx];
  }

  // Whether any two states are distinguished by at least one player's cell.
  bool states_distinguishable() const;

  int player_index(const std::string& name) const;          // throws UnknownPlayer
  int action_index(int player, const std::string& name) const;  // throws UnknownAction
  int state_index(const std::string& id) const;             // throws UnknownState
  int cell_index(int player, const std::string& name) const;    // throws UnknownTypeCell

  friend GameWithAmbiguity validate_game(const GameDescription& description);
  friend GameWithAmbiguity make_game_with_explicit_partitions(
      const GameDescription& description,
      const std::vector<std::vector<std::vector<std::string>>>& cells);

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::string> state_ids_;
  std::vector<std::vector<TypeCell>> partitions_;
  std::vector<std::vector<int>> cell_of_;   // [player][state]
  std::vector<std::vector<Rational>> utilities_;  // [player][state * num_profiles + pidx]
  std::vector<std::size_t> profile_strides_;
  std::size_t num_profiles_ = 1;
};

/// Validates a raw description; throws MissingUtility / UncoveredState /
/// UnknownAction / SchemaError diagnostics naming the offending entity.
GameWithAmbiguity validate_game(const GameDescription& description);

/// Construction path with explicit partition cells (per player, list of cells,
/// each a list of state ids). Checks disjointness, coverage and non-emptiness;
/// throws OverlappingPartitionCells / UncoveredState.
GameWithAmbiguity make_game_with_explicit_partitions(
    const GameDescription& description,
    const std::vector<std::vector<std::vector<std::string>>>& cells);

// A game with type ambiguity: states are type vectors, so the witness map
// state -> (type label per player) is injective.
struct TypeAmbiguityGame {
  GameWithAmbiguity game;
};

/// Checks injectivity of the witness map; throws InvalidSpec otherwise.
TypeAmbiguityGame as_type_ambiguity_game(GameWithAmbiguity game);

// One mixed action per type cell of every player.
struct StrategyProfile {
  std::vector<std::vector<MixedAction>> actions;  // [player][cell]

  bool is_pure() const;
  bool operator==(const StrategyProfile&) const = default;
};

/// Shape and weight validation against a game; throws
/// IncompleteOpponentStrategy / UnknownAction diagnostics.
void validate_profile(const GameWithAmbiguity& game, const StrategyProfile& profile);

/// The states a player of the given type considers possible, in canonical order.
std::vector<int> consistent_states(const GameWithAmbiguity& game, int player, int cell);

// The reduction of a type's response problem to a single-agent decision
// problem: one act per own pure action, over the type's consistent states,
// with opponents' mixtures integrated out.
struct InducedActs {
  std::vector<std::string> actions;  // own action names, canonical order
  std::vector<Act> acts;
};

InducedActs induced_acts(const GameWithAmbiguity& game, int player, int cell,
                         const StrategyProfile& others);

/// Expected utility vector at a state under the product of the mixed actions
/// the profile assigns to the types active at that state.
std::vector<Rational> evaluate_profile(const GameWithAmbiguity& game, int state,
                                       const StrategyProfile& profile);

}  // namespace ambigame
