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

#include "ambigame/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ambigame {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::SchemaError, "missing field \"" + std::string(key) + "\"");
  }
  return j.at(key);
}

std::string require_string(const json& j, const char* context) {
  if (!j.is_string()) {
    throw Error(ErrorCode::SchemaError, std::string(context) + " must be a string");
  }
  return j.get<std::string>();
}

Rational require_rational(const json& j, const char* context) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) {
    throw Error(ErrorCode::SchemaError,
                std::string(context) + " must be a rational string like \"3/4\"");
  }
  auto value = try_parse_rational(j.get<std::string>());
  if (!value) {
    throw Error(ErrorCode::SchemaError,
                std::string(context) + ": malformed rational \"" + j.get<std::string>() + "\"");
  }
  return *value;
}

std::vector<std::string> string_list(const json& j, const char* context) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, std::string(context) + " must be a list");
  std::vector<std::string> out;
  for (const json& item : j) out.push_back(require_string(item, context));
  return out;
}

std::vector<Rational> rational_list(const json& j, const char* context) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, std::string(context) + " must be a list");
  std::vector<Rational> out;
  for (const json& item : j) out.push_back(require_rational(item, context));
  return out;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open \"" + path + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, "cannot parse \"" + path + "\": " + e.what());
  }
  return j;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

GameDescription game_from_json(const nlohmann::json& j) {
  GameDescription d;
  d.players = string_list(require(j, "players"), "players");

  const json& actions = require(j, "actions");
  for (const std::string& player : d.players) {
    if (!actions.contains(player)) {
      throw Error(ErrorCode::SchemaError, "no actions for player \"" + player + "\"");
    }
    d.actions.push_back(string_list(actions.at(player), "actions"));
  }

  const json& states = require(j, "states");
  if (!states.is_array()) throw Error(ErrorCode::SchemaError, "states must be a list");
  for (const json& state : states) {
    d.state_ids.push_back(require_string(require(state, "id"), "state id"));
    const json& types = require(state, "types");
    std::vector<std::string> labels;
    for (const std::string& player : d.players) {
      if (!types.contains(player)) {
        labels.push_back("");  // validate_game reports this as an uncovered state
      } else {
        labels.push_back(require_string(types.at(player), "type label"));
      }
    }
    d.state_types.push_back(std::move(labels));
  }

  const json& utilities = require(j, "utilities");
  if (!utilities.is_object()) throw Error(ErrorCode::SchemaError, "utilities must be an object");
  for (auto it = utilities.begin(); it != utilities.end(); ++it) {
    const std::string& player = it.key();
    if (!it.value().is_object()) {
      throw Error(ErrorCode::SchemaError, "utilities of \"" + player + "\" must be an object");
    }
    for (auto st = it.value().begin(); st != it.value().end(); ++st) {
      if (!st.value().is_object()) {
        throw Error(ErrorCode::SchemaError, "utilities at state \"" + st.key() + "\" malformed");
      }
      for (auto u = st.value().begin(); u != st.value().end(); ++u) {
        d.utilities[player][st.key()][u.key()] = require_rational(u.value(), "utility");
      }
    }
  }
  return d;
}

nlohmann::json game_to_json(const GameWithAmbiguity& game) {
  json j;
  j["players"] = game.players();
  json actions = json::object();
  for (int p = 0; p < game.num_players(); ++p) actions[game.players()[p]] = game.actions(p);
  j["actions"] = std::move(actions);

  json states = json::array();
  for (int s = 0; s < game.num_states(); ++s) {
    json types = json::object();
    for (int p = 0; p < game.num_players(); ++p) {
      types[game.players()[p]] = game.type_label(p, s);
    }
    states.push_back(json{{"id", game.states()[s]}, {"types", std::move(types)}});
  }
  j["states"] = std::move(states);

  json utilities = json::object();
  std::vector<int> profile(game.num_players(), 0);
  for (int p = 0; p < game.num_players(); ++p) {
    json per_state = json::object();
    for (int s = 0; s < game.num_states(); ++s) {
      json row = json::object();
      std::fill(profile.begin(), profile.end(), 0);
      while (true) {
        std::string key;
        for (int q = 0; q < game.num_players(); ++q) {
          if (q) key += '|';
          key += game.actions(q)[profile[q]];
        }
        row[key] = rational_to_string(game.utility(p, s, profile));
        int q = game.num_players() - 1;
        for (; q >= 0; --q) {
          if (++profile[q] < game.num_actions(q)) break;
          profile[q] = 0;
        }
        if (q < 0) break;
      }
      per_state[game.states()[s]] = std::move(row);
    }
    utilities[game.players()[p]] = std::move(per_state);
  }
  j["utilities"] = std::move(utilities);
  return j;
}

StrategyProfile profile_from_json(const GameWithAmbiguity& game, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "profile must be an object");
  StrategyProfile profile;
  profile.actions.resize(game.num_players());
  for (int p = 0; p < game.num_players(); ++p) {
    const std::string& player = game.players()[p];
    if (!j.contains(player)) {
      throw Error(ErrorCode::IncompleteOpponentStrategy,
                  "profile has no entry for player \"" + player + "\"");
    }
    const json& per_type = j.at(player);
    for (int c = 0; c < game.num_types(p); ++c) {
      const std::string& type_name = game.partition(p)[c].name;
      if (!per_type.contains(type_name)) {
        throw Error(ErrorCode::IncompleteOpponentStrategy,
                    "profile has no entry for type \"" + type_name + "\" of player \"" + player +
                        "\"");
      }
      const json& weights = per_type.at(type_name);
      MixedAction action;
      action.weights.assign(game.num_actions(p), Rational(0));
      if (!weights.is_object()) {
        throw Error(ErrorCode::SchemaError, "weights must map actions to rationals");
      }
      for (auto it = weights.begin(); it != weights.end(); ++it) {
        const int a = game.action_index(p, it.key());  // throws UnknownAction
        action.weights[a] = require_rational(it.value(), "weight");
      }
      if (!action.valid()) {
        throw Error(ErrorCode::InvalidSpec,
                    "weights for type \"" + type_name + "\" of player \"" + player +
                        "\" do not form a distribution");
      }
      profile.actions[p].push_back(std::move(action));
    }
  }
  return profile;
}

nlohmann::json profile_to_json(const GameWithAmbiguity& game, const StrategyProfile& profile) {
  json j = json::object();
  for (int p = 0; p < game.num_players(); ++p) {
    json per_type = json::object();
    for (int c = 0; c < game.num_types(p); ++c) {
      json weights = json::object();
      for (int a = 0; a < game.num_actions(p); ++a) {
        const Rational& w = profile.actions[p][c].weights[a];
        if (w != 0) weights[game.actions(p)[a]] = rational_to_string(w);
      }
      per_type[game.partition(p)[c].name] = std::move(weights);
    }
    j[game.players()[p]] = std::move(per_type);
  }
  return j;
}

CoordinationSpec coordination_spec_from_json(const nlohmann::json& j) {
  CoordinationSpec spec;
  spec.locations = string_list(require(j, "locations"), "locations");
  const json& type_sets = require(j, "type_sets");
  if (!type_sets.is_array()) throw Error(ErrorCode::SchemaError, "type_sets must be a list");
  for (const json& per_player : type_sets) {
    if (!per_player.is_array()) {
      throw Error(ErrorCode::SchemaError, "each player's type set must be a list of orders");
    }
    std::vector<std::vector<std::string>> orders;
    for (const json& order : per_player) orders.push_back(string_list(order, "order"));
    spec.type_sets.push_back(std::move(orders));
  }
  validate_coordination_spec(spec);
  return spec;
}

KnownPeakInput known_peak_input_from_json(const nlohmann::json& j) {
  KnownPeakInput input;
  input.spec = coordination_spec_from_json(j);
  input.peaks = string_list(require(j, "peaks"), "peaks");
  const json& orders = require(j, "orders");
  if (!orders.is_array()) throw Error(ErrorCode::SchemaError, "orders must be a list");
  for (const json& per_player : orders) {
    if (!per_player.is_array()) {
      throw Error(ErrorCode::SchemaError, "each player's orders must be a list");
    }
    std::vector<std::vector<std::string>> list;
    for (const json& order : per_player) list.push_back(string_list(order, "order"));
    input.orders.push_back(std::move(list));
  }
  return input;
}

EuclideanSpec euclidean_spec_from_json(const nlohmann::json& j) {
  EuclideanSpec spec;
  const json& locations = require(j, "locations");
  if (!locations.is_array()) throw Error(ErrorCode::SchemaError, "locations must be a list");
  for (const json& loc : locations) {
    spec.locations.push_back(require_string(require(loc, "id"), "location id"));
    spec.coordinates.push_back(require_rational(require(loc, "coordinate"), "coordinate"));
  }
  const json& ideals = require(j, "ideal_points");
  if (!ideals.is_array()) throw Error(ErrorCode::SchemaError, "ideal_points must be a list");
  for (const json& per_player : ideals) {
    spec.ideal_points.push_back(rational_list(per_player, "ideal point"));
  }
  validate_euclidean_spec(spec);
  return spec;
}

TradeSpec trade_spec_from_json(const nlohmann::json& j) {
  TradeSpec spec;
  spec.seller_values = rational_list(require(j, "seller_values"), "seller value");
  spec.buyer_values = rational_list(require(j, "buyer_values"), "buyer value");
  spec.bid_grid = rational_list(require(j, "bid_grid"), "bid");
  const std::string rule = require_string(require(j, "price_rule"), "price_rule");
  auto parsed = PriceRule::parse(rule);
  if (!parsed) throw Error(ErrorCode::SchemaError, "unknown price rule \"" + rule + "\"");
  spec.rule = *parsed;
  validate_trade_spec(spec);
  return spec;
}

std::pair<TradeStrategy, TradeStrategy> trade_strategies_from_json(const TradeSpec& spec,
                                                                   const nlohmann::json& j) {
  auto parse_side = [&](const json& side, const std::vector<Rational>& values,
                        const char* who) {
    TradeStrategy out;
    if (!side.is_object()) {
      throw Error(ErrorCode::SchemaError, std::string(who) + " strategy must be an object");
    }
    for (const Rational& v : values) {
      const std::string key = rational_to_string(v);
      if (!side.contains(key)) {
        throw Error(ErrorCode::IncompleteOpponentStrategy,
                    std::string(who) + " strategy misses value " + key);
      }
      const json& bid = side.at(key);
      if (bid.is_null() || (bid.is_string() && bid.get<std::string>() == kNoParticipation)) {
        out.bids.push_back(std::nullopt);
      } else {
        out.bids.push_back(require_rational(bid, "bid"));
      }
    }
    return out;
  };
  return {parse_side(require(j, "seller"), spec.seller_values, "seller"),
          parse_side(require(j, "buyer"), spec.buyer_values, "buyer")};
}

}  // namespace ambigame
