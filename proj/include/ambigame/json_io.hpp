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

#include <string>
#include <utility>

#include <json.hpp>

#include "ambigame/coordination.hpp"
#include "ambigame/core_model.hpp"
#include "ambigame/trade.hpp"

namespace ambigame {

// UTF-8 JSON schemas. Rationals travel as "p/q" strings, never floats.
//
// Game:    {players:[...], actions:{player:[...]},
//           states:[{id, types:{player:type}}...],
//           utilities:{player:{state:{"a1|a2|...":"p/q"}}}}
//          (partitions are implied by the state type labels)
// Profile: {player:{type:{action:"p/q"}}}; omitted actions carry weight zero.

nlohmann::json load_json_file(const std::string& path);  // SchemaError on IO/parse
std::string file_digest(const std::string& path);        // fnv1a-64 hex of the bytes

GameDescription game_from_json(const nlohmann::json& j);
nlohmann::json game_to_json(const GameWithAmbiguity& game);

StrategyProfile profile_from_json(const GameWithAmbiguity& game, const nlohmann::json& j);
nlohmann::json profile_to_json(const GameWithAmbiguity& game, const StrategyProfile& profile);

// Coordination spec: {locations:[...], type_sets:[[[best,...],...],...]};
// optional "peaks":[...] and "orders":[[[...]],...] feed the known-peak case.
CoordinationSpec coordination_spec_from_json(const nlohmann::json& j);

struct KnownPeakInput {
  CoordinationSpec spec;
  std::vector<std::string> peaks;
  std::vector<std::vector<std::vector<std::string>>> orders;
};
KnownPeakInput known_peak_input_from_json(const nlohmann::json& j);

// Euclidean spec: {locations:[{id, coordinate}...], ideal_points:[["p/q",...],...]}
EuclideanSpec euclidean_spec_from_json(const nlohmann::json& j);

// Trade spec: {seller_values:[...], buyer_values:[...], bid_grid:[...],
//              price_rule:"midpoint"|"seller-price"|"buyer-price"|"convex(p/q)"}
TradeSpec trade_spec_from_json(const nlohmann::json& j);

// Trade strategies: {seller:{value: bid-or-null}, buyer:{value: bid-or-null}}
std::pair<TradeStrategy, TradeStrategy> trade_strategies_from_json(const TradeSpec& spec,
                                                                   const nlohmann::json& j);

}  // namespace ambigame
