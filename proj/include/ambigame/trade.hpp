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

#include <optional>
#include <string>
#include <vector>

#include "ambigame/core_model.hpp"
#include "ambigame/equilibrium.hpp"

namespace ambigame {

enum class PriceRuleKind { Midpoint, SellerPrice, BuyerPrice, Convex };

// Transaction price x(a_s, a_b) with a_s <= x <= a_b, weakly monotone in both
// bids. Convex carries the weight on the buyer's bid.
struct PriceRule {
  PriceRuleKind kind = PriceRuleKind::Midpoint;
  Rational lambda = Rational(1, 2);

  Rational price(const Rational& seller_bid, const Rational& buyer_bid) const;
  std::string name() const;
  // "midpoint", "seller-price", "buyer-price", "convex(p/q)"
  static std::optional<PriceRule> parse(const std::string& text);
};

struct TradeSpec {
  std::vector<Rational> seller_values;
  std::vector<Rational> buyer_values;
  std::vector<Rational> bid_grid;
  PriceRule rule;
};

/// Sorts and dedups the value sets and grid, then checks the invariants:
/// non-empty sets, grid containing every value, and rule admissibility on
/// all grid pairs. Throws InvalidSpec.
void validate_trade_spec(TradeSpec& spec);

/// Types are values, actions are the grid plus a leading no-participation
/// action; a transaction happens iff both participate and the seller's bid
/// does not exceed the buyer's.
TypeAmbiguityGame build_trade_game(const TradeSpec& spec);

inline constexpr const char* kNoParticipation = "pass";

// Per value: a grid bid or no participation.
struct TradeStrategy {
  std::vector<std::optional<Rational>> bids;
  bool operator==(const TradeStrategy&) const = default;
};

enum class TradeClassKind { NoTransaction, OnePrice, TwoPrice, NotEquilibrium };

struct TradeClassification {
  TradeClassKind kind = TradeClassKind::NotEquilibrium;
  Rational price;                       // OnePrice
  Rational low_price, high_price;       // TwoPrice
  bool canonical_table = true;          // TwoPrice: matches the canonical outcome table
  std::optional<DeviationWitness> witness;  // NotEquilibrium

  std::string label() const;  // "no-transaction", "one-price(p)", "two-price(pL,pH)"
};

struct TradeEquilibrium {
  TradeClassification classification;
  TradeStrategy seller, buyer;
};

/// The closed-form equilibrium classes: the no-transaction class, a one-price
/// class for every grid price within [min seller value, max buyer value], and
/// a two-price class for every grid pair satisfying
///   min V_s <= p_L < max V_s <= p_H,  p_L <= min V_b < p_H <= max V_b,
/// each with its canonical threshold strategies.
std::vector<TradeEquilibrium> enumerate_lexne_analytic(const TradeSpec& spec);

/// Verifies best responses for every type on the compiled game and labels the
/// profile by its transactions; on failure carries the deviation witness.
TradeClassification classify_profile(const TradeSpec& spec, const TradeStrategy& seller,
                                     const TradeStrategy& buyer);
TradeClassification classify_profile(const TradeSpec& spec, const TypeAmbiguityGame& compiled,
                                     const TradeStrategy& seller, const TradeStrategy& buyer);

// Transaction outcome per (seller value, buyer value) pair.
struct TradeOutcomeTable {
  std::size_t num_buyer_values = 0;
  std::vector<std::optional<Rational>> cells;  // [seller index * num_buyer_values + buyer index]
  bool operator==(const TradeOutcomeTable&) const = default;
};

TradeOutcomeTable outcome_table(const TradeSpec& spec, const TradeStrategy& seller,
                                const TradeStrategy& buyer);

StrategyProfile trade_profile(const TradeSpec& spec, const TypeAmbiguityGame& compiled,
                              const TradeStrategy& seller, const TradeStrategy& buyer);
TradeStrategy trade_strategy_from_profile(const TradeSpec& spec, const TypeAmbiguityGame& compiled,
                                          const StrategyProfile& profile, int player);

struct CrossValidationReport {
  bool match = false;
  std::uint64_t brute_force_count = 0;
  std::vector<std::string> missing_analytic;       // canonical profiles brute force never found
  std::vector<std::string> brute_only_classes;     // class labels only brute force produced
  std::vector<std::string> analytic_only_classes;  // class labels brute force never produced
  std::vector<std::string> anomalies;              // verification or labeling inconsistencies
};

/// Brute-force enumeration on the compiled game against the closed-form
/// classes: checks that every found equilibrium classifies, that every
/// analytic canonical profile is found, and that the class label sets agree
/// (all no-transaction profiles count as one class).
CrossValidationReport cross_validate(const TradeSpec& spec, std::uint64_t budget, int jobs = 1);

}  // namespace ambigame
