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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "ambigame/preferences.hpp"
#include "ambigame/trade.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace ambigame;
using namespace ambigame::testing;

namespace {

Rational r(long long num, long long den = 1) { return Rational(num, den); }

TradeStrategy bids(std::vector<std::optional<long long>> values) {
  TradeStrategy out;
  for (const auto& v : values) {
    if (v) {
      out.bids.emplace_back(Rational(*v));
    } else {
      out.bids.emplace_back(std::nullopt);
    }
  }
  return out;
}

std::set<std::string> labels_of(const std::vector<TradeEquilibrium>& list) {
  std::set<std::string> out;
  for (const auto& eq : list) out.insert(eq.classification.label());
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  TradeSpec spec = trade_span_spec();
  CHECK_NOTHROW(validate_trade_spec(spec));

  TradeSpec missing = trade_span_spec();
  missing.bid_grid.erase(std::find(missing.bid_grid.begin(), missing.bid_grid.end(), r(20)));
  CHECK_THROWS_AS(validate_trade_spec(missing), Error);

  TradeSpec bad_rule = trade_span_spec();
  bad_rule.rule = PriceRule{PriceRuleKind::Convex, r(2)};
  CHECK_THROWS_AS(validate_trade_spec(bad_rule), Error);
}

TEST_CASE("price rules") {
  CHECK(PriceRule::parse("midpoint")->price(r(15), r(35)) == r(25));
  CHECK(PriceRule::parse("seller-price")->price(r(15), r(35)) == r(15));
  CHECK(PriceRule::parse("buyer-price")->price(r(15), r(35)) == r(35));
  CHECK(PriceRule::parse("convex(1/4)")->price(r(20), r(40)) == r(25));
  CHECK_FALSE(PriceRule::parse("nonsense").has_value());
}

TEST_CASE("compiled utilities follow the transaction table") {
  TradeSpec spec = trade_span_spec();
  const TypeAmbiguityGame compiled = build_trade_game(spec);
  const GameWithAmbiguity& game = compiled.game;
  CHECK(game.num_states() == 9);
  CHECK(game.num_actions(0) == 10);  // nine bids plus no-participation

  const int s = game.state_index("10|30");  // seller value 10, buyer value 30
  const int bid15 = game.action_index(0, "15");
  const int bid35 = game.action_index(1, "35");
  // Matched bids transact at the midpoint: seller nets 25 - 10.
  CHECK(game.utility(0, s, std::vector<int>{bid15, bid35}) == r(15));
  CHECK(game.utility(1, s, std::vector<int>{bid15, bid35}) == r(5));
  // No participation, or a seller bid above the buyer's, leaves zero.
  const int none = game.action_index(0, kNoParticipation);
  CHECK(game.utility(0, s, std::vector<int>{none, bid35}) == r(0));
  const int bid30 = game.action_index(0, "30");
  const int bid20 = game.action_index(1, "20");
  CHECK(game.utility(0, s, std::vector<int>{bid30, bid20}) == r(0));
  CHECK(game.utility(1, s, std::vector<int>{bid30, bid20}) == r(0));
}

TEST_CASE("closed-form classes on the spanning instance") {
  TradeSpec spec = trade_span_spec();
  const auto classes = enumerate_lexne_analytic(spec);

  std::set<std::string> expected{"no-transaction"};
  for (int p = 10; p <= 40; p += 5) {
    expected.insert("one-price(" + std::to_string(p) + ")");
  }
  for (int lo : {10, 15, 20}) {
    for (int hi : {30, 35, 40}) {
      expected.insert("two-price(" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    }
  }
  CHECK(labels_of(classes) == expected);
  CHECK(classes.size() == 1 + 7 + 9);

  // The canonical threshold strategies of the flagship pair.
  const auto flagship = std::find_if(classes.begin(), classes.end(), [](const auto& eq) {
    return eq.classification.label() == "two-price(15,35)";
  });
  REQUIRE(flagship != classes.end());
  CHECK(flagship->seller == bids({15, 35, 35}));
  CHECK(flagship->buyer == bids({15, 15, 35}));

  // Two-price classes need full participation by construction.
  for (const auto& eq : classes) {
    if (eq.classification.kind != TradeClassKind::TwoPrice) continue;
    for (const auto& bid : eq.seller.bids) CHECK(bid.has_value());
    for (const auto& bid : eq.buyer.bids) CHECK(bid.has_value());
  }
}

TEST_CASE("degenerate value sets leave only one price") {
  TradeSpec spec;
  spec.seller_values = {r(25)};
  spec.buyer_values = {r(25)};
  spec.bid_grid = {r(20), r(25), r(30)};
  spec.rule = *PriceRule::parse("midpoint");
  const auto classes = enumerate_lexne_analytic(spec);
  CHECK(labels_of(classes) == std::set<std::string>{"no-transaction", "one-price(25)"});
}

TEST_CASE("one-sided spans admit no two-price class") {
  TradeSpec spec;
  spec.seller_values = {r(30), r(40)};
  spec.buyer_values = {r(10), r(20)};
  spec.bid_grid = {r(10), r(20), r(30), r(40)};
  spec.rule = *PriceRule::parse("midpoint");
  CHECK(labels_of(enumerate_lexne_analytic(spec)) == std::set<std::string>{"no-transaction"});
  // Brute force agrees: sellers above every buyer value never trade.
  const CrossValidationReport report = cross_validate(spec, 1'000'000);
  CHECK(report.match);
  CHECK(report.brute_force_count > 0);
}

TEST_CASE("the class list does not depend on the price rule") {
  const char* rules[] = {"midpoint", "seller-price", "buyer-price", "convex(1/3)"};
  std::set<std::string> reference;
  for (const char* rule : rules) {
    TradeSpec spec = trade_span_spec();
    spec.rule = *PriceRule::parse(rule);
    const auto labels = labels_of(enumerate_lexne_analytic(spec));
    if (reference.empty()) reference = labels;
    CHECK(labels == reference);
  }
}

TEST_CASE("canonical two-price outcome table, cell by cell") {
  TradeSpec spec = trade_span_spec();
  const auto classes = enumerate_lexne_analytic(spec);
  for (const auto& eq : classes) {
    if (eq.classification.kind != TradeClassKind::TwoPrice) continue;
    const Rational lo = eq.classification.low_price;
    const Rational hi = eq.classification.high_price;
    const TradeOutcomeTable table = outcome_table(spec, eq.seller, eq.buyer);
    for (std::size_t i = 0; i < spec.seller_values.size(); ++i) {
      for (std::size_t j = 0; j < spec.buyer_values.size(); ++j) {
        const bool seller_low = spec.seller_values[i] <= lo;
        const bool buyer_high = spec.buyer_values[j] >= hi;
        const auto& cell = table.cells[i * table.num_buyer_values + j];
        if (seller_low && buyer_high) {
          CHECK(cell == spec.rule.price(lo, hi));
          CHECK(*cell > lo);
          CHECK(*cell < hi);
        } else if (seller_low) {
          CHECK(cell == lo);
        } else if (buyer_high) {
          CHECK(cell == hi);
        } else {
          CHECK_FALSE(cell.has_value());
        }
      }
    }
  }
}

TEST_CASE("classifying the flagship profile") {
  TradeSpec spec = trade_span_spec();
  const TradeClassification cls =
      classify_profile(spec, bids({15, 35, 35}), bids({15, 15, 35}));
  CHECK(cls.kind == TradeClassKind::TwoPrice);
  CHECK(cls.low_price == r(15));
  CHECK(cls.high_price == r(35));
  CHECK(cls.canonical_table);
}

TEST_CASE("a buyer pushed into a losing transaction walks away") {
  TradeSpec spec = trade_span_spec();
  const TradeClassification cls =
      classify_profile(spec, bids({20, 20, 20}), bids({25, 25, 25}));
  REQUIRE(cls.kind == TradeClassKind::NotEquilibrium);
  REQUIRE(cls.witness.has_value());
  // The scan reports the first deviating type, the lowest-valued seller, who
  // would rather match the buyers' bid outright.
  CHECK(cls.witness->player == 0);
  CHECK(cls.witness->before_worst == r(25, 2));

  // The buyer valued 20 transacts at 22.5 and strictly prefers walking away:
  // re-checkable from the induced acts directly.
  const TypeAmbiguityGame compiled = build_trade_game(spec);
  const StrategyProfile profile =
      trade_profile(spec, compiled, bids({20, 20, 20}), bids({25, 25, 25}));
  const int cell = compiled.game.cell_index(1, "20");
  const InducedActs induced = induced_acts(compiled.game, 1, cell, profile);
  const int current = compiled.game.action_index(1, "25");
  const int walk_away = compiled.game.action_index(1, kNoParticipation);
  CHECK(induced.acts[current].worst() == r(-5, 2));
  CHECK(lex_compare(induced.acts[walk_away], induced.acts[current]) == Ordering::Greater);
}

TEST_CASE("silent markets classify as the no-transaction class") {
  TradeSpec spec = trade_span_spec();
  const TradeClassification cls = classify_profile(
      spec, bids({std::nullopt, std::nullopt, std::nullopt}),
      bids({std::nullopt, std::nullopt, std::nullopt}));
  CHECK(cls.kind == TradeClassKind::NoTransaction);
}

TEST_CASE("individual rationality holds in every brute-force equilibrium") {
  TradeSpec spec;
  spec.seller_values = {r(10), r(20)};
  spec.buyer_values = {r(15), r(25)};
  spec.bid_grid = {r(5), r(10), r(15), r(20), r(25)};
  spec.rule = *PriceRule::parse("midpoint");
  validate_trade_spec(spec);
  const TypeAmbiguityGame compiled = build_trade_game(spec);
  for (const StrategyProfile& profile : enumerate_pure_lexne(compiled.game)) {
    const TradeStrategy seller = trade_strategy_from_profile(spec, compiled, profile, 0);
    const TradeStrategy buyer = trade_strategy_from_profile(spec, compiled, profile, 1);
    const TradeOutcomeTable table = outcome_table(spec, seller, buyer);
    for (std::size_t i = 0; i < spec.seller_values.size(); ++i) {
      for (std::size_t j = 0; j < spec.buyer_values.size(); ++j) {
        const auto& cell = table.cells[i * table.num_buyer_values + j];
        if (!cell) continue;
        CHECK(*cell - spec.seller_values[i] >= r(0));
        CHECK(spec.buyer_values[j] - *cell >= r(0));
      }
    }
  }
}

TEST_CASE("cross-validation matches on a knife-edge-free instance") {
  TradeSpec spec;
  spec.seller_values = {r(10)};
  spec.buyer_values = {r(20)};
  spec.bid_grid = {r(10), r(15), r(20)};
  spec.rule = *PriceRule::parse("midpoint");
  const CrossValidationReport report = cross_validate(spec, 1'000'000);
  CHECK(report.match);
  CHECK(report.missing_analytic.empty());
  CHECK(report.anomalies.empty());
}

TEST_CASE("spanning instance: brute force exposes the knife-edge thresholds") {
  // The closed-form class list puts the boundary types on the weak side:
  // a seller valued exactly p_L bids p_L, a buyer valued exactly p_H bids
  // p_H. Under any rule with x(p_L,p_H) strictly inside (p_L,p_H) those
  // knife-edge types strictly gain by bidding the other price (same worst
  // case of zero, strictly better best case), so of the nine closed-form
  // two-price classes only (15,35) -- whose thresholds miss every value --
  // has its canonical profile confirmed by brute force. Boundary-adjusted
  // variants survive for (15,30), (20,30), (20,35).
  TradeSpec spec = trade_span_spec();
  const CrossValidationReport report = cross_validate(spec, 10'000'000, 2);
  CHECK_FALSE(report.match);
  CHECK(report.brute_force_count == 1126);

  CHECK(report.missing_analytic.size() == 8);  // every two-price pair but (15,35)
  for (const std::string& missing : report.missing_analytic) {
    CHECK(missing.find("two-price") != std::string::npos);
    CHECK(missing.find("two-price(15,35)") == std::string::npos);
  }

  // Brute force produces no class outside the closed-form list...
  CHECK(report.brute_only_classes.empty());
  // ...but never realizes pairs whose thresholds sit on a boundary value of
  // the wrong side's span.
  CHECK(report.analytic_only_classes ==
        std::vector<std::string>{"two-price(10,30)", "two-price(10,35)", "two-price(10,40)",
                                 "two-price(15,40)", "two-price(20,40)"});

  // The surviving boundary-adjusted equilibria carry non-canonical tables.
  CHECK(report.anomalies.size() == 3);
  for (const std::string& anomaly : report.anomalies) {
    CHECK(anomaly.find("non-canonical") != std::string::npos);
  }
}

TEST_CASE("trade enumeration agrees with the exhaustive scan") {
  TradeSpec spec;
  spec.seller_values = {r(10), r(20)};
  spec.buyer_values = {r(15), r(25)};
  spec.bid_grid = {r(5), r(10), r(15), r(20), r(25)};
  spec.rule = *PriceRule::parse("midpoint");
  validate_trade_spec(spec);
  const TypeAmbiguityGame compiled = build_trade_game(spec);

  const auto fast = enumerate_pure_lexne(compiled.game);
  std::vector<std::vector<int>> as_assignments;
  for (const auto& profile : fast) {
    std::vector<int> flat;
    for (const auto& per_player : profile.actions) {
      for (const auto& action : per_player) flat.push_back(action.pure_action());
    }
    as_assignments.push_back(std::move(flat));
  }
  CHECK(as_assignments == exhaustive_pure_equilibria(compiled.game, /*lex=*/true));
}

TEST_CASE("strategy round trips through the compiled game") {
  TradeSpec spec = trade_span_spec();
  const TypeAmbiguityGame compiled = build_trade_game(spec);
  const TradeStrategy seller = bids({15, 35, std::nullopt});
  const TradeStrategy buyer = bids({std::nullopt, 15, 35});
  const StrategyProfile profile = trade_profile(spec, compiled, seller, buyer);
  CHECK(trade_strategy_from_profile(spec, compiled, profile, 0) == seller);
  CHECK(trade_strategy_from_profile(spec, compiled, profile, 1) == buyer);
  CHECK_THROWS_AS(trade_profile(spec, compiled, bids({13, 35, 35}), buyer), Error);
}
