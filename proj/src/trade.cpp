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

#include "ambigame/trade.hpp"

#include <algorithm>
#include <set>

namespace ambigame {

Rational PriceRule::price(const Rational& seller_bid, const Rational& buyer_bid) const {
  switch (kind) {
    case PriceRuleKind::Midpoint: return (seller_bid + buyer_bid) / 2;
    case PriceRuleKind::SellerPrice: return seller_bid;
    case PriceRuleKind::BuyerPrice: return buyer_bid;
    case PriceRuleKind::Convex: return (1 - lambda) * seller_bid + lambda * buyer_bid;
  }
  return seller_bid;
}

std::string PriceRule::name() const {
  switch (kind) {
    case PriceRuleKind::Midpoint: return "midpoint";
    case PriceRuleKind::SellerPrice: return "seller-price";
    case PriceRuleKind::BuyerPrice: return "buyer-price";
    case PriceRuleKind::Convex: return "convex(" + rational_to_string(lambda) + ")";
  }
  return "midpoint";
}

std::optional<PriceRule> PriceRule::parse(const std::string& text) {
  if (text == "midpoint") return PriceRule{PriceRuleKind::Midpoint, Rational(1, 2)};
  if (text == "seller-price") return PriceRule{PriceRuleKind::SellerPrice, Rational(0)};
  if (text == "buyer-price") return PriceRule{PriceRuleKind::BuyerPrice, Rational(1)};
  if (text.starts_with("convex(") && text.ends_with(")")) {
    auto lambda = try_parse_rational(text.substr(7, text.size() - 8));
    if (lambda) return PriceRule{PriceRuleKind::Convex, *lambda};
  }
  return std::nullopt;
}

namespace {

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

void validate_trade_spec(TradeSpec& spec) {
  sort_unique(spec.seller_values);
  sort_unique(spec.buyer_values);
  sort_unique(spec.bid_grid);
  if (spec.seller_values.empty()) throw Error(ErrorCode::InvalidSpec, "no seller values");
  if (spec.buyer_values.empty()) throw Error(ErrorCode::InvalidSpec, "no buyer values");
  if (spec.bid_grid.empty()) throw Error(ErrorCode::InvalidSpec, "empty bid grid");
  for (const Rational& v : spec.seller_values) {
    if (!std::binary_search(spec.bid_grid.begin(), spec.bid_grid.end(), v)) {
      throw Error(ErrorCode::InvalidSpec,
                  "bid grid misses seller value " + rational_to_string(v));
    }
  }
  for (const Rational& v : spec.buyer_values) {
    if (!std::binary_search(spec.bid_grid.begin(), spec.bid_grid.end(), v)) {
      throw Error(ErrorCode::InvalidSpec, "bid grid misses buyer value " + rational_to_string(v));
    }
  }
  if (spec.rule.kind == PriceRuleKind::Convex &&
      (spec.rule.lambda < 0 || spec.rule.lambda > 1)) {
    throw Error(ErrorCode::InvalidSpec, "convex rule weight outside [0,1]");
  }
  // Admissibility on every matched grid pair: bounds and weak monotonicity.
  for (std::size_t i = 0; i < spec.bid_grid.size(); ++i) {
    for (std::size_t j = i; j < spec.bid_grid.size(); ++j) {
      const Rational& lo = spec.bid_grid[i];
      const Rational& hi = spec.bid_grid[j];
      const Rational x = spec.rule.price(lo, hi);
      if (x < lo || x > hi) {
        throw Error(ErrorCode::InvalidSpec,
                    "price rule leaves [" + rational_to_string(lo) + "," + rational_to_string(hi) +
                        "] at x=" + rational_to_string(x));
      }
      if (j + 1 < spec.bid_grid.size()) {
        if (spec.rule.price(lo, spec.bid_grid[j + 1]) < x) {
          throw Error(ErrorCode::InvalidSpec, "price rule not monotone in the buyer bid");
        }
      }
      if (i + 1 <= j && spec.rule.price(spec.bid_grid[i + 1], hi) < x &&
          spec.bid_grid[i + 1] <= hi) {
        throw Error(ErrorCode::InvalidSpec, "price rule not monotone in the seller bid");
      }
    }
  }
}

TypeAmbiguityGame build_trade_game(const TradeSpec& spec) {
  TradeSpec checked = spec;
  validate_trade_spec(checked);

  GameDescription d;
  d.players = {"seller", "buyer"};
  std::vector<std::string> actions{kNoParticipation};
  for (const Rational& p : checked.bid_grid) actions.push_back(rational_to_string(p));
  d.actions = {actions, actions};

  for (const Rational& vs : checked.seller_values) {
    for (const Rational& vb : checked.buyer_values) {
      d.state_ids.push_back(rational_to_string(vs) + "|" + rational_to_string(vb));
      d.state_types.push_back({rational_to_string(vs), rational_to_string(vb)});
    }
  }

  std::size_t state = 0;
  for (const Rational& vs : checked.seller_values) {
    for (const Rational& vb : checked.buyer_values) {
      const std::string& id = d.state_ids[state++];
      auto& seller_u = d.utilities["seller"][id];
      auto& buyer_u = d.utilities["buyer"][id];
      for (std::size_t i = 0; i <= checked.bid_grid.size(); ++i) {
        for (std::size_t j = 0; j <= checked.bid_grid.size(); ++j) {
          const std::string key = actions[i] + "|" + actions[j];
          Rational us(0), ub(0);
          if (i > 0 && j > 0) {
            const Rational& bid_s = checked.bid_grid[i - 1];
            const Rational& bid_b = checked.bid_grid[j - 1];
            if (bid_s <= bid_b) {
              const Rational x = checked.rule.price(bid_s, bid_b);
              us = x - vs;
              ub = vb - x;
            }
          }
          seller_u[key] = us;
          buyer_u[key] = ub;
        }
      }
    }
  }
  return as_type_ambiguity_game(validate_game(d));
}

std::string TradeClassification::label() const {
  switch (kind) {
    case TradeClassKind::NoTransaction: return "no-transaction";
    case TradeClassKind::OnePrice: return "one-price(" + rational_to_string(price) + ")";
    case TradeClassKind::TwoPrice:
      return "two-price(" + rational_to_string(low_price) + "," +
             rational_to_string(high_price) + ")";
    case TradeClassKind::NotEquilibrium: return "not-equilibrium";
  }
  return "not-equilibrium";
}

TradeOutcomeTable outcome_table(const TradeSpec& spec, const TradeStrategy& seller,
                                const TradeStrategy& buyer) {
  TradeOutcomeTable table;
  table.num_buyer_values = spec.buyer_values.size();
  table.cells.assign(spec.seller_values.size() * spec.buyer_values.size(), std::nullopt);
  for (std::size_t i = 0; i < spec.seller_values.size(); ++i) {
    for (std::size_t j = 0; j < spec.buyer_values.size(); ++j) {
      const auto& bs = seller.bids.at(i);
      const auto& bb = buyer.bids.at(j);
      if (bs && bb && *bs <= *bb) {
        table.cells[i * table.num_buyer_values + j] = spec.rule.price(*bs, *bb);
      }
    }
  }
  return table;
}

namespace {

int bid_action_index(const TradeSpec& spec, const std::optional<Rational>& bid) {
  if (!bid) return 0;
  auto it = std::lower_bound(spec.bid_grid.begin(), spec.bid_grid.end(), *bid);
  if (it == spec.bid_grid.end() || *it != *bid) {
    throw Error(ErrorCode::UnknownAction, "bid " + rational_to_string(*bid) + " is off the grid");
  }
  return 1 + static_cast<int>(it - spec.bid_grid.begin());
}

TradeStrategy canonical_one_price_seller(const TradeSpec& spec, const Rational& p) {
  TradeStrategy s;
  for (const Rational& v : spec.seller_values) {
    s.bids.push_back(v <= p ? std::optional<Rational>(p) : std::nullopt);
  }
  return s;
}

TradeStrategy canonical_one_price_buyer(const TradeSpec& spec, const Rational& p) {
  TradeStrategy b;
  for (const Rational& v : spec.buyer_values) {
    b.bids.push_back(v >= p ? std::optional<Rational>(p) : std::nullopt);
  }
  return b;
}

TradeStrategy canonical_two_price_seller(const TradeSpec& spec, const Rational& lo,
                                         const Rational& hi) {
  TradeStrategy s;
  for (const Rational& v : spec.seller_values) s.bids.push_back(v <= lo ? lo : hi);
  return s;
}

TradeStrategy canonical_two_price_buyer(const TradeSpec& spec, const Rational& lo,
                                        const Rational& hi) {
  TradeStrategy b;
  for (const Rational& v : spec.buyer_values) b.bids.push_back(v >= hi ? hi : lo);
  return b;
}

TradeOutcomeTable canonical_two_price_table(const TradeSpec& spec, const Rational& lo,
                                            const Rational& hi) {
  return outcome_table(spec, canonical_two_price_seller(spec, lo, hi),
                       canonical_two_price_buyer(spec, lo, hi));
}

}  // namespace

StrategyProfile trade_profile(const TradeSpec& spec, const TypeAmbiguityGame& compiled,
                              const TradeStrategy& seller, const TradeStrategy& buyer) {
  const GameWithAmbiguity& game = compiled.game;
  if (seller.bids.size() != spec.seller_values.size() ||
      buyer.bids.size() != spec.buyer_values.size()) {
    throw Error(ErrorCode::IncompleteOpponentStrategy, "strategy does not cover every value");
  }
  StrategyProfile profile;
  profile.actions.resize(2);
  for (std::size_t i = 0; i < seller.bids.size(); ++i) {
    profile.actions[0].push_back(
        MixedAction::pure(bid_action_index(spec, seller.bids[i]), game.num_actions(0)));
  }
  for (std::size_t j = 0; j < buyer.bids.size(); ++j) {
    profile.actions[1].push_back(
        MixedAction::pure(bid_action_index(spec, buyer.bids[j]), game.num_actions(1)));
  }
  return profile;
}

TradeStrategy trade_strategy_from_profile(const TradeSpec& spec,
                                          const TypeAmbiguityGame& compiled,
                                          const StrategyProfile& profile, int player) {
  const GameWithAmbiguity& game = compiled.game;
  TradeStrategy out;
  for (int c = 0; c < game.num_types(player); ++c) {
    const int action = profile.actions[player][c].pure_action();
    if (action < 0) throw Error(ErrorCode::InvalidSpec, "profile is not pure");
    if (action == 0) {
      out.bids.push_back(std::nullopt);
    } else {
      out.bids.push_back(spec.bid_grid[action - 1]);
    }
  }
  return out;
}

std::vector<TradeEquilibrium> enumerate_lexne_analytic(const TradeSpec& raw) {
  TradeSpec spec = raw;
  validate_trade_spec(spec);
  const Rational min_vs = spec.seller_values.front();
  const Rational max_vs = spec.seller_values.back();
  const Rational min_vb = spec.buyer_values.front();
  const Rational max_vb = spec.buyer_values.back();

  std::vector<TradeEquilibrium> out;
  {
    TradeEquilibrium none;
    none.classification.kind = TradeClassKind::NoTransaction;
    none.seller.bids.assign(spec.seller_values.size(), std::nullopt);
    none.buyer.bids.assign(spec.buyer_values.size(), std::nullopt);
    out.push_back(std::move(none));
  }
  if (min_vs <= max_vb) {
    for (const Rational& p : spec.bid_grid) {
      if (p < min_vs || p > max_vb) continue;
      TradeEquilibrium eq;
      eq.classification.kind = TradeClassKind::OnePrice;
      eq.classification.price = p;
      eq.seller = canonical_one_price_seller(spec, p);
      eq.buyer = canonical_one_price_buyer(spec, p);
      out.push_back(std::move(eq));
    }
  }
  for (const Rational& lo : spec.bid_grid) {
    for (const Rational& hi : spec.bid_grid) {
      if (!(lo < hi)) continue;
      if (!(min_vs <= lo && lo < max_vs && max_vs <= hi)) continue;
      if (!(lo <= min_vb && min_vb < hi && hi <= max_vb)) continue;
      TradeEquilibrium eq;
      eq.classification.kind = TradeClassKind::TwoPrice;
      eq.classification.low_price = lo;
      eq.classification.high_price = hi;
      eq.seller = canonical_two_price_seller(spec, lo, hi);
      eq.buyer = canonical_two_price_buyer(spec, lo, hi);
      out.push_back(std::move(eq));
    }
  }
  return out;
}

TradeClassification classify_profile(const TradeSpec& spec, const TypeAmbiguityGame& compiled,
                                     const TradeStrategy& seller, const TradeStrategy& buyer) {
  const StrategyProfile profile = trade_profile(spec, compiled, seller, buyer);
  const EquilibriumReport report =
      verify_profile(compiled.game, profile, SolutionConcept::Lexne);
  TradeClassification cls;
  if (!report.equilibrium) {
    cls.kind = TradeClassKind::NotEquilibrium;
    cls.witness = report.witness;
    return cls;
  }

  const TradeOutcomeTable table = outcome_table(spec, seller, buyer);
  std::set<Rational> prices;
  for (const auto& cell : table.cells) {
    if (cell) prices.insert(*cell);
  }
  if (prices.empty()) {
    cls.kind = TradeClassKind::NoTransaction;
    return cls;
  }
  if (prices.size() == 1) {
    cls.kind = TradeClassKind::OnePrice;
    cls.price = *prices.begin();
    return cls;
  }

  // Two-price labels come from the bids of the transacting types; the mixed
  // cell transacts at x(low, high), not at a bid.
  std::set<Rational> bids;
  for (std::size_t i = 0; i < spec.seller_values.size(); ++i) {
    for (std::size_t j = 0; j < spec.buyer_values.size(); ++j) {
      if (!table.cells[i * table.num_buyer_values + j]) continue;
      bids.insert(*seller.bids[i]);
      bids.insert(*buyer.bids[j]);
    }
  }
  cls.kind = TradeClassKind::TwoPrice;
  cls.low_price = *bids.begin();
  cls.high_price = *bids.rbegin();
  cls.canonical_table =
      bids.size() == 2 && table == canonical_two_price_table(spec, cls.low_price, cls.high_price);
  return cls;
}

TradeClassification classify_profile(const TradeSpec& raw, const TradeStrategy& seller,
                                     const TradeStrategy& buyer) {
  TradeSpec spec = raw;
  validate_trade_spec(spec);
  return classify_profile(spec, build_trade_game(spec), seller, buyer);
}

namespace {

std::string strategy_text(const TradeStrategy& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.bids.size(); ++i) {
    if (i) out += " ";
    out += s.bids[i] ? rational_to_string(*s.bids[i]) : std::string(kNoParticipation);
  }
  return out + "]";
}

}  // namespace

CrossValidationReport cross_validate(const TradeSpec& raw, std::uint64_t budget, int jobs) {
  TradeSpec spec = raw;
  validate_trade_spec(spec);
  const TypeAmbiguityGame compiled = build_trade_game(spec);

  EnumerationOptions options;
  options.budget = budget;
  options.jobs = jobs;
  const std::vector<StrategyProfile> brute = enumerate_pure_lexne(compiled.game, options);
  const std::vector<TradeEquilibrium> analytic = enumerate_lexne_analytic(spec);

  CrossValidationReport report;
  report.brute_force_count = brute.size();

  std::set<std::string> brute_labels;
  std::set<std::pair<std::string, std::string>> brute_strategies;
  for (const StrategyProfile& profile : brute) {
    const TradeStrategy seller = trade_strategy_from_profile(spec, compiled, profile, 0);
    const TradeStrategy buyer = trade_strategy_from_profile(spec, compiled, profile, 1);
    brute_strategies.emplace(strategy_text(seller), strategy_text(buyer));
    const TradeClassification cls = classify_profile(spec, compiled, seller, buyer);
    if (cls.kind == TradeClassKind::NotEquilibrium) {
      report.anomalies.push_back("brute-force equilibrium failed to re-verify: seller " +
                                 strategy_text(seller) + " buyer " + strategy_text(buyer));
      continue;
    }
    if (cls.kind == TradeClassKind::TwoPrice && !cls.canonical_table) {
      report.anomalies.push_back(
          "equilibrium with a non-canonical two-price outcome table: seller " +
          strategy_text(seller) + " buyer " + strategy_text(buyer) + " labeled " + cls.label());
    }
    brute_labels.insert(cls.label());
  }

  std::set<std::string> analytic_labels;
  for (const TradeEquilibrium& eq : analytic) {
    analytic_labels.insert(eq.classification.label());
    if (!brute_strategies.count({strategy_text(eq.seller), strategy_text(eq.buyer)})) {
      report.missing_analytic.push_back(eq.classification.label() + ": seller " +
                                        strategy_text(eq.seller) + " buyer " +
                                        strategy_text(eq.buyer));
    }
  }
  for (const std::string& label : brute_labels) {
    if (!analytic_labels.count(label)) report.brute_only_classes.push_back(label);
  }
  for (const std::string& label : analytic_labels) {
    if (!brute_labels.count(label)) report.analytic_only_classes.push_back(label);
  }
  report.match = report.missing_analytic.empty() && report.brute_only_classes.empty() &&
                 report.analytic_only_classes.empty() && report.anomalies.empty();
  return report;
}

}  // namespace ambigame
