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

#include "ambigame/equilibrium.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_map>

namespace ambigame {

std::optional<SolutionConcept> concept_by_name(const std::string& name) {
  if (name == "minne") return SolutionConcept::Minne;
  if (name == "lexne") return SolutionConcept::Lexne;
  return std::nullopt;
}

const char* concept_name(SolutionConcept solution_concept) {
  return solution_concept == SolutionConcept::Minne ? "minne" : "lexne";
}

namespace {

struct Slot {
  int player;
  int cell;
};

// Pure-profile enumerator over type-wise action assignments. Best-response
// sets per (player, opponents' assignment) are memoized as bitmasks; the
// profile space may be partitioned across workers and merged in canonical
// order.
class PureEnumerator {
 public:
  PureEnumerator(const GameWithAmbiguity& game, bool lex, const EnumerationOptions& options)
      : game_(game), lex_(lex), options_(options) {
    for (int p = 0; p < game.num_players(); ++p) {
      if (game.num_actions(p) > 64) {
        throw Error(ErrorCode::DomainError, "enumeration supports at most 64 actions per player");
      }
      slot_base_.push_back(static_cast<int>(slots_.size()));
      for (int c = 0; c < game.num_types(p); ++c) slots_.push_back(Slot{p, c});
    }
    total_ = 1;
    for (const Slot& s : slots_) {
      const std::uint64_t radix = static_cast<std::uint64_t>(game.num_actions(s.player));
      if (total_ > (~std::uint64_t{0}) / radix) {
        throw BudgetExceededError(~std::uint64_t{0}, options.budget);
      }
      total_ *= radix;
    }
    if (total_ > options.budget) throw BudgetExceededError(total_, options.budget);

    // Opponent-key strides per player, over the slots of all other players.
    opp_strides_.assign(static_cast<std::size_t>(game.num_players()) * slots_.size(), 0);
    for (int p = 0; p < game.num_players(); ++p) {
      std::uint64_t stride = 1;
      for (int s = static_cast<int>(slots_.size()) - 1; s >= 0; --s) {
        if (slots_[s].player == p) continue;
        opp_strides_at(p, s) = stride;
        stride *= static_cast<std::uint64_t>(game.num_actions(slots_[s].player));
      }
    }
  }

  std::vector<StrategyProfile> run() {
    const int jobs = std::max(1, options_.jobs);
    std::vector<std::vector<std::vector<int>>> found(jobs);
    if (jobs == 1 || total_ < 1024) {
      scan_range(0, total_, found[0]);
    } else {
      std::vector<std::thread> workers;
      const std::uint64_t chunk = (total_ + jobs - 1) / jobs;
      for (int w = 0; w < jobs; ++w) {
        const auto scaled = static_cast<unsigned __int128>(chunk) * static_cast<unsigned>(w);
        const std::uint64_t begin =
            scaled >= total_ ? total_ : static_cast<std::uint64_t>(scaled);
        const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total_);
        workers.emplace_back([this, begin, end, w, &found] { scan_range(begin, end, found[w]); });
      }
      for (std::thread& t : workers) t.join();
    }

    std::vector<StrategyProfile> out;
    for (const auto& chunk_hits : found) {
      for (const std::vector<int>& assignment : chunk_hits) {
        out.push_back(to_profile(assignment));
      }
    }
    return out;
  }

 private:
  std::uint64_t& opp_strides_at(int player, int slot) {
    return opp_strides_[static_cast<std::size_t>(player) * slots_.size() + slot];
  }

  std::uint64_t opponent_key(int player, const std::vector<int>& assignment) const {
    std::uint64_t key = 0;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (slots_[s].player == player) continue;
      key += opp_strides_[static_cast<std::size_t>(player) * slots_.size() + s] *
             static_cast<std::uint64_t>(assignment[s]);
    }
    return key;
  }

  // Best-response bitmask per cell of `player` against the fixed pure
  // assignment of everyone else.
  std::vector<std::uint64_t> br_masks(int player, const std::vector<int>& assignment) const {
    std::vector<std::uint64_t> masks(game_.num_types(player), 0);
    const int num_actions = game_.num_actions(player);
    std::vector<int> profile(game_.num_players(), 0);
    for (int c = 0; c < game_.num_types(player); ++c) {
      const std::vector<int>& states = game_.partition(player)[c].states;
      // (worst, best) per own action, then argmax by worst (and best for lex).
      std::vector<Rational> worst(num_actions), best(num_actions);
      for (int a = 0; a < num_actions; ++a) {
        for (std::size_t k = 0; k < states.size(); ++k) {
          const int w = states[k];
          for (int j = 0; j < game_.num_players(); ++j) {
            if (j == player) continue;
            profile[j] = assignment[slot_base_[j] + game_.cell_of(j, w)];
          }
          profile[player] = a;
          const Rational& u = game_.utility(player, w, profile);
          if (k == 0) {
            worst[a] = u;
            best[a] = u;
          } else {
            if (u < worst[a]) worst[a] = u;
            if (u > best[a]) best[a] = u;
          }
        }
      }
      Rational top_worst = worst[0];
      for (int a = 1; a < num_actions; ++a) top_worst = std::max(top_worst, worst[a]);
      if (!lex_) {
        for (int a = 0; a < num_actions; ++a) {
          if (worst[a] == top_worst) masks[c] |= std::uint64_t{1} << a;
        }
      } else {
        bool have_top_best = false;
        Rational top_best;
        for (int a = 0; a < num_actions; ++a) {
          if (worst[a] != top_worst) continue;
          if (!have_top_best || best[a] > top_best) {
            have_top_best = true;
            top_best = best[a];
          }
        }
        for (int a = 0; a < num_actions; ++a) {
          if (worst[a] == top_worst && best[a] == top_best) masks[c] |= std::uint64_t{1} << a;
        }
      }
    }
    return masks;
  }

  void scan_range(std::uint64_t begin, std::uint64_t end,
                  std::vector<std::vector<int>>& hits) const {
    if (begin >= end) return;
    const std::size_t ns = slots_.size();
    std::vector<int> assignment(ns, 0);
    // Decode `begin` into odometer digits (last slot varies fastest).
    std::uint64_t rest = begin;
    for (int s = static_cast<int>(ns) - 1; s >= 0; --s) {
      const std::uint64_t radix = static_cast<std::uint64_t>(game_.num_actions(slots_[s].player));
      assignment[s] = static_cast<int>(rest % radix);
      rest /= radix;
    }

    std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>> memo(
        game_.num_players());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool ok = true;
      for (int p = 0; p < game_.num_players() && ok; ++p) {
        const std::uint64_t key = opponent_key(p, assignment);
        auto it = memo[p].find(key);
        if (it == memo[p].end()) {
          it = memo[p].emplace(key, br_masks(p, assignment)).first;
        }
        for (int c = 0; c < game_.num_types(p); ++c) {
          const int digit = assignment[slot_base_[p] + c];
          if (!(it->second[c] >> digit & 1)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) hits.push_back(assignment);

      for (int s = static_cast<int>(ns) - 1; s >= 0; --s) {
        if (++assignment[s] < game_.num_actions(slots_[s].player)) break;
        assignment[s] = 0;
      }
    }
  }

  StrategyProfile to_profile(const std::vector<int>& assignment) const {
    StrategyProfile profile;
    profile.actions.resize(game_.num_players());
    for (int p = 0; p < game_.num_players(); ++p) {
      for (int c = 0; c < game_.num_types(p); ++c) {
        profile.actions[p].push_back(
            MixedAction::pure(assignment[slot_base_[p] + c], game_.num_actions(p)));
      }
    }
    return profile;
  }

  const GameWithAmbiguity& game_;
  bool lex_;
  EnumerationOptions options_;
  std::vector<Slot> slots_;
  std::vector<int> slot_base_;  // first slot index per player
  std::uint64_t total_ = 1;
  std::vector<std::uint64_t> opp_strides_;  // [player][slot]
};

}  // namespace

std::vector<StrategyProfile> enumerate_pure_minne(const GameWithAmbiguity& game,
                                                  const EnumerationOptions& options) {
  return PureEnumerator(game, /*lex=*/false, options).run();
}

std::vector<StrategyProfile> enumerate_pure_lexne(const GameWithAmbiguity& game,
                                                  const EnumerationOptions& options) {
  return PureEnumerator(game, /*lex=*/true, options).run();
}

namespace {

EquilibriumReport verify_pure(const GameWithAmbiguity& game, const StrategyProfile& profile,
                              SolutionConcept solution_concept) {
  for (int p = 0; p < game.num_players(); ++p) {
    for (int c = 0; c < game.num_types(p); ++c) {
      const InducedActs induced = induced_acts(game, p, c, profile);
      const std::vector<int> br = solution_concept == SolutionConcept::Lexne
                                      ? pure_lex_br(induced.acts)
                                      : pure_min_br(induced.acts);
      const int current = profile.actions[p][c].pure_action();
      if (std::find(br.begin(), br.end(), current) != br.end()) continue;

      const int improving = br.front();  // lowest-index optimal action
      DeviationWitness witness;
      witness.player = p;
      witness.cell = c;
      witness.deviation = MixedAction::pure(improving, game.num_actions(p));
      witness.before_worst = induced.acts[current].worst();
      witness.before_best = induced.acts[current].best();
      witness.after_worst = induced.acts[improving].worst();
      witness.after_best = induced.acts[improving].best();
      return EquilibriumReport{false, witness};
    }
  }
  return EquilibriumReport{true, std::nullopt};
}

EquilibriumReport verify_mixed(const GameWithAmbiguity& game, const StrategyProfile& profile,
                               SolutionConcept solution_concept) {
  for (int p = 0; p < game.num_players(); ++p) {
    for (int c = 0; c < game.num_types(p); ++c) {
      const InducedActs induced = induced_acts(game, p, c, profile);
      const PayoffMatrix payoffs = PayoffMatrix::from_acts(induced.acts);
      const MixedAction& current = profile.actions[p][c];
      const Rational own_worst = mixed_worst_case(payoffs, current);
      const Rational own_best = mixed_best_case(payoffs, current);

      const MaximinResult maximin = maximin_mixed(payoffs);
      if (own_worst != maximin.value) {
        DeviationWitness witness;
        witness.player = p;
        witness.cell = c;
        witness.deviation = maximin.strategy;
        witness.before_worst = own_worst;
        witness.before_best = own_best;
        witness.after_worst = maximin.value;
        witness.after_best = mixed_best_case(payoffs, maximin.strategy);
        return EquilibriumReport{false, witness};
      }
      if (solution_concept == SolutionConcept::Lexne) {
        const MixedBrResult lex = mixed_lex_br(payoffs);
        if (own_best != lex.best_case) {
          DeviationWitness witness;
          witness.player = p;
          witness.cell = c;
          witness.deviation = lex.strategy;
          witness.before_worst = own_worst;
          witness.before_best = own_best;
          witness.after_worst = lex.maximin_value;
          witness.after_best = lex.best_case;
          return EquilibriumReport{false, witness};
        }
      }
    }
  }
  return EquilibriumReport{true, std::nullopt};
}

}  // namespace

EquilibriumReport verify_profile(const GameWithAmbiguity& game, const StrategyProfile& profile,
                                 SolutionConcept solution_concept) {
  validate_profile(game, profile);
  return profile.is_pure() ? verify_pure(game, profile, solution_concept)
                           : verify_mixed(game, profile, solution_concept);
}

namespace {

// Nearest mixture whose weights share the given denominator; the rounding
// slack lands on the heaviest weight so the result still sums to one.
MixedAction rationalize_action(const MixedAction& action, unsigned denominator) {
  const std::vector<Rational>& w = action.weights;
  std::vector<Integer> counts(w.size());
  Integer sum = 0;
  std::size_t heaviest = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    const Rational rounded = round_to_denominator(w[a], Integer(denominator));
    counts[a] = numerator(rounded * Rational(denominator));
    if (counts[a] < 0) counts[a] = 0;
    sum += counts[a];
    if (w[a] > w[heaviest]) heaviest = a;
  }
  counts[heaviest] += Integer(denominator) - sum;
  if (counts[heaviest] < 0) {  // degenerate rounding; fall back to pure on the heaviest
    for (auto& k : counts) k = 0;
    counts[heaviest] = Integer(denominator);
  }
  MixedAction out;
  out.weights.reserve(w.size());
  for (std::size_t a = 0; a < w.size(); ++a) {
    out.weights.emplace_back(counts[a], Integer(denominator));
  }
  return out;
}

StrategyProfile rationalize_profile(const GameWithAmbiguity& game, const StrategyProfile& profile,
                                    unsigned denominator) {
  StrategyProfile out = profile;
  for (int p = 0; p < game.num_players(); ++p) {
    for (int c = 0; c < game.num_types(p); ++c) {
      out.actions[p][c] = rationalize_action(profile.actions[p][c], denominator);
    }
  }
  return out;
}

StrategyProfile seeded_start(const GameWithAmbiguity& game, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 4);
  StrategyProfile profile;
  profile.actions.resize(game.num_players());
  for (int p = 0; p < game.num_players(); ++p) {
    for (int c = 0; c < game.num_types(p); ++c) {
      std::vector<Rational> w(game.num_actions(p));
      Rational sum(0);
      for (auto& x : w) {
        x = Rational(weight(rng));
        sum += x;
      }
      for (auto& x : w) x /= sum;
      profile.actions[p].push_back(MixedAction{std::move(w)});
    }
  }
  return profile;
}

}  // namespace

MixedSearchResult search_mixed_minne(const GameWithAmbiguity& game,
                                     const MixedSearchConfig& config) {
  MixedSearchResult result;
  if (config.max_rounds <= 0) return result;

  StrategyProfile current = seeded_start(game, config.seed);
  StrategyProfile average = current;

  auto try_candidates = [&](const StrategyProfile& base) -> std::optional<StrategyProfile> {
    for (unsigned d = 1; d <= config.max_denominator; ++d) {
      StrategyProfile candidate = rationalize_profile(game, base, d);
      if (verify_profile(game, candidate, SolutionConcept::Minne).equilibrium) return candidate;
    }
    return std::nullopt;
  };

  for (int round = 1; round <= config.max_rounds; ++round) {
    const StrategyProfile& target = config.averaging ? average : current;
    StrategyProfile next = current;
    for (int p = 0; p < game.num_players(); ++p) {
      for (int c = 0; c < game.num_types(p); ++c) {
        const InducedActs induced = induced_acts(game, p, c, target);
        const MaximinResult best = maximin_mixed(PayoffMatrix::from_acts(induced.acts));
        next.actions[p][c] = rationalize_action(best.strategy, config.iterate_denominator);
      }
    }
    current = next;
    const Rational round_weight(1, round + 1);
    for (int p = 0; p < game.num_players(); ++p) {
      for (int c = 0; c < game.num_types(p); ++c) {
        for (std::size_t a = 0; a < average.actions[p][c].weights.size(); ++a) {
          average.actions[p][c].weights[a] =
              average.actions[p][c].weights[a] * (1 - round_weight) +
              current.actions[p][c].weights[a] * round_weight;
        }
      }
    }

    if (auto found = try_candidates(average)) {
      result.profile = std::move(found);
      result.trace.push_back("round " + std::to_string(round) + ": candidate verified");
      return result;
    }
    if (auto found = try_candidates(current)) {
      result.profile = std::move(found);
      result.trace.push_back("round " + std::to_string(round) +
                             ": best-response candidate verified");
      return result;
    }
    result.trace.push_back("round " + std::to_string(round) + ": no verified candidate");
  }
  return result;
}

}  // namespace ambigame
