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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ambigame/best_response.hpp"
#include "ambigame/core_model.hpp"

namespace ambigame {

enum class SolutionConcept { Minne, Lexne };

std::optional<SolutionConcept> concept_by_name(const std::string& name);  // "minne", "lexne"
const char* concept_name(SolutionConcept solution_concept);

struct DeviationWitness {
  int player = 0;
  int cell = 0;
  MixedAction deviation;        // degenerate in the pure case
  Rational before_worst, before_best;  // value pair of the current action
  Rational after_worst, after_best;    // value pair of the deviation
};

struct EquilibriumReport {
  bool equilibrium = false;
  std::optional<DeviationWitness> witness;
};

struct EnumerationOptions {
  std::uint64_t budget = 10'000'000;
  int jobs = 1;
};

/// All pure profiles where every type's action is a pure worst-case best
/// response against the others, in canonical (odometer) order.
std::vector<StrategyProfile> enumerate_pure_minne(const GameWithAmbiguity& game,
                                                  const EnumerationOptions& options = {});

/// The subset of enumerate_pure_minne where every type's action also
/// survives the best-outcome tie-break.
std::vector<StrategyProfile> enumerate_pure_lexne(const GameWithAmbiguity& game,
                                                  const EnumerationOptions& options = {});

/// Checks that every type best-responds in the profile. Pure profiles are
/// checked against pure deviations (the equilibria-in-pure-actions reading
/// the applied characterizations use); non-degenerate profiles are checked
/// against the exact mixed conditions: the worst case must equal the LP
/// maximin value, and for the tie-breaking concept the best case must equal
/// the optimum over the worst-case-optimal polytope.
EquilibriumReport verify_profile(const GameWithAmbiguity& game, const StrategyProfile& profile,
                                 SolutionConcept solution_concept);

struct MixedSearchConfig {
  int max_rounds = 64;
  bool averaging = true;
  std::uint64_t seed = 1;
  unsigned max_denominator = 16;
  // Each round's best-response iterate is rounded to this denominator before
  // averaging. Exact LP witnesses feed their denominators back into the next
  // round's programs; unbounded, that compounds into huge rationals.
  unsigned iterate_denominator = 60;
};

struct MixedSearchResult {
  std::optional<StrategyProfile> profile;  // verified, or empty on NotFound
  std::vector<std::string> trace;
};

/// Iterated type-wise worst-case best responses with historical averaging
/// from a seeded start. A candidate is returned only when its rationalized
/// form re-verifies exactly; otherwise NotFound with the iteration trace.
/// Sound but not complete: existence is guaranteed, finding is not.
MixedSearchResult search_mixed_minne(const GameWithAmbiguity& game,
                                     const MixedSearchConfig& config = {});

}  // namespace ambigame
