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

#include <vector>

#include "ambigame/core_model.hpp"
#include "ambigame/ratlp.hpp"

namespace ambigame {

// Expected utilities of one type's response problem: rows are own pure
// actions, columns are the type's consistent states, against fixed opponent
// strategies.
struct PayoffMatrix {
  std::size_t num_actions = 0;
  std::size_t num_states = 0;
  std::vector<Rational> entries;  // row-major

  PayoffMatrix() = default;
  PayoffMatrix(std::size_t actions, std::size_t states)
      : num_actions(actions), num_states(states), entries(actions * states, Rational(0)) {}

  static PayoffMatrix from_acts(const std::vector<Act>& acts);

  const Rational& at(std::size_t action, std::size_t state) const {
    return entries[action * num_states + state];
  }
  Rational& at(std::size_t action, std::size_t state) {
    return entries[action * num_states + state];
  }
};

/// Actions whose act has the maximal worst outcome. Never empty.
std::vector<int> pure_min_br(const std::vector<Act>& acts);
std::vector<int> pure_min_br(const PayoffMatrix& payoffs);

/// Within the worst-outcome optimizers, those with the maximal best outcome.
/// Never empty; always a subset of pure_min_br.
std::vector<int> pure_lex_br(const std::vector<Act>& acts);
std::vector<int> pure_lex_br(const PayoffMatrix& payoffs);

struct MaximinResult {
  Rational value;
  MixedAction strategy;  // one attaining mixture
};

/// Exact maximin value over mixed actions, by linear programming.
MaximinResult maximin_mixed(const PayoffMatrix& payoffs);

// Mixed best response under worst-then-best ranking. The full argmax set can
// be a non-convex union of faces; the value pair plus one witness is what
// equilibrium verification needs.
struct MixedBrResult {
  Rational maximin_value;  // v*
  Rational best_case;      // M*, the best outcome attainable within the v* polytope
  MixedAction strategy;    // witness attaining (v*, M*) exactly
  LinearProgram polytope;  // {sigma in simplex : worst case >= v*}, zero objective
};

MixedBrResult mixed_lex_br(const PayoffMatrix& payoffs);

/// Worst-case / best-case expected payoff of a mixed action, exactly.
Rational mixed_worst_case(const PayoffMatrix& payoffs, const MixedAction& action);
Rational mixed_best_case(const PayoffMatrix& payoffs, const MixedAction& action);

}  // namespace ambigame
