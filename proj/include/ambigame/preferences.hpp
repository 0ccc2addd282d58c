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

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ambigame/core_model.hpp"

namespace ambigame {

enum class Ordering { Less, Equal, Greater };

Ordering reverse_ordering(Ordering o);
const char* ordering_name(Ordering o);

/// Wald comparison: ranks two acts over the same state set by their worst
/// outcomes. Greater means the first act is preferred.
Ordering min_compare(const Act& a, const Act& b);

/// Worst outcome first, best outcome breaks ties.
Ordering lex_compare(const Act& a, const Act& b);

/// (worst, best) pair; acts with equal pairs are interchangeable for every
/// comparator in this module's monotone (min, max) family.
std::pair<Rational, Rational> canonical_minmax(const Act& a);

// A named total pre-order on acts sharing a state set.
struct Comparator {
  std::string name;
  std::function<Ordering(const Act&, const Act&)> compare;
};

Comparator min_comparator();
Comparator lex_comparator();
/// Breaks worst-outcome ties by the sorted remainder (recursive worst-case
/// comparison). Kept as the known counterexample to irrelevant-information
/// independence.
Comparator second_worst_comparator();
/// Worst outcome first, then a user-supplied monotone coarsening of the best.
Comparator min_then_comparator(const std::string& name,
                               std::function<Rational(const Rational&)> coarsen);
/// CLI-visible names: "min", "lex", "second-worst".
std::optional<Comparator> comparator_by_name(const std::string& name);

enum class Axiom {
  Monotonicity,          // pointwise dominance is never ranked Less
  StateSymmetry,         // invariance under relabeling states in both acts
  IrrelevantInformation, // invariance under duplicating a state in both acts
  CertaintyIndependence, // strict ranks survive mixing with a constant act
  UncertaintyAversion,   // mixtures of indifferent acts are not ranked below them
};

std::optional<Axiom> axiom_by_name(const std::string& name);
const char* axiom_name(Axiom axiom);

struct AxiomViolation {
  Act left, right;
  Act transformed_left, transformed_right;
  Ordering before = Ordering::Equal;
  Ordering after = Ordering::Equal;
  std::string transform;
};

struct AxiomReport {
  Axiom axiom;
  bool pass = true;
  std::vector<AxiomViolation> violations;
};

struct AxiomCheckOptions {
  // Exact mixture weights used for the Gilboa-Schmeidler style checks.
  std::vector<Rational> mixture_weights = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                           Rational(2, 3), Rational(3, 4)};
  std::size_t max_permutations = 24;
  std::uint64_t permutation_seed = 0;
  std::size_t max_violations = 8;
};

/// Finite-sample check over every ordered pair of battery acts; the needed
/// transforms (permutations, duplications, mixtures) are generated here.
AxiomReport check_axiom(Axiom axiom, const Comparator& comparator,
                        const std::vector<Act>& battery, const AxiomCheckOptions& options = {});

struct RefinementViolation {
  Act left, right;
  Ordering coarse = Ordering::Equal;
  Ordering fine = Ordering::Equal;
};

struct RefinementReport {
  bool pass = true;
  std::vector<RefinementViolation> violations;
};

/// Passes iff every strict comparison of `coarse` is a strict comparison of
/// `fine` in the same direction, over all ordered battery pairs.
RefinementReport check_refinement(const Comparator& coarse, const Comparator& fine,
                                  const std::vector<Act>& battery);

/// Seeded random acts over a common state set; entries are small rationals.
std::vector<Act> random_battery(std::mt19937_64& rng, std::size_t count, std::size_t num_states);

}  // namespace ambigame
