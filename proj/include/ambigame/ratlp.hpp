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
#include <vector>

#include "ambigame/rational.hpp"

namespace ambigame {

enum class Relation { LessEq, GreaterEq, Eq };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEq;
  Rational rhs;
};

// Maximization program over exact rationals. Variables default to a zero
// lower bound and no upper bound; call make_free / set bounds explicitly
// for anything else.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower;  // sized like objective
  std::vector<std::optional<Rational>> upper;

  explicit LinearProgram(std::size_t num_vars = 0);

  std::size_t num_vars() const { return objective.size(); }
  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  void make_free(std::size_t var);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                // defined when Optimal
  std::vector<Rational> point;   // defined when Optimal
};

/// Dense tableau simplex with Bland's anti-cycling pivot rule, two phases.
/// Deterministic given the canonical variable order of the input.
LpSolution solve_lp(const LinearProgram& lp);

/// Exact re-check of every constraint and variable bound at a point.
bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& point);

/// Objective value at a point.
Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& point);

}  // namespace ambigame
