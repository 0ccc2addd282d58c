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

#include "ambigame/best_response.hpp"

#include <algorithm>

namespace ambigame {

PayoffMatrix PayoffMatrix::from_acts(const std::vector<Act>& acts) {
  if (acts.empty()) throw Error(ErrorCode::DomainError, "no acts");
  PayoffMatrix m(acts.size(), acts.front().size());
  for (std::size_t a = 0; a < acts.size(); ++a) {
    if (acts[a].size() != m.num_states) {
      throw Error(ErrorCode::StateSetMismatch, "acts differ in state count");
    }
    for (std::size_t s = 0; s < m.num_states; ++s) m.at(a, s) = acts[a].values[s];
  }
  return m;
}

namespace {

Rational row_min(const PayoffMatrix& m, std::size_t a) {
  Rational v = m.at(a, 0);
  for (std::size_t s = 1; s < m.num_states; ++s) v = std::min(v, m.at(a, s));
  return v;
}

Rational row_max(const PayoffMatrix& m, std::size_t a) {
  Rational v = m.at(a, 0);
  for (std::size_t s = 1; s < m.num_states; ++s) v = std::max(v, m.at(a, s));
  return v;
}

}  // namespace

std::vector<int> pure_min_br(const PayoffMatrix& m) {
  if (m.num_actions == 0 || m.num_states == 0) {
    throw Error(ErrorCode::DomainError, "empty payoff matrix");
  }
  Rational best = row_min(m, 0);
  for (std::size_t a = 1; a < m.num_actions; ++a) best = std::max(best, row_min(m, a));
  std::vector<int> out;
  for (std::size_t a = 0; a < m.num_actions; ++a) {
    if (row_min(m, a) == best) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::vector<int> pure_lex_br(const PayoffMatrix& m) {
  const std::vector<int> min_br = pure_min_br(m);
  Rational best = row_max(m, min_br[0]);
  for (int a : min_br) best = std::max(best, row_max(m, a));
  std::vector<int> out;
  for (int a : min_br) {
    if (row_max(m, a) == best) out.push_back(a);
  }
  return out;
}

std::vector<int> pure_min_br(const std::vector<Act>& acts) {
  return pure_min_br(PayoffMatrix::from_acts(acts));
}

std::vector<int> pure_lex_br(const std::vector<Act>& acts) {
  return pure_lex_br(PayoffMatrix::from_acts(acts));
}

namespace {

// max v  s.t.  sum_a sigma_a C[a][w] >= v for every state w, sigma in simplex.
// Variables: sigma_0..sigma_{n-1} >= 0, then v free.
LinearProgram maximin_program(const PayoffMatrix& m) {
  const std::size_t n = m.num_actions;
  LinearProgram lp(n + 1);
  lp.objective[n] = 1;
  lp.make_free(n);
  for (std::size_t w = 0; w < m.num_states; ++w) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (std::size_t a = 0; a < n; ++a) row[a] = m.at(a, w);
    row[n] = Rational(-1);
    lp.add_constraint(std::move(row), Relation::GreaterEq, Rational(0));
  }
  std::vector<Rational> simplex_row(n + 1, Rational(0));
  for (std::size_t a = 0; a < n; ++a) simplex_row[a] = 1;
  lp.add_constraint(std::move(simplex_row), Relation::Eq, Rational(1));
  return lp;
}

MixedAction strategy_from_point(const std::vector<Rational>& point, std::size_t n) {
  MixedAction out;
  out.weights.assign(point.begin(), point.begin() + n);
  return out;
}

}  // namespace

MaximinResult maximin_mixed(const PayoffMatrix& m) {
  if (m.num_actions == 0 || m.num_states == 0) {
    throw Error(ErrorCode::DomainError, "empty payoff matrix");
  }
  const LpSolution sol = solve_lp(maximin_program(m));
  // Feasible (any simplex point) and bounded (v <= max entry), so Optimal.
  if (sol.status != LpStatus::Optimal) {
    throw Error(ErrorCode::DomainError, "maximin program did not solve to optimality");
  }
  return MaximinResult{sol.value, strategy_from_point(sol.point, m.num_actions)};
}

MixedBrResult mixed_lex_br(const PayoffMatrix& m) {
  const MaximinResult maximin = maximin_mixed(m);
  const std::size_t n = m.num_actions;

  // The worst-case-optimal polytope, stored with a zero objective so callers
  // can run membership checks against it.
  LinearProgram polytope(n);
  for (std::size_t w = 0; w < m.num_states; ++w) {
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a) row[a] = m.at(a, w);
    polytope.add_constraint(std::move(row), Relation::GreaterEq, maximin.value);
  }
  {
    std::vector<Rational> simplex_row(n, Rational(1));
    polytope.add_constraint(std::move(simplex_row), Relation::Eq, Rational(1));
  }

  // One LP per column: the best outcome reachable at that state within the
  // polytope. Ties across columns break toward the lowest column index.
  MixedBrResult out;
  out.maximin_value = maximin.value;
  out.polytope = polytope;
  bool have_best = false;
  for (std::size_t w = 0; w < m.num_states; ++w) {
    LinearProgram column_lp = polytope;
    for (std::size_t a = 0; a < n; ++a) column_lp.objective[a] = m.at(a, w);
    const LpSolution sol = solve_lp(column_lp);
    if (sol.status != LpStatus::Optimal) {
      throw Error(ErrorCode::DomainError, "column program did not solve to optimality");
    }
    if (!have_best || sol.value > out.best_case) {
      have_best = true;
      out.best_case = sol.value;
      out.strategy = strategy_from_point(sol.point, n);
    }
  }
  // The witness maximizes one column; its overall best case could exceed that
  // column's value only if another column did better, which the loop already
  // considered. Recompute for exactness.
  out.best_case = mixed_best_case(m, out.strategy);
  return out;
}

Rational mixed_worst_case(const PayoffMatrix& m, const MixedAction& action) {
  if (action.weights.size() != m.num_actions) {
    throw Error(ErrorCode::DomainError, "mixed action arity mismatch");
  }
  Rational worst;
  for (std::size_t w = 0; w < m.num_states; ++w) {
    Rational v(0);
    for (std::size_t a = 0; a < m.num_actions; ++a) {
      if (action.weights[a] != 0) v += action.weights[a] * m.at(a, w);
    }
    if (w == 0 || v < worst) worst = v;
  }
  return worst;
}

Rational mixed_best_case(const PayoffMatrix& m, const MixedAction& action) {
  if (action.weights.size() != m.num_actions) {
    throw Error(ErrorCode::DomainError, "mixed action arity mismatch");
  }
  Rational best;
  for (std::size_t w = 0; w < m.num_states; ++w) {
    Rational v(0);
    for (std::size_t a = 0; a < m.num_actions; ++a) {
      if (action.weights[a] != 0) v += action.weights[a] * m.at(a, w);
    }
    if (w == 0 || v > best) best = v;
  }
  return best;
}

}  // namespace ambigame
