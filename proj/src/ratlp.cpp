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

#include "ambigame/ratlp.hpp"

#include <cassert>

#include "ambigame/errors.hpp"

namespace ambigame {

LinearProgram::LinearProgram(std::size_t num_vars)
    : objective(num_vars, Rational(0)),
      lower(num_vars, std::optional<Rational>(Rational(0))),
      upper(num_vars, std::nullopt) {}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != objective.size()) {
    throw Error(ErrorCode::DomainError, "constraint arity differs from objective arity");
  }
  constraints.push_back(LinearConstraint{std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::make_free(std::size_t var) {
  lower.at(var) = std::nullopt;
  upper.at(var) = std::nullopt;
}

bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.lower[j] && point[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && point[j] > *lp.upper[j]) return false;
  }
  for (const LinearConstraint& row : lp.constraints) {
    Rational lhs(0);
    for (std::size_t j = 0; j < point.size(); ++j) lhs += row.coeffs[j] * point[j];
    switch (row.relation) {
      case Relation::LessEq: if (lhs > row.rhs) return false; break;
      case Relation::GreaterEq: if (lhs < row.rhs) return false; break;
      case Relation::Eq: if (lhs != row.rhs) return false; break;
    }
  }
  return true;
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& point) {
  Rational value(0);
  for (std::size_t j = 0; j < point.size(); ++j) value += lp.objective[j] * point[j];
  return value;
}

namespace {

// x_j = sign * y_{column} (+ y2 term for free variables) + shift
struct VarMap {
  int column = -1;   // primary y column
  int column2 = -1;  // negative part of a free variable
  int sign = 1;
  Rational shift;
};

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural + slack/surplus + artificial, excl. rhs
  std::vector<std::vector<Rational>> a;  // rows x (cols + 1), last column rhs
  std::vector<int> basis;                // basic variable index per row
  int first_artificial = -1;             // variable indices >= this are artificial

  Rational& at(std::size_t r, std::size_t c) { return a[r][c]; }
  Rational& rhs(std::size_t r) { return a[r][cols]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / a[pr][pc];
    for (std::size_t c = 0; c <= cols; ++c) a[pr][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc] == 0) continue;
      const Rational factor = a[r][pc];
      for (std::size_t c = 0; c <= cols; ++c) a[r][c] -= factor * a[pr][c];
    }
    basis[pr] = static_cast<int>(pc);
  }
};

// Bland's rule on the given maximization cost vector. Returns false when the
// program is unbounded in the current phase.
bool run_simplex(Tableau& t, const std::vector<Rational>& cost, bool allow_artificial_entering) {
  while (true) {
    // Reduced costs zc_j = z_j - c_j from scratch each iteration; the
    // instances here are tiny and recomputing keeps the pivot loop simple.
    int entering = -1;
    for (std::size_t j = 0; j < t.cols; ++j) {
      if (!allow_artificial_entering && t.first_artificial >= 0 &&
          static_cast<int>(j) >= t.first_artificial) {
        continue;
      }
      bool basic = false;
      for (std::size_t r = 0; r < t.rows; ++r) {
        if (t.basis[r] == static_cast<int>(j)) { basic = true; break; }
      }
      if (basic) continue;
      Rational z(0);
      for (std::size_t r = 0; r < t.rows; ++r) {
        const Rational& cb = cost[t.basis[r]];
        if (cb != 0) z += cb * t.a[r][j];
      }
      if (z - cost[j] < 0) { entering = static_cast<int>(j); break; }  // lowest index
    }
    if (entering < 0) return true;  // optimal

    int leaving_row = -1;
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows; ++r) {
      if (t.a[r][entering] <= 0) continue;
      Rational ratio = t.rhs(r) / t.a[r][entering];
      if (leaving_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leaving_row])) {
        leaving_row = static_cast<int>(r);
        best_ratio = ratio;
      }
    }
    if (leaving_row < 0) return false;  // unbounded direction
    t.pivot(leaving_row, entering);
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.lower.size() != n || lp.upper.size() != n) {
    throw Error(ErrorCode::DomainError, "bound vectors must match objective arity");
  }

  // Shift every variable onto y >= 0.
  std::vector<VarMap> vmap(n);
  int num_y = 0;
  struct ExtraRow { std::vector<std::pair<int, Rational>> terms; Relation rel; Rational rhs; };
  std::vector<ExtraRow> extra_rows;  // upper bounds that become rows
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = lp.lower[j];
    const auto& hi = lp.upper[j];
    if (lo && hi && *hi < *lo) {
      return LpSolution{LpStatus::Infeasible, Rational(0), {}};
    }
    if (lo) {
      vmap[j] = VarMap{num_y++, -1, 1, *lo};
      if (hi) {
        extra_rows.push_back({{{vmap[j].column, Rational(1)}}, Relation::LessEq, *hi - *lo});
      }
    } else if (hi) {
      vmap[j] = VarMap{num_y++, -1, -1, *hi};
    } else {
      vmap[j].column = num_y++;
      vmap[j].column2 = num_y++;
      vmap[j].sign = 1;
      vmap[j].shift = Rational(0);
    }
  }

  // Rows over y with constants folded into the right-hand side.
  struct StdRow { std::vector<Rational> coeffs; Relation relation; Rational rhs; };
  std::vector<StdRow> rows;
  auto substitute = [&](const std::vector<Rational>& coeffs, Relation rel, const Rational& rhs) {
    StdRow row{std::vector<Rational>(static_cast<std::size_t>(num_y), Rational(0)), rel, rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (coeffs[j] == 0) continue;
      row.rhs -= coeffs[j] * vmap[j].shift;
      row.coeffs[vmap[j].column] += coeffs[j] * vmap[j].sign;
      if (vmap[j].column2 >= 0) row.coeffs[vmap[j].column2] -= coeffs[j];
    }
    rows.push_back(std::move(row));
  };
  for (const LinearConstraint& c : lp.constraints) substitute(c.coeffs, c.relation, c.rhs);
  for (const ExtraRow& e : extra_rows) {
    StdRow row{std::vector<Rational>(static_cast<std::size_t>(num_y), Rational(0)), e.rel, e.rhs};
    for (const auto& [col, coef] : e.terms) row.coeffs[col] += coef;
    rows.push_back(std::move(row));
  }
  for (StdRow& row : rows) {
    if (row.rhs < 0) {
      for (Rational& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEq) row.relation = Relation::GreaterEq;
      else if (row.relation == Relation::GreaterEq) row.relation = Relation::LessEq;
    }
  }

  // Slack, surplus, artificial columns.
  const std::size_t m = rows.size();
  int num_slack = 0, num_artificial = 0;
  for (const StdRow& row : rows) {
    if (row.relation != Relation::Eq) ++num_slack;
    if (row.relation != Relation::LessEq) ++num_artificial;
  }
  Tableau t;
  t.rows = m;
  t.cols = static_cast<std::size_t>(num_y + num_slack + num_artificial);
  t.first_artificial = num_y + num_slack;
  t.a.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.assign(m, -1);
  {
    int slack_at = num_y;
    int art_at = t.first_artificial;
    for (std::size_t r = 0; r < m; ++r) {
      for (int c = 0; c < num_y; ++c) t.a[r][c] = rows[r].coeffs[c];
      t.rhs(r) = rows[r].rhs;
      switch (rows[r].relation) {
        case Relation::LessEq:
          t.a[r][slack_at] = 1;
          t.basis[r] = slack_at++;
          break;
        case Relation::GreaterEq:
          t.a[r][slack_at] = -1;
          ++slack_at;
          t.a[r][art_at] = 1;
          t.basis[r] = art_at++;
          break;
        case Relation::Eq:
          t.a[r][art_at] = 1;
          t.basis[r] = art_at++;
          break;
      }
    }
  }

  // Phase 1: drive the artificial variables to zero.
  if (num_artificial > 0) {
    std::vector<Rational> phase1_cost(t.cols, Rational(0));
    for (std::size_t j = t.first_artificial; j < t.cols; ++j) phase1_cost[j] = Rational(-1);
    bool ok = run_simplex(t, phase1_cost, /*allow_artificial_entering=*/true);
    assert(ok);  // phase 1 is bounded below by zero
    (void)ok;
    Rational infeasibility(0);
    for (std::size_t r = 0; r < t.rows; ++r) {
      if (t.basis[r] >= t.first_artificial) infeasibility += t.rhs(r);
    }
    if (infeasibility != 0) return LpSolution{LpStatus::Infeasible, Rational(0), {}};
    // Pivot basic artificials out; a row with no eligible pivot is redundant.
    for (std::size_t r = 0; r < t.rows;) {
      if (t.basis[r] < t.first_artificial) { ++r; continue; }
      int col = -1;
      for (int j = 0; j < t.first_artificial; ++j) {
        if (t.a[r][j] != 0) { col = j; break; }
      }
      if (col >= 0) {
        t.pivot(r, col);
        ++r;
      } else {
        t.a.erase(t.a.begin() + r);
        t.basis.erase(t.basis.begin() + r);
        --t.rows;
      }
    }
  }

  // Phase 2 on the original objective expressed over y.
  std::vector<Rational> cost(t.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.objective[j] == 0) continue;
    cost[vmap[j].column] += lp.objective[j] * vmap[j].sign;
    if (vmap[j].column2 >= 0) cost[vmap[j].column2] -= lp.objective[j];
  }
  if (!run_simplex(t, cost, /*allow_artificial_entering=*/false)) {
    return LpSolution{LpStatus::Unbounded, Rational(0), {}};
  }

  std::vector<Rational> y(static_cast<std::size_t>(num_y), Rational(0));
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (t.basis[r] >= 0 && t.basis[r] < num_y) y[t.basis[r]] = t.rhs(r);
  }
  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational v = vmap[j].shift + Rational(vmap[j].sign) * y[vmap[j].column];
    if (vmap[j].column2 >= 0) v -= y[vmap[j].column2];
    solution.point[j] = v;
  }
  solution.value = objective_value(lp, solution.point);
  return solution;
}

}  // namespace ambigame
