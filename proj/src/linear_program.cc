// Copyright 2026 The eqcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqcert/linear_program.h"

#include <cstdlib>
#include <stdexcept>

namespace eqcert {

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

Rational Dot(const RationalVector& a, const RationalVector& b) {
  Rational total = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) total += a[i] * b[i];
  }
  return total;
}

}  // namespace

bool LinearConstraint::SatisfiedBy(const RationalVector& point) const {
  Rational lhs = Dot(coefficients, point);
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars),
      objective_(num_vars, Rational(0)),
      lower_(num_vars, Rational(0)),
      upper_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

void LinearProgram::SetObjective(RationalVector coefficients, Sense sense) {
  if (static_cast<int>(coefficients.size()) != num_vars_) {
    throw std::invalid_argument("objective has wrong length");
  }
  objective_ = std::move(coefficients);
  sense_ = sense;
}

void LinearProgram::AddConstraint(RationalVector coefficients,
                                  Relation relation, Rational rhs) {
  AddConstraint({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::AddConstraint(LinearConstraint constraint) {
  if (static_cast<int>(constraint.coefficients.size()) != num_vars_) {
    throw std::invalid_argument("constraint has wrong length");
  }
  constraints_.push_back(std::move(constraint));
}

void LinearProgram::SetBounds(int var, std::optional<Rational> lower,
                              std::optional<Rational> upper) {
  lower_.at(var) = std::move(lower);
  upper_.at(var) = std::move(upper);
}

bool LinearProgram::IsFeasible(const RationalVector& point) const {
  if (static_cast<int>(point.size()) != num_vars_) return false;
  for (int j = 0; j < num_vars_; ++j) {
    if (lower_[j] && point[j] < *lower_[j]) return false;
    if (upper_[j] && point[j] > *upper_[j]) return false;
  }
  for (const LinearConstraint& c : constraints_) {
    if (!c.SatisfiedBy(point)) return false;
  }
  return true;
}

Rational LinearProgram::ObjectiveValue(const RationalVector& point) const {
  return Dot(objective_, point);
}

namespace {

long PivotLimit() {
  static const long limit = [] {
    const char* env = std::getenv("EQCERT_LP_PIVOT_LIMIT");
    if (env == nullptr || *env == '\0') return -1L;
    return std::strtol(env, nullptr, 10);
  }();
  return limit;
}

// Dense simplex tableau for: maximize objective over {A y = b, y >= 0} with
// b >= 0 and a known feasible basis.
class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<int> basis,
          int num_cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), num_cols_(num_cols) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return num_cols_; }
  const std::vector<int>& basis() const { return basis_; }
  const Rational& at(int r, int c) const { return rows_[r][c]; }
  const Rational& rhs(int r) const { return rows_[r][num_cols_]; }
  const Rational& objective_value() const { return z_[num_cols_]; }

  // Installs the objective row for maximizing cost . y under the current
  // basis: z_j = c_B B^-1 A_j - c_j, z_n = c_B B^-1 b.
  void SetObjective(const RationalVector& cost) {
    z_.assign(num_cols_ + 1, Rational(0));
    for (int j = 0; j < num_cols_; ++j) z_[j] = -cost[j];
    for (int r = 0; r < num_rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= num_cols_; ++j) {
        if (sgn(rows_[r][j]) != 0) z_[j] += cb * rows_[r][j];
      }
    }
  }

  // Runs Bland's rule over columns j < active_cols. Returns false when
  // unbounded.
  bool Optimize(int active_cols, long* pivots) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < active_cols; ++j) {
        if (sgn(z_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio;
      for (int r = 0; r < num_rows(); ++r) {
        const Rational& a = rows_[r][entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[r][num_cols_] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
      ++*pivots;
      long limit = PivotLimit();
      if (limit >= 0 && *pivots > limit) {
        throw std::runtime_error("simplex pivot limit exceeded");
      }
    }
  }

  void Pivot(int pr, int pc) {
    RationalVector& prow = rows_[pr];
    Rational inv = 1 / prow[pc];
    std::vector<int> nonzero;
    for (int j = 0; j <= num_cols_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](RationalVector& row) {
      if (sgn(row[pc]) == 0) return;
      Rational f = row[pc];
      for (int j : nonzero) row[j] -= f * prow[j];
    };
    for (int r = 0; r < num_rows(); ++r) {
      if (r != pr) eliminate(rows_[r]);
    }
    if (!z_.empty()) eliminate(z_);
    basis_[pr] = pc;
  }

  void RemoveRow(int r) {
    rows_.erase(rows_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  // Drops columns j >= keep; they must all be non-basic.
  void TruncateColumns(int keep) {
    for (RationalVector& row : rows_) {
      Rational rhs = row[num_cols_];
      row.resize(keep + 1);
      row[keep] = std::move(rhs);
    }
    num_cols_ = keep;
    z_.clear();
  }

 private:
  std::vector<RationalVector> rows_;
  std::vector<int> basis_;
  int num_cols_;
  RationalVector z_;
};

// x_j = offset_j + sum over its columns of sign * y_col.
struct VariableMap {
  Rational offset;
  std::vector<std::pair<int, int>> columns;  // (column, +1/-1)
};

}  // namespace

LpOutcome Solve(const LinearProgram& lp) {
  const int n = lp.num_vars();

  // Substitute bounded/free variables by non-negative columns.
  std::vector<VariableMap> vars(n);
  int num_struct = 0;
  std::vector<LinearConstraint> rows = lp.constraints();
  for (int j = 0; j < n; ++j) {
    const auto& lo = lp.lower(j);
    const auto& hi = lp.upper(j);
    if (lo) {
      vars[j].offset = *lo;
      vars[j].columns.push_back({num_struct++, +1});
      if (hi) {
        if (*hi < *lo) return {LpStatus::kInfeasible, 0, {}};
        RationalVector c(n, Rational(0));
        c[j] = 1;
        rows.push_back({std::move(c), Relation::kLessEqual, *hi});
      }
    } else if (hi) {
      vars[j].offset = *hi;
      vars[j].columns.push_back({num_struct++, -1});
    } else {
      vars[j].offset = 0;
      vars[j].columns.push_back({num_struct++, +1});
      vars[j].columns.push_back({num_struct++, -1});
    }
  }

  // Row i in column space: sum_c coef y_c (rel) rhs, with rhs >= 0.
  const int m = static_cast<int>(rows.size());
  std::vector<RationalVector> coef(m, RationalVector(num_struct, Rational(0)));
  std::vector<Relation> rel(m);
  RationalVector rhs(m);
  int num_slack = 0;
  int num_art = 0;
  for (int i = 0; i < m; ++i) {
    Rational b = rows[i].rhs;
    for (int j = 0; j < n; ++j) {
      const Rational& a = rows[i].coefficients[j];
      if (sgn(a) == 0) continue;
      b -= a * vars[j].offset;
      for (auto [col, sign] : vars[j].columns) {
        coef[i][col] += sign > 0 ? a : Rational(-a);
      }
    }
    rel[i] = rows[i].relation;
    if (sgn(b) < 0) {
      b = -b;
      for (Rational& a : coef[i]) a = -a;
      if (rel[i] == Relation::kLessEqual) {
        rel[i] = Relation::kGreaterEqual;
      } else if (rel[i] == Relation::kGreaterEqual) {
        rel[i] = Relation::kLessEqual;
      }
    }
    rhs[i] = std::move(b);
    if (rel[i] != Relation::kEqual) ++num_slack;
    if (rel[i] != Relation::kLessEqual) ++num_art;
  }

  // Columns: structural | slack/surplus | artificial.
  const int real_cols = num_struct + num_slack;
  const int total_cols = real_cols + num_art;
  std::vector<RationalVector> tab(m, RationalVector(total_cols + 1, Rational(0)));
  std::vector<int> basis(m);
  int next_slack = num_struct;
  int next_art = real_cols;
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < num_struct; ++c) tab[i][c] = coef[i][c];
    tab[i][total_cols] = rhs[i];
    if (rel[i] == Relation::kLessEqual) {
      tab[i][next_slack] = 1;
      basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::kGreaterEqual) tab[i][next_slack++] = -1;
      tab[i][next_art] = 1;
      basis[i] = next_art++;
    }
  }

  Tableau t(std::move(tab), std::move(basis), total_cols);
  long pivots = 0;

  if (num_art > 0) {
    RationalVector phase1(total_cols, Rational(0));
    for (int c = real_cols; c < total_cols; ++c) phase1[c] = -1;
    t.SetObjective(phase1);
    t.Optimize(total_cols, &pivots);
    if (sgn(t.objective_value()) < 0) return {LpStatus::kInfeasible, 0, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int r = 0; r < t.num_rows();) {
      if (t.basis()[r] < real_cols) {
        ++r;
        continue;
      }
      int col = -1;
      for (int c = 0; c < real_cols; ++c) {
        if (sgn(t.at(r, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col < 0) {
        t.RemoveRow(r);
      } else {
        t.Pivot(r, col);
        ++r;
      }
    }
    t.TruncateColumns(real_cols);
  }

  // Phase 2, always as a maximization.
  RationalVector cost(real_cols, Rational(0));
  Rational constant = 0;
  const bool minimize = lp.sense() == Sense::kMinimize;
  for (int j = 0; j < n; ++j) {
    Rational c = minimize ? Rational(-lp.objective()[j]) : lp.objective()[j];
    if (sgn(c) == 0) continue;
    constant += c * vars[j].offset;
    for (auto [col, sign] : vars[j].columns) {
      cost[col] += sign > 0 ? c : Rational(-c);
    }
  }
  t.SetObjective(cost);
  if (!t.Optimize(real_cols, &pivots)) return {LpStatus::kUnbounded, 0, {}};

  RationalVector y(real_cols, Rational(0));
  for (int r = 0; r < t.num_rows(); ++r) y[t.basis()[r]] = t.rhs(r);
  LpOutcome out;
  out.status = LpStatus::kOptimal;
  out.point.resize(n);
  for (int j = 0; j < n; ++j) {
    Rational x = vars[j].offset;
    for (auto [col, sign] : vars[j].columns) {
      if (sign > 0) {
        x += y[col];
      } else {
        x -= y[col];
      }
    }
    out.point[j] = std::move(x);
  }
  Rational value = constant + t.objective_value();
  out.value = minimize ? Rational(-value) : value;
  return out;
}

namespace {

// Row-reduces in place; returns the rank.
int Eliminate(std::vector<RationalVector>& rows, int num_cols) {
  int rank = 0;
  for (int c = 0; c < num_cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (sgn(rows[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = 1 / rows[rank][c];
    for (Rational& x : rows[rank]) x *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c];
      for (size_t k = c; k < rows[r].size(); ++k) {
        if (sgn(rows[rank][k]) != 0) rows[r][k] -= f * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int Rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  int num_cols = static_cast<int>(rows[0].size());
  return Eliminate(rows, num_cols);
}

std::optional<RationalVector> SolveSquareSystem(
    std::vector<RationalVector> matrix, RationalVector rhs) {
  const int n = static_cast<int>(matrix.size());
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(matrix[r].size()) != n) {
      throw std::invalid_argument("SolveSquareSystem needs a square matrix");
    }
    matrix[r].push_back(rhs[r]);
  }
  if (Eliminate(matrix, n) < n) return std::nullopt;
  RationalVector x(n);
  for (int r = 0; r < n; ++r) x[r] = matrix[r][n];
  return x;
}

}  // namespace eqcert
