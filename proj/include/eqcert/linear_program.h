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

#ifndef EQCERT_LINEAR_PROGRAM_H_
#define EQCERT_LINEAR_PROGRAM_H_

#include <optional>
#include <string>
#include <vector>

#include "eqcert/rational.h"

namespace eqcert {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LinearConstraint {
  RationalVector coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;

  // True when `point` satisfies the row exactly.
  bool SatisfiedBy(const RationalVector& point) const;
};

// Linear program over rational data. Variables default to the bound x >= 0;
// use SetBounds to change or remove bounds.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  void SetObjective(RationalVector coefficients, Sense sense);
  void AddConstraint(RationalVector coefficients, Relation relation,
                     Rational rhs);
  void AddConstraint(LinearConstraint constraint);
  void SetBounds(int var, std::optional<Rational> lower,
                 std::optional<Rational> upper);
  void SetFree(int var) { SetBounds(var, std::nullopt, std::nullopt); }

  const RationalVector& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const std::optional<Rational>& lower(int var) const { return lower_[var]; }
  const std::optional<Rational>& upper(int var) const { return upper_[var]; }

  // Checks every row and bound exactly.
  bool IsFeasible(const RationalVector& point) const;
  Rational ObjectiveValue(const RationalVector& point) const;

 private:
  int num_vars_;
  RationalVector objective_;
  Sense sense_ = Sense::kMaximize;
  std::vector<LinearConstraint> constraints_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
};

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;        // Set when optimal.
  RationalVector point;  // A basic optimal solution when optimal.
};

// Two-phase primal simplex on a dense exact tableau with Bland's rule, so it
// terminates on degenerate problems and is deterministic.
//
// The environment variable EQCERT_LP_PIVOT_LIMIT caps the number of pivots
// per solve; exceeding it throws std::runtime_error. Unset means unlimited.
LpOutcome Solve(const LinearProgram& lp);

// Rank of the matrix whose rows are given, by exact elimination.
int Rank(std::vector<RationalVector> rows);

// Unique solution of a square system, nullopt when singular.
std::optional<RationalVector> SolveSquareSystem(
    std::vector<RationalVector> matrix, RationalVector rhs);

}  // namespace eqcert

#endif  // EQCERT_LINEAR_PROGRAM_H_
