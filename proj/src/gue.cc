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

#include "eqcert/gue.h"

#include <stdexcept>

#include "eqcert/linear_program.h"

namespace eqcert {

bool HasUnilateralGuarantee(const Game& game, const Profile& a_star) {
  const int star = game.ProfileIndex(a_star);
  for (int i = 0; i < game.num_players(); ++i) {
    for (int o = 0; o < game.NumOpponentProfiles(i); ++o) {
      if (game.payoff(i, game.Combine(i, a_star[i], o)) < game.payoff(i, star)) {
        return false;
      }
    }
  }
  return true;
}

bool IsGue(const Game& game, const Profile& a_star) {
  if (!HasUnilateralGuarantee(game, a_star)) return false;
  const int star = game.ProfileIndex(a_star);
  for (int k = 0; k < game.num_profiles(); ++k) {
    bool weakly = true;
    bool strictly = false;
    for (int i = 0; i < game.num_players(); ++i) {
      const int c = cmp(game.payoff(i, k), game.payoff(i, star));
      weakly = weakly && c >= 0;
      strictly = strictly || c > 0;
    }
    if (weakly && strictly) return false;
  }
  return true;
}

namespace {

// Variables: mu (profiles), s (players), then z. Rows: expected payoff minus
// s_i at least u_i(a*), mu in the simplex.
LinearProgram DominanceLp(const Game& game, int star) {
  const int d = game.num_profiles();
  const int n = game.num_players();
  LinearProgram lp(d + n + 1);
  for (int i = 0; i < n; ++i) {
    RationalVector row(d + n + 1, Rational(0));
    for (int k = 0; k < d; ++k) row[k] = game.payoff(i, k);
    row[d + i] = -1;
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual,
                     game.payoff(i, star));
  }
  RationalVector simplex(d + n + 1, Rational(0));
  for (int k = 0; k < d; ++k) simplex[k] = 1;
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1);
  return lp;
}

}  // namespace

FractionalGueReport CheckStrictFractionalGue(const Game& game,
                                             const Profile& a_star) {
  const int star = game.ProfileIndex(a_star);
  const int d = game.num_profiles();
  const int n = game.num_players();
  FractionalGueReport report;
  report.guarantee = HasUnilateralGuarantee(game, a_star);

  LinearProgram total = DominanceLp(game, star);
  RationalVector obj(d + n + 1, Rational(0));
  for (int i = 0; i < n; ++i) obj[d + i] = 1;
  total.SetBounds(d + n, Rational(0), Rational(0));
  total.SetObjective(obj, Sense::kMaximize);
  LpOutcome first = Solve(total);
  if (first.status != LpStatus::kOptimal) {
    throw std::logic_error("dominance LP is not optimal");
  }
  report.pareto = sgn(first.value) == 0;
  if (!report.pareto) {
    // Among lotteries with the largest total gain, balance the gains.
    LinearProgram balanced = DominanceLp(game, star);
    balanced.AddConstraint(obj, Relation::kEqual, first.value);
    for (int i = 0; i < n; ++i) {
      RationalVector row(d + n + 1, Rational(0));
      row[d + i] = 1;
      row[d + n] = -1;
      balanced.AddConstraint(std::move(row), Relation::kGreaterEqual, 0);
    }
    RationalVector z(d + n + 1, Rational(0));
    z[d + n] = 1;
    balanced.SetObjective(std::move(z), Sense::kMaximize);
    LpOutcome best = Solve(balanced);
    if (best.status != LpStatus::kOptimal) {
      throw std::logic_error("balanced dominance LP is not optimal");
    }
    report.dominating =
        JointDistribution(RationalVector(best.point.begin(), best.point.begin() + d));
    for (int i = 0; i < n; ++i) {
      report.dominating_payoffs.push_back(
          ExpectedPayoff(game, *report.dominating, i));
    }
  }

  LinearProgram same(d);
  for (int i = 0; i < n; ++i) {
    same.AddConstraint(game.payoffs(i), Relation::kEqual, game.payoff(i, star));
  }
  same.AddConstraint(RationalVector(d, Rational(1)), Relation::kEqual, 1);
  RationalVector unit(d, Rational(0));
  unit[star] = 1;
  same.SetObjective(std::move(unit), Sense::kMinimize);
  LpOutcome low = Solve(same);
  report.strict = low.status == LpStatus::kOptimal && low.value == 1;
  return report;
}

}  // namespace eqcert
