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

#include "eqcert/zero_sum.h"

#include <stdexcept>

#include "eqcert/linear_program.h"

namespace eqcert {

MatrixGame MakeMatrixGame(std::vector<RationalVector> payoff) {
  MatrixGame g;
  if (payoff.empty()) throw std::invalid_argument("empty matrix game");
  const size_t cols = payoff[0].size();
  for (const RationalVector& row : payoff) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix game");
  }
  for (size_t r = 0; r < payoff.size(); ++r) {
    g.row_labels.push_back("r" + std::to_string(r));
  }
  for (size_t c = 0; c < cols; ++c) g.col_labels.push_back("c" + std::to_string(c));
  g.payoff = std::move(payoff);
  return g;
}

namespace {

// max v s.t. x^T M >= v (each column), x in simplex. Variables (x, v).
LpOutcome SolveRowLp(const MatrixGame& g) {
  const int m = g.num_rows();
  const int n = g.num_cols();
  LinearProgram lp(m + 1);
  lp.SetFree(m);
  for (int c = 0; c < n; ++c) {
    RationalVector row(m + 1);
    for (int r = 0; r < m; ++r) row[r] = g.payoff[r][c];
    row[m] = -1;
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0);
  }
  RationalVector simplex(m + 1, Rational(1));
  simplex[m] = 0;
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1);
  RationalVector obj(m + 1, Rational(0));
  obj[m] = 1;
  lp.SetObjective(std::move(obj), Sense::kMaximize);
  return Solve(lp);
}

// min w s.t. M y <= w (each row), y in simplex. Variables (y, w).
LpOutcome SolveColLp(const MatrixGame& g) {
  const int m = g.num_rows();
  const int n = g.num_cols();
  LinearProgram lp(n + 1);
  lp.SetFree(n);
  for (int r = 0; r < m; ++r) {
    RationalVector row(n + 1);
    for (int c = 0; c < n; ++c) row[c] = g.payoff[r][c];
    row[n] = -1;
    lp.AddConstraint(std::move(row), Relation::kLessEqual, 0);
  }
  RationalVector simplex(n + 1, Rational(1));
  simplex[n] = 0;
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1);
  RationalVector obj(n + 1, Rational(0));
  obj[n] = 1;
  lp.SetObjective(std::move(obj), Sense::kMinimize);
  return Solve(lp);
}

void CheckOptimal(const LpOutcome& out) {
  if (out.status != LpStatus::kOptimal) {
    throw std::logic_error("matrix game LP not optimal: " +
                           ToString(out.status));
  }
}

}  // namespace

MatrixGameSolution SolveMatrixGame(const MatrixGame& game) {
  LpOutcome row = SolveRowLp(game);
  LpOutcome col = SolveColLp(game);
  CheckOptimal(row);
  CheckOptimal(col);
  if (row.value != col.value) {
    throw std::logic_error("minimax duality violated: " + ToString(row.value) +
                           " vs " + ToString(col.value));
  }
  MatrixGameSolution s;
  s.value = row.value;
  s.row_strategy.assign(row.point.begin(), row.point.end() - 1);
  s.col_strategy.assign(col.point.begin(), col.point.end() - 1);
  return s;
}

RationalVector StrictComplementaryColumnStrategy(const MatrixGame& game) {
  LpOutcome col = SolveColLp(game);
  CheckOptimal(col);
  const Rational value = col.value;
  const int m = game.num_rows();
  const int n = game.num_cols();
  RationalVector average(n, Rational(0));
  for (int s = 0; s < n; ++s) {
    LinearProgram lp(n);
    for (int r = 0; r < m; ++r) {
      lp.AddConstraint(game.payoff[r], Relation::kLessEqual, value);
    }
    lp.AddConstraint(RationalVector(n, Rational(1)), Relation::kEqual, 1);
    RationalVector obj(n, Rational(0));
    obj[s] = 1;
    lp.SetObjective(std::move(obj), Sense::kMaximize);
    LpOutcome out = Solve(lp);
    CheckOptimal(out);
    for (int c = 0; c < n; ++c) average[c] += out.point[c];
  }
  for (Rational& x : average) x /= n;
  return average;
}

namespace {

// Rows: own actions; columns: opponent profiles.
MatrixGame PlayerMatrix(const Game& game, int player) {
  MatrixGame g;
  g.row_labels = game.action_labels(player);
  for (int o = 0; o < game.NumOpponentProfiles(player); ++o) {
    g.col_labels.push_back("o" + std::to_string(o));
  }
  g.payoff.assign(game.num_actions(player),
                  RationalVector(game.NumOpponentProfiles(player)));
  for (int a = 0; a < game.num_actions(player); ++a) {
    for (int o = 0; o < game.NumOpponentProfiles(player); ++o) {
      g.payoff[a][o] = game.payoff(player, game.Combine(player, a, o));
    }
  }
  return g;
}

}  // namespace

MaximinResult Maximin(const Game& game, int player) {
  LpOutcome out = SolveRowLp(PlayerMatrix(game, player));
  CheckOptimal(out);
  MaximinResult r;
  r.value = out.value;
  r.strategy.player = player;
  r.strategy.weights.assign(out.point.begin(), out.point.end() - 1);
  return r;
}

PunishmentResult MinimaxPunishment(const Game& game, int player) {
  LpOutcome out = SolveColLp(PlayerMatrix(game, player));
  CheckOptimal(out);
  PunishmentResult r;
  r.value = out.value;
  r.punishment.assign(out.point.begin(), out.point.end() - 1);
  return r;
}

int EnforcementRowProfile(int row, int a_star_index) {
  return row < a_star_index ? row : row + 1;
}

MatrixGame BuildEnforcementWeightGame(const Game& game, const Profile& a_star) {
  const int star = game.ProfileIndex(a_star);
  MatrixGame g;
  for (int i = 0; i < game.num_players(); ++i) {
    g.col_labels.push_back("player" + std::to_string(i));
  }
  for (int k = 0; k < game.num_profiles(); ++k) {
    if (k == star) continue;
    g.row_labels.push_back(game.ProfileLabel(k));
    RationalVector row(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      row[i] = game.payoff(i, k) - game.payoff(i, star);
    }
    g.payoff.push_back(std::move(row));
  }
  return g;
}

MatrixGame BuildDeviationGame(const Game& game) {
  MatrixGame g;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int a = 0; a < game.num_actions(i); ++a) {
      g.col_labels.push_back("player" + std::to_string(i) + ":" +
                             game.action_labels(i)[a]);
    }
  }
  for (int b = 0; b < game.num_profiles(); ++b) {
    g.row_labels.push_back(game.ProfileLabel(b));
    RationalVector row;
    for (int i = 0; i < game.num_players(); ++i) {
      for (int a = 0; a < game.num_actions(i); ++a) {
        row.push_back(game.payoff(i, b) - game.payoff(i, game.Deviate(b, i, a)));
      }
    }
    g.payoff.push_back(std::move(row));
  }
  return g;
}

}  // namespace eqcert
