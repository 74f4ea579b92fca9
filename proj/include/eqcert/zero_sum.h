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

#ifndef EQCERT_ZERO_SUM_H_
#define EQCERT_ZERO_SUM_H_

#include <string>
#include <vector>

#include "eqcert/game.h"

namespace eqcert {

// Zero-sum matrix game; entries are the row player's payoff.
struct MatrixGame {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<RationalVector> payoff;  // payoff[row][col]

  int num_rows() const { return static_cast<int>(payoff.size()); }
  int num_cols() const { return static_cast<int>(col_labels.size()); }
};

// Builds an unlabeled matrix game. Throws on ragged input.
MatrixGame MakeMatrixGame(std::vector<RationalVector> payoff);

struct MatrixGameSolution {
  Rational value;
  RationalVector row_strategy;  // maximizer, a vertex of its optimal set
  RationalVector col_strategy;  // minimizer, a vertex of its optimal set
};

MatrixGameSolution SolveMatrixGame(const MatrixGame& game);

// Optimal column strategy with maximal support: positive exactly on the
// columns that are best responses to every optimal row strategy. Obtained by
// maximizing each column's weight over the optimal face and averaging the
// maximizers.
RationalVector StrictComplementaryColumnStrategy(const MatrixGame& game);

struct MaximinResult {
  Rational value;
  MixedAction strategy;
};

// Guarantee level max over mixed own actions of min over pure opponent
// profiles.
MaximinResult Maximin(const Game& game, int player);

struct PunishmentResult {
  Rational value;
  // Correlated distribution over opponent profiles, indexed by
  // Game::OpponentIndex.
  RationalVector punishment;
};

// min over correlated opponent play of the player's best-response payoff.
// Equal to Maximin(game, player).value by LP duality.
PunishmentResult MinimaxPunishment(const Game& game, int player);

// Rows: profiles a != a_star (in index order). Columns: players.
// Entry (a, i) = u_i(a) - u_i(a_star). A negative value certifies weights
// under which every other profile has lower weighted welfare gain.
MatrixGame BuildEnforcementWeightGame(const Game& game, const Profile& a_star);

// Row index in BuildEnforcementWeightGame -> profile index.
int EnforcementRowProfile(int row, int a_star_index);

// Rows: all profiles b. Columns: pairs (i, a_i) in player-major order.
// Entry (b, (i, a_i)) = u_i(b) - u_i(a_i, b_{-i}). The row player's
// guarantee is non-negative exactly on coarse correlated equilibria.
MatrixGame BuildDeviationGame(const Game& game);

}  // namespace eqcert

#endif  // EQCERT_ZERO_SUM_H_
