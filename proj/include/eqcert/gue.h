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

#ifndef EQCERT_GUE_H_
#define EQCERT_GUE_H_

#include <optional>

#include "eqcert/game.h"

namespace eqcert {

// Every player gets at least u_i(a*) by playing a*_i, whatever the others do.
bool HasUnilateralGuarantee(const Game& game, const Profile& a_star);

// Guaranteed utility equilibrium among pure profiles: the guarantee holds and
// no pure profile gives everyone at least u(a*) and someone strictly more.
bool IsGue(const Game& game, const Profile& a_star);

struct FractionalGueReport {
  bool guarantee = false;
  bool pareto = false;  // No lottery weakly dominates with a strict gain.
  bool strict = false;  // delta_{a*} is the only lottery paying exactly u(a*).
  // When `pareto` fails: a dominating lottery whose smallest gain is as large
  // as possible among those with the largest total gain.
  std::optional<JointDistribution> dominating;
  RationalVector dominating_payoffs;

  bool holds() const { return guarantee && pareto && strict; }
};

FractionalGueReport CheckStrictFractionalGue(const Game& game,
                                             const Profile& a_star);

inline bool IsStrictFractionalGue(const Game& game, const Profile& a_star) {
  return CheckStrictFractionalGue(game, a_star).holds();
}

}  // namespace eqcert

#endif  // EQCERT_GUE_H_
