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

#ifndef EQCERT_DYNAMICS_H_
#define EQCERT_DYNAMICS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqcert/game.h"

namespace eqcert {

enum class Algorithm {
  // Multiplicative weights on the full payoff vector of own actions against
  // the realized opponent profile, rate eta0 / sqrt(t).
  kExternalMw,
  // Regret matching on action pairs: play the stationary distribution of
  // the chain that switches from j to k in proportion to the positive
  // cumulative regret for having played j instead of k; uniform while no
  // regret is positive.
  kInternalRm,
};

std::string ToString(Algorithm algorithm);
// Accepts "external_mw" and "internal_rm".
Algorithm ParseAlgorithm(const std::string& text);

struct DynamicsOptions {
  Algorithm algorithm = Algorithm::kExternalMw;
  std::int64_t steps = 1;
  std::uint64_t seed = 0;
  double learning_rate = 1.0;  // eta0 for kExternalMw; unused otherwise.
};

struct Checkpoint {
  std::int64_t step = 0;
  Rational max_external_regret;
  Rational max_internal_regret;
};

struct DynamicsRun {
  DynamicsOptions options;
  std::vector<std::int64_t> counts;  // Play counts per profile.
  JointDistribution empirical;       // counts / steps, exact
  Rational max_external_regret;
  Rational max_internal_regret;
  std::vector<Checkpoint> trajectory;  // At steps 1, 2, 4, ... and the end.
};

// Deterministic given the game and options. Throws std::invalid_argument for
// steps < 1.
DynamicsRun RunDynamics(const Game& game, const DynamicsOptions& options);

// max over a' of sum_a mu(a) (u_i(a', a_{-i}) - u_i(a)); <= 0 for all
// players exactly on coarse correlated equilibria.
Rational ExternalRegret(const Game& game, int player,
                        const JointDistribution& mu);

// max over (j, k) of sum_{a: a_i = j} mu(a) (u_i(k, a_{-i}) - u_i(a)); the
// largest violated correlated-equilibrium constraint when positive.
Rational InternalRegret(const Game& game, int player,
                        const JointDistribution& mu);

// Largest payoff minus smallest payoff over all players and profiles.
Rational PayoffRange(const Game& game);

}  // namespace eqcert

#endif  // EQCERT_DYNAMICS_H_
