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

#ifndef EQCERT_CONTEST_H_
#define EQCERT_CONTEST_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "eqcert/game.h"

namespace eqcert {

// Two-player contest success function, expressed through the effort ratio
// t = a_1 / a_2: player 1 wins a share f(t), player 2 gets 1 - f(t).
struct SuccessFunction {
  enum class Kind { kTullock, kRatio, kBandUpper, kBandLower, kMix };

  Kind kind = Kind::kTullock;
  Rational exponent = 1;       // kTullock: f(t) = t^r / (1 + t^r)
  RationalVector numerator;    // kRatio: p(t), constant term first
  Rational band = MakeRational(1, 4);  // kBandUpper / kBandLower
  RationalVector weights;      // kMix
  std::vector<SuccessFunction> parts;

  static SuccessFunction Tullock(const Rational& r);
  // f(t) = p(t) / (p(t) + t^deg(p) p(1/t)), which satisfies f(t) + f(1/t) = 1.
  static SuccessFunction Ratio(RationalVector numerator);
  static SuccessFunction BandUpper(const Rational& c);
  static SuccessFunction BandLower(const Rational& c);
  static SuccessFunction Mix(RationalVector weights,
                             std::vector<SuccessFunction> parts);
};

// Throws std::domain_error if the share is irrational at t (a Tullock
// exponent whose root of t is not rational), std::invalid_argument for t <= 0
// or malformed descriptors.
Rational ShareAtRatio(const SuccessFunction& f, const Rational& t);

// The upper and lower envelopes of the admissible band for equilibrium
// effort c, each completed on t > 1 by f(t) = 1 - f(1/t).
std::pair<SuccessFunction, SuccessFunction> BandFunctions(const Rational& c);

struct CostFunction {
  enum class Kind { kLinear, kPower };
  Kind kind = Kind::kLinear;
  Rational scale = 1;
  Rational exponent = 1;  // kPower only

  static CostFunction Linear(const Rational& k);
  static CostFunction Power(const Rational& k, const Rational& exponent);
  Rational operator()(const Rational& effort) const;
};

struct ContestSpec {
  SuccessFunction success;
  RationalVector values = {1, 1};
  std::vector<CostFunction> costs = {CostFunction::Linear(1),
                                     CostFunction::Linear(1)};
};

using Efforts = std::pair<Rational, Rational>;

Rational ContestShare(const ContestSpec& spec, int player, const Efforts& a);
Rational ContestUtility(const ContestSpec& spec, int player, const Efforts& a);

// sum_i gamma_i (u_i(a) - u_i(a*_i, a_{-i}))
Rational ContestLocalPotential(const ContestSpec& spec, const Efforts& a_star,
                               const Efforts& a, const RationalVector& gamma);

// sum_i (1/v_i) (u_i(a_i, a*_{-i}) - u_i(a*)). With two contestants this
// equals the local potential under weights 1/v_i at every profile.
Rational UnilateralGainSum(const ContestSpec& spec, const Efforts& a_star,
                           const Efforts& a);

// sum_i (3/4 - a_i - 1/(1 + 4 a_i)): the local potential of the symmetric
// lottery contest with unit values and costs around (1/4, 1/4).
Rational TullockClosedFormPotential(const Efforts& a);

struct QuadraticSign {
  RationalVector coefficients;  // constant term first
  Rational double_root;
  bool nonpositive = false;  // Negative leading term and zero discriminant.
};

// Clears the denominator of one term 3/4 - x - 1/(1 + 4x) by multiplying
// with 1 + 4x and inspects the resulting quadratic.
QuadraticSign TullockTermSignAnalysis();

struct PotentialReport {
  bool strict_equilibrium = true;
  bool potential_negative = true;
  int profiles_checked = 0;
  std::optional<Rational> max_potential;  // Over profiles other than a*.
  std::vector<std::string> violations;

  bool passed() const { return strict_equilibrium && potential_negative; }
};

// Checks on the grid that a* is a strict equilibrium and that the local
// potential with weights 1/v_i is negative away from a*. Throws
// std::invalid_argument if a* is not on the grid.
PotentialReport VerifyInverseValuePotential(
    const ContestSpec& spec, const Efforts& a_star,
    const std::vector<RationalVector>& grids);

struct BandCheck {
  bool holds = true;
  std::optional<Rational> failing_ratio;
  std::string failure;
};

// On every grid ratio t in (0, 1): 1/2 + c(1 - 1/t) < f(t) < 1/2 - c(1 - t)
// and f(t) + f(1/t) = 1; also f(1) = 1/2.
BandCheck RatioBandCheck(const SuccessFunction& f, const Rational& c,
                         const RationalVector& grid);

// Finite game on the product grid; action labels are the efforts.
Game DiscretizeContest(const ContestSpec& spec,
                       const std::vector<RationalVector>& grids);

// Linear-demand Cournot game: u_i = a_i (alpha - beta sum_j a_j) - k a_i^2 / 2.
Game DiscretizeCournot(const Rational& alpha, const Rational& beta,
                       const Rational& k, int num_players,
                       const RationalVector& grid);

// {step, 2 step, ..., count step}
RationalVector UniformGrid(const Rational& step, int count);

nlohmann::json ContestToJson(const ContestSpec& spec);
ContestSpec ContestFromJson(const nlohmann::json& j);

}  // namespace eqcert

#endif  // EQCERT_CONTEST_H_
