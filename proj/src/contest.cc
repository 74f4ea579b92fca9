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

#include "eqcert/contest.h"

#include <algorithm>
#include <stdexcept>

#include "eqcert/game_io.h"

namespace eqcert {

namespace {

void CheckBand(const Rational& c) {
  if (sgn(c) <= 0 || c > MakeRational(1, 2)) {
    throw std::invalid_argument("band parameter must lie in (0, 1/2], got " +
                                ToString(c));
  }
}

Rational Evaluate(const RationalVector& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalVector Multiply(const RationalVector& p, const RationalVector& q) {
  RationalVector out(p.size() + q.size() - 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

RationalVector Add(RationalVector p, const RationalVector& q) {
  if (p.size() < q.size()) p.resize(q.size(), Rational(0));
  for (size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  return p;
}

}  // namespace

SuccessFunction SuccessFunction::Tullock(const Rational& r) {
  if (sgn(r) <= 0) throw std::invalid_argument("Tullock exponent must be > 0");
  SuccessFunction f;
  f.kind = Kind::kTullock;
  f.exponent = r;
  return f;
}

SuccessFunction SuccessFunction::Ratio(RationalVector numerator) {
  while (!numerator.empty() && sgn(numerator.back()) == 0) numerator.pop_back();
  if (numerator.empty()) throw std::invalid_argument("zero numerator");
  SuccessFunction f;
  f.kind = Kind::kRatio;
  f.numerator = std::move(numerator);
  return f;
}

SuccessFunction SuccessFunction::BandUpper(const Rational& c) {
  CheckBand(c);
  SuccessFunction f;
  f.kind = Kind::kBandUpper;
  f.band = c;
  return f;
}

SuccessFunction SuccessFunction::BandLower(const Rational& c) {
  CheckBand(c);
  SuccessFunction f;
  f.kind = Kind::kBandLower;
  f.band = c;
  return f;
}

SuccessFunction SuccessFunction::Mix(RationalVector weights,
                                     std::vector<SuccessFunction> parts) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw std::invalid_argument("mix needs one weight per part");
  }
  for (const Rational& w : weights) {
    if (sgn(w) < 0) throw std::invalid_argument("mix weights must be >= 0");
  }
  if (Sum(weights) != 1) throw std::invalid_argument("mix weights must sum to 1");
  SuccessFunction f;
  f.kind = Kind::kMix;
  f.weights = std::move(weights);
  f.parts = std::move(parts);
  return f;
}

Rational ShareAtRatio(const SuccessFunction& f, const Rational& t) {
  if (sgn(t) <= 0) throw std::invalid_argument("effort ratio must be positive");
  using Kind = SuccessFunction::Kind;
  const Rational half(1, 2);
  switch (f.kind) {
    case Kind::kTullock: {
      std::optional<Rational> power = ExactPow(t, f.exponent);
      if (!power) {
        throw std::domain_error(ToString(t) + "^" + ToString(f.exponent) +
                                " is not rational");
      }
      return *power / (1 + *power);
    }
    case Kind::kRatio: {
      RationalVector mirrored(f.numerator.rbegin(), f.numerator.rend());
      const Rational p = Evaluate(f.numerator, t);
      const Rational q = Evaluate(mirrored, t);
      if (sgn(p + q) == 0) {
        throw std::domain_error("ratio success function undefined at " +
                                ToString(t));
      }
      return p / (p + q);
    }
    case Kind::kBandUpper:
      if (t <= 1) return half - f.band * (1 - t);
      return half + f.band * (1 - 1 / t);
    case Kind::kBandLower:
      if (t <= 1) return std::max(Rational(0), Rational(half + f.band * (1 - 1 / t)));
      return std::min(Rational(1), Rational(half - f.band * (1 - t)));
    case Kind::kMix: {
      Rational acc = 0;
      for (size_t j = 0; j < f.parts.size(); ++j) {
        acc += f.weights[j] * ShareAtRatio(f.parts[j], t);
      }
      return acc;
    }
  }
  throw std::invalid_argument("unknown success function");
}

std::pair<SuccessFunction, SuccessFunction> BandFunctions(const Rational& c) {
  return {SuccessFunction::BandUpper(c), SuccessFunction::BandLower(c)};
}

CostFunction CostFunction::Linear(const Rational& k) {
  if (sgn(k) <= 0) throw std::invalid_argument("cost slope must be positive");
  return CostFunction{Kind::kLinear, k, 1};
}

CostFunction CostFunction::Power(const Rational& k, const Rational& exponent) {
  if (sgn(k) <= 0 || exponent < 1) {
    throw std::invalid_argument("power cost needs k > 0 and exponent >= 1");
  }
  return CostFunction{Kind::kPower, k, exponent};
}

Rational CostFunction::operator()(const Rational& effort) const {
  if (kind == Kind::kLinear) return scale * effort;
  std::optional<Rational> power = ExactPow(effort, exponent);
  if (!power) {
    throw std::domain_error(ToString(effort) + "^" + ToString(exponent) +
                            " is not rational");
  }
  return scale * *power;
}

Rational ContestShare(const ContestSpec& spec, int player, const Efforts& a) {
  const Rational first = ShareAtRatio(spec.success, a.first / a.second);
  if (player == 0) return first;
  if (player == 1) return 1 - first;
  throw std::out_of_range("contests have two players");
}

Rational ContestUtility(const ContestSpec& spec, int player, const Efforts& a) {
  const Rational& effort = player == 0 ? a.first : a.second;
  return spec.values.at(player) * ContestShare(spec, player, a) -
         spec.costs.at(player)(effort);
}

Rational ContestLocalPotential(const ContestSpec& spec, const Efforts& a_star,
                               const Efforts& a, const RationalVector& gamma) {
  const Efforts stick0{a_star.first, a.second};
  const Efforts stick1{a.first, a_star.second};
  return gamma.at(0) *
             (ContestUtility(spec, 0, a) - ContestUtility(spec, 0, stick0)) +
         gamma.at(1) *
             (ContestUtility(spec, 1, a) - ContestUtility(spec, 1, stick1));
}

Rational UnilateralGainSum(const ContestSpec& spec, const Efforts& a_star,
                           const Efforts& a) {
  const Efforts move0{a.first, a_star.second};
  const Efforts move1{a_star.first, a.second};
  return (ContestUtility(spec, 0, move0) - ContestUtility(spec, 0, a_star)) /
             spec.values[0] +
         (ContestUtility(spec, 1, move1) - ContestUtility(spec, 1, a_star)) /
             spec.values[1];
}

Rational TullockClosedFormPotential(const Efforts& a) {
  auto term = [](const Rational& x) {
    return Rational(MakeRational(3, 4) - x - 1 / (1 + 4 * x));
  };
  return term(a.first) + term(a.second);
}

QuadraticSign TullockTermSignAnalysis() {
  // (3/4 - x)(1 + 4x) - 1
  RationalVector product = Multiply({MakeRational(3, 4), -1}, {1, 4});
  QuadraticSign q;
  q.coefficients = Add(product, {-1});
  const Rational& c0 = q.coefficients[0];
  const Rational& c1 = q.coefficients[1];
  const Rational& c2 = q.coefficients[2];
  const Rational discriminant = c1 * c1 - 4 * c2 * c0;
  q.double_root = -c1 / (2 * c2);
  q.nonpositive = sgn(c2) < 0 && sgn(discriminant) == 0;
  return q;
}

PotentialReport VerifyInverseValuePotential(
    const ContestSpec& spec, const Efforts& a_star,
    const std::vector<RationalVector>& grids) {
  if (grids.size() != 2) throw std::invalid_argument("need two grids");
  auto on = [](const RationalVector& g, const Rational& x) {
    return std::find(g.begin(), g.end(), x) != g.end();
  };
  if (!on(grids[0], a_star.first) || !on(grids[1], a_star.second)) {
    throw std::invalid_argument("equilibrium profile is not on the grid");
  }
  PotentialReport report;
  const Rational u0 = ContestUtility(spec, 0, a_star);
  const Rational u1 = ContestUtility(spec, 1, a_star);
  for (const Rational& x : grids[0]) {
    if (x == a_star.first) continue;
    if (ContestUtility(spec, 0, {x, a_star.second}) >= u0) {
      report.strict_equilibrium = false;
      report.violations.push_back("player 0 does not lose by moving to " +
                                  ToString(x));
    }
  }
  for (const Rational& y : grids[1]) {
    if (y == a_star.second) continue;
    if (ContestUtility(spec, 1, {a_star.first, y}) >= u1) {
      report.strict_equilibrium = false;
      report.violations.push_back("player 1 does not lose by moving to " +
                                  ToString(y));
    }
  }
  const RationalVector gamma = {1 / spec.values[0], 1 / spec.values[1]};
  for (const Rational& x : grids[0]) {
    for (const Rational& y : grids[1]) {
      if (x == a_star.first && y == a_star.second) continue;
      const Rational phi = ContestLocalPotential(spec, a_star, {x, y}, gamma);
      ++report.profiles_checked;
      if (!report.max_potential || phi > *report.max_potential) {
        report.max_potential = phi;
      }
      if (sgn(phi) >= 0) {
        report.potential_negative = false;
        report.violations.push_back("potential " + ToString(phi) + " at (" +
                                    ToString(x) + ", " + ToString(y) + ")");
      }
    }
  }
  return report;
}

BandCheck RatioBandCheck(const SuccessFunction& f, const Rational& c,
                         const RationalVector& grid) {
  CheckBand(c);
  BandCheck check;
  auto fail = [&](const Rational& t, std::string what) {
    if (check.holds) {
      check.holds = false;
      check.failing_ratio = t;
      check.failure = std::move(what);
    }
  };
  const Rational half(1, 2);
  if (ShareAtRatio(f, 1) != half) fail(1, "f(1) is not 1/2");
  for (const Rational& t : grid) {
    if (sgn(t) <= 0 || t >= 1) {
      throw std::invalid_argument("band grid must lie in (0, 1)");
    }
    const Rational value = ShareAtRatio(f, t);
    if (!(half + c * (1 - 1 / t) < value)) fail(t, "at or below lower bound");
    if (!(value < half - c * (1 - t))) fail(t, "at or above upper bound");
    if (value + ShareAtRatio(f, 1 / t) != 1) fail(t, "f(t) + f(1/t) != 1");
    if (!check.holds) break;
  }
  return check;
}

Game DiscretizeContest(const ContestSpec& spec,
                       const std::vector<RationalVector>& grids) {
  if (grids.size() != 2) throw std::invalid_argument("need two grids");
  std::vector<std::vector<std::string>> labels(2);
  for (int i = 0; i < 2; ++i) {
    for (const Rational& x : grids[i]) labels[i].push_back(ToString(x));
  }
  std::vector<RationalVector> payoffs(2);
  for (const Rational& x : grids[0]) {
    for (const Rational& y : grids[1]) {
      payoffs[0].push_back(ContestUtility(spec, 0, {x, y}));
      payoffs[1].push_back(ContestUtility(spec, 1, {x, y}));
    }
  }
  return Game(std::move(labels), std::move(payoffs), "contest");
}

Game DiscretizeCournot(const Rational& alpha, const Rational& beta,
                       const Rational& k, int num_players,
                       const RationalVector& grid) {
  std::vector<std::vector<std::string>> labels(num_players);
  for (auto& l : labels) {
    for (const Rational& x : grid) l.push_back(ToString(x));
  }
  const int m = static_cast<int>(grid.size());
  int total = 1;
  for (int i = 0; i < num_players; ++i) total *= m;
  std::vector<RationalVector> payoffs(num_players, RationalVector(total));
  for (int idx = 0; idx < total; ++idx) {
    RationalVector q(num_players);
    int rest = idx;
    for (int i = num_players - 1; i >= 0; --i) {
      q[i] = grid[rest % m];
      rest /= m;
    }
    const Rational price = alpha - beta * Sum(q);
    for (int i = 0; i < num_players; ++i) {
      payoffs[i][idx] = q[i] * price - k * q[i] * q[i] / 2;
    }
  }
  return Game(std::move(labels), std::move(payoffs), "cournot");
}

RationalVector UniformGrid(const Rational& step, int count) {
  RationalVector g;
  for (int k = 1; k <= count; ++k) g.push_back(step * k);
  return g;
}

namespace {

nlohmann::json SuccessToJson(const SuccessFunction& f) {
  using Kind = SuccessFunction::Kind;
  nlohmann::json j;
  switch (f.kind) {
    case Kind::kTullock:
      j = {{"kind", "tullock"}, {"r", ToString(f.exponent)}};
      break;
    case Kind::kRatio:
      j = {{"kind", "ratio"}, {"numerator", RationalsToJson(f.numerator)}};
      break;
    case Kind::kBandUpper:
      j = {{"kind", "band_upper"}, {"c", ToString(f.band)}};
      break;
    case Kind::kBandLower:
      j = {{"kind", "band_lower"}, {"c", ToString(f.band)}};
      break;
    case Kind::kMix: {
      nlohmann::json parts = nlohmann::json::array();
      for (const SuccessFunction& p : f.parts) parts.push_back(SuccessToJson(p));
      j = {{"kind", "mix"},
           {"weights", RationalsToJson(f.weights)},
           {"parts", parts}};
      break;
    }
  }
  return j;
}

SuccessFunction SuccessFromJson(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "tullock") {
    return SuccessFunction::Tullock(
        j.contains("r") ? RationalFromJson(j.at("r")) : Rational(1));
  }
  if (kind == "ratio") {
    return SuccessFunction::Ratio(RationalsFromJson(j.at("numerator")));
  }
  if (kind == "band_upper") {
    return SuccessFunction::BandUpper(RationalFromJson(j.at("c")));
  }
  if (kind == "band_lower") {
    return SuccessFunction::BandLower(RationalFromJson(j.at("c")));
  }
  if (kind == "mix") {
    std::vector<SuccessFunction> parts;
    for (const auto& p : j.at("parts")) parts.push_back(SuccessFromJson(p));
    return SuccessFunction::Mix(RationalsFromJson(j.at("weights")),
                                std::move(parts));
  }
  throw std::invalid_argument("unknown success kind '" + kind + "'");
}

}  // namespace

nlohmann::json ContestToJson(const ContestSpec& spec) {
  nlohmann::json costs = nlohmann::json::array();
  for (const CostFunction& c : spec.costs) {
    if (c.kind == CostFunction::Kind::kLinear) {
      costs.push_back({{"kind", "linear"}, {"k", ToString(c.scale)}});
    } else {
      costs.push_back({{"kind", "power"},
                       {"k", ToString(c.scale)},
                       {"exponent", ToString(c.exponent)}});
    }
  }
  return {{"success", SuccessToJson(spec.success)},
          {"values", RationalsToJson(spec.values)},
          {"costs", costs}};
}

ContestSpec ContestFromJson(const nlohmann::json& j) {
  try {
    ContestSpec spec;
    spec.success = SuccessFromJson(j.at("success"));
    if (j.contains("values")) spec.values = RationalsFromJson(j.at("values"));
    if (spec.values.size() != 2 || sgn(spec.values[0]) <= 0 ||
        sgn(spec.values[1]) <= 0) {
      throw std::invalid_argument("need two positive prize values");
    }
    if (j.contains("costs")) {
      spec.costs.clear();
      for (const auto& c : j.at("costs")) {
        const std::string kind = c.at("kind").get<std::string>();
        const Rational k = RationalFromJson(c.at("k"));
        if (kind == "linear") {
          spec.costs.push_back(CostFunction::Linear(k));
        } else if (kind == "power") {
          spec.costs.push_back(
              CostFunction::Power(k, RationalFromJson(c.at("exponent"))));
        } else {
          throw std::invalid_argument("unknown cost kind '" + kind + "'");
        }
      }
      if (spec.costs.size() != 2) throw std::invalid_argument("need two costs");
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed contest: ") + e.what());
  }
}

}  // namespace eqcert
