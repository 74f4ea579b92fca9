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

#include "eqcert/polytope.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "eqcert/vertex_enumeration.h"
#include "eqcert/zero_sum.h"

namespace eqcert {

std::string ToString(Concept kind) {
  switch (kind) {
    case Concept::kCE:
      return "ce";
    case Concept::kCCE:
      return "cce";
    case Concept::kIRCP:
      return "ircp";
  }
  return "?";
}

Concept ParseConcept(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ce") return Concept::kCE;
  if (lower == "cce") return Concept::kCCE;
  if (lower == "ircp") return Concept::kIRCP;
  throw std::invalid_argument("unknown concept '" + text + "'");
}

std::vector<LinearConstraint> PolytopeSpec::Constraints() const {
  const int d = dimension();
  std::vector<LinearConstraint> out;
  out.reserve(rows.size() + d + 1);
  for (const IncentiveRow& row : rows) {
    out.push_back({row.coefficients, Relation::kGreaterEqual, row.rhs});
  }
  for (int k = 0; k < d; ++k) {
    RationalVector unit(d, Rational(0));
    unit[k] = 1;
    out.push_back({std::move(unit), Relation::kGreaterEqual, 0});
  }
  out.push_back({RationalVector(d, Rational(1)), Relation::kEqual, 1});
  return out;
}

LinearProgram PolytopeSpec::MakeLp() const {
  LinearProgram lp(dimension());
  for (const IncentiveRow& row : rows) {
    lp.AddConstraint(row.coefficients, Relation::kGreaterEqual, row.rhs);
  }
  lp.AddConstraint(RationalVector(dimension(), Rational(1)), Relation::kEqual,
                   1);
  return lp;
}

PolytopeSpec BuildPolytope(const Game& game, Concept kind) {
  PolytopeSpec spec{game, kind, {}, {}};
  const int d = game.num_profiles();
  const int n = game.num_players();
  switch (kind) {
    case Concept::kCCE:
      for (int i = 0; i < n; ++i) {
        for (int dev = 0; dev < game.num_actions(i); ++dev) {
          IncentiveRow row{RationalVector(d), Rational(0), i, -1, dev};
          for (int k = 0; k < d; ++k) {
            row.coefficients[k] =
                game.payoff(i, k) - game.payoff(i, game.Deviate(k, i, dev));
          }
          spec.rows.push_back(std::move(row));
        }
      }
      break;
    case Concept::kCE:
      for (int i = 0; i < n; ++i) {
        for (int rec = 0; rec < game.num_actions(i); ++rec) {
          for (int dev = 0; dev < game.num_actions(i); ++dev) {
            if (dev == rec) continue;
            IncentiveRow row{RationalVector(d, Rational(0)), Rational(0), i,
                             rec, dev};
            for (int k = 0; k < d; ++k) {
              if (game.ActionAt(k, i) != rec) continue;
              row.coefficients[k] =
                  game.payoff(i, k) - game.payoff(i, game.Deviate(k, i, dev));
            }
            spec.rows.push_back(std::move(row));
          }
        }
      }
      break;
    case Concept::kIRCP:
      for (int i = 0; i < n; ++i) {
        Rational level = Maximin(game, i).value;
        spec.guarantee_levels.push_back(level);
        spec.rows.push_back({game.payoffs(i), level, i, -1, -1});
      }
      break;
  }
  return spec;
}

namespace {

Rational Dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    if (sgn(a[k]) != 0 && sgn(b[k]) != 0) s += a[k] * b[k];
  }
  return s;
}

void CheckSize(const PolytopeSpec& spec, const JointDistribution& mu) {
  if (mu.size() != spec.dimension()) {
    throw std::invalid_argument("distribution size does not match the game");
  }
}

// Rows of the constraint matrix that hold with equality at mu.
std::vector<RationalVector> ActiveRows(const PolytopeSpec& spec,
                                       const JointDistribution& mu,
                                       bool incentive_only) {
  std::vector<RationalVector> active;
  for (const IncentiveRow& row : spec.rows) {
    if (Dot(row.coefficients, mu.probabilities()) == row.rhs) {
      active.push_back(row.coefficients);
    }
  }
  if (incentive_only) return active;
  const int d = spec.dimension();
  for (int k = 0; k < d; ++k) {
    if (sgn(mu[k]) == 0) {
      RationalVector unit(d, Rational(0));
      unit[k] = 1;
      active.push_back(std::move(unit));
    }
  }
  active.push_back(RationalVector(d, Rational(1)));
  return active;
}

}  // namespace

MembershipResult CheckMembership(const PolytopeSpec& spec,
                                 const JointDistribution& mu) {
  CheckSize(spec, mu);
  MembershipResult result;
  for (size_t r = 0; r < spec.rows.size(); ++r) {
    const IncentiveRow& row = spec.rows[r];
    Rational slack = Dot(row.coefficients, mu.probabilities()) - row.rhs;
    if (sgn(slack) < 0) {
      result.member = false;
      result.violations.push_back({static_cast<int>(r), row.player,
                                   row.action, row.deviation, slack});
    }
  }
  return result;
}

bool IsMember(const PolytopeSpec& spec, const JointDistribution& mu) {
  return CheckMembership(spec, mu).member;
}

std::pair<Rational, Rational> CoordinateBounds(const PolytopeSpec& spec,
                                               int profile_index) {
  if (profile_index < 0 || profile_index >= spec.dimension()) {
    throw std::out_of_range("profile index out of range");
  }
  RationalVector obj(spec.dimension(), Rational(0));
  obj[profile_index] = 1;
  Rational bounds[2];
  const Sense senses[2] = {Sense::kMinimize, Sense::kMaximize};
  for (int s = 0; s < 2; ++s) {
    LinearProgram lp = spec.MakeLp();
    lp.SetObjective(obj, senses[s]);
    LpOutcome out = Solve(lp);
    if (out.status != LpStatus::kOptimal) {
      throw std::logic_error("polytope is empty");
    }
    bounds[s] = out.value;
  }
  return {bounds[0], bounds[1]};
}

SingletonResult TestSingleton(const PolytopeSpec& spec) {
  LinearProgram base = spec.MakeLp();
  base.SetObjective(RationalVector(spec.dimension(), Rational(0)),
                    Sense::kMaximize);
  LpOutcome first = Solve(base);
  if (first.status != LpStatus::kOptimal) {
    throw std::logic_error("polytope is empty");
  }
  SingletonResult result;
  result.point = JointDistribution(first.point);
  for (int k = 0; k < spec.dimension(); ++k) {
    LinearProgram lp = spec.MakeLp();
    RationalVector obj(spec.dimension(), Rational(0));
    obj[k] = 1;
    lp.SetObjective(std::move(obj), Sense::kMaximize);
    LpOutcome out = Solve(lp);
    if (out.status != LpStatus::kOptimal) {
      throw std::logic_error("coordinate LP failed on a nonempty polytope");
    }
    if (out.value > first.point[k]) {
      result.singleton = false;
      result.other = JointDistribution(out.point);
      return result;
    }
  }
  result.singleton = true;
  result.other = result.point;
  return result;
}

bool IsExtremePoint(const PolytopeSpec& spec, const JointDistribution& mu) {
  if (!IsMember(spec, mu)) {
    throw std::invalid_argument("extremality test needs a member");
  }
  return Rank(ActiveRows(spec, mu, false)) == spec.dimension();
}

SupportBound WinklerSupportBound(const PolytopeSpec& spec,
                                 const JointDistribution& mu) {
  if (!IsExtremePoint(spec, mu)) {
    throw std::invalid_argument("support bound needs an extreme point");
  }
  SupportBound b;
  b.support_size = static_cast<int>(mu.Support().size());
  b.active_count = Rank(ActiveRows(spec, mu, true));
  b.holds = b.support_size <= b.active_count + 1;
  return b;
}

std::vector<JointDistribution> PolytopeVertices(const PolytopeSpec& spec) {
  if (spec.dimension() > kMaxVertexDimension) {
    throw std::invalid_argument("too many profiles for vertex enumeration");
  }
  std::vector<JointDistribution> out;
  for (RationalVector& v : EnumerateVertices(spec.Constraints(),
                                             spec.dimension())) {
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<PureEquilibrium> EnumeratePureNe(const Game& game) {
  std::vector<PureEquilibrium> out;
  for (int k = 0; k < game.num_profiles(); ++k) {
    bool nash = true;
    bool strict = true;
    for (int i = 0; i < game.num_players() && nash; ++i) {
      for (int a = 0; a < game.num_actions(i); ++a) {
        if (a == game.ActionAt(k, i)) continue;
        const int order = cmp(game.payoff(i, game.Deviate(k, i, a)),
                              game.payoff(i, k));
        if (order > 0) {
          nash = false;
          break;
        }
        if (order == 0) strict = false;
      }
    }
    if (nash) out.push_back({game.ProfileFromIndex(k), k, strict});
  }
  return out;
}

bool IsNashEquilibrium(const Game& game, const JointDistribution& mu) {
  if (!ProductFactors(game, mu).has_value()) return false;
  for (int i = 0; i < game.num_players(); ++i) {
    const Rational value = ExpectedPayoff(game, mu, i);
    for (int a = 0; a < game.num_actions(i); ++a) {
      if (DeviationPayoff(game, mu, i, a) > value) return false;
    }
  }
  return true;
}

TwoByTwoEquilibria MixedNe2x2(const Game& game) {
  if (game.num_players() != 2 || game.num_actions(0) != 2 ||
      game.num_actions(1) != 2) {
    throw std::invalid_argument("MixedNe2x2 needs a 2x2 game");
  }
  auto u = [&](int i, int r, int c) -> const Rational& {
    return game.payoff(i, 2 * r + c);
  };
  TwoByTwoEquilibria result;
  for (int x = 0; x < 2; ++x) {
    if (u(0, 0, x) == u(0, 1, x) || u(1, x, 0) == u(1, x, 1)) {
      result.degenerate = true;
    }
  }
  for (const PureEquilibrium& ne : EnumeratePureNe(game)) {
    result.equilibria.push_back(JointDistribution::PointMass(4, ne.index));
  }
  // p: row player's weight on action 0, making the column player indifferent.
  // q: column player's weight on action 0, making the row player indifferent.
  const Rational den_p = u(1, 0, 0) - u(1, 1, 0) - u(1, 0, 1) + u(1, 1, 1);
  const Rational den_q = u(0, 0, 0) - u(0, 0, 1) - u(0, 1, 0) + u(0, 1, 1);
  if (sgn(den_p) != 0 && sgn(den_q) != 0) {
    const Rational p = (u(1, 1, 1) - u(1, 1, 0)) / den_p;
    const Rational q = (u(0, 1, 1) - u(0, 0, 1)) / den_q;
    if (p > 0 && p < 1 && q > 0 && q < 1) {
      result.equilibria.push_back(
          JointDistribution::Product(game, {{p, 1 - p}, {q, 1 - q}}));
    }
  }
  return result;
}

}  // namespace eqcert
