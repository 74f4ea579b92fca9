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

#include "eqcert/certify.h"

#include <algorithm>
#include <stdexcept>

#include "eqcert/linear_program.h"
#include "eqcert/vertex_enumeration.h"
#include "eqcert/zero_sum.h"

namespace eqcert {

EnforcementCheck CheckEnforcementAt(const Game& game, const Profile& a_star) {
  const int star = game.ProfileIndex(a_star);
  EnforcementCheck check;
  check.a_star = a_star;
  check.zero_at_star = true;
  for (int i = 0; i < game.num_players(); ++i) {
    if (sgn(game.payoff(i, star)) != 0) {
      check.zero_at_star = false;
      check.reason = "player " + std::to_string(i) + " gets " +
                     ToString(game.payoff(i, star)) + " at the target";
    }
  }
  check.unilateral_guarantee = true;
  for (int i = 0; i < game.num_players() && check.unilateral_guarantee; ++i) {
    for (int o = 0; o < game.NumOpponentProfiles(i); ++o) {
      const int k = game.Combine(i, a_star[i], o);
      if (sgn(game.payoff(i, k)) < 0) {
        check.unilateral_guarantee = false;
        if (check.reason.empty()) {
          check.reason = "player " + std::to_string(i) + " gets " +
                         ToString(game.payoff(i, k)) + " at " +
                         game.ProfileLabel(k) + " while sticking to target";
        }
        break;
      }
    }
  }
  check.welfare_negative_elsewhere = true;
  for (int k = 0; k < game.num_profiles(); ++k) {
    if (k == star) continue;
    Rational welfare = 0;
    for (int i = 0; i < game.num_players(); ++i) welfare += game.payoff(i, k);
    if (sgn(welfare) >= 0) {
      check.welfare_negative_elsewhere = false;
      if (check.reason.empty()) {
        check.reason = "total payoff " + ToString(welfare) + " at " +
                       game.ProfileLabel(k) + " is not negative";
      }
      break;
    }
  }
  return check;
}

EnforcementCheck CheckEnforcement(const Game& game) {
  std::optional<EnforcementCheck> first;
  for (int k = 0; k < game.num_profiles(); ++k) {
    bool zero = true;
    for (int i = 0; i < game.num_players() && zero; ++i) {
      zero = sgn(game.payoff(i, k)) == 0;
    }
    if (!zero) continue;
    EnforcementCheck check = CheckEnforcementAt(game, game.ProfileFromIndex(k));
    if (check.ok()) return check;
    if (!first) first = check;
  }
  if (first) return *first;
  EnforcementCheck none;
  none.reason = "no profile gives every player zero";
  return none;
}

namespace {

Rational MaxWeightedRow(const MatrixGame& mg, const RationalVector& gamma) {
  Rational best;
  for (int r = 0; r < mg.num_rows(); ++r) {
    Rational s = 0;
    for (int c = 0; c < mg.num_cols(); ++c) s += gamma[c] * mg.payoff[r][c];
    if (r == 0 || s > best) best = s;
  }
  return best;
}

// The minimizer may put zero weight on a player. Mixing in a little of the
// uniform vector keeps the maximum row negative while making every weight
// positive.
RationalVector MakePositive(const MatrixGame& mg, RationalVector gamma,
                            const Rational& value) {
  bool positive = true;
  for (const Rational& g : gamma) positive = positive && sgn(g) > 0;
  if (positive) return gamma;
  const int n = static_cast<int>(gamma.size());
  RationalVector uniform(n, MakeRational(1, n));
  const Rational top = MaxWeightedRow(mg, uniform);
  Rational delta = MakeRational(1, 2);
  if (top > value) delta = -value / (2 * (top - value));
  if (delta > MakeRational(1, 2)) delta = MakeRational(1, 2);
  for (int i = 0; i < n; ++i) {
    gamma[i] = (1 - delta) * gamma[i] + delta * uniform[i];
  }
  return gamma;
}

bool IsConstant(const Profile& p) {
  return std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) ==
         p.end();
}

Refutation TwoMembers(Concept kind, JointDistribution a, JointDistribution b,
                      std::string reason) {
  return Refutation{kind, RefutationKind::kTwoMembers, {std::move(a), std::move(b)},
                    std::move(reason), std::nullopt};
}

CertifyOutcome Refuted(Refutation r) {
  CertifyOutcome out;
  out.refutation = std::move(r);
  return out;
}

}  // namespace

CertifyOutcome CertifyUniqueIrcp(const Game& game) {
  const int n = game.num_players();
  const int d = game.num_profiles();
  std::vector<MaximinResult> maximin;
  Profile a_star(n);
  for (int i = 0; i < n; ++i) maximin.push_back(Maximin(game, i));
  for (int i = 0; i < n; ++i) {
    const Rational& level = maximin[i].value;
    std::vector<int> pure;
    for (int a = 0; a < game.num_actions(i); ++a) {
      Rational worst = game.payoff(i, game.Combine(i, a, 0));
      for (int o = 1; o < game.NumOpponentProfiles(i); ++o) {
        worst = std::min(worst, game.payoff(i, game.Combine(i, a, o)));
      }
      if (worst == level) pure.push_back(a);
    }
    if (pure.size() >= 2) {
      // Both pure guarantees, combined with the others' maximin strategies,
      // are individually rational.
      std::vector<RationalVector> m1, m2;
      for (int j = 0; j < n; ++j) m1.push_back(maximin[j].strategy.weights);
      m2 = m1;
      m1[i].assign(game.num_actions(i), Rational(0));
      m2[i].assign(game.num_actions(i), Rational(0));
      m1[i][pure[0]] = 1;
      m2[i][pure[1]] = 1;
      return Refuted(TwoMembers(
          Concept::kIRCP, JointDistribution::Product(game, m1),
          JointDistribution::Product(game, m2),
          "player " + std::to_string(i) + " has two pure maximin actions"));
    }
    if (pure.empty()) {
      // The maximin product and a best response to the others' maximin
      // strategies both guarantee every player their level.
      std::vector<RationalVector> m1;
      for (int j = 0; j < n; ++j) m1.push_back(maximin[j].strategy.weights);
      JointDistribution nu = JointDistribution::Product(game, m1);
      int best = 0;
      Rational best_value;
      for (int a = 0; a < game.num_actions(i); ++a) {
        Rational v = DeviationPayoff(game, nu, i, a);
        if (a == 0 || v > best_value) {
          best = a;
          best_value = v;
        }
      }
      std::vector<RationalVector> m2 = m1;
      m2[i].assign(game.num_actions(i), Rational(0));
      m2[i][best] = 1;
      return Refuted(TwoMembers(
          Concept::kIRCP, nu, JointDistribution::Product(game, m2),
          "player " + std::to_string(i) + " has no pure maximin action"));
    }
    a_star[i] = pure[0];
  }
  const int star = game.ProfileIndex(a_star);
  for (int i = 0; i < n; ++i) {
    const Rational& at_star = game.payoff(i, star);
    if (at_star == maximin[i].value) continue;
    // Shift a little mass to a unilateral deviation by i; everyone else still
    // plays a pure guarantee.
    const int dev = game.Deviate(star, i, a_star[i] == 0 ? 1 : 0);
    Rational eps = MakeRational(1, 2);
    const Rational& at_dev = game.payoff(i, dev);
    if (at_dev < at_star) {
      eps = std::min(eps, Rational((at_star - maximin[i].value) /
                                    (at_star - at_dev)));
    }
    JointDistribution point = JointDistribution::PointMass(d, star);
    JointDistribution mixed =
        Mix(point, JointDistribution::PointMass(d, dev), eps);
    return Refuted(TwoMembers(
        Concept::kIRCP, point, mixed,
        "player " + std::to_string(i) + " gets more than the guarantee level " +
            "at the maximin profile"));
  }

  MatrixGame aux = BuildEnforcementWeightGame(game, a_star);
  MatrixGameSolution sol = SolveMatrixGame(aux);
  if (sgn(sol.value) >= 0) {
    RationalVector mu(d, Rational(0));
    for (int r = 0; r < aux.num_rows(); ++r) {
      mu[EnforcementRowProfile(r, star)] = sol.row_strategy[r];
    }
    return Refuted(TwoMembers(
        Concept::kIRCP, JointDistribution::PointMass(d, star),
        JointDistribution(std::move(mu)),
        "no weights make total gain negative off the maximin profile (value " +
            ToString(sol.value) + ")"));
  }
  RationalVector gamma;
  if (IsConstant(a_star) && IsSymmetric(game)) {
    gamma.assign(n, MakeRational(1, n));
    if (sgn(MaxWeightedRow(aux, gamma)) >= 0) gamma.clear();
  }
  if (gamma.empty()) gamma = MakePositive(aux, sol.col_strategy, sol.value);

  RationalVector beta(n);
  for (int i = 0; i < n; ++i) beta[i] = -game.payoff(i, star);
  UniquenessCertificate cert{Concept::kIRCP, a_star, gamma,
                             -MaxWeightedRow(aux, gamma),
                             AffineTransform(game, gamma, beta)};
  if (!CheckEnforcementAt(cert.transformed_game, a_star).ok()) {
    throw std::logic_error("IRCP certificate failed its own enforcement check");
  }
  CertifyOutcome out;
  out.certificate = std::move(cert);
  return out;
}

Rational LocalPotential(const Game& game, const Profile& a_star,
                        const RationalVector& gamma, int profile_index) {
  Rational phi = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const int stick = game.Deviate(profile_index, i, a_star[i]);
    phi += gamma[i] * (game.payoff(i, profile_index) - game.payoff(i, stick));
  }
  return phi;
}

std::optional<UniquenessCertificate> CertifyCceWithWeights(
    const Game& game, const Profile& a_star, const RationalVector& gamma) {
  if (static_cast<int>(gamma.size()) != game.num_players()) {
    throw std::invalid_argument("need one weight per player");
  }
  for (const Rational& g : gamma) {
    if (sgn(g) <= 0) throw std::invalid_argument("weights must be positive");
  }
  const int star = game.ProfileIndex(a_star);
  std::optional<Rational> worst;
  for (int k = 0; k < game.num_profiles(); ++k) {
    if (k == star) continue;
    Rational phi = LocalPotential(game, a_star, gamma, k);
    if (sgn(phi) >= 0) return std::nullopt;
    if (!worst || phi > *worst) worst = phi;
  }
  return UniquenessCertificate{
      Concept::kCCE, a_star, gamma, -*worst,
      StrategicTransform(game, gamma, StickToTargetShift(game, a_star))};
}

bool VerifyCertificate(const Game& game, const UniquenessCertificate& cert) {
  const int n = game.num_players();
  if (static_cast<int>(cert.gamma.size()) != n ||
      static_cast<int>(cert.a_star.size()) != n) {
    return false;
  }
  for (const Rational& g : cert.gamma) {
    if (sgn(g) <= 0) return false;
  }
  const int star = game.ProfileIndex(cert.a_star);
  Game expected = game;
  if (cert.kind == Concept::kIRCP) {
    RationalVector beta(n);
    for (int i = 0; i < n; ++i) beta[i] = -game.payoff(i, star);
    expected = AffineTransform(game, cert.gamma, beta);
  } else if (cert.kind == Concept::kCCE) {
    expected = StrategicTransform(game, cert.gamma,
                                  StickToTargetShift(game, cert.a_star));
  } else {
    return false;
  }
  if (!(expected == cert.transformed_game)) return false;
  if (!CheckEnforcementAt(expected, cert.a_star).ok()) return false;
  std::optional<Rational> worst;
  for (int k = 0; k < game.num_profiles(); ++k) {
    if (k == star) continue;
    Rational welfare = 0;
    for (int i = 0; i < n; ++i) welfare += expected.payoff(i, k);
    if (!worst || welfare > *worst) worst = welfare;
  }
  return worst && -*worst == cert.slack;
}

namespace {

// Refutation for the pure-CCE question once every candidate has failed.
Refutation CceFallback(const Game& game, const std::optional<Profile>& target) {
  SingletonResult st = TestSingleton(BuildPolytope(game, Concept::kCCE));
  if (!st.singleton) {
    return TwoMembers(Concept::kCCE, st.point, st.other,
                      "two distinct coarse correlated equilibria");
  }
  auto pure = st.point.PointMassIndex();
  if (pure && (!target || game.ProfileIndex(*target) == *pure)) {
    throw std::logic_error(
        "unique pure CCE found but no enforcement weights were certified");
  }
  Refutation r;
  r.kind = Concept::kCCE;
  r.refutation_kind = RefutationKind::kSingletonElsewhere;
  r.witnesses = {st.point};
  r.target = target;
  r.reason = pure ? "the unique CCE is the pure profile " +
                        game.ProfileLabel(*pure)
                  : "the unique CCE is mixed";
  return r;
}

}  // namespace

CertifyOutcome CertifyUniquePureCce(const Game& game,
                                    const std::optional<Profile>& target) {
  if (target) game.ProfileIndex(*target);  // Validates the profile.
  for (const PureEquilibrium& ne : EnumeratePureNe(game)) {
    if (!ne.strict) continue;
    if (target && ne.profile != *target) continue;
    CertifyOutcome reduced = CertifyUniqueIrcp(ReducedGame(game, ne.profile));
    if (!reduced.certified() || reduced.certificate->a_star != ne.profile) {
      continue;
    }
    const RationalVector& gamma = reduced.certificate->gamma;
    UniquenessCertificate cert{
        Concept::kCCE, ne.profile, gamma, reduced.certificate->slack,
        StrategicTransform(game, gamma, StickToTargetShift(game, ne.profile))};
    if (!CheckEnforcementAt(cert.transformed_game, ne.profile).ok()) {
      throw std::logic_error("CCE certificate failed its own enforcement check");
    }
    CertifyOutcome out;
    out.certificate = std::move(cert);
    return out;
  }
  return Refuted(CceFallback(game, target));
}

CertifyOutcome RestrictToTarget(const Game& game, CertifyOutcome outcome,
                                const Profile& target) {
  if (!outcome.certified() || outcome.certificate->a_star == target) {
    return outcome;
  }
  Refutation r;
  r.kind = outcome.certificate->kind;
  r.refutation_kind = RefutationKind::kSingletonElsewhere;
  r.witnesses = {JointDistribution::PointMass(
      game.num_profiles(), game.ProfileIndex(outcome.certificate->a_star))};
  r.target = target;
  r.reason = "the unique member is " +
             game.ProfileLabel(game.ProfileIndex(outcome.certificate->a_star));
  return Refuted(std::move(r));
}

std::string ToString(RefutationKind kind) {
  return kind == RefutationKind::kTwoMembers ? "two_members"
                                             : "singleton_elsewhere";
}

std::string ToString(CceVariant variant) {
  switch (variant) {
    case CceVariant::kUniquePure:
      return "unique_pure";
    case CceVariant::kUniqueMixed2x2:
      return "unique_mixed_2x2";
    case CceVariant::kNotUnique:
      return "not_unique";
  }
  return "?";
}

bool IsQuasiStrict(const Game& game, const JointDistribution& nu) {
  auto factors = ProductFactors(game, nu);
  if (!factors) {
    throw std::invalid_argument("quasi-strictness needs a product distribution");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    const Rational value = ExpectedPayoff(game, nu, i);
    for (int a = 0; a < game.num_actions(i); ++a) {
      const Rational dev = DeviationPayoff(game, nu, i, a);
      if (dev > value) return false;
      if (sgn((*factors)[i][a]) == 0 && dev == value) return false;
    }
  }
  return true;
}

CceClassification ClassifyUniqueCce(const Game& game) {
  CceClassification result;
  SingletonResult st = TestSingleton(BuildPolytope(game, Concept::kCCE));
  if (!st.singleton) {
    result.variant = CceVariant::kNotUnique;
    result.refutation = TwoMembers(Concept::kCCE, st.point, st.other,
                                   "two distinct coarse correlated equilibria");
    return result;
  }
  result.equilibrium = st.point;
  if (auto pure = st.point.PointMassIndex()) {
    CertifyOutcome out =
        CertifyUniquePureCce(game, game.ProfileFromIndex(*pure));
    if (!out.certified()) {
      throw std::logic_error("unique pure CCE without enforcement weights");
    }
    result.variant = CceVariant::kUniquePure;
    result.certificate = std::move(out.certificate);
    return result;
  }
  auto factors = ProductFactors(game, st.point);
  if (!factors) {
    throw std::logic_error("unique CCE is not a product distribution");
  }
  std::vector<int> mixing;
  std::vector<std::vector<int>> supports(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int a = 0; a < game.num_actions(i); ++a) {
      if (sgn((*factors)[i][a]) > 0) supports[i].push_back(a);
    }
    if (supports[i].size() > 1) mixing.push_back(i);
  }
  if (mixing.size() != 2 || supports[mixing[0]].size() != 2 ||
      supports[mixing[1]].size() != 2) {
    throw std::logic_error(
        "unique mixed CCE is not two players mixing over two actions");
  }
  const int p = mixing[0];
  const int q = mixing[1];
  // Restrict to the two mixing players' supports, others at their actions.
  Profile base(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) base[i] = supports[i][0];
  std::vector<std::vector<std::string>> labels = {
      {game.action_labels(p)[supports[p][0]],
       game.action_labels(p)[supports[p][1]]},
      {game.action_labels(q)[supports[q][0]],
       game.action_labels(q)[supports[q][1]]}};
  std::vector<RationalVector> payoffs(2, RationalVector(4));
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      Profile prof = base;
      prof[p] = supports[p][x];
      prof[q] = supports[q][y];
      payoffs[0][2 * x + y] = game.payoff(p, prof);
      payoffs[1][2 * x + y] = game.payoff(q, prof);
    }
  }
  Game sub(std::move(labels), std::move(payoffs), "induced 2x2");
  if (!IsMatchingPenniesType(sub)) {
    throw std::logic_error("unique mixed CCE induces a 2x2 game that does "
                           "not cycle like matching pennies");
  }
  if (!IsQuasiStrict(game, st.point)) {
    throw std::logic_error("unique mixed CCE is not quasi-strict");
  }
  result.variant = CceVariant::kUniqueMixed2x2;
  result.mixing_players = {p, q};
  result.subgame = std::move(sub);
  return result;
}

QuasiStrictnessWitness QuasiStrictnessCertificate(const Game& game,
                                                  const JointDistribution& mu) {
  RationalVector tau = StrictComplementaryColumnStrategy(BuildDeviationGame(game));
  QuasiStrictnessWitness w;
  int col = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    RationalVector part(tau.begin() + col,
                        tau.begin() + col + game.num_actions(i));
    col += game.num_actions(i);
    Rational eta = Sum(part);
    if (sgn(eta) == 0) {
      throw std::runtime_error("deviation weights vanish for player " +
                               std::to_string(i));
    }
    for (Rational& x : part) x /= eta;
    w.eta.push_back(eta);
    w.sigma.push_back(std::move(part));
  }
  if (!(JointDistribution::Product(game, w.sigma) == mu)) {
    throw std::runtime_error(
        "deviation weights do not factor into the given distribution");
  }
  return w;
}

bool IsMatchingPenniesType(const Game& game) {
  if (game.num_players() != 2 || game.num_actions(0) != 2 ||
      game.num_actions(1) != 2) {
    throw std::invalid_argument("matching-pennies test needs a 2x2 game");
  }
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      auto u = [&](int i, int x, int y) -> const Rational& {
        return game.payoff(i, 2 * (x ^ s) + (y ^ t));
      };
      if (u(0, 0, 0) > u(0, 1, 0) && u(0, 1, 1) > u(0, 0, 1) &&
          u(1, 0, 1) > u(1, 0, 0) && u(1, 1, 0) > u(1, 1, 1)) {
        return true;
      }
    }
  }
  return false;
}

bool CombinatoricsBound(const std::vector<int>& k) {
  long product = 1;
  long sum = 1;
  for (int x : k) {
    if (x < 2) throw std::invalid_argument("support sizes must be at least 2");
    product *= x;
    sum += x;
  }
  return product <= sum;
}

ExtremeNeClassification ClassifyExtremeNe(const Game& game,
                                          const JointDistribution& nu) {
  if (!IsNashEquilibrium(game, nu) || !IsQuasiStrict(game, nu)) {
    throw std::invalid_argument("expected a quasi-strict Nash equilibrium");
  }
  auto factors = ProductFactors(game, nu);
  int mixing = 0;
  bool all_two = true;
  for (const RationalVector& f : *factors) {
    int support = 0;
    for (const Rational& x : f) support += sgn(x) > 0;
    if (support > 1) {
      ++mixing;
      all_two = all_two && support == 2;
    }
  }
  ExtremeNeClassification c;
  c.predicted = mixing == 0 || (mixing == 2 && all_two);
  c.measured = IsExtremePoint(BuildPolytope(game, Concept::kCCE), nu);
  return c;
}

std::string ToString(HullComparison comparison) {
  switch (comparison) {
    case HullComparison::kEqual:
      return "equal";
    case HullComparison::kProperSubset:
      return "proper_subset";
    case HullComparison::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

HullResult ConvNeVsIrcp(const Game& game,
                        const std::vector<JointDistribution>& equilibria) {
  PolytopeSpec ircp = BuildPolytope(game, Concept::kIRCP);
  for (const JointDistribution& nu : equilibria) {
    if (!IsNashEquilibrium(game, nu)) {
      throw std::invalid_argument("listed distribution is not an equilibrium");
    }
    if (!IsMember(ircp, nu)) {
      throw std::logic_error("equilibrium outside the IRCP polytope");
    }
  }
  HullResult result;
  if (game.num_profiles() > kMaxVertexDimension) return result;
  std::vector<JointDistribution> vertices = PolytopeVertices(ircp);
  std::stable_sort(vertices.begin(), vertices.end(),
                   [](const JointDistribution& a, const JointDistribution& b) {
                     auto sa = a.Support();
                     auto sb = b.Support();
                     if (sa.size() != sb.size()) return sa.size() < sb.size();
                     return sa < sb;
                   });
  const int m = static_cast<int>(equilibria.size());
  for (const JointDistribution& v : vertices) {
    bool inside = false;
    if (m > 0) {
      LinearProgram lp(m);
      for (int k = 0; k < game.num_profiles(); ++k) {
        RationalVector row(m);
        for (int j = 0; j < m; ++j) row[j] = equilibria[j][k];
        lp.AddConstraint(std::move(row), Relation::kEqual, v[k]);
      }
      lp.AddConstraint(RationalVector(m, Rational(1)), Relation::kEqual, 1);
      lp.SetObjective(RationalVector(m, Rational(0)), Sense::kMaximize);
      inside = Solve(lp).status == LpStatus::kOptimal;
    }
    if (!inside) {
      result.comparison = HullComparison::kProperSubset;
      result.witness = v;
      return result;
    }
  }
  result.comparison = HullComparison::kEqual;
  return result;
}

}  // namespace eqcert
