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

#include <gtest/gtest.h>

#include <random>

#include "eqcert/generators.h"
#include "eqcert/zero_sum.h"
#include "test_util.h"

namespace eqcert {
namespace {

using testing::R;

Game ParkingAt(const char* t) { return Parking(3, 1, R("1/4"), R(t)); }

bool AllMembers(const Game& g, const Refutation& ref) {
  PolytopeSpec spec = BuildPolytope(g, ref.kind);
  for (const JointDistribution& w : ref.witnesses) {
    if (!IsMember(spec, w)) return false;
  }
  return true;
}

TEST(EnforcementTest, Examples) {
  Game shifted = AffineTransform(ParkingAt("3/5"), {1, 1}, {R("-3/4"), R("-3/4")});
  EnforcementCheck park = CheckEnforcement(shifted);
  ASSERT_TRUE(park.ok()) << park.reason;
  EXPECT_EQ(*park.a_star, (Profile{0, 0}));

  Game pd = AffineTransform(PrisonersDilemma(), {1, 1}, {-1, -1});
  EnforcementCheck at_dd = CheckEnforcementAt(pd, {1, 1});
  EXPECT_TRUE(at_dd.zero_at_star);
  EXPECT_TRUE(at_dd.unilateral_guarantee);
  EXPECT_FALSE(at_dd.welfare_negative_elsewhere);
  EXPECT_FALSE(CheckEnforcement(pd).ok());
  EXPECT_FALSE(CheckEnforcement(ZeroGame({2, 3})).ok());
}

TEST(CertifyIrcpTest, ParkingInsideThresholdIsCertified) {
  for (const char* t : {"11/20", "3/5", "7/10", "3/4"}) {
    Game g = ParkingAt(t);
    CertifyOutcome out = CertifyUniqueIrcp(g);
    ASSERT_TRUE(out.certified()) << t << ": " << out.refutation->reason;
    const UniquenessCertificate& cert = *out.certificate;
    EXPECT_EQ(cert.a_star, (Profile{0, 0}));
    EXPECT_GT(cert.slack, 0);
    EXPECT_TRUE(CheckEnforcementAt(cert.transformed_game, cert.a_star).ok());
    EXPECT_TRUE(VerifyCertificate(g, cert));
  }
}

TEST(CertifyIrcpTest, ParkingCheapParkingIsRefuted) {
  Game g = ParkingAt("2/5");
  CertifyOutcome out = CertifyUniqueIrcp(g);
  ASSERT_FALSE(out.certified());
  const Refutation& ref = *out.refutation;
  ASSERT_GE(ref.witnesses.size(), 2u);
  EXPECT_FALSE(ref.witnesses[0] == ref.witnesses[1]);
  EXPECT_TRUE(AllMembers(g, ref));
  // Parking together at a free spot beats paying for both drivers.
  JointDistribution same_spot = JointDistribution::PointMass(16, 5);
  EXPECT_TRUE(IsMember(BuildPolytope(g, Concept::kIRCP), same_spot));
  EXPECT_GT(ExpectedPayoff(g, same_spot, 0), R("3/4"));
}

TEST(CertifyIrcpTest, PrisonersDilemmaIsRefuted) {
  Game pd = PrisonersDilemma();
  CertifyOutcome out = CertifyUniqueIrcp(pd);
  ASSERT_FALSE(out.certified());
  const auto& w = out.refutation->witnesses;
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].PointMassIndex(), 3);
  EXPECT_EQ(w[1].PointMassIndex(), 0);
}

TEST(CertifyIrcpTest, RockPaperScissorsIsRefuted) {
  Game rps = RockPaperScissors();
  CertifyOutcome out = CertifyUniqueIrcp(rps);
  ASSERT_FALSE(out.certified());
  EXPECT_TRUE(AllMembers(rps, *out.refutation));
}

TEST(CertifyCceTest, Examples) {
  CertifyOutcome pd = CertifyUniquePureCce(PrisonersDilemma());
  ASSERT_TRUE(pd.certified());
  EXPECT_EQ(pd.certificate->a_star, (Profile{1, 1}));
  EXPECT_EQ(pd.certificate->gamma, (RationalVector{R("1/2"), R("1/2")}));
  EXPECT_EQ(pd.certificate->kind, Concept::kCCE);
  EXPECT_TRUE(VerifyCertificate(PrisonersDilemma(), *pd.certificate));
  // Unit weights also work.
  auto unit = CertifyCceWithWeights(PrisonersDilemma(), {1, 1}, {1, 1});
  ASSERT_TRUE(unit.has_value());
  EXPECT_EQ(unit->slack, 1);
  EXPECT_EQ(LocalPotential(PrisonersDilemma(), {1, 1}, {1, 1}, 0), -2);
  EXPECT_EQ(LocalPotential(PrisonersDilemma(), {1, 1}, {1, 1}, 1), -1);
  EXPECT_EQ(LocalPotential(PrisonersDilemma(), {1, 1}, {1, 1}, 2), -1);
  EXPECT_EQ(LocalPotential(PrisonersDilemma(), {1, 1}, {1, 1}, 3), 0);

  CertifyOutcome park = CertifyUniquePureCce(ParkingAt("3/5"));
  ASSERT_TRUE(park.certified());
  EXPECT_EQ(park.certificate->a_star, (Profile{0, 0}));

  CertifyOutcome rps = CertifyUniquePureCce(RockPaperScissors());
  ASSERT_FALSE(rps.certified());
  EXPECT_EQ(rps.refutation->kind, Concept::kCCE);
  EXPECT_TRUE(AllMembers(RockPaperScissors(), *rps.refutation));

  CertifyOutcome mp = CertifyUniquePureCce(MatchingPennies());
  ASSERT_FALSE(mp.certified());
  EXPECT_EQ(mp.refutation->refutation_kind, RefutationKind::kSingletonElsewhere);
}

TEST(CertifyCceTest, TargetMismatchIsRefuted) {
  CertifyOutcome out = CertifyUniquePureCce(PrisonersDilemma(), Profile{0, 0});
  ASSERT_FALSE(out.certified());
  EXPECT_EQ(out.refutation->target, (Profile{0, 0}));
  EXPECT_TRUE(AllMembers(PrisonersDilemma(), *out.refutation));
}

TEST(ClassifyTest, Examples) {
  CceClassification pd = ClassifyUniqueCce(PrisonersDilemma());
  EXPECT_EQ(pd.variant, CceVariant::kUniquePure);
  ASSERT_TRUE(pd.certificate.has_value());
  EXPECT_EQ(pd.certificate->a_star, (Profile{1, 1}));

  Game t1 = MatchingPenniesType(3, 0, 1, 2, 0, 1, 4, 2);
  CceClassification mixed = ClassifyUniqueCce(t1);
  EXPECT_EQ(mixed.variant, CceVariant::kUniqueMixed2x2);
  EXPECT_EQ(mixed.mixing_players, std::make_pair(0, 1));
  ASSERT_TRUE(mixed.subgame.has_value());
  EXPECT_TRUE(IsMatchingPenniesType(*mixed.subgame));
  EXPECT_EQ(*mixed.equilibrium,
            JointDistribution::Product(t1, {{R("2/3"), R("1/3")}, {R("1/2"), R("1/2")}}));

  CceClassification rps = ClassifyUniqueCce(RockPaperScissors());
  EXPECT_EQ(rps.variant, CceVariant::kNotUnique);
  ASSERT_TRUE(rps.refutation.has_value());
}

TEST(ClassifyTest, SymmetricUniqueCceIsPure) {
  int unique = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Game g = RandomSymmetricGame(3, 2, seed, -3, 3);
    CceClassification c = ClassifyUniqueCce(g);
    EXPECT_NE(c.variant, CceVariant::kUniqueMixed2x2) << "seed " << seed;
    if (c.variant == CceVariant::kUniquePure) ++unique;
  }
  EXPECT_GT(unique, 0);
}

TEST(QuasiStrictTest, Examples) {
  EXPECT_TRUE(IsQuasiStrict(MatchingPennies(), JointDistribution::Uniform(4)));
  Game t2 = TwoEquilibriumDegenerateGame();
  EXPECT_TRUE(IsQuasiStrict(t2, JointDistribution::PointMass(4, 0)));
  // Row is indifferent between b1 and a1 against b2.
  EXPECT_FALSE(IsQuasiStrict(t2, JointDistribution::PointMass(4, 3)));
  EXPECT_FALSE(IsQuasiStrict(t2, JointDistribution::PointMass(4, 1)));
  EXPECT_THROW(IsQuasiStrict(t2, JointDistribution::UniformOver(4, {0, 3})),
               std::invalid_argument);
}

TEST(QuasiStrictTest, Certificates) {
  QuasiStrictnessWitness mp =
      QuasiStrictnessCertificate(MatchingPennies(), JointDistribution::Uniform(4));
  EXPECT_EQ(mp.eta, (RationalVector{R("1/2"), R("1/2")}));
  EXPECT_EQ(mp.sigma[0], (RationalVector{R("1/2"), R("1/2")}));
  EXPECT_EQ(mp.sigma[1], (RationalVector{R("1/2"), R("1/2")}));

  QuasiStrictnessWitness pd =
      QuasiStrictnessCertificate(PrisonersDilemma(), JointDistribution::PointMass(4, 3));
  EXPECT_EQ(pd.sigma[0], (RationalVector{0, 1}));
  EXPECT_EQ(pd.sigma[1], (RationalVector{0, 1}));
  for (const Rational& e : pd.eta) EXPECT_GT(e, 0);

  EXPECT_THROW(QuasiStrictnessCertificate(PrisonersDilemma(),
                                          JointDistribution::PointMass(4, 0)),
               std::runtime_error);
  // Every incentive row binds on every CCE of rock-paper-scissors, so the
  // weights factor even though the CCE is not unique. Uniqueness has to be
  // established separately.
  QuasiStrictnessWitness rps = QuasiStrictnessCertificate(
      RockPaperScissors(), JointDistribution::Uniform(9));
  EXPECT_EQ(rps.sigma[0], (RationalVector{R("1/3"), R("1/3"), R("1/3")}));
  EXPECT_FALSE(TestSingleton(BuildPolytope(RockPaperScissors(), Concept::kCCE)).singleton);
}

TEST(MatchingPenniesTypeTest, Examples) {
  EXPECT_TRUE(IsMatchingPenniesType(MatchingPennies()));
  EXPECT_FALSE(IsMatchingPenniesType(PrisonersDilemma()));
  Game flat({{"a1", "b1"}, {"a2", "b2"}}, {{1, 0, 1, 2}, {0, 1, 4, 2}}, "flat");
  EXPECT_FALSE(IsMatchingPenniesType(flat));
  // Relabeling actions keeps the type.
  Game swapped({{"b1", "a1"}, {"a2", "b2"}}, {{-1, 1, 1, -1}, {1, -1, -1, 1}}, "swap");
  EXPECT_TRUE(IsMatchingPenniesType(swapped));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(IsMatchingPenniesType(RandomMatchingPenniesType(seed, -5, 5)));
  }
}

TEST(CombinatoricsTest, Bound) {
  EXPECT_TRUE(CombinatoricsBound({2, 2}));
  EXPECT_TRUE(CombinatoricsBound({2, 3}));
  EXPECT_FALSE(CombinatoricsBound({2, 2, 2}));
  EXPECT_FALSE(CombinatoricsBound({3, 3}));
  EXPECT_FALSE(CombinatoricsBound({2, 4}));
  EXPECT_THROW(CombinatoricsBound({1, 3}), std::invalid_argument);
}

TEST(ExtremeNeTest, Examples) {
  ExtremeNeClassification pd =
      ClassifyExtremeNe(PrisonersDilemma(), JointDistribution::PointMass(4, 3));
  EXPECT_TRUE(pd.predicted);
  EXPECT_TRUE(pd.measured);
  ExtremeNeClassification mp =
      ClassifyExtremeNe(MatchingPennies(), JointDistribution::Uniform(4));
  EXPECT_TRUE(mp.predicted);
  EXPECT_TRUE(mp.measured);
  // Row mixes over two actions, column over three; full support.
  Game wide({{"r1", "r2"}, {"c1", "c2", "c3"}},
            {{1, 0, -1, -1, 0, 1}, {-1, 0, 1, 1, 0, -1}}, "wide");
  JointDistribution nu = JointDistribution::Uniform(6);
  ASSERT_TRUE(IsNashEquilibrium(wide, nu));
  ExtremeNeClassification w = ClassifyExtremeNe(wide, nu);
  EXPECT_FALSE(w.predicted);
  EXPECT_FALSE(w.measured);
  EXPECT_THROW(ClassifyExtremeNe(TwoEquilibriumDegenerateGame(),
                                 JointDistribution::PointMass(4, 3)),
               std::invalid_argument);
}

TEST(HullTest, Examples) {
  Game t2 = TwoEquilibriumDegenerateGame();
  HullResult eq = ConvNeVsIrcp(
      t2, {JointDistribution::PointMass(4, 0), JointDistribution::PointMass(4, 3)});
  EXPECT_EQ(eq.comparison, HullComparison::kEqual);

  HullResult pd = ConvNeVsIrcp(PrisonersDilemma(), {JointDistribution::PointMass(4, 3)});
  EXPECT_EQ(pd.comparison, HullComparison::kProperSubset);
  ASSERT_TRUE(pd.witness.has_value());
  EXPECT_EQ(pd.witness->PointMassIndex(), 0);

  std::vector<JointDistribution> all;
  for (int k = 0; k < 6; ++k) all.push_back(JointDistribution::PointMass(6, k));
  EXPECT_EQ(ConvNeVsIrcp(ZeroGame({2, 3}), all).comparison, HullComparison::kEqual);

  EXPECT_THROW(ConvNeVsIrcp(PrisonersDilemma(), {JointDistribution::PointMass(4, 0)}),
               std::invalid_argument);
}

// Certificates agree with the polytope singleton test, and singleton
// polytopes have the predicted structure.
TEST(EquivalenceTest, RandomSweep) {
  const std::vector<std::vector<int>> shapes = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
  int certified_ircp = 0, certified_cce = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Game g = RandomGame(shapes[seed % shapes.size()], 1000 + seed, -2, 2);
    CertifyOutcome ircp = CertifyUniqueIrcp(g);
    SingletonResult ircp_single = TestSingleton(BuildPolytope(g, Concept::kIRCP));
    ASSERT_EQ(ircp.certified(), ircp_single.singleton) << "seed " << seed;
    if (ircp.certified()) {
      ++certified_ircp;
      EXPECT_TRUE(VerifyCertificate(g, *ircp.certificate));
      auto k = ircp_single.point.PointMassIndex();
      ASSERT_TRUE(k.has_value());
      bool strict = false;
      for (const PureEquilibrium& e : EnumeratePureNe(g)) {
        if (e.index == *k) strict = e.strict;
      }
      EXPECT_TRUE(strict);
    } else {
      EXPECT_TRUE(AllMembers(g, *ircp.refutation));
    }

    CertifyOutcome cce = CertifyUniquePureCce(g);
    SingletonResult cce_single = TestSingleton(BuildPolytope(g, Concept::kCCE));
    ASSERT_EQ(cce.certified(),
              cce_single.singleton && cce_single.point.IsPointMass())
        << "seed " << seed;
    if (cce.certified()) {
      ++certified_cce;
      EXPECT_TRUE(VerifyCertificate(g, *cce.certificate));
      // The reduction agrees with certifying the reduced game directly.
      CertifyOutcome reduced = CertifyUniqueIrcp(ReducedGame(g, cce.certificate->a_star));
      ASSERT_TRUE(reduced.certified());
      EXPECT_EQ(reduced.certificate->a_star, cce.certificate->a_star);
    }
    if (cce_single.singleton) {
      EXPECT_TRUE(IsQuasiStrict(g, cce_single.point));
      EXPECT_NO_THROW(ClassifyUniqueCce(g));
    }
  }
  EXPECT_GT(certified_ircp, 0);
  EXPECT_GT(certified_cce, certified_ircp);
}

TEST(EquivalenceTest, ReductionPreservesCce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Game g = RandomGame({2, 3}, 500 + seed, -3, 3);
    for (const PureEquilibrium& e : EnumeratePureNe(g)) {
      if (!e.strict) continue;
      Game reduced = ReducedGame(g, e.profile);
      PolytopeSpec a = BuildPolytope(g, Concept::kCCE);
      PolytopeSpec b = BuildPolytope(reduced, Concept::kCCE);
      for (const JointDistribution& v : PolytopeVertices(a)) EXPECT_TRUE(IsMember(b, v));
      for (const JointDistribution& v : PolytopeVertices(b)) EXPECT_TRUE(IsMember(a, v));
    }
  }
}

TEST(OpennessTest, SmallPerturbationsKeepCertificate) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 15 && seed < 400; ++seed) {
    Game g = RandomGame({2, 3}, 2000 + seed, -3, 3);
    CertifyOutcome out = CertifyUniquePureCce(g);
    if (!out.certified()) continue;
    ++checked;
    const UniquenessCertificate& cert = *out.certificate;
    Rational max_gamma = *std::max_element(cert.gamma.begin(), cert.gamma.end());
    Rational radius = cert.slack / (2 * g.num_players() * max_gamma);
    std::uniform_int_distribution<int> step(-99, 99);
    std::vector<RationalVector> payoffs;
    for (int i = 0; i < g.num_players(); ++i) {
      RationalVector row = g.payoffs(i);
      for (Rational& x : row) x += radius * MakeRational(step(rng), 100);
      payoffs.push_back(row);
    }
    Game perturbed(g.action_labels(), payoffs, "perturbed");
    auto again = CertifyCceWithWeights(perturbed, cert.a_star, cert.gamma);
    ASSERT_TRUE(again.has_value()) << "seed " << seed;
    EXPECT_GT(again->slack, 0);
  }
  EXPECT_EQ(checked, 15);
}

// A distribution outside the CCE polytope falls outside the individually
// rational set of the game that measures payoffs against the profitable
// deviation.
TEST(DeviationGameTest, RejectedCceIsRejectedIrcp) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Game g = RandomGame({3, 2}, 700 + seed, -3, 3);
    JointDistribution mu = JointDistribution::PointMass(6, seed % 6);
    MembershipResult m = CheckMembership(BuildPolytope(g, Concept::kCCE), mu);
    if (m.member) continue;
    const Violation& v = m.violations.front();
    std::vector<RationalVector> beta(2);
    for (int i = 0; i < 2; ++i) {
      beta[i].assign(g.num_profiles() / g.num_actions(i), 0);
    }
    for (int opp = 0; opp < static_cast<int>(beta[v.player].size()); ++opp) {
      beta[v.player][opp] = -g.payoff(v.player, g.Combine(v.player, v.deviation, opp));
    }
    Game shifted = StrategicTransform(g, {1, 1}, beta);
    EXPECT_FALSE(IsMember(BuildPolytope(shifted, Concept::kIRCP), mu)) << seed;
  }
}

}  // namespace
}  // namespace eqcert
