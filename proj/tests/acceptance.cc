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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eqcert/certify.h"
#include "eqcert/contest.h"
#include "eqcert/dynamics.h"
#include "eqcert/generators.h"
#include "eqcert/gue.h"
#include "eqcert/polytope.h"
#include "json.hpp"

namespace eqcert {
namespace {

Rational Q(const char* text) { return ParseRational(text); }

// Collects failure notes for one criterion.
class Findings {
 public:
  void Expect(bool ok, const std::string& note) {
    ++checks_;
    if (!ok && notes_.size() < 5) notes_.push_back(note);
    if (!ok) ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  int checks() const { return checks_; }
  std::string Summary() const {
    std::ostringstream out;
    out << failures_ << " of " << checks_ << " checks failed";
    for (const std::string& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

bool Members(const Game& g, const Refutation& r) {
  PolytopeSpec spec = BuildPolytope(g, r.kind);
  for (const JointDistribution& w : r.witnesses) {
    if (!IsMember(spec, w)) return false;
  }
  return r.witnesses.size() < 2 || !(r.witnesses[0] == r.witnesses[1]);
}

void RockPaperScissorsTriple(Findings& f) {
  Game rps = RockPaperScissors();
  PolytopeSpec ce = BuildPolytope(rps, Concept::kCE);
  PolytopeSpec cce = BuildPolytope(rps, Concept::kCCE);
  PolytopeSpec ircp = BuildPolytope(rps, Concept::kIRCP);
  SingletonResult s = TestSingleton(ce);
  f.Expect(s.singleton && s.point == JointDistribution::Uniform(9),
           "CE is not the uniform singleton");
  JointDistribution diagonal = JointDistribution::UniformOver(9, {0, 4, 8});
  f.Expect(IsMember(cce, diagonal), "diagonal rejected by CCE");
  f.Expect(!IsMember(ce, diagonal), "diagonal accepted by CE");
  JointDistribution swap = JointDistribution::UniformOver(9, {1, 3});
  f.Expect(IsMember(ircp, swap), "rock/paper swap rejected by IRCP");
  f.Expect(!IsMember(cce, swap), "rock/paper swap accepted by CCE");
}

void ParkingThresholds(Findings& f) {
  struct Case {
    const char* t;
    int expect;  // 1 certified, 0 refuted, -1 defer to the oracle
  };
  for (const Case& c : std::vector<Case>{{"11/20", 1}, {"3/5", 1}, {"7/10", 1},
                                         {"3/4", 1}, {"2/5", 0}, {"1/2", 0},
                                         {"4/5", -1}}) {
    Game g = Parking(3, 1, Q("1/4"), Q(c.t));
    CertifyOutcome out = CertifyUniqueIrcp(g);
    SingletonResult oracle = TestSingleton(BuildPolytope(g, Concept::kIRCP));
    const std::string at = std::string("t=") + c.t;
    f.Expect(out.certified() == oracle.singleton, at + ": certificate vs oracle");
    if (c.expect >= 0) f.Expect(out.certified() == (c.expect == 1), at + ": verdict");
    if (out.certified()) {
      f.Expect(out.certificate->a_star == Profile{0, 0}, at + ": a*");
      f.Expect(VerifyCertificate(g, *out.certificate), at + ": certificate recheck");
      f.Expect(oracle.point == JointDistribution::PointMass(16, 0), at + ": oracle point");
    } else {
      f.Expect(Members(g, *out.refutation), at + ": witnesses");
    }
  }
}

void PrisonersDilemmaCase(Findings& f) {
  Game pd = PrisonersDilemma();
  CceClassification c = ClassifyUniqueCce(pd);
  f.Expect(c.variant == CceVariant::kUniquePure, "not unique pure");
  f.Expect(c.certificate && c.certificate->a_star == Profile{1, 1}, "a* is not (d,d)");
  f.Expect(c.certificate && VerifyCertificate(pd, *c.certificate), "certificate recheck");
  CertifyOutcome ircp = CertifyUniqueIrcp(pd);
  f.Expect(!ircp.certified(), "IRCP certified");
  if (!ircp.certified()) {
    bool has_cc = false;
    for (const JointDistribution& w : ircp.refutation->witnesses) {
      has_cc = has_cc || w == JointDistribution::PointMass(4, 0);
    }
    f.Expect(has_cc, "no (c,c) witness");
    f.Expect(Members(pd, *ircp.refutation), "witnesses not in IRCP");
  }
}

void MatchingPenniesSweep(Findings& f) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Game g = RandomMatchingPenniesType(seed, -9, 9);
    const auto& u = g.payoff_table();
    // Row indifference pins the column mix and vice versa.
    const Rational& a = u[0][0];
    const Rational& b = u[0][1];
    const Rational& c = u[0][2];
    const Rational& d = u[0][3];
    const Rational& e = u[1][0];
    const Rational& ff = u[1][1];
    const Rational& gg = u[1][2];
    const Rational& h = u[1][3];
    Rational p = (h - gg) / (e - ff - gg + h);
    Rational q = (d - b) / (a - b - c + d);
    JointDistribution closed = JointDistribution::Product(g, {{p, 1 - p}, {q, 1 - q}});
    const std::string at = "seed " + std::to_string(seed);
    CceClassification cls = ClassifyUniqueCce(g);
    f.Expect(cls.variant == CceVariant::kUniqueMixed2x2, at + ": variant");
    f.Expect(cls.equilibrium && *cls.equilibrium == closed, at + ": closed form");
    f.Expect(IsQuasiStrict(g, closed), at + ": quasi-strict");
    ExtremeNeClassification x = ClassifyExtremeNe(g, closed);
    f.Expect(x.predicted && x.measured, at + ": extremality");
  }
}

std::vector<int> SupportSizes(const Game& g, const JointDistribution& mu) {
  std::vector<int> k;
  for (int i = 0; i < g.num_players(); ++i) {
    int size = 0;
    for (const Rational& x : Marginal(g, mu, i)) size += sgn(x) > 0;
    if (size > 1) k.push_back(size);
  }
  return k;
}

struct SweepCounts {
  int games = 0;
  int ircp_certified = 0;
  int cce_certified = 0;
  int cce_mixed = 0;
};

void EquivalenceSweep(Findings& f, SweepCounts* counts) {
  const std::vector<std::vector<int>> shapes = {{2, 2},    {2, 3},    {3, 2},
                                                {3, 3},    {2, 2, 2}, {2, 2, 3},
                                                {2, 3, 3}, {3, 3, 3}};
  int& games = counts->games;
  for (std::uint64_t seed = 0; games < 1000; ++seed) {
    const std::vector<int>& shape = shapes[seed % shapes.size()];
    const int spread = 1 + static_cast<int>(seed % 3);
    Game g = RandomGame(shape, 10000 + seed, -spread, spread);
    ++games;
    const std::string at = "seed " + std::to_string(10000 + seed);

    CertifyOutcome ircp = CertifyUniqueIrcp(g);
    SingletonResult ircp_single = TestSingleton(BuildPolytope(g, Concept::kIRCP));
    f.Expect(ircp.certified() == ircp_single.singleton, at + ": IRCP agreement");
    if (ircp.certified()) {
      ++counts->ircp_certified;
      f.Expect(VerifyCertificate(g, *ircp.certificate), at + ": IRCP recheck");
      f.Expect(CheckEnforcementAt(ircp.certificate->transformed_game,
                                  ircp.certificate->a_star).ok(),
               at + ": enforcement");
    } else {
      f.Expect(Members(g, *ircp.refutation), at + ": IRCP witnesses");
    }
    if (ircp_single.singleton) {
      auto k = ircp_single.point.PointMassIndex();
      bool strict = false;
      if (k) {
        for (const PureEquilibrium& e : EnumeratePureNe(g)) {
          if (e.index == *k) strict = e.strict;
        }
      }
      f.Expect(strict, at + ": singleton IRCP is not a strict pure NE");
    }

    CertifyOutcome cce = CertifyUniquePureCce(g);
    SingletonResult cce_single = TestSingleton(BuildPolytope(g, Concept::kCCE));
    f.Expect(cce.certified() == (cce_single.singleton && cce_single.point.IsPointMass()),
             at + ": CCE agreement");
    if (cce.certified()) {
      ++counts->cce_certified;
      f.Expect(VerifyCertificate(g, *cce.certificate), at + ": CCE recheck");
    } else if (cce.refutation->refutation_kind == RefutationKind::kTwoMembers) {
      f.Expect(Members(g, *cce.refutation), at + ": CCE witnesses");
    }
    if (cce_single.singleton) {
      const JointDistribution& mu = cce_single.point;
      if (!mu.IsPointMass()) ++counts->cce_mixed;
      f.Expect(IsQuasiStrict(g, mu), at + ": unique CCE not quasi-strict");
      bool dichotomy = true;
      try {
        CceClassification cls = ClassifyUniqueCce(g);
        dichotomy = cls.variant != CceVariant::kNotUnique;
      } catch (const std::logic_error&) {
        dichotomy = false;
      }
      f.Expect(dichotomy, at + ": pure-or-2x2 dichotomy");
      std::vector<int> k = SupportSizes(g, mu);
      f.Expect(k.empty() || CombinatoricsBound(k), at + ": support bound");
    }
    // Quasi-strict equilibria of 2x2 games: extremality matches its shape,
    // and extreme ones obey the support bound.
    if (shape == std::vector<int>{2, 2}) {
      TwoByTwoEquilibria all = MixedNe2x2(g);
      if (!all.degenerate) {
        for (const JointDistribution& nu : all.equilibria) {
          if (!IsQuasiStrict(g, nu)) continue;
          ExtremeNeClassification x = ClassifyExtremeNe(g, nu);
          f.Expect(x.predicted == x.measured, at + ": extreme NE shape");
          std::vector<int> k = SupportSizes(g, nu);
          if (x.measured) f.Expect(k.empty() || CombinatoricsBound(k), at + ": bound");
        }
      }
    }
  }
}

void TullockGrid(Findings& f) {
  ContestSpec lottery{SuccessFunction::Tullock(1)};
  RationalVector grid = UniformGrid(Q("1/16"), 16);
  Game g = DiscretizeContest(lottery, {grid, grid});
  auto unit = CertifyCceWithWeights(g, {3, 3}, {1, 1});
  f.Expect(unit.has_value(), "unit weights do not certify (1/4,1/4)");
  CertifyOutcome out = CertifyUniquePureCce(g, Profile{3, 3});
  f.Expect(out.certified(), "grid game not certified at (1/4,1/4)");
  PotentialReport r = VerifyInverseValuePotential(lottery, {Q("1/4"), Q("1/4")}, {grid, grid});
  f.Expect(r.passed() && r.profiles_checked == 255, "potential check on the grid");
  QuadraticSign q = TullockTermSignAnalysis();
  f.Expect(q.nonpositive && q.double_root == Q("1/4") &&
               q.coefficients == RationalVector{Q("-1/4"), 2, -4},
           "term sign analysis");
  for (const char* r_text : {"1/2", "1", "3/2", "2"}) {
    const Rational r_exp = Q(r_text);
    const Rational centre = r_exp / 4;
    // Scaling by squares keeps every effort ratio a perfect square.
    RationalVector sq;
    for (int k = 1; k <= 8; ++k) sq.push_back(centre * MakeRational(k * k, 16));
    ContestSpec spec{SuccessFunction::Tullock(r_exp)};
    PotentialReport rep = VerifyInverseValuePotential(spec, {centre, centre}, {sq, sq});
    f.Expect(rep.passed(), std::string("r=") + r_text);
  }
}

void RatioBand(Findings& f) {
  RationalVector grid;
  for (int k = 1; k <= 1000; ++k) grid.push_back(MakeRational(k, 1001));
  f.Expect(RatioBandCheck(SuccessFunction::Tullock(1), Q("1/4"), grid).holds,
           "lottery share outside the band");
  auto [upper, lower] = BandFunctions(Q("1/4"));
  std::vector<Rational> probes = {Q("1/3"), 1, 3};
  for (int k = 1; probes.size() < 20; ++k) probes.push_back(MakeRational(k * k, 13));
  for (const Rational& t : probes) {
    Rational up = t <= 1 ? Rational(Q("1/4") + t / 4) : Rational(Q("3/4") - 1 / (4 * t));
    Rational lo;
    if (t <= Q("1/3")) {
      lo = 0;
    } else if (t <= 1) {
      lo = Q("3/4") - 1 / (4 * t);
    } else if (t <= 3) {
      lo = Q("1/4") + t / 4;
    } else {
      lo = 1;
    }
    f.Expect(ShareAtRatio(upper, t) == up, "upper at " + ToString(t));
    f.Expect(ShareAtRatio(lower, t) == lo, "lower at " + ToString(t));
  }
}

void AsymmetricContests(Findings& f) {
  struct Case {
    const char* name;
    ContestSpec spec;
    RationalVector grid;
    Efforts a_star;
  };
  RationalVector roots = {Q("1/16"), Q("1/9"), Q("1/4"), Q("4/9"), Q("9/16"), 1};
  std::vector<Case> cases = {
      // Closed form: a1/a2 = sqrt(v1/v2) and v1 a2 / (a1+a2)^2 = a1.
      {"lottery v=(8,2) quadratic", {SuccessFunction::Tullock(1), {8, 2},
        {CostFunction::Power(Q("1/2"), 2), CostFunction::Power(Q("1/2"), 2)}},
       UniformGrid(Q("1/3"), 6), {Q("4/3"), Q("2/3")}},
      {"lottery v=(3,1) quadratic", {SuccessFunction::Tullock(1), {3, 1},
        {CostFunction::Power(1, 2), CostFunction::Power(1, 2)}},
       UniformGrid(Q("1/16"), 16), {Q("9/16"), Q("5/16")}},
      {"tullock r=2 v=(2,1) cubic", {SuccessFunction::Tullock(2), {2, 1},
        {CostFunction::Power(1, 3), CostFunction::Power(1, 3)}},
       UniformGrid(Q("1/12"), 12), {Q("2/3"), Q("7/12")}},
      {"ratio 1+3t v=(5,2) quadratic", {SuccessFunction::Ratio({1, 3}), {5, 2},
        {CostFunction::Power(1, 2), CostFunction::Power(Q("1/2"), 2)}},
       UniformGrid(Q("1/10"), 15), {Q("3/5"), Q("1/2")}},
      {"tullock r=1/2 v=(4,1) quadratic", {SuccessFunction::Tullock(Q("1/2")), {4, 1},
        {CostFunction::Power(1, 2), CostFunction::Power(1, 2)}},
       roots, {Q("4/9"), Q("1/4")}},
  };
  for (const Case& c : cases) {
    PotentialReport r = VerifyInverseValuePotential(c.spec, c.a_star, {c.grid, c.grid});
    f.Expect(r.passed(), std::string(c.name) + ": potential");
    Game g = DiscretizeContest(c.spec, {c.grid, c.grid});
    Profile star(2);
    for (size_t k = 0; k < c.grid.size(); ++k) {
      if (c.grid[k] == c.a_star.first) star[0] = static_cast<int>(k);
      if (c.grid[k] == c.a_star.second) star[1] = static_cast<int>(k);
    }
    RationalVector inverse = {1 / c.spec.values[0], 1 / c.spec.values[1]};
    auto cert = CertifyCceWithWeights(g, star, inverse);
    f.Expect(cert.has_value() && VerifyCertificate(g, *cert),
             std::string(c.name) + ": inverse-value certificate");
    f.Expect(CertifyUniquePureCce(g, star).certified(),
             std::string(c.name) + ": grid CCE certificate");
  }
}

// A random enforcement game at a random profile, disguised by a random
// positive affine transform.
Game PlantedEnforcementGame(const std::vector<int>& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Game base = RandomGame(shape, seed, -3, 2);
  const int n = base.num_players();
  Profile star(n);
  for (int i = 0; i < n; ++i) star[i] = static_cast<int>(rng() % shape[i]);
  const int s = base.ProfileIndex(star);
  std::vector<RationalVector> v = base.payoff_table();
  for (int k = 0; k < base.num_profiles(); ++k) {
    for (int i = 0; i < n; ++i) {
      if (base.ActionAt(k, i) == star[i]) v[i][k] = k == s ? Rational(0) : Rational(abs(v[i][k]));
    }
  }
  for (int k = 0; k < base.num_profiles(); ++k) {
    if (k == s) continue;
    Rational total = 0;
    for (int i = 0; i < n; ++i) total += v[i][k];
    for (int i = 0; i < n && total >= 0; ++i) {
      if (base.ActionAt(k, i) == star[i]) continue;
      const Rational drop = total + 1 + static_cast<int>(rng() % 2);
      v[i][k] -= drop;
      total -= drop;
    }
  }
  RationalVector gamma(n), beta(n);
  for (int i = 0; i < n; ++i) {
    gamma[i] = MakeRational(1 + static_cast<long>(rng() % 6), 2);
    beta[i] = static_cast<long>(rng() % 7) - 3;
  }
  return AffineTransform(Game(base.action_labels(), v, "planted"), gamma, beta);
}

void GuaranteeGap(Findings& f, int* certified_out) {
  Game gap = GuaranteedUtilityCounterexample();
  f.Expect(IsGue(gap, {0, 0}), "(a1,a2) is not a guaranteed-utility profile");
  FractionalGueReport r = CheckStrictFractionalGue(gap, {0, 0});
  f.Expect(!r.holds(), "strict fractional check passed");
  f.Expect(r.dominating_payoffs == RationalVector{Q("1/2"), Q("1/2")},
           "dominating lottery payoff");
  JointDistribution mu = JointDistribution::UniformOver(9, {4, 8});
  for (Concept c : {Concept::kCCE, Concept::kIRCP}) {
    PolytopeSpec spec = BuildPolytope(gap, c);
    f.Expect(!TestSingleton(spec).singleton, ToString(c) + " is a singleton");
    f.Expect(IsMember(spec, mu) && IsMember(spec, JointDistribution::PointMass(9, 0)),
             ToString(c) + ": witnesses");
  }
  const std::vector<std::vector<int>> shapes = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
  int certified = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::vector<int>& shape = shapes[seed % shapes.size()];
    Game g = seed % 2 ? PlantedEnforcementGame(shape, 30000 + seed)
                      : RandomGame(shape, 30000 + seed, -2, 2);
    CertifyOutcome out = CertifyUniqueIrcp(g);
    const std::string at = "seed " + std::to_string(30000 + seed);
    if (out.certified()) {
      ++certified;
      f.Expect(IsStrictFractionalGue(g, out.certificate->a_star), at + ": not GUE at a*");
    } else {
      bool any = false;
      for (int k = 0; k < g.num_profiles() && !any; ++k) {
        any = IsStrictFractionalGue(g, g.ProfileFromIndex(k));
      }
      f.Expect(!any, at + ": strict fractional GUE without certificate");
    }
  }
  f.Expect(certified > 0, "no certified games in the sweep");
  *certified_out = certified;
}

void HullComparisons(Findings& f) {
  HullResult t2 = ConvNeVsIrcp(TwoEquilibriumDegenerateGame(),
                               {JointDistribution::PointMass(4, 0),
                                JointDistribution::PointMass(4, 3)});
  f.Expect(t2.comparison == HullComparison::kEqual, "degenerate pair not equal");
  HullResult pd = ConvNeVsIrcp(PrisonersDilemma(), {JointDistribution::PointMass(4, 3)});
  f.Expect(pd.comparison == HullComparison::kProperSubset, "PD not a proper subset");
  std::vector<JointDistribution> pure;
  for (int k = 0; k < 6; ++k) pure.push_back(JointDistribution::PointMass(6, k));
  f.Expect(ConvNeVsIrcp(ZeroGame({2, 3}), pure).comparison == HullComparison::kEqual,
           "zero game not equal");
}

void Openness(Findings& f) {
  const std::vector<std::vector<int>> shapes = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> step(-999, 999);
  int certified = 0;
  for (std::uint64_t seed = 0; certified < 50 && seed < 5000; ++seed) {
    Game g = RandomGame(shapes[seed % shapes.size()], 50000 + seed, -3, 3);
    CertifyOutcome out = CertifyUniquePureCce(g);
    if (!out.certified()) continue;
    ++certified;
    const UniquenessCertificate& cert = *out.certificate;
    Rational top = cert.gamma[0];
    for (const Rational& x : cert.gamma) top = std::max(top, x);
    const Rational radius = cert.slack / (2 * g.num_players() * top);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<RationalVector> payoffs = g.payoff_table();
      for (RationalVector& row : payoffs) {
        for (Rational& x : row) {
          // The last trial pushes every entry to 999/1000 of the radius.
          int s = trial == 4 ? (step(rng) < 0 ? -999 : 999) : step(rng);
          x += radius * MakeRational(s, 1000);
        }
      }
      Game perturbed(g.action_labels(), payoffs, "perturbed");
      auto again = CertifyCceWithWeights(perturbed, cert.a_star, cert.gamma);
      f.Expect(again.has_value(), "seed " + std::to_string(50000 + seed));
    }
  }
  f.Expect(certified == 50, "fewer than 50 certified games");
}

std::string DataPath(const std::string& name) {
  return std::string(EQCERT_TEST_DATA) + "/" + name;
}

void Dynamics(Findings& f) {
  std::ifstream in(DataPath("dynamics_pilot.json"));
  nlohmann::json pilot = nlohmann::json::parse(in);
  const std::int64_t steps = pilot.at("steps");
  const auto seeds = pilot.at("seeds").get<std::vector<std::uint64_t>>();
  const auto& ext = pilot.at("external_mw");
  const double eta = ext.at("eta0");
  const Rational tv_bound = Q(ext.at("tv_threshold").get<std::string>().c_str());
  const Rational ext_bound =
      Q(ext.at("external_regret_threshold_over_range").get<std::string>().c_str());
  const Rational int_bound = Q(pilot.at("internal_rm")
                                   .at("internal_regret_threshold_over_range")
                                   .get<std::string>()
                                   .c_str());

  RationalVector grid = UniformGrid(Q("1/16"), 16);
  std::vector<std::pair<std::string, Game>> games = {
      {"prisoners dilemma", PrisonersDilemma()},
      {"parking", Parking(3, 1, Q("1/4"), Q("3/5"))},
      {"lottery grid", DiscretizeContest(ContestSpec{SuccessFunction::Tullock(1)},
                                         {grid, grid})}};
  for (const auto& [name, g] : games) {
    CertifyOutcome cert = CertifyUniquePureCce(g);
    f.Expect(cert.certified(), name + ": no certificate");
    if (!cert.certified()) continue;
    JointDistribution target = JointDistribution::PointMass(
        g.num_profiles(), g.ProfileIndex(cert.certificate->a_star));
    const Rational range = PayoffRange(g);
    for (std::uint64_t seed : seeds) {
      DynamicsRun run = RunDynamics(g, {Algorithm::kExternalMw, steps, seed, eta});
      const std::string at = name + " seed " + std::to_string(seed);
      f.Expect(TotalVariation(run.empirical, target) <= tv_bound, at + ": distance");
      f.Expect(run.max_external_regret <= ext_bound * range, at + ": external regret");
    }
  }
  Game rps = RockPaperScissors();
  for (std::uint64_t seed : seeds) {
    DynamicsRun run = RunDynamics(rps, {Algorithm::kInternalRm, steps, seed, eta});
    f.Expect(run.max_internal_regret <= int_bound * PayoffRange(rps),
             "rps seed " + std::to_string(seed) + ": internal regret");
  }
}

}  // namespace
}  // namespace eqcert

int main() {
  using eqcert::Findings;
  int failed = 0;
  auto run = [&](int n, const std::string& title, const std::function<void(Findings&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Findings f;
    std::string error;
    try {
      body(f);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && f.ok();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%d checks, %.1fs)", ok ? "PASS" : "FAIL", n,
                title.c_str(), f.checks(), seconds);
    if (!error.empty()) std::printf(" -- exception: %s", error.c_str());
    if (!f.ok()) std::printf(" -- %s", f.Summary().c_str());
    std::printf("\n");
    std::fflush(stdout);
  };

  run(1, "rock-paper-scissors memberships and CE singleton", eqcert::RockPaperScissorsTriple);
  run(2, "parking ticket thresholds agree with the singleton oracle", eqcert::ParkingThresholds);
  run(3, "prisoner's dilemma: unique pure CCE, refuted IRCP", eqcert::PrisonersDilemmaCase);
  run(4, "200 matching-pennies-type games: unique mixed CCE", eqcert::MatchingPenniesSweep);
  eqcert::SweepCounts counts;
  run(5, "random-game certificate/singleton equivalence sweep",
      [&](Findings& f) { eqcert::EquivalenceSweep(f, &counts); });
  std::printf("  (%d games: %d unique IRCP, %d unique pure CCE, %d unique mixed CCE)\n",
              counts.games, counts.ircp_certified, counts.cce_certified, counts.cce_mixed);
  run(6, "lottery contest grid and modified exponents", eqcert::TullockGrid);
  run(7, "ratio band and band envelopes", eqcert::RatioBand);
  run(8, "asymmetric contests certified with inverse-value weights",
      eqcert::AsymmetricContests);
  int certified = 0;
  run(9, "guarantee-gap game and fractional-guarantee agreement",
      [&](Findings& f) { eqcert::GuaranteeGap(f, &certified); });
  std::printf("  (%d of 200 games certified, half of them planted)\n", certified);
  run(10, "equilibrium hull versus individually rational set", eqcert::HullComparisons);
  run(11, "certificates survive bounded payoff perturbations", eqcert::Openness);
  run(12, "no-regret dynamics corroborate certified points (pilot thresholds)",
      eqcert::Dynamics);
  std::printf("%s: %d of 12 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
