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

#include "eqcert/report.h"

#include <chrono>
#include <stdexcept>

#include "eqcert/contest.h"
#include "eqcert/gue.h"

namespace eqcert {

Json ProfileToJson(const Profile& profile) {
  Json j = Json::array();
  for (int a : profile) j.push_back(a);
  return j;
}

Profile ProfileFromJson(const Json& j) { return j.get<Profile>(); }

Json CertificateToJson(const UniquenessCertificate& cert) {
  return {{"concept", ToString(cert.kind)},
          {"a_star", ProfileToJson(cert.a_star)},
          {"gamma", RationalsToJson(cert.gamma)},
          {"slack", RationalToJson(cert.slack)},
          {"transformed_game", GameToJson(cert.transformed_game)}};
}

UniquenessCertificate CertificateFromJson(const Json& j) {
  return UniquenessCertificate{
      ParseConcept(j.at("concept").get<std::string>()),
      ProfileFromJson(j.at("a_star")), RationalsFromJson(j.at("gamma")),
      RationalFromJson(j.at("slack")), GameFromJson(j.at("transformed_game"))};
}

Json RefutationToJson(const Refutation& refutation) {
  Json witnesses = Json::array();
  for (const JointDistribution& w : refutation.witnesses) {
    witnesses.push_back(DistributionToJson(w));
  }
  Json j = {{"concept", ToString(refutation.kind)},
            {"kind", ToString(refutation.refutation_kind)},
            {"witnesses", witnesses},
            {"reason", refutation.reason}};
  if (refutation.target) j["target"] = ProfileToJson(*refutation.target);
  return j;
}

Refutation RefutationFromJson(const Json& j, int num_profiles) {
  Refutation r;
  r.kind = ParseConcept(j.at("concept").get<std::string>());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "two_members") {
    r.refutation_kind = RefutationKind::kTwoMembers;
  } else if (kind == "singleton_elsewhere") {
    r.refutation_kind = RefutationKind::kSingletonElsewhere;
  } else {
    throw std::invalid_argument("unknown refutation kind '" + kind + "'");
  }
  for (const Json& w : j.at("witnesses")) {
    r.witnesses.push_back(DistributionFromJson(w, num_profiles));
  }
  r.reason = j.value("reason", "");
  if (j.contains("target")) r.target = ProfileFromJson(j.at("target"));
  return r;
}

Json OutcomeToJson(const CertifyOutcome& outcome) {
  if (outcome.certified()) {
    return {{"result", "certificate"},
            {"certificate", CertificateToJson(*outcome.certificate)}};
  }
  return {{"result", "refutation"},
          {"refutation", RefutationToJson(*outcome.refutation)}};
}

bool VerifyRefutation(const Game& game, const Refutation& refutation,
                      std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  PolytopeSpec spec = BuildPolytope(game, refutation.kind);
  for (const JointDistribution& w : refutation.witnesses) {
    if (w.size() != game.num_profiles()) return fail("witness has wrong size");
    if (!IsMember(spec, w)) return fail("witness is not a member");
  }
  if (refutation.refutation_kind == RefutationKind::kTwoMembers) {
    if (refutation.witnesses.size() != 2) return fail("need two witnesses");
    if (refutation.witnesses[0] == refutation.witnesses[1]) {
      return fail("witnesses coincide");
    }
    return true;
  }
  if (refutation.witnesses.size() != 1) return fail("need one witness");
  const JointDistribution& w = refutation.witnesses[0];
  SingletonResult st = TestSingleton(spec);
  if (!st.singleton || !(st.point == w)) {
    return fail("witness is not the unique member");
  }
  if (refutation.target) {
    if (w == JointDistribution::PointMass(game.num_profiles(),
                                          game.ProfileIndex(*refutation.target))) {
      return fail("unique member is the target itself");
    }
  } else if (w.IsPointMass()) {
    return fail("unique member is pure");
  }
  return true;
}

namespace {

Json SingletonToJson(const SingletonResult& st) {
  Json j = {{"singleton", st.singleton},
            {"point", DistributionToJson(st.point)}};
  if (!st.singleton) j["other"] = DistributionToJson(st.other);
  return j;
}

Json ClassificationToJson(const CceClassification& c) {
  Json j = {{"variant", ToString(c.variant)}};
  if (c.equilibrium) j["equilibrium"] = DistributionToJson(*c.equilibrium);
  if (c.certificate) j["certificate"] = CertificateToJson(*c.certificate);
  if (c.subgame) {
    j["mixing_players"] = {c.mixing_players.first, c.mixing_players.second};
    j["subgame"] = GameToJson(*c.subgame);
  }
  if (c.refutation) j["refutation"] = RefutationToJson(*c.refutation);
  return j;
}

}  // namespace

Json Analyze(const Game& game, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Json report = {{"kind", "analysis"}, {"game", GameToJson(game)}};
  Json concepts = Json::object();
  if (options.include_ne) {
    Json pure = Json::array();
    for (const PureEquilibrium& ne : EnumeratePureNe(game)) {
      pure.push_back({{"profile", ProfileToJson(ne.profile)},
                      {"label", game.ProfileLabel(ne.index)},
                      {"strict", ne.strict}});
    }
    concepts["ne"] = {{"pure", pure}};
    if (game.num_players() == 2 && game.num_actions(0) == 2 &&
        game.num_actions(1) == 2) {
      TwoByTwoEquilibria all = MixedNe2x2(game);
      Json list = Json::array();
      for (const JointDistribution& e : all.equilibria) {
        list.push_back(DistributionToJson(e));
      }
      concepts["ne"]["all_2x2"] = {{"degenerate", all.degenerate},
                                   {"equilibria", list}};
    }
  }
  for (Concept kind : options.concepts) {
    concepts[ToString(kind)] =
        SingletonToJson(TestSingleton(BuildPolytope(game, kind)));
  }
  report["concepts"] = concepts;
  if (options.check_unique) {
    CertifyOutcome ircp = CertifyUniqueIrcp(game);
    report["certificates"] = {{"ircp", OutcomeToJson(ircp)},
                              {"cce", OutcomeToJson(CertifyUniquePureCce(game))}};
    report["classification"] = ClassificationToJson(ClassifyUniqueCce(game));
    Json gue = Json::array();
    for (int k = 0; k < game.num_profiles(); ++k) {
      const Profile p = game.ProfileFromIndex(k);
      if (!IsGue(game, p)) continue;
      gue.push_back({{"profile", ProfileToJson(p)},
                     {"strict_fractional", IsStrictFractionalGue(game, p)}});
    }
    report["gue"] = gue;
  }
  report["timing_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

Json CertifyReport(const Game& game, Concept kind, const CertifyOutcome& outcome,
                   const std::optional<Profile>& target) {
  Json j = {{"kind", "certify"},
            {"game", GameToJson(game)},
            {"concept", ToString(kind)},
            {"outcome", OutcomeToJson(outcome)}};
  if (target) j["target"] = ProfileToJson(*target);
  return j;
}

Json SimulationReport(const Game& game, const DynamicsRun& run,
                      const std::optional<Profile>& target) {
  Json counts = Json::object();
  for (size_t k = 0; k < run.counts.size(); ++k) {
    if (run.counts[k] > 0) counts[std::to_string(k)] = run.counts[k];
  }
  Json trajectory = Json::array();
  for (const Checkpoint& c : run.trajectory) {
    trajectory.push_back({{"step", c.step},
                          {"max_external_regret",
                           RationalToJson(c.max_external_regret)},
                          {"max_internal_regret",
                           RationalToJson(c.max_internal_regret)}});
  }
  Json j = {{"kind", "simulation"},
            {"game", GameToJson(game)},
            {"algorithm", ToString(run.options.algorithm)},
            {"seed", run.options.seed},
            {"steps", run.options.steps},
            {"learning_rate", run.options.learning_rate},
            {"counts", counts},
            {"empirical", DistributionToJson(run.empirical)},
            {"max_external_regret", RationalToJson(run.max_external_regret)},
            {"max_internal_regret", RationalToJson(run.max_internal_regret)},
            {"payoff_range", RationalToJson(PayoffRange(game))},
            {"trajectory", trajectory}};
  if (target) {
    JointDistribution point = JointDistribution::PointMass(
        game.num_profiles(), game.ProfileIndex(*target));
    j["target"] = ProfileToJson(*target);
    j["distance_to_target"] =
        RationalToJson(TotalVariation(run.empirical, point));
  }
  return j;
}

namespace {

class Verifier {
 public:
  explicit Verifier(VerifyResult* result) : result_(result) {}

  void Check(bool ok, const std::string& what) {
    ++result_->checked;
    if (!ok) result_->failures.push_back(what);
  }

  void Certificate(const Game& game, const Json& j, const std::string& where) {
    UniquenessCertificate cert = CertificateFromJson(j);
    Check(VerifyCertificate(game, cert), where + ": certificate");
  }

  void Refutation(const Game& game, const Json& j, const std::string& where) {
    std::string why;
    eqcert::Refutation r = RefutationFromJson(j, game.num_profiles());
    Check(VerifyRefutation(game, r, &why), where + ": refutation " + why);
  }

  void Outcome(const Game& game, const Json& j, const std::string& where) {
    if (j.at("result") == "certificate") {
      Certificate(game, j.at("certificate"), where);
    } else {
      Refutation(game, j.at("refutation"), where);
    }
  }

 private:
  VerifyResult* result_;
};

void VerifyAnalysis(const Game& game, const Json& report, Verifier& v) {
  const Json& concepts = report.at("concepts");
  if (concepts.contains("ne")) {
    for (const Json& e : concepts["ne"].at("pure")) {
      const Profile p = ProfileFromJson(e.at("profile"));
      bool found = false;
      bool strict = false;
      for (const PureEquilibrium& ne : EnumeratePureNe(game)) {
        if (ne.profile == p) {
          found = true;
          strict = ne.strict;
        }
      }
      v.Check(found && strict == e.at("strict").get<bool>(),
              "pure equilibrium " + e.at("label").get<std::string>());
    }
    if (concepts["ne"].contains("all_2x2")) {
      for (const Json& d : concepts["ne"]["all_2x2"].at("equilibria")) {
        v.Check(IsNashEquilibrium(game, DistributionFromJson(d, 4)),
                "2x2 equilibrium");
      }
    }
  }
  for (Concept kind : {Concept::kCE, Concept::kCCE, Concept::kIRCP}) {
    const std::string name = ToString(kind);
    if (!concepts.contains(name)) continue;
    const Json& c = concepts[name];
    PolytopeSpec spec = BuildPolytope(game, kind);
    JointDistribution point =
        DistributionFromJson(c.at("point"), game.num_profiles());
    v.Check(IsMember(spec, point), name + ": point is a member");
    if (c.at("singleton").get<bool>()) {
      SingletonResult st = TestSingleton(spec);
      v.Check(st.singleton && st.point == point, name + ": singleton");
    } else {
      JointDistribution other =
          DistributionFromJson(c.at("other"), game.num_profiles());
      v.Check(IsMember(spec, other) && !(other == point),
              name + ": second member");
    }
  }
  if (report.contains("certificates")) {
    for (const auto& [name, outcome] : report["certificates"].items()) {
      v.Outcome(game, outcome, "certificates." + name);
    }
  }
  if (report.contains("classification")) {
    const Json& c = report["classification"];
    const std::string variant = c.at("variant");
    if (variant == "unique_pure") {
      v.Certificate(game, c.at("certificate"), "classification");
      const Profile a = ProfileFromJson(c.at("certificate").at("a_star"));
      v.Check(DistributionFromJson(c.at("equilibrium"), game.num_profiles()) ==
                  JointDistribution::PointMass(game.num_profiles(),
                                               game.ProfileIndex(a)),
              "classification: equilibrium matches certificate");
    } else if (variant == "unique_mixed_2x2") {
      JointDistribution mu =
          DistributionFromJson(c.at("equilibrium"), game.num_profiles());
      Game sub = GameFromJson(c.at("subgame"));
      SingletonResult st = TestSingleton(BuildPolytope(game, Concept::kCCE));
      v.Check(st.singleton && st.point == mu, "classification: unique CCE");
      v.Check(IsMatchingPenniesType(sub), "classification: 2x2 cycle");
      v.Check(IsQuasiStrict(game, mu), "classification: quasi-strict");
    } else {
      v.Refutation(game, c.at("refutation"), "classification");
    }
  }
  if (report.contains("gue")) {
    for (const Json& g : report["gue"]) {
      const Profile p = ProfileFromJson(g.at("profile"));
      v.Check(IsGue(game, p), "gue profile");
      v.Check(IsStrictFractionalGue(game, p) ==
                  g.at("strict_fractional").get<bool>(),
              "strict fractional gue flag");
    }
  }
}

void VerifySimulation(const Game& game, const Json& report, Verifier& v) {
  RationalVector p(game.num_profiles(), Rational(0));
  const long steps = report.at("steps").get<long>();
  long total = 0;
  for (const auto& [key, count] : report.at("counts").items()) {
    const long c = count.get<long>();
    total += c;
    p.at(std::stoi(key)) = Rational(mpz_class(std::to_string(c)),
                                    mpz_class(std::to_string(steps)));
  }
  for (Rational& x : p) x.canonicalize();
  v.Check(total == steps, "simulation: counts add up to steps");
  if (total != steps) return;
  JointDistribution mu(p);
  v.Check(DistributionToJson(mu) == report.at("empirical"),
          "simulation: empirical distribution");
  Rational ext, inte;
  for (int i = 0; i < game.num_players(); ++i) {
    Rational e = ExternalRegret(game, i, mu);
    Rational r = InternalRegret(game, i, mu);
    if (i == 0 || e > ext) ext = e;
    if (i == 0 || r > inte) inte = r;
  }
  v.Check(RationalToJson(ext) == report.at("max_external_regret"),
          "simulation: external regret");
  v.Check(RationalToJson(inte) == report.at("max_internal_regret"),
          "simulation: internal regret");
  if (report.contains("target")) {
    const Profile t = ProfileFromJson(report["target"]);
    JointDistribution point =
        JointDistribution::PointMass(game.num_profiles(), game.ProfileIndex(t));
    v.Check(RationalToJson(TotalVariation(mu, point)) ==
                report.at("distance_to_target"),
            "simulation: distance to target");
  }
}

}  // namespace

namespace {

// Recomputes every contest claim from the spec and grids in the report.
void VerifyContest(const Json& report, Verifier& v) {
  const ContestSpec spec = ContestFromJson(report.at("spec"));
  std::vector<RationalVector> grids;
  if (report.contains("grids")) {
    for (const Json& g : report["grids"]) grids.push_back(RationalsFromJson(g));
  }
  if (report.contains("potential")) {
    const RationalVector a = RationalsFromJson(report.at("a_star"));
    PotentialReport r = VerifyInverseValuePotential(spec, {a.at(0), a.at(1)}, grids);
    const Json& claimed = report["potential"];
    v.Check(claimed.at("strict_equilibrium") == r.strict_equilibrium,
            "potential: strict equilibrium flag");
    v.Check(claimed.at("potential_negative") == r.potential_negative,
            "potential: negativity flag");
    v.Check(claimed.at("profiles_checked") == r.profiles_checked,
            "potential: profile count");
    v.Check(r.max_potential ? claimed.at("max_potential") == RationalToJson(*r.max_potential)
                            : claimed.at("max_potential").is_null(),
            "potential: maximum");
  }
  if (report.contains("band")) {
    const Json& band = report["band"];
    const int points = band.at("points");
    RationalVector ratios;
    for (int k = 1; k <= points; ++k) ratios.push_back(MakeRational(k, points + 1));
    BandCheck b = RatioBandCheck(spec.success, RationalFromJson(band.at("c")), ratios);
    v.Check(band.at("holds") == b.holds, "band: verdict");
  }
  if (report.contains("grid_certificate")) {
    v.Outcome(DiscretizeContest(spec, grids), report["grid_certificate"],
              "grid_certificate");
  }
}

}  // namespace

VerifyResult VerifyReport(const Json& report) {
  VerifyResult result;
  Verifier v(&result);
  try {
    if (report.at("kind") == "contest") {
      VerifyContest(report, v);
      return result;
    }
    Game game = GameFromJson(report.at("game"));
    const std::string kind = report.at("kind");
    if (kind == "analysis") {
      VerifyAnalysis(game, report, v);
    } else if (kind == "certify") {
      v.Outcome(game, report.at("outcome"), "outcome");
      const Json& outcome = report["outcome"];
      if (outcome.at("result") == "certificate") {
        v.Check(outcome["certificate"].at("concept") == report.at("concept"),
                "certificate concept");
      }
    } else if (kind == "simulation") {
      VerifySimulation(game, report, v);
    } else {
      result.failures.push_back("unknown report kind '" + kind + "'");
    }
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("malformed report: ") + e.what());
  }
  return result;
}

}  // namespace eqcert
