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

// Command-line front end: generate, analyze, certify, contest, simulate and
// verify. Exit codes: 0 success or certificate, 1 refuted or a failed check,
// 2 input or usage error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqcert/certify.h"
#include "eqcert/contest.h"
#include "eqcert/dynamics.h"
#include "eqcert/game_io.h"
#include "eqcert/generators.h"
#include "eqcert/report.h"

namespace {

using namespace eqcert;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> ParseInts(const std::string& text) {
  std::vector<int> out;
  for (const std::string& s : SplitCommas(text)) out.push_back(std::stoi(s));
  return out;
}

RationalVector ParseRationals(const std::string& text) {
  RationalVector out;
  for (const std::string& s : SplitCommas(text)) out.push_back(ParseRational(s));
  return out;
}

void Emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

struct GenerateArgs {
  std::string family;
  int m = 3;
  std::string v = "1", c = "1/4", t = "3/5";
  std::string payoffs;
  std::string shape = "2,2";
  std::optional<std::uint64_t> seed;
  int lo = -5, hi = 5;
  int players = 3, actions = 2;
  std::string out;
};

Game Generate(const GenerateArgs& a) {
  const std::string& f = a.family;
  if (f == "pd") return PrisonersDilemma();
  if (f == "mp") return MatchingPennies();
  if (f == "rps") return RockPaperScissors();
  if (f == "parking") {
    return Parking(a.m, ParseRational(a.v), ParseRational(a.c),
                   ParseRational(a.t));
  }
  if (f == "mp-type") {
    RationalVector p = ParseRationals(a.payoffs);
    if (p.size() != 8) throw std::invalid_argument("--payoffs needs 8 values");
    return MatchingPenniesType(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]);
  }
  if (f == "degenerate-pair") return TwoEquilibriumDegenerateGame();
  if (f == "guarantee-gap") return GuaranteedUtilityCounterexample();
  if (f == "zero") return ZeroGame(ParseInts(a.shape));
  if (f == "random" || f == "random-symmetric" || f == "random-mp-type") {
    if (!a.seed) throw std::invalid_argument("--seed is required for " + f);
    if (f == "random") return RandomGame(ParseInts(a.shape), *a.seed, a.lo, a.hi);
    if (f == "random-symmetric") {
      return RandomSymmetricGame(a.players, a.actions, *a.seed, a.lo, a.hi);
    }
    return RandomMatchingPenniesType(*a.seed, a.lo, a.hi);
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

std::vector<RationalVector> ContestGrids(const std::string& step, int count,
                                         const std::string& grid_file) {
  if (!grid_file.empty()) {
    Json j = Json::parse(ReadTextFile(grid_file));
    if (j.is_object()) j = j.at("grids");
    if (j.size() == 2 && j[0].is_array()) {
      return {RationalsFromJson(j[0]), RationalsFromJson(j[1])};
    }
    RationalVector g = RationalsFromJson(j);
    return {g, g};
  }
  RationalVector g = UniformGrid(ParseRational(step), count);
  return {g, g};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equilibrium analysis and uniqueness certificates"};
  app.require_subcommand(1);

  // analyze
  std::string game_path, out_path, concepts_text = "ne,ce,cce,ircp";
  bool check_unique = false;
  auto* analyze = app.add_subcommand("analyze", "Polytope and equilibrium report");
  analyze->add_option("game", game_path, "Game file (JSON)")->required();
  analyze->add_option("--concepts", concepts_text, "Subset of ne,ce,cce,ircp");
  analyze->add_flag("--check-unique", check_unique,
                    "Add certificates, CCE classification and GUE flags");
  analyze->add_option("--json", out_path, "Write the report here");

  // certify
  std::string concept_text = "cce", target_text;
  auto* certify = app.add_subcommand("certify", "Uniqueness certificate");
  certify->add_option("game", game_path, "Game file (JSON)")->required();
  certify->add_option("--concept", concept_text, "ircp or cce")
      ->check(CLI::IsMember({"ircp", "cce"}));
  certify->add_option("--target", target_text, "Profile, e.g. 0,0");
  certify->add_option("--json", out_path, "Write the report here");

  // generate
  GenerateArgs gen;
  std::uint64_t seed_value = 0;
  auto* generate = app.add_subcommand("generate", "Write a game file");
  generate->add_option("family", gen.family,
                       "pd, mp, rps, parking, mp-type, degenerate-pair, "
                       "guarantee-gap, zero, random, random-symmetric, "
                       "random-mp-type")
      ->required();
  generate->add_option("--m", gen.m, "Parking: number of illegal spots");
  generate->add_option("--v", gen.v, "Parking: value of parking");
  generate->add_option("--c", gen.c, "Parking: inspection cost");
  generate->add_option("--t", gen.t, "Parking: ticket");
  generate->add_option("--payoffs", gen.payoffs, "mp-type: a,b,c,d,e,f,g,h");
  generate->add_option("--shape", gen.shape, "Actions per player, e.g. 2,3");
  auto* seed_opt = generate->add_option("--seed", seed_value, "Random seed");
  generate->add_option("--lo", gen.lo, "Smallest random payoff");
  generate->add_option("--hi", gen.hi, "Largest random payoff");
  generate->add_option("--players", gen.players, "random-symmetric players");
  generate->add_option("--actions", gen.actions, "random-symmetric actions");
  generate->add_option("--out", gen.out, "Output file (default stdout)");

  // contest
  std::string contest_path, step = "1/16", grid_file, a_star_text, band_c = "1/4",
                            discretize_path;
  int count = 16, band_points = 1000;
  bool potential_check = false, band = false, certify_grid = false;
  auto* contest = app.add_subcommand("contest", "Continuous two-player contests");
  contest->add_option("spec", contest_path, "Contest file (JSON)")->required();
  contest->add_option("--step", step, "Grid step for both players");
  contest->add_option("--count", count, "Grid points per player");
  contest->add_option("--grid-file", grid_file, "JSON grid(s) of efforts");
  contest->add_option("--a-star", a_star_text, "Equilibrium efforts x,y");
  contest->add_flag("--potential", potential_check,
                    "Check the inverse-value potential on the grid");
  contest->add_flag("--band", band, "Check the success function's band");
  contest->add_option("--c", band_c, "Band equilibrium effort");
  contest->add_option("--band-points", band_points, "Ratios k/(N+1), k<=N");
  contest->add_flag("--certify", certify_grid, "Certify the grid game's CCE");
  contest->add_option("--discretize", discretize_path, "Write the grid game");
  contest->add_option("--json", out_path, "Write the report here");

  // simulate
  std::string algo = "external_mw";
  std::int64_t steps = 100000;
  std::uint64_t sim_seed = 0;
  double eta = 8.0;
  auto* simulate = app.add_subcommand("simulate", "No-regret dynamics");
  simulate->add_option("game", game_path, "Game file (JSON)")->required();
  simulate->add_option("--algo", algo, "external_mw or internal_rm")
      ->check(CLI::IsMember({"external_mw", "internal_rm"}));
  simulate->add_option("--steps", steps, "Number of rounds");
  simulate->add_option("--seed", sim_seed, "Random seed")->required();
  simulate->add_option("--eta", eta, "Initial learning rate");
  simulate->add_option("--target", target_text, "Profile to measure against");
  simulate->add_option("--json", out_path, "Write the report here");

  // verify
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Re-check a report");
  verify->add_option("report", report_path, "Report file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) {
      Game game = ReadGameFile(game_path);
      AnalyzeOptions options;
      options.include_ne = false;
      options.concepts.clear();
      for (const std::string& c : SplitCommas(concepts_text)) {
        if (c == "ne") {
          options.include_ne = true;
        } else {
          options.concepts.push_back(ParseConcept(c));
        }
      }
      options.check_unique = check_unique;
      Emit(Analyze(game, options), out_path);
      return kExitOk;
    }
    if (*certify) {
      Game game = ReadGameFile(game_path);
      const Concept kind = ParseConcept(concept_text);
      std::optional<Profile> target;
      if (!target_text.empty()) target = ParseInts(target_text);
      CertifyOutcome outcome = kind == Concept::kIRCP
                                   ? CertifyUniqueIrcp(game)
                                   : CertifyUniquePureCce(game, target);
      if (target) outcome = RestrictToTarget(game, outcome, *target);
      Emit(CertifyReport(game, kind, outcome, target), out_path);
      return outcome.certified() ? kExitOk : kExitRefuted;
    }
    if (*generate) {
      if (seed_opt->count() > 0) gen.seed = seed_value;
      WriteTextFile(gen.out.empty() ? "/dev/stdout" : gen.out,
                    SaveGame(Generate(gen)));
      return kExitOk;
    }
    if (*contest) {
      ContestSpec spec = ContestFromJson(Json::parse(ReadTextFile(contest_path)));
      std::vector<RationalVector> grids = ContestGrids(step, count, grid_file);
      Json report = {{"kind", "contest"}, {"spec", ContestToJson(spec)}};
      bool passed = true;
      std::optional<Efforts> a_star;
      if (!a_star_text.empty()) {
        RationalVector a = ParseRationals(a_star_text);
        if (a.size() != 2) throw std::invalid_argument("--a-star needs x,y");
        a_star = Efforts{a[0], a[1]};
        report["a_star"] = RationalsToJson(a);
      }
      report["grids"] = {RationalsToJson(grids[0]), RationalsToJson(grids[1])};
      if (potential_check) {
        if (!a_star) throw std::invalid_argument("--potential needs --a-star");
        PotentialReport r = VerifyInverseValuePotential(spec, *a_star, grids);
        report["potential"] = {
            {"strict_equilibrium", r.strict_equilibrium},
            {"potential_negative", r.potential_negative},
            {"profiles_checked", r.profiles_checked},
            {"max_potential",
             r.max_potential ? RationalToJson(*r.max_potential) : Json()},
            {"violations", r.violations}};
        passed = passed && r.passed();
      }
      if (band) {
        const Rational c = ParseRational(band_c);
        RationalVector ratios;
        for (int k = 1; k <= band_points; ++k) {
          ratios.push_back(MakeRational(k, band_points + 1));
        }
        BandCheck b = RatioBandCheck(spec.success, c, ratios);
        report["band"] = {{"c", RationalToJson(c)},
                          {"points", band_points},
                          {"holds", b.holds}};
        if (!b.holds) {
          report["band"]["failing_ratio"] = RationalToJson(*b.failing_ratio);
          report["band"]["failure"] = b.failure;
        }
        passed = passed && b.holds;
      }
      if (certify_grid || !discretize_path.empty()) {
        Game game = DiscretizeContest(spec, grids);
        if (!discretize_path.empty()) WriteTextFile(discretize_path, SaveGame(game));
        if (certify_grid) {
          std::optional<Profile> target;
          if (a_star) {
            auto index_of = [](const RationalVector& g, const Rational& x) {
              for (size_t k = 0; k < g.size(); ++k) {
                if (g[k] == x) return static_cast<int>(k);
              }
              throw std::invalid_argument("--a-star is not on the grid");
            };
            target = Profile{index_of(grids[0], a_star->first),
                             index_of(grids[1], a_star->second)};
          }
          CertifyOutcome outcome = CertifyUniquePureCce(game, target);
          report["grid_certificate"] = OutcomeToJson(outcome);
          passed = passed && outcome.certified();
        }
      }
      Emit(report, out_path);
      return passed ? kExitOk : kExitRefuted;
    }
    if (*simulate) {
      Game game = ReadGameFile(game_path);
      DynamicsOptions options{ParseAlgorithm(algo), steps, sim_seed, eta};
      std::optional<Profile> target;
      if (!target_text.empty()) target = ParseInts(target_text);
      Emit(SimulationReport(game, RunDynamics(game, options), target), out_path);
      return kExitOk;
    }
    if (*verify) {
      VerifyResult r = VerifyReport(Json::parse(ReadTextFile(report_path)));
      std::cout << (r.ok() ? "verified " : "FAILED ") << r.checked
                << " checks\n";
      for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
      return r.ok() ? kExitOk : kExitRefuted;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
