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

#ifndef EQCERT_CERTIFY_H_
#define EQCERT_CERTIFY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcert/game.h"
#include "eqcert/polytope.h"

namespace eqcert {

// Outcome of scanning a game for a self-enforcing profile: everyone gets zero
// there, sticking to it guarantees at least zero, and total payoff is
// strictly negative at every other profile.
struct EnforcementCheck {
  std::optional<Profile> a_star;
  bool zero_at_star = false;
  bool unilateral_guarantee = false;
  bool welfare_negative_elsewhere = false;
  std::string reason;  // Empty on success.

  bool ok() const {
    return zero_at_star && unilateral_guarantee && welfare_negative_elsewhere;
  }
};

EnforcementCheck CheckEnforcement(const Game& game);
EnforcementCheck CheckEnforcementAt(const Game& game, const Profile& a_star);

struct UniquenessCertificate {
  Concept kind = Concept::kIRCP;  // kIRCP or kCCE
  Profile a_star;
  RationalVector gamma;  // Positive, sums to one unless supplied externally.
  Rational slack;        // min over a != a_star of -sum_i gamma_i d_i(a)
  Game transformed_game;
};

enum class RefutationKind {
  kTwoMembers,      // Two distinct members of the polytope.
  // The polytope is a single point other than the claimed profile: mixed,
  // or a pure profile different from the requested target.
  kSingletonElsewhere,
};
std::string ToString(RefutationKind kind);

struct Refutation {
  Concept kind = Concept::kIRCP;
  RefutationKind refutation_kind = RefutationKind::kTwoMembers;
  std::vector<JointDistribution> witnesses;
  std::string reason;
  std::optional<Profile> target;  // Set when a specific profile was asked.
};

struct CertifyOutcome {
  std::optional<UniquenessCertificate> certificate;
  std::optional<Refutation> refutation;

  bool certified() const { return certificate.has_value(); }
};

// Decides whether the IRCP polytope is a single point. The candidate is the
// product of pure maximin actions; the enforcement weights come from the
// minimizer of BuildEnforcementWeightGame.
CertifyOutcome CertifyUniqueIrcp(const Game& game);

// Decides whether the CCE polytope is a single pure profile, by certifying
// the unique IRCP of the stick-to-target reduced game at each strict pure
// equilibrium. With `target`, only that profile is tried.
CertifyOutcome CertifyUniquePureCce(
    const Game& game, const std::optional<Profile>& target = std::nullopt);

// Turns a certificate at some other profile into a refutation of `target`.
CertifyOutcome RestrictToTarget(const Game& game, CertifyOutcome outcome,
                                const Profile& target);

// Local potential sum_i gamma_i (u_i(a) - u_i(a*_i, a_{-i})) at profile k.
Rational LocalPotential(const Game& game, const Profile& a_star,
                        const RationalVector& gamma, int profile_index);

// Checks the supplied weights directly: certificate iff the local potential
// is negative at every other profile. Nullopt otherwise.
std::optional<UniquenessCertificate> CertifyCceWithWeights(
    const Game& game, const Profile& a_star, const RationalVector& gamma);

// The certificate's own consistency: recomputes the transformed game from
// gamma and checks enforcement and slack. Used by tests and the verifier.
bool VerifyCertificate(const Game& game, const UniquenessCertificate& cert);

enum class CceVariant { kUniquePure, kUniqueMixed2x2, kNotUnique };
std::string ToString(CceVariant variant);

struct CceClassification {
  CceVariant variant = CceVariant::kNotUnique;
  std::optional<UniquenessCertificate> certificate;  // kUniquePure
  std::pair<int, int> mixing_players{-1, -1};        // kUniqueMixed2x2
  std::optional<Game> subgame;                       // kUniqueMixed2x2
  std::optional<JointDistribution> equilibrium;      // both unique variants
  std::optional<Refutation> refutation;              // kNotUnique
};

// Throws std::logic_error if a unique CCE is neither pure nor a quasi-strict
// 2x2 matching-pennies-type mixture.
CceClassification ClassifyUniqueCce(const Game& game);

// Throws std::invalid_argument for a non-product distribution.
bool IsQuasiStrict(const Game& game, const JointDistribution& nu);

struct QuasiStrictnessWitness {
  RationalVector eta;                 // Weight on each player's constraints.
  std::vector<RationalVector> sigma;  // Per-player conditional weights.
};

// Factors the strict-complementary minimizer of BuildDeviationGame as
// eta(i) * sigma_i(a_i) and checks that the product of the sigma_i is mu.
// Throws std::runtime_error if some eta(i) is zero or the product differs.
QuasiStrictnessWitness QuasiStrictnessCertificate(const Game& game,
                                                  const JointDistribution& mu);

// Some relabeling of the two actions of each player makes the game cycle
// strictly like matching pennies.
bool IsMatchingPenniesType(const Game& game);

// prod k_i <= 1 + sum k_i. Throws std::invalid_argument if some k_i < 2.
bool CombinatoricsBound(const std::vector<int>& k);

struct ExtremeNeClassification {
  bool predicted = false;  // Pure, or exactly two players mix over two each.
  bool measured = false;   // Rank test in the CCE polytope.
};

// Throws std::invalid_argument unless nu is a quasi-strict equilibrium.
ExtremeNeClassification ClassifyExtremeNe(const Game& game,
                                          const JointDistribution& nu);

enum class HullComparison { kEqual, kProperSubset, kInconclusive };
std::string ToString(HullComparison comparison);

struct HullResult {
  HullComparison comparison = HullComparison::kInconclusive;
  std::optional<JointDistribution> witness;  // IRCP vertex outside the hull.
};

// Compares the convex hull of the listed equilibria with the IRCP polytope.
// Throws std::invalid_argument if a listed distribution is not an
// equilibrium.
HullResult ConvNeVsIrcp(const Game& game,
                        const std::vector<JointDistribution>& equilibria);

}  // namespace eqcert

#endif  // EQCERT_CERTIFY_H_
