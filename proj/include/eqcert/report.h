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

#ifndef EQCERT_REPORT_H_
#define EQCERT_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "eqcert/certify.h"
#include "eqcert/dynamics.h"
#include "eqcert/game_io.h"
#include "eqcert/polytope.h"

namespace eqcert {

Json ProfileToJson(const Profile& profile);
Profile ProfileFromJson(const Json& j);

// {"concept", "a_star", "gamma", "slack", "transformed_game"}
Json CertificateToJson(const UniquenessCertificate& cert);
UniquenessCertificate CertificateFromJson(const Json& j);

// {"concept", "kind", "witnesses", "reason", "target"?}
Json RefutationToJson(const Refutation& refutation);
Refutation RefutationFromJson(const Json& j, int num_profiles);

// {"result": "certificate"|"refutation", ...}
Json OutcomeToJson(const CertifyOutcome& outcome);

// Checks the witnesses against the polytope. On failure, `why` (if given)
// receives a short explanation.
bool VerifyRefutation(const Game& game, const Refutation& refutation,
                      std::string* why = nullptr);

struct AnalyzeOptions {
  bool include_ne = true;
  std::vector<Concept> concepts = {Concept::kCE, Concept::kCCE,
                                   Concept::kIRCP};
  bool check_unique = true;  // Certificates, CCE classification, GUE flags.
};

Json Analyze(const Game& game, const AnalyzeOptions& options);

// {"kind": "certify", "game", "concept", "target"?, "outcome"}
Json CertifyReport(const Game& game, Concept kind, const CertifyOutcome& outcome,
                   const std::optional<Profile>& target);

Json SimulationReport(const Game& game, const DynamicsRun& run,
                      const std::optional<Profile>& target);

struct VerifyResult {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Re-checks every embedded claim of an analysis, certify, contest or
// simulation report from the report alone.
VerifyResult VerifyReport(const Json& report);

}  // namespace eqcert

#endif  // EQCERT_REPORT_H_
