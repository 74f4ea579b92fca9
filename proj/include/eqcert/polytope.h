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

#ifndef EQCERT_POLYTOPE_H_
#define EQCERT_POLYTOPE_H_

#include <string>
#include <utility>
#include <vector>

#include "eqcert/game.h"
#include "eqcert/linear_program.h"

namespace eqcert {

enum class Concept { kCE, kCCE, kIRCP };

std::string ToString(Concept kind);
// Accepts "ce", "cce", "ircp" (case-insensitive).
Concept ParseConcept(const std::string& text);

// One incentive row: coefficients . mu >= rhs.
//   CCE:  player, deviation = a'_i, action = -1.
//   CE:   player, action = recommended a_i, deviation = a'_i.
//   IRCP: player, action = deviation = -1, rhs = maximin level.
struct IncentiveRow {
  RationalVector coefficients;
  Rational rhs;
  int player = 0;
  int action = -1;
  int deviation = -1;
};

struct PolytopeSpec {
  Game game;
  Concept kind;
  std::vector<IncentiveRow> rows;
  RationalVector guarantee_levels;  // Maximin levels; filled for IRCP only.

  int dimension() const { return game.num_profiles(); }
  // Incentive rows plus nonnegativity and the sum-to-one row.
  std::vector<LinearConstraint> Constraints() const;
  // Feasibility LP over profile probabilities with a zero objective.
  LinearProgram MakeLp() const;
};

PolytopeSpec BuildPolytope(const Game& game, Concept kind);

struct Violation {
  int row = 0;
  int player = 0;
  int action = -1;
  int deviation = -1;
  Rational slack;  // Negative.
};

struct MembershipResult {
  bool member = true;
  std::vector<Violation> violations;
};

MembershipResult CheckMembership(const PolytopeSpec& spec,
                                 const JointDistribution& mu);
bool IsMember(const PolytopeSpec& spec, const JointDistribution& mu);

// Exact min and max of mu(profile) over the polytope.
std::pair<Rational, Rational> CoordinateBounds(const PolytopeSpec& spec,
                                               int profile_index);

struct SingletonResult {
  bool singleton = false;
  // For a singleton, `point` is the unique member. Otherwise `point` and
  // `other` are two distinct members.
  JointDistribution point;
  JointDistribution other;
};

// Finds one basic member, then maximizes each coordinate. The polytope is a
// singleton exactly when no coordinate can exceed its value at that member,
// because all members sum to one.
SingletonResult TestSingleton(const PolytopeSpec& spec);

// Rank test on the active rows at mu. Throws std::invalid_argument when mu is
// not a member.
bool IsExtremePoint(const PolytopeSpec& spec, const JointDistribution& mu);

struct SupportBound {
  int support_size = 0;
  int active_count = 0;  // Rank of the binding incentive rows.
  bool holds = false;    // support_size <= active_count + 1
};

// Throws std::invalid_argument unless mu is an extreme point.
SupportBound WinklerSupportBound(const PolytopeSpec& spec,
                                 const JointDistribution& mu);

// Every vertex of the polytope. Small games only: throws
// std::invalid_argument above kMaxVertexDimension profiles.
std::vector<JointDistribution> PolytopeVertices(const PolytopeSpec& spec);

struct PureEquilibrium {
  Profile profile;
  int index = 0;
  bool strict = false;
};

std::vector<PureEquilibrium> EnumeratePureNe(const Game& game);

// True when mu is a product distribution from which no player gains by a
// unilateral deviation.
bool IsNashEquilibrium(const Game& game, const JointDistribution& mu);

struct TwoByTwoEquilibria {
  // A payoff tie makes some player indifferent between their two actions
  // against a pure opponent action; the list may then be incomplete.
  bool degenerate = false;
  std::vector<JointDistribution> equilibria;  // Pure ones first.
};

// Throws std::invalid_argument unless the game is 2x2.
TwoByTwoEquilibria MixedNe2x2(const Game& game);

}  // namespace eqcert

#endif  // EQCERT_POLYTOPE_H_
