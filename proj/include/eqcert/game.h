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

#ifndef EQCERT_GAME_H_
#define EQCERT_GAME_H_

#include <optional>
#include <string>
#include <vector>

#include "eqcert/rational.h"

namespace eqcert {

// One action index per player.
using Profile = std::vector<int>;

// Finite normal-form game with exact rational payoffs. Profiles are laid out
// lexicographically with player 0 varying slowest.
class Game {
 public:
  // payoffs[i][k] is player i's payoff at ProfileFromIndex(k). Throws
  // std::invalid_argument on shape errors or if some player has fewer than
  // two actions.
  Game(std::vector<std::vector<std::string>> action_labels,
       std::vector<RationalVector> payoffs, std::string name = "");

  int num_players() const { return static_cast<int>(action_labels_.size()); }
  int num_actions(int player) const {
    return static_cast<int>(action_labels_[player].size());
  }
  int num_profiles() const { return num_profiles_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<std::string>>& action_labels() const {
    return action_labels_;
  }
  const std::vector<std::string>& action_labels(int player) const {
    return action_labels_[player];
  }
  std::vector<int> shape() const;

  const Rational& payoff(int player, int profile_index) const {
    return payoffs_[player][profile_index];
  }
  const Rational& payoff(int player, const Profile& profile) const {
    return payoffs_[player][ProfileIndex(profile)];
  }
  const RationalVector& payoffs(int player) const { return payoffs_[player]; }
  const std::vector<RationalVector>& payoff_table() const { return payoffs_; }

  // Throws std::out_of_range for invalid profiles or indices.
  int ProfileIndex(const Profile& profile) const;
  Profile ProfileFromIndex(int index) const;

  // Action of `player` in the profile with the given index.
  int ActionAt(int profile_index, int player) const {
    return (profile_index / strides_[player]) % num_actions(player);
  }
  // Index of the profile obtained by replacing `player`'s action.
  int Deviate(int profile_index, int player, int action) const {
    return profile_index +
           (action - ActionAt(profile_index, player)) * strides_[player];
  }

  // Opponent profiles a_{-i}, enumerated lexicographically over the other
  // players in increasing player order.
  int NumOpponentProfiles(int player) const {
    return num_profiles_ / num_actions(player);
  }
  int OpponentIndex(int profile_index, int player) const;
  // Full profile index combining a_{-i} (by opponent index) with action a_i.
  int Combine(int player, int action, int opponent_index) const;

  // "p1: a, p2: b" style label.
  std::string ProfileLabel(int profile_index) const;

  bool operator==(const Game& other) const;

 private:
  std::vector<std::vector<std::string>> action_labels_;
  std::vector<RationalVector> payoffs_;
  std::string name_;
  std::vector<int> strides_;
  int num_profiles_ = 0;
};

// Probability distribution over a player's actions.
struct MixedAction {
  int player = 0;
  RationalVector weights;

  std::vector<int> Support() const;
  bool IsPure() const { return Support().size() == 1; }
};

// Exact distribution over the profiles of a game, stored densely by profile
// index.
class JointDistribution {
 public:
  JointDistribution() = default;
  // Throws std::invalid_argument unless entries are >= 0 and sum to one.
  explicit JointDistribution(RationalVector probabilities);

  static JointDistribution PointMass(int num_profiles, int index);
  static JointDistribution Uniform(int num_profiles);
  // Independent product of per-player marginals.
  static JointDistribution Product(const Game& game,
                                   const std::vector<RationalVector>& marginals);
  // Uniform over the listed profile indices.
  static JointDistribution UniformOver(int num_profiles,
                                       const std::vector<int>& indices);

  int size() const { return static_cast<int>(probabilities_.size()); }
  const Rational& operator[](int index) const { return probabilities_[index]; }
  const RationalVector& probabilities() const { return probabilities_; }

  std::vector<int> Support() const;
  std::optional<int> PointMassIndex() const;
  bool IsPointMass() const { return PointMassIndex().has_value(); }

  bool operator==(const JointDistribution& other) const {
    return probabilities_ == other.probabilities_;
  }

 private:
  RationalVector probabilities_;
};

// (1 - weight) * a + weight * b.
JointDistribution Mix(const JointDistribution& a, const JointDistribution& b,
                      const Rational& weight);

RationalVector Marginal(const Game& game, const JointDistribution& mu,
                        int player);

// Returns the marginals when mu is exactly their product, nullopt otherwise.
std::optional<std::vector<RationalVector>> ProductFactors(
    const Game& game, const JointDistribution& mu);

// Sum_a mu(a) u_i(a).
Rational ExpectedPayoff(const Game& game, const JointDistribution& mu,
                        int player);
// Sum_a mu(a) u_i(action, a_{-i}).
Rational DeviationPayoff(const Game& game, const JointDistribution& mu,
                         int player, int action);

// Total variation distance.
Rational TotalVariation(const JointDistribution& a, const JointDistribution& b);

// Full role-permutation invariance with identical action counts.
bool IsSymmetric(const Game& game);

// v_i(a) = gamma_i (u_i(a) + beta_i). Throws on gamma_i <= 0.
Game AffineTransform(const Game& game, const RationalVector& gamma,
                     const RationalVector& beta);

// v_i(a) = gamma_i (u_i(a) + beta_i(a_{-i})), with beta[i] indexed by
// Game::OpponentIndex. Throws on gamma_i <= 0 or wrong beta sizes.
Game StrategicTransform(const Game& game, const RationalVector& gamma,
                        const std::vector<RationalVector>& beta);

// beta_i(a_{-i}) = -u_i(a*_i, a_{-i}): the shift that zeroes every player's
// payoff from sticking to a*_i.
std::vector<RationalVector> StickToTargetShift(const Game& game,
                                               const Profile& a_star);

// u'_i(a) = u_i(a) - u_i(a*_i, a_{-i}).
Game ReducedGame(const Game& game, const Profile& a_star);

}  // namespace eqcert

#endif  // EQCERT_GAME_H_
