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

#include "eqcert/game.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqcert {

Game::Game(std::vector<std::vector<std::string>> action_labels,
           std::vector<RationalVector> payoffs, std::string name)
    : action_labels_(std::move(action_labels)),
      payoffs_(std::move(payoffs)),
      name_(std::move(name)) {
  const int n = num_players();
  if (n < 1) throw std::invalid_argument("game needs at least one player");
  strides_.assign(n, 1);
  num_profiles_ = 1;
  for (int i = n - 1; i >= 0; --i) {
    if (action_labels_[i].size() < 2) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has fewer than two actions");
    }
    strides_[i] = num_profiles_;
    num_profiles_ *= num_actions(i);
  }
  if (static_cast<int>(payoffs_.size()) != n) {
    throw std::invalid_argument("payoff table has " +
                                std::to_string(payoffs_.size()) +
                                " rows, expected " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(payoffs_[i].size()) != num_profiles_) {
      throw std::invalid_argument(
          "player " + std::to_string(i) + " has " +
          std::to_string(payoffs_[i].size()) + " payoffs, expected " +
          std::to_string(num_profiles_));
    }
  }
}

std::vector<int> Game::shape() const {
  std::vector<int> s;
  for (int i = 0; i < num_players(); ++i) s.push_back(num_actions(i));
  return s;
}

int Game::ProfileIndex(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != num_players()) {
    throw std::out_of_range("profile has wrong length");
  }
  int index = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (profile[i] < 0 || profile[i] >= num_actions(i)) {
      throw std::out_of_range("action " + std::to_string(profile[i]) +
                              " out of range for player " + std::to_string(i));
    }
    index += profile[i] * strides_[i];
  }
  return index;
}

Profile Game::ProfileFromIndex(int index) const {
  if (index < 0 || index >= num_profiles_) {
    throw std::out_of_range("profile index " + std::to_string(index) +
                            " out of range");
  }
  Profile p(num_players());
  for (int i = 0; i < num_players(); ++i) p[i] = ActionAt(index, i);
  return p;
}

int Game::OpponentIndex(int profile_index, int player) const {
  int index = 0;
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    index = index * num_actions(j) + ActionAt(profile_index, j);
  }
  return index;
}

int Game::Combine(int player, int action, int opponent_index) const {
  int index = 0;
  for (int j = num_players() - 1; j >= 0; --j) {
    int a;
    if (j == player) {
      a = action;
    } else {
      a = opponent_index % num_actions(j);
      opponent_index /= num_actions(j);
    }
    index += a * strides_[j];
  }
  return index;
}

std::string Game::ProfileLabel(int profile_index) const {
  std::string out = "(";
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) out += ", ";
    out += action_labels_[i][ActionAt(profile_index, i)];
  }
  return out + ")";
}

bool Game::operator==(const Game& other) const {
  return action_labels_ == other.action_labels_ &&
         payoffs_ == other.payoffs_ && name_ == other.name_;
}

std::vector<int> MixedAction::Support() const {
  std::vector<int> s;
  for (int a = 0; a < static_cast<int>(weights.size()); ++a) {
    if (sgn(weights[a]) > 0) s.push_back(a);
  }
  return s;
}

JointDistribution::JointDistribution(RationalVector probabilities)
    : probabilities_(std::move(probabilities)) {
  Rational total = 0;
  for (const Rational& p : probabilities_) {
    if (sgn(p) < 0) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (total != 1) {
    throw std::invalid_argument("probabilities sum to " + ToString(total));
  }
}

JointDistribution JointDistribution::PointMass(int num_profiles, int index) {
  RationalVector p(num_profiles, Rational(0));
  p.at(index) = 1;
  return JointDistribution(std::move(p));
}

JointDistribution JointDistribution::Uniform(int num_profiles) {
  return JointDistribution(
      RationalVector(num_profiles, MakeRational(1, num_profiles)));
}

JointDistribution JointDistribution::Product(
    const Game& game, const std::vector<RationalVector>& marginals) {
  if (static_cast<int>(marginals.size()) != game.num_players()) {
    throw std::invalid_argument("need one marginal per player");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(marginals[i].size()) != game.num_actions(i)) {
      throw std::invalid_argument("marginal has wrong size");
    }
  }
  RationalVector p(game.num_profiles());
  for (int k = 0; k < game.num_profiles(); ++k) {
    Rational w = 1;
    for (int i = 0; i < game.num_players() && sgn(w) != 0; ++i) {
      w *= marginals[i][game.ActionAt(k, i)];
    }
    p[k] = w;
  }
  return JointDistribution(std::move(p));
}

JointDistribution JointDistribution::UniformOver(
    int num_profiles, const std::vector<int>& indices) {
  RationalVector p(num_profiles, Rational(0));
  Rational w(1, static_cast<long>(indices.size()));
  for (int k : indices) p.at(k) += w;
  return JointDistribution(std::move(p));
}

std::vector<int> JointDistribution::Support() const {
  std::vector<int> s;
  for (int k = 0; k < size(); ++k) {
    if (sgn(probabilities_[k]) > 0) s.push_back(k);
  }
  return s;
}

std::optional<int> JointDistribution::PointMassIndex() const {
  for (int k = 0; k < size(); ++k) {
    if (probabilities_[k] == 1) return k;
  }
  return std::nullopt;
}

JointDistribution Mix(const JointDistribution& a, const JointDistribution& b,
                      const Rational& weight) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  if (sgn(weight) < 0 || weight > 1) {
    throw std::invalid_argument("mixing weight outside [0, 1]");
  }
  RationalVector p(a.size());
  for (int k = 0; k < a.size(); ++k) {
    p[k] = (1 - weight) * a[k] + weight * b[k];
  }
  return JointDistribution(std::move(p));
}

RationalVector Marginal(const Game& game, const JointDistribution& mu,
                        int player) {
  RationalVector m(game.num_actions(player), Rational(0));
  for (int k = 0; k < mu.size(); ++k) m[game.ActionAt(k, player)] += mu[k];
  return m;
}

std::optional<std::vector<RationalVector>> ProductFactors(
    const Game& game, const JointDistribution& mu) {
  std::vector<RationalVector> marginals;
  for (int i = 0; i < game.num_players(); ++i) {
    marginals.push_back(Marginal(game, mu, i));
  }
  for (int k = 0; k < mu.size(); ++k) {
    Rational w = 1;
    for (int i = 0; i < game.num_players(); ++i) {
      w *= marginals[i][game.ActionAt(k, i)];
    }
    if (w != mu[k]) return std::nullopt;
  }
  return marginals;
}

Rational ExpectedPayoff(const Game& game, const JointDistribution& mu,
                        int player) {
  Rational total = 0;
  for (int k = 0; k < mu.size(); ++k) {
    if (sgn(mu[k]) != 0) total += mu[k] * game.payoff(player, k);
  }
  return total;
}

Rational DeviationPayoff(const Game& game, const JointDistribution& mu,
                         int player, int action) {
  Rational total = 0;
  for (int k = 0; k < mu.size(); ++k) {
    if (sgn(mu[k]) != 0) {
      total += mu[k] * game.payoff(player, game.Deviate(k, player, action));
    }
  }
  return total;
}

Rational TotalVariation(const JointDistribution& a,
                        const JointDistribution& b) {
  Rational total = 0;
  for (int k = 0; k < a.size(); ++k) total += abs(a[k] - b[k]);
  return total / 2;
}

bool IsSymmetric(const Game& game) {
  const int n = game.num_players();
  for (int i = 1; i < n; ++i) {
    if (game.num_actions(i) != game.num_actions(0)) return false;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int k = 0; k < game.num_profiles(); ++k) {
      Profile a = game.ProfileFromIndex(k);
      Profile b(n);
      for (int j = 0; j < n; ++j) b[perm[j]] = a[j];
      int kb = game.ProfileIndex(b);
      for (int i = 0; i < n; ++i) {
        if (game.payoff(perm[i], kb) != game.payoff(i, k)) return false;
      }
    }
  }
  return true;
}

namespace {

void CheckGamma(const Game& game, const RationalVector& gamma) {
  if (static_cast<int>(gamma.size()) != game.num_players()) {
    throw std::invalid_argument("need one gamma per player");
  }
  for (const Rational& g : gamma) {
    if (sgn(g) <= 0) {
      throw std::invalid_argument("gamma must be positive, got " +
                                  ToString(g));
    }
  }
}

}  // namespace

Game AffineTransform(const Game& game, const RationalVector& gamma,
                     const RationalVector& beta) {
  CheckGamma(game, gamma);
  if (static_cast<int>(beta.size()) != game.num_players()) {
    throw std::invalid_argument("need one beta per player");
  }
  std::vector<RationalVector> v = game.payoff_table();
  for (int i = 0; i < game.num_players(); ++i) {
    for (Rational& x : v[i]) x = gamma[i] * (x + beta[i]);
  }
  return Game(game.action_labels(), std::move(v), game.name());
}

Game StrategicTransform(const Game& game, const RationalVector& gamma,
                        const std::vector<RationalVector>& beta) {
  CheckGamma(game, gamma);
  if (static_cast<int>(beta.size()) != game.num_players()) {
    throw std::invalid_argument("need one beta function per player");
  }
  std::vector<RationalVector> v = game.payoff_table();
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(beta[i].size()) != game.NumOpponentProfiles(i)) {
      throw std::invalid_argument("beta for player " + std::to_string(i) +
                                  " must cover every opponent profile");
    }
    for (int k = 0; k < game.num_profiles(); ++k) {
      v[i][k] = gamma[i] * (v[i][k] + beta[i][game.OpponentIndex(k, i)]);
    }
  }
  return Game(game.action_labels(), std::move(v), game.name());
}

std::vector<RationalVector> StickToTargetShift(const Game& game,
                                               const Profile& a_star) {
  std::vector<RationalVector> beta(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    beta[i].resize(game.NumOpponentProfiles(i));
    for (int o = 0; o < game.NumOpponentProfiles(i); ++o) {
      beta[i][o] = -game.payoff(i, game.Combine(i, a_star.at(i), o));
    }
  }
  return beta;
}

Game ReducedGame(const Game& game, const Profile& a_star) {
  return StrategicTransform(game, RationalVector(game.num_players(), 1),
                            StickToTargetShift(game, a_star));
}

}  // namespace eqcert
