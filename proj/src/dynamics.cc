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

#include "eqcert/dynamics.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace eqcert {

std::string ToString(Algorithm algorithm) {
  return algorithm == Algorithm::kExternalMw ? "external_mw" : "internal_rm";
}

Algorithm ParseAlgorithm(const std::string& text) {
  if (text == "external_mw") return Algorithm::kExternalMw;
  if (text == "internal_rm") return Algorithm::kInternalRm;
  throw std::invalid_argument("unknown algorithm '" + text + "'");
}

Rational ExternalRegret(const Game& game, int player,
                        const JointDistribution& mu) {
  const Rational value = ExpectedPayoff(game, mu, player);
  Rational best;
  for (int a = 0; a < game.num_actions(player); ++a) {
    Rational gain = DeviationPayoff(game, mu, player, a) - value;
    if (a == 0 || gain > best) best = gain;
  }
  return best;
}

Rational InternalRegret(const Game& game, int player,
                        const JointDistribution& mu) {
  const int m = game.num_actions(player);
  std::vector<RationalVector> gain(m, RationalVector(m, Rational(0)));
  for (int k = 0; k < game.num_profiles(); ++k) {
    if (sgn(mu[k]) == 0) continue;
    const int j = game.ActionAt(k, player);
    for (int b = 0; b < m; ++b) {
      gain[j][b] += mu[k] * (game.payoff(player, game.Deviate(k, player, b)) -
                             game.payoff(player, k));
    }
  }
  Rational best = 0;  // The j == b entries are zero.
  for (const RationalVector& row : gain) {
    for (const Rational& g : row) best = std::max(best, g);
  }
  return best;
}

Rational PayoffRange(const Game& game) {
  Rational lo = game.payoff(0, 0);
  Rational hi = lo;
  for (const RationalVector& table : game.payoff_table()) {
    for (const Rational& x : table) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  return hi - lo;
}

namespace {

// Uniform double in [0, 1) from 53 random bits; independent of the standard
// library's distribution implementations.
double UnitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int Sample(const std::vector<double>& weights, std::mt19937_64& rng) {
  double total = 0;
  for (double w : weights) total += w;
  double u = UnitDraw(rng) * total;
  for (size_t a = 0; a + 1 < weights.size(); ++a) {
    if (u < weights[a]) return static_cast<int>(a);
    u -= weights[a];
  }
  return static_cast<int>(weights.size()) - 1;
}

// Fixed point q = q P of the chain that moves from j to b at a rate
// proportional to the positive regret of b over j. Uniform when no regret is
// positive.
std::vector<double> SwitchingStationary(
    const std::vector<std::vector<double>>& regret) {
  const int m = static_cast<int>(regret.size());
  double norm = 0;
  for (int j = 0; j < m; ++j) {
    double row = 0;
    for (int b = 0; b < m; ++b) {
      if (b != j) row += std::max(regret[j][b], 0.0);
    }
    norm = std::max(norm, row);
  }
  std::vector<double> q(m, 1.0 / m);
  if (norm <= 0) return q;
  // Rows of q (P - I) = 0 with the last equation replaced by sum q = 1.
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (int j = 0; j < m; ++j) {
    for (int b = 0; b < m; ++b) {
      if (b == j) continue;
      const double rate = std::max(regret[j][b], 0.0) / norm;
      a[b][j] += rate;
      a[j][j] -= rate;
    }
  }
  for (int j = 0; j < m; ++j) a[m - 1][j] = 1.0;
  a[m - 1][m] = 1.0;
  bool singular = false;
  for (int c = 0; c < m && !singular; ++c) {
    int pivot = c;
    for (int r = c + 1; r < m; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    }
    if (std::abs(a[pivot][c]) < 1e-12) {
      singular = true;
      break;
    }
    std::swap(a[c], a[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const double f = a[r][c] / a[c][c];
      for (int x = c; x <= m; ++x) a[r][x] -= f * a[c][x];
    }
  }
  if (!singular) {
    double total = 0;
    for (int j = 0; j < m; ++j) {
      q[j] = std::max(a[j][m] / a[j][j], 0.0);
      total += q[j];
    }
    if (total > 0) {
      for (double& x : q) x /= total;
      return q;
    }
  }
  // Several closed classes: average the lazy chain from uniform.
  std::vector<double> cur(m, 1.0 / m), avg(m, 0.0);
  for (int it = 0; it < 256; ++it) {
    std::vector<double> next(cur);
    for (int j = 0; j < m; ++j) {
      for (int b = 0; b < m; ++b) {
        if (b == j) continue;
        const double flow = 0.5 * cur[j] * std::max(regret[j][b], 0.0) / norm;
        next[j] -= flow;
        next[b] += flow;
      }
    }
    cur = std::move(next);
    for (int j = 0; j < m; ++j) avg[j] += cur[j] / 256;
  }
  return avg;
}

class Learner {
 public:
  Learner(const Game& game, const DynamicsOptions& options)
      : game_(game), options_(options), n_(game.num_players()) {
    const Rational lo_r = [&] {
      Rational lo = game.payoff(0, 0);
      for (const RationalVector& t : game.payoff_table()) {
        for (const Rational& x : t) lo = std::min(lo, x);
      }
      return lo;
    }();
    Rational range = PayoffRange(game);
    if (sgn(range) == 0) range = 1;
    scaled_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      for (const Rational& x : game.payoffs(i)) {
        scaled_[i].push_back(ToDouble((x - lo_r) / range));
      }
    }
    cumulative_.resize(n_);
    regret_.resize(n_);
    played_dist_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      const int m = game.num_actions(i);
      cumulative_[i].assign(m, 0.0);
      regret_[i].assign(m, std::vector<double>(m, 0.0));
      played_dist_[i].assign(m, 1.0 / m);
    }
  }

  // Chooses a profile for step t (1-based) and learns from it.
  int Step(std::int64_t t, std::mt19937_64& rng) {
    Profile profile(n_);
    for (int i = 0; i < n_; ++i) profile[i] = Choose(i, t, rng);
    const int k = game_.ProfileIndex(profile);
    for (int i = 0; i < n_; ++i) Observe(i, k);
    return k;
  }

 private:
  int Choose(int i, std::int64_t t, std::mt19937_64& rng) {
    const int m = game_.num_actions(i);
    std::vector<double> w(m, 1.0);
    if (options_.algorithm == Algorithm::kExternalMw) {
      const double eta = options_.learning_rate / std::sqrt(double(t));
      const double top =
          *std::max_element(cumulative_[i].begin(), cumulative_[i].end());
      for (int a = 0; a < m; ++a) {
        w[a] = std::exp(eta * (cumulative_[i][a] - top));
      }
      return Sample(w, rng);
    }
    played_dist_[i] = SwitchingStationary(regret_[i]);
    return Sample(played_dist_[i], rng);
  }

  void Observe(int i, int k) {
    const int m = game_.num_actions(i);
    for (int b = 0; b < m; ++b) {
      const double value = scaled_[i][game_.Deviate(k, i, b)];
      cumulative_[i][b] += value;
      if (options_.algorithm == Algorithm::kExternalMw) continue;
      // Expected pairwise regret under the distribution actually used.
      for (int j = 0; j < m; ++j) {
        regret_[i][j][b] += played_dist_[i][j] *
                            (value - scaled_[i][game_.Deviate(k, i, j)]);
      }
    }
  }

  const Game& game_;
  const DynamicsOptions& options_;
  const int n_;
  std::vector<std::vector<double>> scaled_;
  std::vector<std::vector<double>> cumulative_;
  std::vector<std::vector<std::vector<double>>> regret_;
  std::vector<std::vector<double>> played_dist_;
};

JointDistribution FromCounts(const std::vector<std::int64_t>& counts,
                             std::int64_t steps) {
  RationalVector p(counts.size());
  for (size_t k = 0; k < counts.size(); ++k) {
    p[k] = Rational(mpz_class(std::to_string(counts[k])),
                    mpz_class(std::to_string(steps)));
    p[k].canonicalize();
  }
  return JointDistribution(std::move(p));
}

Checkpoint Measure(const Game& game, const JointDistribution& mu,
                   std::int64_t step) {
  Checkpoint c;
  c.step = step;
  for (int i = 0; i < game.num_players(); ++i) {
    Rational ext = ExternalRegret(game, i, mu);
    Rational inte = InternalRegret(game, i, mu);
    if (i == 0 || ext > c.max_external_regret) c.max_external_regret = ext;
    if (i == 0 || inte > c.max_internal_regret) c.max_internal_regret = inte;
  }
  return c;
}

}  // namespace

DynamicsRun RunDynamics(const Game& game, const DynamicsOptions& options) {
  if (options.steps < 1) throw std::invalid_argument("steps must be >= 1");
  DynamicsRun run;
  run.options = options;
  run.counts.assign(game.num_profiles(), 0);
  std::mt19937_64 rng(options.seed);
  Learner learner(game, run.options);
  std::int64_t next_checkpoint = 1;
  for (std::int64_t t = 1; t <= options.steps; ++t) {
    ++run.counts[learner.Step(t, rng)];
    if (t == next_checkpoint && t < options.steps) {
      run.trajectory.push_back(Measure(game, FromCounts(run.counts, t), t));
      next_checkpoint *= 2;
    }
  }
  run.empirical = FromCounts(run.counts, options.steps);
  Checkpoint last = Measure(game, run.empirical, options.steps);
  run.trajectory.push_back(last);
  run.max_external_regret = last.max_external_regret;
  run.max_internal_regret = last.max_internal_regret;
  return run;
}

}  // namespace eqcert
