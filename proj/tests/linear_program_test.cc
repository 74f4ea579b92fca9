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

#include "eqcert/linear_program.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "eqcert/generators.h"
#include "eqcert/polytope.h"
#include "eqcert/vertex_enumeration.h"
#include "test_util.h"

namespace eqcert {
namespace {

using testing::R;

TEST(LinearProgramTest, SmallOptima) {
  LinearProgram a(1);
  a.AddConstraint({1}, Relation::kLessEqual, 3);
  a.SetObjective({1}, Sense::kMaximize);
  LpOutcome out = Solve(a);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, 3);

  LinearProgram b(2);
  b.AddConstraint({1, 1}, Relation::kLessEqual, 1);
  b.SetObjective({1, 1}, Sense::kMaximize);
  EXPECT_EQ(Solve(b).value, 1);

  LinearProgram c(1);
  c.SetObjective({1}, Sense::kMaximize);
  EXPECT_EQ(Solve(c).status, LpStatus::kUnbounded);

  LinearProgram d(1);
  d.AddConstraint({1}, Relation::kGreaterEqual, 2);
  d.AddConstraint({1}, Relation::kLessEqual, 1);
  d.SetObjective({1}, Sense::kMinimize);
  EXPECT_EQ(Solve(d).status, LpStatus::kInfeasible);
}

TEST(LinearProgramTest, BoundsFreeVariablesAndEqualities) {
  LinearProgram lp(3);
  lp.SetFree(0);
  lp.SetBounds(1, R("-2"), R("5/2"));
  lp.SetBounds(2, std::nullopt, R("1"));
  lp.AddConstraint({1, 1, 1}, Relation::kEqual, R("1/3"));
  lp.AddConstraint({1, -1, 0}, Relation::kGreaterEqual, -4);
  lp.SetObjective({-1, 0, 2}, Sense::kMaximize);
  LpOutcome out = Solve(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_TRUE(lp.IsFeasible(out.point));
  EXPECT_EQ(lp.ObjectiveValue(out.point), out.value);
  // x2 at its cap of 1, x1 = 5/3 where x0 - x1 >= -4 binds.
  EXPECT_EQ(out.value, R("13/3"));
}

TEST(LinearProgramTest, RedundantEqualities) {
  LinearProgram lp(2);
  lp.AddConstraint({1, 1}, Relation::kEqual, 1);
  lp.AddConstraint({2, 2}, Relation::kEqual, 2);
  lp.SetObjective({1, 0}, Sense::kMaximize);
  LpOutcome out = Solve(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, 1);
}

TEST(LinearProgramTest, RankAndSquareSystems) {
  EXPECT_EQ(Rank({{1, 2}, {2, 4}, {0, 0}}), 1);
  EXPECT_EQ(Rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}), 2);
  auto x = SolveSquareSystem({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], R("4/5"));
  EXPECT_EQ((*x)[1], R("7/5"));
  EXPECT_FALSE(SolveSquareSystem({{1, 2}, {2, 4}}, {1, 1}).has_value());
}

std::vector<LinearConstraint> Box(int dim) {
  std::vector<LinearConstraint> rows;
  for (int k = 0; k < dim; ++k) {
    RationalVector e(dim, Rational(0));
    e[k] = 1;
    rows.push_back({e, Relation::kGreaterEqual, 0});
    rows.push_back({e, Relation::kLessEqual, 1});
  }
  return rows;
}

TEST(VertexEnumerationTest, SimplexAndSquare) {
  std::vector<LinearConstraint> simplex = {
      {{1, 0, 0}, Relation::kGreaterEqual, 0},
      {{0, 1, 0}, Relation::kGreaterEqual, 0},
      {{0, 0, 1}, Relation::kGreaterEqual, 0},
      {{1, 1, 1}, Relation::kEqual, 1}};
  auto v = EnumerateVertices(simplex, 3);
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(EnumerateVertices(Box(2), 2).size(), 4u);
}

TEST(VertexEnumerationTest, MatchingPenniesCoarsePolytope) {
  PolytopeSpec spec = BuildPolytope(MatchingPennies(), Concept::kCCE);
  auto v = EnumerateVertices(spec.Constraints(), 4);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], RationalVector(4, R("1/4")));
}

TEST(VertexEnumerationTest, RejectsUnboundedAndLarge) {
  std::vector<LinearConstraint> half = {{{1, 0}, Relation::kGreaterEqual, 0}};
  EXPECT_THROW(EnumerateVertices(half, 2), std::invalid_argument);
  EXPECT_THROW(EnumerateVertices(Box(13), 13), std::invalid_argument);
  std::vector<LinearConstraint> empty = Box(2);
  empty.push_back({{1, 1}, Relation::kGreaterEqual, 3});
  EXPECT_TRUE(EnumerateVertices(empty, 2).empty());
}

// Random bounded LPs: the simplex optimum equals the best enumerated vertex.
TEST(LinearProgramTest, OptimumMatchesVertexOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> dim_dist(2, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = dim_dist(rng);
    std::vector<LinearConstraint> rows = Box(dim);
    for (int r = 0; r < 3; ++r) {
      RationalVector c(dim);
      for (Rational& x : c) x = coef(rng);
      rows.push_back({c, Relation::kLessEqual, MakeRational(coef(rng) + 4, 2)});
    }
    RationalVector obj(dim);
    for (Rational& x : obj) x = coef(rng);
    LinearProgram lp(dim);
    for (const LinearConstraint& row : rows) lp.AddConstraint(row);
    lp.SetObjective(obj, trial % 2 ? Sense::kMaximize : Sense::kMinimize);
    LpOutcome out = Solve(lp);
    auto vertices = EnumerateVertices(rows, dim);
    if (vertices.empty()) {
      EXPECT_EQ(out.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(out.status, LpStatus::kOptimal);
    EXPECT_TRUE(lp.IsFeasible(out.point));
    std::vector<Rational> values;
    for (const RationalVector& v : vertices) values.push_back(lp.ObjectiveValue(v));
    const Rational best = trial % 2
                              ? *std::max_element(values.begin(), values.end())
                              : *std::min_element(values.begin(), values.end());
    EXPECT_EQ(out.value, best);
    // Basic solutions are vertices.
    EXPECT_NE(std::find(vertices.begin(), vertices.end(), out.point),
              vertices.end());
    // Deterministic.
    EXPECT_EQ(Solve(lp).point, out.point);
  }
}

}  // namespace
}  // namespace eqcert
