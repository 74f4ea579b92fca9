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

#include "eqcert/vertex_enumeration.h"

#include <set>
#include <stdexcept>

namespace eqcert {

namespace {

// Rows kept reduced against one another, each with a unit pivot.
struct Echelon {
  std::vector<RationalVector> rows;  // augmented with rhs as last entry
  std::vector<int> pivots;

  // Reduces `row` against the basis. Returns false (leaving the basis
  // untouched) when it is dependent on the current rows.
  bool Add(RationalVector row, int dimension) {
    for (size_t k = 0; k < rows.size(); ++k) {
      const Rational f = row[pivots[k]];
      if (sgn(f) == 0) continue;
      for (int c = 0; c <= dimension; ++c) {
        if (sgn(rows[k][c]) != 0) row[c] -= f * rows[k][c];
      }
    }
    int pivot = -1;
    for (int c = 0; c < dimension; ++c) {
      if (sgn(row[c]) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) return false;
    Rational inv = 1 / row[pivot];
    for (Rational& x : row) x *= inv;
    rows.push_back(std::move(row));
    pivots.push_back(pivot);
    return true;
  }

  void Pop() {
    rows.pop_back();
    pivots.pop_back();
  }
};

struct Search {
  const std::vector<LinearConstraint>* constraints;
  std::vector<RationalVector> inequalities;  // augmented
  int dimension;
  std::set<RationalVector> found;

  void Leaf(const Echelon& e) {
    std::vector<RationalVector> a;
    RationalVector b;
    for (const RationalVector& row : e.rows) {
      a.emplace_back(row.begin(), row.begin() + dimension);
      b.push_back(row[dimension]);
    }
    auto x = SolveSquareSystem(std::move(a), std::move(b));
    if (!x) return;
    for (const LinearConstraint& c : *constraints) {
      if (!c.SatisfiedBy(*x)) return;
    }
    found.insert(std::move(*x));
  }

  void Recurse(Echelon& e, size_t next) {
    if (static_cast<int>(e.rows.size()) == dimension) {
      Leaf(e);
      return;
    }
    size_t needed = dimension - e.rows.size();
    for (size_t i = next; i + needed <= inequalities.size(); ++i) {
      if (!e.Add(inequalities[i], dimension)) continue;
      Recurse(e, i + 1);
      e.Pop();
    }
  }
};

RationalVector Augmented(const LinearConstraint& c) {
  RationalVector row = c.coefficients;
  row.push_back(c.rhs);
  return row;
}

void CheckBounded(const std::vector<LinearConstraint>& constraints,
                  int dimension, bool* empty) {
  *empty = false;
  for (int j = 0; j < dimension; ++j) {
    for (Sense sense : {Sense::kMaximize, Sense::kMinimize}) {
      LinearProgram lp(dimension);
      for (int v = 0; v < dimension; ++v) lp.SetFree(v);
      for (const LinearConstraint& c : constraints) lp.AddConstraint(c);
      RationalVector obj(dimension, Rational(0));
      obj[j] = 1;
      lp.SetObjective(std::move(obj), sense);
      LpOutcome out = Solve(lp);
      if (out.status == LpStatus::kInfeasible) {
        *empty = true;
        return;
      }
      if (out.status == LpStatus::kUnbounded) {
        throw std::invalid_argument("vertex enumeration on unbounded region");
      }
    }
  }
}

}  // namespace

std::vector<RationalVector> EnumerateVertices(
    const std::vector<LinearConstraint>& constraints, int dimension) {
  if (dimension > kMaxVertexDimension) {
    throw std::invalid_argument("vertex enumeration limited to dimension " +
                                std::to_string(kMaxVertexDimension));
  }
  for (const LinearConstraint& c : constraints) {
    if (static_cast<int>(c.coefficients.size()) != dimension) {
      throw std::invalid_argument("constraint has wrong dimension");
    }
  }
  bool empty = false;
  CheckBounded(constraints, dimension, &empty);
  if (empty) return {};

  Search search;
  search.constraints = &constraints;
  search.dimension = dimension;
  Echelon e;
  for (const LinearConstraint& c : constraints) {
    if (c.relation == Relation::kEqual) {
      e.Add(Augmented(c), dimension);
    } else {
      RationalVector row = Augmented(c);
      search.inequalities.push_back(std::move(row));
    }
  }
  search.Recurse(e, 0);
  return {search.found.begin(), search.found.end()};
}

}  // namespace eqcert
