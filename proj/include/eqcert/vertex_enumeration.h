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

#ifndef EQCERT_VERTEX_ENUMERATION_H_
#define EQCERT_VERTEX_ENUMERATION_H_

#include <vector>

#include "eqcert/linear_program.h"

namespace eqcert {

inline constexpr int kMaxVertexDimension = 12;

// All vertices of the polyhedron {x in Q^dimension : constraints}, found by
// enumerating sets of linearly independent tight rows. Bounds such as x >= 0
// must be passed as rows. Result is duplicate-free and sorted
// lexicographically; empty when the region is empty.
//
// Throws std::invalid_argument if dimension > kMaxVertexDimension or the
// region is unbounded. Meant as a small-scale oracle, exponential in general.
std::vector<RationalVector> EnumerateVertices(
    const std::vector<LinearConstraint>& constraints, int dimension);

}  // namespace eqcert

#endif  // EQCERT_VERTEX_ENUMERATION_H_
