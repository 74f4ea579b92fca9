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

#ifndef EQCERT_RATIONAL_H_
#define EQCERT_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqcert {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational MakeRational(long num, long den = 1);

// Accepts "p/q", integers and finite decimals ("-0.25", "3.", ".5").
// Decimals are converted exactly. Throws std::invalid_argument otherwise.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" when the denominator
// is one.
std::string ToString(const Rational& value);

// Lossy; only for reporting and for the floating-point learning dynamics.
double ToDouble(const Rational& value);

// Exact base^exponent when the result is rational, e.g. (9/4)^(3/2) = 27/8.
// Requires base > 0. Returns nullopt when the root is irrational.
std::optional<Rational> ExactPow(const Rational& base, const Rational& exponent);

Rational Abs(const Rational& value);

// Sum of all entries.
Rational Sum(const RationalVector& values);

std::string Join(const RationalVector& values, std::string_view sep = ", ");

}  // namespace eqcert

#endif  // EQCERT_RATIONAL_H_
