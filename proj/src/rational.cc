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

#include "eqcert/rational.h"

#include <cctype>
#include <stdexcept>

namespace eqcert {

Rational MakeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool AllDigits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

mpz_class ParseInteger(std::string_view s, bool allow_sign) {
  std::string_view digits = s;
  bool negative = false;
  if (allow_sign && !digits.empty() &&
      (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() || !AllDigits(digits)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational string");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(s.substr(0, slash), /*allow_sign=*/true);
    mpz_class den = ParseInteger(s.substr(slash + 1), /*allow_sign=*/false);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || !AllDigits(int_part) ||
      !AllDigits(frac_part)) {
    throw std::invalid_argument("not a rational or finite decimal: '" +
                                std::string(s) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  Rational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) { return value.get_str(); }

double ToDouble(const Rational& value) { return value.get_d(); }

namespace {

// Exact k-th root of a non-negative integer, if it exists.
std::optional<mpz_class> ExactRoot(const mpz_class& z, unsigned long k) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> ExactPow(const Rational& base,
                                 const Rational& exponent) {
  if (sgn(base) <= 0) throw std::invalid_argument("ExactPow needs base > 0");
  const mpz_class& p = exponent.get_num();
  const mpz_class& q = exponent.get_den();
  if (!q.fits_ulong_p() || !p.fits_slong_p()) return std::nullopt;
  unsigned long k = q.get_ui();
  auto num_root = ExactRoot(base.get_num(), k);
  auto den_root = ExactRoot(base.get_den(), k);
  if (!num_root || !den_root) return std::nullopt;
  long e = p.get_si();
  unsigned long magnitude = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), num_root->get_mpz_t(), magnitude);
  mpz_pow_ui(den.get_mpz_t(), den_root->get_mpz_t(), magnitude);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

Rational Abs(const Rational& value) { return abs(value); }

Rational Sum(const RationalVector& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

std::string Join(const RationalVector& values, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += ToString(values[i]);
  }
  return out;
}

}  // namespace eqcert
