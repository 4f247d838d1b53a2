// Copyright 2026 The k3inst Authors
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

#ifndef K3INST_RATIONAL_H_
#define K3INST_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace k3inst {

/// Exact fraction over 64-bit integers.
///
/// Always kept in canonical form: gcd(|num|, den) = 1, den >= 1, and zero is
/// 0/1, so structural equality coincides with value equality. Arithmetic is
/// checked; an intermediate that does not fit in int64_t raises
/// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  // Integers convert implicitly, as in n/1.
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT

  /// Throws std::invalid_argument when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  /// "133/12", or just "24" when the denominator is 1.
  std::string to_string() const;

  /// Accepts "n" or "n/d" with optional sign and surrounding blanks; the
  /// result is reduced ("110/10" parses to 11). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Canonical reduced fraction num/den with positive denominator.
Rational reduce(std::int64_t num, std::int64_t den);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace k3inst

#endif  // K3INST_RATIONAL_H_
