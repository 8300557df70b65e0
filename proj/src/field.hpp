// Copyright 2026 The polimage Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace polimage {

/// The coefficient field: ℚ, a prime field F_p, or its quadratic extension F_{p²}.
///
/// F_{p²} = F_p[θ] with θ² = d for the smallest non-residue d when p is odd,
/// and θ² = θ + 1 when p = 2.
class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 32) - 1;

  FieldSpec() = default;  // ℚ

  static FieldSpec rationals() { return {}; }
  /// Throws UsageError unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec prime_square(std::uint64_t p);
  /// 0 → ℚ, otherwise F_c.
  static FieldSpec of_characteristic(std::uint64_t c);

  std::uint64_t characteristic() const { return characteristic_; }
  unsigned degree() const { return degree_; }
  bool is_rational() const { return characteristic_ == 0; }
  bool is_extension() const { return degree_ == 2; }
  std::uint64_t nonresidue() const { return nonresidue_; }

  FieldSpec prime_field() const;
  FieldSpec quadratic_extension() const;
  /// Number of elements; 0 for ℚ.
  std::uint64_t size() const;

  /// "Q", "F_5", "F_5^2".
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.characteristic_ == b.characteristic_ && a.degree_ == b.degree_;
  }

 private:
  std::uint64_t characteristic_ = 0;
  unsigned degree_ = 1;
  std::uint64_t nonresidue_ = 0;
};

/// An element of a FieldSpec. ℚ values are reduced fractions, F_p values residues in [0, p),
/// F_{p²} values pairs (a, b) meaning a + bθ.
class Scalar {
 public:
  Scalar() : field_(), value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long long v);
  /// Throws DivisionByZero when the denominator vanishes in f.
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
  /// a + bθ in F_{p²} (or just a when f is a prime field and b = 0).
  static Scalar from_pair(const FieldSpec& f, std::uint64_t a, std::uint64_t b);
  /// Scalar text syntax: `p/q` or integer for ℚ; integer (or p/q, reduced) for F_p; `a+b*t` for F_{p²}.
  static Scalar parse(std::string_view text, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;   // a
  std::uint64_t theta_part() const;  // b

  /// Embed an F_p element into F_{p²}.
  Scalar to_extension() const;
  /// Reduce a ℚ value into a prime field (or identity when fields already agree).
  Scalar reduce_to(const FieldSpec& target) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Canonical encoding order: numeric for ℚ, (a, b) lexicographic for finite fields.
  friend bool encoding_less(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
  };

  Scalar(const FieldSpec& f, mpq_class q) : field_(f), value_(std::move(q)) {}
  Scalar(const FieldSpec& f, Residue r) : field_(f), value_(r) {}

  void require_same_field(const Scalar& o) const;
  const Residue& res() const { return std::get<Residue>(value_); }
  Residue& res() { return std::get<Residue>(value_); }

  FieldSpec field_;
  std::variant<mpq_class, Residue> value_;
};

/// A square root of an F_p element inside F_{p²}; the root with the smaller encoding.
Scalar sqrt_in_closure(const Scalar& a);

}  // namespace polimage
