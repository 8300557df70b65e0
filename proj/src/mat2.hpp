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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "field.hpp"

namespace polimage {

/// Exact 2×2 matrix, entries row-major (a11, a12, a21, a22).
class Mat2 {
 public:
  Mat2() : Mat2(FieldSpec::rationals()) {}
  explicit Mat2(const FieldSpec& f);
  Mat2(const Scalar& a11, const Scalar& a12, const Scalar& a21, const Scalar& a22);

  static Mat2 zero(const FieldSpec& f) { return Mat2(f); }
  static Mat2 identity(const FieldSpec& f);
  static Mat2 scalar(const Scalar& c);
  /// e_ij with 1-based indices.
  static Mat2 unit(unsigned i, unsigned j, const FieldSpec& f);
  static Mat2 from_ints(const FieldSpec& f, long long a11, long long a12, long long a21, long long a22);
  /// `a,b;c,d` with Scalar entry syntax.
  static Mat2 parse(std::string_view text, const FieldSpec& f);

  const FieldSpec& field() const { return e_[0].field(); }
  const Scalar& operator()(unsigned row, unsigned col) const { return e_[2 * row + col]; }
  Scalar& operator()(unsigned row, unsigned col) { return e_[2 * row + col]; }
  const std::array<Scalar, 4>& entries() const { return e_; }

  bool is_zero() const;
  bool is_scalar() const;
  bool is_diagonal() const;

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Scalar& c, const Mat2& a);
  Mat2 reduce_to(const FieldSpec& f) const;
  /// Throws DivisionByZero for singular matrices.
  Mat2 inverse() const;

  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<Scalar, 4> e_;
};

Scalar trace(const Mat2& a);
Scalar det(const Mat2& a);
/// tr² − 4·det = (λ₁ − λ₂)².
Scalar disc(const Mat2& a);

/// Π(A) = λ₁/λ₂ + λ₂/λ₁ = −2 + tr²/det, with the two degenerate cases kept apart.
struct PiValue {
  enum class Kind { Finite, Infinite, Undefined };
  Kind kind = Kind::Undefined;
  std::optional<Scalar> value;

  friend bool operator==(const PiValue& a, const PiValue& b) { return a.kind == b.kind && a.value == b.value; }
  std::string to_string() const;
};
PiValue pi_invariant(const Mat2& a);

/// Disjoint conjugation-invariant classes of M₂. KHat excludes scalars, so in characteristic 2
/// it is the non-scalar trace-zero non-nilpotent part and KTilde is empty.
struct ConeClass {
  enum class Kind { Zero, ScalarNonzero, NilpotentNonzero, KTilde, KHat, DiagDistinct };
  Kind kind = Kind::Zero;
  PiValue pi;  // DiagDistinct only

  friend bool operator==(const ConeClass& a, const ConeClass& b) {
    return a.kind == b.kind && (a.kind != Kind::DiagDistinct || a.pi == b.pi);
  }
};
ConeClass cone_classify(const Mat2& a);
const char* cone_kind_name(ConeClass::Kind k);

/// Conjugate over the algebraic closure: equal (tr, det) and equally (non-)scalar.
bool similar(const Mat2& a, const Mat2& b);
/// g·A·g⁻¹; throws UsageError when g is singular.
Mat2 conjugate(const Mat2& a, const Mat2& g);
/// Roots of λ² − tr·λ + det in F_{p²}, ordered by encoding.
std::pair<Scalar, Scalar> eigenvalues_in_closure(const Mat2& a);

}  // namespace polimage
