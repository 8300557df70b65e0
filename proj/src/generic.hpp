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
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "field.hpp"
#include "freepoly.hpp"

namespace polimage {

/// Indeterminates available to generic evaluation: four per variable, so at most 16 variables.
inline constexpr unsigned kMaxIndeterminates = 64;
inline constexpr std::size_t kDefaultTermBudget = 1'000'000;
/// A budgeted product also refuses more than this many term pairs per budgeted term.
inline constexpr std::size_t kProductWorkFactor = 16;

using Exponents = std::array<std::uint8_t, kMaxIndeterminates>;

/// Graded lexicographic: lower total degree first, then lexicographic on exponents.
bool grlex_less(const Exponents& a, const Exponents& b);
unsigned total_degree(const Exponents& e);

/// Sparse commutative polynomial with terms sorted ascending in grlex order.
class ComPoly {
 public:
  struct Term {
    Exponents exps;
    Scalar coeff;
  };

  ComPoly() = default;
  ComPoly(unsigned indeterminates, FieldSpec field);

  static ComPoly constant(const Scalar& c, unsigned indeterminates);
  static ComPoly indeterminate(unsigned index, unsigned indeterminates, const FieldSpec& field);

  unsigned indeterminates() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents& e) const;
  /// Largest term in grlex order; requires a nonzero polynomial.
  const Term& leading() const { return terms_.back(); }

  ComPoly& operator+=(const ComPoly& o);
  ComPoly& operator-=(const ComPoly& o);
  friend ComPoly operator+(ComPoly a, const ComPoly& b) { return a += b; }
  friend ComPoly operator-(ComPoly a, const ComPoly& b) { return a -= b; }
  friend ComPoly operator*(const ComPoly& a, const ComPoly& b) { return multiply(a, b, 0); }
  ComPoly scaled(const Scalar& c) const;

  /// Product; throws BudgetExceeded when the result would hold more than `budget` terms or need more
  /// than kProductWorkFactor·budget term pairs (0 = no limit).
  static ComPoly multiply(const ComPoly& a, const ComPoly& b, std::size_t budget);

  /// Multiply by one indeterminate; the shift preserves grlex order.
  ComPoly times_indeterminate(unsigned index) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const ComPoly& a, const ComPoly& b);

 private:
  ComPoly merged(const ComPoly& o, bool subtract) const;

  unsigned n_ = 0;
  FieldSpec field_;
  std::vector<Term> terms_;
};

/// 2×2 matrix of ComPoly entries.
struct GenericMat {
  std::array<ComPoly, 4> entry;  // row-major

  const ComPoly& operator()(unsigned r, unsigned c) const { return entry[2 * r + c]; }
  std::size_t term_count() const;
};

/// Index of indeterminate u_{var, row, col} (var 1-based, row/col 0-based).
inline unsigned generic_index(unsigned var, unsigned row, unsigned col) { return 4 * (var - 1) + 2 * row + col; }

/// Substitute X_i = (u_{i,rc}) for every variable and expand exactly.
/// Throws BudgetExceeded when stored terms exceed `term_budget`.
GenericMat generic_eval(const FreePoly& p, std::size_t term_budget = kDefaultTermBudget);

bool is_identically_zero(const GenericMat& g);
bool is_central(const GenericMat& g);
bool is_trace_zero(const GenericMat& g);
ComPoly generic_trace(const GenericMat& g);
/// term_budget as in ComPoly::multiply (0 = no limit).
ComPoly generic_det(const GenericMat& g, std::size_t term_budget = 0);

struct Proportionality {
  bool proportional = false;
  Scalar factor;  // τ = factor·δ when proportional
  bool degenerate = false;  // δ ≡ 0
  /// When not proportional: monomials where τ − c·δ survives (and δ's leading monomial).
  std::vector<Exponents> witnesses;
};
Proportionality proportionality(const ComPoly& tau, const ComPoly& delta);

}  // namespace polimage
