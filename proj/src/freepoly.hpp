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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "field.hpp"

namespace polimage {

/// A monomial of K<x_1..x_m>: variable indices, 1-based. Empty word = identity.
using Word = std::vector<std::uint32_t>;

/// Shorter words first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using MultiDegree = std::vector<unsigned>;
using WeightVector = std::vector<long long>;

/// A non-commutative polynomial: map from words to nonzero coefficients.
class FreePoly {
 public:
  using TermMap = std::map<Word, Scalar, WordOrder>;

  FreePoly() = default;
  FreePoly(unsigned vars, FieldSpec field) : vars_(vars), field_(field) {}

  static FreePoly variable(unsigned index, unsigned vars, const FieldSpec& field);
  static FreePoly constant(const Scalar& c, unsigned vars);

  unsigned vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const { return terms_.count(Word{}) != 0; }
  /// Longest word length; 0 for the zero polynomial.
  unsigned degree() const;
  /// Largest variable index actually used.
  unsigned max_variable() const;
  Scalar coefficient(const Word& w) const;

  /// Adds c·w, dropping the entry if it cancels.
  void add_term(const Word& w, const Scalar& c);

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const FreePoly& o);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const FreePoly& b) { return a *= b; }
  FreePoly operator-() const;
  FreePoly scaled(const Scalar& c) const;
  FreePoly pow(unsigned k) const;

  /// Same terms declared over a different variable count (must cover every index used).
  FreePoly with_vars(unsigned vars) const;
  /// Coefficients mapped into another field (ℚ → F_p reduction).
  FreePoly reduce_to(const FieldSpec& field) const;
  /// Replace x_i by images[i-1] (images live in a common variable count).
  FreePoly substitute(const std::vector<FreePoly>& images) const;

  /// Canonical text, parseable by parse_poly.
  std::string to_string() const;

  friend bool operator==(const FreePoly& a, const FreePoly& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const FreePoly& o) const;

  unsigned vars_ = 0;
  FieldSpec field_;
  TermMap terms_;
};

MultiDegree multidegree(const Word& w, unsigned vars);
long long weighted_degree(const Word& w, const WeightVector& weights);
std::string word_to_string(const Word& w);

/// Parse the polynomial grammar. vars = 0 infers the count from the largest index used.
FreePoly parse_poly(std::string_view text, unsigned vars, const FieldSpec& field);

FreePoly commutator(const FreePoly& a, const FreePoly& b);
/// s_k = Σ sgn(σ) x_σ(1)⋯x_σ(k).
FreePoly standard_poly(unsigned k, const FieldSpec& field);
/// c_t = Σ sgn(σ) x_σ(1) y_1 x_σ(2) ⋯ y_{t-1} x_σ(t); y_i is variable t+i.
FreePoly capelli_poly(unsigned t, const FieldSpec& field);

bool is_multilinear(const FreePoly& p);
/// Common multidegree of all words, if there is one.
std::optional<MultiDegree> common_multidegree(const FreePoly& p);

struct SemiHomogeneity {
  bool ok = false;
  long long degree = 0;
  // On failure: two monomials with different weighted degrees.
  Word first, second;
  long long first_degree = 0, second_degree = 0;
};
SemiHomogeneity semi_homogeneous_check(const FreePoly& p, const WeightVector& w);

struct WeightSolutions {
  /// Integer basis of all w making p semi-homogeneous, coprime entries, first nonzero positive.
  std::vector<WeightVector> basis;
  /// A strictly positive solution, if one was found.
  std::optional<WeightVector> positive;
};
WeightSolutions infer_weights(const FreePoly& p);

/// Full multilinearization of a completely homogeneous polynomial. The first copy of x_i keeps
/// its index (after dropping absent variables); extra copies are numbered after them.
FreePoly multilinearize(const FreePoly& p);

/// Monomials grouped by weighted degree, ascending.
std::vector<std::pair<long long, FreePoly>> weighted_parts(const FreePoly& p, const WeightVector& w);

}  // namespace polimage
