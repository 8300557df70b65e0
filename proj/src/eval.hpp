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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "freepoly.hpp"
#include "mat2.hpp"

namespace polimage {

/// Prefix tree over the words of a polynomial. Node 0 is the empty word and every node's
/// parent precedes it, so one forward pass computes all prefix products.
class WordTrie {
 public:
  struct Node {
    std::uint32_t parent;
    std::uint32_t letter;  // 1-based variable index
  };

  explicit WordTrie(const FreePoly& p);

  unsigned vars() const { return vars_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  /// (node, coefficient) for every word of the polynomial.
  const std::vector<std::pair<std::uint32_t, Scalar>>& terms() const { return terms_; }

 private:
  unsigned vars_;
  std::vector<Node> nodes_;
  std::vector<std::pair<std::uint32_t, Scalar>> terms_;
};

/// Evaluate the trie over any ring providing identity/mul/add/scale.
template <class Ring>
typename Ring::Matrix evaluate_trie(const WordTrie& trie, std::span<const typename Ring::Scalar> coeffs,
                                    std::span<const typename Ring::Matrix> args, const Ring& ring,
                                    std::vector<typename Ring::Matrix>& scratch) {
  const auto& nodes = trie.nodes();
  scratch.resize(nodes.size());
  scratch[0] = ring.identity();
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    scratch[k] = ring.mul(scratch[nodes[k].parent], args[nodes[k].letter - 1]);
  }
  typename Ring::Matrix sum = ring.zero();
  const auto& terms = trie.terms();
  for (std::size_t t = 0; t < terms.size(); ++t) {
    sum = ring.add(sum, ring.scale(coeffs[t], scratch[terms[t].first]));
  }
  return sum;
}

/// 2×2 matrices over F_p, p < 2^32.
struct ModRing {
  using Scalar = std::uint64_t;
  using Matrix = std::array<std::uint64_t, 4>;
  std::uint64_t p;

  Matrix identity() const { return {1 % p, 0, 0, 1 % p}; }
  Matrix zero() const { return {0, 0, 0, 0}; }
  std::uint64_t dot(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) const {
    return ((a * b) % p + (c * d) % p) % p;
  }
  Matrix mul(const Matrix& a, const Matrix& b) const {
    return {dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]), dot(a[2], b[0], a[3], b[2]),
            dot(a[2], b[1], a[3], b[3])};
  }
  Matrix add(const Matrix& a, const Matrix& b) const {
    return {(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p, (a[3] + b[3]) % p};
  }
  Matrix scale(Scalar c, const Matrix& a) const {
    return {(c * a[0]) % p, (c * a[1]) % p, (c * a[2]) % p, (c * a[3]) % p};
  }
};

/// 2×2 integer matrices; throws IntOverflow instead of wrapping.
struct IntRing {
  struct IntOverflow {};
  using Scalar = std::int64_t;
  using Matrix = std::array<std::int64_t, 4>;

  static std::int64_t madd(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t x, y, s;
    if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) || __builtin_add_overflow(x, y, &s)) {
      throw IntOverflow{};
    }
    return s;
  }
  static std::int64_t sum(std::int64_t a, std::int64_t b) {
    std::int64_t s;
    if (__builtin_add_overflow(a, b, &s)) throw IntOverflow{};
    return s;
  }
  static std::int64_t prod(std::int64_t a, std::int64_t b) {
    std::int64_t s;
    if (__builtin_mul_overflow(a, b, &s)) throw IntOverflow{};
    return s;
  }

  Matrix identity() const { return {1, 0, 0, 1}; }
  Matrix zero() const { return {0, 0, 0, 0}; }
  Matrix mul(const Matrix& a, const Matrix& b) const {
    return {madd(a[0], b[0], a[1], b[2]), madd(a[0], b[1], a[1], b[3]), madd(a[2], b[0], a[3], b[2]),
            madd(a[2], b[1], a[3], b[3])};
  }
  Matrix add(const Matrix& a, const Matrix& b) const {
    return {sum(a[0], b[0]), sum(a[1], b[1]), sum(a[2], b[2]), sum(a[3], b[3])};
  }
  Matrix scale(Scalar c, const Matrix& a) const { return {prod(c, a[0]), prod(c, a[1]), prod(c, a[2]), prod(c, a[3])}; }
};

struct ExactRing {
  using Scalar = polimage::Scalar;
  using Matrix = Mat2;
  FieldSpec field;

  Matrix identity() const { return Mat2::identity(field); }
  Matrix zero() const { return Mat2::zero(field); }
  Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
  Matrix add(const Matrix& a, const Matrix& b) const { return a + b; }
  Matrix scale(const Scalar& c, const Matrix& a) const { return c * a; }
};

/// Repeated exact evaluation of one polynomial on concrete 2×2 matrices over its own field.
/// F_p uses residue arithmetic; ℚ uses checked int64 arithmetic for integer arguments and
/// falls back to rationals on overflow.
class Evaluator {
 public:
  explicit Evaluator(const FreePoly& p);

  const FreePoly& poly() const { return poly_; }
  Mat2 operator()(std::span<const Mat2> args) const;

 private:
  Mat2 exact(std::span<const Mat2> args) const;

  FreePoly poly_;
  WordTrie trie_;
  std::vector<Scalar> exact_coeffs_;
  std::vector<std::uint64_t> mod_coeffs_;
  // ℚ: integer coefficients after multiplying through by common_denominator_.
  std::vector<std::int64_t> int_coeffs_;
  bool int_ok_ = false;
  mpz_class common_denominator_{1};
  mutable std::vector<ModRing::Matrix> mod_scratch_;
  mutable std::vector<IntRing::Matrix> int_scratch_;
  mutable std::vector<Mat2> exact_scratch_;
};

/// One-shot exact evaluation.
Mat2 evaluate(const FreePoly& p, std::span<const Mat2> args);

}  // namespace polimage
