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
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "freepoly.hpp"
#include "mat2.hpp"
#include "span.hpp"

namespace polimage {

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

/// Lookup tables for M2(F_q), q ≤ 7. Matrix index ((a·q + b)·q + c)·q + d for rows (a b; c d).
class MatTables {
 public:
  explicit MatTables(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint32_t size() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[std::size_t{a} * n_ + b]; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[std::size_t{a} * n_ + b]; }
  std::uint32_t scale(std::uint64_t c, std::uint32_t a) const { return scale_[c * n_ + a]; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t encode(const Mat2& m) const;
  Mat2 decode(std::uint32_t idx) const;
  std::array<std::uint32_t, 4> entries(std::uint32_t idx) const;
  std::uint32_t from_entries(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) const;
  /// Invertible matrices in index order, paired with their inverses.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& general_linear() const { return gl_; }

 private:
  std::uint64_t q_;
  std::uint32_t n_;
  FieldSpec field_;
  std::uint32_t identity_;
  std::vector<std::uint16_t> mul_, add_, scale_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gl_;
};

/// Naive: every tuple. Multilinear: the last variable enters linearly, so each prefix tuple
/// contributes the range of a linear map. Orbit: additionally x1 runs over representatives of
/// M2(F_q) under conjugation and scaling, and the result is closed under both (exact because
/// p(c·g·x1·g⁻¹, g·x2·g⁻¹, …) = c·g·p(x)·g⁻¹ for multilinear p); conjugation invariance of
/// an orbit-path image therefore holds by construction. Auto: multilinear when available, orbit
/// when that is over budget.
enum class EnumeratePath { Auto, Naive, Multilinear, Orbit };

struct ImageReport {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::string path;              // "naive", "multilinear" or "multilinear-orbit"
  std::uint64_t tuples = 0;      // q^(4m), the tuple space covered
  std::uint64_t evaluations = 0; // polynomial evaluations actually performed
  bool multilinear = false;
  std::vector<std::uint32_t> image;  // sorted MatTables indices
  std::array<std::uint64_t, 6> class_counts{};
  bool contains_zero = false;
  bool conjugation_invariant = false;
  bool cone_closed = false;  // closed under nonzero scaling
  SpanTag span_tag = SpanTag::Zero;
  unsigned span_dimension = 0;
  double elapsed_ms = 0;

  std::vector<Mat2> matrices() const;
  bool contains(const Mat2& a) const;
  std::uint64_t count(ConeClass::Kind k) const { return class_counts[static_cast<std::size_t>(k)]; }
};

/// Exhaustive image of p over M2(F_q), q prime ≤ 7. Never samples: refuses with BudgetExceeded when
/// the evaluations needed exceed `tuple_budget`.
ImageReport enumerate_image(const FreePoly& p, std::uint64_t q, std::uint64_t tuple_budget = kDefaultTupleBudget,
                            EnumeratePath path = EnumeratePath::Auto, unsigned threads = 1);

/// 0 ∈ S and g·S·g⁻¹ = S for every g in GL2(F_q).
bool chuang_property_check(const std::vector<Mat2>& s, std::uint64_t q);

struct CrossCheckReport {
  std::uint64_t q = 0;
  SpanTag enumerated_tag = SpanTag::Zero;
  unsigned enumerated_dimension = 0;
  Verdict classifier_verdict = Verdict::Anomaly;
  SpanTag classifier_tag = SpanTag::Zero;
  unsigned classifier_dimension = 0;
  bool e12_required = false;
  bool e12_present = false;
  bool agree = false;
};

/// Span of the enumerated image against classify_multilinear at characteristic q.
CrossCheckReport cross_check(const FreePoly& p, std::uint64_t q, std::uint64_t tuple_budget = kDefaultTupleBudget,
                             unsigned threads = 1);

/// Σ_k f(a_1, …, T·a_k, …, a_4; r) = factor·f(a; r) for f the Capelli polynomial c4, when the
/// right side is nonzero and the two are proportional.
std::optional<Scalar> alternating_trace_factor(const Mat2& t, const std::array<Mat2, 4>& a,
                                               const std::array<Mat2, 3>& r);

struct AlternatingTraceTrial {
  Mat2 t;
  Scalar factor;
  Scalar trace_t;
};

struct AlternatingTraceReport {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  unsigned degenerate_resamples = 0;  // draws with f(a; r) = 0
  unsigned proportional = 0;
  unsigned factor_is_twice_trace = 0;
  unsigned factor_is_trace = 0;
  unsigned linear_in_t = 0;  // factor(T1 + T2) = factor(T1) + factor(T2)
  std::vector<AlternatingTraceTrial> samples;  // first few
  bool holds() const {
    return proportional == trials && factor_is_twice_trace == trials && linear_in_t == trials;
  }
};

AlternatingTraceReport verify_alternating_trace(std::uint64_t prime, unsigned trials, std::uint64_t seed);

}  // namespace polimage
