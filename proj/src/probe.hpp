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
#include <vector>

#include "freepoly.hpp"
#include "mat2.hpp"

namespace polimage {

inline constexpr std::uint64_t kDefaultProbePrime = 2147483647;  // 2^31 - 1
inline constexpr unsigned kDefaultProbeTrials = 200;

struct ProbeSample {
  std::uint64_t trial = 0;
  std::vector<Mat2> args;
  Mat2 value;
  ConeClass cone;
};

struct ProbeReport {
  std::uint64_t prime = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  unsigned degree = 0;
  unsigned vars = 0;

  bool all_zero = true;
  bool all_central = true;
  bool all_trace_zero = true;
  /// (tr², det) of all samples lie on one line through the origin, i.e. tr²/det looks constant.
  bool ratio_constant = true;
  std::optional<Scalar> ratio;  // tr²/det when constant and some det ≠ 0

  std::array<std::uint64_t, 6> class_counts{};  // indexed by ConeClass::Kind
  std::vector<ProbeSample> class_witnesses;     // first sample of each observed class
  std::vector<ProbeSample> pi_witnesses;        // two samples with different Π, when found

  /// Chance that one trial misses a nonzero entry polynomial: deg·4m/prime (capped at 1).
  double per_trial_bound = 1;
  /// Same for all trials together: per_trial_bound^trials.
  double total_bound = 1;

  std::uint64_t count(ConeClass::Kind k) const { return class_counts[static_cast<std::size_t>(k)]; }
};

/// Evaluates p (coefficients reduced mod prime) on `trials` seeded uniform tuples over F_prime.
/// Requires prime > 2·deg(p). Independent of `threads`.
ProbeReport probabilistic_probe(const FreePoly& p, unsigned trials, std::uint64_t prime, std::uint64_t seed,
                                unsigned threads = 1);

/// The tuple used for trial `index`; lets callers reproduce any sample.
std::vector<Mat2> probe_tuple(unsigned vars, std::uint64_t prime, std::uint64_t seed, std::uint64_t index);

}  // namespace polimage
