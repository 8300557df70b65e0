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
#include <optional>
#include <string>
#include <vector>

#include "freepoly.hpp"
#include "generic.hpp"
#include "mat2.hpp"
#include "probe.hpp"
#include "search.hpp"
#include "span.hpp"
#include "units.hpp"

namespace polimage {

enum class Verdict { Zero, Scalars, KHat, SL2, Full, Dense, TraceZeroUndetermined, TopPartInconclusive, Anomaly };
const char* verdict_name(Verdict v);

enum class Mode { Symbolic, Probabilistic, Auto };
const char* mode_name(Mode m);

struct Witness {
  std::string role;    // what the value demonstrates, e.g. "nilpotent" or "basis"
  std::string source;  // "units", "signs", "random", "probe"
  std::vector<Mat2> args;
  Mat2 value;
  std::optional<UnitTuple> units;
};

struct TopPart {
  WeightVector weights;
  long long degree = 0;
  std::size_t terms = 0;
  Verdict verdict = Verdict::Anomaly;
  std::string route;
};

struct ImageClass {
  Verdict verdict = Verdict::Anomaly;
  std::string route;  // "zero-polynomial", "multilinear", "semihomogeneous", "top-part"
  std::uint64_t characteristic = 0;
  Mode mode = Mode::Symbolic;  // the mode actually used
  std::uint64_t seed = 0;
  std::uint64_t budget_consumed = 0;  // witness-search evaluations, or unit tuples on the multilinear route
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  std::vector<std::string> diagnostics;
  std::vector<Witness> witnesses;

  std::optional<SpanTag> span_tag;
  unsigned span_dimension = 0;
  std::optional<WeightVector> weights;
  long long weighted_degree = 0;
  std::size_t generic_terms = 0;  // stored terms of the generic evaluation, symbolic mode
  std::optional<ProbeReport> probe;
  std::vector<TopPart> top_parts;
};

struct ClassifyOptions {
  std::uint64_t characteristic = 0;
  Mode mode = Mode::Auto;
  std::uint64_t seed = 1;
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::size_t term_budget = kDefaultTermBudget;
  std::uint64_t unit_budget = kDefaultUnitBudget;
  unsigned probe_trials = kDefaultProbeTrials;
  std::uint64_t probe_prime = 0;  // 0: the characteristic itself, or 2^31 - 1 in characteristic 0
  std::vector<WeightVector> weights;
  unsigned threads = 1;
};

/// Coefficients moved to the prime field of the requested characteristic; rejects constant terms.
FreePoly prepare_for_classification(const FreePoly& p, std::uint64_t characteristic);

ImageClass classify_multilinear(const FreePoly& p, const ClassifyOptions& opts);
ImageClass classify_semihomogeneous(const FreePoly& p, const WeightVector& w, const ClassifyOptions& opts);
ImageClass classify_general(const FreePoly& p, const ClassifyOptions& opts);

/// f = [x1,x2] + [x1,x2]^2.
FreePoly nondense_polynomial(const FieldSpec& f);

struct NondenseSample {
  std::vector<Mat2> args;
  Mat2 value;
};

struct NondenseReport {
  FieldSpec field;
  std::uint64_t seed = 0;
  unsigned samples = 0;
  unsigned holds = 0;
  std::vector<NondenseSample> failures;  // at most a few
  bool ok() const { return holds == samples; }
};

/// Checks disc(f(A,B)) = 2·tr(f(A,B)) on seeded random pairs: uniform over F_p, or integer
/// entries in [-range, range] over Q.
NondenseReport nondense_invariant_check(const FieldSpec& f, unsigned samples, std::uint64_t seed, long long range = 3);

}  // namespace polimage
