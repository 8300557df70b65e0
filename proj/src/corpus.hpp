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

#include "classify.hpp"
#include "report.hpp"

namespace polimage {

struct CorpusEntry {
  enum class Check { Classify, ConeProbe, Nondense };

  std::string name;
  std::string polynomial;
  unsigned vars = 0;
  bool linearize = false;  // classify multilinearize(polynomial)
  std::uint64_t characteristic = 0;
  Verdict expected = Verdict::Anomaly;
  Mode mode = Mode::Auto;
  Check check = Check::Classify;
  std::string known_image;  // the established answer, which the verdict may only bound
  std::string note;
};

const std::vector<CorpusEntry>& corpus_entries();

struct CorpusOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::size_t term_budget = kDefaultTermBudget;
  unsigned probe_trials = kDefaultProbeTrials;
  unsigned nondense_samples = 100;
};

struct CorpusResult {
  std::string name;
  bool pass = false;
  Verdict verdict = Verdict::Anomaly;
  Json detail;
};

struct CorpusRun {
  std::vector<CorpusResult> results;
  bool all_pass() const;
  Json to_json() const;
};

/// Runs every entry, or only `only`; an unknown name is a UsageError. Deterministic in the options.
CorpusRun run_corpus(const CorpusOptions& opts, const std::optional<std::string>& only = std::nullopt);

}  // namespace polimage
