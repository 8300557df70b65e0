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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "freepoly.hpp"
#include "mat2.hpp"

namespace polimage {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;  // total evaluations over all stages
  std::uint64_t seed = 1;
  unsigned threads = 1;
  long long random_range = 8;  // characteristic 0: random entries in [-r, r]
};

struct SearchWitness {
  std::vector<Mat2> args;
  Mat2 value;
  std::string stage;  // "units", "signs", "random"
  std::uint64_t index = 0;  // position within its stage
};

struct SearchResult {
  std::optional<SearchWitness> witness;
  std::uint64_t consumed = 0;
  std::array<std::uint64_t, 3> per_stage{};  // evaluations spent in units / signs / random
};

using ValuePredicate = std::function<bool(const Mat2&)>;

/// First tuple (in a fixed order) whose value satisfies `pred`: matrix-unit tuples, then {0, 1}
/// tuples and then {0, ±1} tuples with some -1, each by increasing number of nonzero entries,
/// then seeded random tuples.
/// Evaluation is exact over p's own field. The result does not depend on `threads`.
SearchResult search_witness(const FreePoly& p, const ValuePredicate& pred, const SearchOptions& opts);

}  // namespace polimage
