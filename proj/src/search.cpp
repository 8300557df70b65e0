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

#include "search.hpp"

#include "errors.hpp"
#include "eval.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "units.hpp"

namespace polimage {

namespace {

constexpr std::size_t kChunk = 2048;

using Tuple = std::vector<Mat2>;

// Tuples with entries in {0, ±1}: first every {0, 1} tuple by number of nonzero entries, then
// (outside characteristic 2) every tuple containing a -1, again by number of nonzero entries.
class SignTuples {
 public:
  SignTuples(unsigned m, const FieldSpec& f) : m_(m), field_(f), passes_(f.characteristic() == 2 ? 1 : 2) {}

  bool next(Tuple& out) {
    if (!started_) {
      started_ = true;
      if (!start_size(1)) return false;
    } else if (!advance()) {
      return false;
    }
    out.assign(m_, Mat2::zero(field_));
    const Scalar one = Scalar::one(field_);
    for (unsigned j = 0; j < k_; ++j) {
      const unsigned pos = combo_[j];
      const bool negative = (mask_ >> j) & 1;
      out[pos / 4](pos % 4 / 2, pos % 2) = negative ? -one : one;
    }
    return true;
  }

 private:
  bool start_size(unsigned k) {
    if (k > 4 * m_) {
      if (++pass_ >= passes_) return false;
      k = 1;
    }
    k_ = k;
    combo_.resize(k);
    for (unsigned j = 0; j < k; ++j) combo_[j] = j;
    mask_ = pass_ == 0 ? 0 : 1;
    return true;
  }

  bool advance() {
    if (pass_ == 1 && mask_ + 1 < (std::uint64_t{1} << k_)) {
      ++mask_;
      return true;
    }
    mask_ = pass_ == 0 ? 0 : 1;
    // next k-combination of {0..4m-1}
    const unsigned n = 4 * m_;
    for (unsigned j = k_; j-- > 0;) {
      if (combo_[j] < n - k_ + j) {
        ++combo_[j];
        for (unsigned t = j + 1; t < k_; ++t) combo_[t] = combo_[t - 1] + 1;
        return true;
      }
    }
    return start_size(k_ + 1);
  }

  unsigned m_;
  FieldSpec field_;
  unsigned passes_;
  unsigned pass_ = 0;
  bool started_ = false;
  unsigned k_ = 0;
  std::vector<unsigned> combo_;
  std::uint64_t mask_ = 0;
};

Tuple random_tuple(unsigned m, const FieldSpec& f, std::uint64_t seed, std::uint64_t index, long long range) {
  auto rng = trial_rng(seed, index);
  Tuple t;
  t.reserve(m);
  for (unsigned v = 0; v < m; ++v) {
    std::array<Scalar, 4> e;
    for (auto& x : e) {
      x = f.is_rational() ? Scalar::from_int(f, uniform_between(rng, -range, range))
                          : Scalar::from_pair(f, uniform_below(rng, f.characteristic()), 0);
    }
    t.emplace_back(e[0], e[1], e[2], e[3]);
  }
  return t;
}

}  // namespace

SearchResult search_witness(const FreePoly& p, const ValuePredicate& pred, const SearchOptions& opts) {
  const FieldSpec& f = p.field();
  if (f.is_extension()) throw UsageError("witness search needs a prime field or Q");
  const unsigned m = p.vars();
  SearchResult result;
  const unsigned workers = worker_count(opts.threads, kChunk);
  std::vector<Evaluator> evaluators(workers, Evaluator(p));

  std::uint64_t unit_total = 1;
  for (unsigned v = 0; v < m && unit_total <= opts.budget; ++v) unit_total *= 4;
  SignTuples signs(m, f);
  bool signs_done = false;
  unsigned stage = 0;
  std::uint64_t stage_index = 0;

  std::vector<Tuple> chunk;
  std::vector<std::pair<unsigned, std::uint64_t>> origin;  // (stage, index) per chunk entry
  std::vector<Mat2> values;
  while (result.consumed < opts.budget) {
    chunk.clear();
    origin.clear();
    while (chunk.size() < kChunk && result.consumed + chunk.size() < opts.budget) {
      if (stage == 0) {
        if (stage_index >= unit_total) {
          stage = 1;
          stage_index = 0;
          continue;
        }
        const UnitTuple u = unit_tuple_at(stage_index, m);
        Tuple t;
        for (const auto& [k, l] : u.units) t.push_back(Mat2::unit(k, l, f));
        chunk.push_back(std::move(t));
      } else if (stage == 1) {
        Tuple t;
        if (signs_done || !signs.next(t)) {
          signs_done = true;
          stage = 2;
          stage_index = 0;
          continue;
        }
        chunk.push_back(std::move(t));
      } else {
        chunk.push_back(random_tuple(m, f, opts.seed, stage_index, opts.random_range));
      }
      origin.emplace_back(stage, stage_index++);
    }
    if (chunk.empty()) break;
    values.assign(chunk.size(), Mat2::zero(f));
    std::vector<char> hit(chunk.size(), 0);
    parallel_blocks(chunk.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        values[i] = evaluators[w](chunk[i]);
        hit[i] = pred(values[i]) ? 1 : 0;
      }
    });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      ++result.consumed;
      ++result.per_stage[origin[i].first];
      if (hit[i]) {
        static const char* kNames[] = {"units", "signs", "random"};
        result.witness = SearchWitness{std::move(chunk[i]), values[i], kNames[origin[i].first], origin[i].second};
        return result;
      }
    }
  }
  return result;
}

}  // namespace polimage
