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

#include "probe.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "eval.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace polimage {

std::vector<Mat2> probe_tuple(unsigned vars, std::uint64_t prime, std::uint64_t seed, std::uint64_t index) {
  const FieldSpec f = FieldSpec::prime(prime);
  auto rng = trial_rng(seed, index);
  std::vector<Mat2> t;
  t.reserve(vars);
  for (unsigned v = 0; v < vars; ++v) {
    std::array<std::uint64_t, 4> e;
    for (auto& x : e) x = uniform_below(rng, prime);
    t.emplace_back(Scalar::from_pair(f, e[0], 0), Scalar::from_pair(f, e[1], 0), Scalar::from_pair(f, e[2], 0),
                   Scalar::from_pair(f, e[3], 0));
  }
  return t;
}

ProbeReport probabilistic_probe(const FreePoly& p, unsigned trials, std::uint64_t prime, std::uint64_t seed,
                                unsigned threads) {
  if (trials == 0) throw UsageError("probe needs at least one trial");
  const FieldSpec f = FieldSpec::prime(prime);
  const unsigned deg = p.degree();
  if (prime <= 2ULL * deg) {
    throw UsageError("probe prime " + std::to_string(prime) + " must exceed twice the degree " + std::to_string(deg));
  }
  const FreePoly q = p.field() == f ? p : p.reduce_to(f);

  ProbeReport r;
  r.prime = prime;
  r.trials = trials;
  r.seed = seed;
  r.degree = deg;
  r.vars = p.vars();
  r.per_trial_bound = std::min(1.0, static_cast<double>(deg) * 4.0 * p.vars() / static_cast<double>(prime));
  r.total_bound = std::pow(r.per_trial_bound, static_cast<double>(trials));

  std::vector<Mat2> values(trials, Mat2::zero(f));
  const unsigned workers = worker_count(threads, trials);
  std::vector<Evaluator> evaluators(workers, Evaluator(q));
  parallel_blocks(trials, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = evaluators[w](probe_tuple(q.vars(), prime, seed, i));
  });

  std::optional<std::pair<Scalar, Scalar>> line;  // first nonzero (tr², det)
  std::array<bool, 6> seen{};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Mat2& v = values[i];
    const ConeClass c = cone_classify(v);
    const auto k = static_cast<std::size_t>(c.kind);
    ++r.class_counts[k];
    if (!seen[k]) {
      seen[k] = true;
      r.class_witnesses.push_back({i, probe_tuple(q.vars(), prime, seed, i), v, c});
    }
    if (!v.is_zero()) r.all_zero = false;
    if (!v.is_scalar()) r.all_central = false;
    const Scalar t = trace(v);
    if (!t.is_zero()) r.all_trace_zero = false;
    const Scalar t2 = t * t, d = det(v);
    if (!t2.is_zero() || !d.is_zero()) {
      if (!line) {
        line.emplace(t2, d);
      } else if (t2 * line->second != d * line->first) {
        r.ratio_constant = false;
      }
    }
    if (r.pi_witnesses.size() < 2 && !v.is_zero()) {
      const PiValue pi = pi_invariant(v);
      if (pi.kind != PiValue::Kind::Undefined) {
        if (r.pi_witnesses.empty()) {
          r.pi_witnesses.push_back({i, probe_tuple(q.vars(), prime, seed, i), v, c});
        } else if (!(pi_invariant(r.pi_witnesses.front().value) == pi)) {
          r.pi_witnesses.push_back({i, probe_tuple(q.vars(), prime, seed, i), v, c});
        }
      }
    }
  }
  if (r.ratio_constant && line && !line->second.is_zero()) r.ratio = line->first / line->second;
  std::sort(r.class_witnesses.begin(), r.class_witnesses.end(),
            [](const ProbeSample& a, const ProbeSample& b) { return a.cone.kind < b.cone.kind; });
  return r;
}

}  // namespace polimage
