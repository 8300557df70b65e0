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

#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "errors.hpp"
#include "modarith.hpp"
#include "eval.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace polimage {

MatTables::MatTables(std::uint64_t q) : q_(q), field_(FieldSpec::prime(q)) {
  if (q > 7) throw UsageError("the enumeration oracle supports q <= 7");
  n_ = static_cast<std::uint32_t>(q * q * q * q);
  identity_ = from_entries(1, 0, 0, 1 % q);
  const std::size_t n = n_;
  mul_.resize(n * n);
  add_.resize(n * n);
  scale_.resize(q * n);
  std::vector<std::array<std::uint32_t, 4>> e(n);
  for (std::uint32_t i = 0; i < n_; ++i) e[i] = entries(i);
  for (std::uint32_t i = 0; i < n_; ++i) {
    const auto& a = e[i];
    for (std::uint32_t j = 0; j < n_; ++j) {
      const auto& b = e[j];
      mul_[i * n + j] = static_cast<std::uint16_t>(
          from_entries((a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
                       (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q));
      add_[i * n + j] = static_cast<std::uint16_t>(
          from_entries((a[0] + b[0]) % q, (a[1] + b[1]) % q, (a[2] + b[2]) % q, (a[3] + b[3]) % q));
    }
    for (std::uint64_t c = 0; c < q; ++c) {
      scale_[c * n + i] =
          static_cast<std::uint16_t>(from_entries(c * a[0] % q, c * a[1] % q, c * a[2] % q, c * a[3] % q));
    }
  }
  for (std::uint32_t g = 0; g < n_; ++g) {
    const auto& a = e[g];
    const std::uint64_t d = (a[0] * a[3] + (q - a[1] * a[2] % q)) % q;
    if (d == 0) continue;
    const std::uint64_t di = modarith::inv(d, q);
    const std::uint32_t inv = from_entries(a[3] * di % q, (q - a[1]) % q * di % q, (q - a[2]) % q * di % q,
                                           a[0] * di % q);
    gl_.emplace_back(g, inv);
  }
}

std::array<std::uint32_t, 4> MatTables::entries(std::uint32_t idx) const {
  const auto q = static_cast<std::uint32_t>(q_);
  std::array<std::uint32_t, 4> e;
  for (int k = 3; k >= 0; --k) {
    e[k] = idx % q;
    idx /= q;
  }
  return e;
}

std::uint32_t MatTables::from_entries(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) const {
  return static_cast<std::uint32_t>(((a * q_ + b) * q_ + c) * q_ + d);
}

std::uint32_t MatTables::encode(const Mat2& m) const {
  if (!(m.field() == field_)) throw UsageError("matrix over " + m.field().name() + ", expected " + field_.name());
  return from_entries(m(0, 0).residue(), m(0, 1).residue(), m(1, 0).residue(), m(1, 1).residue());
}

Mat2 MatTables::decode(std::uint32_t idx) const {
  const auto e = entries(idx);
  return Mat2::from_ints(field_, e[0], e[1], e[2], e[3]);
}

namespace {

// Trie evaluation over table indices that only recomputes nodes depending on changed variables.
class IncrementalEval {
 public:
  IncrementalEval(const FreePoly& p, const MatTables& t) : t_(t), trie_(p) {
    const auto& nodes = trie_.nodes();
    maxvar_.assign(nodes.size(), 0);
    for (std::size_t k = 1; k < nodes.size(); ++k) maxvar_[k] = std::max(maxvar_[nodes[k].parent], nodes[k].letter);
    by_level_.resize(p.vars() + 2);
    for (unsigned v = 1; v <= p.vars() + 1; ++v) {
      for (std::uint32_t k = 1; k < nodes.size(); ++k) {
        if (maxvar_[k] >= v) by_level_[v].push_back(k);
      }
    }
    for (const auto& [node, c] : trie_.terms()) terms_.emplace_back(node, c.residue());
    val_.assign(nodes.size(), t.identity());
  }

  // args are 0-based by variable; recompute everything depending on variables >= v (1-based).
  std::uint32_t evaluate(const std::vector<std::uint32_t>& args, unsigned v) {
    const auto& nodes = trie_.nodes();
    for (auto k : by_level_[std::min<std::size_t>(v, by_level_.size() - 1)]) {
      val_[k] = t_.mul(val_[nodes[k].parent], args[nodes[k].letter - 1]);
    }
    std::uint32_t sum = 0;  // index 0 is the zero matrix
    for (const auto& [node, c] : terms_) sum = t_.add(sum, t_.scale(c, val_[node]));
    return sum;
  }

 private:
  const MatTables& t_;
  WordTrie trie_;
  std::vector<std::uint32_t> maxvar_;
  std::vector<std::vector<std::uint32_t>> by_level_;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> terms_;
  std::vector<std::uint32_t> val_;
};

// Walks tuples in [begin, end) of the product of per-variable alphabets, last variable fastest.
template <class Visit>
void walk_tuples(const std::vector<std::vector<std::uint32_t>>& alphabets, std::uint64_t begin, std::uint64_t end,
                 IncrementalEval& eval, Visit&& visit) {
  const unsigned m = static_cast<unsigned>(alphabets.size());
  std::vector<std::uint64_t> digit(m);
  std::vector<std::uint32_t> args(m);
  std::uint64_t rest = begin;
  for (unsigned v = m; v-- > 0;) {
    digit[v] = rest % alphabets[v].size();
    rest /= alphabets[v].size();
    args[v] = alphabets[v][digit[v]];
  }
  unsigned changed = 1;
  for (std::uint64_t t = begin; t < end; ++t) {
    visit(t, eval.evaluate(args, changed));
    if (m == 0) break;
    unsigned v = m - 1;
    while (++digit[v] == alphabets[v].size()) {
      digit[v] = 0;
      args[v] = alphabets[v][0];
      if (v == 0) break;
      --v;
    }
    args[v] = alphabets[v][digit[v]];
    changed = v + 1;
  }
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// Reduced row echelon form of up to four vectors in F_q^4; returns the rank and a canonical key.
std::pair<unsigned, std::uint64_t> row_reduce(std::array<std::array<std::uint32_t, 4>, 4>& rows, unsigned count,
                                              std::uint64_t q) {
  unsigned rank = 0;
  for (unsigned col = 0; col < 4 && rank < count; ++col) {
    unsigned pivot = rank;
    while (pivot < count && rows[pivot][col] == 0) ++pivot;
    if (pivot == count) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = modarith::inv(rows[rank][col], q);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % q);
    for (unsigned r = 0; r < count; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (unsigned j = 0; j < 4; ++j) rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (q - f) * rows[rank][j]) % q);
    }
    ++rank;
  }
  std::uint64_t key = rank;
  for (unsigned r = 0; r < rank; ++r) {
    for (auto x : rows[r]) key = key * 8 + x;
  }
  return {rank, key};
}

}  // namespace

std::vector<Mat2> ImageReport::matrices() const {
  const MatTables t(q);
  std::vector<Mat2> out;
  out.reserve(image.size());
  for (auto i : image) out.push_back(t.decode(i));
  return out;
}

bool ImageReport::contains(const Mat2& a) const {
  const MatTables t(q);
  return std::binary_search(image.begin(), image.end(), t.encode(a));
}

ImageReport enumerate_image(const FreePoly& p, std::uint64_t q, std::uint64_t tuple_budget, EnumeratePath path,
                            unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const FieldSpec f = FieldSpec::prime(q);
  const FreePoly pq = p.field() == f ? p : p.reduce_to(f);
  const MatTables t(q);
  const unsigned m = pq.vars();
  const std::uint32_t n = t.size();

  ImageReport r;
  r.q = q;
  r.m = m;
  r.multilinear = m > 0 && is_multilinear(pq);
  r.tuples = saturating_pow(n, m);
  if ((path == EnumeratePath::Multilinear || path == EnumeratePath::Orbit) && !r.multilinear) {
    throw UsageError("polynomial is not multilinear");
  }
  if (path == EnumeratePath::Orbit && m < 2) throw UsageError("orbit enumeration needs at least two variables");

  // conjugation-and-scaling orbit representatives, in index order
  std::vector<std::uint32_t> reps;
  auto orbit_reps = [&] {
    std::vector<char> seen(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      if (seen[a]) continue;
      reps.push_back(a);
      for (const auto& [g, ginv] : t.general_linear()) {
        const std::uint32_t b = t.mul(t.mul(g, a), ginv);
        for (std::uint64_t c = 1; c < q; ++c) seen[t.scale(c, b)] = 1;
      }
    }
  };

  const std::uint64_t linear_cost = r.multilinear ? std::min<std::uint64_t>(saturating_pow(n, m - 1), UINT64_MAX / 4) * 4 : 0;
  EnumeratePath chosen = path;
  if (path == EnumeratePath::Auto) {
    chosen = !r.multilinear ? EnumeratePath::Naive
             : (linear_cost <= tuple_budget || m < 2) ? EnumeratePath::Multilinear
                                                      : EnumeratePath::Orbit;
  }
  if (chosen == EnumeratePath::Orbit) orbit_reps();
  std::uint64_t outer = 0;
  switch (chosen) {
    case EnumeratePath::Naive:
      r.path = "naive";
      outer = r.tuples;
      r.evaluations = r.tuples;
      break;
    case EnumeratePath::Multilinear:
      r.path = "multilinear";
      outer = saturating_pow(n, m - 1);
      r.evaluations = linear_cost;
      break;
    default: {
      r.path = "multilinear-orbit";
      const std::uint64_t inner = saturating_pow(n, m - 2);
      outer = inner > UINT64_MAX / reps.size() ? UINT64_MAX : inner * reps.size();
      r.evaluations = outer > UINT64_MAX / 4 ? UINT64_MAX : outer * 4;
      break;
    }
  }
  if (r.evaluations > tuple_budget) {
    throw BudgetExceeded("exhaustive enumeration needs " + std::to_string(r.evaluations) +
                         " evaluations, over the budget of " + std::to_string(tuple_budget) +
                         "; the oracle does not sample");
  }
  const bool linear = chosen != EnumeratePath::Naive;

  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  std::vector<std::vector<std::uint32_t>> alphabets(m, all);
  std::array<std::uint32_t, 4> units{t.from_entries(1, 0, 0, 0), t.from_entries(0, 1, 0, 0), t.from_entries(0, 0, 1, 0),
                                     t.from_entries(0, 0, 0, 1)};
  if (linear) alphabets[m - 1].assign(units.begin(), units.end());
  if (chosen == EnumeratePath::Orbit) alphabets[0] = reps;

  const unsigned workers = worker_count(threads, outer);
  std::vector<std::vector<char>> marks(workers, std::vector<char>(n, 0));
  parallel_blocks(outer, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    IncrementalEval eval(pq, t);
    auto& mark = marks[w];
    if (!linear) {
      walk_tuples(alphabets, begin, end, eval, [&](std::uint64_t, std::uint32_t v) { mark[v] = 1; });
      return;
    }
    std::unordered_set<std::uint64_t> seen;
    std::array<std::array<std::uint32_t, 4>, 4> cols;
    walk_tuples(alphabets, std::uint64_t{begin} * 4, std::uint64_t{end} * 4, eval, [&](std::uint64_t idx, std::uint32_t v) {
      cols[idx % 4] = t.entries(v);
      if (idx % 4 != 3) return;
      auto [rank, key] = row_reduce(cols, 4, q);
      if (!seen.insert(key).second) return;
      // every F_q-combination of the basis rows
      std::uint64_t combos = saturating_pow(q, rank);
      for (std::uint64_t c = 0; c < combos; ++c) {
        std::array<std::uint64_t, 4> e{};
        std::uint64_t rest = c;
        for (unsigned r2 = 0; r2 < rank; ++r2) {
          const std::uint64_t coef = rest % q;
          rest /= q;
          for (unsigned j = 0; j < 4; ++j) e[j] = (e[j] + coef * cols[r2][j]) % q;
        }
        mark[t.from_entries(e[0], e[1], e[2], e[3])] = 1;
      }
    });
  });
  std::vector<char> in(n, 0);
  for (const auto& mk : marks) {
    for (std::uint32_t i = 0; i < n; ++i) in[i] |= mk[i];
  }
  if (m == 0) in[0] = 1;
  if (chosen == EnumeratePath::Orbit) {
    const std::vector<char> found = in;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (!found[a]) continue;
      for (const auto& [g, ginv] : t.general_linear()) {
        const std::uint32_t b = t.mul(t.mul(g, a), ginv);
        for (std::uint64_t c = 1; c < q; ++c) in[t.scale(c, b)] = 1;
      }
    }
  }

  SpanBuilder span(f);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!in[i]) continue;
    r.image.push_back(i);
    const Mat2 a = t.decode(i);
    ++r.class_counts[static_cast<std::size_t>(cone_classify(a).kind)];
    if (span.dimension() < 4) span.add(a);
  }
  r.span_tag = span.tag();
  r.span_dimension = span.dimension();
  r.contains_zero = in[0] != 0;
  r.conjugation_invariant = r.contains_zero;
  for (std::size_t gi = 0; gi < t.general_linear().size() && r.conjugation_invariant; ++gi) {
    const auto [g, ginv] = t.general_linear()[gi];
    for (auto a : r.image) {
      if (!in[t.mul(t.mul(g, a), ginv)]) {
        r.conjugation_invariant = false;
        break;
      }
    }
  }
  r.cone_closed = true;
  for (std::uint64_t c = 1; c < q && r.cone_closed; ++c) {
    for (auto a : r.image) {
      if (!in[t.scale(c, a)]) {
        r.cone_closed = false;
        break;
      }
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool chuang_property_check(const std::vector<Mat2>& s, std::uint64_t q) {
  const MatTables t(q);
  std::vector<char> in(t.size(), 0);
  for (const auto& a : s) in[t.encode(a)] = 1;
  if (!in[0]) return false;
  for (const auto& [g, ginv] : t.general_linear()) {
    for (std::uint32_t a = 0; a < t.size(); ++a) {
      if (in[a] && !in[t.mul(t.mul(g, a), ginv)]) return false;
    }
  }
  return true;
}

CrossCheckReport cross_check(const FreePoly& p, std::uint64_t q, std::uint64_t tuple_budget, unsigned threads) {
  if (!is_multilinear(p)) throw UsageError("cross_check needs a multilinear polynomial");
  CrossCheckReport r;
  r.q = q;
  const ImageReport img = enumerate_image(p, q, tuple_budget, EnumeratePath::Auto, threads);
  r.enumerated_tag = img.span_tag;
  r.enumerated_dimension = img.span_dimension;
  ClassifyOptions opts;
  opts.characteristic = q;
  opts.threads = threads;
  const ImageClass c = classify_multilinear(p, opts);
  r.classifier_verdict = c.verdict;
  r.classifier_tag = c.span_tag.value_or(SpanTag::Anomaly);
  r.classifier_dimension = c.span_dimension;
  r.e12_required = c.verdict == Verdict::SL2 || c.verdict == Verdict::Full;
  r.e12_present = img.contains(Mat2::unit(1, 2, FieldSpec::prime(q)));
  r.agree = r.enumerated_tag == r.classifier_tag && r.enumerated_dimension == r.classifier_dimension &&
            (!r.e12_required || r.e12_present);
  return r;
}

namespace {

const FreePoly& capelli4(const FieldSpec& f) {
  thread_local std::optional<FreePoly> cache;
  if (!cache || !(cache->field() == f)) cache = capelli_poly(4, f);
  return *cache;
}

Mat2 capelli_value(const Evaluator& eval, const std::array<Mat2, 4>& a, const std::array<Mat2, 3>& r) {
  const std::vector<Mat2> args{a[0], a[1], a[2], a[3], r[0], r[1], r[2]};
  return eval(args);
}

std::optional<Scalar> factor_with(const Evaluator& eval, const Mat2& base, const Mat2& t, const std::array<Mat2, 4>& a,
                                  const std::array<Mat2, 3>& r) {
  Mat2 sum = Mat2::zero(base.field());
  for (unsigned k = 0; k < 4; ++k) {
    auto ak = a;
    ak[k] = t * a[k];
    sum += capelli_value(eval, ak, r);
  }
  unsigned e = 0;
  while (e < 4 && base.entries()[e].is_zero()) ++e;
  if (e == 4) return std::nullopt;
  const Scalar c = sum.entries()[e] / base.entries()[e];
  if (sum != c * base) return std::nullopt;
  return c;
}

Mat2 random_matrix(std::mt19937_64& rng, const FieldSpec& f) {
  std::array<Scalar, 4> e;
  for (auto& x : e) x = Scalar::from_pair(f, uniform_below(rng, f.characteristic()), 0);
  return Mat2(e[0], e[1], e[2], e[3]);
}

}  // namespace

std::optional<Scalar> alternating_trace_factor(const Mat2& t, const std::array<Mat2, 4>& a,
                                               const std::array<Mat2, 3>& r) {
  const FieldSpec& f = t.field();
  const Evaluator eval(capelli4(f));
  const Mat2 base = capelli_value(eval, a, r);
  if (base.is_zero()) throw UsageError("degenerate sample: the Capelli value vanishes");
  return factor_with(eval, base, t, a, r);
}

AlternatingTraceReport verify_alternating_trace(std::uint64_t prime, unsigned trials, std::uint64_t seed) {
  const FieldSpec f = FieldSpec::prime(prime);
  const Evaluator eval(capelli4(f));
  const Scalar two = Scalar::from_int(f, 2);
  AlternatingTraceReport rep;
  rep.prime = prime;
  rep.seed = seed;
  rep.trials = trials;
  std::uint64_t draw = 0;
  for (unsigned i = 0; i < trials; ++i) {
    for (;;) {
      if (rep.degenerate_resamples > 1000 + 100 * trials) throw Error("too many degenerate samples");
      auto rng = trial_rng(seed, draw++);
      const Mat2 t1 = random_matrix(rng, f), t2 = random_matrix(rng, f);
      std::array<Mat2, 4> a{random_matrix(rng, f), random_matrix(rng, f), random_matrix(rng, f), random_matrix(rng, f)};
      std::array<Mat2, 3> r{random_matrix(rng, f), random_matrix(rng, f), random_matrix(rng, f)};
      const Mat2 base = capelli_value(eval, a, r);
      if (base.is_zero()) {
        ++rep.degenerate_resamples;
        continue;
      }
      const auto c1 = factor_with(eval, base, t1, a, r);
      const auto c2 = factor_with(eval, base, t2, a, r);
      const auto c12 = factor_with(eval, base, t1 + t2, a, r);
      if (c1) {
        ++rep.proportional;
        if (*c1 == two * trace(t1)) ++rep.factor_is_twice_trace;
        if (*c1 == trace(t1)) ++rep.factor_is_trace;
        if (rep.samples.size() < 5) rep.samples.push_back({t1, *c1, trace(t1)});
      }
      if (c1 && c2 && c12 && *c12 == *c1 + *c2) ++rep.linear_in_t;
      break;
    }
  }
  return rep;
}

}  // namespace polimage
