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

#include "freepoly.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace polimage {

namespace {

int permutation_sign(const std::vector<std::uint32_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

FreePoly FreePoly::variable(unsigned index, unsigned vars, const FieldSpec& field) {
  if (index == 0 || index > vars) throw UsageError("variable index out of range");
  FreePoly p(vars, field);
  p.terms_.emplace(Word{index}, Scalar::one(field));
  return p;
}

FreePoly FreePoly::constant(const Scalar& c, unsigned vars) {
  FreePoly p(vars, c.field());
  if (!c.is_zero()) p.terms_.emplace(Word{}, c);
  return p;
}

unsigned FreePoly::degree() const {
  return terms_.empty() ? 0 : static_cast<unsigned>(terms_.rbegin()->first.size());
}

unsigned FreePoly::max_variable() const {
  std::uint32_t m = 0;
  for (const auto& [w, c] : terms_) {
    for (auto v : w) m = std::max(m, v);
  }
  return m;
}

Scalar FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreePoly::require_compatible(const FreePoly& o) const {
  if (!(field_ == o.field_)) {
    throw UsageError("mixed-field polynomials: " + field_.name() + " and " + o.field_.name());
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  require_compatible(o);
  vars_ = std::max(vars_, o.vars_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  require_compatible(o);
  vars_ = std::max(vars_, o.vars_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const FreePoly& o) {
  require_compatible(o);
  FreePoly out(std::max(vars_, o.vars_), field_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(w, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

FreePoly FreePoly::operator-() const { return scaled(Scalar::from_int(field_, -1)); }

FreePoly FreePoly::scaled(const Scalar& c) const {
  FreePoly out(vars_, field_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
  return out;
}

FreePoly FreePoly::pow(unsigned k) const {
  FreePoly out = constant(Scalar::one(field_), vars_);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

FreePoly FreePoly::with_vars(unsigned vars) const {
  if (max_variable() > vars) throw UsageError("variable count does not cover all indices used");
  FreePoly out = *this;
  out.vars_ = vars;
  return out;
}

FreePoly FreePoly::reduce_to(const FieldSpec& field) const {
  FreePoly out(vars_, field);
  for (const auto& [w, c] : terms_) out.add_term(w, c.reduce_to(field));
  return out;
}

FreePoly FreePoly::substitute(const std::vector<FreePoly>& images) const {
  if (images.size() < max_variable()) throw UsageError("substitution does not cover every variable");
  unsigned target_vars = 0;
  for (const auto& img : images) target_vars = std::max(target_vars, img.vars());
  FreePoly out(target_vars, field_);
  for (const auto& [w, c] : terms_) {
    FreePoly term = constant(c, target_vars);
    for (auto v : w) term *= images[v - 1];
    out += term;
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += 'x';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    // ℚ coefficients carry their own sign; finite-field residues are written as is.
    bool negative = field_.is_rational() && c.rational() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      s += mag.to_string();
    } else {
      if (!mag.is_one()) s += mag.to_string() + "*";
      s += word_to_string(w);
    }
  }
  return s;
}

MultiDegree multidegree(const Word& w, unsigned vars) {
  MultiDegree d(vars, 0);
  for (auto v : w) {
    if (v == 0 || v > vars) throw UsageError("variable index out of range");
    ++d[v - 1];
  }
  return d;
}

long long weighted_degree(const Word& w, const WeightVector& weights) {
  long long d = 0;
  for (auto v : w) {
    if (v == 0 || v > weights.size()) throw UsageError("weight vector shorter than variable count");
    d += weights[v - 1];
  }
  return d;
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly standard_poly(unsigned k, const FieldSpec& field) {
  if (k == 0) throw UsageError("standard polynomial needs k >= 1");
  FreePoly p(k, field);
  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 1U);
  do {
    p.add_term(perm, Scalar::from_int(field, permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

FreePoly capelli_poly(unsigned t, const FieldSpec& field) {
  if (t == 0) throw UsageError("Capelli polynomial needs t >= 1");
  const unsigned vars = 2 * t - 1;
  FreePoly p(vars, field);
  std::vector<std::uint32_t> perm(t);
  std::iota(perm.begin(), perm.end(), 1U);
  do {
    Word w;
    for (unsigned i = 0; i < t; ++i) {
      w.push_back(perm[i]);
      if (i + 1 < t) w.push_back(t + i + 1);
    }
    p.add_term(w, Scalar::from_int(field, permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

bool is_multilinear(const FreePoly& p) {
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != p.vars()) return false;
    std::vector<bool> seen(p.vars() + 1, false);
    for (auto v : w) {
      if (v == 0 || v > p.vars() || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

std::optional<MultiDegree> common_multidegree(const FreePoly& p) {
  std::optional<MultiDegree> d;
  for (const auto& [w, c] : p.terms()) {
    MultiDegree dw = multidegree(w, p.vars());
    if (!d) {
      d = std::move(dw);
    } else if (*d != dw) {
      return std::nullopt;
    }
  }
  if (!d) d = MultiDegree(p.vars(), 0);
  return d;
}

SemiHomogeneity semi_homogeneous_check(const FreePoly& p, const WeightVector& w) {
  if (w.size() < p.max_variable()) throw UsageError("weight vector shorter than variable count");
  SemiHomogeneity r;
  r.ok = true;
  bool first = true;
  for (const auto& [word, c] : p.terms()) {
    const long long d = weighted_degree(word, w);
    if (first) {
      r.degree = d;
      r.first = word;
      r.first_degree = d;
      first = false;
    } else if (d != r.degree) {
      r.ok = false;
      r.second = word;
      r.second_degree = d;
      return r;
    }
  }
  return r;
}

namespace {

using RatVec = std::vector<mpq_class>;

// Rank of a set of rational vectors.
std::size_t rational_rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

WeightVector to_primitive_integers(const RatVec& v) {
  mpz_class l(1);
  for (const auto& x : v) l = lcm(l, x.get_den());
  std::vector<mpz_class> ints;
  mpz_class g(0);
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    g = gcd(g, n);
    ints.push_back(n);
  }
  WeightVector out;
  int sign = 0;
  for (auto& n : ints) {
    if (g != 0) n /= g;
    if (sign == 0 && n != 0) sign = n > 0 ? 1 : -1;
  }
  for (auto& n : ints) {
    if (!n.fits_slong_p()) throw UsageError("weight entry too large");
    out.push_back(sign * n.get_si());
  }
  return out;
}

bool strictly_positive(const WeightVector& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](long long x) { return x > 0; });
}

}  // namespace

WeightSolutions infer_weights(const FreePoly& p) {
  const unsigned m = p.vars();
  WeightSolutions out;
  if (m == 0) return out;

  // Rows: multidegree(w_j) - multidegree(w_0); solutions are the rational nullspace.
  std::vector<RatVec> rows;
  std::optional<MultiDegree> base;
  for (const auto& [w, c] : p.terms()) {
    MultiDegree d = multidegree(w, m);
    if (!base) {
      base = d;
      continue;
    }
    RatVec row(m);
    for (unsigned i = 0; i < m; ++i) row[i] = static_cast<long>(d[i]) - static_cast<long>((*base)[i]);
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (unsigned c = 0; c < m && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const mpq_class lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c];
      for (unsigned k = 0; k < m; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++rank;
  }
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<WeightVector> rref_basis;
  for (unsigned f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m, mpq_class(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = -rows[r][f];
    }
    rref_basis.push_back(to_primitive_integers(v));
  }

  // All-ones first when it solves the system, then the RREF vectors that extend the span.
  const WeightVector ones(m, 1);
  const bool ones_solves = semi_homogeneous_check(p, ones).ok;
  std::vector<RatVec> chosen;
  auto try_add = [&](const WeightVector& w) {
    RatVec v;
    for (long long x : w) v.emplace_back(static_cast<long>(x));
    chosen.push_back(v);
    if (rational_rank(chosen) < chosen.size()) {
      chosen.pop_back();
      return;
    }
    out.basis.push_back(w);
  };
  if (ones_solves) try_add(ones);
  for (const auto& w : rref_basis) try_add(w);

  if (ones_solves) {
    out.positive = ones;
  } else {
    for (const auto& w : out.basis) {
      if (strictly_positive(w)) {
        out.positive = w;
        break;
      }
    }
    if (!out.positive && !out.basis.empty()) {
      WeightVector sum(m, 0);
      for (const auto& w : out.basis) {
        for (unsigned i = 0; i < m; ++i) sum[i] += w[i];
      }
      if (strictly_positive(sum)) out.positive = sum;
    }
  }
  return out;
}

FreePoly multilinearize(const FreePoly& p) {
  auto md = common_multidegree(p);
  if (!md) throw UsageError("multilinearize requires a completely homogeneous polynomial");
  const unsigned m = p.vars();
  const MultiDegree& d = *md;

  // copies[i] = new indices standing in for x_{i+1}.
  std::vector<std::vector<std::uint32_t>> copies(m);
  std::uint32_t next = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (d[i] > 0) copies[i].push_back(++next);
  }
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned k = 1; k < d[i]; ++k) copies[i].push_back(++next);
  }
  const unsigned new_vars = next;

  FreePoly out(new_vars, p.field());
  for (const auto& [w, c] : p.terms()) {
    // positions[i] = where x_{i+1} occurs in w; each occurrence gets a distinct copy.
    std::vector<std::vector<std::size_t>> positions(m);
    for (std::size_t k = 0; k < w.size(); ++k) positions[w[k] - 1].push_back(k);
    std::vector<std::vector<std::uint32_t>> assignment = copies;
    for (auto& a : assignment) std::sort(a.begin(), a.end());

    // Iterate over the product of permutations of each variable's copies.
    while (true) {
      Word nw(w.size());
      for (unsigned i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < positions[i].size(); ++k) nw[positions[i][k]] = assignment[i][k];
      }
      out.add_term(nw, c);
      unsigned i = 0;
      for (; i < m; ++i) {
        if (std::next_permutation(assignment[i].begin(), assignment[i].end())) break;
      }
      if (i == m) break;
    }
  }
  return out;
}

std::vector<std::pair<long long, FreePoly>> weighted_parts(const FreePoly& p, const WeightVector& w) {
  std::map<long long, FreePoly> parts;
  for (const auto& [word, c] : p.terms()) {
    const long long d = weighted_degree(word, w);
    auto it = parts.try_emplace(d, FreePoly(p.vars(), p.field())).first;
    it->second.add_term(word, c);
  }
  return {parts.begin(), parts.end()};
}

}  // namespace polimage
