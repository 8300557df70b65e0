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

#include "generic.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>

#include "errors.hpp"
#include "eval.hpp"

namespace polimage {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : e) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

ComPoly::ComPoly(unsigned indeterminates, FieldSpec field) : n_(indeterminates), field_(field) {
  if (indeterminates > kMaxIndeterminates) throw UsageError("too many indeterminates for generic evaluation");
}

ComPoly ComPoly::constant(const Scalar& c, unsigned indeterminates) {
  ComPoly p(indeterminates, c.field());
  if (!c.is_zero()) p.terms_.push_back({Exponents{}, c});
  return p;
}

ComPoly ComPoly::indeterminate(unsigned index, unsigned indeterminates, const FieldSpec& field) {
  if (index >= indeterminates) throw UsageError("indeterminate index out of range");
  ComPoly p(indeterminates, field);
  Exponents e{};
  e[index] = 1;
  p.terms_.push_back({e, Scalar::one(field)});
  return p;
}

Scalar ComPoly::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return grlex_less(t.exps, x); });
  if (it != terms_.end() && it->exps == e) return it->coeff;
  return Scalar::zero(field_);
}

ComPoly ComPoly::merged(const ComPoly& o, bool subtract) const {
  if (!(field_ == o.field_)) throw UsageError("mixed-field polynomials");
  ComPoly out(std::max(n_, o.n_), field_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_less(terms_[i].exps, o.terms_[j].exps))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || grlex_less(o.terms_[j].exps, terms_[i].exps)) {
      out.terms_.push_back({o.terms_[j].exps, subtract ? -o.terms_[j].coeff : o.terms_[j].coeff});
      ++j;
    } else {
      Scalar c = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.terms_.push_back({terms_[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

ComPoly& ComPoly::operator+=(const ComPoly& o) { return *this = merged(o, false); }
ComPoly& ComPoly::operator-=(const ComPoly& o) { return *this = merged(o, true); }

ComPoly ComPoly::scaled(const Scalar& c) const {
  ComPoly out(n_, field_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exps, t.coeff * c});
  return out;
}

ComPoly ComPoly::multiply(const ComPoly& a, const ComPoly& b, std::size_t budget) {
  if (!(a.field_ == b.field_)) throw UsageError("mixed-field polynomials");
  ComPoly out(std::max(a.n_, b.n_), a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  if (budget != 0 && a.size() * b.size() > kProductWorkFactor * budget) {
    throw BudgetExceeded("symbolic product of " + std::to_string(a.size()) + " by " + std::to_string(b.size()) +
                         " terms exceeds the work limit of " + std::to_string(kProductWorkFactor * budget) +
                         " term pairs; use probabilistic mode");
  }
  std::unordered_map<Exponents, Scalar, ExponentsHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1 << 20));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Exponents e;
      for (unsigned k = 0; k < kMaxIndeterminates; ++k) {
        const unsigned s = unsigned{ta.exps[k]} + tb.exps[k];
        if (s > 255) throw UsageError("exponent overflow in generic evaluation");
        e[k] = static_cast<std::uint8_t>(s);
      }
      auto [it, inserted] = acc.try_emplace(e, ta.coeff * tb.coeff);
      if (!inserted) it->second += ta.coeff * tb.coeff;
      if (budget != 0 && acc.size() > budget) throw BudgetExceeded("symbolic term budget of " + std::to_string(budget) + " exceeded; use probabilistic mode");
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({e, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& x, const Term& y) { return grlex_less(x.exps, y.exps); });
  return out;
}

ComPoly ComPoly::times_indeterminate(unsigned index) const {
  if (index >= n_) throw UsageError("indeterminate index out of range");
  ComPoly out = *this;
  for (auto& t : out.terms_) {
    if (t.exps[index] == 255) throw UsageError("exponent overflow in generic evaluation");
    ++t.exps[index];
  }
  return out;
}

Scalar ComPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() < n_) throw UsageError("evaluation point too short");
  Scalar sum = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (unsigned k = 0; k < n_; ++k) {
      if (t.exps[k] != 0) v *= point[k].pow(t.exps[k]);
    }
    sum += v;
  }
  return sum;
}

bool operator==(const ComPoly& a, const ComPoly& b) {
  if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::size_t GenericMat::term_count() const {
  std::size_t n = 0;
  for (const auto& e : entry) n += e.size();
  return n;
}

namespace {

class GenericEvaluator {
 public:
  GenericEvaluator(const FreePoly& p, std::size_t budget)
      : trie_(p), n_(4 * p.vars()), field_(p.field()), budget_(budget) {
    const auto& nodes = trie_.nodes();
    children_.resize(nodes.size());
    for (std::uint32_t k = 1; k < nodes.size(); ++k) children_[nodes[k].parent].push_back(k);
    coeff_of_node_.assign(nodes.size(), std::nullopt);
    for (const auto& [node, c] : trie_.terms()) coeff_of_node_[node] = c;
  }

  GenericMat run() {
    GenericMat acc = zero();
    GenericMat id = zero();
    id.entry[0] = ComPoly::constant(Scalar::one(field_), n_);
    id.entry[3] = ComPoly::constant(Scalar::one(field_), n_);
    std::size_t live = 0;
    visit(0, id, acc, live);
    return acc;
  }

 private:
  GenericMat zero() const {
    GenericMat g;
    for (auto& e : g.entry) e = ComPoly(n_, field_);
    return g;
  }

  // value·X_var: entry (r, c) = value(r,0)·u_{0c} + value(r,1)·u_{1c}.
  GenericMat times_generic(const GenericMat& value, unsigned var) const {
    GenericMat out;
    for (unsigned r = 0; r < 2; ++r) {
      for (unsigned c = 0; c < 2; ++c) {
        out.entry[2 * r + c] = value(r, 0).times_indeterminate(generic_index(var, 0, c)) +
                                 value(r, 1).times_indeterminate(generic_index(var, 1, c));
      }
    }
    return out;
  }

  void visit(std::uint32_t node, const GenericMat& value, GenericMat& acc, std::size_t live) {
    if (coeff_of_node_[node]) {
      for (unsigned k = 0; k < 4; ++k) acc.entry[k] += value.entry[k].scaled(*coeff_of_node_[node]);
      check(acc.term_count() + live);
    }
    for (auto child : children_[node]) {
      GenericMat next = times_generic(value, trie_.nodes()[child].letter);
      const std::size_t here = next.term_count();
      check(acc.term_count() + live + here);
      visit(child, next, acc, live + here);
    }
  }

  void check(std::size_t stored) const {
    if (budget_ != 0 && stored > budget_) {
      throw BudgetExceeded("symbolic term budget of " + std::to_string(budget_) +
                           " exceeded; use probabilistic mode");
    }
  }

  WordTrie trie_;
  unsigned n_;
  FieldSpec field_;
  std::size_t budget_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::vector<std::optional<Scalar>> coeff_of_node_;
};

}  // namespace

GenericMat generic_eval(const FreePoly& p, std::size_t term_budget) {
  if (4 * p.vars() > kMaxIndeterminates) throw UsageError("generic evaluation supports at most 16 variables");
  if (p.degree() > 255) throw UsageError("generic evaluation supports degree at most 255");
  return GenericEvaluator(p, term_budget).run();
}

bool is_identically_zero(const GenericMat& g) {
  return std::all_of(g.entry.begin(), g.entry.end(), [](const ComPoly& e) { return e.is_zero(); });
}

bool is_central(const GenericMat& g) { return g(0, 1).is_zero() && g(1, 0).is_zero() && g(0, 0) == g(1, 1); }

bool is_trace_zero(const GenericMat& g) { return generic_trace(g).is_zero(); }

ComPoly generic_trace(const GenericMat& g) { return g(0, 0) + g(1, 1); }

ComPoly generic_det(const GenericMat& g, std::size_t term_budget) {
  return ComPoly::multiply(g(0, 0), g(1, 1), term_budget) - ComPoly::multiply(g(0, 1), g(1, 0), term_budget);
}

Proportionality proportionality(const ComPoly& tau, const ComPoly& delta) {
  Proportionality r;
  r.factor = Scalar::zero(tau.field());
  if (delta.is_zero()) {
    r.degenerate = true;
    r.proportional = tau.is_zero();
    if (!tau.is_zero()) r.witnesses.push_back(tau.leading().exps);
    return r;
  }
  const auto& lead = delta.leading();
  const Scalar c = tau.coefficient(lead.exps) / lead.coeff;
  const ComPoly rest = tau - delta.scaled(c);
  if (rest.is_zero()) {
    r.proportional = true;
    r.factor = c;
    return r;
  }
  r.witnesses.push_back(rest.leading().exps);
  r.witnesses.push_back(lead.exps);
  return r;
}

}  // namespace polimage
