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

#include "eval.hpp"

#include <map>

#include "errors.hpp"

namespace polimage {

WordTrie::WordTrie(const FreePoly& p) : vars_(p.vars()) {
  nodes_.push_back({0, 0});
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> children;
  for (const auto& [w, c] : p.terms()) {
    std::uint32_t node = 0;
    for (auto letter : w) {
      auto [it, inserted] = children.try_emplace({node, letter}, static_cast<std::uint32_t>(nodes_.size()));
      if (inserted) nodes_.push_back({node, letter});
      node = it->second;
    }
    terms_.emplace_back(node, c);
  }
}

Evaluator::Evaluator(const FreePoly& p) : poly_(p), trie_(p) {
  const FieldSpec& f = p.field();
  for (const auto& [node, c] : trie_.terms()) exact_coeffs_.push_back(c);
  if (!f.is_rational()) {
    if (f.is_extension()) throw UsageError("evaluation over F_p^2 coefficients is not supported");
    for (const auto& c : exact_coeffs_) mod_coeffs_.push_back(c.residue());
    return;
  }
  for (const auto& c : exact_coeffs_) common_denominator_ = lcm(common_denominator_, c.rational().get_den());
  int_ok_ = true;
  for (const auto& c : exact_coeffs_) {
    mpz_class n = c.rational().get_num() * (common_denominator_ / c.rational().get_den());
    if (!n.fits_slong_p()) {
      int_ok_ = false;
      break;
    }
    int_coeffs_.push_back(n.get_si());
  }
}

Mat2 Evaluator::exact(std::span<const Mat2> args) const {
  ExactRing ring{poly_.field()};
  return evaluate_trie(trie_, std::span<const Scalar>(exact_coeffs_), args, ring, exact_scratch_);
}

Mat2 Evaluator::operator()(std::span<const Mat2> args) const {
  if (args.size() < poly_.vars()) throw UsageError("not enough arguments for evaluation");
  const FieldSpec& f = poly_.field();
  for (const auto& a : args) {
    if (!(a.field() == f)) throw UsageError("argument field " + a.field().name() + " differs from " + f.name());
  }
  if (!f.is_rational()) {
    ModRing ring{f.characteristic()};
    std::vector<ModRing::Matrix> margs;
    margs.reserve(args.size());
    for (const auto& a : args) {
      margs.push_back({a(0, 0).residue(), a(0, 1).residue(), a(1, 0).residue(), a(1, 1).residue()});
    }
    auto v = evaluate_trie(trie_, std::span<const std::uint64_t>(mod_coeffs_),
                           std::span<const ModRing::Matrix>(margs), ring, mod_scratch_);
    return Mat2(Scalar::from_pair(f, v[0], 0), Scalar::from_pair(f, v[1], 0), Scalar::from_pair(f, v[2], 0),
                Scalar::from_pair(f, v[3], 0));
  }
  if (int_ok_) {
    std::vector<IntRing::Matrix> iargs;
    iargs.reserve(args.size());
    bool integral = true;
    for (const auto& a : args) {
      IntRing::Matrix m{};
      for (std::size_t k = 0; k < 4 && integral; ++k) {
        const mpq_class& q = a.entries()[k].rational();
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
          integral = false;
        } else {
          m[k] = q.get_num().get_si();
        }
      }
      iargs.push_back(m);
    }
    if (integral) {
      try {
        auto v = evaluate_trie(trie_, std::span<const std::int64_t>(int_coeffs_),
                               std::span<const IntRing::Matrix>(iargs), IntRing{}, int_scratch_);
        auto entry = [&](std::int64_t x) {
          return Scalar::from_rational(f, mpq_class(mpz_class(static_cast<long>(x)), common_denominator_));
        };
        return Mat2(entry(v[0]), entry(v[1]), entry(v[2]), entry(v[3]));
      } catch (const IntRing::IntOverflow&) {
        // fall through to rationals
      }
    }
  }
  return exact(args);
}

Mat2 evaluate(const FreePoly& p, std::span<const Mat2> args) { return Evaluator(p)(args); }

}  // namespace polimage
