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

#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "eval.hpp"
#include "generic.hpp"

using namespace polimage;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

FreePoly P(const char* text, unsigned vars = 0, const FieldSpec& f = kQ) { return parse_poly(text, vars, f); }

FreePoly random_poly(std::mt19937_64& rng, unsigned vars, unsigned max_len, const FieldSpec& f) {
  FreePoly p(vars, f);
  const unsigned nterms = 1 + rng() % 4;
  for (unsigned t = 0; t < nterms; ++t) {
    Word w(1 + rng() % max_len);
    for (auto& letter : w) letter = 1 + static_cast<std::uint32_t>(rng() % vars);
    p.add_term(w, Scalar::from_int(f, static_cast<long long>(rng() % 5) - 2));
  }
  return p;
}

Mat2 random_mat(std::mt19937_64& rng, const FieldSpec& f) {
  auto r = [&] { return static_cast<long long>(rng() % 7) - 3; };
  return Mat2::from_ints(f, r(), r(), r(), r());
}

// Substitute the concrete matrices into the generic evaluation.
Mat2 specialize(const GenericMat& g, const std::vector<Mat2>& args) {
  std::vector<Scalar> point;
  for (const auto& a : args) {
    for (const auto& e : a.entries()) point.push_back(e);
  }
  const FieldSpec f = args.front().field();
  while (point.size() < kMaxIndeterminates) point.push_back(Scalar::zero(f));
  return Mat2(g(0, 0).evaluate(point), g(0, 1).evaluate(point), g(1, 0).evaluate(point), g(1, 1).evaluate(point));
}

}  // namespace

TEST_CASE("evaluation examples") {
  const FreePoly c = P("[x1,x2]");
  const std::vector<Mat2> a{Mat2::unit(1, 2, kQ), Mat2::unit(2, 1, kQ)};
  CHECK(evaluate(c, a) == Mat2::parse("1,0;0,-1", kQ));
  const FreePoly withconst = P("x1 + 3");
  CHECK(evaluate(withconst, std::vector<Mat2>{Mat2::zero(kQ)}) == Mat2::parse("3,0;0,3", kQ));
  // rational coefficients and arguments
  const FreePoly half = P("1/2*x1*x1");
  CHECK(evaluate(half, std::vector<Mat2>{Mat2::parse("1/3,0;0,1", kQ)}) == Mat2::parse("1/18,0;0,1/2", kQ));
  // large entries overflow int64 and fall back to exact arithmetic
  const FreePoly big = P("x1^8");
  const Mat2 x = Mat2::from_ints(kQ, 100000, 1, 0, 100000);
  const Mat2 r = evaluate(big, std::vector<Mat2>{x});
  CHECK(r(0, 0).rational() == mpq_class("10000000000000000000000000000000000000000"));
  CHECK(r(0, 1).rational() == mpq_class("800000000000000000000000000000000000"));
}

TEST_CASE("fast paths agree with exact evaluation") {
  std::mt19937_64 rng(3);
  for (const FieldSpec& f : {kQ, FieldSpec::prime(7), FieldSpec::prime(4294967291ULL)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const FreePoly p = random_poly(rng, 3, 5, f);
      std::vector<Mat2> args{random_mat(rng, f), random_mat(rng, f), random_mat(rng, f)};
      ExactRing ring{f};
      WordTrie trie(p);
      std::vector<Scalar> coeffs;
      for (const auto& [node, c] : trie.terms()) coeffs.push_back(c);
      std::vector<Mat2> scratch;
      const Mat2 slow = evaluate_trie(trie, std::span<const Scalar>(coeffs), std::span<const Mat2>(args), ring, scratch);
      CHECK(evaluate(p, args) == slow);
    }
  }
}

TEST_CASE("generic_eval examples") {
  const GenericMat x = generic_eval(P("x1"));
  for (unsigned r = 0; r < 2; ++r) {
    for (unsigned c = 0; c < 2; ++c) {
      CHECK(x(r, c) == ComPoly::indeterminate(generic_index(1, r, c), 4, kQ));
    }
  }
  CHECK(is_trace_zero(generic_eval(P("[x1,x2]"))));
  CHECK(is_identically_zero(generic_eval(standard_poly(4, kQ))));
  const GenericMat sq = generic_eval(P("[x1,x2]^2"));
  CHECK(is_central(sq));
  CHECK_FALSE(is_identically_zero(sq));
  const GenericMat cube = generic_eval(P("[x1,x2]^3"));
  CHECK(is_trace_zero(cube));
  CHECK_FALSE(is_central(cube));
}

TEST_CASE("generic_eval respects the term budget") {
  CHECK_THROWS_AS(generic_eval(P("[x1,x2]^3"), 50), BudgetExceeded);
  try {
    generic_eval(P("[x1,x2]^3"), 50);
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("probabilistic") != std::string::npos);
  }
}

TEST_CASE("proportionality examples") {
  const GenericMat x = generic_eval(P("x1"));
  const ComPoly tr = generic_trace(x);
  const Proportionality np = proportionality(tr * tr, generic_det(x));
  CHECK_FALSE(np.proportional);
  CHECK_FALSE(np.witnesses.empty());

  const GenericMat c = generic_eval(P("[x1,x2]"));
  const Proportionality zero = proportionality(generic_trace(c), generic_det(c));
  CHECK(zero.proportional);
  CHECK(zero.factor.is_zero());

  const ComPoly d = generic_det(x);
  const Proportionality two = proportionality(d.scaled(Scalar::from_int(kQ, 2)), d);
  CHECK(two.proportional);
  CHECK(two.factor.to_string() == "2");

  const ComPoly z(4, kQ);
  CHECK(proportionality(z, z).degenerate);
  CHECK(proportionality(z, z).proportional);
  CHECK(proportionality(d, z).degenerate);
  CHECK_FALSE(proportionality(d, z).proportional);
}

TEST_CASE("property: generic_eval is a ring homomorphism") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const FreePoly p = random_poly(rng, 2, 3, kQ);
    const FreePoly q = random_poly(rng, 2, 3, kQ);
    const GenericMat gp = generic_eval(p), gq = generic_eval(q);
    const GenericMat sum = generic_eval(p + q);
    const GenericMat prod = generic_eval(p * q);
    for (unsigned r = 0; r < 2; ++r) {
      for (unsigned c = 0; c < 2; ++c) {
        CHECK(sum(r, c) == gp(r, c) + gq(r, c));
        CHECK(prod(r, c) == gp(r, 0) * gq(0, c) + gp(r, 1) * gq(1, c));
      }
    }
    CHECK(is_trace_zero(generic_eval(commutator(p, q))));
  }
}

TEST_CASE("property: specialization matches direct evaluation") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const FreePoly p = random_poly(rng, 3, 4, kQ);
    const GenericMat g = generic_eval(p);
    std::vector<Mat2> args{random_mat(rng, kQ), random_mat(rng, kQ), random_mat(rng, kQ)};
    CHECK(specialize(g, args) == evaluate(p, args));
  }
  // exhaustive over F2, m = 2, degree <= 3
  const FieldSpec f2 = FieldSpec::prime(2);
  for (const char* text : {"x1*x2 + x2*x2*x1", "[x1,x2]*x1", "x1^3 + x2"}) {
    const FreePoly p = P(text, 2, f2);
    const GenericMat g = generic_eval(p);
    for (int a = 0; a < 16; ++a) {
      for (int b = 0; b < 16; ++b) {
        std::vector<Mat2> args{Mat2::from_ints(f2, a & 1, a >> 1 & 1, a >> 2 & 1, a >> 3 & 1),
                               Mat2::from_ints(f2, b & 1, b >> 1 & 1, b >> 2 & 1, b >> 3 & 1)};
        CHECK(specialize(g, args) == evaluate(p, args));
      }
    }
  }
}

TEST_CASE("property: multilinear input gives entries of degree <= 1 per variable block") {
  for (const FreePoly& p : {standard_poly(3, kQ), capelli_poly(2, kQ), P("x1*x2*x3 + 2*x3*x1*x2")}) {
    const GenericMat g = generic_eval(p);
    for (const auto& e : g.entry) {
      for (const auto& t : e.terms()) {
        for (unsigned v = 0; v < p.vars(); ++v) {
          unsigned block = 0;
          for (unsigned k = 0; k < 4; ++k) block += t.exps[4 * v + k];
          CHECK(block == 1);
        }
      }
    }
  }
}
