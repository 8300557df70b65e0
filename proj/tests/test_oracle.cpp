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
#include "oracle.hpp"
#include "rng.hpp"

using namespace polimage;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

FreePoly P(const char* text, unsigned vars = 0, const FieldSpec& f = kQ) { return parse_poly(text, vars, f); }

Mat2 random_matrix(std::mt19937_64& rng, const FieldSpec& f) {
  auto e = [&] { return static_cast<long long>(uniform_below(rng, f.characteristic())); };
  return Mat2::from_ints(f, e(), e(), e(), e());
}

}  // namespace

TEST_CASE("matrix tables agree with exact arithmetic") {
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
    const MatTables t(q);
    CHECK(t.size() == q * q * q * q);
    CHECK(t.general_linear().size() == (q * q - 1) * (q * q - q));
    std::mt19937_64 rng(q);
    const FieldSpec f = FieldSpec::prime(q);
    for (int trial = 0; trial < 200; ++trial) {
      const Mat2 a = random_matrix(rng, f), b = random_matrix(rng, f);
      CHECK(t.decode(t.encode(a)) == a);
      CHECK(t.decode(t.mul(t.encode(a), t.encode(b))) == a * b);
      CHECK(t.decode(t.add(t.encode(a), t.encode(b))) == a + b);
    }
    for (const auto& [g, ginv] : t.general_linear()) CHECK(t.mul(g, ginv) == t.identity());
  }
  CHECK_THROWS_AS(MatTables(11), UsageError);
}

TEST_CASE("enumerate_image examples") {
  const ImageReport c = enumerate_image(P("[x1,x2]"), 2);
  CHECK(c.image.size() == 8);
  CHECK(c.span_tag == SpanTag::SL2);
  for (const auto& a : c.matrices()) CHECK(trace(a).is_zero());
  const ImageReport s4 = enumerate_image(standard_poly(4, kQ), 2);
  CHECK(s4.image == std::vector<std::uint32_t>{0});
  CHECK(s4.tuples == 65536);
  const ImageReport x = enumerate_image(P("x1"), 3);
  CHECK(x.image.size() == 81);
  CHECK(x.span_tag == SpanTag::Full);
}

TEST_CASE("commutator image is exactly the trace-zero matrices over F2 and F3") {
  for (std::uint64_t q : {2ULL, 3ULL}) {
    const ImageReport r = enumerate_image(P("[x1,x2]"), q);
    const MatTables t(q);
    std::vector<std::uint32_t> sl2;
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      if (trace(t.decode(i)).is_zero()) sl2.push_back(i);
    }
    CHECK(r.image == sl2);
    CHECK(r.image.size() == q * q * q);
  }
}

TEST_CASE("naive, multilinear and orbit paths give the same image") {
  const std::vector<FreePoly> polys{P("[x1,x2]"), P("x1"), P("x1*x2 + x2*x1"), capelli_poly(2, kQ),
                                    P("x1*x2*x3 - 2*x3*x2*x1"), standard_poly(3, kQ)};
  for (std::uint64_t q : {2ULL, 3ULL}) {
    for (const auto& p : polys) {
      if (q == 3 && p.vars() == 3) continue;  // naive 3^12 tuples: covered by q = 2
      CAPTURE(p.to_string());
      const ImageReport naive = enumerate_image(p, q, kDefaultTupleBudget, EnumeratePath::Naive);
      const ImageReport lin = enumerate_image(p, q, kDefaultTupleBudget, EnumeratePath::Multilinear);
      CHECK(naive.path == "naive");
      CHECK(lin.path == "multilinear");
      CHECK(naive.image == lin.image);
      if (p.vars() >= 2) CHECK(enumerate_image(p, q, kDefaultTupleBudget, EnumeratePath::Orbit).image == lin.image);
    }
  }
  const FreePoly lin4 = multilinearize(P("[x1,x2]^2"));
  CHECK(enumerate_image(lin4, 3, kDefaultTupleBudget, EnumeratePath::Orbit).image ==
        enumerate_image(lin4, 3, kDefaultTupleBudget, EnumeratePath::Multilinear).image);
}

TEST_CASE("enumeration is independent of the worker partition") {
  for (const FreePoly& p : {P("[x1,x2]^2*x1"), multilinearize(P("[x1,x2]^2"))}) {
    const ImageReport a = enumerate_image(p, 3, kDefaultTupleBudget, EnumeratePath::Auto, 1);
    const ImageReport b = enumerate_image(p, 3, kDefaultTupleBudget, EnumeratePath::Auto, 4);
    CHECK(a.image == b.image);
    CHECK(a.class_counts == b.class_counts);
  }
}

TEST_CASE("enumeration refuses instead of sampling") {
  CHECK_THROWS_AS(enumerate_image(P("[x1,x2]^2*x3"), 3, 1000), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_image(P("[x1,x2]^2"), 3, kDefaultTupleBudget, EnumeratePath::Multilinear), UsageError);
  CHECK_THROWS_AS(enumerate_image(P("1/3*x1"), 3), DivisionByZero);
}

TEST_CASE("class counts, zero and cone flags") {
  const ImageReport r = enumerate_image(P("[x1,x2]^3"), 3);
  std::uint64_t total = 0;
  for (auto c : r.class_counts) total += c;
  CHECK(total == r.image.size());
  CHECK(r.contains_zero);
  CHECK(r.count(ConeClass::Kind::NilpotentNonzero) == 0);
  CHECK(r.count(ConeClass::Kind::KHat) == 18);
  CHECK(r.cone_closed);
  CHECK(r.conjugation_invariant);
  // the non-homogeneous f = [x,y] + [x,y]^2 is not scaling-closed over F3
  CHECK_FALSE(enumerate_image(P("[x1,x2] + [x1,x2]^2"), 3).cone_closed);
}

TEST_CASE("chuang_property_check examples") {
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(chuang_property_check(enumerate_image(P("[x1,x2]"), 2).matrices(), 2));
  CHECK_FALSE(chuang_property_check({Mat2::unit(1, 2, f2)}, 2));
  CHECK_FALSE(chuang_property_check({Mat2::zero(f2), Mat2::unit(1, 2, f2)}, 2));
  CHECK(chuang_property_check({Mat2::zero(f2), Mat2::unit(1, 2, f2), Mat2::unit(2, 1, f2), Mat2::from_ints(f2, 1, 1, 1, 1)}, 2));
}

TEST_CASE("cross_check examples") {
  const CrossCheckReport c = cross_check(P("[x1,x2]"), 3);
  CHECK(c.agree);
  CHECK(c.enumerated_tag == SpanTag::SL2);
  CHECK(c.enumerated_dimension == 3);
  CHECK(c.e12_required);
  CHECK(c.e12_present);
  const CrossCheckReport s = cross_check(standard_poly(4, kQ), 2);
  CHECK(s.agree);
  CHECK(s.classifier_verdict == Verdict::Zero);
  CHECK_THROWS_AS(cross_check(P("[x1,x2]^2"), 2), UsageError);
}

TEST_CASE("alternating trace factor examples") {
  const FieldSpec f = FieldSpec::prime(101);
  std::mt19937_64 rng(4);
  std::array<Mat2, 4> a{random_matrix(rng, f), random_matrix(rng, f), random_matrix(rng, f), random_matrix(rng, f)};
  std::array<Mat2, 3> r{random_matrix(rng, f), random_matrix(rng, f), random_matrix(rng, f)};
  REQUIRE_FALSE(evaluate(capelli_poly(4, f), std::vector<Mat2>{a[0], a[1], a[2], a[3], r[0], r[1], r[2]}).is_zero());
  auto c = alternating_trace_factor(Mat2::identity(f), a, r);
  REQUIRE(c);
  CHECK(c->to_string() == "4");
  c = alternating_trace_factor(Mat2::zero(f), a, r);
  REQUIRE(c);
  CHECK(c->is_zero());
  const Mat2 t = random_matrix(rng, f);
  c = alternating_trace_factor(t, a, r);
  REQUIRE(c);
  CHECK(*c == Scalar::from_int(f, 2) * trace(t));
  const std::array<Mat2, 4> zeros{Mat2::zero(f), Mat2::zero(f), Mat2::zero(f), Mat2::zero(f)};
  CHECK_THROWS_AS(alternating_trace_factor(t, zeros, r), UsageError);
}

TEST_CASE("alternating trace verifier over F101") {
  const AlternatingTraceReport rep = verify_alternating_trace(101, 100, 7);
  CHECK(rep.trials == 100);
  CHECK(rep.proportional == 100);
  CHECK(rep.factor_is_twice_trace == 100);
  CHECK(rep.linear_in_t == 100);
  CHECK(rep.factor_is_trace < 100);
  CHECK(rep.holds());
  const AlternatingTraceReport again = verify_alternating_trace(101, 100, 7);
  CHECK(again.factor_is_trace == rep.factor_is_trace);
  CHECK(again.degenerate_resamples == rep.degenerate_resamples);
}
