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

#include <map>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "mat2.hpp"

using namespace polimage;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Mat2 M(const char* text, const FieldSpec& f = kQ) { return Mat2::parse(text, f); }

std::vector<Mat2> all_matrices(const FieldSpec& f) {
  const auto q = static_cast<long long>(f.characteristic());
  std::vector<Mat2> out;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c)
        for (long long d = 0; d < q; ++d) out.push_back(Mat2::from_ints(f, a, b, c, d));
  return out;
}

std::vector<Mat2> invertible(const FieldSpec& f) {
  std::vector<Mat2> out;
  for (const auto& g : all_matrices(f)) {
    if (!det(g).is_zero()) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("trace, det, disc examples") {
  const Mat2 d12 = M("1,0;0,2");
  CHECK(trace(d12).to_string() == "3");
  CHECK(det(d12).to_string() == "2");
  CHECK(disc(d12).to_string() == "1");
  const Mat2 e12 = Mat2::unit(1, 2, kQ);
  CHECK(trace(e12).is_zero());
  CHECK(det(e12).is_zero());
  CHECK(disc(e12).is_zero());
  const Mat2 j = M("1,1;0,1");
  CHECK(disc(j).is_zero());
  CHECK(det(j).is_one());
}

TEST_CASE("pi_invariant examples") {
  auto pi = pi_invariant(M("1,0;0,2"));
  CHECK(pi.kind == PiValue::Kind::Finite);
  CHECK(pi.value->to_string() == "5/2");
  CHECK(pi_invariant(Mat2::identity(kQ)).value->to_string() == "2");
  CHECK(pi_invariant(M("1,0;0,-1")).value->to_string() == "-2");
  CHECK(pi_invariant(Mat2::unit(1, 2, kQ)).kind == PiValue::Kind::Undefined);
  CHECK(pi_invariant(Mat2::unit(1, 1, kQ)).kind == PiValue::Kind::Infinite);
  CHECK(pi_invariant(Mat2::unit(1, 1, kQ)).to_string() == "inf");
}

TEST_CASE("cone_classify examples") {
  using K = ConeClass::Kind;
  CHECK(cone_classify(Mat2::zero(kQ)).kind == K::Zero);
  CHECK(cone_classify(M("1,1;0,1")).kind == K::KTilde);
  CHECK(cone_classify(M("1,0;0,-1")).kind == K::KHat);
  CHECK(cone_classify(M("1,1;0,1", FieldSpec::prime(2))).kind == K::KHat);
  CHECK(cone_classify(M("3,0;0,3")).kind == K::ScalarNonzero);
  CHECK(cone_classify(M("0,1;0,0")).kind == K::NilpotentNonzero);
  const ConeClass dd = cone_classify(M("1,0;0,2"));
  CHECK(dd.kind == K::DiagDistinct);
  CHECK(dd.pi.value->to_string() == "5/2");
  CHECK(std::string(cone_kind_name(K::KTilde)) == "KTilde");
}

TEST_CASE("similar and conjugate examples") {
  CHECK(similar(M("1,0;0,2"), M("1,1;0,2")));
  CHECK_FALSE(similar(Mat2::identity(kQ), M("1,1;0,1")));
  CHECK(similar(Mat2::unit(1, 2, kQ), Mat2::unit(2, 1, kQ)));
  CHECK(conjugate(M("1,0;0,2"), Mat2::identity(kQ)) == M("1,0;0,2"));
  CHECK(conjugate(Mat2::unit(1, 2, kQ), M("0,1;1,0")) == Mat2::unit(2, 1, kQ));
  CHECK_THROWS_AS(conjugate(Mat2::identity(kQ), M("1,1;1,1")), UsageError);
}

TEST_CASE("eigenvalues_in_closure examples") {
  const FieldSpec f5 = FieldSpec::prime(5);
  auto ev = eigenvalues_in_closure(M("1,0;0,2", f5));
  CHECK(ev.first.to_string() == "1");
  CHECK(ev.second.to_string() == "2");
  ev = eigenvalues_in_closure(M("0,1;1,0", f5));
  CHECK(ev.first.to_string() == "1");
  CHECK(ev.second.to_string() == "4");
  ev = eigenvalues_in_closure(M("0,1;2,0", f5));
  CHECK(ev.first.to_string() == "1*t");
  CHECK(ev.second.to_string() == "4*t");
  CHECK_THROWS_AS(eigenvalues_in_closure(M("1,0;0,2")), UsageError);
}

TEST_CASE("matrix text round-trips and rejects malformed input") {
  CHECK(M("1/2,-3;0,7").to_string() == "1/2,-3;0,7");
  CHECK(M("1+2*t,t;0,1", FieldSpec::prime_square(3)).to_string() == "1+2*t,1*t;0,1");
  CHECK_THROWS_AS(M("1,2,3;4"), ParseError);
  CHECK_THROWS_AS(M("1,2;3"), ParseError);
}

TEST_CASE("Cayley-Hamilton holds on every matrix over F2") {
  const FieldSpec f2 = FieldSpec::prime(2);
  for (const auto& a : all_matrices(f2)) {
    CHECK((a * a - trace(a) * a + det(a) * Mat2::identity(f2)).is_zero());
  }
}

TEST_CASE("cone_classify partitions M2(F2) and M2(F3); classes are conjugation invariant") {
  for (std::uint64_t p : {2ULL, 3ULL}) {
    const FieldSpec f = FieldSpec::prime(p);
    const auto gs = invertible(f);
    CHECK(gs.size() == (p == 2 ? 6u : 48u));
    std::map<ConeClass::Kind, int> counts;
    for (const auto& a : all_matrices(f)) {
      const ConeClass c = cone_classify(a);
      ++counts[c.kind];
      if (c.kind != ConeClass::Kind::Zero) {
        for (long long s = 1; s < static_cast<long long>(p); ++s) {
          CHECK(cone_classify(Scalar::from_int(f, s) * a) .kind == c.kind);
        }
      }
      for (const auto& g : gs) {
        const Mat2 b = conjugate(a, g);
        CHECK(cone_classify(b) == c);
        CHECK(pi_invariant(b) == pi_invariant(a));
        CHECK(similar(a, b));
      }
    }
    int total = 0;
    for (auto& [k, n] : counts) total += n;
    CHECK(total == static_cast<int>(p * p * p * p));
    CHECK(counts[ConeClass::Kind::Zero] == 1);
    CHECK(counts[ConeClass::Kind::ScalarNonzero] == static_cast<int>(p - 1));
    CHECK(counts[ConeClass::Kind::NilpotentNonzero] == static_cast<int>(p * p - 1));
    if (p == 2) CHECK(counts[ConeClass::Kind::KTilde] == 0);
  }
}

TEST_CASE("pi is scale and conjugation invariant on random samples over F_p and Q") {
  std::mt19937_64 rng(5);
  for (const FieldSpec& f : {FieldSpec::prime(5), FieldSpec::prime(101), kQ}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto r = [&] { return static_cast<long long>(rng() % 11) - 5; };
      const Mat2 a = Mat2::from_ints(f, r(), r(), r(), r());
      const Mat2 g = Mat2::from_ints(f, r(), r(), r(), r());
      const Scalar c = Scalar::from_int(f, r());
      if (!c.is_zero()) CHECK(pi_invariant(c * a) == pi_invariant(a));
      if (!det(g).is_zero()) {
        CHECK(pi_invariant(conjugate(a, g)) == pi_invariant(a));
        CHECK(cone_classify(conjugate(a, g)) == cone_classify(a));
      }
    }
  }
}

TEST_CASE("pi formula equals eigenvalue ratio sum over F5 and F7") {
  for (std::uint64_t p : {5ULL, 7ULL}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (const auto& a : all_matrices(f)) {
      if (det(a).is_zero()) continue;
      const auto [l1, l2] = eigenvalues_in_closure(a);
      CHECK(l1 * l2 == det(a).to_extension());
      const Scalar ratio = l1 / l2 + l2 / l1;
      CHECK(ratio == pi_invariant(a).value->to_extension());
    }
  }
}
