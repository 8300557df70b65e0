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

#include <algorithm>
#include <numeric>
#include <random>

#include "classify.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "eval.hpp"

using namespace polimage;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

FreePoly P(const char* text, unsigned vars = 0, const FieldSpec& f = kQ) { return parse_poly(text, vars, f); }

std::vector<FreePoly> multilinear_corpus() {
  return {P("[x1,x2]"), standard_poly(4, kQ), P("x1"), multilinearize(P("[x1,x2]^2")), P("x1*x2 + x2*x1"),
          capelli_poly(3, kQ)};
}

ClassifyOptions opts(Mode mode = Mode::Auto, std::uint64_t c = 0) {
  ClassifyOptions o;
  o.mode = mode;
  o.characteristic = c;
  return o;
}

}  // namespace

TEST_CASE("unit_evaluations examples") {
  const FreePoly c = P("[x1,x2]");
  CHECK(evaluate_on_units(c, parse_units("e12,e21")).to_mat2(kQ) == Mat2::parse("1,0;0,-1", kQ));
  CHECK(evaluate_on_units(c, parse_units("e11,e22")).is_zero());
  CHECK(evaluate_on_units(P("x1*x2 + x2*x1"), parse_units("e12,e12")).is_zero());
  const auto all = unit_evaluations(c);
  REQUIRE(all.size() == 16);
  CHECK(all[0].tuple.to_string() == "e11,e11");
  CHECK(all[1].tuple.to_string() == "e11,e12");
  CHECK(all[15].tuple.to_string() == "e22,e22");
  CHECK(all[1].value.to_mat2(kQ) == Mat2::unit(1, 2, kQ));
  CHECK_THROWS_AS(unit_evaluations(P("x1*x2*x3"), 2, 63), BudgetExceeded);
}

TEST_CASE("unit tuples: parsing and general n") {
  const UnitTuple t = parse_units("e13,e32", 3);
  CHECK(t.to_string() == "e13,e32");
  CHECK_THROWS_AS(parse_units("e13", 2), ParseError);
  CHECK_THROWS_AS(parse_units("e12,", 2), ParseError);
  CHECK_THROWS_AS(parse_units("f12", 2), ParseError);
  const UnitValue v = evaluate_on_units(P("x1*x2"), t);
  REQUIRE(v.entries.size() == 1);
  CHECK(v.entries[0].first == std::pair{1u, 2u});
  CHECK(unit_evaluations(P("x1*x2"), 3).size() == 81);
}

TEST_CASE("euler_predict examples") {
  const FreePoly sym = P("x1*x2 + x2*x1");
  EulerCheck r = check_euler(sym, parse_units("e12,e21"));
  CHECK(r.verdict.kind == EulerVerdict::Kind::CircuitClass);
  CHECK(r.value.to_mat2(kQ) == Mat2::identity(kQ));
  CHECK(r.compatible);

  r = check_euler(sym, parse_units("e11,e12"));
  CHECK(r.verdict == EulerVerdict{EulerVerdict::Kind::PathClass, 1, 2});
  CHECK(r.verdict.to_string() == "PathClass(1,2)");
  CHECK(r.value.to_mat2(kQ) == Mat2::unit(1, 2, kQ));
  CHECK(r.compatible);

  r = check_euler(sym, parse_units("e12,e12"));
  CHECK(r.verdict.kind == EulerVerdict::Kind::NoPathOrCircuit);
  CHECK(r.value.is_zero());
  CHECK(r.compatible);

  // disconnected edges: e11 and e22 never chain
  CHECK(euler_predict(parse_units("e11,e22")).kind == EulerVerdict::Kind::NoPathOrCircuit);
  CHECK_THROWS_AS(check_euler(P("x1*x1"), parse_units("e11")), UsageError);
}

TEST_CASE("check_euler holds for the multilinear corpus, all unit tuples, n = 2 and 3") {
  for (const FreePoly& p : multilinear_corpus()) {
    for (unsigned n : {2u, 3u}) {
      if (p.vars() > 4 && n == 3) continue;
      for (const auto& e : unit_evaluations(p, n)) {
        CAPTURE(p.to_string());
        CAPTURE(e.tuple.to_string());
        CHECK(check_euler(p, e.tuple).compatible);
      }
    }
  }
}

TEST_CASE("span_dimension examples") {
  auto values = [](const FreePoly& p) {
    std::vector<Mat2> out;
    for (const auto& e : unit_evaluations(p)) out.push_back(e.value.to_mat2(p.field()));
    return out;
  };
  SpanResult s = span_dimension(values(P("[x1,x2]")));
  CHECK(s.tag == SpanTag::SL2);
  CHECK(s.dimension == 3);
  s = span_dimension(values(standard_poly(4, kQ)));
  CHECK(s.tag == SpanTag::Zero);
  CHECK(s.dimension == 0);
  s = span_dimension(values(P("x1")));
  CHECK(s.tag == SpanTag::Full);
  CHECK(s.dimension == 4);
  // a single non-scalar direction is none of the four subspaces
  const std::vector<Mat2> odd{Mat2::unit(1, 2, kQ)};
  CHECK(span_dimension(odd).tag == SpanTag::Anomaly);
  CHECK(std::string(span_tag_name(SpanTag::SL2)) == "sl2");
}

TEST_CASE("classify_multilinear examples") {
  CHECK(classify_multilinear(P("[x1,x2]"), opts()).verdict == Verdict::SL2);
  CHECK(classify_multilinear(standard_poly(4, kQ), opts()).verdict == Verdict::Zero);
  const ImageClass lin = classify_multilinear(multilinearize(P("[x1,x2]^2")), opts());
  CHECK(lin.verdict == Verdict::Scalars);
  CHECK(lin.budget_consumed == 256);
  CHECK_FALSE(lin.witnesses.empty());
  const ImageClass x = classify_multilinear(P("x1"), opts());
  CHECK(x.verdict == Verdict::Full);
  CHECK_THROWS_AS(classify_multilinear(P("[x1,x2]^2"), opts()), UsageError);
  // in characteristic 2 the symmetric x1x2 + x2x1 agrees with the commutator
  CHECK(classify_multilinear(P("x1*x2 + x2*x1"), opts(Mode::Auto, 2)).verdict == Verdict::SL2);
  CHECK(classify_multilinear(P("x1*x2 + x2*x1"), opts()).verdict == Verdict::Full);
}

TEST_CASE("classify_multilinear is stable under renaming, scaling and characteristic reduction") {
  std::mt19937_64 rng(31);
  for (const FreePoly& p : multilinear_corpus()) {
    const Verdict base = classify_multilinear(p, opts()).verdict;
    std::vector<unsigned> perm(p.vars());
    std::iota(perm.begin(), perm.end(), 1u);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<FreePoly> images;
    for (auto v : perm) images.push_back(FreePoly::variable(v, p.vars(), kQ));
    CHECK(classify_multilinear(p.substitute(images), opts()).verdict == base);
    CHECK(classify_multilinear(p.scaled(Scalar::from_int(kQ, -3)), opts()).verdict == base);
  }
}

TEST_CASE("classify_semihomogeneous examples, both modes") {
  for (Mode mode : {Mode::Symbolic, Mode::Probabilistic}) {
    CAPTURE(mode_name(mode));
    CHECK(classify_semihomogeneous(P("[x1,x2]^2"), {1, 1}, opts(mode)).verdict == Verdict::Scalars);
    const ImageClass cube = classify_semihomogeneous(P("[x1,x2]^3"), {1, 1}, opts(mode));
    CHECK(cube.verdict == Verdict::TraceZeroUndetermined);
    REQUIRE_FALSE(cube.notes.empty());
    CHECK(cube.notes[0].find("KHat candidate") == 0);
    CHECK(cube.budget_consumed >= kDefaultSearchBudget);
    const ImageClass comm = classify_semihomogeneous(P("[x1,x2]"), {1, 1}, opts(mode));
    CHECK(comm.verdict == Verdict::SL2);
    REQUIRE_FALSE(comm.witnesses.empty());
    CHECK(comm.witnesses[0].role == "nilpotent");
    CHECK(comm.witnesses[0].args[0] == Mat2::unit(1, 1, kQ));
    CHECK(comm.witnesses[0].args[1] == Mat2::unit(1, 2, kQ));
    const ImageClass dense = classify_semihomogeneous(P("[x1,x2]^2*x1"), {1, 1}, opts(mode));
    CHECK(dense.verdict == Verdict::Dense);
    CHECK(dense.mode == mode);
  }
  CHECK_THROWS_AS(classify_semihomogeneous(P("x1 + x1^2"), {1}, opts()), UsageError);
  CHECK_THROWS_AS(classify_semihomogeneous(P("[x1,x2]"), {1, -1}, opts()), UsageError);
}

TEST_CASE("Dense verdicts carry two values with different eigenvalue ratios") {
  for (Mode mode : {Mode::Symbolic, Mode::Probabilistic}) {
    const ImageClass r = classify_semihomogeneous(P("[x1,x2]^2*x1"), {1, 1}, opts(mode));
    REQUIRE(r.witnesses.size() == 2);
    CHECK_FALSE(pi_invariant(r.witnesses[0].value) == pi_invariant(r.witnesses[1].value));
    for (const auto& w : r.witnesses) {
      const FreePoly q = prepare_for_classification(P("[x1,x2]^2*x1"), 0);
      CHECK(evaluate(w.args[0].field() == q.field() ? q : q.reduce_to(w.args[0].field()), w.args) == w.value);
    }
    CHECK(std::find_if(r.assumptions.begin(), r.assumptions.end(), [](const std::string& a) {
            return a.find("d-th roots") != std::string::npos;
          }) != r.assumptions.end());
  }
}

TEST_CASE("symbolic budget: symbolic mode refuses, auto mode falls back") {
  ClassifyOptions o = opts(Mode::Symbolic);
  o.term_budget = 20;
  CHECK_THROWS_AS(classify_semihomogeneous(P("[x1,x2]^2*x1"), {1, 1}, o), BudgetExceeded);
  o.mode = Mode::Auto;
  const ImageClass r = classify_semihomogeneous(P("[x1,x2]^2*x1"), {1, 1}, o);
  CHECK(r.verdict == Verdict::Dense);
  CHECK(r.mode == Mode::Probabilistic);
  CHECK(r.probe.has_value());
  CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("classify_general routing") {
  const ImageClass nd = classify_general(P("[x1,x2] + [x1,x2]^2"), opts());
  CHECK(nd.verdict == Verdict::TopPartInconclusive);
  REQUIRE(nd.top_parts.size() == 1);
  CHECK(nd.top_parts[0].degree == 4);
  CHECK(nd.top_parts[0].verdict == Verdict::Scalars);
  CHECK_FALSE(nd.witnesses.empty());

  const ImageClass sq = classify_general(P("x1 + x1^2"), opts());
  CHECK(sq.verdict == Verdict::Dense);
  CHECK(sq.route == "top-part");

  const ImageClass ml = classify_general(P("[x1,x2]"), opts());
  CHECK(ml.route == "multilinear");
  CHECK(ml.verdict == Verdict::SL2);

  CHECK(classify_general(P("[x1,x2]^2*x1"), opts()).route == "semihomogeneous");
  CHECK(classify_general(FreePoly(2, kQ), opts()).verdict == Verdict::Zero);
  CHECK_THROWS_AS(classify_general(P("x1 + 1"), opts()), UsageError);
  CHECK_THROWS_AS(classify_general(P("1/3*x1"), opts(Mode::Auto, 3)), DivisionByZero);
  CHECK_THROWS_AS(classify_general(P("x1", 1, FieldSpec::prime(5)), opts(Mode::Auto, 7)), UsageError);
}

TEST_CASE("classification is reproducible and independent of thread count") {
  for (const char* text : {"[x1,x2]^3", "[x1,x2]^2*x1"}) {
    for (Mode mode : {Mode::Symbolic, Mode::Probabilistic}) {
      ClassifyOptions a = opts(mode), b = opts(mode);
      a.search_budget = b.search_budget = 20000;
      b.threads = 3;
      const ImageClass ra = classify_general(P(text), a), rb = classify_general(P(text), b);
      CHECK(ra.verdict == rb.verdict);
      CHECK(ra.budget_consumed == rb.budget_consumed);
      REQUIRE(ra.witnesses.size() == rb.witnesses.size());
      for (std::size_t i = 0; i < ra.witnesses.size(); ++i) CHECK(ra.witnesses[i].value == rb.witnesses[i].value);
    }
  }
}

TEST_CASE("probabilistic_probe examples") {
  const ProbeReport s4 = probabilistic_probe(standard_poly(4, kQ), 100, kDefaultProbePrime, 1);
  CHECK(s4.all_zero);
  CHECK(s4.per_trial_bound == doctest::Approx(4.0 * 16 / 2147483647.0));
  const ProbeReport x = probabilistic_probe(P("x1"), 100, kDefaultProbePrime, 1);
  CHECK_FALSE(x.all_central);
  CHECK(x.count(ConeClass::Kind::DiagDistinct) > 0);
  CHECK(std::any_of(x.class_witnesses.begin(), x.class_witnesses.end(),
                    [](const ProbeSample& s) { return !disc(s.value).is_zero(); }));
  CHECK_THROWS_AS(probabilistic_probe(P("[x1,x2]^2*x1"), 10, 7, 1), UsageError);
  // samples are reproducible from (seed, index)
  const auto t = probe_tuple(1, kDefaultProbePrime, 1, 5);
  CHECK(probe_tuple(1, kDefaultProbePrime, 1, 5)[0] == t[0]);
}

TEST_CASE("Scalars verdicts agree with every probe sample") {
  const FreePoly lin = multilinearize(P("[x1,x2]^2"));
  REQUIRE(classify_multilinear(lin, opts()).verdict == Verdict::Scalars);
  const ProbeReport r = probabilistic_probe(lin, 100, kDefaultProbePrime, 9);
  CHECK(r.all_central);
  CHECK_FALSE(r.all_zero);
}

TEST_CASE("the degree-16 cone example") {
  const FreePoly iv = P("[(x1*x2)^2,(x3*x4)^2]^2 + [(x1*x2)^2,(x3*x4)^2]*[x1*x3,x2*x4]^2");
  const ProbeReport r = probabilistic_probe(iv, 200, kDefaultProbePrime, 1);
  CHECK(r.count(ConeClass::Kind::KTilde) == 0);
  CHECK(r.count(ConeClass::Kind::DiagDistinct) > 0);
  SearchOptions so;
  const SearchResult scalar = search_witness(iv, [](const Mat2& v) { return !v.is_zero() && v.is_scalar(); }, so);
  REQUIRE(scalar.witness);
  const SearchResult nil = search_witness(
      iv, [](const Mat2& v) { return !v.is_zero() && trace(v).is_zero() && det(v).is_zero(); }, so);
  REQUIRE(nil.witness);
  CHECK(evaluate(iv, nil.witness->args) == nil.witness->value);
}

TEST_CASE("witness search order and budget") {
  SearchOptions so;
  so.budget = 5;
  const SearchResult none = search_witness(P("[x1,x2]"), [](const Mat2&) { return false; }, so);
  CHECK_FALSE(none.witness);
  CHECK(none.consumed == 5);
  so.budget = 100;
  const SearchResult first = search_witness(P("[x1,x2]"), [](const Mat2& v) { return !v.is_zero(); }, so);
  REQUIRE(first.witness);
  CHECK(first.witness->stage == "units");
  CHECK(first.witness->index == 1);  // (e11, e12)
  // a value needing a -1 entry: x1 = -e11 forces the signed pass
  const SearchResult neg = search_witness(P("x1"), [](const Mat2& v) { return v(0, 0).to_string() == "-1"; }, so);
  REQUIRE(neg.witness);
  CHECK(neg.witness->stage == "signs");
  CHECK(neg.per_stage[0] == 4);
  CHECK(neg.per_stage[1] == 16);  // all 15 {0,1} tuples, then the first signed one
}

TEST_CASE("nondense invariant") {
  const FieldSpec f101 = FieldSpec::prime(101);
  const FreePoly f = nondense_polynomial(kQ);
  const Mat2 v = evaluate(f, std::vector<Mat2>{Mat2::unit(1, 1, kQ), Mat2::unit(1, 2, kQ)});
  CHECK(v == Mat2::unit(1, 2, kQ));
  CHECK(disc(v) == Scalar::from_int(kQ, 2) * trace(v));
  const NondenseReport a = nondense_invariant_check(f101, 100, 7);
  CHECK(a.ok());
  CHECK(a.holds == 100);
  const NondenseReport b = nondense_invariant_check(kQ, 100, 7);
  CHECK(b.ok());
  CHECK_THROWS_AS(nondense_invariant_check(FieldSpec::prime(2), 10, 7), UsageError);
}
