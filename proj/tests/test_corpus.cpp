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

#include <set>

#include "doctest.h"
#include "corpus.hpp"
#include "errors.hpp"

using namespace polimage;

TEST_CASE("corpus entries are well formed") {
  std::set<std::string> names;
  for (const auto& e : corpus_entries()) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    const FreePoly p = parse_poly(e.polynomial, e.vars, FieldSpec::rationals());
    CHECK(p.vars() == e.vars);
    CHECK_FALSE(e.known_image.empty());
  }
  CHECK(names.size() == 9);
}

TEST_CASE("corpus passes and is deterministic") {
  const CorpusRun a = run_corpus({});
  CHECK(a.all_pass());
  for (const auto& r : a.results) {
    CAPTURE(r.name);
    CHECK(r.pass);
    CHECK(r.detail["cross_mode"]["agree"] == true);
  }
  CorpusOptions threaded;
  threaded.threads = 3;
  CHECK(run_corpus(threaded).to_json().dump() == a.to_json().dump());
}

TEST_CASE("corpus selection") {
  const CorpusRun one = run_corpus({}, std::string("coneex2-iii"));
  REQUIRE(one.results.size() == 1);
  CHECK(one.results[0].verdict == Verdict::TraceZeroUndetermined);
  CHECK(one.results[0].detail["checks"]["khat_candidate_note"] == true);
  CHECK_THROWS_AS(run_corpus({}, std::string("nope")), UsageError);
}

TEST_CASE("a starved witness search is reported as a failed entry") {
  CorpusOptions starved;
  starved.search_budget = 10;
  const CorpusRun r = run_corpus(starved, std::string("coneex2-iv"));
  CHECK_FALSE(r.all_pass());
  CHECK(r.results[0].detail["checks"]["scalar_witness"] == false);
}

TEST_CASE("report JSON shapes") {
  const Mat2 a = Mat2::from_ints(FieldSpec::prime(5), 1, 1, 0, 1);
  const Json m = matrix_report(a);
  CHECK(m["cone"]["kind"] == "KTilde");
  CHECK(m["eigenvalues"] == Json::array({"1", "1"}));
  CHECK_FALSE(matrix_report(Mat2::identity(FieldSpec::rationals())).contains("eigenvalues"));
  const std::string doc = render(Json::object(), "x", false);
  CHECK(doc == R"({"command":"x","schema":1})");
}
