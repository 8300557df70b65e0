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

#include "polimage/polimage.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "corpus.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "report.hpp"

struct polimage_poly {
  polimage::FreePoly poly;
};

namespace {

using namespace polimage;

thread_local std::string last_error;
thread_local long long last_position = -1;

polimage_status fail(polimage_status s, const std::string& what, long long position = -1) {
  last_error = what;
  last_position = position;
  return s;
}

// Runs fn, mapping library exceptions to status codes.
template <class Fn>
polimage_status guarded(Fn&& fn) {
  last_error.clear();
  last_position = -1;
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(POLIMAGE_ERR_PARSE, e.what(), static_cast<long long>(e.position()));
  } catch (const DivisionByZero& e) {
    return fail(POLIMAGE_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(POLIMAGE_ERR_BUDGET, e.what());
  } catch (const UsageError& e) {
    return fail(POLIMAGE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(POLIMAGE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(POLIMAGE_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

polimage_status require(const void* ptr, const char* what) {
  return ptr ? POLIMAGE_OK : fail(POLIMAGE_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

#define POLIMAGE_REQUIRE(ptr)                                        \
  do {                                                               \
    if (polimage_status s_ = require(ptr, #ptr); s_ != POLIMAGE_OK) \
      return s_;                                                     \
  } while (0)

Mode to_mode(polimage_mode m) {
  switch (m) {
    case POLIMAGE_MODE_SYMBOLIC: return Mode::Symbolic;
    case POLIMAGE_MODE_PROBABILISTIC: return Mode::Probabilistic;
    case POLIMAGE_MODE_AUTO: return Mode::Auto;
  }
  throw UsageError("unknown mode");
}

EnumeratePath to_path(polimage_path p) {
  switch (p) {
    case POLIMAGE_PATH_AUTO: return EnumeratePath::Auto;
    case POLIMAGE_PATH_NAIVE: return EnumeratePath::Naive;
    case POLIMAGE_PATH_MULTILINEAR: return EnumeratePath::Multilinear;
    case POLIMAGE_PATH_ORBIT: return EnumeratePath::Orbit;
  }
  throw UsageError("unknown enumeration path");
}

// Matrix size implied by the largest index in a unit list such as "e13,e31".
unsigned unit_size(const std::string& text) {
  unsigned n = 2;
  for (char c : text) {
    if (c >= '1' && c <= '9') n = std::max<unsigned>(n, static_cast<unsigned>(c - '0'));
  }
  return n;
}

}  // namespace

extern "C" {

const char* polimage_version(void) { return "0.1.0"; }

const char* polimage_last_error(void) { return last_error.c_str(); }

long long polimage_last_error_position(void) { return last_position; }

void polimage_string_free(char* s) { delete[] s; }

polimage_status polimage_poly_parse(const char* text, unsigned vars, polimage_poly** out) {
  POLIMAGE_REQUIRE(text);
  POLIMAGE_REQUIRE(out);
  return guarded([&] {
    *out = new polimage_poly{parse_poly(text, vars, FieldSpec::rationals())};
    return POLIMAGE_OK;
  });
}

void polimage_poly_free(polimage_poly* p) { delete p; }

polimage_status polimage_poly_to_string(const polimage_poly* p, char** out) {
  POLIMAGE_REQUIRE(p);
  POLIMAGE_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(p->poly.to_string());
    return POLIMAGE_OK;
  });
}

unsigned polimage_poly_vars(const polimage_poly* p) { return p ? p->poly.vars() : 0; }

polimage_status polimage_poly_linearize(const polimage_poly* p, polimage_poly** out) {
  POLIMAGE_REQUIRE(p);
  POLIMAGE_REQUIRE(out);
  return guarded([&] {
    *out = new polimage_poly{multilinearize(p->poly)};
    return POLIMAGE_OK;
  });
}

void polimage_classify_options_init(polimage_classify_options* opts) {
  if (!opts) return;
  const ClassifyOptions d;
  opts->characteristic = d.characteristic;
  opts->mode = POLIMAGE_MODE_AUTO;
  opts->seed = d.seed;
  opts->search_budget = d.search_budget;
  opts->term_budget = d.term_budget;
  opts->probe_trials = d.probe_trials;
  opts->threads = 1;
  opts->weights = nullptr;
  opts->weights_len = 0;
}

polimage_status polimage_classify(const polimage_poly* p, const polimage_classify_options* opts, int pretty,
                                  char** json) {
  POLIMAGE_REQUIRE(p);
  POLIMAGE_REQUIRE(opts);
  POLIMAGE_REQUIRE(json);
  return guarded([&] {
    ClassifyOptions o;
    o.characteristic = opts->characteristic;
    o.mode = to_mode(opts->mode);
    o.seed = opts->seed;
    o.search_budget = opts->search_budget;
    o.term_budget = opts->term_budget;
    o.probe_trials = opts->probe_trials;
    o.threads = opts->threads ? opts->threads : 1;
    if (opts->weights_len) {
      if (!opts->weights) throw UsageError("weights is null");
      o.weights.emplace_back(opts->weights, opts->weights + opts->weights_len);
    }
    const ImageClass c = classify_general(p->poly, o);
    Json doc = to_json(c);
    doc["polynomial"] = p->poly.to_string();
    doc["vars"] = p->poly.vars();
    *json = copy_string(render(std::move(doc), "classify", pretty != 0));
    return POLIMAGE_OK;
  });
}

polimage_status polimage_enumerate(const polimage_poly* p, uint64_t q, uint64_t tuple_budget, polimage_path path,
                                   unsigned threads, const char* dump_path, int pretty, char** json) {
  POLIMAGE_REQUIRE(p);
  POLIMAGE_REQUIRE(json);
  return guarded([&] {
    const ImageReport r = enumerate_image(p->poly, q, tuple_budget, to_path(path), threads ? threads : 1);
    Json doc = to_json(r);
    doc["polynomial"] = p->poly.to_string();
    if (dump_path) {
      std::ofstream out(dump_path);
      if (!out) throw UsageError(std::string("cannot write dump file '") + dump_path + "'");
      for (const auto& m : r.matrices()) out << m.to_string() << '\n';
      if (!out) throw UsageError(std::string("cannot write dump file '") + dump_path + "'");
      doc["dump"] = dump_path;
    }
    *json = copy_string(render(std::move(doc), "enumerate", pretty != 0));
    return POLIMAGE_OK;
  });
}

polimage_status polimage_cone(const char* matrix, uint64_t characteristic, int pretty, char** json) {
  POLIMAGE_REQUIRE(matrix);
  POLIMAGE_REQUIRE(json);
  return guarded([&] {
    const Mat2 a = Mat2::parse(matrix, FieldSpec::of_characteristic(characteristic));
    *json = copy_string(render(matrix_report(a), "cone", pretty != 0));
    return POLIMAGE_OK;
  });
}

polimage_status polimage_euler(const char* units, const polimage_poly* p, int pretty, char** json) {
  POLIMAGE_REQUIRE(units);
  POLIMAGE_REQUIRE(json);
  return guarded([&] {
    const UnitTuple t = parse_units(units, unit_size(units));
    Json doc = {{"units", t.to_string()}, {"n", t.n}, {"prediction", euler_predict(t).to_string()}};
    if (p) {
      doc["polynomial"] = p->poly.to_string();
      doc["check"] = to_json(check_euler(p->poly, t));
    }
    *json = copy_string(render(std::move(doc), "euler", pretty != 0));
    return POLIMAGE_OK;
  });
}

polimage_status polimage_verify_alternating_trace(uint64_t prime, unsigned trials, uint64_t seed, int pretty,
                                                  char** json) {
  POLIMAGE_REQUIRE(json);
  return guarded([&] {
    Json doc = to_json(verify_alternating_trace(prime, trials, seed));
    doc["identity"] = "alternating-trace";
    *json = copy_string(render(std::move(doc), "verify", pretty != 0));
    return POLIMAGE_OK;
  });
}

polimage_status polimage_corpus(const char* only, uint64_t seed, unsigned threads, int pretty, char** json) {
  POLIMAGE_REQUIRE(json);
  return guarded([&] {
    CorpusOptions o;
    o.seed = seed;
    o.threads = threads ? threads : 1;
    const CorpusRun run = run_corpus(o, only ? std::optional<std::string>(only) : std::nullopt);
    Json doc = run.to_json();
    doc["seed"] = seed;
    *json = copy_string(render(std::move(doc), "corpus", pretty != 0));
    if (!run.all_pass()) return fail(POLIMAGE_ERR_CORPUS_MISMATCH, "corpus mismatch");
    return POLIMAGE_OK;
  });
}

}  // extern "C"
