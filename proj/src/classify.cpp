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

#include "classify.hpp"

#include <algorithm>

#include "errors.hpp"
#include "eval.hpp"
#include "rng.hpp"

namespace polimage {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Zero:
      return "Zero";
    case Verdict::Scalars:
      return "Scalars";
    case Verdict::KHat:
      return "KHat";
    case Verdict::SL2:
      return "SL2";
    case Verdict::Full:
      return "Full";
    case Verdict::Dense:
      return "Dense";
    case Verdict::TraceZeroUndetermined:
      return "TraceZeroUndetermined";
    case Verdict::TopPartInconclusive:
      return "TopPartInconclusive";
    case Verdict::Anomaly:
      return "Anomaly";
  }
  return "?";
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Symbolic:
      return "symbolic";
    case Mode::Probabilistic:
      return "probabilistic";
    case Mode::Auto:
      return "auto";
  }
  return "?";
}

namespace {

std::string closure_assumption(std::uint64_t c) {
  return "values taken over the quadratic closure of the prime field of characteristic " + std::to_string(c);
}

SearchOptions search_options(const ClassifyOptions& opts) {
  SearchOptions s;
  s.budget = opts.search_budget;
  s.seed = opts.seed;
  s.threads = opts.threads;
  return s;
}

Witness from_search(const SearchWitness& w, std::string role) {
  return Witness{std::move(role), w.stage, w.args, w.value, std::nullopt};
}

Witness from_units(const UnitEvaluation& e, const FieldSpec& f, std::string role) {
  Witness w{std::move(role), "units", {}, e.value.to_mat2(f), e.tuple};
  for (const auto& [k, l] : e.tuple.units) w.args.push_back(Mat2::unit(k, l, f));
  return w;
}

Witness from_probe(const ProbeSample& s, std::string role) {
  return Witness{std::move(role), "probe", s.args, s.value, std::nullopt};
}

// Searches for a value satisfying pred and records it; returns whether one was found.
bool find_witness(const FreePoly& q, const ValuePredicate& pred, const std::string& role, const ClassifyOptions& opts,
                  ImageClass& out) {
  SearchOptions s = search_options(opts);
  s.budget = opts.search_budget > out.budget_consumed ? opts.search_budget - out.budget_consumed : 0;
  if (s.budget == 0) return false;
  const SearchResult r = search_witness(q, pred, s);
  out.budget_consumed += r.consumed;
  if (!r.witness) return false;
  out.witnesses.push_back(from_search(*r.witness, role));
  return true;
}

bool is_nonzero(const Mat2& v) { return !v.is_zero(); }
bool is_nilpotent_nonzero(const Mat2& v) { return !v.is_zero() && trace(v).is_zero() && det(v).is_zero(); }

std::uint64_t probe_prime_for(const ClassifyOptions& opts) {
  if (opts.probe_prime != 0) return opts.probe_prime;
  return opts.characteristic != 0 ? opts.characteristic : kDefaultProbePrime;
}

// Facts about P = p(generic matrices), from exact expansion or from sampling.
struct GenericFacts {
  bool zero = false;
  bool central = false;
  bool trace_zero = false;
  bool ratio_constant = false;
  bool det_identically_zero = false;
  std::optional<Scalar> ratio;
};

GenericFacts symbolic_facts(const FreePoly& q, const ClassifyOptions& opts, ImageClass& out) {
  const GenericMat g = generic_eval(q, opts.term_budget);
  out.generic_terms = g.term_count();
  GenericFacts f;
  f.zero = is_identically_zero(g);
  f.central = is_central(g);
  const ComPoly tr = generic_trace(g);
  f.trace_zero = tr.is_zero();
  if (!f.zero && !f.central && !f.trace_zero) {
    const Proportionality prop = proportionality(ComPoly::multiply(tr, tr, opts.term_budget), generic_det(g, opts.term_budget));
    f.ratio_constant = prop.proportional;
    f.det_identically_zero = prop.degenerate;
    if (prop.proportional) f.ratio = prop.factor;
  }
  return f;
}

GenericFacts probabilistic_facts(const FreePoly& q, const ClassifyOptions& opts, ImageClass& out) {
  out.probe = probabilistic_probe(q, opts.probe_trials, probe_prime_for(opts), opts.seed, opts.threads);
  const ProbeReport& r = *out.probe;
  GenericFacts f;
  f.zero = r.all_zero;
  f.central = r.all_central;
  f.trace_zero = r.all_trace_zero;
  f.ratio_constant = r.ratio_constant;
  f.ratio = r.ratio;
  f.det_identically_zero = r.ratio_constant && !r.ratio;
  return f;
}

void add_pi_witnesses(const FreePoly& q, const ClassifyOptions& opts, ImageClass& out) {
  if (out.probe && out.probe->pi_witnesses.size() == 2) {
    out.witnesses.push_back(from_probe(out.probe->pi_witnesses[0], "pi-first"));
    out.witnesses.push_back(from_probe(out.probe->pi_witnesses[1], "pi-second"));
    return;
  }
  auto defined = [](const Mat2& v) { return !v.is_zero() && pi_invariant(v).kind != PiValue::Kind::Undefined; };
  if (!find_witness(q, defined, "pi-first", opts, out)) return;
  const PiValue first = pi_invariant(out.witnesses.back().value);
  auto other = [first, defined](const Mat2& v) { return defined(v) && !(pi_invariant(v) == first); };
  if (!find_witness(q, other, "pi-second", opts, out)) {
    out.diagnostics.push_back("no second value with a different eigenvalue ratio within the search budget");
  }
}

ImageClass classify_multilinear_prepared(const FreePoly& q, const ClassifyOptions& opts) {
  if (!is_multilinear(q)) throw UsageError("polynomial is not multilinear");
  ImageClass out;
  out.route = "multilinear";
  out.characteristic = opts.characteristic;
  out.mode = Mode::Symbolic;
  out.seed = opts.seed;
  out.assumptions.push_back(closure_assumption(opts.characteristic));

  const auto evals = unit_evaluations(q, 2, opts.unit_budget, opts.threads);
  out.budget_consumed = evals.size();
  std::vector<Mat2> values;
  values.reserve(evals.size());
  for (const auto& e : evals) values.push_back(e.value.to_mat2(q.field()));
  const SpanResult span = span_dimension(values);
  out.span_tag = span.tag;
  out.span_dimension = span.dimension;
  for (auto i : span.basis_indices) out.witnesses.push_back(from_units(evals[i], q.field(), "basis"));

  switch (span.tag) {
    case SpanTag::Zero:
      out.verdict = Verdict::Zero;
      break;
    case SpanTag::Scalars:
      out.verdict = Verdict::Scalars;
      break;
    case SpanTag::SL2:
      out.verdict = Verdict::SL2;
      break;
    case SpanTag::Full:
      out.verdict = Verdict::Full;
      break;
    case SpanTag::Anomaly:
      out.verdict = Verdict::Anomaly;
      out.diagnostics.push_back("span of the unit evaluations has dimension " + std::to_string(span.dimension) +
                                " and is none of 0, scalars, sl2, M2");
      break;
  }
  if (out.verdict == Verdict::SL2 || out.verdict == Verdict::Full) {
    auto it = std::find_if(values.begin(), values.end(), is_nilpotent_nonzero);
    if (it != values.end()) out.witnesses.push_back(from_units(evals[it - values.begin()], q.field(), "nilpotent"));
  }
  return out;
}

ImageClass classify_semihomogeneous_prepared(const FreePoly& q, const WeightVector& w, const ClassifyOptions& opts) {
  if (w.size() != q.vars()) throw UsageError("weight vector length differs from the variable count");
  const SemiHomogeneity sh = semi_homogeneous_check(q, w);
  if (!sh.ok) {
    throw UsageError("not semi-homogeneous for the given weights: " + word_to_string(sh.first) + " has degree " +
                     std::to_string(sh.first_degree) + ", " + word_to_string(sh.second) + " has degree " +
                     std::to_string(sh.second_degree));
  }
  if (sh.degree == 0) throw UsageError("weighted degree is 0 for the given weights");

  ImageClass out;
  out.route = "semihomogeneous";
  out.characteristic = opts.characteristic;
  out.seed = opts.seed;
  out.weights = w;
  out.weighted_degree = sh.degree;
  out.assumptions.push_back(closure_assumption(opts.characteristic));

  GenericFacts facts;
  if (opts.mode == Mode::Probabilistic) {
    out.mode = Mode::Probabilistic;
    facts = probabilistic_facts(q, opts, out);
  } else {
    try {
      out.mode = Mode::Symbolic;
      facts = symbolic_facts(q, opts, out);
    } catch (const BudgetExceeded& e) {
      if (opts.mode == Mode::Symbolic) throw;
      out.mode = Mode::Probabilistic;
      out.generic_terms = 0;
      out.diagnostics.push_back(std::string(e.what()) + "; switched to probabilistic mode");
      facts = probabilistic_facts(q, opts, out);
    }
  }

  if (facts.zero) {
    out.verdict = Verdict::Zero;
    return out;
  }
  if (facts.central) {
    out.verdict = Verdict::Scalars;
    if (!find_witness(q, is_nonzero, "nonzero", opts, out)) {
      out.diagnostics.push_back("no nonzero value found within the search budget");
    }
    return out;
  }
  if (facts.trace_zero) {
    if (find_witness(q, is_nilpotent_nonzero, "nilpotent", opts, out)) {
      out.verdict = Verdict::SL2;
      return out;
    }
    out.verdict = Verdict::TraceZeroUndetermined;
    out.notes.push_back("KHat candidate: every value has trace zero and no nonzero nilpotent value was found in " +
                        std::to_string(out.budget_consumed) + " evaluations; absence cannot be certified by search");
    const std::uint64_t spent = out.budget_consumed;
    out.budget_consumed = 0;  // the nonzero witness gets its own budget
    if (!find_witness(q, is_nonzero, "nonzero", opts, out)) {
      out.diagnostics.push_back("no nonzero value found within the search budget");
    }
    out.budget_consumed += spent;
    return out;
  }
  if (facts.det_identically_zero) {
    out.verdict = Verdict::Anomaly;
    out.diagnostics.push_back("det vanishes identically while the trace does not");
    return out;
  }
  if (facts.ratio_constant) {
    out.verdict = Verdict::Anomaly;
    out.diagnostics.push_back("tr^2 = c*det identically with c = " + (facts.ratio ? facts.ratio->to_string() : "?") +
                              "; excluded for a field closed under square and d-th roots");
    return out;
  }
  out.verdict = Verdict::Dense;
  out.assumptions.push_back("field closed under d-th roots, d = " + std::to_string(sh.degree));
  add_pi_witnesses(q, opts, out);
  return out;
}

}  // namespace

FreePoly prepare_for_classification(const FreePoly& p, std::uint64_t characteristic) {
  const FieldSpec target = FieldSpec::of_characteristic(characteristic);
  FreePoly q;
  if (p.field() == target) {
    q = p;
  } else if (p.field().is_rational()) {
    q = p.reduce_to(target);
  } else {
    throw UsageError("polynomial over " + p.field().name() + " cannot be classified in characteristic " +
                     std::to_string(characteristic));
  }
  if (q.has_constant_term()) throw UsageError("classification requires a polynomial without constant term");
  return q;
}

ImageClass classify_multilinear(const FreePoly& p, const ClassifyOptions& opts) {
  return classify_multilinear_prepared(prepare_for_classification(p, opts.characteristic), opts);
}

ImageClass classify_semihomogeneous(const FreePoly& p, const WeightVector& w, const ClassifyOptions& opts) {
  return classify_semihomogeneous_prepared(prepare_for_classification(p, opts.characteristic), w, opts);
}

ImageClass classify_general(const FreePoly& p, const ClassifyOptions& opts) {
  const FreePoly q = prepare_for_classification(p, opts.characteristic);
  for (const auto& w : opts.weights) {
    if (w.size() != q.vars()) throw UsageError("weight vector length differs from the variable count");
  }
  if (q.is_zero()) {
    ImageClass out;
    out.verdict = Verdict::Zero;
    out.route = "zero-polynomial";
    out.characteristic = opts.characteristic;
    out.seed = opts.seed;
    return out;
  }
  if (is_multilinear(q)) return classify_multilinear_prepared(q, opts);

  for (const auto& w : opts.weights) {
    const SemiHomogeneity sh = semi_homogeneous_check(q, w);
    if (sh.ok && sh.degree != 0) return classify_semihomogeneous_prepared(q, w, opts);
  }
  const WeightSolutions inferred = infer_weights(q);
  if (inferred.positive) return classify_semihomogeneous_prepared(q, *inferred.positive, opts);

  ImageClass out;
  out.route = "top-part";
  out.characteristic = opts.characteristic;
  out.seed = opts.seed;
  out.mode = opts.mode == Mode::Probabilistic ? Mode::Probabilistic : Mode::Symbolic;
  out.assumptions.push_back(closure_assumption(opts.characteristic));

  std::vector<WeightVector> candidates = opts.weights;
  const WeightVector ones(q.vars(), 1);
  if (std::find(candidates.begin(), candidates.end(), ones) == candidates.end()) candidates.push_back(ones);

  bool dense = false;
  for (const auto& w : candidates) {
    const auto parts = weighted_parts(q, w);
    const auto& [degree, top] = parts.back();
    if (degree <= 0) {
      out.diagnostics.push_back("weights with non-positive top degree skipped");
      continue;
    }
    ImageClass sub = is_multilinear(top) ? classify_multilinear_prepared(top, opts)
                                         : classify_semihomogeneous_prepared(top, w, opts);
    if (sub.mode == Mode::Probabilistic) out.mode = Mode::Probabilistic;
    for (const auto& d : sub.diagnostics) out.diagnostics.push_back("top part: " + d);
    out.top_parts.push_back({w, degree, top.size(), sub.verdict, sub.route});
    if (sub.verdict == Verdict::Dense || sub.verdict == Verdict::Full) {
      dense = true;
      for (const auto& a : sub.assumptions) {
        if (std::find(out.assumptions.begin(), out.assumptions.end(), a) == out.assumptions.end()) {
          out.assumptions.push_back(a);
        }
      }
      break;
    }
  }
  out.verdict = dense ? Verdict::Dense : Verdict::TopPartInconclusive;
  if (!dense) out.notes.push_back("no candidate weight vector has a dense top part");
  if (!find_witness(q, is_nonzero, "nonzero", opts, out)) {
    out.diagnostics.push_back("no nonzero value found within the search budget");
  }
  return out;
}

FreePoly nondense_polynomial(const FieldSpec& f) { return parse_poly("[x1,x2] + [x1,x2]^2", 2, f); }

NondenseReport nondense_invariant_check(const FieldSpec& f, unsigned samples, std::uint64_t seed, long long range) {
  if (f.characteristic() == 2) throw UsageError("the invariant needs characteristic other than 2");
  if (f.is_extension()) throw UsageError("sampling needs a prime field or Q");
  const FreePoly p = nondense_polynomial(f);
  const Evaluator eval(p);
  const Scalar two = Scalar::from_int(f, 2);
  NondenseReport r;
  r.field = f;
  r.seed = seed;
  r.samples = samples;
  for (unsigned i = 0; i < samples; ++i) {
    auto rng = trial_rng(seed, i);
    std::vector<Mat2> args;
    for (int k = 0; k < 2; ++k) {
      std::array<Scalar, 4> e;
      for (auto& x : e) {
        x = f.is_rational() ? Scalar::from_int(f, uniform_between(rng, -range, range))
                            : Scalar::from_pair(f, uniform_below(rng, f.characteristic()), 0);
      }
      args.emplace_back(e[0], e[1], e[2], e[3]);
    }
    const Mat2 v = eval(args);
    if (disc(v) == two * trace(v)) {
      ++r.holds;
    } else if (r.failures.size() < 5) {
      r.failures.push_back({args, v});
    }
  }
  return r;
}

}  // namespace polimage
