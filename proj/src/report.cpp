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

#include "report.hpp"

namespace polimage {

namespace {

Json class_counts(const std::array<std::uint64_t, 6>& counts) {
  Json out = Json::object();
  for (std::size_t k = 0; k < counts.size(); ++k) out[cone_kind_name(static_cast<ConeClass::Kind>(k))] = counts[k];
  return out;
}

Json matrices(const std::vector<Mat2>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json sample(const ProbeSample& s) {
  return {{"trial", s.trial}, {"args", matrices(s.args)}, {"value", to_json(s.value)}, {"cone", to_json(s.cone)}};
}

Json samples(const std::vector<ProbeSample>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back(sample(s));
  return out;
}

}  // namespace

Json to_json(const Mat2& a) { return a.to_string(); }

Json to_json(const ConeClass& c) {
  Json out = {{"kind", cone_kind_name(c.kind)}};
  if (c.kind == ConeClass::Kind::DiagDistinct) out["pi"] = c.pi.to_string();
  return out;
}

Json to_json(const Witness& w) {
  Json out = {{"role", w.role}, {"source", w.source}, {"args", matrices(w.args)}, {"value", to_json(w.value)},
              {"cone", to_json(cone_classify(w.value))}};
  if (w.units) out["units"] = w.units->to_string();
  return out;
}

Json to_json(const ProbeReport& r) {
  Json out = {{"prime", r.prime},
              {"trials", r.trials},
              {"seed", r.seed},
              {"degree", r.degree},
              {"vars", r.vars},
              {"all_zero", r.all_zero},
              {"all_central", r.all_central},
              {"all_trace_zero", r.all_trace_zero},
              {"ratio_constant", r.ratio_constant},
              {"class_counts", class_counts(r.class_counts)},
              {"class_witnesses", samples(r.class_witnesses)},
              {"pi_witnesses", samples(r.pi_witnesses)},
              {"per_trial_bound", r.per_trial_bound},
              {"total_bound", r.total_bound}};
  if (r.ratio) out["ratio"] = r.ratio->to_string();
  return out;
}

Json to_json(const ImageClass& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
  Json out = {{"verdict", verdict_name(c.verdict)},
              {"route", c.route},
              {"characteristic", c.characteristic},
              {"mode", mode_name(c.mode)},
              {"seed", c.seed},
              {"budget_consumed", c.budget_consumed},
              {"assumptions", c.assumptions},
              {"notes", c.notes},
              {"diagnostics", c.diagnostics},
              {"witnesses", witnesses}};
  if (c.span_tag) out["span"] = {{"tag", span_tag_name(*c.span_tag)}, {"dimension", c.span_dimension}};
  if (c.weights) {
    out["weights"] = *c.weights;
    out["weighted_degree"] = c.weighted_degree;
  }
  if (c.generic_terms) out["generic_terms"] = c.generic_terms;
  if (c.probe) out["probe"] = to_json(*c.probe);
  if (!c.top_parts.empty()) {
    Json parts = Json::array();
    for (const auto& t : c.top_parts) {
      parts.push_back({{"weights", t.weights},
                       {"degree", t.degree},
                       {"terms", t.terms},
                       {"verdict", verdict_name(t.verdict)},
                       {"route", t.route}});
    }
    out["top_parts"] = parts;
  }
  return out;
}

Json to_json(const ImageReport& r) {
  return {{"q", r.q},
          {"m", r.m},
          {"path", r.path},
          {"tuples", r.tuples},
          {"evaluations", r.evaluations},
          {"multilinear", r.multilinear},
          {"image_size", r.image.size()},
          {"class_counts", class_counts(r.class_counts)},
          {"contains_zero", r.contains_zero},
          {"conjugation_invariant", r.conjugation_invariant},
          {"cone_closed", r.cone_closed},
          {"span", {{"tag", span_tag_name(r.span_tag)}, {"dimension", r.span_dimension}}}};
}

Json to_json(const CrossCheckReport& r) {
  return {{"q", r.q},
          {"enumerated", {{"tag", span_tag_name(r.enumerated_tag)}, {"dimension", r.enumerated_dimension}}},
          {"classifier",
           {{"verdict", verdict_name(r.classifier_verdict)},
            {"tag", span_tag_name(r.classifier_tag)},
            {"dimension", r.classifier_dimension}}},
          {"e12_required", r.e12_required},
          {"e12_present", r.e12_present},
          {"agree", r.agree}};
}

Json to_json(const AlternatingTraceReport& r) {
  Json trials = Json::array();
  for (const auto& s : r.samples) {
    trials.push_back({{"t", to_json(s.t)}, {"factor", s.factor.to_string()}, {"trace_t", s.trace_t.to_string()}});
  }
  return {{"prime", r.prime},
          {"seed", r.seed},
          {"trials", r.trials},
          {"degenerate_resamples", r.degenerate_resamples},
          {"proportional", r.proportional},
          {"factor_is_twice_trace", r.factor_is_twice_trace},
          {"factor_is_trace", r.factor_is_trace},
          {"linear_in_t", r.linear_in_t},
          {"observed_factor", r.factor_is_twice_trace == r.trials ? "2*tr(T)" : "inconsistent"},
          {"trace_normalization_mismatch", r.factor_is_trace < r.trials},
          {"samples", trials},
          {"holds", r.holds()}};
}

Json to_json(const NondenseReport& r) {
  Json failures = Json::array();
  for (const auto& s : r.failures) failures.push_back({{"args", matrices(s.args)}, {"value", to_json(s.value)}});
  return {{"field", r.field.name()}, {"seed", r.seed},         {"samples", r.samples},
          {"holds", r.holds},        {"failures", failures},   {"ok", r.ok()}};
}

Json to_json(const EulerCheck& e) {
  return {{"prediction", e.verdict.to_string()}, {"value", e.value.to_string()}, {"compatible", e.compatible}};
}

Json matrix_report(const Mat2& a) {
  Json out = {{"matrix", to_json(a)},
          {"field", a.field().name()},
          {"trace", trace(a).to_string()},
          {"det", det(a).to_string()},
          {"disc", disc(a).to_string()},
          {"pi", pi_invariant(a).to_string()},
          {"cone", to_json(cone_classify(a))}};
  if (!a.field().is_rational()) {
    const auto [l1, l2] = eigenvalues_in_closure(a);
    out["eigenvalues"] = {l1.to_string(), l2.to_string()};
  }
  return out;
}

std::string render(Json doc, const std::string& command, bool pretty) {
  doc["schema"] = kJsonSchema;
  doc["command"] = command;
  return pretty ? doc.dump(2) : doc.dump();
}

}  // namespace polimage
