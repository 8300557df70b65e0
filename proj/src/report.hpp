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

#pragma once

#include <string>

#include "json.hpp"

#include "classify.hpp"
#include "mat2.hpp"
#include "oracle.hpp"
#include "probe.hpp"
#include "units.hpp"

namespace polimage {

/// Every document carries this at top level under "schema".
inline constexpr int kJsonSchema = 1;

// Objects use sorted keys and carry no timings, so equal inputs give equal bytes.
using Json = nlohmann::json;

Json to_json(const Mat2& a);
Json to_json(const ConeClass& c);
Json to_json(const Witness& w);
Json to_json(const ProbeReport& r);
Json to_json(const ImageClass& c);
Json to_json(const ImageReport& r);
Json to_json(const CrossCheckReport& r);
Json to_json(const AlternatingTraceReport& r);
Json to_json(const NondenseReport& r);
Json to_json(const EulerCheck& e);

/// Invariants of one matrix: trace, det, disc, Π, cone class, eigenvalues over the closure.
Json matrix_report(const Mat2& a);

/// Adds "schema" and "command" and renders compactly, or indented when `pretty`.
std::string render(Json doc, const std::string& command, bool pretty);

}  // namespace polimage
