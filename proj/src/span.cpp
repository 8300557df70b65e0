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

#include "span.hpp"

#include <algorithm>

namespace polimage {

const char* span_tag_name(SpanTag t) {
  switch (t) {
    case SpanTag::Zero:
      return "zero";
    case SpanTag::Scalars:
      return "scalars";
    case SpanTag::SL2:
      return "sl2";
    case SpanTag::Full:
      return "full";
    case SpanTag::Anomaly:
      return "anomaly";
  }
  return "?";
}

bool SpanBuilder::add(const Mat2& v) {
  if (rows_.size() == 4) return false;
  std::array<Scalar, 4> r = v.entries();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (c.is_zero()) continue;
    for (unsigned j = 0; j < 4; ++j) r[j] -= c * rows_[k][j];
  }
  unsigned pivot = 4;
  for (unsigned j = 0; j < 4; ++j) {
    if (!r[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == 4) return false;
  const Scalar inv = r[pivot].inverse();
  for (auto& x : r) x *= inv;
  // keep earlier rows reduced so membership tests stay one pass
  for (auto& row : rows_) {
    const Scalar c = row[pivot];
    if (c.is_zero()) continue;
    for (unsigned j = 0; j < 4; ++j) row[j] -= c * r[j];
  }
  rows_.push_back(r);
  pivots_.push_back(pivot);
  originals_.push_back(v);
  return true;
}

SpanTag SpanBuilder::tag() const {
  switch (rows_.size()) {
    case 0:
      return SpanTag::Zero;
    case 1:
      return originals_[0].is_scalar() ? SpanTag::Scalars : SpanTag::Anomaly;
    case 3:
      return std::all_of(originals_.begin(), originals_.end(), [](const Mat2& m) { return trace(m).is_zero(); })
                 ? SpanTag::SL2
                 : SpanTag::Anomaly;
    case 4:
      return SpanTag::Full;
    default:
      return SpanTag::Anomaly;
  }
}

SpanResult span_dimension(std::span<const Mat2> values) {
  SpanResult r;
  if (values.empty()) return r;
  SpanBuilder b(values.front().field());
  for (std::size_t i = 0; i < values.size() && b.dimension() < 4; ++i) {
    if (b.add(values[i])) {
      r.basis_indices.push_back(i);
      r.basis.push_back(values[i]);
    }
  }
  r.dimension = b.dimension();
  r.tag = b.tag();
  return r;
}

}  // namespace polimage
