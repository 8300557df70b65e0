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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mat2.hpp"

namespace polimage {

enum class SpanTag { Zero, Scalars, SL2, Full, Anomaly };
const char* span_tag_name(SpanTag t);

struct SpanResult {
  unsigned dimension = 0;
  /// Positions (in the input) of the first linearly independent values.
  std::vector<std::size_t> basis_indices;
  std::vector<Mat2> basis;
  SpanTag tag = SpanTag::Zero;
};

/// Rank of the vectorized matrices over their field, compared with 0, K·I, sl2 and M2.
SpanResult span_dimension(std::span<const Mat2> values);

/// Incremental row echelon form over one field, for callers that stream values.
class SpanBuilder {
 public:
  explicit SpanBuilder(const FieldSpec& f) : field_(f) {}
  /// True when v enlarged the span.
  bool add(const Mat2& v);
  unsigned dimension() const { return static_cast<unsigned>(rows_.size()); }
  SpanTag tag() const;

 private:
  FieldSpec field_;
  std::vector<std::array<Scalar, 4>> rows_;  // reduced, pivot column of row k in pivots_[k]
  std::vector<unsigned> pivots_;
  std::vector<Mat2> originals_;
};

}  // namespace polimage
