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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freepoly.hpp"
#include "mat2.hpp"

namespace polimage {

/// m matrix units e_{k l} of M_n, 1-based indices.
struct UnitTuple {
  unsigned n = 2;
  std::vector<std::pair<unsigned, unsigned>> units;

  std::string to_string() const;  // "e12,e21"
  friend bool operator==(const UnitTuple&, const UnitTuple&) = default;
};

/// "e12,e21"; two-digit indices only, so n ≤ 9.
UnitTuple parse_units(std::string_view text, unsigned n = 2);
/// Tuple number `index` in canonical order: x_1 varies slowest, units ordered e11, e12, …, enn.
UnitTuple unit_tuple_at(std::uint64_t index, unsigned m, unsigned n = 2);

struct UnitGraph {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;  // k → l per unit
  std::vector<unsigned> out_degree, in_degree;

  explicit UnitGraph(const UnitTuple& t);
  unsigned total_degree(unsigned v) const { return out_degree[v - 1] + in_degree[v - 1]; }
  /// All edges lie in one weakly connected component.
  bool edges_connected() const;
};

struct EulerVerdict {
  enum class Kind { NoPathOrCircuit, PathClass, CircuitClass };
  Kind kind = Kind::NoPathOrCircuit;
  unsigned from = 0, to = 0;  // PathClass only

  std::string to_string() const;
  friend bool operator==(const EulerVerdict&, const EulerVerdict&) = default;
};

/// A word evaluated on the tuple is nonzero exactly when it traces a directed Eulerian walk,
/// so the balance of in/out degrees decides the shape of every multilinear value.
EulerVerdict euler_predict(const UnitTuple& t);

/// Sparse n×n value: entries (row, col, coeff), rows/cols 1-based, sorted, no zeros.
struct UnitValue {
  unsigned n = 2;
  std::vector<std::pair<std::pair<unsigned, unsigned>, Scalar>> entries;

  bool is_zero() const { return entries.empty(); }
  bool is_diagonal() const;
  /// Nonzero entries only at (i, j).
  bool within(unsigned i, unsigned j) const;
  Mat2 to_mat2(const FieldSpec& f) const;
  std::string to_string() const;
};

/// Value of p on the tuple (products of units stay units or vanish).
UnitValue evaluate_on_units(const FreePoly& p, const UnitTuple& t);

struct EulerCheck {
  EulerVerdict verdict;
  UnitValue value;
  bool compatible = false;
};
/// Requires p multilinear in exactly t.units.size() variables.
EulerCheck check_euler(const FreePoly& p, const UnitTuple& t);

struct UnitEvaluation {
  UnitTuple tuple;
  UnitValue value;
};

inline constexpr std::uint64_t kDefaultUnitBudget = 1ULL << 20;  // 4^10

/// All n^(2m) tuples with their values, in canonical order. Throws BudgetExceeded past `budget`.
std::vector<UnitEvaluation> unit_evaluations(const FreePoly& p, unsigned n = 2,
                                             std::uint64_t budget = kDefaultUnitBudget, unsigned threads = 1);

}  // namespace polimage
