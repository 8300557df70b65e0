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

#include "units.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errors.hpp"
#include "parallel.hpp"

namespace polimage {

std::string UnitTuple::to_string() const {
  std::string s;
  for (const auto& [k, l] : units) {
    if (!s.empty()) s += ',';
    s += 'e' + std::to_string(k) + std::to_string(l);
  }
  return s;
}

UnitTuple parse_units(std::string_view text, unsigned n) {
  if (n < 1 || n > 9) throw UsageError("matrix size must be between 1 and 9");
  UnitTuple t;
  t.n = n;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    if (pos + 3 > text.size() || text[pos] != 'e') throw ParseError("expected a unit like e12", start);
    const unsigned k = static_cast<unsigned>(text[pos + 1] - '0');
    const unsigned l = static_cast<unsigned>(text[pos + 2] - '0');
    if (k < 1 || k > n || l < 1 || l > n) throw ParseError("unit index out of range", start + 1);
    t.units.emplace_back(k, l);
    pos += 3;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      if (pos == text.size()) throw ParseError("trailing ','", pos);
    }
  }
  if (t.units.empty()) throw ParseError("empty unit list", 0);
  return t;
}

UnitTuple unit_tuple_at(std::uint64_t index, unsigned m, unsigned n) {
  UnitTuple t;
  t.n = n;
  t.units.resize(m);
  const std::uint64_t base = std::uint64_t{n} * n;
  for (unsigned v = m; v-- > 0;) {
    const auto u = static_cast<unsigned>(index % base);
    index /= base;
    t.units[v] = {u / n + 1, u % n + 1};
  }
  return t;
}

UnitGraph::UnitGraph(const UnitTuple& t) : n(t.n), edges(t.units), out_degree(t.n), in_degree(t.n) {
  for (const auto& [k, l] : edges) {
    ++out_degree[k - 1];
    ++in_degree[l - 1];
  }
}

bool UnitGraph::edges_connected() const {
  if (edges.empty()) return true;
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [k, l] : edges) parent[find(k - 1)] = find(l - 1);
  const unsigned root = find(edges.front().first - 1);
  return std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return find(e.first - 1) == root; });
}

std::string EulerVerdict::to_string() const {
  switch (kind) {
    case Kind::NoPathOrCircuit:
      return "NoPathOrCircuit";
    case Kind::PathClass:
      return "PathClass(" + std::to_string(from) + "," + std::to_string(to) + ")";
    case Kind::CircuitClass:
      return "CircuitClass";
  }
  return "?";
}

EulerVerdict euler_predict(const UnitTuple& t) {
  const UnitGraph g(t);
  EulerVerdict v;
  if (!g.edges_connected()) return v;
  unsigned from = 0, to = 0;
  for (unsigned x = 1; x <= g.n; ++x) {
    const long diff = static_cast<long>(g.out_degree[x - 1]) - static_cast<long>(g.in_degree[x - 1]);
    if (diff == 0) continue;
    if (diff == 1 && from == 0) {
      from = x;
    } else if (diff == -1 && to == 0) {
      to = x;
    } else {
      return v;
    }
  }
  if (from == 0 && to == 0) {
    v.kind = EulerVerdict::Kind::CircuitClass;
  } else if (from != 0 && to != 0) {
    v.kind = EulerVerdict::Kind::PathClass;
    v.from = from;
    v.to = to;
  }
  return v;
}

bool UnitValue::is_diagonal() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.first.first == e.first.second; });
}

bool UnitValue::within(unsigned i, unsigned j) const {
  return std::all_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == std::pair{i, j}; });
}

Mat2 UnitValue::to_mat2(const FieldSpec& f) const {
  if (n != 2) throw UsageError("value is not 2x2");
  Mat2 m(f);
  for (const auto& [pos, c] : entries) m(pos.first - 1, pos.second - 1) = c;
  return m;
}

std::string UnitValue::to_string() const {
  if (entries.empty()) return "0";
  std::string s;
  for (const auto& [pos, c] : entries) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*e" + std::to_string(pos.first) + std::to_string(pos.second);
  }
  return s;
}

UnitValue evaluate_on_units(const FreePoly& p, const UnitTuple& t) {
  if (t.units.size() < p.vars()) throw UsageError("not enough units for the polynomial's variables");
  std::map<std::pair<unsigned, unsigned>, Scalar> acc;
  auto add = [&](unsigned i, unsigned j, const Scalar& c) {
    auto [it, inserted] = acc.try_emplace({i, j}, c);
    if (!inserted) it->second += c;
  };
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      for (unsigned i = 1; i <= t.n; ++i) add(i, i, c);
      continue;
    }
    const auto [start, first_end] = t.units[w[0] - 1];
    unsigned end = first_end;
    bool alive = true;
    for (std::size_t k = 1; k < w.size() && alive; ++k) {
      const auto [a, b] = t.units[w[k] - 1];
      if (a != end) alive = false;
      end = b;
    }
    if (alive) add(start, end, c);
  }
  UnitValue v;
  v.n = t.n;
  for (auto& [pos, c] : acc) {
    if (!c.is_zero()) v.entries.emplace_back(pos, std::move(c));
  }
  return v;
}

EulerCheck check_euler(const FreePoly& p, const UnitTuple& t) {
  if (!is_multilinear(p) || p.vars() != t.units.size()) {
    throw UsageError("check_euler needs a multilinear polynomial with one unit per variable");
  }
  EulerCheck r;
  r.verdict = euler_predict(t);
  r.value = evaluate_on_units(p, t);
  switch (r.verdict.kind) {
    case EulerVerdict::Kind::NoPathOrCircuit:
      r.compatible = r.value.is_zero();
      break;
    case EulerVerdict::Kind::PathClass:
      r.compatible = r.value.within(r.verdict.from, r.verdict.to);
      break;
    case EulerVerdict::Kind::CircuitClass:
      r.compatible = r.value.is_diagonal();
      break;
  }
  return r;
}

std::vector<UnitEvaluation> unit_evaluations(const FreePoly& p, unsigned n, std::uint64_t budget, unsigned threads) {
  const unsigned m = p.vars();
  const std::uint64_t base = std::uint64_t{n} * n;
  std::uint64_t count = 1;
  for (unsigned v = 0; v < m; ++v) {
    if (count > budget / base) {
      throw BudgetExceeded("unit tuple count " + std::to_string(base) + "^" + std::to_string(m) +
                           " exceeds the budget of " + std::to_string(budget));
    }
    count *= base;
  }
  if (count > budget) throw BudgetExceeded("unit tuple count exceeds the budget of " + std::to_string(budget));
  std::vector<UnitEvaluation> out(count);
  parallel_blocks(count, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i].tuple = unit_tuple_at(i, m, n);
      out[i].value = evaluate_on_units(p, out[i].tuple);
    }
  });
  return out;
}

}  // namespace polimage
