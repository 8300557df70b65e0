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

#include "mat2.hpp"

#include <vector>

#include "errors.hpp"

namespace polimage {

Mat2::Mat2(const FieldSpec& f) : e_{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)} {}

Mat2::Mat2(const Scalar& a11, const Scalar& a12, const Scalar& a21, const Scalar& a22) : e_{a11, a12, a21, a22} {
  const FieldSpec& f = a11.field();
  if (!(a12.field() == f && a21.field() == f && a22.field() == f)) {
    throw UsageError("matrix entries from different fields");
  }
}

Mat2 Mat2::identity(const FieldSpec& f) { return scalar(Scalar::one(f)); }

Mat2 Mat2::scalar(const Scalar& c) {
  const Scalar z = Scalar::zero(c.field());
  return Mat2(c, z, z, c);
}

Mat2 Mat2::unit(unsigned i, unsigned j, const FieldSpec& f) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw UsageError("matrix unit index out of range");
  Mat2 m(f);
  m(i - 1, j - 1) = Scalar::one(f);
  return m;
}

Mat2 Mat2::from_ints(const FieldSpec& f, long long a11, long long a12, long long a21, long long a22) {
  return Mat2(Scalar::from_int(f, a11), Scalar::from_int(f, a12), Scalar::from_int(f, a21),
              Scalar::from_int(f, a22));
}

Mat2 Mat2::parse(std::string_view text, const FieldSpec& f) {
  std::vector<Scalar> entries;
  std::size_t start = 0;
  unsigned commas_in_row = 0;
  unsigned rows = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    const char c = end ? ';' : text[i];
    if (c != ',' && c != ';') continue;
    if (c == ',') {
      if (++commas_in_row > 1) throw ParseError("expected ';' (two entries per row)", i);
    } else {
      if (commas_in_row != 1) throw ParseError("expected ',' (two entries per row)", i);
      commas_in_row = 0;
      if (++rows > 2 && !end) throw ParseError("expected two rows", i);
    }
    try {
      entries.push_back(Scalar::parse(text.substr(start, i - start), f));
    } catch (const ParseError& e) {
      throw ParseError("bad matrix entry", start + e.position());
    }
    start = i + 1;
  }
  if (entries.size() != 4) throw ParseError("expected a 2x2 matrix 'a,b;c,d'", text.size());
  return Mat2(entries[0], entries[1], entries[2], entries[3]);
}

bool Mat2::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Mat2::is_diagonal() const { return e_[1].is_zero() && e_[2].is_zero(); }

bool Mat2::is_scalar() const { return is_diagonal() && e_[0] == e_[3]; }

Mat2& Mat2::operator+=(const Mat2& o) {
  for (std::size_t i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  for (std::size_t i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
              a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

Mat2 operator*(const Scalar& c, const Mat2& a) { return Mat2(c * a(0, 0), c * a(0, 1), c * a(1, 0), c * a(1, 1)); }

Mat2 Mat2::reduce_to(const FieldSpec& f) const {
  return Mat2(e_[0].reduce_to(f), e_[1].reduce_to(f), e_[2].reduce_to(f), e_[3].reduce_to(f));
}

Mat2 Mat2::inverse() const {
  const Scalar d = det(*this);
  if (d.is_zero()) throw DivisionByZero("singular matrix");
  const Scalar di = d.inverse();
  return Mat2(e_[3] * di, -e_[1] * di, -e_[2] * di, e_[0] * di);
}

std::string Mat2::to_string() const {
  return e_[0].to_string() + "," + e_[1].to_string() + ";" + e_[2].to_string() + "," + e_[3].to_string();
}

Scalar trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

Scalar det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

Scalar disc(const Mat2& a) {
  const Scalar t = trace(a);
  return t * t - Scalar::from_int(a.field(), 4) * det(a);
}

std::string PiValue::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return value->to_string();
    case Kind::Infinite:
      return "inf";
    case Kind::Undefined:
      break;
  }
  return "undefined";
}

PiValue pi_invariant(const Mat2& a) {
  const Scalar t = trace(a);
  const Scalar d = det(a);
  if (d.is_zero()) {
    return t.is_zero() ? PiValue{PiValue::Kind::Undefined, std::nullopt} : PiValue{PiValue::Kind::Infinite, std::nullopt};
  }
  return PiValue{PiValue::Kind::Finite, t * t / d - Scalar::from_int(a.field(), 2)};
}

ConeClass cone_classify(const Mat2& a) {
  using K = ConeClass::Kind;
  if (a.is_zero()) return {K::Zero, {}};
  if (a.is_scalar()) return {K::ScalarNonzero, {}};
  const Scalar t = trace(a);
  if (t.is_zero()) {
    return det(a).is_zero() ? ConeClass{K::NilpotentNonzero, {}} : ConeClass{K::KHat, {}};
  }
  if (disc(a).is_zero()) return {K::KTilde, {}};
  return {K::DiagDistinct, pi_invariant(a)};
}

const char* cone_kind_name(ConeClass::Kind k) {
  switch (k) {
    case ConeClass::Kind::Zero:
      return "Zero";
    case ConeClass::Kind::ScalarNonzero:
      return "ScalarNonzero";
    case ConeClass::Kind::NilpotentNonzero:
      return "NilpotentNonzero";
    case ConeClass::Kind::KTilde:
      return "KTilde";
    case ConeClass::Kind::KHat:
      return "KHat";
    case ConeClass::Kind::DiagDistinct:
      return "DiagDistinct";
  }
  return "?";
}

bool similar(const Mat2& a, const Mat2& b) {
  if (!(a.field() == b.field())) throw UsageError("similar: matrices over different fields");
  return trace(a) == trace(b) && det(a) == det(b) && a.is_scalar() == b.is_scalar();
}

Mat2 conjugate(const Mat2& a, const Mat2& g) {
  if (det(g).is_zero()) throw UsageError("conjugate: g is singular");
  return g * a * g.inverse();
}

std::pair<Scalar, Scalar> eigenvalues_in_closure(const Mat2& a) {
  const FieldSpec& f = a.field();
  if (f.is_rational()) throw UsageError("eigenvalues_in_closure needs prime characteristic");
  const FieldSpec ext = f.quadratic_extension();
  const FieldSpec base = f.prime_field();
  // Entries must lie in F_p so that the discriminant has a root in F_{p²}.
  const Mat2 b = a.reduce_to(base);
  const Scalar t = trace(b).to_extension();
  const Scalar d = det(b).to_extension();

  std::pair<Scalar, Scalar> roots;
  if (f.characteristic() == 2) {
    std::vector<Scalar> found;
    for (std::uint64_t x = 0; x < 2; ++x) {
      for (std::uint64_t y = 0; y < 2; ++y) {
        const Scalar l = Scalar::from_pair(ext, x, y);
        if ((l * l - t * l + d).is_zero()) found.push_back(l);
      }
    }
    roots = found.size() == 1 ? std::make_pair(found[0], found[0]) : std::make_pair(found.at(0), found.at(1));
  } else {
    const Scalar s = sqrt_in_closure(disc(b));
    const Scalar half = Scalar::from_int(ext, 2).inverse();
    roots = {(t + s) * half, (t - s) * half};
  }
  if (encoding_less(roots.second, roots.first)) std::swap(roots.first, roots.second);
  return roots;
}

}  // namespace polimage
