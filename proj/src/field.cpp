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

#include "field.hpp"

#include <cctype>
#include <utility>

#include "errors.hpp"
#include "modarith.hpp"

namespace polimage {

namespace modarith {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  for (std::uint64_t n = 2; n < p; ++n) {
    if (!is_quadratic_residue(n, p)) return n;
  }
  return 0;
}

std::uint64_t sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  const std::uint64_t z = smallest_nonresidue(p);
  std::uint64_t m = s;
  std::uint64_t c = pow(z, q, p);
  std::uint64_t t = pow(a, q, p);
  std::uint64_t r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  const std::uint64_t other = p - r;
  return r < other ? r : other;
}

}  // namespace modarith

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxCharacteristic || !modarith::is_prime(p)) {
    throw UsageError("characteristic must be 0 or a prime below 2^32, got " + std::to_string(p));
  }
  FieldSpec f;
  f.characteristic_ = p;
  f.degree_ = 1;
  f.nonresidue_ = p == 2 ? 0 : modarith::smallest_nonresidue(p);
  return f;
}

FieldSpec FieldSpec::prime_square(std::uint64_t p) {
  FieldSpec f = prime(p);
  f.degree_ = 2;
  return f;
}

FieldSpec FieldSpec::of_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

FieldSpec FieldSpec::prime_field() const {
  FieldSpec f = *this;
  f.degree_ = 1;
  return f;
}

FieldSpec FieldSpec::quadratic_extension() const {
  if (is_rational()) throw UsageError("quadratic extensions exist only in prime characteristic");
  FieldSpec f = *this;
  f.degree_ = 2;
  return f;
}

std::uint64_t FieldSpec::size() const {
  if (is_rational()) return 0;
  return degree_ == 2 ? characteristic_ * characteristic_ : characteristic_;
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  std::string n = "F_" + std::to_string(characteristic_);
  if (degree_ == 2) n += "^2";
  return n;
}

// ---------------------------------------------------------------------------
// Scalar construction

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.is_rational()) return Scalar(f, mpq_class(static_cast<long>(v)));
  return Scalar(f, Residue{modarith::from_signed(v, f.characteristic()), 0});
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  const std::uint64_t p = f.characteristic();
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den < 0) den += pz;
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f.name());
  const std::uint64_t n = num.get_ui();
  const std::uint64_t d = den.get_ui();
  return Scalar(f, Residue{modarith::mul(n, modarith::inv(d, p), p), 0});
}

Scalar Scalar::from_pair(const FieldSpec& f, std::uint64_t a, std::uint64_t b) {
  if (f.is_rational()) throw UsageError("pair encoding requires a finite field");
  const std::uint64_t p = f.characteristic();
  if (!f.is_extension() && b % p != 0) throw UsageError("theta component requires " + f.name() + "^2");
  return Scalar(f, Residue{a % p, f.is_extension() ? b % p : 0});
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected digits", pos);
    return std::string(text.substr(start, pos - start));
  }
};

// unsigned rational: digits ['/' digits]
mpq_class parse_unsigned_rational(Cursor& c) {
  const std::string num = c.digits();
  mpz_class n(num, 10);
  mpz_class d(1);
  if (c.accept('/')) {
    const std::size_t at = c.pos;
    d = mpz_class(c.digits(), 10);
    if (d == 0) throw ParseError("zero denominator", at);
  }
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  Cursor c{text};
  if (c.at_end()) throw ParseError("empty scalar", 0);
  mpq_class real(0);
  mpq_class theta(0);
  bool first = true;
  while (!c.at_end()) {
    bool negative = false;
    if (c.accept('-')) {
      negative = true;
    } else if (!c.accept('+') && !first) {
      throw ParseError("expected '+' or '-'", c.pos);
    }
    first = false;
    mpq_class coeff(1);
    bool has_coeff = false;
    if (c.peek_digit()) {
      coeff = parse_unsigned_rational(c);
      has_coeff = true;
    }
    bool is_theta = false;
    if (has_coeff && c.accept('*')) {
      if (!c.accept('t')) throw ParseError("expected 't' after '*'", c.pos);
      is_theta = true;
    } else if (!has_coeff) {
      if (!c.accept('t')) throw ParseError("expected number or 't'", c.pos);
      is_theta = true;
    }
    if (negative) coeff = -coeff;
    (is_theta ? theta : real) += coeff;
  }
  if (theta != 0 && !f.is_extension()) throw ParseError("'t' is only valid in F_p^2", 0);
  Scalar r = from_rational(f.prime_field(), real);
  if (f.is_extension()) {
    const Scalar t = from_rational(f.prime_field(), theta);
    return Scalar(f, Residue{r.residue(), t.residue()});
  }
  if (f.is_rational()) return r;
  return Scalar(f, Residue{r.residue(), 0});
}

// ---------------------------------------------------------------------------
// Accessors

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return res().a == 0 && res().b == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return res().a == 1 % field_.characteristic() && res().b == 0;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw UsageError("not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw UsageError("not a finite-field scalar");
  return res().a;
}

std::uint64_t Scalar::theta_part() const {
  if (field_.is_rational()) throw UsageError("not a finite-field scalar");
  return res().b;
}

Scalar Scalar::to_extension() const {
  if (field_.is_rational()) throw UsageError("ℚ has no quadratic extension here");
  if (field_.is_extension()) return *this;
  return Scalar(field_.quadratic_extension(), res());
}

Scalar Scalar::reduce_to(const FieldSpec& target) const {
  if (field_ == target) return *this;
  if (field_.is_rational()) {
    Scalar r = from_rational(target.prime_field(), std::get<mpq_class>(value_));
    return target.is_extension() ? r.to_extension() : r;
  }
  if (field_.characteristic() == target.characteristic()) {
    if (target.is_extension()) return to_extension();
    if (res().b != 0) throw UsageError("element does not lie in " + target.name());
    return Scalar(target, Residue{res().a, 0});
  }
  throw UsageError("cannot map " + field_.name() + " into " + target.name());
}

// ---------------------------------------------------------------------------
// Arithmetic

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw UsageError("mixed-field operands: " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, Residue{modarith::neg(res().a, p), modarith::neg(res().b, p)});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    res().a = modarith::add(res().a, o.res().a, p);
    res().b = modarith::add(res().b, o.res().b, p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    res().a = modarith::sub(res().a, o.res().a, p);
    res().b = modarith::sub(res().b, o.res().b, p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    return *this;
  }
  const std::uint64_t p = field_.characteristic();
  const auto [a, b] = res();
  const auto [c, d] = o.res();
  using namespace modarith;
  if (!field_.is_extension()) {
    res().a = mul(a, c, p);
    return *this;
  }
  const std::uint64_t bd = mul(b, d, p);
  const std::uint64_t cross = add(mul(a, d, p), mul(b, c, p), p);
  if (p == 2) {
    // θ² = θ + 1
    res().a = add(mul(a, c, p), bd, p);
    res().b = add(cross, bd, p);
  } else {
    res().a = add(mul(a, c, p), mul(bd, field_.nonresidue(), p), p);
    res().b = cross;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  const std::uint64_t p = field_.characteristic();
  using namespace modarith;
  const auto [a, b] = res();
  if (!field_.is_extension()) return Scalar(field_, Residue{inv(a, p), 0});
  if (p == 2) {
    // (a + bθ)(a + b + bθ) = a² + ab + b²
    const std::uint64_t norm = add(add(mul(a, a, p), mul(a, b, p), p), mul(b, b, p), p);
    const std::uint64_t ni = inv(norm, p);
    return Scalar(field_, Residue{mul(add(a, b, p), ni, p), mul(b, ni, p)});
  }
  // (a + bθ)(a - bθ) = a² - d b²
  const std::uint64_t norm = sub(mul(a, a, p), mul(field_.nonresidue(), mul(b, b, p), p), p);
  const std::uint64_t ni = inv(norm, p);
  return Scalar(field_, Residue{mul(a, ni, p), mul(neg(b, p), ni, p)});
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (!(x.field_ == y.field_)) return false;
  if (x.field_.is_rational()) return std::get<mpq_class>(x.value_) == std::get<mpq_class>(y.value_);
  return x.res().a == y.res().a && x.res().b == y.res().b;
}

bool encoding_less(const Scalar& x, const Scalar& y) {
  x.require_same_field(y);
  if (x.field_.is_rational()) return std::get<mpq_class>(x.value_) < std::get<mpq_class>(y.value_);
  if (x.res().a != y.res().a) return x.res().a < y.res().a;
  return x.res().b < y.res().b;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  const auto [a, b] = res();
  if (b == 0) return std::to_string(a);
  if (a == 0) return std::to_string(b) + "*t";
  return std::to_string(a) + "+" + std::to_string(b) + "*t";
}

Scalar sqrt_in_closure(const Scalar& a) {
  const FieldSpec& f = a.field();
  if (f.is_rational()) throw UsageError("square roots are only provided in prime characteristic");
  if (f.is_extension() && a.theta_part() != 0) throw UsageError("sqrt_in_closure expects an F_p element");
  const std::uint64_t p = f.characteristic();
  const FieldSpec ext = f.quadratic_extension();
  const std::uint64_t v = a.residue();
  if (p == 2 || v == 0) return Scalar::from_pair(ext, v, 0);  // Frobenius: a² = a over F_2
  if (modarith::is_quadratic_residue(v, p)) return Scalar::from_pair(ext, modarith::sqrt(v, p), 0);
  // v = d·s² with θ² = d, so sqrt(v) = s·θ.
  const std::uint64_t s = modarith::sqrt(modarith::mul(v, modarith::inv(ext.nonresidue(), p), p), p);
  return Scalar::from_pair(ext, 0, s);
}

}  // namespace polimage
