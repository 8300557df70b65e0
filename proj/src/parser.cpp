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

// Recursive-descent parser for the polynomial grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff | [coeff '*'] factor ('*' factor)*
//   factor := primary ('^' posint)*
//   primary:= var | comm | '(' expr ')' | builtin
//   comm   := '[' expr ',' expr ']'
//   var    := 'x' posint
//   builtin:= 's' posint | 'c' posint
//   coeff  := integer | integer '/' posint

#include <cctype>
#include <limits>

#include "errors.hpp"
#include "freepoly.hpp"

namespace polimage {

namespace {

constexpr unsigned kMaxExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, unsigned vars, const FieldSpec& field)
      : text_(text), declared_(vars), vars_(vars == 0 ? kInferVars : vars), field_(field) {}

  FreePoly parse() {
    FreePoly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    const unsigned used = p.max_variable();
    return p.with_vars(declared_ == 0 ? used : declared_);
  }

 private:
  static constexpr unsigned kInferVars = std::numeric_limits<unsigned>::max();

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned posint(const char* what) {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      pos_ = at;
      fail(std::string(what) + " must be a positive integer");
    }
    mpz_class v = integer();
    if (v <= 0) {
      pos_ = at;
      fail(std::string(what) + " must be a positive integer");
    }
    if (!v.fits_uint_p()) {
      pos_ = at;
      fail(std::string(what) + " is too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  FreePoly zero() const { return FreePoly(0, field_); }

  FreePoly expr() {
    FreePoly sum = zero();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      FreePoly t = term();
      if (negative) {
        sum -= t;
      } else {
        sum += t;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return sum;
  }

  FreePoly term() {
    if (peek_digit()) {
      const std::size_t at = pos_;
      mpz_class num = integer();
      mpz_class den(1);
      if (accept('/')) {
        const std::size_t den_at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = den_at;
          fail("zero denominator");
        }
      }
      mpq_class q(num, den);
      q.canonicalize();
      Scalar c;
      try {
        c = Scalar::from_rational(field_, q);
      } catch (const DivisionByZero&) {
        pos_ = at;
        fail("coefficient denominator vanishes in " + field_.name());
      }
      if (!accept('*')) return FreePoly::constant(c, 0);
      return product().scaled(c);
    }
    return product();
  }

  FreePoly product() {
    FreePoly p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  FreePoly factor() {
    FreePoly base = primary();
    while (accept('^')) {
      const unsigned k = posint("exponent");
      if (k > kMaxExponent) fail("exponent too large");
      base = base.pow(k);
    }
    return base;
  }

  FreePoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FreePoly e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      FreePoly a = expr();
      expect(',');
      FreePoly b = expr();
      expect(']');
      return commutator(a, b);
    }
    if (c == 'x') {
      ++pos_;
      const unsigned idx = posint("variable index");
      if (idx > vars_) {
        pos_ = at;
        fail("undeclared variable x" + std::to_string(idx));
      }
      return FreePoly::variable(idx, idx, field_);
    }
    if (c == 's' || c == 'c') {
      ++pos_;
      const unsigned k = posint("builtin size");
      if (k > 8) {
        pos_ = at;
        fail("builtin size too large");
      }
      FreePoly p = c == 's' ? standard_poly(k, field_) : capelli_poly(k, field_);
      if (p.vars() > vars_) {
        pos_ = at;
        fail(std::string(1, c) + std::to_string(k) + " needs " + std::to_string(p.vars()) + " variables");
      }
      return p;
    }
    fail("expected variable, '(', '[' or builtin");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned declared_;
  unsigned vars_;
  FieldSpec field_;
};

}  // namespace

FreePoly parse_poly(std::string_view text, unsigned vars, const FieldSpec& field) {
  return Parser(text, vars, field).parse();
}

}  // namespace polimage
