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

namespace polimage::modarith {

// Residues are kept in [0, p) with p < 2^32, so every product fits in 64 bits.

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a nonzero residue (p prime).
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

/// Reduce a signed integer into [0, p).
inline std::uint64_t from_signed(long long v, std::uint64_t p) {
  const long long sp = static_cast<long long>(p);
  long long r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n);

/// Euler's criterion; p odd prime.
inline bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
  a %= p;
  return a == 0 || pow(a, (p - 1) / 2, p) == 1;
}

/// Smallest quadratic non-residue modulo an odd prime.
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// Tonelli-Shanks square root of a quadratic residue modulo an odd prime. Returns the smaller root.
std::uint64_t sqrt(std::uint64_t a, std::uint64_t p);

}  // namespace polimage::modarith
