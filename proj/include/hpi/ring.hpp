// Copyright 2026 The hpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic in Z[sqrt2] and Z[1/sqrt2].
//
// RingInt is a + b*sqrt2 with arbitrary-precision a, b. Dyadic is
// num / sqrt2^k, always stored with k minimal (k = lde), so structural
// equality is value equality and zero is uniquely ((0,0), 0).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hpi {

using Integer = mpz_class;

class RingInt {
 public:
  RingInt() = default;
  RingInt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  RingInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  // sqrt2 | (a + b sqrt2) iff a is even.
  bool divisible_by_rt2() const { return mpz_even_p(a_.get_mpz_t()) != 0; }
  // (a + b sqrt2) / sqrt2 = b + (a/2) sqrt2. Requires divisible_by_rt2().
  RingInt div_rt2() const;
  // (a + b sqrt2) * sqrt2 = 2b + a sqrt2.
  RingInt mul_rt2() const { return RingInt(Integer(2 * b_), a_); }
  RingInt mul_rt2_pow(unsigned m) const;

  RingInt operator-() const { return RingInt(Integer(-a_), Integer(-b_)); }
  RingInt& operator+=(const RingInt& o);
  RingInt& operator-=(const RingInt& o);

  friend RingInt operator+(RingInt x, const RingInt& y) { return x += y; }
  friend RingInt operator-(RingInt x, const RingInt& y) { return x -= y; }
  friend RingInt operator*(const RingInt& x, const RingInt& y);
  friend bool operator==(const RingInt& x, const RingInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Integer a_{0};
  Integer b_{0};
};

/// Residue of a RingInt modulo 2, classified by coefficient parity.
enum class Residue { Zero, One, Rt2, OnePlusRt2 };

Residue residue_mod2(const RingInt& x);
const char* to_string(Residue r) noexcept;

/// True for the residues 1 and 1+sqrt2, the "odd" classes that drive pivot
/// selection during synthesis.
inline bool is_odd_residue(Residue r) {
  return r == Residue::One || r == Residue::OnePlusRt2;
}

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)

  /// Canonical value of num / sqrt2^k.
  static Dyadic reduce(RingInt num, unsigned k);

  const RingInt& num() const noexcept { return num_; }
  unsigned k() const noexcept { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y);
  friend bool operator==(const Dyadic& x, const Dyadic& y) {
    return x.k_ == y.k_ && x.num_ == y.num_;
  }

  double to_double() const;

 private:
  RingInt num_;
  unsigned k_ = 0;
};

inline unsigned lde(const Dyadic& v) { return v.k(); }

/// Token form of a RingInt: "a", "b*rt2", "a+b*rt2", "a-b*rt2" or "0".
std::string to_string(const RingInt& x);
/// Dyadic text: the RingInt token when k = 0, otherwise "T/rt2^k" where T is
/// parenthesised when it has both parts.
std::string to_string(const Dyadic& v);

/// Parses the token grammar emitted by to_string(RingInt). "√2" is accepted
/// as a spelling of "rt2", and "rt2" alone as "1*rt2".
RingInt parse_ring_int(std::string_view text);
/// Parses "(T)/rt2^k", "T/rt2^k" or "T". The result is canonicalised.
Dyadic parse_dyadic(std::string_view text);

double to_double(const RingInt& x);

}  // namespace hpi
