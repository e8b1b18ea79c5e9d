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

#include "hpi/ring.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "hpi/error.hpp"

namespace hpi {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Type: return "type error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::Index: return "index error";
    case ErrorCode::Dimension: return "dimension error";
    case ErrorCode::Step: return "step error";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Internal: return "internal error";
  }
  return "error";
}

RingInt RingInt::div_rt2() const {
  if (!divisible_by_rt2()) fail(ErrorCode::Internal, "div_rt2: odd rational part");
  Integer half;
  mpz_divexact_ui(half.get_mpz_t(), a_.get_mpz_t(), 2);
  return RingInt(b_, std::move(half));
}

RingInt RingInt::mul_rt2_pow(unsigned m) const {
  // sqrt2^(2q+r) = 2^q * sqrt2^r
  RingInt out(Integer(a_ << (m / 2)), Integer(b_ << (m / 2)));
  if (m % 2 == 1) out = out.mul_rt2();
  return out;
}

RingInt& RingInt::operator+=(const RingInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingInt& RingInt::operator-=(const RingInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingInt operator*(const RingInt& x, const RingInt& y) {
  Integer a = x.a_ * y.a_ + 2 * x.b_ * y.b_;
  Integer b = x.a_ * y.b_ + y.a_ * x.b_;
  return RingInt(std::move(a), std::move(b));
}

Residue residue_mod2(const RingInt& x) {
  const bool a_odd = mpz_odd_p(x.a().get_mpz_t()) != 0;
  const bool b_odd = mpz_odd_p(x.b().get_mpz_t()) != 0;
  if (a_odd) return b_odd ? Residue::OnePlusRt2 : Residue::One;
  return b_odd ? Residue::Rt2 : Residue::Zero;
}

const char* to_string(Residue r) noexcept {
  switch (r) {
    case Residue::Zero: return "0";
    case Residue::One: return "1";
    case Residue::Rt2: return "rt2";
    case Residue::OnePlusRt2: return "1+rt2";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Dyadic Dyadic::reduce(RingInt num, unsigned k) {
  Dyadic out;
  if (num.is_zero()) return out;
  while (k > 0 && num.divisible_by_rt2()) {
    num = num.div_rt2();
    --k;
  }
  out.num_ = std::move(num);
  out.k_ = k;
  return out;
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.num_ = -num_;
  return out;
}

namespace {

// Brings both numerators to the common exponent max(kx, ky).
std::pair<RingInt, RingInt> align(const Dyadic& x, const Dyadic& y, unsigned* k) {
  *k = std::max(x.k(), y.k());
  return {x.num().mul_rt2_pow(*k - x.k()), y.num().mul_rt2_pow(*k - y.k())};
}

}  // namespace

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  unsigned k = 0;
  auto [nx, ny] = align(x, y, &k);
  return Dyadic::reduce(nx + ny, k);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) {
  unsigned k = 0;
  auto [nx, ny] = align(x, y, &k);
  return Dyadic::reduce(nx - ny, k);
}

Dyadic operator*(const Dyadic& x, const Dyadic& y) {
  return Dyadic::reduce(x.num() * y.num(), x.k() + y.k());
}

double to_double(const RingInt& x) {
  return x.a().get_d() + x.b().get_d() * std::sqrt(2.0);
}

double Dyadic::to_double() const {
  return hpi::to_double(num_) / std::pow(std::sqrt(2.0), static_cast<double>(k_));
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const RingInt& x) {
  const bool has_a = sgn(x.a()) != 0;
  const bool has_b = sgn(x.b()) != 0;
  if (!has_a && !has_b) return "0";
  std::string out;
  if (has_a) out = x.a().get_str();
  if (has_b) {
    if (has_a && sgn(x.b()) > 0) out += '+';
    out += x.b().get_str();
    out += "*rt2";
  }
  return out;
}

std::string to_string(const Dyadic& v) {
  std::string t = to_string(v.num());
  if (v.k() == 0) return t;
  const bool both = sgn(v.num().a()) != 0 && sgn(v.num().b()) != 0;
  if (both) t = "(" + t + ")";
  return t + "/rt2^" + std::to_string(v.k());
}

namespace {

std::string normalize_sqrt_spelling(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    // UTF-8 for U+221A SQUARE ROOT is E2 88 9A.
    if (text.compare(i, 5, "\xE2\x88\x9A" "2") == 0) {
      s += "rt2";
      i += 4;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorCode::Parse, "malformed ring element '" + std::string(text) + "'");
}

}  // namespace

RingInt parse_ring_int(std::string_view text) {
  const std::string s = normalize_sqrt_spelling(text);
  if (s.empty()) bad_number(text);
  Integer a = 0, b = 0;
  bool seen_a = false, seen_b = false;
  size_t pos = 0;
  while (pos < s.size()) {
    // term := [sign] (INT ["*rt2"] | "rt2"); every term after the first is signed
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      bad_number(text);
    }
    Integer coeff = 1;
    bool has_digits = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      has_digits = true;
      ++pos;
    }
    if (has_digits) {
      size_t first = pos;
      while (first > 0 && std::isdigit(static_cast<unsigned char>(s[first - 1]))) --first;
      coeff.set_str(s.substr(first, pos - first), 10);
    }
    bool irrational = false;
    if (has_digits && s.compare(pos, 4, "*rt2") == 0) {
      pos += 4;
      irrational = true;
    } else if (!has_digits && s.compare(pos, 3, "rt2") == 0) {
      pos += 3;
      irrational = true;
    } else if (!has_digits) {
      bad_number(text);
    }
    if (negative) coeff = -coeff;
    bool& seen = irrational ? seen_b : seen_a;
    if (seen || (!irrational && seen_b)) bad_number(text);
    seen = true;
    (irrational ? b : a) = std::move(coeff);
  }
  return RingInt(std::move(a), std::move(b));
}

Dyadic parse_dyadic(std::string_view text) {
  const std::string s = normalize_sqrt_spelling(text);
  unsigned k = 0;
  std::string numer = s;
  const size_t slash = s.find('/');
  if (slash != std::string::npos) {
    numer = s.substr(0, slash);
    const std::string denom = s.substr(slash + 1);
    if (denom.rfind("rt2^", 0) != 0 || denom.size() == 4) bad_number(text);
    for (size_t i = 4; i < denom.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(denom[i]))) bad_number(text);
    k = static_cast<unsigned>(std::stoul(denom.substr(4)));
  }
  if (numer.size() >= 2 && numer.front() == '(' && numer.back() == ')')
    numer = numer.substr(1, numer.size() - 2);
  return Dyadic::reduce(parse_ring_int(numer), k);
}

}  // namespace hpi
