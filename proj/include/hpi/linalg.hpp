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

// Dense square matrices over Z[1/sqrt2] with one shared denominator exponent.
//
// Entry (i, j) has value num(i, j) / sqrt2^k(), with k() minimal. Public
// index arguments named `row`/`col` are 0-based; generator indices and level
// components are 1-based.

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hpi/ring.hpp"

namespace hpi {

/// A column vector over Z[1/sqrt2] with its own canonical exponent.
struct ExactVector {
  std::vector<RingInt> num;
  unsigned k = 0;

  size_t size() const { return num.size(); }
  Dyadic at(size_t i) const { return Dyadic::reduce(num[i], k); }
  friend bool operator==(const ExactVector&, const ExactVector&) = default;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(size_t n) : n_(n), num_(n * n) {}

  static ExactMatrix identity(size_t n);
  /// Builds num / sqrt2^k from row-major numerators and canonicalises.
  static ExactMatrix from_numerators(size_t n, std::vector<RingInt> num, unsigned k);
  static ExactMatrix from_dyadics(size_t n, const std::vector<Dyadic>& entries);

  size_t dim() const noexcept { return n_; }
  unsigned k() const noexcept { return k_; }
  const RingInt& num(size_t row, size_t col) const { return num_[row * n_ + col]; }
  Dyadic at(size_t row, size_t col) const { return Dyadic::reduce(num(row, col), k_); }

  ExactVector column(size_t col) const;
  ExactMatrix transpose() const;
  bool is_identity() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.num_ == b.num_;
  }

  // In-place generator actions used by synthesis and word evaluation.
  void swap_rows(size_t r1, size_t r2);
  void swap_cols(size_t c1, size_t c2);
  void negate_row(size_t r);
  void negate_col(size_t c);
  /// Rows (r1, r2) <- ((r1 + r2), (r1 - r2)) / sqrt2.
  void hadamard_rows(size_t r1, size_t r2);
  /// Columns (c1, c2) <- ((c1 + c2), (c1 - c2)) / sqrt2.
  void hadamard_cols(size_t c1, size_t c2);

 private:
  RingInt& mut(size_t row, size_t col) { return num_[row * n_ + col]; }
  void canonicalize();

  size_t n_ = 0;
  std::vector<RingInt> num_;
  unsigned k_ = 0;
};

/// M_[a_1..a_m]: acts as `block` on the listed 1-based rows/columns of an
/// n x n identity.
ExactMatrix m_level_embed(const ExactMatrix& block, std::span<const unsigned> rows, size_t n);

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
/// Kronecker product; row index of (i, j) is i * dim(b) + j.
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

bool is_orthogonal(const ExactMatrix& m);

/// Permutation matrix X_pi with X_pi e_j = e_{pi(j)}; `perm[j-1]` is pi(j).
ExactMatrix permutation_matrix(std::span<const unsigned> perm);

// ---------------------------------------------------------------------------
// Generators

enum class GenKind { Z, X, H };

/// Z_[a], X_[a,b] or H_[a,b] with 1-based indices. Z ignores `b`. X and H
/// are canonical when a < b; reversed forms are meaningful (as m-level
/// matrices with the rows taken in the given order) but parsers normalise
/// them away.
struct Generator {
  GenKind kind = GenKind::Z;
  unsigned a = 1;
  unsigned b = 0;

  static Generator z(unsigned a) { return {GenKind::Z, a, 0}; }
  static Generator x(unsigned a, unsigned b) { return {GenKind::X, a, b}; }
  static Generator h(unsigned a, unsigned b) { return {GenKind::H, a, b}; }

  unsigned max_index() const { return kind == GenKind::Z ? a : std::max(a, b); }
  bool canonical() const { return kind == GenKind::Z || a < b; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);
/// Throws Index errors for index 0, equal indices, or indices above n.
void validate(const Generator& g, size_t n);

ExactMatrix generator_matrix(const Generator& g, size_t n);
/// m <- G m
void apply_left(const Generator& g, ExactMatrix& m);
/// m <- m G
void apply_right(ExactMatrix& m, const Generator& g);

// ---------------------------------------------------------------------------
// Level

struct Level {
  unsigned j = 0;
  unsigned k = 0;
  unsigned l = 0;

  friend auto operator<=>(const Level&, const Level&) = default;
};

std::string to_string(const Level& lv);

/// Level triple of an orthogonal matrix. Throws Domain for non-orthogonal
/// input.
Level level(const ExactMatrix& m);
/// level() without the orthogonality check.
Level level_unchecked(const ExactMatrix& m);

// ---------------------------------------------------------------------------
// Text format:
//   dim <n>
//   lde <k>
//   n rows of n RingInt tokens
// The tokens are the numerators of sqrt2^k * M.

std::string to_text(const ExactMatrix& m);
ExactMatrix parse_matrix(std::string_view text);
/// Non-authoritative decimal rendering for debugging.
std::string to_float_text(const ExactMatrix& m);

}  // namespace hpi
