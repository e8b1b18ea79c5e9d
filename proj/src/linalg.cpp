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

#include "hpi/linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hpi/error.hpp"

namespace hpi {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n);
  for (size_t i = 0; i < n; ++i) m.mut(i, i) = RingInt(1);
  return m;
}

ExactMatrix ExactMatrix::from_numerators(size_t n, std::vector<RingInt> num, unsigned k) {
  if (num.size() != n * n) fail(ErrorCode::Dimension, "numerator count does not match dim");
  ExactMatrix m;
  m.n_ = n;
  m.num_ = std::move(num);
  m.k_ = k;
  m.canonicalize();
  return m;
}

ExactMatrix ExactMatrix::from_dyadics(size_t n, const std::vector<Dyadic>& entries) {
  if (entries.size() != n * n) fail(ErrorCode::Dimension, "entry count does not match dim");
  unsigned k = 0;
  for (const Dyadic& d : entries) k = std::max(k, d.k());
  std::vector<RingInt> num;
  num.reserve(entries.size());
  for (const Dyadic& d : entries) num.push_back(d.num().mul_rt2_pow(k - d.k()));
  return from_numerators(n, std::move(num), k);
}

void ExactMatrix::canonicalize() {
  while (k_ > 0) {
    bool divisible = std::all_of(num_.begin(), num_.end(),
                                 [](const RingInt& x) { return x.divisible_by_rt2(); });
    if (!divisible) break;
    for (RingInt& x : num_) x = x.div_rt2();
    --k_;
  }
  if (k_ > 0 && std::all_of(num_.begin(), num_.end(), [](const RingInt& x) { return x.is_zero(); }))
    k_ = 0;
}

ExactVector ExactMatrix::column(size_t col) const {
  if (col >= n_) fail(ErrorCode::Index, "column index out of range");
  ExactVector v;
  v.num.reserve(n_);
  for (size_t i = 0; i < n_; ++i) v.num.push_back(num(i, col));
  v.k = k_;
  bool nonzero = std::any_of(v.num.begin(), v.num.end(), [](const RingInt& x) { return !x.is_zero(); });
  if (!nonzero) v.k = 0;
  while (v.k > 0 && std::all_of(v.num.begin(), v.num.end(),
                                [](const RingInt& x) { return x.divisible_by_rt2(); })) {
    for (RingInt& x : v.num) x = x.div_rt2();
    --v.k;
  }
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  t.k_ = k_;
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) t.mut(j, i) = num(i, j);
  return t;
}

bool ExactMatrix::is_identity() const {
  if (k_ != 0) return false;
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      const RingInt& x = num(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::Dimension, "matmul: dimension mismatch");
  const size_t n = a.n_;
  std::vector<RingInt> out(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t p = 0; p < n; ++p) {
      const RingInt& x = a.num(i, p);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        const RingInt& y = b.num(p, j);
        if (!y.is_zero()) out[i * n + j] += x * y;
      }
    }
  return ExactMatrix::from_numerators(n, std::move(out), a.k_ + b.k_);
}

void ExactMatrix::swap_rows(size_t r1, size_t r2) {
  for (size_t j = 0; j < n_; ++j) std::swap(mut(r1, j), mut(r2, j));
}

void ExactMatrix::swap_cols(size_t c1, size_t c2) {
  for (size_t i = 0; i < n_; ++i) std::swap(mut(i, c1), mut(i, c2));
}

void ExactMatrix::negate_row(size_t r) {
  for (size_t j = 0; j < n_; ++j) mut(r, j) = -num(r, j);
}

void ExactMatrix::negate_col(size_t c) {
  for (size_t i = 0; i < n_; ++i) mut(i, c) = -num(i, c);
}

void ExactMatrix::hadamard_rows(size_t r1, size_t r2) {
  // Everything outside rows r1, r2 is scaled by sqrt2 to keep the shared
  // exponent; canonicalize() strips the common factor afterwards.
  for (size_t i = 0; i < n_; ++i) {
    if (i == r1 || i == r2) continue;
    for (size_t j = 0; j < n_; ++j) mut(i, j) = num(i, j).mul_rt2();
  }
  for (size_t j = 0; j < n_; ++j) {
    RingInt x = num(r1, j), y = num(r2, j);
    mut(r1, j) = x + y;
    mut(r2, j) = x - y;
  }
  ++k_;
  canonicalize();
}

void ExactMatrix::hadamard_cols(size_t c1, size_t c2) {
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) {
      if (j == c1 || j == c2) continue;
      mut(i, j) = num(i, j).mul_rt2();
    }
    RingInt x = num(i, c1), y = num(i, c2);
    mut(i, c1) = x + y;
    mut(i, c2) = x - y;
  }
  ++k_;
  canonicalize();
}

// ---------------------------------------------------------------------------

ExactMatrix m_level_embed(const ExactMatrix& block, std::span<const unsigned> rows, size_t n) {
  const size_t m = block.dim();
  if (rows.size() != m) fail(ErrorCode::Dimension, "m_level_embed: index count != block dim");
  for (size_t i = 0; i < m; ++i) {
    if (rows[i] < 1 || rows[i] > n)
      fail(ErrorCode::Index, "m_level_embed: index " + std::to_string(rows[i]) + " outside [1," +
                                 std::to_string(n) + "]");
    for (size_t j = 0; j < i; ++j)
      if (rows[i] == rows[j]) fail(ErrorCode::Index, "m_level_embed: duplicate index");
  }
  std::vector<RingInt> num(n * n);
  const RingInt one = RingInt(1).mul_rt2_pow(block.k());
  for (size_t i = 0; i < n; ++i) num[i * n + i] = one;
  for (size_t i = 0; i < m; ++i) num[(rows[i] - 1) * n + (rows[i] - 1)] = RingInt();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) num[(rows[i] - 1) * n + (rows[j] - 1)] = block.num(i, j);
  return ExactMatrix::from_numerators(n, std::move(num), block.k());
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  const size_t na = a.dim(), nb = b.dim(), n = na + nb;
  const unsigned k = std::max(a.k(), b.k());
  std::vector<RingInt> num(n * n);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) num[i * n + j] = a.num(i, j).mul_rt2_pow(k - a.k());
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j)
      num[(na + i) * n + (na + j)] = b.num(i, j).mul_rt2_pow(k - b.k());
  return ExactMatrix::from_numerators(n, std::move(num), k);
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
  const size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<RingInt> num(n * n);
  for (size_t i1 = 0; i1 < na; ++i1)
    for (size_t j1 = 0; j1 < na; ++j1) {
      const RingInt& x = a.num(i1, j1);
      if (x.is_zero()) continue;
      for (size_t i2 = 0; i2 < nb; ++i2)
        for (size_t j2 = 0; j2 < nb; ++j2)
          num[(i1 * nb + i2) * n + (j1 * nb + j2)] = x * b.num(i2, j2);
    }
  return ExactMatrix::from_numerators(n, std::move(num), a.k() + b.k());
}

bool is_orthogonal(const ExactMatrix& m) { return (m.transpose() * m).is_identity(); }

ExactMatrix permutation_matrix(std::span<const unsigned> perm) {
  const size_t n = perm.size();
  std::vector<bool> hit(n, false);
  std::vector<RingInt> num(n * n);
  for (size_t j = 0; j < n; ++j) {
    const unsigned target = perm[j];
    if (target < 1 || target > n || hit[target - 1])
      fail(ErrorCode::Domain, "not a permutation of [1," + std::to_string(n) + "]");
    hit[target - 1] = true;
    num[(target - 1) * n + j] = RingInt(1);
  }
  return ExactMatrix::from_numerators(n, std::move(num), 0);
}

// ---------------------------------------------------------------------------

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case GenKind::Z: return "Z[" + std::to_string(g.a) + "]";
    case GenKind::X: return "X[" + std::to_string(g.a) + "," + std::to_string(g.b) + "]";
    case GenKind::H: return "H[" + std::to_string(g.a) + "," + std::to_string(g.b) + "]";
  }
  return "?";
}

void validate(const Generator& g, size_t n) {
  auto in_range = [n](unsigned i) { return i >= 1 && i <= n; };
  if (!in_range(g.a) || (g.kind != GenKind::Z && !in_range(g.b)))
    fail(ErrorCode::Index, to_string(g) + " has an index outside [1," + std::to_string(n) + "]");
  if (g.kind != GenKind::Z && g.a == g.b)
    fail(ErrorCode::Index, to_string(g) + " needs two distinct indices");
}

ExactMatrix generator_matrix(const Generator& g, size_t n) {
  validate(g, n);
  ExactMatrix m = ExactMatrix::identity(n);
  apply_left(g, m);
  return m;
}

void apply_left(const Generator& g, ExactMatrix& m) {
  validate(g, m.dim());
  switch (g.kind) {
    case GenKind::Z: m.negate_row(g.a - 1); break;
    case GenKind::X: m.swap_rows(g.a - 1, g.b - 1); break;
    case GenKind::H: m.hadamard_rows(g.a - 1, g.b - 1); break;
  }
}

void apply_right(ExactMatrix& m, const Generator& g) {
  validate(g, m.dim());
  switch (g.kind) {
    case GenKind::Z: m.negate_col(g.a - 1); break;
    case GenKind::X: m.swap_cols(g.a - 1, g.b - 1); break;
    case GenKind::H: m.hadamard_cols(g.a - 1, g.b - 1); break;
  }
}

// ---------------------------------------------------------------------------

std::string to_string(const Level& lv) {
  return "(" + std::to_string(lv.j) + "," + std::to_string(lv.k) + "," + std::to_string(lv.l) + ")";
}

Level level_unchecked(const ExactMatrix& m) {
  Level lv;
  const size_t n = m.dim();
  ExactVector col;
  for (size_t c = n; c-- > 0;) {
    col = m.column(c);
    bool is_basis = col.k == 0;
    for (size_t r = 0; r < n && is_basis; ++r)
      is_basis = r == c ? col.num[r].is_one() : col.num[r].is_zero();
    if (!is_basis) {
      lv.j = static_cast<unsigned>(c + 1);
      break;
    }
  }
  if (lv.j == 0) return lv;
  lv.k = col.k;
  if (lv.k == 0) return lv;
  for (const RingInt& x : col.num)
    if (is_odd_residue(residue_mod2(x))) ++lv.l;
  return lv;
}

Level level(const ExactMatrix& m) {
  if (!is_orthogonal(m)) fail(ErrorCode::Domain, "level: matrix is not orthogonal");
  return level_unchecked(m);
}

// ---------------------------------------------------------------------------

std::string to_text(const ExactMatrix& m) {
  std::string out = "dim " + std::to_string(m.dim()) + "\nlde " + std::to_string(m.k()) + "\n";
  for (size_t i = 0; i < m.dim(); ++i) {
    for (size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += to_string(m.num(i, j));
    }
    out += '\n';
  }
  return out;
}

ExactMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  long long n = -1, k = -1;
  if (!(in >> word) || word != "dim" || !(in >> n) || n < 0)
    fail(ErrorCode::Parse, "matrix text must start with 'dim <n>'");
  if (!(in >> word) || word != "lde" || !(in >> k) || k < 0)
    fail(ErrorCode::Parse, "matrix text must have 'lde <k>' on line 2");
  const size_t dim = static_cast<size_t>(n);
  std::vector<RingInt> num;
  num.reserve(dim * dim);
  while (in >> word) num.push_back(parse_ring_int(word));
  if (num.size() != dim * dim)
    fail(ErrorCode::Parse, "expected " + std::to_string(dim * dim) + " entries, got " +
                               std::to_string(num.size()));
  return ExactMatrix::from_numerators(dim, std::move(num), static_cast<unsigned>(k));
}

std::string to_float_text(const ExactMatrix& m) {
  std::string out = "# approximate (non-authoritative)\n";
  char buf[64];
  for (size_t i = 0; i < m.dim(); ++i) {
    for (size_t j = 0; j < m.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%s%.6f", j ? " " : "", m.at(i, j).to_double());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hpi
