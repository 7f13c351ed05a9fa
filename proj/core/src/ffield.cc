// Copyright 2026 The mcss Authors
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

#include "mcss/ffield.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "mcss/error.h"

namespace mcss {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFieldMismatch,
                "operands live in F_" + std::to_string(a.modulus()) +
                    " and F_" + std::to_string(b.modulus()));
  }
}

// Reduced row echelon form in place over `cols` leading columns; returns the
// pivot column of each pivot row (row i holds pivot i after the call).
std::vector<std::size_t> rref(const PrimeField& f, std::size_t rows,
                              std::size_t stride, std::size_t cols,
                              std::vector<std::uint64_t>& d) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && d[sel * stride + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(d.begin() + sel * stride, d.begin() + (sel + 1) * stride,
                       d.begin() + r * stride);
    }
    const std::uint64_t inv = f.inv(d[r * stride + c]);
    for (std::size_t k = 0; k < stride; ++k) {
      d[r * stride + k] = f.mul(d[r * stride + k], inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t factor = d[i * stride + c];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < stride; ++k) {
        d[i * stride + k] =
            f.sub(d[i * stride + k], f.mul(factor, d[r * stride + k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField PrimeField::create(std::uint64_t q) {
  if (q < 3) {
    throw Error(ErrorCode::kModulusTooSmall,
                "q = " + std::to_string(q) +
                    " leaves no coefficient outside {0, 1}; need q >= 3");
  }
  if (!is_prime(q)) {
    throw Error(ErrorCode::kNonPrimeModulus,
                "q = " + std::to_string(q) + " is not prime");
  }
  return PrimeField(q);
}

FieldElement PrimeField::element(std::int64_t v) const {
  if (v >= 0) return FieldElement(static_cast<std::uint64_t>(v) % q_, *this);
  // -(v + 1) avoids overflow on INT64_MIN.
  const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return FieldElement(neg(mag % q_), *this);
}

FieldElement PrimeField::from_residue(std::uint64_t v) const {
  if (v >= q_) {
    throw Error(ErrorCode::kValueOutOfRange,
                std::to_string(v) + " is not a residue mod " +
                    std::to_string(q_));
  }
  return FieldElement(v, *this);
}

FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1, *this); }

FieldElement PrimeField::sample(std::mt19937_64& rng) const {
  // Largest multiple of q representable in 64 bits, as an exclusive bound.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % q_ + 1) % q_;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return FieldElement(x % q_, *this);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  return powmod(base, exp, q_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero");
  return powmod(a, q_ - 2, q_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_.inv(value_), field_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_.neg(value_), field_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  value_ = field_.add(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  value_ = field_.sub(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  value_ = field_.mul(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  value_ = field_.mul(value_, field_.inv(o.value_));
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value();
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(
    PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.data_[r * cols + c] = field.element(rows[r][c]).value();
    }
  }
  return m;
}

FieldMatrix FieldMatrix::from_vectors(PrimeField field, std::size_t cols,
                                      std::span<const FieldVector> rows) {
  FieldMatrix m(field, 0, cols);
  for (const auto& row : rows) m.append_row(row);
  return m;
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const {
  return field_.from_residue(data_.at(r * cols_ + c));
}

void FieldMatrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  require_same_field(field_, v.field());
  data_.at(r * cols_ + c) = v.value();
}

FieldVector FieldMatrix::row(std::size_t r) const {
  FieldVector out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

void FieldMatrix::append_row(const FieldVector& row) {
  if (row.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row of length " + std::to_string(row.size()) +
                    " appended to matrix with " + std::to_string(cols_) +
                    " columns");
  }
  for (const auto& e : row) {
    require_same_field(field_, e.field());
    data_.push_back(e.value());
  }
  ++rows_;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.data_[c * rows_ + r] = data_[r * cols_ + c];
    }
  }
  return t;
}

FieldMatrix FieldMatrix::with_column_zeroed(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index");
  FieldMatrix m = *this;
  for (std::size_t r = 0; r < rows_; ++r) m.data_[r * cols_ + c] = 0;
  return m;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> idx) const {
  FieldMatrix m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw std::out_of_range("row index");
    std::copy_n(data_.begin() + idx[i] * cols_, cols_,
                m.data_.begin() + i * cols_);
  }
  return m;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> idx) const {
  FieldMatrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= cols_) throw std::out_of_range("column index");
      m.data_[r * idx.size() + j] = data_[r * cols_ + idx[j]];
    }
  }
  return m;
}

FieldVector FieldMatrix::apply(const FieldVector& x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length != cols");
  }
  FieldVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      require_same_field(field_, x[c].field());
      acc = field_.add(acc, field_.mul(data_[r * cols_ + c], x[c].value()));
    }
    out.push_back(field_.from_residue(acc));
  }
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  }
  const PrimeField& f = a.field_;
  FieldMatrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a.data_[i * a.cols_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& cell = out.data_[i * b.cols_ + j];
        cell = f.add(cell, f.mul(aik, b.data_[k * b.cols_ + j]));
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m.raw(r, c);
    }
    os << "]" << (r + 1 == m.rows() ? "]" : "\n");
  }
  if (m.rows() == 0) os << "[]";
  return os;
}

RankWitness rank_witness(const FieldMatrix& m) {
  const PrimeField f = m.field();
  const std::size_t cols = m.cols();
  // Basis rows kept reduced against every earlier pivot, each with a unit
  // entry at its own pivot column.
  std::vector<std::vector<std::uint64_t>> basis;
  RankWitness w;
  std::vector<std::uint64_t> row(cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) row[c] = m.raw(r, c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t factor = row[w.pivot_cols[b]];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        row[c] = f.sub(row[c], f.mul(factor, basis[b][c]));
      }
    }
    auto lead = std::find_if(row.begin(), row.end(),
                             [](std::uint64_t v) { return v != 0; });
    if (lead == row.end()) continue;
    const std::uint64_t inv = f.inv(*lead);
    for (auto& v : row) v = f.mul(v, inv);
    w.pivot_rows.push_back(r);
    w.pivot_cols.push_back(static_cast<std::size_t>(lead - row.begin()));
    basis.push_back(row);
  }
  w.rank = basis.size();
  return w;
}

std::size_t rank(const FieldMatrix& m) { return rank_witness(m).rank; }

SolutionSpace solve(const FieldMatrix& a, const FieldVector& b) {
  if (a.rows() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "system has " + std::to_string(a.rows()) + " rows but " +
                    std::to_string(b.size()) + " right-hand values");
  }
  const PrimeField f = a.field();
  const std::size_t n = a.cols();
  const std::size_t stride = n + 1;
  std::vector<std::uint64_t> d(a.rows() * stride);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) d[r * stride + c] = a.raw(r, c);
    if (!(b[r].field() == f)) {
      throw Error(ErrorCode::kFieldMismatch, "right-hand side field differs");
    }
    d[r * stride + n] = b[r].value();
  }
  const auto pivots = rref(f, a.rows(), stride, n, d);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (d[r * stride + n] != 0) {
      throw Error(ErrorCode::kInconsistent,
                  "right-hand side is outside the column space");
    }
  }

  SolutionSpace out;
  out.particular.assign(n, f.zero());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    out.particular[pivots[i]] = f.from_residue(d[i * stride + n]);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(n, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = f.from_residue(f.neg(d[i * stride + free]));
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

bool in_row_space(const FieldMatrix& a, const FieldVector& v) {
  FieldMatrix stacked = a;
  stacked.append_row(v);
  return rank(stacked) == rank(a);
}

}  // namespace mcss
