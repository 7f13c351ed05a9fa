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

// Exact arithmetic and dense linear algebra over a prime field F_q.
//
// Everything here is integer-only. Elements carry their modulus so that
// accidentally mixing two fields is caught at the operation that mixes
// them instead of producing a silently wrong residue.

#ifndef MCSS_FFIELD_H_
#define MCSS_FFIELD_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace mcss {

__extension__ typedef unsigned __int128 uint128;

class FieldElement;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  // Throws kNonPrimeModulus or kModulusTooSmall. q = 2 is rejected because
  // replacement coefficients need some a outside {0, 1}.
  static PrimeField create(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  // Reduces any signed integer into [0, q).
  FieldElement element(std::int64_t v) const;
  // Accepts only canonical residues; throws kValueOutOfRange otherwise.
  FieldElement from_residue(std::uint64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Uniform sample from F_q by rejection on the 64-bit engine output. Unlike
  // std::uniform_int_distribution the result is identical across standard
  // library implementations for a given seed.
  FieldElement sample(std::mt19937_64& rng) const;

  // Raw residue arithmetic for inner loops. Inputs must already be < q.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return a >= q_ - b ? a - (q_ - b) : a + b;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (q_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<uint128>(a) * b % q_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  // Throws std::domain_error on zero.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  explicit PrimeField(std::uint64_t q) : q_(q) {}

  std::uint64_t q_;
};

class FieldElement {
 public:
  std::uint64_t value() const { return value_; }
  PrimeField field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    return a += b;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    return a -= b;
  }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) {
    return a *= b;
  }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) {
    return a /= b;
  }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class PrimeField;
  FieldElement(std::uint64_t value, PrimeField field)
      : value_(value), field_(field) {}

  std::uint64_t value_;
  PrimeField field_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

using FieldVector = std::vector<FieldElement>;

// Row-major dense matrix. Zero rows or zero columns are allowed.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(PrimeField field, std::size_t n);
  // Convenience for literals in tests and fixtures; entries are reduced mod q.
  static FieldMatrix from_rows(
      PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);
  // Every vector must have length `cols`.
  static FieldMatrix from_vectors(PrimeField field, std::size_t cols,
                                  std::span<const FieldVector> rows);

  PrimeField field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& v);
  std::uint64_t raw(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  FieldVector row(std::size_t r) const;
  void append_row(const FieldVector& row);

  FieldMatrix transpose() const;
  FieldMatrix with_column_zeroed(std::size_t c) const;
  FieldMatrix select_rows(std::span<const std::size_t> idx) const;
  FieldMatrix select_columns(std::span<const std::size_t> idx) const;
  FieldVector apply(const FieldVector& x) const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m);

// Rank plus a nonsingular rank x rank minor that certifies it: the rows
// `pivot_rows` (indices into the input, ascending) restricted to the columns
// `pivot_cols` form an invertible submatrix.
struct RankWitness {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

RankWitness rank_witness(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

// All x with a * x = b: particular + span(nullspace). Free variables of the
// particular solution are zero.
struct SolutionSpace {
  FieldVector particular;
  std::vector<FieldVector> nullspace;
};

// Throws kInconsistent when b is not in the column space of a, and
// kDimensionMismatch when rows(a) != |b|.
SolutionSpace solve(const FieldMatrix& a, const FieldVector& b);

// True iff v is a linear combination of the rows of a.
bool in_row_space(const FieldMatrix& a, const FieldVector& v);

}  // namespace mcss

#endif  // MCSS_FFIELD_H_
