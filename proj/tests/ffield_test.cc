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

#include <gtest/gtest.h>

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fixtures.h"
#include "mcss/error.h"

namespace mcss {
namespace {

using testing::brute_rank;
using testing::error_code_of;

TEST(PrimeFieldTest, RejectsBadModuli) {
  EXPECT_EQ(error_code_of([] { PrimeField::create(0); }), ErrorCode::kModulusTooSmall);
  EXPECT_EQ(error_code_of([] { PrimeField::create(2); }), ErrorCode::kModulusTooSmall);
  EXPECT_EQ(error_code_of([] { PrimeField::create(9); }), ErrorCode::kNonPrimeModulus);
  EXPECT_EQ(error_code_of([] { PrimeField::create(561); }), ErrorCode::kNonPrimeModulus);
  EXPECT_NO_THROW(PrimeField::create(3));
  EXPECT_NO_THROW(PrimeField::create(2305843009213693951ULL));  // 2^61 - 1
}

TEST(PrimeFieldTest, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool expected = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) expected = false;
    }
    EXPECT_EQ(is_prime(n), expected) << n;
  }
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
}

TEST(PrimeFieldTest, ElementReducesSignedValues) {
  const auto f = PrimeField::create(5);
  EXPECT_EQ(f.element(-1).value(), 4u);
  EXPECT_EQ(f.element(12).value(), 2u);
  EXPECT_EQ(f.element(-10).value(), 0u);
  EXPECT_EQ(error_code_of([&] { f.from_residue(5); }), ErrorCode::kValueOutOfRange);
  EXPECT_EQ(f.from_residue(4).value(), 4u);
}

TEST(PrimeFieldTest, ArithmeticAgainstIntegerOracle) {
  const auto f = PrimeField::create(7);
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = 0; b < 7; ++b) {
      const auto x = f.element(a), y = f.element(b);
      EXPECT_EQ((x + y).value(), static_cast<std::uint64_t>((a + b) % 7));
      EXPECT_EQ((x - y).value(), static_cast<std::uint64_t>((a - b + 7) % 7));
      EXPECT_EQ((x * y).value(), static_cast<std::uint64_t>((a * b) % 7));
      if (b != 0) EXPECT_EQ(((x / y) * y), x);
    }
  }
  EXPECT_THROW(f.zero().inverse(), std::domain_error);
}

TEST(PrimeFieldTest, LargeModulusMultiplication) {
  const auto f = PrimeField::create(2305843009213693951ULL);
  const auto x = f.element(-1);
  EXPECT_TRUE((x * x).is_one());
  EXPECT_TRUE((x.inverse() * x).is_one());
}

TEST(PrimeFieldTest, MixedFieldsAreRejected) {
  const auto f5 = PrimeField::create(5), f7 = PrimeField::create(7);
  EXPECT_EQ(error_code_of([&] { (void)(f5.one() + f7.one()); }), ErrorCode::kFieldMismatch);
}

TEST(PrimeFieldTest, SamplingIsDeterministicAndCoversField) {
  const auto f = PrimeField::create(5);
  std::mt19937_64 a(7), b(7);
  std::array<int, 5> seen{};
  for (int i = 0; i < 5000; ++i) {
    const auto x = f.sample(a);
    EXPECT_EQ(x, f.sample(b));
    ++seen[x.value()];
  }
  for (int c : seen) EXPECT_GT(c, 850);
}

TEST(FieldMatrixTest, RankOfKnownMatrices) {
  const auto f = PrimeField::create(5);
  EXPECT_EQ(rank(FieldMatrix(f, 0, 3)), 0u);
  EXPECT_EQ(rank(FieldMatrix(f, 3, 0)), 0u);
  EXPECT_EQ(rank(FieldMatrix::identity(f, 4)), 4u);
  // Second row is 2x the first mod 5.
  EXPECT_EQ(rank(FieldMatrix::from_rows(f, {{1, 3, 4}, {2, 1, 3}})), 1u);
  // Rank depends on the characteristic.
  const auto m = std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 4}};
  EXPECT_EQ(rank(FieldMatrix::from_rows(f, m)), 2u);
  EXPECT_EQ(rank(FieldMatrix::from_rows(PrimeField::create(3), m)), 1u);
}

TEST(FieldMatrixTest, WitnessMinorIsNonsingular) {
  const auto f = PrimeField::create(7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    FieldMatrix m(f, 1 + trial % 5, 1 + (trial / 5) % 5);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.set(r, c, trial % 3 == 0 && c == 0 ? f.zero() : f.sample(rng));
      }
    }
    const auto w = rank_witness(m);
    ASSERT_EQ(w.pivot_rows.size(), w.rank);
    ASSERT_EQ(w.pivot_cols.size(), w.rank);
    const auto minor = m.select_rows(w.pivot_rows).select_columns(w.pivot_cols);
    EXPECT_EQ(brute_rank(minor), w.rank);
    EXPECT_EQ(brute_rank(m), w.rank);
  }
}

// rank(A) == rank(A^T), and right-multiplying by an invertible matrix (a
// sequence of column operations) preserves rank.
TEST(FieldMatrixTest, RankProperties) {
  const auto f = PrimeField::create(3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    FieldMatrix a(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a.set(r, c, f.sample(rng));
    }
    EXPECT_EQ(rank(a), rank(a.transpose()));
    // Elementary column operations: scale by a nonzero and add multiples.
    FieldMatrix ops = FieldMatrix::identity(f, cols);
    const std::size_t i = rng() % cols, j = rng() % cols;
    ops.set(i, i, f.element(2));
    if (i != j) ops.set(j, i, f.sample(rng));
    EXPECT_EQ(rank(a * ops), rank(a));
  }
}

TEST(FieldMatrixTest, SolveRoundTrip) {
  const auto f = PrimeField::create(5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    FieldMatrix a(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a.set(r, c, f.sample(rng));
    }
    FieldVector x;
    for (std::size_t c = 0; c < cols; ++c) x.push_back(f.sample(rng));
    const auto b = a.apply(x);
    const auto sol = solve(a, b);
    EXPECT_EQ(a.apply(sol.particular), b);
    EXPECT_EQ(sol.nullspace.size(), cols - rank(a));
    for (const auto& n : sol.nullspace) {
      for (const auto& v : a.apply(n)) EXPECT_TRUE(v.is_zero());
    }
  }
}

TEST(FieldMatrixTest, SolveErrors) {
  const auto f = PrimeField::create(5);
  const auto a = FieldMatrix::from_rows(f, {{1, 1}, {2, 2}});
  EXPECT_EQ(error_code_of([&] { solve(a, {f.element(1), f.element(3)}); }),
            ErrorCode::kInconsistent);
  EXPECT_EQ(error_code_of([&] { solve(a, {f.element(1)}); }), ErrorCode::kDimensionMismatch);
}

TEST(FieldMatrixTest, RowSpaceMembership) {
  const auto f = PrimeField::create(5);
  const auto a = FieldMatrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(in_row_space(a, {f.element(2), f.element(3), f.element(0)}));
  EXPECT_FALSE(in_row_space(a, {f.element(1), f.element(0), f.element(0)}));
}

TEST(FieldMatrixTest, ColumnZeroingAndPrinting) {
  const auto f = PrimeField::create(5);
  const auto a = FieldMatrix::from_rows(f, {{1, 2}, {3, 4}});
  EXPECT_EQ(a.with_column_zeroed(0), FieldMatrix::from_rows(f, {{0, 2}, {0, 4}}));
  std::ostringstream os;
  os << a;
  EXPECT_NE(os.str().find('4'), std::string::npos);
}

}  // namespace
}  // namespace mcss
