// Copyright 2026 The codedmm Authors.
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

#include "codedmm/field.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace codedmm {
namespace {

TEST(PrimeFieldTest, RejectsComposites) {
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(4), Error);
  EXPECT_THROW(PrimeField(65535), Error);
  try {
    PrimeField f(91);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
  }
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(7));
  EXPECT_NO_THROW(PrimeField(65537));
  EXPECT_NO_THROW(PrimeField(2305843009213693951ull));  // 2^61 - 1
}

TEST(PrimeFieldTest, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    EXPECT_EQ(IsPrime(n), prime) << n;
  }
}

TEST(FieldArithTest, SmallCases) {
  const PrimeField f7(7);
  EXPECT_EQ(FieldArith(f7.element(3), f7.element(5), ArithOp::kAdd), f7.element(1));
  EXPECT_EQ(FieldArith(f7.element(3), f7.element(5), ArithOp::kMul), f7.element(1));
  EXPECT_EQ(f7.element(3).inverse(), f7.element(5));
  EXPECT_EQ(FieldArith(f7.element(1), f7.element(3), ArithOp::kDiv), f7.element(5));
  EXPECT_EQ(FieldArith(f7.element(2), f7.element(5), ArithOp::kSub), f7.element(4));

  const PrimeField f257(257);
  EXPECT_EQ(f257.element(256) + f257.element(1), f257.zero());
  EXPECT_EQ(f257.from_signed(-1), f257.element(256));
  EXPECT_EQ(f257.centered(256), -1);
}

TEST(FieldArithTest, Errors) {
  const PrimeField f7(7);
  const PrimeField f11(11);
  try {
    (void)(f7.element(3) / f7.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  try {
    (void)(f7.element(3) + f11.element(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
}

TEST(FieldArithTest, AxiomsOnRandomTriples) {
  for (std::uint64_t q : {7ull, 257ull, 65537ull, 2305843009213693951ull}) {
    const PrimeField f(q);
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto a = f.element(dist(rng));
      const auto b = f.element(dist(rng));
      const auto c = f.element(dist(rng));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, f.zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), f.one());
        EXPECT_EQ(a.inverse().value(), oracle::InvMod(a.value(), q));
      }
    }
  }
}

TEST(FieldArithTest, PowMatchesRepeatedMultiplication) {
  const PrimeField f(257);
  for (std::uint64_t a = 0; a < 20; ++a) {
    for (std::uint64_t e = 0; e < 30; ++e) {
      EXPECT_EQ(f.element(a).pow(e).value(), oracle::PowMod(a, e, 257));
    }
  }
}

}  // namespace
}  // namespace codedmm
