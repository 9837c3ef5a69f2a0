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

#include "codedmm/convolution.h"

#include <random>

#include "codedmm/verify.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace codedmm {
namespace {

FieldVector RandomVector(std::size_t len, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
  FieldVector v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(f.element(dist(rng)));
  return v;
}

std::vector<ConvWorkerResult> RunWorkers(const ConvolutionCode& code,
                                         const FieldVector& a, const FieldVector& b) {
  std::vector<ConvWorkerResult> out;
  const auto inputs = code.encode_all(a, b);
  for (std::size_t w = 0; w < inputs.size(); ++w) {
    out.push_back({w, ConvWorker(inputs[w].a, inputs[w].b)});
  }
  return out;
}

TEST(ConvolveTest, MatchesDirectOracle) {
  const PrimeField f(257);
  std::mt19937_64 rng(1);
  for (std::size_t la = 1; la <= 9; ++la) {
    for (std::size_t lb = 1; lb <= 9; ++lb) {
      const auto a = RandomVector(la, f, rng);
      const auto b = RandomVector(lb, f, rng);
      EXPECT_EQ(oracle::Raw(Convolve(a, b)),
                oracle::DirectConvolution(oracle::Raw(a), oracle::Raw(b), 257));
    }
  }
  EXPECT_THROW(Convolve({}, {f.one()}), Error);
}

TEST(ConvolutionCodeTest, AllSubsetsAtThreshold) {
  const PrimeField f(257);
  std::mt19937_64 rng(2);
  const ConvolutionCode code(3, 2, 6, f);
  EXPECT_EQ(code.recovery_threshold(), 4u);
  const auto a = RandomVector(9, f, rng);
  const auto b = RandomVector(6, f, rng);
  EXPECT_EQ(code.block_length(9, 6), 3u);
  const auto results = RunWorkers(code, a, b);
  const auto expect = oracle::DirectConvolution(oracle::Raw(a), oracle::Raw(b), 257);
  std::size_t ok = 0;
  ForEachCombination(6, 4, [&](std::span<const std::size_t> s) {
    std::vector<ConvWorkerResult> chosen;
    for (auto i : s) chosen.push_back(results[i]);
    ok += oracle::Raw(code.decode(chosen, expect.size())) == expect;
    return true;
  });
  EXPECT_EQ(ok, 15u);
}

TEST(ConvolutionCodeTest, UnevenLengthsAndShapes) {
  const PrimeField f(65537);
  std::mt19937_64 rng(3);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const ConvolutionCode code(m, n, m + n + 1, f);
      const auto a = RandomVector(5 + m, f, rng);
      const auto b = RandomVector(2 + 2 * n, f, rng);
      auto results = RunWorkers(code, a, b);
      std::shuffle(results.begin(), results.end(), rng);
      const auto expect = oracle::DirectConvolution(oracle::Raw(a), oracle::Raw(b), 65537);
      EXPECT_EQ(oracle::Raw(code.decode(results, expect.size())), expect);
    }
  }
}

TEST(ConvolutionCodeTest, BelowThresholdAndErrors) {
  const PrimeField f(257);
  std::mt19937_64 rng(4);
  const ConvolutionCode code(3, 2, 6, f);
  const auto a = RandomVector(9, f, rng);
  const auto b = RandomVector(6, f, rng);
  auto results = RunWorkers(code, a, b);
  results.resize(3);
  try {
    code.decode(results, 14);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientResults);
  }
  EXPECT_THROW(ConvolutionCode(3, 2, 3, f), Error);
  EXPECT_THROW(ConvolutionCode(3, 2, 7, PrimeField(7)), Error);
}

}  // namespace
}  // namespace codedmm
