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

#include "codedmm/robust.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace codedmm {
namespace {

TEST(HammingRelationsTest, ClosedForm) {
  for (std::size_t n = 1; n <= 100; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto h = ComputeHammingRelations(n, n - k + 1);
      EXPECT_EQ(h.recovery_threshold, k);
      EXPECT_EQ(h.max_detectable, n - k);
      EXPECT_EQ(h.max_correctable, (n - k) / 2);
    }
  }
  EXPECT_THROW(ComputeHammingRelations(5, 0), Error);
  EXPECT_THROW(ComputeHammingRelations(5, 6), Error);
}

TEST(HammingRelationsTest, MatchesCodeBudget) {
  const PolynomialCode code(EntangledSpec({2, 2, 1}, 9, PrimeField()));
  EXPECT_EQ(code.recovery_threshold(), 5u);
  EXPECT_EQ(MaxDetectableErrors(code), 4u);
  EXPECT_EQ(MaxCorrectableErrors(code), 2u);
  const auto h = ComputeHammingRelations(9, 9 - 5 + 1);
  EXPECT_EQ(h.max_detectable, MaxDetectableErrors(code));
  EXPECT_EQ(h.max_correctable, MaxCorrectableErrors(code));
}

TEST(BerlekampWelchTest, RecoversWithinBudget) {
  const PrimeField f(257);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> dist(0, 256);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 5;
    const std::size_t e = trial % 3;
    const std::size_t n = k + 2 * e + trial % 2;
    std::vector<std::uint64_t> coeffs(k);
    for (auto& c : coeffs) c = dist(rng);
    const FieldPolynomial truth(f, coeffs);
    std::vector<std::uint64_t> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = i + 1;
      ys[i] = truth.evaluate_raw(xs[i]);
    }
    for (std::size_t i = 0; i < e; ++i) {
      ys[(i * 5 + trial) % n] = f.add(ys[(i * 5 + trial) % n], 1 + dist(rng) % 256);
    }
    const auto got = BerlekampWelch(f, xs, ys, k, e);
    ASSERT_TRUE(got.has_value()) << trial;
    EXPECT_EQ(*got, truth);
  }
}

TEST(BerlekampWelchTest, TooFewPoints) {
  const PrimeField f(257);
  const std::vector<std::uint64_t> xs = {1, 2, 3}, ys = {1, 1, 1};
  EXPECT_FALSE(BerlekampWelch(f, xs, ys, 2, 1).has_value());
}

struct Fixture {
  Fixture()
      : field(65537),
        code(EntangledSpec({2, 2, 1}, 9, field)),
        rng(11),
        a(MatrixF::Random(4, 4, field, rng)),
        b(MatrixF::Random(4, 2, field, rng)),
        truth(oracle::NaiveTransposeProduct(a, b)),
        results(ComputeAll(code.encode(a, b))) {}

  PrimeField field;
  PolynomialCode code;
  std::mt19937_64 rng;
  MatrixF a, b, truth;
  std::vector<WorkerResult> results;
};

TEST(DetectErrorsTest, CleanAndCorrupted) {
  Fixture fx;
  auto clean = DetectErrors(fx.code, fx.results, 4, 2);
  ASSERT_EQ(clean.status, DetectStatus::kClean);
  EXPECT_EQ(*clean.product, fx.truth);
  for (std::size_t w = 0; w < 9; ++w) {
    auto bad = fx.results;
    bad[w].block.set(1, 0, fx.field.add(bad[w].block.get(1, 0), 1));
    EXPECT_EQ(DetectErrors(fx.code, bad, 4, 2).status, DetectStatus::kErrorDetected) << w;
  }
  EXPECT_THROW(DetectErrors(fx.code, std::span(fx.results).first(8), 4, 2), Error);
}

TEST(CorrectErrorsTest, LocatesFaultyWorkers) {
  Fixture fx;
  auto bad = fx.results;
  std::mt19937_64 rng(3);
  const auto corrupted = InjectFaults(bad, 2, rng);
  const auto out = CorrectErrors(fx.code, bad, 4, 2);
  EXPECT_EQ(out.product, fx.truth);
  EXPECT_EQ(out.located, corrupted);
}

TEST(CorrectErrorsTest, CorruptionMissingThePilotEntry) {
  // Entry 0 is left intact, so the first pass sees no error there and the
  // full-block check has to catch it.
  Fixture fx;
  auto bad = fx.results;
  bad[2].block.set(1, 1, fx.field.add(bad[2].block.get(1, 1), 5));
  bad[7].block.set(1, 0, fx.field.add(bad[7].block.get(1, 0), 9));
  ASSERT_EQ(bad[2].block.get(0, 0), fx.results[2].block.get(0, 0));
  const auto out = CorrectErrors(fx.code, bad, 4, 2);
  EXPECT_EQ(out.product, fx.truth);
  EXPECT_EQ(out.located, (std::vector<std::size_t>{2, 7}));
}

TEST(CorrectErrorsTest, CleanInputLocatesNothing) {
  Fixture fx;
  const auto out = CorrectErrors(fx.code, fx.results, 4, 2);
  EXPECT_EQ(out.product, fx.truth);
  EXPECT_TRUE(out.located.empty());
}

TEST(FaultTrialsTest, DetectAtFullBudget) {
  const auto s = RunFaultTrials({2, 2, 1}, 9, 4, 200, 1, FaultMode::kDetect, PrimeField());
  EXPECT_EQ(s.trials, 200u);
  EXPECT_EQ(s.silent_wrong, 0u);
  EXPECT_EQ(s.flagged, 200u);
}

TEST(FaultTrialsTest, CorrectWithinBudget) {
  const auto s = RunFaultTrials({2, 2, 1}, 9, 2, 200, 2, FaultMode::kCorrect, PrimeField());
  EXPECT_EQ(s.exact, 200u);
}

TEST(FaultTrialsTest, CorrectBeyondBudgetNeverSilent) {
  const auto s = RunFaultTrials({2, 2, 1}, 9, 3, 200, 3, FaultMode::kCorrect, PrimeField());
  EXPECT_EQ(s.silent_wrong, 0u);
}

TEST(FaultTrialsTest, ZeroErrors) {
  for (auto mode : {FaultMode::kDetect, FaultMode::kCorrect}) {
    const auto s = RunFaultTrials({2, 1, 2}, 8, 0, 20, 4, mode, PrimeField());
    EXPECT_EQ(s.exact, 20u);
  }
}

}  // namespace
}  // namespace codedmm
