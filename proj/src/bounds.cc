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

#include "codedmm/bounds.h"

#include <algorithm>
#include <numeric>

#include "codedmm/error.h"

namespace codedmm::bounds {

namespace {

void CheckPositive(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
  if (p == 0 || m == 0 || n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "p, m, n must be >= 1");
  }
}

std::uint64_t CeilDiv(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::uint64_t Pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

std::uint64_t ThresholdEntangled(std::uint64_t p, std::uint64_t m,
                                 std::uint64_t n) {
  CheckPositive(p, m, n);
  return p * m * n + p - 1;
}

std::uint64_t ThresholdUncoded(std::uint64_t p, std::uint64_t m,
                               std::uint64_t n, std::uint64_t num_workers) {
  CheckPositive(p, m, n);
  if (num_workers < p * m * n) {
    throw Error(ErrorCode::kTooFewWorkers, "uncoded repetition needs N >= pmn");
  }
  return num_workers - num_workers / (p * m * n) + 1;
}

std::uint64_t ThresholdRandomLinear(std::uint64_t p, std::uint64_t m,
                                    std::uint64_t n) {
  CheckPositive(p, m, n);
  return p * p * m * n;
}

std::uint64_t ThresholdShortMds(std::uint64_t p, std::uint64_t m,
                                std::uint64_t num_workers) {
  CheckPositive(p, m, 1);
  return num_workers - num_workers / p + m;
}

std::uint64_t ConverseLinear(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                             std::uint64_t num_workers) {
  CheckPositive(p, m, n);
  return std::min(num_workers, p * m + p * n - 1);
}

std::uint64_t ConverseNonlinear(std::uint64_t p, std::uint64_t m,
                                std::uint64_t n) {
  CheckPositive(p, m, n);
  return std::max(p * m, p * n);
}

RankBounds RankSandwich(std::uint64_t rank) {
  if (rank == 0) throw Error(ErrorCode::kInvalidArgument, "rank must be >= 1");
  return {rank, 2 * rank - 1};
}

std::uint64_t ThresholdConvolution(std::uint64_t m, std::uint64_t n) {
  CheckPositive(1, m, n);
  return m + n - 1;
}

std::uint64_t ThresholdElementwise(std::uint64_t rank,
                                   std::uint64_t num_workers) {
  if (rank == 0) throw Error(ErrorCode::kInvalidArgument, "rank must be >= 1");
  return std::min(num_workers, 2 * rank - 1);
}

Rational Rational::Make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

CostModel ComputeCostModel(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                           std::uint64_t s, std::uint64_t r, std::uint64_t t) {
  CheckPositive(p, m, n);
  CostModel c{};
  c.worker_compute = CeilDiv(s, p) * CeilDiv(r, m) * CeilDiv(t, n);
  c.communication = Rational::Make(1, m * n);
  c.storage_a = Rational::Make(1, p * m);
  c.storage_b = Rational::Make(1, p * n);
  c.product = c.communication * c.storage_a * c.storage_b;
  return c;
}

std::vector<ThresholdRow> ThresholdTable(std::uint64_t p, std::uint64_t m,
                                         std::uint64_t n, std::uint64_t n_min,
                                         std::uint64_t n_max) {
  CheckPositive(p, m, n);
  n_min = std::max(n_min, p * m * n);
  std::vector<ThresholdRow> rows;
  for (std::uint64_t nw = n_min; nw <= n_max; ++nw) {
    rows.push_back({nw, ThresholdUncoded(p, m, n, nw),
                    ThresholdRandomLinear(p, m, n), ThresholdShortMds(p, m, nw),
                    ThresholdEntangled(p, m, n)});
  }
  return rows;
}

std::vector<ThresholdRow> ComparisonTable(std::uint64_t n_max) {
  return ThresholdTable(3, 3, 1, ThresholdEntangled(3, 3, 1), n_max);
}

void WriteThresholdCsv(std::ostream& out,
                       const std::vector<ThresholdRow>& rows) {
  out << "N,K_uncoded,K_random_linear,K_short_mds,K_entangled\n";
  for (const auto& r : rows) {
    out << r.num_workers << ',' << r.uncoded << ',' << r.random_linear << ','
        << r.short_mds << ',' << r.entangled << '\n';
  }
}

std::uint64_t StrassenCrossover() {
  for (std::uint64_t k = 1;; ++k) {
    if (2 * Pow(7, k) - 1 < Pow(8, k) + Pow(2, k) - 1) return k;
  }
}

}  // namespace codedmm::bounds
