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

#ifndef CODEDMM_BOUNDS_H_
#define CODEDMM_BOUNDS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace codedmm::bounds {

// Threshold and bound formulas. All are exact integer arithmetic.

// pmn + p - 1
std::uint64_t ThresholdEntangled(std::uint64_t p, std::uint64_t m,
                                 std::uint64_t n);
// N - floor(N / pmn) + 1
std::uint64_t ThresholdUncoded(std::uint64_t p, std::uint64_t m,
                               std::uint64_t n, std::uint64_t num_workers);
// p^2 mn
std::uint64_t ThresholdRandomLinear(std::uint64_t p, std::uint64_t m,
                                    std::uint64_t n);
// N - floor(N / p) + m
std::uint64_t ThresholdShortMds(std::uint64_t p, std::uint64_t m,
                                std::uint64_t num_workers);
// Lower bound for every linear code: min{N, pm + pn - 1}
std::uint64_t ConverseLinear(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                             std::uint64_t num_workers);
// Lower bound for every code over a finite field: max{pm, pn}
std::uint64_t ConverseNonlinear(std::uint64_t p, std::uint64_t m,
                                std::uint64_t n);

// Optimal linear threshold lies in [R, 2R - 1] for bilinear rank R.
struct RankBounds {
  std::uint64_t lower;
  std::uint64_t upper;
};
RankBounds RankSandwich(std::uint64_t rank);

// m + n - 1
std::uint64_t ThresholdConvolution(std::uint64_t m, std::uint64_t n);
// min{N, 2R - 1}
std::uint64_t ThresholdElementwise(std::uint64_t rank,
                                   std::uint64_t num_workers);

struct Rational {
  std::uint64_t num;
  std::uint64_t den;

  // Reduced form.
  static Rational Make(std::uint64_t num, std::uint64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Make(a.num * b.num, a.den * b.den);
  }
  std::string str() const;
};

struct CostModel {
  // Worker compute as a count of field multiply-adds: (s/p)(r/m)(t/n),
  // rounding block sizes up.
  std::uint64_t worker_compute;
  Rational communication;  // L = 1/mn
  Rational storage_a;      // 1/pm
  Rational storage_b;      // 1/pn
  Rational product;        // L * storage_a * storage_b
};
CostModel ComputeCostModel(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                           std::uint64_t s, std::uint64_t r, std::uint64_t t);

struct ThresholdRow {
  std::uint64_t num_workers;
  std::uint64_t uncoded;
  std::uint64_t random_linear;
  std::uint64_t short_mds;
  std::uint64_t entangled;
};

// Rows N = n_min..n_max comparing the four strategies for one (p, m, n).
std::vector<ThresholdRow> ThresholdTable(std::uint64_t p, std::uint64_t m,
                                         std::uint64_t n, std::uint64_t n_min,
                                         std::uint64_t n_max);
// The comparison at p = m = 3, n = 1 for N = 11..n_max.
std::vector<ThresholdRow> ComparisonTable(std::uint64_t n_max);

void WriteThresholdCsv(std::ostream& out, const std::vector<ThresholdRow>& rows);

// First k with 2 * 7^k - 1 < 8^k + 2^k - 1.
std::uint64_t StrassenCrossover();

}  // namespace codedmm::bounds

#endif  // CODEDMM_BOUNDS_H_
