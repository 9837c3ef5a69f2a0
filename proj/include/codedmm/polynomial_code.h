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

#ifndef CODEDMM_POLYNOMIAL_CODE_H_
#define CODEDMM_POLYNOMIAL_CODE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "codedmm/blocks.h"
#include "codedmm/field.h"
#include "codedmm/scheme.h"

namespace codedmm {

// Parameters of an (alpha, beta, theta)-polynomial code. Worker i stores
//   A~_i = sum_{j,k} A_{j,k} x_i^{j*alpha + k*beta}
//   B~_i = sum_{j,k} B_{j,k} x_i^{(p-1-j)*alpha + k*theta}
// so that the (j, j) cross terms of A~_i^T B~_i land on the degrees
// (p-1)*alpha + k*beta + k'*theta that carry C_{k,k'}.
struct PolynomialCodeSpec {
  Partitioning parts;
  std::size_t num_workers;
  std::uint64_t alpha;
  std::uint64_t beta;
  std::uint64_t theta;
  std::vector<FieldElement> points;
  PrimeField field;
};

// Degree of h(x) = A~^T B~ plus one: the number of evaluations needed to
// interpolate it.
std::size_t PolynomialCodeThreshold(const Partitioning& parts,
                                    std::uint64_t alpha, std::uint64_t beta,
                                    std::uint64_t theta);

// Spec with x_i = i. Throws kFieldTooSmall when q <= N and kTooFewWorkers
// when N is below the threshold of the chosen exponents.
PolynomialCodeSpec GeneralPolySpec(const Partitioning& parts,
                                   std::size_t num_workers, std::uint64_t alpha,
                                   std::uint64_t beta, std::uint64_t theta,
                                   const PrimeField& field);

// The entangled polynomial code: exponents (1, p, pm), threshold pmn + p - 1.
PolynomialCodeSpec EntangledSpec(const Partitioning& parts,
                                 std::size_t num_workers,
                                 const PrimeField& field);

std::size_t EntangledThreshold(const Partitioning& parts);

std::pair<MatrixBlock, MatrixBlock> GeneralPolyEncode(
    const PolynomialCodeSpec& spec, const BlockGrid& a, const BlockGrid& b,
    std::size_t worker);

class PolynomialCode : public CodingScheme {
 public:
  // Validates the spec: distinct points, enough workers, and exponents whose
  // target degrees are distinct and never hit by a j != j' cross term
  // (kInvalidExponents otherwise).
  explicit PolynomialCode(PolynomialCodeSpec spec);

  std::string name() const override;
  std::size_t recovery_threshold() const override { return threshold_; }
  MatrixBlock encode_a(const BlockGrid& a, std::size_t worker) const override;
  MatrixBlock encode_b(const BlockGrid& b, std::size_t worker) const override;
  // Interpolates h from the first K results and reads off C_{k,k'} at the
  // target degrees. Throws kInsufficientResults below K.
  MatrixF decode(std::span<const WorkerResult> results, std::size_t out_rows,
                 std::size_t out_cols) const override;

  // All K coefficient blocks of h(x), interpolated from the first K results.
  std::vector<MatrixBlock> interpolate(
      std::span<const WorkerResult> results) const;

  // Picks the C_{k,k'} blocks out of h's coefficients and unpads.
  MatrixF extract(std::span<const MatrixBlock> coeffs, std::size_t out_rows,
                  std::size_t out_cols) const;

  // Degree of h(x) whose coefficient equals C_{k,k'}.
  std::size_t target_degree(std::size_t k, std::size_t kp) const;

  const PolynomialCodeSpec& spec() const { return spec_; }
  std::uint64_t point(std::size_t worker) const {
    return spec_.points[worker].value();
  }

 private:
  PolynomialCodeSpec spec_;
  std::size_t threshold_;
};

}  // namespace codedmm

#endif  // CODEDMM_POLYNOMIAL_CODE_H_
