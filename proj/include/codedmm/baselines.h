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

#ifndef CODEDMM_BASELINES_H_
#define CODEDMM_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codedmm/field.h"
#include "codedmm/scheme.h"

namespace codedmm {

// Uncoded repetition: the pmn block products A_{j,k}^T B_{j,k'} are handed out
// round-robin, worker w computing task w mod pmn. Threshold
// N - floor(N / pmn) + 1.
class UncodedRepetitionScheme : public CodingScheme {
 public:
  UncodedRepetitionScheme(const Partitioning& parts, std::size_t num_workers);

  std::string name() const override { return "uncoded"; }
  std::size_t recovery_threshold() const override;
  MatrixBlock encode_a(const BlockGrid& a, std::size_t worker) const override;
  MatrixBlock encode_b(const BlockGrid& b, std::size_t worker) const override;
  MatrixF decode(std::span<const WorkerResult> results, std::size_t out_rows,
                 std::size_t out_cols) const override;

  std::size_t num_tasks() const;
  // Index of the sub-product computed by `worker`.
  std::size_t task_of(std::size_t worker) const;
};

// Random linear code: worker w stores uniformly random combinations of the A
// and B blocks. Every result is a random combination of the p^2 mn pairwise
// block products, so p^2 mn results suffice with high probability.
class RandomLinearScheme : public CodingScheme {
 public:
  RandomLinearScheme(const Partitioning& parts, std::size_t num_workers,
                     const PrimeField& field, std::uint64_t seed);

  std::string name() const override { return "random-linear"; }
  std::size_t recovery_threshold() const override;
  MatrixBlock encode_a(const BlockGrid& a, std::size_t worker) const override;
  MatrixBlock encode_b(const BlockGrid& b, std::size_t worker) const override;
  // Solves for the pairwise products using every supplied result, picking
  // independent rows in arrival order. Throws kSingularDecodeSystem when the
  // supplied results do not span all p^2 mn products.
  MatrixF decode(std::span<const WorkerResult> results, std::size_t out_rows,
                 std::size_t out_cols) const override;

 private:
  PrimeField field_;
  // a_coeffs_[w][j*m + k], b_coeffs_[w][j*n + k']
  std::vector<std::vector<std::uint64_t>> a_coeffs_;
  std::vector<std::vector<std::uint64_t>> b_coeffs_;
};

}  // namespace codedmm

#endif  // CODEDMM_BASELINES_H_
