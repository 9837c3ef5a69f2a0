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

#ifndef CODEDMM_CONVOLUTION_H_
#define CODEDMM_CONVOLUTION_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "codedmm/blocks.h"
#include "codedmm/field.h"

namespace codedmm {

// Full linear convolution, length |a| + |b| - 1.
FieldVector Convolve(const FieldVector& a, const FieldVector& b);

struct ConvWorkerInput {
  FieldVector a;
  FieldVector b;
};

struct ConvWorkerResult {
  std::size_t worker;
  FieldVector values;
};

// Coded convolution of a (split into m blocks) with b (split into n blocks)
// over N workers. Worker i stores
//   a~_i = sum_{j<m} a_j x_i^j,   b~_i = sum_{k<n} b_k x_i^k,
// so a~_i * b~_i evaluates at x_i the polynomial whose x^d coefficient is
// sum_{j+k=d} a_j * b_k. Any m + n - 1 results recover a * b.
class ConvolutionCode {
 public:
  // x_i = i. Throws kTooFewWorkers (N < m + n - 1) and kFieldTooSmall (q <= N).
  ConvolutionCode(std::size_t m, std::size_t n, std::size_t num_workers,
                  const PrimeField& field);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t num_workers() const { return num_workers_; }
  std::size_t recovery_threshold() const { return m_ + n_ - 1; }
  const PrimeField& field() const { return field_; }

  // Common block length s for inputs of the given lengths.
  std::size_t block_length(std::size_t len_a, std::size_t len_b) const;
  // Pads and splits a into m and b into n blocks of length s.
  std::pair<std::vector<FieldVector>, std::vector<FieldVector>> split(
      const FieldVector& a, const FieldVector& b) const;

  ConvWorkerInput encode(std::span<const FieldVector> a_blocks,
                         std::span<const FieldVector> b_blocks,
                         std::size_t worker) const;
  std::vector<ConvWorkerInput> encode_all(const FieldVector& a,
                                          const FieldVector& b) const;

  // The degree-(m+n-2) vector polynomial's coefficients, interpolated from
  // the first m + n - 1 results.
  std::vector<FieldVector> interpolate(
      std::span<const ConvWorkerResult> results) const;
  // a * b truncated to `output_length`.
  FieldVector decode(std::span<const ConvWorkerResult> results,
                     std::size_t output_length) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t num_workers_;
  PrimeField field_;
};

// Worker computation: full linear convolution of its stored vectors.
FieldVector ConvWorker(const FieldVector& coded_a, const FieldVector& coded_b);

}  // namespace codedmm

#endif  // CODEDMM_CONVOLUTION_H_
