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

#include <algorithm>
#include <string>

#include "codedmm/polynomial.h"

namespace codedmm {

namespace {

MatrixBlock AsRow(const FieldVector& v, const PrimeField& f) {
  std::vector<std::uint64_t> raw;
  raw.reserve(v.size());
  for (const auto& e : v) {
    if (!(e.field() == f)) throw Error(ErrorCode::kFieldMismatch, "vector field");
    raw.push_back(e.value());
  }
  return MatrixBlock(1, v.size(), f, std::move(raw));
}

FieldVector FromRow(const MatrixBlock& row) {
  FieldVector out;
  out.reserve(row.cols());
  for (std::size_t c = 0; c < row.cols(); ++c) out.push_back(row.at(0, c));
  return out;
}

FieldVector Padded(const FieldVector& v, std::size_t len, const PrimeField& f) {
  FieldVector out = v;
  out.resize(len, f.zero());
  return out;
}

}  // namespace

FieldVector Convolve(const FieldVector& a, const FieldVector& b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "convolution of an empty vector");
  }
  const PrimeField& f = a.front().field();
  FieldVector out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

FieldVector ConvWorker(const FieldVector& coded_a, const FieldVector& coded_b) {
  return Convolve(coded_a, coded_b);
}

ConvolutionCode::ConvolutionCode(std::size_t m, std::size_t n,
                                 std::size_t num_workers,
                                 const PrimeField& field)
    : m_(m), n_(n), num_workers_(num_workers), field_(field) {
  if (m == 0 || n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "m, n must be >= 1");
  }
  if (num_workers < recovery_threshold()) {
    throw Error(ErrorCode::kTooFewWorkers,
                "N = " + std::to_string(num_workers) + " < m + n - 1 = " +
                    std::to_string(recovery_threshold()));
  }
  if (field.modulus() <= num_workers) {
    throw Error(ErrorCode::kFieldTooSmall, "q must exceed N");
  }
}

std::size_t ConvolutionCode::block_length(std::size_t len_a,
                                          std::size_t len_b) const {
  return std::max({(len_a + m_ - 1) / m_, (len_b + n_ - 1) / n_, std::size_t{1}});
}

std::pair<std::vector<FieldVector>, std::vector<FieldVector>>
ConvolutionCode::split(const FieldVector& a, const FieldVector& b) const {
  const std::size_t s = block_length(a.size(), b.size());
  return {PartitionVector(Padded(a, m_ * s, field_), m_, field_),
          PartitionVector(Padded(b, n_ * s, field_), n_, field_)};
}

ConvWorkerInput ConvolutionCode::encode(std::span<const FieldVector> a_blocks,
                                        std::span<const FieldVector> b_blocks,
                                        std::size_t worker) const {
  if (a_blocks.size() != m_ || b_blocks.size() != n_) {
    throw Error(ErrorCode::kBlockShapeMismatch, "expected m a-blocks and n b-blocks");
  }
  if (worker >= num_workers_) {
    throw Error(ErrorCode::kInvalidArgument, "worker out of range");
  }
  const std::size_t s = a_blocks.front().size();
  const auto check = [&](std::span<const FieldVector> blocks) {
    for (const auto& blk : blocks) {
      if (blk.size() != s) {
        throw Error(ErrorCode::kBlockShapeMismatch, "blocks must share length s");
      }
    }
  };
  check(a_blocks);
  check(b_blocks);
  const FieldElement x = field_.element(worker);
  ConvWorkerInput out{FieldVector(s, field_.zero()), FieldVector(s, field_.zero())};
  FieldElement power = field_.one();
  for (std::size_t j = 0; j < m_; ++j, power *= x) {
    for (std::size_t t = 0; t < s; ++t) out.a[t] += a_blocks[j][t] * power;
  }
  power = field_.one();
  for (std::size_t k = 0; k < n_; ++k, power *= x) {
    for (std::size_t t = 0; t < s; ++t) out.b[t] += b_blocks[k][t] * power;
  }
  return out;
}

std::vector<ConvWorkerInput> ConvolutionCode::encode_all(
    const FieldVector& a, const FieldVector& b) const {
  const auto [ab, bb] = split(a, b);
  std::vector<ConvWorkerInput> out;
  out.reserve(num_workers_);
  for (std::size_t w = 0; w < num_workers_; ++w) out.push_back(encode(ab, bb, w));
  return out;
}

std::vector<FieldVector> ConvolutionCode::interpolate(
    std::span<const ConvWorkerResult> results) const {
  const std::size_t k = recovery_threshold();
  if (results.size() < k) {
    throw Error(ErrorCode::kInsufficientResults,
                "have " + std::to_string(results.size()) + " results, need " +
                    std::to_string(k));
  }
  std::vector<std::uint64_t> xs;
  std::vector<MatrixBlock> ys;
  for (std::size_t i = 0; i < k; ++i) {
    if (results[i].worker >= num_workers_) {
      throw Error(ErrorCode::kInvalidArgument, "worker out of range");
    }
    xs.push_back(results[i].worker);
    ys.push_back(AsRow(results[i].values, field_));
  }
  const auto coeffs = InterpolateBlockPolynomial(field_, xs, ys);
  std::vector<FieldVector> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(FromRow(c));
  return out;
}

FieldVector ConvolutionCode::decode(std::span<const ConvWorkerResult> results,
                                    std::size_t output_length) const {
  const auto coeffs = interpolate(results);
  const std::size_t piece = coeffs.front().size();
  if (piece % 2 == 0) {
    throw Error(ErrorCode::kBlockShapeMismatch, "worker results must have odd length 2s - 1");
  }
  FieldVector full = OverlapAdd(coeffs, (piece + 1) / 2, field_);
  if (output_length > full.size()) {
    throw Error(ErrorCode::kInvalidArgument, "output length exceeds a * b");
  }
  full.resize(output_length, field_.zero());
  return full;
}

}  // namespace codedmm
