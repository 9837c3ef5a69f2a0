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

#include "codedmm/polynomial_code.h"

#include <set>
#include <string>

#include "codedmm/polynomial.h"

namespace codedmm {

namespace {

void CheckParts(const Partitioning& parts) {
  if (parts.p == 0 || parts.m == 0 || parts.n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "p, m, n must be >= 1");
  }
}

MatrixBlock Combine(const BlockGrid& grid, const PrimeField& f,
                    std::uint64_t x,
                    const auto& exponent /* (j, l) -> power of x */) {
  MatrixBlock out(grid.block_rows(), grid.block_cols(), f);
  for (std::size_t j = 0; j < grid.row_parts(); ++j) {
    for (std::size_t l = 0; l < grid.col_parts(); ++l) {
      out.add_scaled(grid.block(j, l), f.pow(x, exponent(j, l)));
    }
  }
  return out;
}

}  // namespace

std::size_t PolynomialCodeThreshold(const Partitioning& parts,
                                    std::uint64_t alpha, std::uint64_t beta,
                                    std::uint64_t theta) {
  CheckParts(parts);
  return 2 * (parts.p - 1) * alpha + (parts.m - 1) * beta +
         (parts.n - 1) * theta + 1;
}

std::size_t EntangledThreshold(const Partitioning& parts) {
  CheckParts(parts);
  return parts.p * parts.m * parts.n + parts.p - 1;
}

PolynomialCodeSpec GeneralPolySpec(const Partitioning& parts,
                                   std::size_t num_workers, std::uint64_t alpha,
                                   std::uint64_t beta, std::uint64_t theta,
                                   const PrimeField& field) {
  const std::size_t k = PolynomialCodeThreshold(parts, alpha, beta, theta);
  if (num_workers < k) {
    throw Error(ErrorCode::kTooFewWorkers,
                "N = " + std::to_string(num_workers) + " < threshold " +
                    std::to_string(k));
  }
  if (field.modulus() <= num_workers) {
    throw Error(ErrorCode::kFieldTooSmall,
                "q = " + std::to_string(field.modulus()) +
                    " must exceed N = " + std::to_string(num_workers));
  }
  std::vector<FieldElement> points;
  points.reserve(num_workers);
  for (std::size_t i = 0; i < num_workers; ++i) points.push_back(field.element(i));
  return PolynomialCodeSpec{parts, num_workers, alpha, beta, theta,
                            std::move(points), field};
}

PolynomialCodeSpec EntangledSpec(const Partitioning& parts,
                                 std::size_t num_workers,
                                 const PrimeField& field) {
  CheckParts(parts);
  return GeneralPolySpec(parts, num_workers, 1, parts.p, parts.p * parts.m,
                         field);
}

std::pair<MatrixBlock, MatrixBlock> GeneralPolyEncode(
    const PolynomialCodeSpec& spec, const BlockGrid& a, const BlockGrid& b,
    std::size_t worker) {
  const PolynomialCode code(spec);
  return {code.encode_a(a, worker), code.encode_b(b, worker)};
}

PolynomialCode::PolynomialCode(PolynomialCodeSpec spec)
    : CodingScheme(spec.parts, spec.num_workers),
      spec_(std::move(spec)),
      threshold_(PolynomialCodeThreshold(spec_.parts, spec_.alpha, spec_.beta,
                                         spec_.theta)) {
  const auto& [p, m, n] = spec_.parts;
  if (spec_.points.size() != spec_.num_workers) {
    throw Error(ErrorCode::kInvalidArgument, "need one evaluation point per worker");
  }
  std::vector<std::uint64_t> raw;
  for (const auto& x : spec_.points) {
    if (!(x.field() == spec_.field)) {
      throw Error(ErrorCode::kFieldMismatch, "evaluation point field");
    }
    raw.push_back(x.value());
  }
  CheckDistinct(raw);
  if (spec_.num_workers < threshold_) {
    throw Error(ErrorCode::kTooFewWorkers,
                "N = " + std::to_string(spec_.num_workers) + " < threshold " +
                    std::to_string(threshold_));
  }
  std::set<std::uint64_t> targets;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t kp = 0; kp < n; ++kp) {
      if (!targets.insert(target_degree(k, kp)).second) {
        throw Error(ErrorCode::kInvalidExponents,
                    "two output blocks share a degree");
      }
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t jp = 0; jp < p; ++jp) {
      if (j == jp) continue;
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t kp = 0; kp < n; ++kp) {
          const std::uint64_t deg = j * spec_.alpha + k * spec_.beta +
                                    (p - 1 - jp) * spec_.alpha +
                                    kp * spec_.theta;
          if (targets.contains(deg)) {
            throw Error(ErrorCode::kInvalidExponents,
                        "cross term collides with output degree " +
                            std::to_string(deg));
          }
        }
      }
    }
  }
}

std::string PolynomialCode::name() const {
  const auto& parts = spec_.parts;
  if (spec_.alpha == 1 && spec_.beta == parts.p &&
      spec_.theta == parts.p * parts.m) {
    return "entangled";
  }
  return "general-poly";
}

std::size_t PolynomialCode::target_degree(std::size_t k, std::size_t kp) const {
  return (spec_.parts.p - 1) * spec_.alpha + k * spec_.beta + kp * spec_.theta;
}

MatrixBlock PolynomialCode::encode_a(const BlockGrid& a,
                                     std::size_t worker) const {
  check_worker(worker);
  check_grids(a, spec_.parts.m);
  return Combine(a, spec_.field, point(worker), [&](std::size_t j, std::size_t k) {
    return j * spec_.alpha + k * spec_.beta;
  });
}

MatrixBlock PolynomialCode::encode_b(const BlockGrid& b,
                                     std::size_t worker) const {
  check_worker(worker);
  check_grids(b, spec_.parts.n);
  const std::size_t p = spec_.parts.p;
  return Combine(b, spec_.field, point(worker), [&](std::size_t j, std::size_t k) {
    return (p - 1 - j) * spec_.alpha + k * spec_.theta;
  });
}

std::vector<MatrixBlock> PolynomialCode::interpolate(
    std::span<const WorkerResult> results) const {
  if (results.size() < threshold_) {
    throw Error(ErrorCode::kInsufficientResults,
                "have " + std::to_string(results.size()) + " results, need " +
                    std::to_string(threshold_));
  }
  std::vector<std::uint64_t> xs;
  std::vector<MatrixBlock> ys;
  xs.reserve(threshold_);
  ys.reserve(threshold_);
  for (std::size_t i = 0; i < threshold_; ++i) {
    check_worker(results[i].worker);
    xs.push_back(point(results[i].worker));
    ys.push_back(results[i].block);
  }
  return InterpolateBlockPolynomial(spec_.field, xs, ys);
}

MatrixF PolynomialCode::decode(std::span<const WorkerResult> results,
                               std::size_t out_rows,
                               std::size_t out_cols) const {
  return extract(interpolate(results), out_rows, out_cols);
}

MatrixF PolynomialCode::extract(std::span<const MatrixBlock> coeffs,
                                std::size_t out_rows,
                                std::size_t out_cols) const {
  if (coeffs.size() != threshold_) {
    throw Error(ErrorCode::kInvalidArgument, "expected K coefficient blocks");
  }
  const auto& [p, m, n] = spec_.parts;
  std::vector<MatrixBlock> blocks;
  blocks.reserve(m * n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t kp = 0; kp < n; ++kp) {
      blocks.push_back(coeffs[target_degree(k, kp)]);
    }
  }
  return AssembleProduct(blocks, m, n, out_rows, out_cols);
}

}  // namespace codedmm
