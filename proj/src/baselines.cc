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

#include "codedmm/baselines.h"

#include <optional>
#include <random>

#include "codedmm/linalg.h"

namespace codedmm {

namespace {

std::size_t ProductCount(const Partitioning& parts) {
  return parts.p * parts.m * parts.n;
}

}  // namespace

UncodedRepetitionScheme::UncodedRepetitionScheme(const Partitioning& parts,
                                                 std::size_t num_workers)
    : CodingScheme(parts, num_workers) {
  if (parts.p == 0 || parts.m == 0 || parts.n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "p, m, n must be >= 1");
  }
  if (num_workers < ProductCount(parts)) {
    throw Error(ErrorCode::kTooFewWorkers,
                "uncoded repetition needs N >= pmn = " +
                    std::to_string(ProductCount(parts)));
  }
}

std::size_t UncodedRepetitionScheme::num_tasks() const {
  return ProductCount(partitioning());
}

std::size_t UncodedRepetitionScheme::recovery_threshold() const {
  const std::size_t n = num_workers();
  return n - n / num_tasks() + 1;
}

std::size_t UncodedRepetitionScheme::task_of(std::size_t worker) const {
  return worker % num_tasks();
}

// Task t decomposes as t = (j*m + k)*n + k'.
MatrixBlock UncodedRepetitionScheme::encode_a(const BlockGrid& a,
                                              std::size_t worker) const {
  check_worker(worker);
  check_grids(a, partitioning().m);
  const std::size_t jk = task_of(worker) / partitioning().n;
  return a.block(jk / partitioning().m, jk % partitioning().m);
}

MatrixBlock UncodedRepetitionScheme::encode_b(const BlockGrid& b,
                                              std::size_t worker) const {
  check_worker(worker);
  check_grids(b, partitioning().n);
  const auto& [p, m, n] = partitioning();
  const std::size_t t = task_of(worker);
  return b.block(t / (m * n), t % n);
}

MatrixF UncodedRepetitionScheme::decode(std::span<const WorkerResult> results,
                                        std::size_t out_rows,
                                        std::size_t out_cols) const {
  const std::size_t k = recovery_threshold();
  if (results.size() < k) {
    throw Error(ErrorCode::kInsufficientResults,
                "have " + std::to_string(results.size()) + " results, need " +
                    std::to_string(k));
  }
  std::vector<const MatrixBlock*> by_task(num_tasks(), nullptr);
  for (std::size_t i = 0; i < k; ++i) {
    check_worker(results[i].worker);
    auto& slot = by_task[task_of(results[i].worker)];
    if (slot == nullptr) slot = &results[i].block;
  }
  const auto& [p, m, n] = partitioning();
  std::vector<MatrixBlock> blocks;
  blocks.reserve(m * n);
  for (std::size_t kk = 0; kk < m; ++kk) {
    for (std::size_t kp = 0; kp < n; ++kp) {
      std::optional<MatrixBlock> sum;
      for (std::size_t j = 0; j < p; ++j) {
        const MatrixBlock* part = by_task[(j * m + kk) * n + kp];
        if (part == nullptr) {
          throw Error(ErrorCode::kInsufficientResults,
                      "no replica of sub-product " +
                          std::to_string((j * m + kk) * n + kp));
        }
        if (sum) {
          *sum += *part;
        } else {
          sum = *part;
        }
      }
      blocks.push_back(std::move(*sum));
    }
  }
  return AssembleProduct(blocks, m, n, out_rows, out_cols);
}

RandomLinearScheme::RandomLinearScheme(const Partitioning& parts,
                                       std::size_t num_workers,
                                       const PrimeField& field,
                                       std::uint64_t seed)
    : CodingScheme(parts, num_workers), field_(field) {
  if (parts.p == 0 || parts.m == 0 || parts.n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "p, m, n must be >= 1");
  }
  if (num_workers < recovery_threshold()) {
    throw Error(ErrorCode::kTooFewWorkers,
                "random linear code needs N >= p^2 mn = " +
                    std::to_string(recovery_threshold()));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  a_coeffs_.assign(num_workers, std::vector<std::uint64_t>(parts.p * parts.m));
  b_coeffs_.assign(num_workers, std::vector<std::uint64_t>(parts.p * parts.n));
  for (std::size_t w = 0; w < num_workers; ++w) {
    for (auto& c : a_coeffs_[w]) c = dist(rng);
    for (auto& c : b_coeffs_[w]) c = dist(rng);
  }
}

std::size_t RandomLinearScheme::recovery_threshold() const {
  const auto& parts = partitioning();
  return parts.p * parts.p * parts.m * parts.n;
}

MatrixBlock RandomLinearScheme::encode_a(const BlockGrid& a,
                                         std::size_t worker) const {
  check_worker(worker);
  check_grids(a, partitioning().m);
  MatrixBlock out(a.block_rows(), a.block_cols(), a.field());
  for (std::size_t j = 0; j < a.row_parts(); ++j) {
    for (std::size_t k = 0; k < a.col_parts(); ++k) {
      out.add_scaled(a.block(j, k), a_coeffs_[worker][j * a.col_parts() + k]);
    }
  }
  return out;
}

MatrixBlock RandomLinearScheme::encode_b(const BlockGrid& b,
                                         std::size_t worker) const {
  check_worker(worker);
  check_grids(b, partitioning().n);
  MatrixBlock out(b.block_rows(), b.block_cols(), b.field());
  for (std::size_t j = 0; j < b.row_parts(); ++j) {
    for (std::size_t k = 0; k < b.col_parts(); ++k) {
      out.add_scaled(b.block(j, k), b_coeffs_[worker][j * b.col_parts() + k]);
    }
  }
  return out;
}

MatrixF RandomLinearScheme::decode(std::span<const WorkerResult> results,
                                   std::size_t out_rows,
                                   std::size_t out_cols) const {
  const std::size_t unknowns = recovery_threshold();
  if (results.size() < unknowns) {
    throw Error(ErrorCode::kInsufficientResults,
                "have " + std::to_string(results.size()) + " results, need " +
                    std::to_string(unknowns));
  }
  const auto& [p, m, n] = partitioning();
  const std::size_t pm = p * m;
  const std::size_t pn = p * n;
  // Row w: coefficient of A_u^T B_v (u = j*m + k, v = j'*n + k') at u*pn + v.
  ScalarMatrix system;
  system.reserve(results.size());
  for (const auto& r : results) {
    check_worker(r.worker);
    std::vector<std::uint64_t> row(unknowns);
    for (std::size_t u = 0; u < pm; ++u) {
      for (std::size_t v = 0; v < pn; ++v) {
        row[u * pn + v] = field_.mul(a_coeffs_[r.worker][u], b_coeffs_[r.worker][v]);
      }
    }
    system.push_back(std::move(row));
  }
  const auto rows = IndependentRows(field_, system);
  if (rows.size() < unknowns) {
    throw Error(ErrorCode::kSingularDecodeSystem,
                "results span " + std::to_string(rows.size()) + " of " +
                    std::to_string(unknowns) + " products");
  }
  ScalarMatrix square;
  square.reserve(unknowns);
  for (std::size_t r : rows) square.push_back(system[r]);
  const auto inv = Invert(field_, std::move(square));
  if (!inv) {
    throw Error(ErrorCode::kSingularDecodeSystem, "selected rows are singular");
  }
  std::vector<MatrixBlock> blocks;
  blocks.reserve(m * n);
  const MatrixBlock& proto = results.front().block;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t kp = 0; kp < n; ++kp) {
      // C_{k,k'} = sum_j (A_{j,k}^T B_{j,k'}); each product is a row of inv.
      MatrixBlock sum(proto.rows(), proto.cols(), field_);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t weight = 0;
        for (std::size_t j = 0; j < p; ++j) {
          const std::size_t unknown = (j * m + k) * pn + (j * n + kp);
          weight = field_.add(weight, (*inv)[unknown][i]);
        }
        sum.add_scaled(results[rows[i]].block, weight);
      }
      blocks.push_back(std::move(sum));
    }
  }
  return AssembleProduct(blocks, m, n, out_rows, out_cols);
}

}  // namespace codedmm
