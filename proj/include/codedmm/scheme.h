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

#ifndef CODEDMM_SCHEME_H_
#define CODEDMM_SCHEME_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "codedmm/blocks.h"
#include "codedmm/matrix.h"

namespace codedmm {

// What one worker stores.
struct WorkerInput {
  MatrixBlock a;
  MatrixBlock b;
};

// What one worker returns to the master.
struct WorkerResult {
  std::size_t worker;
  MatrixBlock block;
};

// How the inputs are cut: A (s x r) into p x m blocks, B (s x t) into p x n.
struct Partitioning {
  std::size_t p;
  std::size_t m;
  std::size_t n;
};

// A linear coded-computation strategy for C = A^T B over N workers. Decoding
// must succeed from the results of any `recovery_threshold()` distinct
// workers.
class CodingScheme {
 public:
  CodingScheme(Partitioning parts, std::size_t num_workers)
      : parts_(parts), num_workers_(num_workers) {}
  virtual ~CodingScheme() = default;

  virtual std::string name() const = 0;
  virtual std::size_t recovery_threshold() const = 0;
  virtual MatrixBlock encode_a(const BlockGrid& a, std::size_t worker) const = 0;
  virtual MatrixBlock encode_b(const BlockGrid& b, std::size_t worker) const = 0;
  // `results` is in arrival order. Returns the out_rows x out_cols product.
  virtual MatrixF decode(std::span<const WorkerResult> results,
                         std::size_t out_rows, std::size_t out_cols) const = 0;

  const Partitioning& partitioning() const { return parts_; }
  std::size_t num_workers() const { return num_workers_; }

  BlockGrid partition_a(const MatrixF& a) const {
    return Partition(a, parts_.p, parts_.m);
  }
  BlockGrid partition_b(const MatrixF& b) const {
    return Partition(b, parts_.p, parts_.n);
  }
  // Partitions once and encodes for every worker.
  std::vector<WorkerInput> encode(const MatrixF& a, const MatrixF& b) const;

 protected:
  void check_worker(std::size_t worker) const;
  void check_grids(const BlockGrid& grid, std::size_t col_parts) const;

 private:
  Partitioning parts_;
  std::size_t num_workers_;
};

// The per-worker computation: coded_a^T * coded_b.
MatrixBlock WorkerMultiply(const MatrixBlock& coded_a,
                           const MatrixBlock& coded_b);

// Runs every worker on its stored input; result i belongs to worker i.
std::vector<WorkerResult> ComputeAll(std::span<const WorkerInput> inputs);

}  // namespace codedmm

#endif  // CODEDMM_SCHEME_H_
