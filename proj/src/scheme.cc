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

#include "codedmm/scheme.h"

#include <string>

namespace codedmm {

std::vector<WorkerInput> CodingScheme::encode(const MatrixF& a,
                                              const MatrixF& b) const {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "A and B must have the same number of rows");
  }
  const BlockGrid ga = partition_a(a);
  const BlockGrid gb = partition_b(b);
  std::vector<WorkerInput> out;
  out.reserve(num_workers_);
  for (std::size_t w = 0; w < num_workers_; ++w) {
    out.push_back({encode_a(ga, w), encode_b(gb, w)});
  }
  return out;
}

void CodingScheme::check_worker(std::size_t worker) const {
  if (worker >= num_workers_) {
    throw Error(ErrorCode::kInvalidArgument,
                "worker " + std::to_string(worker) + " out of range for N = " +
                    std::to_string(num_workers_));
  }
}

void CodingScheme::check_grids(const BlockGrid& grid,
                               std::size_t col_parts) const {
  if (grid.row_parts() != parts_.p || grid.col_parts() != col_parts) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "grid is " + std::to_string(grid.row_parts()) + "x" +
                    std::to_string(grid.col_parts()) + ", expected " +
                    std::to_string(parts_.p) + "x" + std::to_string(col_parts));
  }
}

MatrixBlock WorkerMultiply(const MatrixBlock& coded_a,
                           const MatrixBlock& coded_b) {
  return TransposeMultiply(coded_a, coded_b);
}

std::vector<WorkerResult> ComputeAll(std::span<const WorkerInput> inputs) {
  std::vector<WorkerResult> out;
  out.reserve(inputs.size());
  for (std::size_t w = 0; w < inputs.size(); ++w) {
    out.push_back({w, WorkerMultiply(inputs[w].a, inputs[w].b)});
  }
  return out;
}

}  // namespace codedmm
