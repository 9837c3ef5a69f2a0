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

#include "codedmm/blocks.h"

#include <string>

namespace codedmm {

namespace {

std::size_t CeilDiv(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

BlockGrid::BlockGrid(std::size_t row_parts, std::size_t col_parts,
                     std::vector<MatrixBlock> blocks, std::size_t original_rows,
                     std::size_t original_cols)
    : row_parts_(row_parts),
      col_parts_(col_parts),
      blocks_(std::move(blocks)),
      original_rows_(original_rows),
      original_cols_(original_cols) {
  if (row_parts == 0 || col_parts == 0 ||
      blocks_.size() != row_parts * col_parts) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "grid needs row_parts * col_parts blocks");
  }
  for (const auto& b : blocks_) {
    if (!b.same_shape(blocks_.front()) || !(b.field() == blocks_.front().field())) {
      throw Error(ErrorCode::kBlockShapeMismatch, "grid blocks differ in shape");
    }
  }
  if (original_rows > row_parts * block_rows() ||
      original_cols > col_parts * block_cols()) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "original shape exceeds the padded grid");
  }
}

MatrixF BlockGrid::assemble() const {
  return AssembleProduct(blocks_, row_parts_, col_parts_, original_rows_,
                         original_cols_);
}

BlockGrid Partition(const MatrixF& m, std::size_t row_parts,
                    std::size_t col_parts) {
  if (row_parts == 0 || col_parts == 0) {
    throw Error(ErrorCode::kInvalidArgument, "partition counts must be >= 1");
  }
  const std::size_t br = CeilDiv(m.rows(), row_parts);
  const std::size_t bc = CeilDiv(m.cols(), col_parts);
  std::vector<MatrixBlock> blocks;
  blocks.reserve(row_parts * col_parts);
  for (std::size_t j = 0; j < row_parts; ++j) {
    for (std::size_t l = 0; l < col_parts; ++l) {
      MatrixBlock b(br, bc, m.field());
      for (std::size_t r = 0; r < br; ++r) {
        const std::size_t src_r = j * br + r;
        if (src_r >= m.rows()) break;
        for (std::size_t c = 0; c < bc; ++c) {
          const std::size_t src_c = l * bc + c;
          if (src_c >= m.cols()) break;
          b.set(r, c, m.get(src_r, src_c));
        }
      }
      blocks.push_back(std::move(b));
    }
  }
  return BlockGrid(row_parts, col_parts, std::move(blocks), m.rows(), m.cols());
}

MatrixF AssembleProduct(const std::vector<MatrixBlock>& blocks, std::size_t m,
                        std::size_t n, std::size_t true_rows,
                        std::size_t true_cols) {
  if (m == 0 || n == 0 || blocks.size() != m * n) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "expected " + std::to_string(m * n) + " output blocks");
  }
  const std::size_t br = blocks.front().rows();
  const std::size_t bc = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.rows() != br || b.cols() != bc) {
      throw Error(ErrorCode::kBlockShapeMismatch, "output blocks differ in shape");
    }
  }
  if (true_rows > m * br || true_cols > n * bc) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "requested shape exceeds the assembled blocks");
  }
  MatrixF out(true_rows, true_cols, blocks.front().field());
  for (std::size_t r = 0; r < true_rows; ++r) {
    for (std::size_t c = 0; c < true_cols; ++c) {
      out.set(r, c, blocks[(r / br) * n + c / bc].get(r % br, c % bc));
    }
  }
  return out;
}

std::vector<FieldVector> PartitionVector(const FieldVector& v,
                                         std::size_t parts,
                                         const PrimeField& field) {
  if (parts == 0) {
    throw Error(ErrorCode::kInvalidArgument, "partition counts must be >= 1");
  }
  const std::size_t len = CeilDiv(v.size(), parts);
  std::vector<FieldVector> out(parts, FieldVector(len, field.zero()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i].field() == field)) {
      throw Error(ErrorCode::kFieldMismatch, "vector entry from another field");
    }
    out[i / len][i % len] = v[i];
  }
  return out;
}

FieldVector OverlapAdd(const std::vector<FieldVector>& block_convs,
                       std::size_t block_len, const PrimeField& field) {
  if (block_len == 0 || block_convs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "overlap-add needs blocks");
  }
  const std::size_t piece = 2 * block_len - 1;
  FieldVector out(block_convs.size() * block_len + block_len - 1, field.zero());
  for (std::size_t d = 0; d < block_convs.size(); ++d) {
    if (block_convs[d].size() != piece) {
      throw Error(ErrorCode::kBlockShapeMismatch,
                  "block convolution " + std::to_string(d) + " has length " +
                      std::to_string(block_convs[d].size()) + ", expected " +
                      std::to_string(piece));
    }
    for (std::size_t i = 0; i < piece; ++i) out[d * block_len + i] += block_convs[d][i];
  }
  return out;
}

}  // namespace codedmm
