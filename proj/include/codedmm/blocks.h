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

#ifndef CODEDMM_BLOCKS_H_
#define CODEDMM_BLOCKS_H_

#include <cstddef>
#include <vector>

#include "codedmm/field.h"
#include "codedmm/matrix.h"

namespace codedmm {

// A matrix split into row_parts x col_parts equally sized blocks after
// zero-padding. The original shape is retained so that assemble() can strip
// the padding again.
class BlockGrid {
 public:
  BlockGrid(std::size_t row_parts, std::size_t col_parts,
            std::vector<MatrixBlock> blocks, std::size_t original_rows,
            std::size_t original_cols);

  std::size_t row_parts() const { return row_parts_; }
  std::size_t col_parts() const { return col_parts_; }
  std::size_t block_rows() const { return blocks_.front().rows(); }
  std::size_t block_cols() const { return blocks_.front().cols(); }
  std::size_t original_rows() const { return original_rows_; }
  std::size_t original_cols() const { return original_cols_; }
  const PrimeField& field() const { return blocks_.front().field(); }

  const MatrixBlock& block(std::size_t j, std::size_t l) const {
    return blocks_[j * col_parts_ + l];
  }

  // Concatenates the blocks and truncates to the original shape.
  MatrixF assemble() const;

 private:
  std::size_t row_parts_;
  std::size_t col_parts_;
  std::vector<MatrixBlock> blocks_;
  std::size_t original_rows_;
  std::size_t original_cols_;
};

// Zero-pads m to multiples of (row_parts, col_parts) and splits it; block
// (j, l) covers padded rows [j*br, (j+1)*br) and columns [l*bc, (l+1)*bc).
BlockGrid Partition(const MatrixF& m, std::size_t row_parts,
                    std::size_t col_parts);

// Lays out the row-major m x n grid of output blocks C_{k,k'} and removes
// padding so the result is true_rows x true_cols.
MatrixF AssembleProduct(const std::vector<MatrixBlock>& blocks, std::size_t m,
                        std::size_t n, std::size_t true_rows,
                        std::size_t true_cols);

using FieldVector = std::vector<FieldElement>;

// Splits v into `parts` equal pieces of length ceil(|v| / parts), padding the
// tail with zeros.
std::vector<FieldVector> PartitionVector(const FieldVector& v,
                                         std::size_t parts,
                                         const PrimeField& field);

// Sums block d shifted by d * block_len. Each block must have length
// 2 * block_len - 1; the output has length D * block_len + block_len - 1.
FieldVector OverlapAdd(const std::vector<FieldVector>& block_convs,
                       std::size_t block_len, const PrimeField& field);

}  // namespace codedmm

#endif  // CODEDMM_BLOCKS_H_
