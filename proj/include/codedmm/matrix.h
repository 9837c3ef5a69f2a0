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

#ifndef CODEDMM_MATRIX_H_
#define CODEDMM_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <vector>

#include "codedmm/field.h"

namespace codedmm {

// Dense row-major matrix over GF(q). Entries are stored as canonical raw
// values; the field travels with the matrix.
class MatrixF {
 public:
  MatrixF(std::size_t rows, std::size_t cols, const PrimeField& field);
  // Values are reduced mod q. Throws kBlockShapeMismatch on a size mismatch.
  MatrixF(std::size_t rows, std::size_t cols, const PrimeField& field,
          std::vector<std::uint64_t> values);

  static MatrixF FromSigned(std::size_t rows, std::size_t cols,
                            const PrimeField& field,
                            const std::vector<std::int64_t>& values);
  static MatrixF Identity(std::size_t n, const PrimeField& field);
  static MatrixF Random(std::size_t rows, std::size_t cols,
                        const PrimeField& field, std::mt19937_64& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  const PrimeField& field() const { return field_; }

  std::uint64_t get(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) {
    data_[r * cols_ + c] = field_.reduce(v);
  }
  FieldElement at(std::size_t r, std::size_t c) const {
    return FieldElement(get(r, c), field_);
  }

  std::span<const std::uint64_t> data() const { return data_; }

  bool is_zero() const;
  bool same_shape(const MatrixF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  MatrixF& operator+=(const MatrixF& o);
  MatrixF& operator-=(const MatrixF& o);
  // this += coeff * o
  MatrixF& add_scaled(const MatrixF& o, std::uint64_t coeff);
  MatrixF scaled(std::uint64_t coeff) const;
  MatrixF transpose() const;

  friend MatrixF operator+(MatrixF a, const MatrixF& b) { return a += b; }
  friend MatrixF operator-(MatrixF a, const MatrixF& b) { return a -= b; }
  friend bool operator==(const MatrixF& a, const MatrixF& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  void check_compatible(const MatrixF& o) const;

  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

// Submatrices of a partitioned input are ordinary matrices.
using MatrixBlock = MatrixF;

// a * b
MatrixF Multiply(const MatrixF& a, const MatrixF& b);
// a^T * b, the product every worker computes.
MatrixF TransposeMultiply(const MatrixF& a, const MatrixF& b);

std::ostream& operator<<(std::ostream& os, const MatrixF& m);

}  // namespace codedmm

#endif  // CODEDMM_MATRIX_H_
