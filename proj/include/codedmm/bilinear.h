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

#ifndef CODEDMM_BILINEAR_H_
#define CODEDMM_BILINEAR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codedmm/field.h"
#include "codedmm/scheme.h"

namespace codedmm {

// A rank-R bilinear algorithm for C = A^T B with A of shape p x m and B of
// shape p x n (entries may themselves be blocks):
//   Av_i = sum_{l,j} a(i,l,j) A_{l,j},   Bv_i = sum_{l,k} b(i,l,k) B_{l,k},
//   C_{j,k} = sum_i c(i,j,k) Av_i^T Bv_i.
// Coefficients are small signed integers, mapped into a field on use.
class BilinearConstruction {
 public:
  // Flat tensors in row-major (i, ., .) order. Throws kInvalidConstruction
  // on size mismatch.
  BilinearConstruction(std::string name, std::size_t p, std::size_t m,
                       std::size_t n, std::size_t rank, std::vector<std::int64_t> a,
                       std::vector<std::int64_t> b, std::vector<std::int64_t> c);

  const std::string& name() const { return name_; }
  std::size_t p() const { return p_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t rank() const { return rank_; }
  Partitioning partitioning() const { return {p_, m_, n_}; }

  std::int64_t a(std::size_t i, std::size_t l, std::size_t j) const {
    return a_[(i * p_ + l) * m_ + j];
  }
  std::int64_t b(std::size_t i, std::size_t l, std::size_t k) const {
    return b_[(i * p_ + l) * n_ + k];
  }
  std::int64_t c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * m_ + j) * n_ + k];
  }

  std::span<const std::int64_t> a_tensor() const { return a_; }
  std::span<const std::int64_t> b_tensor() const { return b_; }
  std::span<const std::int64_t> c_tensor() const { return c_; }

  BilinearConstruction with_c(std::vector<std::int64_t> c) const {
    return BilinearConstruction(name_, p_, m_, n_, rank_, a_, b_, std::move(c));
  }

 private:
  std::string name_;
  std::size_t p_, m_, n_, rank_;
  std::vector<std::int64_t> a_, b_, c_;
};

// Basis-pair indices of the first identity violation: A = e_{a_row,a_col},
// B = e_{b_row,b_col}, output entry (out_row, out_col).
struct ConstructionViolation {
  std::size_t a_row, a_col, b_row, b_col, out_row, out_col;
};

struct ValidationResult {
  bool ok;
  std::optional<ConstructionViolation> violation;
};

// Exhaustive check of the defining identity on every pair of basis inputs
// (pm * pn pairs, each against all mn outputs), evaluated in `field`.
ValidationResult ValidateConstruction(const BilinearConstruction& bc,
                                      const PrimeField& field = PrimeField());

// Rank-pmn construction: one multiplication per (l, j, k).
BilinearConstruction StandardConstruction(std::size_t p, std::size_t m,
                                          std::size_t n);
// Strassen's seven products for 2 x 2 x 2.
BilinearConstruction StrassenConstruction();
// Kronecker composition; shapes and ranks multiply.
BilinearConstruction ComposeConstructions(const BilinearConstruction& outer,
                                          const BilinearConstruction& inner);
// k-fold composition of bc with itself. Rejects k == 0 and ranks > 10^6.
BilinearConstruction TensorPower(const BilinearConstruction& bc, std::size_t k);

// JSON layout: {"name", "p", "m", "n", "R", "a": [R][p][m], "b": [R][p][n],
// "c": [R][m][n]} with centered integer entries.
BilinearConstruction ConstructionFromJson(const std::string& text);
std::string ConstructionToJson(const BilinearConstruction& bc);
BilinearConstruction LoadConstruction(const std::string& path);

// Resolves "strassen", "strassen^k", "standard:p,m,n", a registry name in
// `registry_dir` (file <name>.json), or a path to a JSON file.
BilinearConstruction ResolveConstruction(const std::string& name_or_path,
                                         const std::string& registry_dir);

// Recovers the element-wise products Av_i^T Bv_i (i < R) of two length-R
// block vectors from N workers. The vectors are read as values at x_0..x_{R-1}
// of degree R-1 polynomials f, g; worker w stores f(y_w), g(y_w) and returns
// f(y_w)^T g(y_w). Any 2R-1 results determine f^T g. With N < 2R-1 the
// threshold is N, which requires y_i = x_i for i < R.
class ElementwiseProductCode {
 public:
  // Defaults: x = {0..R-1}, y = {0..N-1}.
  ElementwiseProductCode(std::size_t rank, std::size_t num_workers,
                         const PrimeField& field,
                         std::vector<std::uint64_t> x_points = {},
                         std::vector<std::uint64_t> y_points = {});

  std::size_t rank() const { return rank_; }
  std::size_t num_workers() const { return num_workers_; }
  // min{N, 2R - 1}
  std::size_t recovery_threshold() const;
  // Number of unknown coefficients in the product polynomial, 2R - 1.
  std::size_t interpolation_unknowns() const { return 2 * rank_ - 1; }

  MatrixBlock encode(std::span<const MatrixBlock> vec, std::size_t worker) const;
  // Element-wise products in index order. Throws kInsufficientResults.
  std::vector<MatrixBlock> decode(std::span<const WorkerResult> results) const;

 private:
  std::size_t rank_;
  std::size_t num_workers_;
  PrimeField field_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> y_;
  // weights_[w][j] = l_j(y_w) over the x nodes.
  std::vector<std::vector<std::uint64_t>> weights_;
};

// Matrix multiplication through a bilinear construction followed by the
// element-wise product code; threshold min{N, 2R - 1}.
class ImprovedEntangledCode : public CodingScheme {
 public:
  ImprovedEntangledCode(BilinearConstruction bc, std::size_t num_workers,
                        const PrimeField& field,
                        std::vector<std::uint64_t> x_points = {},
                        std::vector<std::uint64_t> y_points = {});

  std::string name() const override { return "improved"; }
  std::size_t recovery_threshold() const override {
    return products_.recovery_threshold();
  }
  MatrixBlock encode_a(const BlockGrid& a, std::size_t worker) const override;
  MatrixBlock encode_b(const BlockGrid& b, std::size_t worker) const override;
  MatrixF decode(std::span<const WorkerResult> results, std::size_t out_rows,
                 std::size_t out_cols) const override;

  const BilinearConstruction& construction() const { return bc_; }
  const ElementwiseProductCode& product_code() const { return products_; }

  // Av_i for i < R.
  std::vector<MatrixBlock> a_vector(const BlockGrid& a) const;
  // Bv_i for i < R.
  std::vector<MatrixBlock> b_vector(const BlockGrid& b) const;

 private:
  BilinearConstruction bc_;
  PrimeField field_;
  ElementwiseProductCode products_;
};

}  // namespace codedmm

#endif  // CODEDMM_BILINEAR_H_
