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

#ifndef CODEDMM_POLYNOMIAL_H_
#define CODEDMM_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "codedmm/field.h"
#include "codedmm/matrix.h"

namespace codedmm {

// Univariate polynomial over GF(q); coefficient index = degree. Trailing
// zero coefficients are never stored, so the zero polynomial has no
// coefficients and no degree.
class FieldPolynomial {
 public:
  explicit FieldPolynomial(const PrimeField& field) : field_(field) {}
  FieldPolynomial(const PrimeField& field, std::vector<std::uint64_t> coeffs);
  static FieldPolynomial FromElements(const PrimeField& field,
                                      const std::vector<FieldElement>& coeffs);

  const PrimeField& field() const { return field_; }
  // std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coefficient(std::size_t d) const;
  std::span<const std::uint64_t> coefficients() const { return coeffs_; }

  // Horner evaluation. Throws kFieldMismatch for a point from another field.
  FieldElement evaluate(const FieldElement& x) const;
  std::uint64_t evaluate_raw(std::uint64_t x) const;

  friend FieldPolynomial operator+(const FieldPolynomial& a,
                                   const FieldPolynomial& b);
  friend FieldPolynomial operator-(const FieldPolynomial& a,
                                   const FieldPolynomial& b);
  friend FieldPolynomial operator*(const FieldPolynomial& a,
                                   const FieldPolynomial& b);
  friend bool operator==(const FieldPolynomial& a, const FieldPolynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  PrimeField field_;
  std::vector<std::uint64_t> coeffs_;
};

// Quotient and remainder of num / den. Throws kDivisionByZero for den == 0.
std::pair<FieldPolynomial, FieldPolynomial> DivMod(const FieldPolynomial& num,
                                                   const FieldPolynomial& den);

struct InterpolationPoint {
  FieldElement x;
  FieldElement y;
};

// Unique polynomial of degree < points.size() through all points. O(K^2).
// Throws kDuplicateEvaluationPoint when two x coincide.
FieldPolynomial LagrangeInterpolate(std::span<const InterpolationPoint> points);

// Coefficients of the Lagrange basis polynomials for distinct nodes xs:
// row i holds l_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j), low degree
// first. O(K^2) time and space.
std::vector<std::vector<std::uint64_t>> LagrangeBasisCoefficients(
    const PrimeField& field, std::span<const std::uint64_t> xs);

// Values l_j(y) of the Lagrange basis for nodes xs at a single point y.
std::vector<std::uint64_t> LagrangeBasisAt(const PrimeField& field,
                                           std::span<const std::uint64_t> xs,
                                           std::uint64_t y);

// Throws kDuplicateEvaluationPoint unless the raw points are pairwise distinct.
void CheckDistinct(std::span<const std::uint64_t> xs);

// Interpolates a polynomial with matrix coefficients from (xs[i], ys[i]);
// returns its xs.size() coefficient blocks, low degree first. Equivalent to
// running LagrangeInterpolate on every entry stream.
std::vector<MatrixBlock> InterpolateBlockPolynomial(
    std::span<const FieldElement> xs, std::span<const MatrixBlock> ys);
std::vector<MatrixBlock> InterpolateBlockPolynomial(
    const PrimeField& field, std::span<const std::uint64_t> xs,
    std::span<const MatrixBlock> ys);

// Horner evaluation of a matrix-coefficient polynomial at x.
MatrixBlock EvaluateBlockPolynomial(std::span<const MatrixBlock> coeffs,
                                    std::uint64_t x);

}  // namespace codedmm

#endif  // CODEDMM_POLYNOMIAL_H_
