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

#include "codedmm/polynomial.h"

#include <algorithm>
#include <string>

namespace codedmm {

FieldPolynomial::FieldPolynomial(const PrimeField& field,
                                 std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  trim();
}

FieldPolynomial FieldPolynomial::FromElements(
    const PrimeField& field, const std::vector<FieldElement>& coeffs) {
  std::vector<std::uint64_t> raw;
  raw.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!(c.field() == field)) {
      throw Error(ErrorCode::kFieldMismatch, "coefficient from another field");
    }
    raw.push_back(c.value());
  }
  return FieldPolynomial(field, std::move(raw));
}

void FieldPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> FieldPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

FieldElement FieldPolynomial::coefficient(std::size_t d) const {
  return FieldElement(d < coeffs_.size() ? coeffs_[d] : 0, field_);
}

FieldElement FieldPolynomial::evaluate(const FieldElement& x) const {
  if (!(x.field() == field_)) {
    throw Error(ErrorCode::kFieldMismatch, "evaluation point from another field");
  }
  return FieldElement(evaluate_raw(x.value()), field_);
}

std::uint64_t FieldPolynomial::evaluate_raw(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

FieldPolynomial operator+(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::kFieldMismatch, "poly +");
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.field_.add(i < a.coeffs_.size() ? a.coeffs_[i] : 0,
                          i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  }
  return FieldPolynomial(a.field_, std::move(out));
}

FieldPolynomial operator-(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::kFieldMismatch, "poly -");
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.field_.sub(i < a.coeffs_.size() ? a.coeffs_[i] : 0,
                          i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  }
  return FieldPolynomial(a.field_, std::move(out));
}

FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::kFieldMismatch, "poly *");
  if (a.is_zero() || b.is_zero()) return FieldPolynomial(a.field_);
  const PrimeField& f = a.field_;
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return FieldPolynomial(f, std::move(out));
}

std::pair<FieldPolynomial, FieldPolynomial> DivMod(const FieldPolynomial& num,
                                                   const FieldPolynomial& den) {
  if (!(num.field() == den.field())) {
    throw Error(ErrorCode::kFieldMismatch, "poly divmod");
  }
  if (den.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  }
  const PrimeField& f = num.field();
  std::vector<std::uint64_t> rem(num.coefficients().begin(),
                                 num.coefficients().end());
  const auto d = den.coefficients();
  if (rem.size() < d.size()) return {FieldPolynomial(f), num};
  std::vector<std::uint64_t> quot(rem.size() - d.size() + 1, 0);
  const std::uint64_t lead_inv = f.inv(d.back());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t c = f.mul(rem[k + d.size() - 1], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) {
      rem[k + j] = f.sub(rem[k + j], f.mul(c, d[j]));
    }
  }
  rem.resize(d.size() - 1);
  return {FieldPolynomial(f, std::move(quot)), FieldPolynomial(f, std::move(rem))};
}

void CheckDistinct(std::span<const std::uint64_t> xs) {
  std::vector<std::uint64_t> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::kDuplicateEvaluationPoint,
                "x = " + std::to_string(*dup) + " appears more than once");
  }
}

std::vector<std::vector<std::uint64_t>> LagrangeBasisCoefficients(
    const PrimeField& f, std::span<const std::uint64_t> xs) {
  CheckDistinct(xs);
  const std::size_t k = xs.size();
  // master(x) = prod_j (x - x_j), degree k.
  std::vector<std::uint64_t> master(k + 1, 0);
  master[0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t neg_x = f.neg(xs[j]);
    for (std::size_t d = j + 1; d > 0; --d) {
      master[d] = f.add(master[d - 1], f.mul(master[d], neg_x));
    }
    master[0] = f.mul(master[0], neg_x);
  }
  std::vector<std::vector<std::uint64_t>> basis(k);
  std::vector<std::uint64_t> quot(k);
  for (std::size_t i = 0; i < k; ++i) {
    // Synthetic division of master by (x - x_i).
    std::uint64_t carry = 0;
    for (std::size_t d = k; d-- > 0;) {
      carry = f.add(master[d + 1], f.mul(carry, xs[i]));
      quot[d] = carry;
    }
    std::uint64_t denom = 0;
    for (std::size_t d = k; d-- > 0;) denom = f.add(f.mul(denom, xs[i]), quot[d]);
    const std::uint64_t scale = f.inv(denom);
    basis[i].resize(k);
    for (std::size_t d = 0; d < k; ++d) basis[i][d] = f.mul(quot[d], scale);
  }
  return basis;
}

std::vector<std::uint64_t> LagrangeBasisAt(const PrimeField& f,
                                           std::span<const std::uint64_t> xs,
                                           std::uint64_t y) {
  CheckDistinct(xs);
  std::vector<std::uint64_t> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == j) continue;
      num = f.mul(num, f.sub(y, xs[k]));
      den = f.mul(den, f.sub(xs[j], xs[k]));
    }
    out[j] = f.mul(num, f.inv(den));
  }
  return out;
}

FieldPolynomial LagrangeInterpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "interpolation needs >= 1 point");
  }
  const PrimeField f = points.front().x.field();
  std::vector<std::uint64_t> xs;
  xs.reserve(points.size());
  for (const auto& pt : points) {
    if (!(pt.x.field() == f) || !(pt.y.field() == f)) {
      throw Error(ErrorCode::kFieldMismatch, "interpolation point field");
    }
    xs.push_back(pt.x.value());
  }
  const auto basis = LagrangeBasisCoefficients(f, xs);
  std::vector<std::uint64_t> coeffs(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint64_t y = points[i].y.value();
    if (y == 0) continue;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      coeffs[d] = f.add(coeffs[d], f.mul(y, basis[i][d]));
    }
  }
  return FieldPolynomial(f, std::move(coeffs));
}

std::vector<MatrixBlock> InterpolateBlockPolynomial(
    const PrimeField& field, std::span<const std::uint64_t> xs,
    std::span<const MatrixBlock> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need the same nonzero number of points and blocks");
  }
  for (const auto& y : ys) {
    if (!(y.field() == field)) {
      throw Error(ErrorCode::kFieldMismatch, "block from another field");
    }
    if (!y.same_shape(ys.front())) {
      throw Error(ErrorCode::kBlockShapeMismatch,
                  "all interpolated blocks must share one shape");
    }
  }
  const auto basis = LagrangeBasisCoefficients(field, xs);
  const std::size_t k = xs.size();
  std::vector<MatrixBlock> coeffs(
      k, MatrixBlock(ys.front().rows(), ys.front().cols(), field));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t d = 0; d < k; ++d) coeffs[d].add_scaled(ys[i], basis[i][d]);
  }
  return coeffs;
}

std::vector<MatrixBlock> InterpolateBlockPolynomial(
    std::span<const FieldElement> xs, std::span<const MatrixBlock> ys) {
  if (xs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "interpolation needs >= 1 point");
  }
  std::vector<std::uint64_t> raw;
  raw.reserve(xs.size());
  for (const auto& x : xs) {
    if (!(x.field() == xs.front().field())) {
      throw Error(ErrorCode::kFieldMismatch, "evaluation points in two fields");
    }
    raw.push_back(x.value());
  }
  return InterpolateBlockPolynomial(xs.front().field(), raw, ys);
}

MatrixBlock EvaluateBlockPolynomial(std::span<const MatrixBlock> coeffs,
                                    std::uint64_t x) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty block polynomial");
  }
  const PrimeField& f = coeffs.front().field();
  MatrixBlock acc(coeffs.front().rows(), coeffs.front().cols(), f);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc.scaled(x);
    acc += *it;
  }
  return acc;
}

}  // namespace codedmm
