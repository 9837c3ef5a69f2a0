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

#include "codedmm/matrix.h"

#include <algorithm>
#include <string>

namespace codedmm {

namespace {

std::string ShapeString(const MatrixF& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void CheckSameField(const MatrixF& a, const MatrixF& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
  }
}

}  // namespace

MatrixF::MatrixF(std::size_t rows, std::size_t cols, const PrimeField& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

MatrixF::MatrixF(std::size_t rows, std::size_t cols, const PrimeField& field,
                 std::vector<std::uint64_t> values)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(values)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(data_.size()));
  }
  for (auto& v : data_) v = field_.reduce(v);
}

MatrixF MatrixF::FromSigned(std::size_t rows, std::size_t cols,
                            const PrimeField& field,
                            const std::vector<std::int64_t>& values) {
  std::vector<std::uint64_t> raw(values.size());
  std::transform(values.begin(), values.end(), raw.begin(),
                 [&](std::int64_t v) { return field.reduce_signed(v); });
  return MatrixF(rows, cols, field, std::move(raw));
}

MatrixF MatrixF::Identity(std::size_t n, const PrimeField& field) {
  MatrixF m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixF MatrixF::Random(std::size_t rows, std::size_t cols,
                        const PrimeField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  MatrixF m(rows, cols, field);
  for (auto& v : m.data_) v = dist(rng);
  return m;
}

bool MatrixF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

void MatrixF::check_compatible(const MatrixF& o) const {
  CheckSameField(*this, o);
  if (!same_shape(o)) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                ShapeString(*this) + " vs " + ShapeString(o));
  }
}

MatrixF& MatrixF::operator+=(const MatrixF& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] = field_.add(data_[i], o.data_[i]);
  }
  return *this;
}

MatrixF& MatrixF::operator-=(const MatrixF& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] = field_.sub(data_[i], o.data_[i]);
  }
  return *this;
}

MatrixF& MatrixF::add_scaled(const MatrixF& o, std::uint64_t coeff) {
  check_compatible(o);
  coeff = field_.reduce(coeff);
  if (coeff == 0) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] = field_.add(data_[i], field_.mul(coeff, o.data_[i]));
  }
  return *this;
}

MatrixF MatrixF::scaled(std::uint64_t coeff) const {
  MatrixF out(rows_, cols_, field_);
  return out.add_scaled(*this, coeff);
}

MatrixF MatrixF::transpose() const {
  MatrixF out(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = get(r, c);
  }
  return out;
}

MatrixF Multiply(const MatrixF& a, const MatrixF& b) {
  CheckSameField(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "cannot multiply " + ShapeString(a) + " by " + ShapeString(b));
  }
  const PrimeField& f = a.field();
  std::vector<std::uint64_t> out(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a.get(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& o = out[i * b.cols() + j];
        o = f.add(o, f.mul(aik, b.get(k, j)));
      }
    }
  }
  return MatrixF(a.rows(), b.cols(), f, std::move(out));
}

MatrixF TransposeMultiply(const MatrixF& a, const MatrixF& b) {
  CheckSameField(a, b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "cannot form A^T B for A " + ShapeString(a) + ", B " +
                    ShapeString(b));
  }
  const PrimeField& f = a.field();
  std::vector<std::uint64_t> out(a.cols() * b.cols(), 0);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const std::uint64_t aki = a.get(k, i);
      if (aki == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& o = out[i * b.cols() + j];
        o = f.add(o, f.mul(aki, b.get(k, j)));
      }
    }
  }
  return MatrixF(a.cols(), b.cols(), f, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const MatrixF& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << " ";
      os << m.get(r, c);
    }
  }
  return os << "] mod " << m.field().modulus();
}

}  // namespace codedmm
