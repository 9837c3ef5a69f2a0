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

#ifndef CODEDMM_FIELD_H_
#define CODEDMM_FIELD_H_

#include <cstdint>
#include <ostream>

#include "codedmm/error.h"

namespace codedmm {

inline constexpr std::uint64_t kDefaultModulus = 65537;

class FieldElement;

// GF(q) for a prime q < 2^63. The raw-value helpers operate on canonical
// representatives in [0, q) and are what the matrix kernels use; the
// FieldElement wrapper adds field tracking for scalar code.
class PrimeField {
 public:
  // Throws kNotPrime unless q is prime.
  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const { return q_; }

  FieldElement element(std::uint64_t value) const;
  // Maps a signed integer to its canonical representative.
  FieldElement from_signed(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  std::uint64_t reduce(std::uint64_t v) const { return v % q_; }
  std::uint64_t reduce_signed(std::int64_t v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % q_);
  }
  // Extended Euclid. Throws kDivisionByZero for a == 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // Centered representative in (-q/2, q/2].
  std::int64_t centered(std::uint64_t v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

class FieldElement {
 public:
  FieldElement(std::uint64_t value, const PrimeField& field)
      : value_(field.reduce(value)), field_(field) {}

  std::uint64_t value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    return a += b;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    return a -= b;
  }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) {
    return a *= b;
  }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) {
    return a /= b;
  }
  FieldElement operator-() const {
    return FieldElement(field_.neg(value_), field_);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void check_same_field(const FieldElement& o) const;

  std::uint64_t value_;
  PrimeField field_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

enum class ArithOp { kAdd, kSub, kMul, kDiv };

FieldElement FieldArith(const FieldElement& a, const FieldElement& b,
                        ArithOp op);

}  // namespace codedmm

#endif  // CODEDMM_FIELD_H_
