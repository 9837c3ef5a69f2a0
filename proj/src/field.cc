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

#include "codedmm/field.h"

#include <string>

namespace codedmm {

namespace {

std::uint64_t MulMod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) %
                                    m);
}

std::uint64_t PowMod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = MulMod64(r, a, m);
    a = MulMod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : q_(modulus) {
  if (modulus >= (std::uint64_t{1} << 63) || !IsPrime(modulus)) {
    throw Error(ErrorCode::kNotPrime,
                "modulus " + std::to_string(modulus) + " is not a usable prime");
  }
}

FieldElement PrimeField::element(std::uint64_t value) const {
  return FieldElement(value, *this);
}

FieldElement PrimeField::from_signed(std::int64_t value) const {
  return FieldElement(reduce_signed(value), *this);
}

FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1, *this); }

std::uint64_t PrimeField::reduce_signed(std::int64_t v) const {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = v % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a = reduce(a);
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  // Invariant: old_s * a == old_r (mod q).
  std::int64_t old_r = static_cast<std::int64_t>(a);
  std::int64_t r = static_cast<std::int64_t>(q_);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return reduce_signed(old_s);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  return PowMod64(a, e, q_);
}

std::int64_t PrimeField::centered(std::uint64_t v) const {
  v = reduce(v);
  if (v > q_ / 2) return -static_cast<std::int64_t>(q_ - v);
  return static_cast<std::int64_t>(v);
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::kFieldMismatch,
                "GF(" + std::to_string(field_.modulus()) + ") vs GF(" +
                    std::to_string(o.field_.modulus()) + ")");
  }
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_.inv(value_), field_);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(field_.pow(value_, e), field_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  value_ = field_.add(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  value_ = field_.sub(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  value_ = field_.mul(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  value_ = field_.mul(value_, field_.inv(o.value_));
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.field().modulus() << ")";
}

FieldElement FieldArith(const FieldElement& a, const FieldElement& b,
                        ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
    case ArithOp::kDiv:
      return a / b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown arithmetic op");
}

}  // namespace codedmm
