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

#ifndef CODEDMM_TESTS_ORACLES_H_
#define CODEDMM_TESTS_ORACLES_H_

// Brute-force references used by the tests. They work on plain integers with
// their own modular arithmetic so they share no code path with the library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "codedmm/blocks.h"
#include "codedmm/matrix.h"

namespace codedmm::oracle {

inline std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  for (; e > 0; --e) r = MulMod(r, a, q);
  return r;
}

// Fermat inverse by repeated squaring (the library uses extended Euclid).
inline std::uint64_t InvMod(std::uint64_t a, std::uint64_t q) {
  std::uint64_t r = 1, base = a % q, e = q - 2;
  while (e > 0) {
    if (e & 1) r = MulMod(r, base, q);
    base = MulMod(base, base, q);
    e >>= 1;
  }
  return r;
}

// Triple-loop A^T B.
inline MatrixF NaiveTransposeProduct(const MatrixF& a, const MatrixF& b) {
  const std::uint64_t q = a.field().modulus();
  std::vector<std::uint64_t> out(a.cols() * b.cols(), 0);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.rows(); ++k) {
        acc = (acc + MulMod(a.data()[k * a.cols() + i], b.data()[k * b.cols() + j], q)) % q;
      }
      out[i * b.cols() + j] = acc;
    }
  }
  return MatrixF(a.cols(), b.cols(), a.field(), std::move(out));
}

// Direct O(L^2) linear convolution on raw values.
inline std::vector<std::uint64_t> DirectConvolution(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
    std::uint64_t q) {
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + MulMod(a[i], b[j], q)) % q;
    }
  }
  return out;
}

inline std::vector<std::uint64_t> Raw(const FieldVector& v) {
  std::vector<std::uint64_t> out;
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

// Solves the Vandermonde system V c = y by Gaussian elimination; returns the
// coefficient vector, low degree first.
inline std::vector<std::uint64_t> VandermondeSolve(
    const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys,
    std::uint64_t q) {
  const std::size_t n = xs.size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < n; ++d) m[i][d] = PowMod(xs[i], d, q);
    m[i][n] = ys[i] % q;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const std::uint64_t inv = InvMod(m[c][c], q);
    for (auto& v : m[c]) v = MulMod(v, inv, q);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t j = 0; j <= n; ++j) {
        m[r][j] = (m[r][j] + q - MulMod(f, m[c][j], q)) % q;
      }
    }
  }
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

}  // namespace codedmm::oracle

#endif  // CODEDMM_TESTS_ORACLES_H_
