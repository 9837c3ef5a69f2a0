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

#include "codedmm/linalg.h"

#include <utility>

namespace codedmm {

std::vector<std::size_t> IndependentRows(const PrimeField& f,
                                         const ScalarMatrix& rows) {
  // basis[c] holds a reduced row whose leading entry is at column c.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::uint64_t> v = rows[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t c = v[pivot_cols[b]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = f.sub(v[j], f.mul(c, basis[b][j]));
      }
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) continue;
    const std::uint64_t inv = f.inv(v[lead]);
    for (auto& x : v) x = f.mul(x, inv);
    basis.push_back(std::move(v));
    pivot_cols.push_back(lead);
    kept.push_back(r);
  }
  return kept;
}

std::optional<ScalarMatrix> Invert(const PrimeField& f, ScalarMatrix m) {
  const std::size_t n = m.size();
  ScalarMatrix inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const std::uint64_t s = f.inv(m[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = f.mul(m[col][j], s);
      inv[col][j] = f.mul(inv[col][j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const std::uint64_t c = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = f.sub(m[r][j], f.mul(c, m[col][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(c, inv[col][j]));
      }
    }
  }
  return inv;
}

std::optional<std::vector<std::uint64_t>> Solve(const PrimeField& f,
                                                ScalarMatrix m,
                                                std::vector<std::uint64_t> rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<std::size_t> pivot_of_row;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(rhs[piv], rhs[r]);
    const std::uint64_t s = f.inv(m[r][col]);
    for (auto& x : m[r]) x = f.mul(x, s);
    rhs[r] = f.mul(rhs[r], s);
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || m[o][col] == 0) continue;
      const std::uint64_t c = m[o][col];
      for (std::size_t j = 0; j < cols; ++j) m[o][j] = f.sub(m[o][j], f.mul(c, m[r][j]));
      rhs[o] = f.sub(rhs[o], f.mul(c, rhs[r]));
    }
    pivot_of_row.push_back(col);
    ++r;
  }
  for (std::size_t o = r; o < rows; ++o) {
    if (rhs[o] != 0) return std::nullopt;
  }
  std::vector<std::uint64_t> x(cols, 0);
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i) x[pivot_of_row[i]] = rhs[i];
  return x;
}

}  // namespace codedmm
