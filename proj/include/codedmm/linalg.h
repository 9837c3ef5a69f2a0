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

#ifndef CODEDMM_LINALG_H_
#define CODEDMM_LINALG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "codedmm/field.h"

namespace codedmm {

// Small dense scalar matrices used for decode systems; rows of raw values.
using ScalarMatrix = std::vector<std::vector<std::uint64_t>>;

// Greedily scans rows in order and keeps those that raise the rank.
std::vector<std::size_t> IndependentRows(const PrimeField& field,
                                         const ScalarMatrix& rows);

// Gauss-Jordan inverse of a square matrix; nullopt when singular.
std::optional<ScalarMatrix> Invert(const PrimeField& field, ScalarMatrix m);

// Some solution of m * x = rhs (free variables set to zero); nullopt when the
// system is inconsistent.
std::optional<std::vector<std::uint64_t>> Solve(const PrimeField& field,
                                                ScalarMatrix m,
                                                std::vector<std::uint64_t> rhs);

}  // namespace codedmm

#endif  // CODEDMM_LINALG_H_
