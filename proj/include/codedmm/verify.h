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

#ifndef CODEDMM_VERIFY_H_
#define CODEDMM_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "codedmm/matrix.h"
#include "codedmm/scheme.h"

namespace codedmm {

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn
// returns false.
void ForEachCombination(
    std::size_t n, std::size_t k,
    const std::function<bool(std::span<const std::size_t>)>& fn);

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

struct SubsetCheck {
  std::size_t subsets = 0;
  std::size_t decoded = 0;   // decode equal to A^T B
  std::size_t wrong = 0;     // decode returned something else
  std::size_t failed = 0;    // decode threw
};

// Decodes A^T B from worker subsets of the given size: all of them when
// `samples` is 0, otherwise that many uniformly drawn subsets.
SubsetCheck VerifySubsets(const CodingScheme& scheme, const MatrixF& a,
                          const MatrixF& b, std::size_t subset_size,
                          std::size_t samples = 0, std::uint64_t seed = 0);

}  // namespace codedmm

#endif  // CODEDMM_VERIFY_H_
