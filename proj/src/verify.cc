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

#include "codedmm/verify.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace codedmm {

void ForEachCombination(
    std::size_t n, std::size_t k,
    const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SubsetCheck VerifySubsets(const CodingScheme& scheme, const MatrixF& a,
                          const MatrixF& b, std::size_t subset_size,
                          std::size_t samples, std::uint64_t seed) {
  const auto results = ComputeAll(scheme.encode(a, b));
  const MatrixF truth = TransposeMultiply(a, b);
  SubsetCheck check;
  const auto run = [&](std::span<const std::size_t> subset) {
    std::vector<WorkerResult> chosen;
    chosen.reserve(subset.size());
    for (std::size_t w : subset) chosen.push_back(results[w]);
    ++check.subsets;
    try {
      if (scheme.decode(chosen, a.cols(), b.cols()) == truth) {
        ++check.decoded;
      } else {
        ++check.wrong;
      }
    } catch (const Error&) {
      ++check.failed;
    }
    return true;
  };
  if (samples == 0) {
    ForEachCombination(scheme.num_workers(), subset_size, run);
  } else {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(scheme.num_workers());
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t s = 0; s < samples; ++s) {
      std::shuffle(all.begin(), all.end(), rng);
      run(std::span<const std::size_t>(all.data(), std::min(subset_size, all.size())));
    }
  }
  return check;
}

}  // namespace codedmm
