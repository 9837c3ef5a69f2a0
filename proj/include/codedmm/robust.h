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

#ifndef CODEDMM_ROBUST_H_
#define CODEDMM_ROBUST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "codedmm/polynomial.h"
#include "codedmm/polynomial_code.h"
#include "codedmm/scheme.h"

namespace codedmm {

// Relations between a code's Hamming distance d and what it tolerates.
struct HammingRelations {
  std::size_t recovery_threshold;  // N - d + 1
  std::size_t max_detectable;      // d - 1
  std::size_t max_correctable;     // floor((d - 1) / 2)

  friend bool operator==(const HammingRelations&,
                         const HammingRelations&) = default;
};

// Requires 1 <= d <= N.
HammingRelations ComputeHammingRelations(std::size_t num_workers,
                                         std::size_t distance);

std::size_t MaxDetectableErrors(const PolynomialCode& code);   // N - K
std::size_t MaxCorrectableErrors(const PolynomialCode& code);  // floor((N - K) / 2)

enum class DetectStatus { kClean, kErrorDetected };

struct DetectResult {
  DetectStatus status;
  std::optional<MatrixF> product;  // set when kClean
};

// Fits h from the K lowest-indexed workers and checks every other result
// against it. With at most N - K corrupted results this never returns a
// wrong product. `results` must hold all N workers.
DetectResult DetectErrors(const PolynomialCode& code,
                          std::span<const WorkerResult> results,
                          std::size_t out_rows, std::size_t out_cols);

struct CorrectionResult {
  MatrixF product;
  std::vector<std::size_t> located;  // workers judged faulty, ascending
};

// Locates faulty workers with Berlekamp-Welch on one entry stream of the
// result blocks, erases them, and re-fits from the rest. If a worker's
// corruption misses the pilot entry, the full-block consistency check
// exposes it and the search repeats on an entry where the mismatch shows.
// Throws kTooManyErrors when no consistent explanation within
// floor((N - K) / 2) faulty workers exists.
CorrectionResult CorrectErrors(const PolynomialCode& code,
                               std::span<const WorkerResult> results,
                               std::size_t out_rows, std::size_t out_cols);

// Berlekamp-Welch: the polynomial of degree < message_len that disagrees with
// at most `max_errors` of the points, or nullopt if none is found.
std::optional<FieldPolynomial> BerlekampWelch(
    const PrimeField& field, std::span<const std::uint64_t> xs,
    std::span<const std::uint64_t> ys, std::size_t message_len,
    std::size_t max_errors);

// Adds a uniformly random nonzero block to `errors` distinct workers chosen
// uniformly without replacement. Returns the corrupted worker ids, ascending.
std::vector<std::size_t> InjectFaults(std::vector<WorkerResult>& results,
                                      std::size_t errors, std::mt19937_64& rng);

enum class FaultMode { kDetect, kCorrect };

struct FaultTrialSummary {
  std::size_t trials = 0;
  std::size_t exact = 0;         // returned the true product
  std::size_t flagged = 0;       // ErrorDetected / TooManyErrors
  std::size_t silent_wrong = 0;  // returned a wrong product
};

// Seeded trials of the entangled code with random inputs (block size
// block_dim x block_dim) and `errors` injected faults per trial.
FaultTrialSummary RunFaultTrials(const Partitioning& parts,
                                 std::size_t num_workers, std::size_t errors,
                                 std::size_t trials, std::uint64_t seed,
                                 FaultMode mode, const PrimeField& field,
                                 std::size_t block_dim = 2);

}  // namespace codedmm

#endif  // CODEDMM_ROBUST_H_
