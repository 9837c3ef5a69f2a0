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

#include "codedmm/robust.h"

#include <algorithm>
#include <set>
#include <string>

#include "codedmm/linalg.h"

namespace codedmm {

namespace {

std::vector<const WorkerResult*> SortedByWorker(
    const PolynomialCode& code, std::span<const WorkerResult> results) {
  if (results.size() != code.num_workers()) {
    throw Error(ErrorCode::kInsufficientResults,
                "fault-tolerant decoding needs all N results");
  }
  std::vector<const WorkerResult*> out(code.num_workers(), nullptr);
  for (const auto& r : results) {
    if (r.worker >= out.size() || out[r.worker] != nullptr) {
      throw Error(ErrorCode::kInvalidArgument, "results must cover each worker once");
    }
    out[r.worker] = &r;
  }
  return out;
}

// Coefficients of h fitted to the given workers (first K of them).
std::vector<MatrixBlock> Fit(const PolynomialCode& code,
                             const std::vector<const WorkerResult*>& by_worker,
                             std::span<const std::size_t> workers) {
  std::vector<WorkerResult> chosen;
  chosen.reserve(code.recovery_threshold());
  for (std::size_t i = 0; i < code.recovery_threshold(); ++i) {
    chosen.push_back(*by_worker[workers[i]]);
  }
  return code.interpolate(chosen);
}

}  // namespace

HammingRelations ComputeHammingRelations(std::size_t num_workers,
                                         std::size_t distance) {
  if (distance < 1 || distance > num_workers) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= d <= N");
  }
  return {num_workers - distance + 1, distance - 1, (distance - 1) / 2};
}

std::size_t MaxDetectableErrors(const PolynomialCode& code) {
  return code.num_workers() - code.recovery_threshold();
}

std::size_t MaxCorrectableErrors(const PolynomialCode& code) {
  return MaxDetectableErrors(code) / 2;
}

DetectResult DetectErrors(const PolynomialCode& code,
                          std::span<const WorkerResult> results,
                          std::size_t out_rows, std::size_t out_cols) {
  const auto by_worker = SortedByWorker(code, results);
  std::vector<std::size_t> order(code.num_workers());
  for (std::size_t w = 0; w < order.size(); ++w) order[w] = w;
  const auto coeffs = Fit(code, by_worker, order);
  for (std::size_t w = code.recovery_threshold(); w < code.num_workers(); ++w) {
    if (!(EvaluateBlockPolynomial(coeffs, code.point(w)) == by_worker[w]->block)) {
      return {DetectStatus::kErrorDetected, std::nullopt};
    }
  }
  return {DetectStatus::kClean, code.extract(coeffs, out_rows, out_cols)};
}

std::optional<FieldPolynomial> BerlekampWelch(
    const PrimeField& f, std::span<const std::uint64_t> xs,
    std::span<const std::uint64_t> ys, std::size_t message_len,
    std::size_t max_errors) {
  const std::size_t points = xs.size();
  if (ys.size() != points || message_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad Berlekamp-Welch input");
  }
  if (points < message_len + 2 * max_errors) return std::nullopt;
  const std::size_t e = max_errors;
  // Unknowns: Q_0..Q_{k+e-1}, E_0..E_{e-1}; E is monic of degree e.
  // Q(x_i) - y_i E_lower(x_i) = y_i x_i^e.
  const std::size_t q_len = message_len + e;
  ScalarMatrix system(points, std::vector<std::uint64_t>(q_len + e, 0));
  std::vector<std::uint64_t> rhs(points);
  for (std::size_t i = 0; i < points; ++i) {
    std::uint64_t pw = 1;
    for (std::size_t d = 0; d < q_len; ++d) {
      system[i][d] = pw;
      if (d < e) system[i][q_len + d] = f.neg(f.mul(ys[i], pw));
      pw = f.mul(pw, xs[i]);
    }
    rhs[i] = f.mul(ys[i], f.pow(xs[i], e));
  }
  const auto sol = Solve(f, std::move(system), std::move(rhs));
  if (!sol) return std::nullopt;
  std::vector<std::uint64_t> q(sol->begin(), sol->begin() + q_len);
  std::vector<std::uint64_t> el(sol->begin() + q_len, sol->end());
  el.push_back(1);
  auto [quot, rem] = DivMod(FieldPolynomial(f, std::move(q)),
                            FieldPolynomial(f, std::move(el)));
  if (!rem.is_zero()) return std::nullopt;
  if (quot.degree().value_or(0) >= message_len) return std::nullopt;
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < points; ++i) {
    if (quot.evaluate_raw(xs[i]) != ys[i]) ++disagreements;
  }
  if (disagreements > max_errors) return std::nullopt;
  return quot;
}

CorrectionResult CorrectErrors(const PolynomialCode& code,
                               std::span<const WorkerResult> results,
                               std::size_t out_rows, std::size_t out_cols) {
  const auto by_worker = SortedByWorker(code, results);
  const PrimeField& f = code.spec().field;
  const std::size_t n_workers = code.num_workers();
  const std::size_t k = code.recovery_threshold();
  const std::size_t budget = MaxCorrectableErrors(code);
  const std::size_t entries = by_worker.front()->block.size();
  for (const auto* r : by_worker) {
    if (r->block.size() != entries || !r->block.same_shape(by_worker.front()->block)) {
      throw Error(ErrorCode::kBlockShapeMismatch, "result blocks differ in shape");
    }
  }

  std::set<std::size_t> located;
  std::set<std::size_t> used_pilots;
  std::size_t pilot = 0;
  while (true) {
    if (!used_pilots.insert(pilot).second) {
      throw Error(ErrorCode::kTooManyErrors, "no consistent error pattern");
    }
    std::vector<std::size_t> active;
    std::vector<std::uint64_t> xs, ys;
    for (std::size_t w = 0; w < n_workers; ++w) {
      if (located.contains(w)) continue;
      active.push_back(w);
      xs.push_back(code.point(w));
      ys.push_back(by_worker[w]->block.data()[pilot]);
    }
    const auto poly = BerlekampWelch(f, xs, ys, k, budget - located.size());
    if (!poly) {
      throw Error(ErrorCode::kTooManyErrors,
                  "more than " + std::to_string(budget) + " faulty workers");
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (poly->evaluate_raw(xs[i]) != ys[i]) located.insert(active[i]);
    }
    if (located.size() > budget) {
      throw Error(ErrorCode::kTooManyErrors, "error locator exceeds budget");
    }

    std::vector<std::size_t> trusted;
    for (std::size_t w = 0; w < n_workers; ++w) {
      if (!located.contains(w)) trusted.push_back(w);
    }
    const auto coeffs = Fit(code, by_worker, trusted);
    std::optional<std::size_t> mismatch;
    for (std::size_t i = k; i < trusted.size() && !mismatch; ++i) {
      const MatrixBlock expect = EvaluateBlockPolynomial(coeffs, code.point(trusted[i]));
      const auto got = by_worker[trusted[i]]->block.data();
      for (std::size_t e = 0; e < entries; ++e) {
        if (expect.data()[e] != got[e]) {
          mismatch = e;
          break;
        }
      }
    }
    if (!mismatch) {
      return {code.extract(coeffs, out_rows, out_cols),
              std::vector<std::size_t>(located.begin(), located.end())};
    }
    pilot = *mismatch;
  }
}

std::vector<std::size_t> InjectFaults(std::vector<WorkerResult>& results,
                                      std::size_t errors,
                                      std::mt19937_64& rng) {
  if (errors > results.size()) {
    throw Error(ErrorCode::kInvalidArgument, "more faults than workers");
  }
  std::vector<std::size_t> idx(results.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(errors);
  std::vector<std::size_t> corrupted;
  for (std::size_t i : idx) {
    auto& blk = results[i].block;
    MatrixBlock noise = MatrixBlock::Random(blk.rows(), blk.cols(), blk.field(), rng);
    while (noise.is_zero()) {
      noise = MatrixBlock::Random(blk.rows(), blk.cols(), blk.field(), rng);
    }
    blk += noise;
    corrupted.push_back(results[i].worker);
  }
  std::sort(corrupted.begin(), corrupted.end());
  return corrupted;
}

FaultTrialSummary RunFaultTrials(const Partitioning& parts,
                                 std::size_t num_workers, std::size_t errors,
                                 std::size_t trials, std::uint64_t seed,
                                 FaultMode mode, const PrimeField& field,
                                 std::size_t block_dim) {
  const PolynomialCode code(EntangledSpec(parts, num_workers, field));
  const std::size_t s = parts.p * block_dim;
  const std::size_t r = parts.m * block_dim;
  const std::size_t t = parts.n * block_dim;
  FaultTrialSummary summary;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + trial);
    const MatrixF a = MatrixF::Random(s, r, field, rng);
    const MatrixF b = MatrixF::Random(s, t, field, rng);
    const MatrixF truth = TransposeMultiply(a, b);
    auto results = ComputeAll(code.encode(a, b));
    InjectFaults(results, errors, rng);
    ++summary.trials;
    std::optional<MatrixF> out;
    if (mode == FaultMode::kDetect) {
      auto res = DetectErrors(code, results, r, t);
      if (res.status == DetectStatus::kClean) out = std::move(res.product);
    } else {
      try {
        out = CorrectErrors(code, results, r, t).product;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kTooManyErrors) throw;
      }
    }
    if (!out) {
      ++summary.flagged;
    } else if (*out == truth) {
      ++summary.exact;
    } else {
      ++summary.silent_wrong;
    }
  }
  return summary;
}

}  // namespace codedmm
