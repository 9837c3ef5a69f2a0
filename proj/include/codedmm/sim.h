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

#ifndef CODEDMM_SIM_H_
#define CODEDMM_SIM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "codedmm/field.h"
#include "codedmm/matrix.h"
#include "codedmm/scheme.h"

namespace codedmm::sim {

enum class LatencyKind { kShiftedExponential, kDeterministicStragglers };

struct LatencyModel {
  LatencyKind kind = LatencyKind::kShiftedExponential;
  // Shifted exponential: shift + Exp(rate), i.i.d. per worker.
  double shift = 1.0;
  double rate = 1.0;
  // Deterministic: every worker takes `base`, except `stragglers` workers
  // (chosen uniformly) which take base * slowdown.
  std::size_t stragglers = 0;
  double slowdown = 10.0;
  double base = 1.0;
};

// Simulated finishing times, one per worker.
std::vector<double> SampleLatencies(const LatencyModel& model,
                                    std::size_t num_workers,
                                    std::mt19937_64& rng);

struct SchemeDescriptor {
  // entangled | general-poly | uncoded | random-linear | improved
  std::string name = "entangled";
  Partitioning parts{1, 1, 1};
  // general-poly exponents.
  std::uint64_t alpha = 1, beta = 1, theta = 1;
  // improved: construction name or path.
  std::string construction = "strassen";
  std::string registry_dir;
  // random-linear coefficient seed.
  std::uint64_t coding_seed = 0;
};

std::unique_ptr<CodingScheme> MakeScheme(const SchemeDescriptor& desc,
                                         std::size_t num_workers,
                                         const PrimeField& field);

struct SimulationConfig {
  SchemeDescriptor scheme;
  std::size_t num_workers = 1;
  LatencyModel latency;
  std::size_t faults = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  // Inputs are (p*d) x (m*d) and (p*d) x (n*d) with d = block_dim.
  std::size_t block_dim = 1;
  PrimeField field;
};

struct WorkerOutcome {
  std::size_t worker;
  MatrixBlock result;
  double arrival;
  bool corrupted;  // never shown to the decoder
};

struct TrialReport {
  std::size_t trial = 0;
  bool success = false;
  double completion_time = 0.0;  // arrival of the last result used
  std::size_t waited = 0;        // results handed to the decoder
  std::size_t threshold = 0;
  bool oracle_match = false;
};

// Encodes, samples latencies, delivers results in arrival order (ties by
// worker index) and decodes from the first K; on kSingularDecodeSystem the
// decoder is retried with one more result. Randomness derives from
// (config.seed, trial) only, and latencies only from N, so schemes run with
// the same seed see identical latency draws.
TrialReport RunTrial(const SimulationConfig& config, const CodingScheme& scheme,
                     const MatrixF& a, const MatrixF& b, std::size_t trial);

struct ExperimentSummary {
  std::string scheme;
  std::size_t num_workers = 0;
  std::size_t threshold = 0;
  std::size_t trials = 0;
  double mean_completion = 0.0;
  double median_completion = 0.0;
  double p95_completion = 0.0;
  double success_rate = 0.0;
  double oracle_match_rate = 0.0;
  // extra_waits[j] = number of successful trials that needed K + j results.
  std::vector<std::size_t> extra_waits;
};

struct ExperimentResult {
  std::vector<TrialReport> trials;
  ExperimentSummary summary;
};

ExperimentResult RunExperiment(const SimulationConfig& config);

// Header: trial,scheme,N,K,completion_time,waited,success
void WriteTrialCsv(std::ostream& out, const ExperimentResult& result,
                   bool header = true);
void WriteSummaryCsv(std::ostream& out,
                     const std::vector<ExperimentSummary>& summaries);

}  // namespace codedmm::sim

#endif  // CODEDMM_SIM_H_
