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

#include "codedmm/sim.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "codedmm/baselines.h"
#include "codedmm/bilinear.h"
#include "codedmm/polynomial_code.h"

namespace codedmm::sim {

namespace {

enum class Stream : std::uint64_t { kInputs = 0, kLatency = 1, kFaults = 2 };

std::mt19937_64 StreamRng(std::uint64_t seed, std::size_t trial, Stream s) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(s)};
  return std::mt19937_64(seq);
}

std::string FormatTime(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::vector<double> SampleLatencies(const LatencyModel& model,
                                    std::size_t num_workers,
                                    std::mt19937_64& rng) {
  std::vector<double> out(num_workers);
  switch (model.kind) {
    case LatencyKind::kShiftedExponential: {
      if (model.rate <= 0.0 || model.shift < 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "need shift >= 0 and rate > 0");
      }
      std::exponential_distribution<double> exp(model.rate);
      for (auto& t : out) t = model.shift + exp(rng);
      break;
    }
    case LatencyKind::kDeterministicStragglers: {
      if (model.stragglers > num_workers) {
        throw Error(ErrorCode::kInvalidArgument, "more stragglers than workers");
      }
      std::fill(out.begin(), out.end(), model.base);
      std::vector<std::size_t> idx(num_workers);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t i = 0; i < model.stragglers; ++i) {
        out[idx[i]] = model.base * model.slowdown;
      }
      break;
    }
  }
  return out;
}

std::unique_ptr<CodingScheme> MakeScheme(const SchemeDescriptor& desc,
                                         std::size_t num_workers,
                                         const PrimeField& field) {
  if (desc.name == "entangled") {
    return std::make_unique<PolynomialCode>(
        EntangledSpec(desc.parts, num_workers, field));
  }
  if (desc.name == "general-poly") {
    return std::make_unique<PolynomialCode>(GeneralPolySpec(
        desc.parts, num_workers, desc.alpha, desc.beta, desc.theta, field));
  }
  if (desc.name == "uncoded") {
    return std::make_unique<UncodedRepetitionScheme>(desc.parts, num_workers);
  }
  if (desc.name == "random-linear") {
    return std::make_unique<RandomLinearScheme>(desc.parts, num_workers, field,
                                                desc.coding_seed);
  }
  if (desc.name == "improved") {
    return std::make_unique<ImprovedEntangledCode>(
        ResolveConstruction(desc.construction, desc.registry_dir), num_workers,
        field);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme '" + desc.name + "'");
}

TrialReport RunTrial(const SimulationConfig& config, const CodingScheme& scheme,
                     const MatrixF& a, const MatrixF& b, std::size_t trial) {
  const std::size_t n_workers = scheme.num_workers();
  if (config.faults > n_workers) {
    throw Error(ErrorCode::kInvalidArgument, "fault budget exceeds N");
  }
  const auto inputs = scheme.encode(a, b);
  auto latency_rng = StreamRng(config.seed, trial, Stream::kLatency);
  const auto latency = SampleLatencies(config.latency, n_workers, latency_rng);

  std::vector<bool> corrupted(n_workers, false);
  auto fault_rng = StreamRng(config.seed, trial, Stream::kFaults);
  if (config.faults > 0) {
    std::vector<std::size_t> idx(n_workers);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), fault_rng);
    for (std::size_t i = 0; i < config.faults; ++i) corrupted[idx[i]] = true;
  }

  std::vector<WorkerOutcome> outcomes;
  outcomes.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    MatrixBlock res = WorkerMultiply(inputs[w].a, inputs[w].b);
    if (corrupted[w]) {
      MatrixBlock noise = MatrixBlock::Random(res.rows(), res.cols(), res.field(), fault_rng);
      while (noise.is_zero()) {
        noise = MatrixBlock::Random(res.rows(), res.cols(), res.field(), fault_rng);
      }
      res += noise;
    }
    outcomes.push_back({w, std::move(res), latency[w], corrupted[w]});
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const WorkerOutcome& x, const WorkerOutcome& y) {
              return x.arrival != y.arrival ? x.arrival < y.arrival
                                            : x.worker < y.worker;
            });

  std::vector<WorkerResult> arrived;
  arrived.reserve(n_workers);
  for (const auto& o : outcomes) arrived.push_back({o.worker, o.result});

  TrialReport report;
  report.trial = trial;
  report.threshold = scheme.recovery_threshold();
  const MatrixF truth = TransposeMultiply(a, b);
  for (std::size_t used = report.threshold; used <= n_workers; ++used) {
    try {
      const MatrixF c = scheme.decode(
          std::span<const WorkerResult>(arrived.data(), used), a.cols(), b.cols());
      report.success = true;
      report.waited = used;
      report.completion_time = outcomes[used - 1].arrival;
      report.oracle_match = (c == truth);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularDecodeSystem) throw;
    }
  }
  if (!report.success) {
    report.waited = n_workers;
    report.completion_time = outcomes.back().arrival;
  }
  return report;
}

ExperimentResult RunExperiment(const SimulationConfig& config) {
  if (config.trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  }
  const auto scheme = MakeScheme(config.scheme, config.num_workers, config.field);
  const auto& parts = scheme->partitioning();
  const std::size_t d = config.block_dim;
  ExperimentResult result;
  result.trials.reserve(config.trials);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    auto rng = StreamRng(config.seed, trial, Stream::kInputs);
    const MatrixF a = MatrixF::Random(parts.p * d, parts.m * d, config.field, rng);
    const MatrixF b = MatrixF::Random(parts.p * d, parts.n * d, config.field, rng);
    result.trials.push_back(RunTrial(config, *scheme, a, b, trial));
  }

  auto& s = result.summary;
  s.scheme = scheme->name();
  s.num_workers = scheme->num_workers();
  s.threshold = scheme->recovery_threshold();
  s.trials = config.trials;
  std::vector<double> times;
  std::size_t successes = 0, matches = 0;
  for (const auto& r : result.trials) {
    times.push_back(r.completion_time);
    if (r.success) {
      ++successes;
      const std::size_t extra = r.waited - r.threshold;
      if (s.extra_waits.size() <= extra) s.extra_waits.resize(extra + 1, 0);
      ++s.extra_waits[extra];
    }
    if (r.oracle_match) ++matches;
  }
  const double count = static_cast<double>(times.size());
  s.mean_completion = std::accumulate(times.begin(), times.end(), 0.0) / count;
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  s.median_completion = times.size() % 2 == 1
                            ? times[mid]
                            : 0.5 * (times[mid - 1] + times[mid]);
  const auto rank95 = static_cast<std::size_t>(std::ceil(0.95 * count));
  s.p95_completion = times[std::max<std::size_t>(rank95, 1) - 1];
  s.success_rate = static_cast<double>(successes) / count;
  s.oracle_match_rate = static_cast<double>(matches) / count;
  return result;
}

void WriteTrialCsv(std::ostream& out, const ExperimentResult& result,
                   bool header) {
  if (header) out << "trial,scheme,N,K,completion_time,waited,success\n";
  for (const auto& r : result.trials) {
    out << r.trial << ',' << result.summary.scheme << ','
        << result.summary.num_workers << ',' << r.threshold << ','
        << FormatTime(r.completion_time) << ',' << r.waited << ','
        << (r.success ? 1 : 0) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out,
                     const std::vector<ExperimentSummary>& summaries) {
  out << "scheme,N,K,trials,mean_completion,median_completion,p95_completion,"
         "success_rate,oracle_match_rate,extra_waits\n";
  for (const auto& s : summaries) {
    std::string extras;
    for (std::size_t j = 0; j < s.extra_waits.size(); ++j) {
      if (j > 0) extras += ';';
      extras += std::to_string(s.extra_waits[j]);
    }
    out << s.scheme << ',' << s.num_workers << ',' << s.threshold << ','
        << s.trials << ',' << FormatTime(s.mean_completion) << ','
        << FormatTime(s.median_completion) << ','
        << FormatTime(s.p95_completion) << ',' << FormatTime(s.success_rate)
        << ',' << FormatTime(s.oracle_match_rate) << ',' << extras << '\n';
  }
}

}  // namespace codedmm::sim
