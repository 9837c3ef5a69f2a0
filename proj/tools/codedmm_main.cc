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

// Command-line front end: subset verification, fault trials, bound tables,
// the straggler simulator and construction validation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "codedmm/bilinear.h"
#include "codedmm/bounds.h"
#include "codedmm/convolution.h"
#include "codedmm/matrix_io.h"
#include "codedmm/polynomial_code.h"
#include "codedmm/robust.h"
#include "codedmm/sim.h"
#include "codedmm/verify.h"

namespace {

using namespace codedmm;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

using Record = std::vector<std::pair<std::string, std::string>>;

void PrintRecord(std::ostream& out, const Record& rec, const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << rec[i].first;
    out << '\n';
    for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << rec[i].second;
    out << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rec) width = std::max(width, k.size());
  for (const auto& [k, v] : rec) {
    out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }
}

void PrintSeed(std::uint64_t seed) { std::cerr << "# seed=" << seed << '\n'; }

std::string Frac(std::size_t a, std::size_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

struct CommonOpts {
  std::uint64_t seed = 0;
  std::uint64_t q = kDefaultModulus;
  std::string format = "table";
};

void AddCommon(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--q", o.q, "prime field modulus")->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
}

// verify ----------------------------------------------------------------------

struct VerifyOpts {
  CommonOpts common;
  std::size_t p = 1, m = 1, n = 1, workers = 0;
  std::string scheme = "entangled";
  std::uint64_t alpha = 1, beta = 1, theta = 1;
  bool exhaustive = false;
  std::size_t samples = 200;
  std::size_t subset = 0;
  std::size_t block = 2;
  std::string a_path, b_path;
};

int RunVerify(const VerifyOpts& o) {
  PrintSeed(o.common.seed);
  const PrimeField field(o.common.q);
  sim::SchemeDescriptor desc;
  desc.name = o.scheme;
  desc.parts = {o.p, o.m, o.n};
  desc.alpha = o.alpha;
  desc.beta = o.beta;
  desc.theta = o.theta;
  desc.coding_seed = o.common.seed;
  const auto scheme = sim::MakeScheme(desc, o.workers, field);

  std::mt19937_64 rng(o.common.seed);
  MatrixF a = o.a_path.empty()
                  ? MatrixF::Random(o.p * o.block, o.m * o.block, field, rng)
                  : ReadMatrixFile(o.a_path);
  MatrixF b = o.b_path.empty()
                  ? MatrixF::Random(o.p * o.block, o.n * o.block, field, rng)
                  : ReadMatrixFile(o.b_path);
  const std::size_t k = o.subset ? o.subset : scheme->recovery_threshold();
  const auto check =
      VerifySubsets(*scheme, a, b, k, o.exhaustive ? 0 : o.samples, o.common.seed);
  PrintRecord(std::cout,
              {{"scheme", scheme->name()},
               {"N", std::to_string(scheme->num_workers())},
               {"K", std::to_string(scheme->recovery_threshold())},
               {"subset_size", std::to_string(k)},
               {"mode", o.exhaustive ? "exhaustive" : "sampled"},
               {"decoded", Frac(check.decoded, check.subsets)},
               {"wrong", std::to_string(check.wrong)},
               {"failed", std::to_string(check.failed)}},
              o.common.format);
  return check.decoded == check.subsets ? kExitOk : kExitFailed;
}

// verify-improved --------------------------------------------------------------

struct VerifyImprovedOpts {
  CommonOpts common;
  std::string construction = "strassen";
  std::size_t workers = 0;
  bool exhaustive = false;
  std::size_t samples = 200;
  std::size_t subset = 0;
  std::size_t block = 1;
};

int RunVerifyImproved(const VerifyImprovedOpts& o) {
  PrintSeed(o.common.seed);
  const PrimeField field(o.common.q);
  auto bc = ResolveConstruction(o.construction, CODEDMM_REGISTRY_DIR);
  const auto valid = ValidateConstruction(bc, field);
  if (!valid.ok) {
    std::cerr << "construction " << bc.name() << " fails the identity check\n";
    return kExitFailed;
  }
  const ImprovedEntangledCode code(bc, o.workers, field);
  std::mt19937_64 rng(o.common.seed);
  const MatrixF a = MatrixF::Random(bc.p() * o.block, bc.m() * o.block, field, rng);
  const MatrixF b = MatrixF::Random(bc.p() * o.block, bc.n() * o.block, field, rng);
  const std::size_t k = o.subset ? o.subset : code.recovery_threshold();
  const auto check =
      VerifySubsets(code, a, b, k, o.exhaustive ? 0 : o.samples, o.common.seed);
  PrintRecord(std::cout,
              {{"construction", bc.name()},
               {"shape", std::to_string(bc.p()) + "," + std::to_string(bc.m()) +
                             "," + std::to_string(bc.n())},
               {"R", std::to_string(bc.rank())},
               {"N", std::to_string(code.num_workers())},
               {"K", std::to_string(code.recovery_threshold())},
               {"subset_size", std::to_string(k)},
               {"mode", o.exhaustive ? "exhaustive" : "sampled"},
               {"decoded", Frac(check.decoded, check.subsets)},
               {"wrong", std::to_string(check.wrong)},
               {"failed", std::to_string(check.failed)}},
              o.common.format);
  return check.decoded == check.subsets ? kExitOk : kExitFailed;
}

// conv ------------------------------------------------------------------------

struct ConvOpts {
  CommonOpts common;
  std::size_t m = 1, n = 1, workers = 0, len = 0;
};

int RunConv(const ConvOpts& o) {
  PrintSeed(o.common.seed);
  const PrimeField field(o.common.q);
  const ConvolutionCode code(o.m, o.n, o.workers, field);
  std::mt19937_64 rng(o.common.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  const std::size_t len_a = o.len ? o.len : o.m;
  const std::size_t len_b = o.len ? o.len : o.n;
  FieldVector a, b;
  for (std::size_t i = 0; i < len_a; ++i) a.push_back(field.element(dist(rng)));
  for (std::size_t i = 0; i < len_b; ++i) b.push_back(field.element(dist(rng)));
  const FieldVector truth = Convolve(a, b);
  const auto inputs = code.encode_all(a, b);
  std::vector<ConvWorkerResult> results;
  for (std::size_t w = 0; w < inputs.size(); ++w) {
    results.push_back({w, ConvWorker(inputs[w].a, inputs[w].b)});
  }
  std::size_t subsets = 0, decoded = 0;
  ForEachCombination(code.num_workers(), code.recovery_threshold(),
                     [&](std::span<const std::size_t> subset) {
                       std::vector<ConvWorkerResult> chosen;
                       for (std::size_t w : subset) chosen.push_back(results[w]);
                       ++subsets;
                       if (code.decode(chosen, truth.size()) == truth) ++decoded;
                       return subsets < 100000;
                     });
  PrintRecord(std::cout,
              {{"m", std::to_string(o.m)},
               {"n", std::to_string(o.n)},
               {"N", std::to_string(o.workers)},
               {"K", std::to_string(code.recovery_threshold())},
               {"len_a", std::to_string(len_a)},
               {"len_b", std::to_string(len_b)},
               {"decoded", Frac(decoded, subsets)}},
              o.common.format);
  return decoded == subsets ? kExitOk : kExitFailed;
}

// fault -----------------------------------------------------------------------

struct FaultOpts {
  CommonOpts common;
  std::size_t p = 1, m = 1, n = 1, workers = 0, errors = 0, trials = 100;
  std::string mode = "correct";
};

int RunFault(const FaultOpts& o) {
  PrintSeed(o.common.seed);
  const PrimeField field(o.common.q);
  const Partitioning parts{o.p, o.m, o.n};
  const PolynomialCode code(EntangledSpec(parts, o.workers, field));
  const FaultMode mode = o.mode == "detect" ? FaultMode::kDetect : FaultMode::kCorrect;
  const auto s = RunFaultTrials(parts, o.workers, o.errors, o.trials, o.common.seed,
                                mode, field);
  const std::size_t budget = mode == FaultMode::kDetect ? MaxDetectableErrors(code)
                                                        : MaxCorrectableErrors(code);
  PrintRecord(std::cout,
              {{"mode", o.mode},
               {"N", std::to_string(o.workers)},
               {"K", std::to_string(code.recovery_threshold())},
               {"errors", std::to_string(o.errors)},
               {"budget", std::to_string(budget)},
               {"trials", std::to_string(s.trials)},
               {"exact", std::to_string(s.exact)},
               {"flagged", std::to_string(s.flagged)},
               {"silent_wrong", std::to_string(s.silent_wrong)}},
              o.common.format);
  if (s.silent_wrong > 0) return kExitFailed;
  if (mode == FaultMode::kCorrect && o.errors <= budget && s.exact != s.trials) {
    return kExitFailed;
  }
  return kExitOk;
}

// bounds ----------------------------------------------------------------------

struct BoundsOpts {
  std::size_t p = 3, m = 3, n = 1, n_max = 30;
  bool fig2 = false;
  std::string out;
};

int RunBounds(const BoundsOpts& o) {
  std::ostringstream csv;
  if (o.fig2) {
    bounds::WriteThresholdCsv(csv, bounds::ComparisonTable(o.n_max));
  } else {
    csv << "N,K_uncoded,K_random_linear,K_short_mds,K_entangled,"
           "K_converse_linear,K_converse_nonlinear\n";
    for (const auto& r : bounds::ThresholdTable(o.p, o.m, o.n, 1, o.n_max)) {
      csv << r.num_workers << ',' << r.uncoded << ',' << r.random_linear << ','
          << r.short_mds << ',' << r.entangled << ','
          << bounds::ConverseLinear(o.p, o.m, o.n, r.num_workers) << ','
          << bounds::ConverseNonlinear(o.p, o.m, o.n) << '\n';
    }
  }
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + o.out);
    f << csv.str();
  }
  return kExitOk;
}

// simulate --------------------------------------------------------------------

struct SimulateOpts {
  CommonOpts common;
  std::vector<std::string> schemes{"entangled"};
  std::size_t p = 1, m = 1, n = 1, workers = 0;
  std::string latency = "shifted-exp";
  double shift = 1.0, rate = 1.0, slowdown = 10.0;
  std::size_t stragglers = 0, trials = 100, faults = 0, block = 1;
  std::string construction = "strassen";
  bool summary = false;
  std::string out;
};

int RunSimulate(const SimulateOpts& o) {
  PrintSeed(o.common.seed);
  std::ostringstream csv;
  std::vector<sim::ExperimentSummary> summaries;
  bool header = true;
  bool all_ok = true;
  for (const auto& name : o.schemes) {
    sim::SimulationConfig cfg;
    cfg.scheme.name = name;
    cfg.scheme.parts = {o.p, o.m, o.n};
    cfg.scheme.construction = o.construction;
    cfg.scheme.registry_dir = CODEDMM_REGISTRY_DIR;
    cfg.scheme.coding_seed = o.common.seed;
    cfg.num_workers = o.workers;
    cfg.latency.kind = o.latency == "stragglers"
                           ? sim::LatencyKind::kDeterministicStragglers
                           : sim::LatencyKind::kShiftedExponential;
    cfg.latency.shift = o.shift;
    cfg.latency.rate = o.rate;
    cfg.latency.stragglers = o.stragglers;
    cfg.latency.slowdown = o.slowdown;
    cfg.faults = o.faults;
    cfg.trials = o.trials;
    cfg.seed = o.common.seed;
    cfg.block_dim = o.block;
    cfg.field = PrimeField(o.common.q);
    const auto result = sim::RunExperiment(cfg);
    if (o.faults == 0 && result.summary.oracle_match_rate < 1.0) all_ok = false;
    if (!o.summary) sim::WriteTrialCsv(csv, result, header);
    header = false;
    summaries.push_back(result.summary);
  }
  if (o.summary) sim::WriteSummaryCsv(csv, summaries);
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + o.out);
    f << csv.str();
  }
  return all_ok ? kExitOk : kExitFailed;
}

// validate-construction / show-construction -----------------------------------

int RunValidate(const std::string& path, std::uint64_t q) {
  const auto bc = ResolveConstruction(path, CODEDMM_REGISTRY_DIR);
  const auto res = ValidateConstruction(bc, PrimeField(q));
  std::cout << bc.name() << " (" << bc.p() << "," << bc.m() << "," << bc.n()
            << ") rank " << bc.rank() << ": ";
  if (res.ok) {
    std::cout << "valid\n";
    return kExitOk;
  }
  const auto& v = *res.violation;
  std::cout << "INVALID at A=e(" << v.a_row << "," << v.a_col << ") B=e("
            << v.b_row << "," << v.b_col << ") C(" << v.out_row << ","
            << v.out_col << ")\n";
  return kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coded distributed matrix multiplication toolkit"};
  app.require_subcommand(1);

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify", "Check decoding from worker subsets");
  AddCommon(v, verify.common);
  v->add_option("--p", verify.p)->required();
  v->add_option("--m", verify.m)->required();
  v->add_option("--n", verify.n)->required();
  v->add_option("--N", verify.workers)->required();
  v->add_option("--scheme", verify.scheme)
      ->check(CLI::IsMember({"entangled", "general-poly", "uncoded", "random-linear"}))
      ->capture_default_str();
  v->add_option("--alpha", verify.alpha);
  v->add_option("--beta", verify.beta);
  v->add_option("--theta", verify.theta);
  v->add_flag("--exhaustive", verify.exhaustive, "check every subset");
  v->add_option("--samples", verify.samples, "random subsets when not exhaustive");
  v->add_option("--subset", verify.subset, "subset size (default: threshold)");
  v->add_option("--block", verify.block, "block dimension of random inputs");
  v->add_option("--A", verify.a_path, "matrix fixture for A");
  v->add_option("--B", verify.b_path, "matrix fixture for B");

  VerifyImprovedOpts vimp;
  auto* vi = app.add_subcommand("verify-improved",
                                "Check the bilinear-construction code");
  AddCommon(vi, vimp.common);
  vi->add_option("--construction", vimp.construction)->capture_default_str();
  vi->add_option("--N", vimp.workers)->required();
  vi->add_flag("--exhaustive", vimp.exhaustive);
  vi->add_option("--samples", vimp.samples);
  vi->add_option("--subset", vimp.subset);
  vi->add_option("--block", vimp.block);

  ConvOpts conv;
  auto* c = app.add_subcommand("conv", "Coded convolution round trip");
  AddCommon(c, conv.common);
  c->add_option("--m", conv.m)->required();
  c->add_option("--n", conv.n)->required();
  c->add_option("--N", conv.workers)->required();
  c->add_option("--len", conv.len, "length of each input vector");

  FaultOpts fault;
  auto* f = app.add_subcommand("fault", "Fault detection / correction trials");
  AddCommon(f, fault.common);
  f->add_option("--p", fault.p)->required();
  f->add_option("--m", fault.m)->required();
  f->add_option("--n", fault.n)->required();
  f->add_option("--N", fault.workers)->required();
  f->add_option("--errors", fault.errors)->required();
  f->add_option("--trials", fault.trials)->capture_default_str();
  f->add_option("--mode", fault.mode)
      ->check(CLI::IsMember({"detect", "correct"}))
      ->capture_default_str();

  BoundsOpts bnd;
  auto* b = app.add_subcommand("bounds", "Recovery threshold tables (CSV)");
  b->add_option("--p", bnd.p)->capture_default_str();
  b->add_option("--m", bnd.m)->capture_default_str();
  b->add_option("--n", bnd.n)->capture_default_str();
  b->add_option("--Nmax", bnd.n_max)->capture_default_str();
  b->add_flag("--fig2", bnd.fig2, "p = m = 3, n = 1 comparison");
  b->add_option("--out", bnd.out, "write CSV here instead of stdout");

  SimulateOpts simo;
  auto* s = app.add_subcommand("simulate", "Master-worker straggler simulation");
  AddCommon(s, simo.common);
  s->add_option("--scheme", simo.schemes, "one or more scheme names")->delimiter(',');
  s->add_option("--p", simo.p);
  s->add_option("--m", simo.m);
  s->add_option("--n", simo.n);
  s->add_option("--N", simo.workers)->required();
  s->add_option("--latency", simo.latency)
      ->check(CLI::IsMember({"shifted-exp", "stragglers"}))
      ->capture_default_str();
  s->add_option("--shift", simo.shift);
  s->add_option("--rate", simo.rate);
  s->add_option("--stragglers", simo.stragglers);
  s->add_option("--slowdown", simo.slowdown);
  s->add_option("--trials", simo.trials)->capture_default_str();
  s->add_option("--faults", simo.faults);
  s->add_option("--block", simo.block);
  s->add_option("--construction", simo.construction);
  s->add_flag("--summary", simo.summary, "one aggregate row per scheme");
  s->add_option("--out", simo.out);

  std::string construction_path;
  std::uint64_t validate_q = kDefaultModulus;
  auto* vc = app.add_subcommand("validate-construction",
                                "Check a bilinear construction's identity");
  vc->add_option("construction", construction_path, "JSON path or name")->required();
  vc->add_option("--q", validate_q)->capture_default_str();

  std::string show_name;
  auto* sc = app.add_subcommand("show-construction", "Print a construction as JSON");
  sc->add_option("construction", show_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (v->parsed()) return RunVerify(verify);
    if (vi->parsed()) return RunVerifyImproved(vimp);
    if (c->parsed()) return RunConv(conv);
    if (f->parsed()) return RunFault(fault);
    if (b->parsed()) return RunBounds(bnd);
    if (s->parsed()) return RunSimulate(simo);
    if (vc->parsed()) return RunValidate(construction_path, validate_q);
    if (sc->parsed()) {
      std::cout << ConstructionToJson(ResolveConstruction(show_name, CODEDMM_REGISTRY_DIR))
                << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
