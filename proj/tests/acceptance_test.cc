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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "codedmm/bilinear.h"
#include "codedmm/blocks.h"
#include "codedmm/bounds.h"
#include "codedmm/convolution.h"
#include "codedmm/polynomial.h"
#include "codedmm/polynomial_code.h"
#include "codedmm/robust.h"
#include "codedmm/sim.h"
#include "codedmm/verify.h"
#include "oracles.h"

namespace codedmm {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<WorkerResult> Pick(const std::vector<WorkerResult>& all,
                               std::span<const std::size_t> idx) {
  std::vector<WorkerResult> out;
  for (std::size_t i : idx) out.push_back(all[i]);
  return out;
}

// Decodes every subset of the given size and compares with the naive oracle.
std::pair<std::size_t, std::size_t> AllSubsets(const CodingScheme& scheme,
                                               const MatrixF& a, const MatrixF& b,
                                               std::size_t size) {
  const auto results = ComputeAll(scheme.encode(a, b));
  const MatrixF expect = oracle::NaiveTransposeProduct(a, b);
  std::size_t ok = 0, total = 0;
  ForEachCombination(scheme.num_workers(), size, [&](std::span<const std::size_t> s) {
    ++total;
    try {
      ok += scheme.decode(Pick(results, s), a.cols(), b.cols()) == expect;
    } catch (const Error&) {
    }
    return true;
  });
  return {ok, total};
}

std::string RunCli(const std::string& args, int* status) {
  const std::string cmd = std::string(CODEDMM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome SmallFieldExample() {
  Outcome o;
  const PrimeField f7(7);
  const MatrixF a(2, 1, f7, {1, 2});
  const MatrixF b(2, 1, f7, {3, 4});
  const PolynomialCode code(EntangledSpec({2, 1, 1}, 5, f7));
  o.require(code.recovery_threshold() == 3, "K != 3");
  const MatrixF oracle_c = oracle::NaiveTransposeProduct(a, b);
  o.require(oracle_c.get(0, 0) == 4, "oracle C != 4");
  const auto results = ComputeAll(code.encode(a, b));
  std::size_t good = 0, total = 0;
  ForEachCombination(5, 3, [&](std::span<const std::size_t> s) {
    ++total;
    good += code.decode(Pick(results, s), 1, 1) == oracle_c;
    return true;
  });
  o.require(total == 10 && good == 10,
            std::to_string(good) + "/" + std::to_string(total) + " subsets decoded");
  if (o.ok) o.detail = "10/10 subsets decode C=[4]";
  return o;
}

Outcome EntangledExhaustive(std::size_t* k_for_hamming) {
  Outcome o;
  const PrimeField f(65537);
  std::mt19937_64 rng(2024);
  std::size_t configs = 0, subsets = 0;
  for (std::size_t p = 1; p <= 8; ++p) {
    for (std::size_t m = 1; p * m <= 8; ++m) {
      for (std::size_t n = 1; p * m * n <= 8; ++n) {
        const std::size_t nw = p * m * n + p + 2;
        const PolynomialCode code(EntangledSpec({p, m, n}, nw, f));
        const std::size_t k = p * m * n + p - 1;
        o.require(code.recovery_threshold() == k, "threshold mismatch");
        o.require(ComputeHammingRelations(nw, nw - k + 1).recovery_threshold ==
                      code.recovery_threshold(),
                  "Hamming K mismatch");
        const MatrixF a = MatrixF::Random(2 * p, 2 * m, f, rng);
        const MatrixF b = MatrixF::Random(2 * p, 2 * n, f, rng);
        const auto [good, total] = AllSubsets(code, a, b, k);
        o.require(good == total && total == Binomial(nw, k),
                  "(p,m,n)=(" + std::to_string(p) + "," + std::to_string(m) + "," +
                      std::to_string(n) + ") " + std::to_string(good) + "/" +
                      std::to_string(total));
        ++configs;
        subsets += total;
        if (p == 2 && m == 2 && n == 1) *k_for_hamming = code.recovery_threshold();
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(configs) + " shapes, " + std::to_string(subsets) +
               " subsets all exact";
  }
  return o;
}

Outcome StrassenImproved() {
  Outcome o;
  const PrimeField f(65537);
  std::mt19937_64 rng(3);
  const auto bc = ResolveConstruction("strassen", CODEDMM_REGISTRY_DIR);
  o.require(bc.rank() == 7 && ValidateConstruction(bc).ok, "strassen invalid");
  const ImprovedEntangledCode code(bc, 15, f);
  o.require(code.recovery_threshold() == 13, "K != 13");
  const MatrixF a = MatrixF::Random(4, 4, f, rng);
  const MatrixF b = MatrixF::Random(4, 4, f, rng);
  const auto [good, total] = AllSubsets(code, a, b, 13);
  o.require(good == 105 && total == 105,
            std::to_string(good) + "/" + std::to_string(total) + " subsets");
  const auto t0 = std::chrono::steady_clock::now();
  const auto sq = TensorPower(bc, 2);
  const bool sq_ok = sq.rank() == 49 && ValidateConstruction(sq).ok;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(sq_ok, "strassen^2 fails validation");
  o.require(secs < 30.0, "strassen^2 validation too slow");
  if (o.ok) o.detail = "105/105 subsets exact; strassen^2 rank 49 valid";
  return o;
}

Outcome ElementwiseCode() {
  Outcome o;
  const PrimeField f(65537);
  std::mt19937_64 rng(4);
  const ElementwiseProductCode code(4, 10, f);
  o.require(code.recovery_threshold() == 7, "K != 7");
  std::vector<MatrixBlock> a, b;
  for (int i = 0; i < 4; ++i) {
    a.push_back(MatrixBlock::Random(1, 1, f, rng));
    b.push_back(MatrixBlock::Random(1, 1, f, rng));
  }
  std::vector<WorkerResult> results;
  for (std::size_t w = 0; w < 10; ++w) {
    results.push_back({w, TransposeMultiply(code.encode(a, w), code.encode(b, w))});
  }
  std::size_t good = 0;
  ForEachCombination(10, 7, [&](std::span<const std::size_t> s) {
    const auto prods = code.decode(Pick(results, s));
    bool all = true;
    for (int i = 0; i < 4; ++i) all &= prods[i] == oracle::NaiveTransposeProduct(a[i], b[i]);
    good += all;
    return true;
  });
  o.require(good == 120, std::to_string(good) + "/120 subsets at size 7");

  // Size 6: a nonzero input pair whose results vanish on workers 4..9
  // (indistinguishable from zero input) while its products do not.
  const auto poly = [](std::int64_t x, std::int64_t r0) {
    return static_cast<std::uint64_t>(((x - r0) * (x - r0 - 1) * (x - r0 - 2)) % 65537 + 65537) %
           65537;
  };
  std::vector<MatrixBlock> za, zb;
  for (std::int64_t x = 0; x < 4; ++x) {
    za.push_back(MatrixBlock(1, 1, f, {poly(x, 4)}));
    zb.push_back(MatrixBlock(1, 1, f, {poly(x, 7)}));
  }
  bool ambiguous = true;
  for (std::size_t w = 4; w < 10; ++w) {
    ambiguous &= TransposeMultiply(code.encode(za, w), code.encode(zb, w)).is_zero();
  }
  for (std::size_t i = 0; i < 4; ++i) ambiguous &= !TransposeMultiply(za[i], zb[i]).is_zero();
  o.require(ambiguous, "size-6 ambiguity witness failed");
  // Every size-6 subset leaves the 7 unknown coefficients underdetermined.
  std::size_t rejected = 0;
  ForEachCombination(10, 6, [&](std::span<const std::size_t> s) {
    try {
      code.decode(Pick(results, s));
    } catch (const Error& e) {
      rejected += e.code() == ErrorCode::kInsufficientResults;
    }
    return true;
  });
  o.require(rejected == 210, "decoder accepted a size-6 subset");
  if (o.ok) o.detail = "120/120 at size 7; size 6 underdetermined (witness + 210 rejections)";
  return o;
}

Outcome Convolution() {
  Outcome o;
  const PrimeField f(257);
  std::mt19937_64 rng(5);
  const ConvolutionCode code(3, 2, 6, f);
  std::uniform_int_distribution<std::uint64_t> dist(0, 256);
  FieldVector a, b;
  for (int i = 0; i < 9; ++i) a.push_back(f.element(dist(rng)));
  for (int i = 0; i < 6; ++i) b.push_back(f.element(dist(rng)));
  o.require(code.block_length(9, 6) == 3, "s != 3");
  const auto inputs = code.encode_all(a, b);
  std::vector<ConvWorkerResult> results;
  for (std::size_t w = 0; w < 6; ++w) {
    results.push_back({w, ConvWorker(inputs[w].a, inputs[w].b)});
  }
  const auto expect = oracle::DirectConvolution(oracle::Raw(a), oracle::Raw(b), 257);
  std::size_t good = 0, total = 0;
  ForEachCombination(6, 4, [&](std::span<const std::size_t> s) {
    std::vector<ConvWorkerResult> chosen;
    for (auto i : s) chosen.push_back(results[i]);
    ++total;
    good += oracle::Raw(code.decode(chosen, expect.size())) == expect;
    return true;
  });
  o.require(good == 15 && total == 15, std::to_string(good) + "/" + std::to_string(total));
  if (o.ok) o.detail = "15/15 subsets match direct convolution";
  return o;
}

Outcome FaultTolerance(std::size_t* k_for_hamming) {
  Outcome o;
  const Partitioning parts{2, 2, 1};
  const PolynomialCode code(EntangledSpec(parts, 9, PrimeField()));
  o.require(code.recovery_threshold() == 5, "K != 5");
  *k_for_hamming = code.recovery_threshold();
  const auto det = RunFaultTrials(parts, 9, 4, 500, 600, FaultMode::kDetect, PrimeField());
  o.require(det.silent_wrong == 0, "detect e=4: " + std::to_string(det.silent_wrong) +
                                       " silent-wrong");
  const auto cor = RunFaultTrials(parts, 9, 2, 500, 700, FaultMode::kCorrect, PrimeField());
  o.require(cor.exact == 500, "correct e=2: " + std::to_string(cor.exact) + "/500 exact");
  const auto over = RunFaultTrials(parts, 9, 3, 500, 800, FaultMode::kCorrect, PrimeField());
  o.require(over.silent_wrong == 0, "correct e=3: " + std::to_string(over.silent_wrong) +
                                        " silent-wrong");
  if (o.ok) {
    o.detail = "detect e=4 flagged " + std::to_string(det.flagged) +
               "/500; correct e=2 exact 500/500; e=3 flagged " +
               std::to_string(over.flagged) + "/500, 0 silent";
  }
  return o;
}

Outcome ComparisonColumns() {
  Outcome o;
  for (const auto& r : bounds::ComparisonTable(60)) {
    const auto n = r.num_workers;
    o.require(r.entangled == 11, "entangled column");
    o.require(r.random_linear == 27, "random-linear column");
    o.require(r.short_mds == n - n / 3 + 3, "short-MDS column");
    o.require(r.uncoded == n - n / 9 + 1, "uncoded column");
    o.require(r.entangled <= r.uncoded && r.entangled <= r.random_linear &&
                  r.entangled <= r.short_mds,
              "entangled not minimal at N=" + std::to_string(n));
  }
  int status = 0;
  const std::string out = RunCli("bounds --fig2 --Nmax 60", &status);
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  o.require(status == 0 && line == "N,K_uncoded,K_random_linear,K_short_mds,K_entangled",
            "CLI header");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    unsigned long n, u, rl, s, e;
    if (std::sscanf(line.c_str(), "%lu,%lu,%lu,%lu,%lu", &n, &u, &rl, &s, &e) != 5) {
      o.require(false, "bad CLI row: " + line);
      break;
    }
    o.require(e == 11 && rl == 27 && s == n - n / 3 + 3 && u == n - n / 9 + 1,
              "CLI row N=" + std::to_string(n));
    ++rows;
  }
  o.require(rows == 50, "expected rows N=11..60, got " + std::to_string(rows));
  if (o.ok) o.detail = "N=11..60 library and CLI columns match closed forms";
  return o;
}

Outcome Optimality() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p = 1; p <= 20; ++p) {
    for (std::uint64_t x = 1; x <= 20; ++x) {
      if (p + p * x - 1 > 20) continue;
      for (auto [m, n] : {std::pair{std::uint64_t{1}, x}, std::pair{x, std::uint64_t{1}}}) {
        const auto k = bounds::ThresholdEntangled(p, m, n);
        o.require(k == p * m * n + p - 1, "closed form");
        o.require(k == bounds::ConverseLinear(p, m, n, 1000),
                  "p=" + std::to_string(p) + " m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
        ++checked;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " shapes meet the linear converse";
  return o;
}

Outcome Hamming(std::size_t k_straggler, std::size_t k_fault) {
  Outcome o;
  for (std::size_t n = 1; n <= 100; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto h = ComputeHammingRelations(n, n - k + 1);
      o.require(h == HammingRelations{k, n - k, (n - k) / 2},
                "N=" + std::to_string(n) + " K=" + std::to_string(k));
    }
  }
  // Shape (2,2,1) appears in both suites: same K in both.
  o.require(k_straggler == 5 && k_fault == 5,
            "suite thresholds differ: " + std::to_string(k_straggler) + " vs " +
                std::to_string(k_fault));
  const PolynomialCode code(EntangledSpec({2, 2, 1}, 9, PrimeField()));
  const auto h = ComputeHammingRelations(9, 9 - k_fault + 1);
  o.require(h.max_detectable == MaxDetectableErrors(code) &&
                h.max_correctable == MaxCorrectableErrors(code),
            "fault budgets disagree with relations");
  if (o.ok) o.detail = "5050 (N,K) pairs; both suites use K=5 for (2,2,1)";
  return o;
}

Outcome Simulator() {
  Outcome o;
  sim::SimulationConfig base;
  base.scheme.parts = {3, 3, 1};
  base.scheme.registry_dir = CODEDMM_REGISTRY_DIR;
  base.num_workers = 30;
  base.trials = 1000;
  base.seed = 10;
  const auto csv = [](const sim::ExperimentResult& r) {
    std::ostringstream out;
    sim::WriteTrialCsv(out, r);
    return out.str();
  };
  std::vector<double> means;
  for (const char* name : {"entangled", "random-linear", "uncoded"}) {
    auto c = base;
    c.scheme.name = name;
    const auto first = sim::RunExperiment(c);
    const auto second = sim::RunExperiment(c);
    o.require(csv(first) == csv(second), std::string(name) + " CSV not reproducible");
    o.require(first.summary.oracle_match_rate == 1.0, std::string(name) + " decode mismatch");
    means.push_back(first.summary.mean_completion);
  }
  o.require(means[0] < means[1] && means[1] < means[2], "mean completion not ordered");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "deterministic; mean completion %.4f < %.4f < %.4f", means[0],
                  means[1], means[2]);
    o.detail = buf;
  }
  return o;
}

Outcome Properties() {
  Outcome o;
  {
    const PrimeField f(65537);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(0, 65536);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t deg = t % 20;
      std::vector<std::uint64_t> coeffs(deg + 1);
      for (auto& c : coeffs) c = dist(rng);
      const FieldPolynomial p(f, coeffs);
      std::vector<InterpolationPoint> pts;
      for (std::size_t i = 0; i <= deg; ++i) {
        const auto x = f.element(7 * i + t);
        pts.push_back({x, p.evaluate(x)});
      }
      o.require(LagrangeInterpolate(pts) == p, "interpolation round trip " + std::to_string(t));
    }
  }
  {
    const PrimeField f(257);
    std::mt19937_64 rng(12);
    for (std::size_t r = 1; r <= 8; ++r) {
      for (std::size_t c = 1; c <= 8; ++c) {
        const MatrixF m = MatrixF::Random(r, c, f, rng);
        for (std::size_t rp = 1; rp <= 8; ++rp) {
          for (std::size_t cp = 1; cp <= 8; ++cp) {
            o.require(Partition(m, rp, cp).assemble() == m, "partition round trip");
          }
        }
      }
    }
  }
  {
    const PrimeField f(65537);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint64_t> dist(0, 65536);
    const PolynomialCode code(EntangledSpec({2, 2, 2}, 12, f));
    const ImprovedEntangledCode improved(StrassenConstruction(), 15, f);
    for (int t = 0; t < 50; ++t) {
      const MatrixF a1 = MatrixF::Random(4, 4, f, rng), a2 = MatrixF::Random(4, 4, f, rng);
      const MatrixF b1 = MatrixF::Random(4, 4, f, rng), b2 = MatrixF::Random(4, 4, f, rng);
      const std::uint64_t u = dist(rng), v = dist(rng);
      for (const CodingScheme* s : {static_cast<const CodingScheme*>(&code),
                                    static_cast<const CodingScheme*>(&improved)}) {
        const auto e1 = s->encode(a1, b1), e2 = s->encode(a2, b2);
        const auto e = s->encode(a1.scaled(u) + a2.scaled(v), b1.scaled(u) + b2.scaled(v));
        for (std::size_t w = 0; w < s->num_workers(); ++w) {
          o.require(e[w].a == e1[w].a.scaled(u) + e2[w].a.scaled(v) &&
                        e[w].b == e1[w].b.scaled(u) + e2[w].b.scaled(v),
                    s->name() + " encoding not linear");
        }
      }
    }
  }
  {
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(CODEDMM_REGISTRY_DIR)) {
      if (entry.path().extension() != ".json") continue;
      ++files;
      o.require(ValidateConstruction(LoadConstruction(entry.path().string())).ok,
                "registry entry " + entry.path().filename().string());
    }
    o.require(files > 0, "empty registry");
  }
  if (o.ok) {
    o.detail = "1000 interpolation round trips, partition dims <= 8, linearity, registry";
  }
  return o;
}

}  // namespace
}  // namespace codedmm

int main() {
  using codedmm::Outcome;
  std::size_t k_straggler = 0, k_fault = 0;
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "small-field example reproduction", 1, codedmm::SmallFieldExample},
      {2, "entangled code exhaustive subsets", 60,
       [&] { return codedmm::EntangledExhaustive(&k_straggler); }},
      {3, "improved code with Strassen", 30, codedmm::StrassenImproved},
      {4, "element-wise product code R=4", 60, codedmm::ElementwiseCode},
      {5, "coded convolution", 5, codedmm::Convolution},
      {6, "fault detection and correction", 60,
       [&] { return codedmm::FaultTolerance(&k_fault); }},
      {7, "threshold comparison table", 60, codedmm::ComparisonColumns},
      {8, "optimality witness", 60, codedmm::Optimality},
      {9, "Hamming relations consistency", 60,
       [&] { return codedmm::Hamming(k_straggler, k_fault); }},
      {10, "simulator determinism and ordering", 60, codedmm::Simulator},
      {11, "property suites", 60, codedmm::Properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.limit_s) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s [%.3fs < %.0fs] %s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, secs, c.limit_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
