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

#include "codedmm/bilinear.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "codedmm/polynomial.h"
#include "json.hpp"

namespace codedmm {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxRank = 1'000'000;

std::vector<std::int64_t> Flatten3(const json& t, std::size_t d0,
                                   std::size_t d1, std::size_t d2,
                                   const char* what) {
  std::vector<std::int64_t> out;
  out.reserve(d0 * d1 * d2);
  if (!t.is_array() || t.size() != d0) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": bad outer size");
  }
  for (const auto& x : t) {
    if (!x.is_array() || x.size() != d1) {
      throw Error(ErrorCode::kParseError, std::string(what) + ": bad middle size");
    }
    for (const auto& y : x) {
      if (!y.is_array() || y.size() != d2) {
        throw Error(ErrorCode::kParseError, std::string(what) + ": bad inner size");
      }
      for (const auto& v : y) out.push_back(v.get<std::int64_t>());
    }
  }
  return out;
}

json Nest3(std::span<const std::int64_t> flat, std::size_t d0, std::size_t d1,
           std::size_t d2) {
  json out = json::array();
  for (std::size_t i = 0; i < d0; ++i) {
    json mid = json::array();
    for (std::size_t j = 0; j < d1; ++j) {
      json inner = json::array();
      for (std::size_t k = 0; k < d2; ++k) inner.push_back(flat[(i * d1 + j) * d2 + k]);
      mid.push_back(std::move(inner));
    }
    out.push_back(std::move(mid));
  }
  return out;
}

MatrixBlock LinearCombination(const BlockGrid& grid, const PrimeField& f,
                              const auto& coeff /* (l, j) -> int64 */) {
  MatrixBlock out(grid.block_rows(), grid.block_cols(), f);
  for (std::size_t l = 0; l < grid.row_parts(); ++l) {
    for (std::size_t j = 0; j < grid.col_parts(); ++j) {
      out.add_scaled(grid.block(l, j), f.reduce_signed(coeff(l, j)));
    }
  }
  return out;
}

}  // namespace

BilinearConstruction::BilinearConstruction(std::string name, std::size_t p,
                                           std::size_t m, std::size_t n,
                                           std::size_t rank,
                                           std::vector<std::int64_t> a,
                                           std::vector<std::int64_t> b,
                                           std::vector<std::int64_t> c)
    : name_(std::move(name)),
      p_(p),
      m_(m),
      n_(n),
      rank_(rank),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)) {
  if (p == 0 || m == 0 || n == 0) {
    throw Error(ErrorCode::kInvalidConstruction, "p, m, n must be >= 1");
  }
  if (a_.size() != rank * p * m || b_.size() != rank * p * n ||
      c_.size() != rank * m * n) {
    throw Error(ErrorCode::kInvalidConstruction,
                "tensor sizes do not match (p, m, n, R)");
  }
}

ValidationResult ValidateConstruction(const BilinearConstruction& bc,
                                      const PrimeField& field) {
  const std::size_t p = bc.p(), m = bc.m(), n = bc.n(), r = bc.rank();
  // Reduced copies; cm[(j*n + k)*r + i] keeps the inner loop contiguous.
  std::vector<std::uint64_t> am(r * p * m), bm(r * p * n), cm(r * m * n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l < p; ++l) {
      for (std::size_t j = 0; j < m; ++j) am[(l * m + j) * r + i] = field.reduce_signed(bc.a(i, l, j));
      for (std::size_t k = 0; k < n; ++k) bm[(l * n + k) * r + i] = field.reduce_signed(bc.b(i, l, k));
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) cm[(j * n + k) * r + i] = field.reduce_signed(bc.c(i, j, k));
    }
  }
  std::vector<std::uint64_t> ab(r);
  for (std::size_t ar = 0; ar < p; ++ar) {
    for (std::size_t ac = 0; ac < m; ++ac) {
      for (std::size_t br = 0; br < p; ++br) {
        for (std::size_t bcol = 0; bcol < n; ++bcol) {
          for (std::size_t i = 0; i < r; ++i) {
            ab[i] = field.mul(am[(ar * m + ac) * r + i], bm[(br * n + bcol) * r + i]);
          }
          for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              std::uint64_t sum = 0;
              const std::uint64_t* crow = &cm[(j * n + k) * r];
              for (std::size_t i = 0; i < r; ++i) sum = field.add(sum, field.mul(crow[i], ab[i]));
              // sum_l A_{l,j} B_{l,k} for the two basis matrices.
              const std::uint64_t want = (ar == br && ac == j && bcol == k) ? 1 : 0;
              if (sum != want) {
                return {false, ConstructionViolation{ar, ac, br, bcol, j, k}};
              }
            }
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

BilinearConstruction StandardConstruction(std::size_t p, std::size_t m,
                                          std::size_t n) {
  const std::size_t r = p * m * n;
  std::vector<std::int64_t> a(r * p * m, 0), b(r * p * n, 0), c(r * m * n, 0);
  for (std::size_t l = 0; l < p; ++l) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (l * m + j) * n + k;
        a[(i * p + l) * m + j] = 1;
        b[(i * p + l) * n + k] = 1;
        c[(i * m + j) * n + k] = 1;
      }
    }
  }
  return BilinearConstruction(
      "standard:" + std::to_string(p) + "," + std::to_string(m) + "," +
          std::to_string(n),
      p, m, n, r, std::move(a), std::move(b), std::move(c));
}

BilinearConstruction StrassenConstruction() {
  // With X = A^T, the classical products are
  //   M1 = (X00 + X11)(Y00 + Y11)   M2 = (X10 + X11) Y00
  //   M3 = X00 (Y01 - Y11)          M4 = X11 (Y10 - Y00)
  //   M5 = (X00 + X01) Y11          M6 = (X10 - X00)(Y00 + Y01)
  //   M7 = (X01 - X11)(Y10 + Y11)
  // and a(i, l, j) is the coefficient of A_{l,j} = X_{j,l}.
  // a[i] = {A00, A01, A10, A11}, b[i] = {B00, B01, B10, B11},
  // c[i] = {C00, C01, C10, C11}.
  std::vector<std::int64_t> a = {
      1, 0, 0, 1,   // M1
      0, 1, 0, 1,   // M2
      1, 0, 0, 0,   // M3
      0, 0, 0, 1,   // M4
      1, 0, 1, 0,   // M5
      -1, 1, 0, 0,  // M6
      0, 0, 1, -1,  // M7
  };
  std::vector<std::int64_t> b = {
      1, 0, 0, 1,   // M1
      1, 0, 0, 0,   // M2
      0, 1, 0, -1,  // M3
      -1, 0, 1, 0,  // M4
      0, 0, 0, 1,   // M5
      1, 1, 0, 0,   // M6
      0, 0, 1, 1,   // M7
  };
  std::vector<std::int64_t> c = {
      1, 0, 0, 1,   // M1
      0, 0, 1, -1,  // M2
      0, 1, 0, 1,   // M3
      1, 0, 1, 0,   // M4
      -1, 1, 0, 0,  // M5
      0, 0, 0, 1,   // M6
      1, 0, 0, 0,   // M7
  };
  return BilinearConstruction("strassen", 2, 2, 2, 7, std::move(a),
                              std::move(b), std::move(c));
}

BilinearConstruction ComposeConstructions(const BilinearConstruction& x,
                                          const BilinearConstruction& y) {
  const std::size_t p = x.p() * y.p(), m = x.m() * y.m(), n = x.n() * y.n();
  if (x.rank() * y.rank() > kMaxRank) {
    throw Error(ErrorCode::kInvalidArgument, "composed rank exceeds 10^6");
  }
  const std::size_t r = x.rank() * y.rank();
  std::vector<std::int64_t> a(r * p * m), b(r * p * n), c(r * m * n);
  for (std::size_t i1 = 0; i1 < x.rank(); ++i1) {
    for (std::size_t i2 = 0; i2 < y.rank(); ++i2) {
      const std::size_t i = i1 * y.rank() + i2;
      for (std::size_t l1 = 0; l1 < x.p(); ++l1) {
        for (std::size_t l2 = 0; l2 < y.p(); ++l2) {
          const std::size_t l = l1 * y.p() + l2;
          for (std::size_t j1 = 0; j1 < x.m(); ++j1) {
            for (std::size_t j2 = 0; j2 < y.m(); ++j2) {
              a[(i * p + l) * m + j1 * y.m() + j2] = x.a(i1, l1, j1) * y.a(i2, l2, j2);
            }
          }
          for (std::size_t k1 = 0; k1 < x.n(); ++k1) {
            for (std::size_t k2 = 0; k2 < y.n(); ++k2) {
              b[(i * p + l) * n + k1 * y.n() + k2] = x.b(i1, l1, k1) * y.b(i2, l2, k2);
            }
          }
        }
      }
      for (std::size_t j1 = 0; j1 < x.m(); ++j1) {
        for (std::size_t j2 = 0; j2 < y.m(); ++j2) {
          for (std::size_t k1 = 0; k1 < x.n(); ++k1) {
            for (std::size_t k2 = 0; k2 < y.n(); ++k2) {
              c[(i * m + j1 * y.m() + j2) * n + k1 * y.n() + k2] =
                  x.c(i1, j1, k1) * y.c(i2, j2, k2);
            }
          }
        }
      }
    }
  }
  return BilinearConstruction(x.name() + "*" + y.name(), p, m, n, r,
                              std::move(a), std::move(b), std::move(c));
}

BilinearConstruction TensorPower(const BilinearConstruction& bc,
                                 std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "tensor power k >= 1");
  std::size_t rank = 1;
  for (std::size_t i = 0; i < k; ++i) {
    rank *= bc.rank();
    if (rank > kMaxRank) {
      throw Error(ErrorCode::kInvalidArgument, "R^k exceeds 10^6");
    }
  }
  BilinearConstruction out = bc;
  for (std::size_t i = 1; i < k; ++i) out = ComposeConstructions(out, bc);
  if (k == 1) return out;
  return BilinearConstruction(bc.name() + "^" + std::to_string(k), out.p(),
                              out.m(), out.n(), out.rank(),
                              {out.a_tensor().begin(), out.a_tensor().end()},
                              {out.b_tensor().begin(), out.b_tensor().end()},
                              {out.c_tensor().begin(), out.c_tensor().end()});
}

BilinearConstruction ConstructionFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    const auto p = j.at("p").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    const auto n = j.at("n").get<std::size_t>();
    const auto r = j.at("R").get<std::size_t>();
    return BilinearConstruction(j.value("name", std::string("unnamed")), p, m,
                                n, r, Flatten3(j.at("a"), r, p, m, "a"),
                                Flatten3(j.at("b"), r, p, n, "b"),
                                Flatten3(j.at("c"), r, m, n, "c"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string ConstructionToJson(const BilinearConstruction& bc) {
  // One multiplication per line keeps the registry files reviewable.
  std::ostringstream out;
  out << "{\n  \"name\": " << json(bc.name()).dump() << ",\n  \"p\": " << bc.p()
      << ",\n  \"m\": " << bc.m() << ",\n  \"n\": " << bc.n()
      << ",\n  \"R\": " << bc.rank();
  const auto tensor = [&](const char* key, const json& t) {
    out << ",\n  \"" << key << "\": [";
    for (std::size_t i = 0; i < t.size(); ++i) {
      out << (i ? ",\n    " : "\n    ") << t[i].dump();
    }
    out << "\n  ]";
  };
  tensor("a", Nest3(bc.a_tensor(), bc.rank(), bc.p(), bc.m()));
  tensor("b", Nest3(bc.b_tensor(), bc.rank(), bc.p(), bc.n()));
  tensor("c", Nest3(bc.c_tensor(), bc.rank(), bc.m(), bc.n()));
  out << "\n}";
  return out.str();
}

BilinearConstruction LoadConstruction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ConstructionFromJson(ss.str());
}

BilinearConstruction ResolveConstruction(const std::string& spec,
                                         const std::string& registry_dir) {
  if (spec == "strassen") return StrassenConstruction();
  if (spec.starts_with("strassen^")) {
    return TensorPower(StrassenConstruction(), std::stoul(spec.substr(9)));
  }
  if (spec.starts_with("standard:")) {
    std::size_t p = 0, m = 0, n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec.substr(9));
    if (!(in >> p >> c1 >> m >> c2 >> n) || c1 != ',' || c2 != ',') {
      throw Error(ErrorCode::kParseError, "expected standard:p,m,n");
    }
    return StandardConstruction(p, m, n);
  }
  namespace fs = std::filesystem;
  if (fs::is_regular_file(spec)) return LoadConstruction(spec);
  const fs::path candidate = fs::path(registry_dir) / (spec + ".json");
  if (!registry_dir.empty() && fs::is_regular_file(candidate)) {
    return LoadConstruction(candidate.string());
  }
  throw Error(ErrorCode::kParseError, "unknown construction '" + spec + "'");
}

ElementwiseProductCode::ElementwiseProductCode(std::size_t rank,
                                               std::size_t num_workers,
                                               const PrimeField& field,
                                               std::vector<std::uint64_t> x_points,
                                               std::vector<std::uint64_t> y_points)
    : rank_(rank),
      num_workers_(num_workers),
      field_(field),
      x_(std::move(x_points)),
      y_(std::move(y_points)) {
  if (rank == 0) throw Error(ErrorCode::kInvalidArgument, "rank must be >= 1");
  if (num_workers < rank) {
    throw Error(ErrorCode::kTooFewWorkers,
                "N = " + std::to_string(num_workers) + " < R = " +
                    std::to_string(rank));
  }
  if (field.modulus() <= std::max(num_workers, rank)) {
    throw Error(ErrorCode::kFieldTooSmall,
                "q = " + std::to_string(field.modulus()) +
                    " must exceed max(N, R)");
  }
  if (x_.empty()) {
    for (std::size_t i = 0; i < rank; ++i) x_.push_back(i);
  }
  if (y_.empty()) {
    for (std::size_t i = 0; i < num_workers; ++i) y_.push_back(i);
  }
  if (x_.size() != rank || y_.size() != num_workers) {
    throw Error(ErrorCode::kInvalidArgument, "need R x-points and N y-points");
  }
  for (auto& v : x_) v = field.reduce(v);
  for (auto& v : y_) v = field.reduce(v);
  CheckDistinct(x_);
  CheckDistinct(y_);
  if (num_workers < interpolation_unknowns()) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (x_[i] != y_[i]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "with N < 2R - 1 the first R workers must sit on the x-points");
      }
    }
  }
  weights_.reserve(num_workers);
  for (std::uint64_t y : y_) weights_.push_back(LagrangeBasisAt(field, x_, y));
}

std::size_t ElementwiseProductCode::recovery_threshold() const {
  return std::min(num_workers_, interpolation_unknowns());
}

MatrixBlock ElementwiseProductCode::encode(std::span<const MatrixBlock> vec,
                                           std::size_t worker) const {
  if (vec.size() != rank_) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                "expected a length-" + std::to_string(rank_) + " vector");
  }
  if (worker >= num_workers_) {
    throw Error(ErrorCode::kInvalidArgument, "worker out of range");
  }
  MatrixBlock out(vec.front().rows(), vec.front().cols(), field_);
  for (std::size_t j = 0; j < rank_; ++j) out.add_scaled(vec[j], weights_[worker][j]);
  return out;
}

std::vector<MatrixBlock> ElementwiseProductCode::decode(
    std::span<const WorkerResult> results) const {
  const std::size_t k = recovery_threshold();
  if (results.size() < k) {
    throw Error(ErrorCode::kInsufficientResults,
                "have " + std::to_string(results.size()) + " results, need " +
                    std::to_string(k));
  }
  for (const auto& r : results) {
    if (r.worker >= num_workers_) {
      throw Error(ErrorCode::kInvalidArgument, "worker out of range");
    }
  }
  if (k == interpolation_unknowns()) {
    std::vector<std::uint64_t> xs;
    std::vector<MatrixBlock> ys;
    for (std::size_t i = 0; i < k; ++i) {
      xs.push_back(y_[results[i].worker]);
      ys.push_back(results[i].block);
    }
    const auto coeffs = InterpolateBlockPolynomial(field_, xs, ys);
    std::vector<MatrixBlock> out;
    out.reserve(rank_);
    for (std::uint64_t x : x_) out.push_back(EvaluateBlockPolynomial(coeffs, x));
    return out;
  }
  // Threshold N: every worker reported, and worker i < R holds product i.
  std::vector<const MatrixBlock*> direct(rank_, nullptr);
  for (const auto& r : results) {
    if (r.worker < rank_) direct[r.worker] = &r.block;
  }
  std::vector<MatrixBlock> out;
  out.reserve(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (direct[i] == nullptr) {
      throw Error(ErrorCode::kInsufficientResults,
                  "systematic worker " + std::to_string(i) + " missing");
    }
    out.push_back(*direct[i]);
  }
  return out;
}

ImprovedEntangledCode::ImprovedEntangledCode(BilinearConstruction bc,
                                             std::size_t num_workers,
                                             const PrimeField& field,
                                             std::vector<std::uint64_t> x_points,
                                             std::vector<std::uint64_t> y_points)
    : CodingScheme(bc.partitioning(), num_workers),
      bc_(std::move(bc)),
      field_(field),
      products_(bc_.rank(), num_workers, field, std::move(x_points),
                std::move(y_points)) {}

std::vector<MatrixBlock> ImprovedEntangledCode::a_vector(
    const BlockGrid& a) const {
  check_grids(a, bc_.m());
  std::vector<MatrixBlock> out;
  out.reserve(bc_.rank());
  for (std::size_t i = 0; i < bc_.rank(); ++i) {
    out.push_back(LinearCombination(a, field_, [&](std::size_t l, std::size_t j) {
      return bc_.a(i, l, j);
    }));
  }
  return out;
}

std::vector<MatrixBlock> ImprovedEntangledCode::b_vector(
    const BlockGrid& b) const {
  check_grids(b, bc_.n());
  std::vector<MatrixBlock> out;
  out.reserve(bc_.rank());
  for (std::size_t i = 0; i < bc_.rank(); ++i) {
    out.push_back(LinearCombination(b, field_, [&](std::size_t l, std::size_t k) {
      return bc_.b(i, l, k);
    }));
  }
  return out;
}

MatrixBlock ImprovedEntangledCode::encode_a(const BlockGrid& a,
                                            std::size_t worker) const {
  check_worker(worker);
  return products_.encode(a_vector(a), worker);
}

MatrixBlock ImprovedEntangledCode::encode_b(const BlockGrid& b,
                                            std::size_t worker) const {
  check_worker(worker);
  return products_.encode(b_vector(b), worker);
}

MatrixF ImprovedEntangledCode::decode(std::span<const WorkerResult> results,
                                      std::size_t out_rows,
                                      std::size_t out_cols) const {
  const auto prods = products_.decode(results);
  const std::size_t m = bc_.m(), n = bc_.n();
  std::vector<MatrixBlock> blocks;
  blocks.reserve(m * n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      MatrixBlock sum(prods.front().rows(), prods.front().cols(), field_);
      for (std::size_t i = 0; i < bc_.rank(); ++i) {
        sum.add_scaled(prods[i], field_.reduce_signed(bc_.c(i, j, k)));
      }
      blocks.push_back(std::move(sum));
    }
  }
  return AssembleProduct(blocks, m, n, out_rows, out_cols);
}

}  // namespace codedmm
