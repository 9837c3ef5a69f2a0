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

#include "codedmm/matrix_io.h"

#include <cstdint>
#include <fstream>
#include <vector>

namespace codedmm {

MatrixF ReadMatrix(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t q = 0;
  if (!(in >> rows >> cols >> q)) {
    throw Error(ErrorCode::kParseError, "missing 'rows cols q' header");
  }
  const PrimeField field(q);
  std::vector<std::int64_t> values(rows * cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(in >> values[i])) {
      throw Error(ErrorCode::kParseError,
                  "expected " + std::to_string(values.size()) +
                      " entries, read " + std::to_string(i));
    }
  }
  return MatrixF::FromSigned(rows, cols, field, values);
}

MatrixF ReadMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return ReadMatrix(in);
}

void WriteMatrix(std::ostream& out, const MatrixF& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m.get(r, c);
    }
    out << '\n';
  }
}

}  // namespace codedmm
