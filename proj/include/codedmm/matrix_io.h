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

#ifndef CODEDMM_MATRIX_IO_H_
#define CODEDMM_MATRIX_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "codedmm/matrix.h"

namespace codedmm {

// Text fixture format: a header line "rows cols q" followed by rows * cols
// whitespace-separated integers in row-major order. Negative entries are
// mapped to their canonical representative.
MatrixF ReadMatrix(std::istream& in);
MatrixF ReadMatrixFile(const std::string& path);
void WriteMatrix(std::ostream& out, const MatrixF& m);

}  // namespace codedmm

#endif  // CODEDMM_MATRIX_IO_H_
