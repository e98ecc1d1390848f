// Copyright 2026 The rdc Authors.
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


#ifndef RDC_SMITH_HPP_
#define RDC_SMITH_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <tuple>
#include <vector>

namespace rdc {

using BigInt = boost::multiprecision::cpp_int;

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::tuple<int, int, std::int64_t>> entries;  // (row, col, value)
};

struct SmithOptions {
  // Machine-integer entries above this magnitude trigger the guard.
  std::int64_t threshold = std::numeric_limits<std::int64_t>::max() / 4;
  // On the guard, redo the computation with arbitrary precision; otherwise
  // throw kOverflowGuard.
  bool escalate = true;
};

struct SmithResult {
  std::size_t rank = 0;
  // Nonzero diagonal entries of the Smith normal form that are not 1, in
  // divisibility order.
  std::vector<BigInt> torsion;
  bool escalated = false;
};

SmithResult smith(const SparseMatrix& m, const SmithOptions& options = {});

// Dense product a * b, for checking that boundaries compose to zero.
bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace rdc

#endif  // RDC_SMITH_HPP_
