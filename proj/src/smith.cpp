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

#include "rdc/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "rdc/error.hpp"

namespace rdc {

namespace {

struct Overflow {};

// Machine integers with a magnitude guard.
struct Checked {
  std::int64_t threshold;

  std::int64_t check(std::int64_t v) const {
    if (v > threshold || v < -threshold) throw Overflow{};
    return v;
  }
  std::int64_t sub_mul(std::int64_t a, std::int64_t b, std::int64_t c) const {
    std::int64_t prod = 0, out = 0;
    if (__builtin_mul_overflow(b, c, &prod) ||
        __builtin_sub_overflow(a, prod, &out)) {
      throw Overflow{};
    }
    return check(out);
  }
};

struct Unbounded {
  BigInt check(const BigInt& v) const { return v; }
  BigInt sub_mul(const BigInt& a, const BigInt& b, const BigInt& c) const {
    return a - b * c;
  }
};

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <class T>
T magnitude(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Removes unit pivots by column operations, then reduces what is left as a
// dense matrix.
template <class T, class Arith>
SmithResult reduce(const SparseMatrix& m, const Arith& arith) {
  std::vector<std::map<int, T>> cols(m.cols);
  std::vector<std::set<int>> rows(m.rows);
  for (auto [r, c, v] : m.entries) {
    if (v == 0) continue;
    T& slot = cols[c][r];
    slot = arith.check(T(slot + T(v)));
    if (slot == 0) {
      cols[c].erase(r);
      rows[r].erase(c);
    } else {
      rows[r].insert(c);
    }
  }
  SmithResult result;
  std::vector<bool> col_alive(m.cols, true), row_alive(m.rows, true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      if (!col_alive[c]) continue;
      // Unit entry in the sparsest row.
      int pivot_row = -1;
      for (const auto& [r, v] : cols[c]) {
        if (is_unit(v) &&
            (pivot_row < 0 || rows[r].size() < rows[pivot_row].size())) {
          pivot_row = r;
        }
      }
      if (pivot_row < 0) continue;
      const T p = cols[c][pivot_row];
      const std::vector<int> others(rows[pivot_row].begin(),
                                    rows[pivot_row].end());
      for (int c2 : others) {
        if (c2 == c) continue;
        const T factor = T(cols[c2][pivot_row] * p);
        for (const auto& [r, v] : cols[c]) {
          T& slot = cols[c2][r];
          slot = arith.sub_mul(slot, factor, v);
          if (slot == 0) {
            cols[c2].erase(r);
            rows[r].erase(c2);
          } else {
            rows[r].insert(c2);
          }
        }
      }
      for (const auto& [r, v] : cols[c]) rows[r].erase(c);
      cols[c].clear();
      col_alive[c] = false;
      row_alive[pivot_row] = false;
      ++result.rank;
      progress = true;
    }
  }
  // Dense remainder.
  std::vector<int> live_cols;
  std::map<int, int> row_pos;
  for (int c = 0; c < m.cols; ++c) {
    if (col_alive[c] && !cols[c].empty()) live_cols.push_back(c);
  }
  for (int c : live_cols) {
    for (const auto& [r, v] : cols[c]) row_pos.emplace(r, 0);
  }
  int next = 0;
  for (auto& [r, pos] : row_pos) pos = next++;
  const int nr = next;
  const int nc = static_cast<int>(live_cols.size());
  std::vector<std::vector<T>> a(nr, std::vector<T>(nc, T(0)));
  for (int j = 0; j < nc; ++j) {
    for (const auto& [r, v] : cols[live_cols[j]]) a[row_pos[r]][j] = v;
  }
  std::vector<T> diagonal;
  for (int t = 0; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block.
      int pr = -1, pc = -1;
      for (int i = t; i < nr; ++i) {
        for (int j = t; j < nc; ++j) {
          if (a[i][j] != 0 &&
              (pr < 0 || magnitude(a[i][j]) < magnitude(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;
      std::swap(a[t], a[pr]);
      for (int i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pc]);
      bool clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        const T q = T(a[i][t] / a[t][t]);
        for (int j = t; j < nc; ++j) a[i][j] = arith.sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        const T q = T(a[t][j] / a[t][t]);
        for (int i = t; i < nr; ++i) a[i][j] = arith.sub_mul(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into row t.
      int bad = -1;
      for (int i = t + 1; i < nr && bad < 0; ++i) {
        for (int j = t + 1; j < nc; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      for (int j = t; j < nc; ++j) a[t][j] = arith.check(T(a[t][j] + a[bad][j]));
    }
    if (a[t][t] == 0) break;
    diagonal.push_back(magnitude(a[t][t]));
  }
  result.rank += diagonal.size();
  for (const T& d : diagonal) {
    if (d != 1) result.torsion.push_back(BigInt(d));
  }
  return result;
}

}  // namespace

SmithResult smith(const SparseMatrix& m, const SmithOptions& options) {
  try {
    return reduce<std::int64_t>(m, Checked{options.threshold});
  } catch (const Overflow&) {
    if (!options.escalate) {
      throw Error(ErrorKind::kOverflowGuard,
                  "matrix entries exceeded the machine-integer threshold");
    }
  }
  SmithResult r = reduce<BigInt>(m, Unbounded{});
  r.escalated = true;
  return r;
}

bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) return false;
  std::vector<std::vector<std::pair<int, std::int64_t>>> b_rows(b.rows);
  for (auto [r, c, v] : b.entries) b_rows[r].push_back({c, v});
  std::map<std::pair<int, int>, BigInt> out;
  for (auto [r, k, v] : a.entries) {
    for (auto [c, w] : b_rows[k]) out[{r, c}] += BigInt(v) * w;
  }
  return std::all_of(out.begin(), out.end(),
                     [](const auto& e) { return e.second == 0; });
}

}  // namespace rdc
