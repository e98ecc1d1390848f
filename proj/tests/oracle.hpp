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


// Reference implementations used by the tests. Everything here works on the
// raw element records with dense boolean vectors and quadratic loops, and
// shares no code with the library beyond the OgPoset accessors.

#ifndef RDC_TESTS_ORACLE_HPP_
#define RDC_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "rdc/bitset.hpp"
#include "rdc/ogposet.hpp"

namespace rdc::oracle {

using Set = std::vector<char>;

inline Set from_bits(const Bitset& b) {
  Set s(b.size(), 0);
  b.for_each([&](int i) { s[i] = 1; });
  return s;
}

inline Bitset to_bits(const Set& s) {
  Bitset b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) b.set(i);
  }
  return b;
}

inline Set singleton(std::size_t size, int x) {
  Set s(size, 0);
  s[x] = 1;
  return s;
}

// le[x][y] iff x <= y, by transitive closure of the face relation.
class Order {
 public:
  explicit Order(const OgPoset& p) : p_(p), n_(p.size()), le_(n_ * n_, 0) {
    for (std::size_t x = 0; x < n_; ++x) le_[x * n_ + x] = 1;
    for (std::size_t y = 0; y < n_; ++y) {
      for (Sign s : kSigns) {
        for (int x : p.faces(static_cast<int>(y), s)) le_[x * n_ + y] = 1;
      }
    }
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (!le_[i * n_ + k]) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (le_[k * n_ + j]) le_[i * n_ + j] = 1;
        }
      }
    }
  }

  const OgPoset& poset() const { return p_; }
  std::size_t size() const { return n_; }
  bool le(int x, int y) const { return le_[x * n_ + y]; }

  Set closure(const Set& s) const {
    Set out(n_, 0);
    for (std::size_t y = 0; y < n_; ++y) {
      if (!s[y]) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        if (le(static_cast<int>(x), static_cast<int>(y))) out[x] = 1;
      }
    }
    return out;
  }

  bool closed(const Set& s) const { return closure(s) == s; }

  int dim(const Set& s) const {
    int d = -1;
    for (std::size_t x = 0; x < n_; ++x) {
      if (s[x]) d = std::max(d, p_.dim_of(static_cast<int>(x)));
    }
    return d;
  }

  // The sign of the covering edge y -> x, or -1 if y does not cover x.
  int edge_sign(int y, int x) const {
    for (Sign s : kSigns) {
      const auto& f = p_.faces(y, s);
      if (std::find(f.begin(), f.end(), x) != f.end()) {
        return static_cast<int>(s);
      }
    }
    return -1;
  }

  // Boundary straight from the definition: the closure of the n-elements
  // all of whose cofaces in u carry the requested sign, together with the
  // elements lying under nothing of dimension above n-1.
  Set boundary(const Set& u, int n, bool minus, bool plus) const {
    Set seed(n_, 0);
    if (n < 0) return seed;
    for (std::size_t xi = 0; xi < n_; ++xi) {
      const int x = static_cast<int>(xi);
      if (!u[x]) continue;
      bool low = true;
      for (std::size_t y = 0; y < n_; ++y) {
        if (u[y] && le(x, static_cast<int>(y)) &&
            p_.dim_of(static_cast<int>(y)) > n - 1) {
          low = false;
        }
      }
      if (low) seed[x] = 1;
      if (p_.dim_of(x) != n) continue;
      for (int want = 0; want < 2; ++want) {
        if ((want == 0 && !minus) || (want == 1 && !plus)) continue;
        bool all = true;
        for (std::size_t y = 0; y < n_; ++y) {
          if (!u[y]) continue;
          const int s = edge_sign(static_cast<int>(y), x);
          if (s >= 0 && s != want) all = false;
        }
        if (all) seed[x] = 1;
      }
    }
    return closure(seed);
  }

  Set boundary(const Set& u, int n, Sign a) const {
    return boundary(u, n, a == Sign::kMinus, a == Sign::kPlus);
  }

 private:
  const OgPoset& p_;
  std::size_t n_;
  std::vector<char> le_;
};

inline Set intersect(const Set& a, const Set& b) {
  Set out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline Set unite(const Set& a, const Set& b) {
  Set out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline Set image(const std::vector<int>& f, std::size_t target_size,
                 const Set& u) {
  Set out(target_size, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i]) out[f[i]] = 1;
  }
  return out;
}

// Checks the boundary law of a map for every element, dimension and sign.
inline bool is_map(const OgPoset& source, const OgPoset& target,
                   const std::vector<int>& f) {
  if (f.size() != source.size()) return false;
  Order os(source);
  Order ot(target);
  for (int x = 0; x < static_cast<int>(source.size()); ++x) {
    if (f[x] < 0 || f[x] >= static_cast<int>(target.size())) return false;
    const Set cx = os.closure(singleton(source.size(), x));
    const Set cfx = ot.closure(singleton(target.size(), f[x]));
    if (image(f, target.size(), cx) != cfx) return false;
    for (int n = 0; n <= source.dim_of(x); ++n) {
      for (Sign a : kSigns) {
        if (image(f, target.size(), os.boundary(cx, n, a)) !=
            ot.boundary(cfx, n, a)) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_map(const PosetMap& f) {
  return is_map(f.source(), f.target(), f.assignment());
}

// All molecules of p, as the least family containing the closures of single
// elements and closed under gluing along matching boundaries.
inline std::set<Set> molecules(const OgPoset& p) {
  Order ord(p);
  const std::size_t n = p.size();
  std::vector<Set> found;
  std::set<Set> known;
  auto add = [&](const Set& s) {
    if (known.insert(s).second) found.push_back(s);
  };
  for (int x = 0; x < static_cast<int>(n); ++x) {
    add(ord.closure(singleton(n, x)));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int order = 0; order < 2; ++order) {
        const Set a = order == 0 ? found[i] : found[j];
        const Set b = order == 0 ? found[j] : found[i];
        const Set meet = intersect(a, b);
        const Set joined = unite(a, b);
        if (joined == a || joined == b) continue;
        const int top = std::max(ord.dim(a), ord.dim(b));
        for (int k = 0; k < top; ++k) {
          if (meet == ord.boundary(a, k, Sign::kPlus) &&
              meet == ord.boundary(b, k, Sign::kMinus)) {
            add(joined);
            break;
          }
        }
      }
    }
  }
  return known;
}

// Number of isomorphisms p -> q, by trying every dimension-preserving
// bijection. Only for tiny posets.
inline std::size_t count_isomorphisms(const OgPoset& p, const OgPoset& q) {
  if (p.size() != q.size()) return 0;
  const std::size_t n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      const Element& ex = p.element(static_cast<int>(x));
      const Element& ey = q.element(perm[x]);
      if (ex.dim != ey.dim) {
        ok = false;
        break;
      }
      for (Sign s : kSigns) {
        std::vector<int> mapped;
        for (int f : ex.faces(s)) mapped.push_back(perm[f]);
        std::sort(mapped.begin(), mapped.end());
        std::vector<int> want = ey.faces(s);
        std::sort(want.begin(), want.end());
        if (mapped != want) ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Monotone functions {0..n} -> {0..m}.
inline std::vector<std::vector<int>> monotone_functions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n + 1, 0);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i > n) {
      out.push_back(f);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      f[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace rdc::oracle

#endif  // RDC_TESTS_ORACLE_HPP_
