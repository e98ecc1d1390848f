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

#include <algorithm>
#include <bit>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "rdc/error.hpp"
#include "rdc/shapes.hpp"

namespace rdc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kPrecondition, what);
}

struct SimplexData {
  OgPoset poset;
  std::vector<BitString> strings;  // by element index
  std::vector<int> index_of;       // by bits
};

// Bits reversed so that b_0 is the most significant: ascending order of
// the key is lexicographic order of the string.
std::uint32_t lex_key(const BitString& b) {
  std::uint32_t key = 0;
  for (int i = 0; i < b.length(); ++i) key = (key << 1) | (b[i] ? 1u : 0u);
  return key;
}

const SimplexData& simplex_data(int n) {
  static detail::ShapeCache<int, std::shared_ptr<const SimplexData>> cache;
  return *cache.get(n, [n] {
    auto data = std::make_shared<SimplexData>();
    const OgPoset point = globe(0);
    data->poset = n == 0 ? point : join(point, simplex(n - 1));
    const std::uint32_t count = 1u << (n + 1);
    std::vector<BitString> all;
    for (std::uint32_t bits = 1; bits < count; ++bits) {
      all.emplace_back(n + 1, bits);
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const BitString& a, const BitString& b) {
                       return std::make_pair(a.dim(), lex_key(a)) <
                              std::make_pair(b.dim(), lex_key(b));
                     });
    data->strings = all;
    data->index_of.assign(count, -1);
    for (std::size_t i = 0; i < all.size(); ++i) {
      data->index_of[all[i].bits()] = static_cast<int>(i);
    }
    return std::shared_ptr<const SimplexData>(std::move(data));
  });
}

}  // namespace

OgPoset globe(int n) {
  require(n >= 0, "globe dimension must be non-negative");
  static detail::ShapeCache<int, OgPoset> cache;
  return cache.get(n, [n] {
    std::vector<Element> elems;
    for (int k = 0; k <= n; ++k) {
      const int copies = k < n ? 2 : 1;
      for (int c = 0; c < copies; ++c) {
        if (k == 0) {
          elems.push_back({0, {}, {}});
        } else {
          elems.push_back({k, {globe_index(k - 1, Sign::kMinus)},
                           {globe_index(k - 1, Sign::kPlus)}});
        }
      }
    }
    return validate(std::move(elems));
  });
}

int globe_index(int k, Sign s) { return 2 * k + static_cast<int>(s); }
int globe_top(int n) { return 2 * n; }

BitString BitString::parse(const std::string& text) {
  if (text.empty() || text.size() > 31) {
    throw Error(ErrorKind::kParse, "bit string must have 1 to 31 bits");
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= 1u << i;
    } else if (text[i] != '0') {
      throw Error(ErrorKind::kParse, "bit string has a character other than 0/1");
    }
  }
  if (bits == 0) throw Error(ErrorKind::kParse, "bit string is all zero");
  return BitString(static_cast<int>(text.size()), bits);
}

int BitString::dim() const { return std::popcount(bits_) - 1; }

int BitString::last() const { return 31 - std::countl_zero(bits_); }

std::string BitString::str() const {
  std::string s;
  for (int i = 0; i < length_; ++i) s += (*this)[i] ? '1' : '0';
  return s;
}

OgPoset simplex(int n) {
  require(n >= 0, "simplex dimension must be non-negative");
  return simplex_data(n).poset;
}

int simplex_index(int n, const BitString& b) {
  require(n >= 0 && b.length() == n + 1 && b.bits() != 0,
          "bit string does not name an element of the simplex");
  return simplex_data(n).index_of[b.bits()];
}

BitString simplex_string(int n, int index) {
  const SimplexData& d = simplex_data(n);
  if (index < 0 || index >= static_cast<int>(d.strings.size())) {
    throw Error(ErrorKind::kIndexOutOfRange, "no such simplex element");
  }
  return d.strings[index];
}

OgPoset cube(int n) {
  require(n >= 0, "cube dimension must be non-negative");
  static detail::ShapeCache<int, OgPoset> cache;
  return cache.get(n, [n] {
    return n == 0 ? globe(0) : gray(globe(1), cube(n - 1));
  });
}

PosetMap simplex_map(int n, int m, const std::vector<int>& vertices) {
  require(static_cast<int>(vertices.size()) == n + 1,
          "vertex function has the wrong length");
  for (int i = 0; i <= n; ++i) {
    require(vertices[i] >= 0 && vertices[i] <= m, "vertex out of range");
    require(i == 0 || vertices[i - 1] <= vertices[i],
            "vertex function is not monotone");
  }
  const SimplexData& src = simplex_data(n);
  std::vector<int> a(src.strings.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::uint32_t image = 0;
    const BitString& b = src.strings[x];
    for (int i = 0; i <= n; ++i) {
      if (b[i]) image |= 1u << vertices[i];
    }
    a[x] = simplex_index(m, BitString(m + 1, image));
  }
  return PosetMap(src.poset, simplex(m), std::move(a));
}

PosetMap simplex_face(int n, int k) {
  require(n >= 1 && k >= 0 && k <= n, "coface index out of range");
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i < k ? i : i + 1;
  return simplex_map(n - 1, n, f);
}

PosetMap simplex_degeneracy(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "codegeneracy index out of range");
  std::vector<int> f(n + 2);
  for (int i = 0; i < n + 2; ++i) f[i] = i <= k ? i : i - 1;
  return simplex_map(n + 1, n, f);
}

Horn horn(const OgPoset& u, const ClosedSubset& v) {
  const ClosedSubset whole = ClosedSubset::whole(u);
  require(greatest_element(whole).has_value(), "horn needs an atom");
  require(greatest_element(v).has_value(), "horn face must be an atom");
  require(v.dim().value_or(-1) + 1 == u.dim().value_or(-1),
          "horn face must have codimension 1");
  Bitset members = boundary(whole).members();
  require(v.members().is_subset_of(members), "horn face is not in the boundary");
  members -= v.members() - boundary(v).members();
  ClosedSubset subset(u, std::move(members));
  Restriction r = restrict_to(subset);
  return {subset, r.inclusion};
}

std::vector<int> last_vertex(int n) {
  const SimplexData& d = simplex_data(n);
  std::vector<int> out;
  for (const BitString& b : d.strings) out.push_back(b.last());
  return out;
}

std::vector<PosetMap> enumerate_maps(const OgPoset& u, const OgPoset& v) {
  const int n = static_cast<int>(u.size());
  const int m = static_cast<int>(v.size());
  const auto src_closures = detail::all_closures(u);
  const auto tgt_closures = detail::all_closures(v);
  // Boundaries of every element, by (k, sign).
  auto boundaries = [](const OgPoset& p, const std::vector<Bitset>& clos) {
    std::vector<std::vector<Bitset>> out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (int k = 0; k <= p.dim_of(x); ++k) {
        out[x].push_back(detail::boundary_bits(p, clos[x], k, true, false));
        out[x].push_back(detail::boundary_bits(p, clos[x], k, false, true));
      }
    }
    return out;
  };
  const auto src_bd = boundaries(u, src_closures);
  const auto tgt_bd = boundaries(v, tgt_closures);

  std::vector<int> a(n, -1);
  std::vector<PosetMap> out;
  auto fits = [&](int x, int y) {
    const int d = u.dim_of(x);
    if (v.dim_of(y) > d) return false;
    for (int k = 0; k <= d; ++k) {
      for (int s = 0; s < 2; ++s) {
        const Bitset& target = k <= v.dim_of(y)
                                   ? tgt_bd[y][2 * k + s]
                                   : tgt_closures[y];
        Bitset image(m);
        src_bd[x][2 * k + s].for_each([&](int z) { image.set(a[z]); });
        if (image != target) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(PosetMap::unchecked(u, v, a));
      return;
    }
    for (int y = 0; y < m; ++y) {
      a[x] = y;
      if (fits(x, y)) self(self, x + 1);
    }
    a[x] = -1;
  };
  search(search, 0);
  return out;
}

}  // namespace rdc
