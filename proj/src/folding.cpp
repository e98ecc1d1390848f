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

#include <memory>
#include <string>
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

PosetMap isomorphism(const OgPoset& p, const OgPoset& q) {
  auto iso = find_isomorphism(p, q);
  if (!iso) throw Error(ErrorKind::kBoundaryMismatch, "shapes are not isomorphic");
  return *iso;
}

}  // namespace

InflationTower inflation_tower(const OgPoset& u, int k) {
  InflationTower t;
  t.base = u;
  for (int i = 0; i < k; ++i) t.levels.push_back(inflate(t.at(i)));
  return t;
}

PosetMap iterated_inflate_map(const InflationTower& src,
                              const InflationTower& tgt, const PosetMap& p,
                              int k) {
  require(static_cast<int>(src.levels.size()) >= k &&
              static_cast<int>(tgt.levels.size()) >= k,
          "inflation tower too short");
  PosetMap q = p;
  for (int i = 0; i < k; ++i) q = inflate_map(src.levels[i], tgt.levels[i], q);
  return q;
}

Fattening fatten(const PosetMap& p) {
  const OgPoset& u = p.source();
  const OgPoset& v = p.target();
  const ClosedSubset whole = ClosedSubset::whole(u);
  const auto top = greatest_element(whole);
  const auto vtop = greatest_element(ClosedSubset::whole(v));
  require(top && vtop, "fattening needs a map of atoms");
  require(p.is_surjective(), "fattening needs a surjective map");
  require(u.dim().value_or(-1) == v.dim().value_or(-1) + 1,
          "fattening needs a drop of exactly one dimension");
  Fattening f{inflate(v), {}};
  std::vector<int> a(u.size(), -1);
  a[*top] = f.inflation.quotient.at(2, *vtop);
  for (Sign s : kSigns) {
    boundary(whole, s).members().for_each([&](int x) {
      const int y = f.inflation.incl(s)(p(x));
      if (a[x] >= 0 && a[x] != y) {
        throw Error(ErrorKind::kNotAMap, "input and output boundaries disagree");
      }
      a[x] = y;
    });
  }
  f.map = PosetMap(u, f.inflation.poset(), std::move(a));
  return f;
}

PosetMap folding_a(int n) {
  require(n >= 0, "folding needs n >= 0");
  const OgPoset s = simplex(n);
  std::vector<int> a(s.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    const BitString b = simplex_string(n, static_cast<int>(x));
    int ones = 0;  // trailing ones
    while (ones <= n && b[n - ones]) ++ones;
    int zeros = 0;  // zeros before them
    while (ones + zeros <= n && !b[n - ones - zeros]) ++zeros;
    if (ones == n + 1) {
      a[x] = globe_top(n);  // 1^(n+1)
    } else if (ones + zeros == n + 1) {
      a[x] = globe_index(n - zeros, Sign::kPlus);  // 0^k 1^(n-k+1)
    } else {
      // ... 1 0^k 1^j with k > 0. When j = 0 the string ends in 0 and the
      // pattern is read with the trailing block of ones empty, which is the
      // only reading compatible with the map law (010 goes to 0^-).
      a[x] = globe_index(ones, Sign::kMinus);
    }
  }
  return PosetMap(s, globe(n), std::move(a));
}

PosetMap folding_a_recursive(int n) {
  require(n >= 0, "folding needs n >= 0");
  if (n == 0) return PosetMap::identity(simplex(0));
  const Fattening f = fatten(simplex_degeneracy(n - 1, 0));
  const Inflation target = inflate(globe(n - 1));
  const PosetMap lifted =
      inflate_map(f.inflation, target, folding_a_recursive(n - 1));
  return compose(compose(f.map, lifted), isomorphism(target.poset(), globe(n)));
}

Phi phi(int n) {
  require(n >= 1, "Phi needs n >= 1");
  const OgPoset o = globe(n);
  const PastingResult output = paste(o, o, n - 1);
  const CeltoResult atom = celto(o, output.whole);
  Phi f;
  f.n = n;
  f.poset = atom.atom;
  f.top = atom.top;
  f.input_incl = atom.input_incl;
  f.first_incl = compose(output.left_incl, atom.output_incl);
  f.second_incl = compose(output.right_incl, atom.output_incl);
  f.input = f.input_incl(globe_top(n));
  f.output_first = f.first_incl(globe_top(n));
  f.output_second = f.second_incl(globe_top(n));
  f.middle = f.first_incl(globe_index(n - 1, Sign::kPlus));
  return f;
}

PosetMap folding_c(int n) {
  const Phi f = phi(n);
  const PosetMap a = folding_a(n + 1);
  const OgPoset s = simplex(n + 1);
  // Strings 110 1^(n-1), 011 1^(n-1), 010 1^(n-1) as bits.
  const std::uint32_t tail = ((1u << (n - 1)) - 1u) << 3;
  const std::uint32_t first = 0b011u | tail;
  const std::uint32_t second = 0b110u | tail;
  const std::uint32_t middle = 0b010u | tail;
  std::vector<int> c(s.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    const std::uint32_t bits = simplex_string(n + 1, static_cast<int>(x)).bits();
    if (bits == first) {
      c[x] = f.output_first;
    } else if (bits == second) {
      c[x] = f.output_second;
    } else if (bits == middle) {
      c[x] = f.middle;
    } else {
      const int y = a(static_cast<int>(x));
      if (y == globe_top(n + 1)) {
        c[x] = f.top;
      } else if (y == globe_top(n)) {
        c[x] = f.input;
      } else if (y < globe_top(n)) {
        c[x] = f.input_incl(y);
      } else {
        throw Error(ErrorKind::kNotAMap, "folding lands on the output face");
      }
    }
  }
  return PosetMap(s, f.poset, std::move(c));
}

Compositor compositor(int n, int k) {
  require(k >= 0 && n > k, "compositor needs n > k >= 0");
  static detail::ShapeCache<std::pair<int, int>, std::shared_ptr<const Compositor>>
      cache;
  return *cache.get({n, k}, [n, k] {
    const PastingResult pasted = paste(globe(n), globe(n), k);
    if (n == k + 1) {
      const PosetMap id = PosetMap::identity(pasted.whole);
      return std::make_shared<const Compositor>(
          Compositor{pasted.whole, id, id});
    }
    const Compositor prev = compositor(n - 1, k);
    const Inflation inf = inflate(prev.poset);
    // The previous pasted globes, inside the input boundary of the inflation.
    const ClosedSubset glue_site = apply_map(
        compose(prev.incl, inf.input_incl), ClosedSubset::whole(prev.incl.source()));
    const PastingResult glued =
        paste_along(pasted.whole, inf.poset(), glue_site, Sign::kMinus);
    // O^(n-1) cp_k O^(n-1) as the output boundary of O^n cp_k O^n.
    const PosetMap output = embed_onto(
        prev.incl.source(),
        boundary(ClosedSubset::whole(pasted.whole), Sign::kPlus));
    std::vector<int> r(glued.whole.size(), -1);
    for (std::size_t x = 0; x < pasted.whole.size(); ++x) {
      r[glued.left_incl(static_cast<int>(x))] = static_cast<int>(x);
    }
    const PosetMap down = compose(compose(inf.collapse, prev.retraction), output);
    for (std::size_t y = 0; y < inf.poset().size(); ++y) {
      const int z = glued.right_incl(static_cast<int>(y));
      const int value = down(static_cast<int>(y));
      if (r[z] >= 0 && r[z] != value) {
        throw Error(ErrorKind::kNotAMap, "compositor retraction is inconsistent");
      }
      r[z] = value;
    }
    return std::make_shared<const Compositor>(Compositor{
        glued.whole, glued.left_incl,
        PosetMap(glued.whole, pasted.whole, std::move(r))});
  });
}

}  // namespace rdc
