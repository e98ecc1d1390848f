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

// Collects a map piece by piece and rejects conflicting values.
class Assignment {
 public:
  explicit Assignment(std::size_t size) : values_(size, -1) {}

  void set(int x, int y) {
    if (values_[x] >= 0 && values_[x] != y) {
      throw Error(ErrorKind::kNotAMap,
                  "pieces disagree at element " + std::to_string(x));
    }
    values_[x] = y;
  }
  // Sets piece(x) := value(x) for every element x of the piece's source.
  template <class Value>
  void set_along(const PosetMap& piece, Value value) {
    for (std::size_t x = 0; x < piece.source().size(); ++x) {
      set(piece(static_cast<int>(x)), value(static_cast<int>(x)));
    }
  }
  PosetMap build(const OgPoset& source, const OgPoset& target) {
    for (int v : values_) {
      if (v < 0) throw Error(ErrorKind::kNotAMap, "map left undefined");
    }
    return PosetMap(source, target, std::move(values_));
  }

 private:
  std::vector<int> values_;
};

int top_of(const OgPoset& p) {
  return *greatest_element(ClosedSubset::whole(p));
}

PosetMap isomorphism(const OgPoset& p, const OgPoset& q) {
  auto iso = find_isomorphism(p, q);
  if (!iso) throw Error(ErrorKind::kBoundaryMismatch, "shapes are not isomorphic");
  return *iso;
}

// O^(k-1)(s^0_<): O^(k-1)(Delta^n) -> O^k(Delta^(n-1)), with both towers.
struct Folded {
  InflationTower upper;  // O^i(Delta^n)
  InflationTower lower;  // O^i(Delta^(n-1))
  PosetMap map;
};

Folded folded_degeneracy(int n, int k) {
  Folded f{inflation_tower(simplex(n), k - 1),
           inflation_tower(simplex(n - 1), k + 1), {}};
  const Fattening fat = fatten(simplex_degeneracy(n - 1, 0));
  InflationTower shifted{f.lower.at(1), {}};
  shifted.levels.assign(f.lower.levels.begin() + 1, f.lower.levels.end());
  f.map = iterated_inflate_map(f.upper, shifted, fat.map, k - 1);
  return f;
}

std::shared_ptr<const Extrusion> build_extrusion(int k, int n);

const Extrusion& cached_extrusion(int k, int n) {
  static detail::ShapeCache<std::pair<int, int>, std::shared_ptr<const Extrusion>>
      cache;
  return *cache.get({k, n}, [k, n] { return build_extrusion(k, n); });
}

std::shared_ptr<const Extrusion> build_extrusion(int k, int n) {
  auto e = std::make_shared<Extrusion>();
  e->k = k;
  e->n = n;
  if (k == 0) {
    const Inflation tube = inflate(simplex(n - 1));
    const PosetMap face = simplex_face(n, 0);
    const ClosedSubset site =
        apply_map(face, ClosedSubset::whole(face.source()));
    const PastingResult glued =
        paste_along(tube.poset(), simplex(n), site, Sign::kPlus);
    const PosetMap degeneracy = simplex_degeneracy(n - 1, 0);
    Assignment r(glued.whole.size());
    r.set_along(glued.left_incl, [](int x) { return x; });
    r.set_along(glued.right_incl,
                [&](int y) { return tube.input_incl(degeneracy(y)); });
    e->poset = glued.whole;
    e->j = glued.left_incl;
    e->r = r.build(glued.whole, tube.poset());
    return e;
  }
  const Extrusion& prev = cached_extrusion(k - 1, n);
  const Folded folded = folded_degeneracy(n, k);
  const OgPoset& outer = folded.upper.at(k - 1);       // O^(k-1)(Delta^n)
  const Inflation& tube = folded.lower.levels[k];      // inflates O^k(Delta^(n-1))
  const OgPoset& core = tube.base;

  const CeltoResult in_cell = celto(outer, prev.poset);
  const CeltoResult out_cell = celto(prev.poset, outer);
  const ClosedSubset site = apply_map(compose(prev.j, in_cell.output_incl),
                                      ClosedSubset::whole(core));
  const PastingResult first =
      paste_along(tube.poset(), in_cell.atom, site, Sign::kPlus);
  const PastingResult whole = paste(
      first.whole, out_cell.atom, first.whole.dim().value() - 1);

  const PosetMap in_part = compose(first.right_incl, whole.left_incl);
  const PosetMap out_part = whole.right_incl;
  const int core_top = top_of(core);
  Assignment r(whole.whole.size());
  e->j = compose(first.left_incl, whole.left_incl);
  r.set_along(e->j, [](int x) { return x; });
  for (Sign s : kSigns) {
    const PosetMap& cell_incl = s == Sign::kMinus ? tube.input_incl
                                                  : tube.output_incl;
    const CeltoResult& cell = s == Sign::kMinus ? in_cell : out_cell;
    const PosetMap& part = s == Sign::kMinus ? in_part : out_part;
    const PosetMap& outer_incl =
        s == Sign::kMinus ? cell.input_incl : cell.output_incl;
    const PosetMap& prev_incl =
        s == Sign::kMinus ? cell.output_incl : cell.input_incl;
    r.set(part(cell.top), cell_incl(core_top));
    r.set_along(compose(outer_incl, part),
                [&](int x) { return cell_incl(folded.map(x)); });
    r.set_along(compose(prev_incl, part),
                [&](int y) { return cell_incl(prev.r(y)); });
  }
  e->poset = whole.whole;
  e->r = r.build(whole.whole, tube.poset());
  return e;
}

std::shared_ptr<const TildeExtrusion> build_tilde(int k, int n);

const TildeExtrusion& cached_tilde(int k, int n) {
  static detail::ShapeCache<std::pair<int, int>,
                            std::shared_ptr<const TildeExtrusion>>
      cache;
  return *cache.get({k, n}, [k, n] { return build_tilde(k, n); });
}

std::shared_ptr<const TildeExtrusion> build_tilde(int k, int n) {
  const Extrusion& e = cached_extrusion(k, n);
  auto t = std::make_shared<TildeExtrusion>();
  t->k = k;
  t->n = n;
  if (n == 2) {
    // O^(k+1)(Delta^1) is a globe of dimension k + 2.
    const OgPoset& core = e.j.source();
    const PosetMap to_globe = isomorphism(core, globe(k + 2));
    const PosetMap from_globe = isomorphism(globe(k + 2), core);
    t->poset = e.poset;
    t->globe_incl = compose(from_globe, e.j);
    t->retraction = compose(e.r, to_globe);
    return t;
  }
  const TildeExtrusion& inner = cached_tilde(k + 1, n - 1);
  const ClosedSubset site = apply_map(e.j, ClosedSubset::whole(e.j.source()));
  const SubstitutionResult sub = substitute(e.poset, site, inner.poset);
  std::vector<int> from_whole(sub.whole.size(), -1);
  for (std::size_t w = 0; w < inner.poset.size(); ++w) {
    from_whole[sub.w_incl(static_cast<int>(w))] = static_cast<int>(w);
  }
  Assignment rho(sub.whole.size());
  for (std::size_t w = 0; w < inner.poset.size(); ++w) {
    rho.set(sub.w_incl(static_cast<int>(w)), static_cast<int>(w));
  }
  for (std::size_t x = 0; x < e.poset.size(); ++x) {
    const int z = sub.from_u[x];
    if (z < 0 || from_whole[z] >= 0) continue;
    const int y = sub.from_u[e.j(e.r(static_cast<int>(x)))];
    if (y < 0 || from_whole[y] < 0) {
      throw Error(ErrorKind::kNotAMap,
                  "retraction leaves the boundary of the substituted part");
    }
    rho.set(z, from_whole[y]);
  }
  t->poset = sub.whole;
  t->globe_incl = compose(inner.globe_incl, sub.w_incl);
  t->retraction =
      compose(rho.build(sub.whole, inner.poset), inner.retraction);
  return t;
}

}  // namespace

Extrusion extrusion(int k, int n) {
  require(n > 1 && k >= 0, "extrusion needs n > 1 and k >= 0");
  return cached_extrusion(k, n);
}

TildeExtrusion tilde_extrusion(int k, int n) {
  require(n > 1 && k >= 0, "extrusion needs n > 1 and k >= 0");
  return cached_tilde(k, n);
}

PosetMap simplex_boundary_incl(const TildeExtrusion& e) {
  require(e.k == 0, "only the k = 0 extrusion has the simplex boundary");
  const OgPoset s = simplex(e.n);
  const ClosedSubset rim = boundary(ClosedSubset::whole(s));
  const auto table = match_subsets(rim, boundary(ClosedSubset::whole(e.poset)));
  if (!table) {
    throw Error(ErrorKind::kBoundaryMismatch,
                "extrusion boundary differs from the simplex boundary");
  }
  const Restriction r = restrict_to(rim);
  std::vector<int> a(r.poset.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    a[x] = (*table)[r.inclusion(static_cast<int>(x))];
  }
  return PosetMap(r.poset, e.poset, std::move(a));
}

}  // namespace rdc
