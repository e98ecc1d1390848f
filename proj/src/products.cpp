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

#include "rdc/construct.hpp"

namespace rdc {

GrayProduct gray_product(const OgPoset& p, const OgPoset& q) {
  const int np = static_cast<int>(p.size());
  const int nq = static_cast<int>(q.size());
  OgPosetBuilder b;
  auto id = [&](int x, int y) { return x * nq + y; };
  for (int x = 0; x < np; ++x) {
    const int dx = p.dim_of(x);
    for (int y = 0; y < nq; ++y) {
      std::vector<int> faces[2];
      for (Sign s : kSigns) {
        for (int f : p.faces(x, s)) faces[static_cast<int>(s)].push_back(id(f, y));
        // The second factor's orientation is twisted by (-)^dim x.
        for (int f : q.faces(y, sign_power(dx, s))) {
          faces[static_cast<int>(s)].push_back(id(x, f));
        }
      }
      b.add(dx + q.dim_of(y), std::move(faces[0]), std::move(faces[1]));
    }
  }
  auto built = b.build();
  GrayProduct g;
  g.poset = built.poset;
  g.right_size = nq;
  g.index = std::move(built.final_index);
  g.factors.resize(g.index.size());
  for (int x = 0; x < np; ++x) {
    for (int y = 0; y < nq; ++y) g.factors[g.index[id(x, y)]] = {x, y};
  }
  return g;
}

OgPoset gray(const OgPoset& p, const OgPoset& q) {
  return gray_product(p, q).poset;
}

PosetMap gray_map(const PosetMap& f, const PosetMap& g) {
  const GrayProduct src = gray_product(f.source(), g.source());
  const GrayProduct tgt = gray_product(f.target(), g.target());
  std::vector<int> a(src.poset.size());
  for (std::size_t z = 0; z < a.size(); ++z) {
    auto [x, y] = src.factors[z];
    a[z] = tgt.at(f(x), g(y));
  }
  return PosetMap(src.poset, tgt.poset, std::move(a));
}

ClosedSubset gray_subset(const GrayProduct& g, const ClosedSubset& u,
                         const ClosedSubset& v) {
  Bitset s(g.poset.size());
  u.members().for_each([&](int x) {
    v.members().for_each([&](int y) { s.set(g.at(x, y)); });
  });
  return make_closed_unchecked(g.poset, std::move(s));
}

bool gray_boundary_check(const ClosedSubset& u, const ClosedSubset& v, int k,
                         Sign alpha) {
  const GrayProduct g = gray_product(u.parent(), v.parent());
  const ClosedSubset lhs = boundary(gray_subset(g, u, v), alpha, k);
  ClosedSubset rhs = ClosedSubset::none(g.poset);
  for (int i = 0; i <= k; ++i) {
    rhs = rhs | gray_subset(g, boundary(u, alpha, i),
                            boundary(v, sign_power(i, alpha), k - i));
  }
  return lhs == rhs;
}

Suspension suspension(const OgPoset& p) {
  OgPosetBuilder b;
  const int bm = b.add(0, {}, {});
  const int bp = b.add(0, {}, {});
  const int offset = 2;
  for (int x = 0; x < static_cast<int>(p.size()); ++x) {
    const Element& e = p.element(x);
    std::vector<int> minus, plus;
    if (e.dim == 0) {
      minus = {bm};
      plus = {bp};
    } else {
      for (int f : e.minus) minus.push_back(f + offset);
      for (int f : e.plus) plus.push_back(f + offset);
    }
    b.add(e.dim + 1, std::move(minus), std::move(plus));
  }
  auto built = b.build();
  Suspension s;
  s.poset = built.poset;
  s.bottom_minus = built.final_index[bm];
  s.bottom_plus = built.final_index[bp];
  for (std::size_t x = 0; x < p.size(); ++x) {
    s.image.push_back(built.final_index[x + offset]);
  }
  return s;
}

OgPoset suspend(const OgPoset& p) { return suspension(p).poset; }

PosetMap suspend_map(const PosetMap& f) {
  const Suspension src = suspension(f.source());
  const Suspension tgt = suspension(f.target());
  std::vector<int> a(src.poset.size());
  a[src.bottom_minus] = tgt.bottom_minus;
  a[src.bottom_plus] = tgt.bottom_plus;
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    a[src.image[x]] = tgt.image[f(x)];
  }
  return PosetMap(src.poset, tgt.poset, std::move(a));
}

JoinProduct join_product(const OgPoset& p, const OgPoset& q) {
  // (P * Q) with a bottom added is the Gray product of P and Q with bottoms
  // added, where every point covers the bottom with sign +.
  const int np = static_cast<int>(p.size());
  const int nq = static_cast<int>(q.size());
  OgPosetBuilder b;
  std::vector<int> right(nq), left(np), pair(np * nq);
  for (int y = 0; y < nq; ++y) {
    const Element& e = q.element(y);
    right[y] = b.add(e.dim, e.minus, e.plus);
  }
  for (int x = 0; x < np; ++x) {
    const Element& e = p.element(x);
    std::vector<int> minus, plus;
    for (int f : e.minus) minus.push_back(f + nq);
    for (int f : e.plus) plus.push_back(f + nq);
    left[x] = b.add(e.dim, std::move(minus), std::move(plus));
  }
  auto pid = [&](int x, int y) { return np + nq + x * nq + y; };
  for (int x = 0; x < np; ++x) {
    const int dx = p.dim_of(x);
    for (int y = 0; y < nq; ++y) {
      const int dy = q.dim_of(y);
      std::vector<int> faces[2];
      for (Sign s : kSigns) {
        auto& out = faces[static_cast<int>(s)];
        for (int f : p.faces(x, s)) out.push_back(pid(f, y));
        // Twist by (-)^(dim x + 1), the dimension of x once a bottom is added.
        for (int f : q.faces(y, sign_power(dx + 1, s))) out.push_back(pid(x, f));
      }
      if (dx == 0) faces[static_cast<int>(Sign::kPlus)].push_back(right[y]);
      if (dy == 0) {
        faces[static_cast<int>(sign_power(dx + 1, Sign::kPlus))].push_back(
            left[x]);
      }
      pair[x * nq + y] = b.add(dx + dy + 1, std::move(faces[0]),
                               std::move(faces[1]));
    }
  }
  auto built = b.build();
  JoinProduct j;
  j.poset = built.poset;
  j.right_size = nq;
  for (int x : left) j.left.push_back(built.final_index[x]);
  for (int y : right) j.right.push_back(built.final_index[y]);
  for (int z : pair) j.pair.push_back(built.final_index[z]);
  return j;
}

OgPoset join(const OgPoset& p, const OgPoset& q) {
  return join_product(p, q).poset;
}

ClosedSubset join_subset(const JoinProduct& j, const ClosedSubset& u,
                         const ClosedSubset& v) {
  Bitset s(j.poset.size());
  u.members().for_each([&](int x) {
    s.set(j.left[x]);
    v.members().for_each([&](int y) { s.set(j.at(x, y)); });
  });
  v.members().for_each([&](int y) { s.set(j.right[y]); });
  return make_closed_unchecked(j.poset, std::move(s));
}

bool join_boundary_check(const ClosedSubset& u, const ClosedSubset& v, int k,
                         Sign alpha) {
  const JoinProduct j = join_product(u.parent(), v.parent());
  const ClosedSubset none_u = ClosedSubset::none(u.parent());
  const ClosedSubset none_v = ClosedSubset::none(v.parent());
  const ClosedSubset lhs = boundary(join_subset(j, u, v), alpha, k);
  ClosedSubset rhs = ClosedSubset::none(j.poset);
  const bool even = k % 2 == 0;
  if (alpha == Sign::kMinus) {
    if (even) rhs = rhs | join_subset(j, boundary(u, Sign::kMinus, k), none_v);
    for (int i = 1; i <= k; ++i) {
      rhs = rhs | join_subset(j, boundary(u, Sign::kMinus, i - 1),
                              boundary(v, flip(sign_power(i, Sign::kPlus)),
                                       k - i));
    }
  } else {
    rhs = rhs | join_subset(j, none_u, boundary(v, Sign::kPlus, k));
    if (!even) rhs = rhs | join_subset(j, boundary(u, Sign::kPlus, k), none_v);
    for (int i = 1; i <= k; ++i) {
      rhs = rhs | join_subset(j, boundary(u, Sign::kPlus, i - 1),
                              boundary(v, sign_power(i, Sign::kPlus), k - i));
    }
  }
  return lhs == rhs;
}

std::vector<int> join_embedding(const JoinProduct& j, const Suspension& sp,
                                const Suspension& sq, const GrayProduct& g) {
  std::vector<int> out(j.poset.size(), -1);
  for (std::size_t x = 0; x < j.left.size(); ++x) {
    out[j.left[x]] = g.at(sp.image[x], sq.bottom_plus);
  }
  for (std::size_t y = 0; y < j.right.size(); ++y) {
    out[j.right[y]] = g.at(sp.bottom_plus, sq.image[y]);
  }
  for (std::size_t x = 0; x < j.left.size(); ++x) {
    for (std::size_t y = 0; y < j.right.size(); ++y) {
      out[j.at(x, y)] = g.at(sp.image[x], sq.image[y]);
    }
  }
  return out;
}

Duality Duality::of(std::set<int> dims) {
  Duality d;
  d.dims_ = std::move(dims);
  return d;
}
Duality Duality::odd() {
  Duality d;
  d.kind_ = Kind::kOdd;
  return d;
}
Duality Duality::even() {
  Duality d;
  d.kind_ = Kind::kEven;
  return d;
}
Duality Duality::all() {
  Duality d;
  d.kind_ = Kind::kAll;
  return d;
}

bool Duality::contains(int d) const {
  if (d <= 0) return false;
  switch (kind_) {
    case Kind::kSet: return dims_.count(d) > 0;
    case Kind::kOdd: return d % 2 == 1;
    case Kind::kEven: return d % 2 == 0;
    case Kind::kAll: return true;
  }
  return false;
}

OgPoset dual(const OgPoset& p, const Duality& j) {
  std::vector<Element> elems = p.elements();
  for (Element& e : elems) {
    if (j.contains(e.dim)) std::swap(e.minus, e.plus);
  }
  return validate(std::move(elems));
}

OgPoset op(const OgPoset& p) { return dual(p, Duality::odd()); }
OgPoset co(const OgPoset& p) { return dual(p, Duality::even()); }

PosetMap dual_map(const PosetMap& f, const Duality& j) {
  return PosetMap(dual(f.source(), j), dual(f.target(), j), f.assignment());
}

}  // namespace rdc
