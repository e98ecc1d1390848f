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

#include <string>
#include <vector>

#include "rdc/construct.hpp"
#include "rdc/error.hpp"

namespace rdc {

namespace {

// The cylinder O^1 (x) P, with O^1 labelled 0: input end, 1: output end,
// 2: interval.
OgPoset interval() {
  return validate({{0, {}, {}}, {0, {}, {}}, {1, {0}, {1}}});
}

// Sends each class of the quotient to the underlying element of P.
PosetMap projection(const CylinderQuotient& c, const OgPoset& p) {
  std::vector<int> a(c.poset.size(), -1);
  for (std::size_t z = 0; z < c.cylinder.factors.size(); ++z) {
    a[c.quotient(z)] = c.cylinder.factors[z].second;
  }
  return PosetMap(c.poset, p, std::move(a));
}

}  // namespace

CylinderQuotient cylinder_quotient(const OgPoset& p, const ClosedSubset& v) {
  if (!v.parent().same_object(p) && v.parent() != p) {
    throw Error(ErrorKind::kPrecondition, "V is not a subset of P");
  }
  CylinderQuotient c;
  c.cylinder = gray_product(interval(), p);
  const GrayProduct& g = c.cylinder;
  const int size = static_cast<int>(g.poset.size());

  // Representative of each cylinder element: (0, x) for x in V.
  std::vector<int> rep(size);
  for (int z = 0; z < size; ++z) {
    auto [a, x] = g.factors[z];
    rep[z] = v.contains(x) ? g.at(0, x) : z;
  }
  std::vector<int> provisional(size, -1);
  int classes = 0;
  for (int z = 0; z < size; ++z) {
    if (rep[z] == z) provisional[z] = classes++;
  }
  OgPosetBuilder b;
  for (int z = 0; z < size; ++z) {
    if (rep[z] != z) continue;
    const int d = g.poset.dim_of(z);
    std::vector<int> faces[2];
    for (Sign s : kSigns) {
      for (int f : g.poset.faces(z, s)) {
        const int r = rep[f];
        if (g.poset.dim_of(r) != d - 1) continue;
        faces[static_cast<int>(s)].push_back(provisional[r]);
      }
    }
    b.add(d, std::move(faces[0]), std::move(faces[1]));
  }
  auto built = b.build();
  c.poset = built.poset;
  std::vector<int> q(size);
  for (int z = 0; z < size; ++z) q[z] = built.final_index[provisional[rep[z]]];
  c.quotient = PosetMap(g.poset, c.poset, std::move(q));
  return c;
}

Inflation inflate(const OgPoset& u) {
  const ClosedSubset whole = ClosedSubset::whole(u);
  if (!is_molecule(whole)) {
    throw Error(ErrorKind::kNotAMolecule, "cannot inflate a non-molecule");
  }
  if (!has_spherical_boundary(whole)) {
    throw Error(ErrorKind::kNotSpherical,
                "cannot inflate a molecule without spherical boundary");
  }
  Inflation inf;
  inf.base = u;
  inf.quotient = cylinder_quotient(u, boundary(whole));
  inf.collapse = projection(inf.quotient, u);
  std::vector<int> in(u.size()), out(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) {
    in[x] = inf.quotient.at(0, static_cast<int>(x));
    out[x] = inf.quotient.at(1, static_cast<int>(x));
  }
  inf.input_incl = PosetMap(u, inf.poset(), std::move(in));
  inf.output_incl = PosetMap(u, inf.poset(), std::move(out));
  return inf;
}

PosetMap inflate_map(const Inflation& src, const Inflation& tgt,
                     const PosetMap& p) {
  const GrayProduct& g = src.quotient.cylinder;
  std::vector<int> a(src.poset().size(), -1);
  for (std::size_t z = 0; z < g.factors.size(); ++z) {
    auto [i, x] = g.factors[z];
    a[src.quotient.quotient(z)] = tgt.quotient.at(i, p(x));
  }
  return PosetMap(src.poset(), tgt.poset(), std::move(a));
}

UnitorShape unitor_shape(const OgPoset& u, const ClosedSubset& v,
                         UnitorSide side, Sign sign) {
  const ClosedSubset whole = ClosedSubset::whole(u);
  const int n = u.dim().value_or(-1);
  if (v.dim().value_or(-1) + 1 != n) {
    throw Error(ErrorKind::kPrecondition,
                "V must have dimension one less than U");
  }
  const Sign where = side == UnitorSide::kLeft ? Sign::kMinus : Sign::kPlus;
  if (!has_spherical_boundary(whole) || !has_spherical_boundary(v)) {
    throw Error(ErrorKind::kNotSpherical, "unitor inputs need spherical boundary");
  }
  if (!find_submolecule(v, boundary(whole, where))) {
    throw Error(ErrorKind::kNotASubmolecule,
                std::string("V is not a submolecule of the ") +
                    (where == Sign::kMinus ? "input" : "output") +
                    " boundary");
  }
  // W is the boundary of U minus the interior of V.
  Bitset w = boundary(whole).members();
  w -= v.members() - boundary(v).members();
  const CylinderQuotient c =
      cylinder_quotient(u, make_closed_unchecked(u, std::move(w)));
  UnitorShape shape{c.poset, projection(c, u)};
  // The left shape is natural with sign +, the right one with sign -.
  const Sign natural = side == UnitorSide::kLeft ? Sign::kPlus : Sign::kMinus;
  if (sign == natural) return shape;
  const PosetMap rev = reverse_map(shape.retraction);
  return {rev.source(), rev};
}

PosetMap reverse_map(const PosetMap& p) {
  const OgPoset& u = p.source();
  const int n = u.dim().value_or(-1);
  if (n <= 0 || p.target().dim().value_or(-1) >= n || !p.is_surjective()) {
    throw Error(ErrorKind::kPrecondition,
                "reverse needs a dimension-lowering surjection");
  }
  // The top-dimensional dual swaps the two boundaries, and the reverse sends
  // each side to where p sent the other: as functions they coincide.
  return PosetMap(dual(u, Duality::of({n})), p.target(), p.assignment());
}

}  // namespace rdc
