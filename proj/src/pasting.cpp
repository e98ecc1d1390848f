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

#include "rdc/construct.hpp"

namespace rdc {
namespace {

struct Glued {
  OgPoset poset;
  std::vector<int> left_index;
  std::vector<int> right_index;
  int top = -1;
};

// Left elements keep their order, then the non-glued right elements; with
// add_top, a greatest element whose input faces are the top-dimensional
// elements of left and output faces those of right.
Glued glue(const OgPoset& left, const OgPoset& right,
           const std::vector<int>& glue_to_left, bool add_top) {
  OgPosetBuilder b;
  const int nl = static_cast<int>(left.size());
  const int nr = static_cast<int>(right.size());
  for (int x = 0; x < nl; ++x) {
    const Element& e = left.element(x);
    b.add(e.dim, e.minus, e.plus);
  }
  std::vector<int> prov(nr, -1);
  for (int y = 0; y < nr; ++y) {
    if (glue_to_left[y] >= 0) prov[y] = glue_to_left[y];
  }
  for (int y = 0; y < nr; ++y) {
    if (prov[y] >= 0) continue;
    const Element& e = right.element(y);
    std::vector<int> minus, plus;
    for (int f : e.minus) minus.push_back(prov[f]);
    for (int f : e.plus) plus.push_back(prov[f]);
    prov[y] = b.add(e.dim, std::move(minus), std::move(plus));
  }
  int top = -1;
  if (add_top) {
    const int n = left.dim().value_or(-1);
    std::vector<int> minus, plus;
    for (int x = left.first_of_dim(n); x < left.end_of_dim(n); ++x) {
      minus.push_back(x);
    }
    for (int y = right.first_of_dim(n); y < right.end_of_dim(n); ++y) {
      plus.push_back(prov[y]);
    }
    top = b.add(n + 1, std::move(minus), std::move(plus));
  }
  auto built = b.build();
  Glued g{built.poset, {}, {}, -1};
  for (int x = 0; x < nl; ++x) g.left_index.push_back(built.final_index[x]);
  for (int y = 0; y < nr; ++y) {
    g.right_index.push_back(built.final_index[prov[y]]);
  }
  if (top >= 0) g.top = built.final_index[top];
  return g;
}

// Joins the two boundary matches into one table, or nullopt if they
// disagree on the overlap.
std::optional<std::vector<int>> merge_tables(const std::vector<int>& a,
                                             const std::vector<int>& b) {
  std::vector<int> out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) continue;
    if (out[i] >= 0 && out[i] != b[i]) return std::nullopt;
    out[i] = b[i];
  }
  return out;
}

// Table from elements of the boundary of `from` to the boundary of `to`,
// matching input with input and output with output.
std::optional<std::vector<int>> match_boundaries(const ClosedSubset& from,
                                                 const ClosedSubset& to) {
  auto minus = match_subsets(boundary(from, Sign::kMinus),
                             boundary(to, Sign::kMinus));
  auto plus =
      match_subsets(boundary(from, Sign::kPlus), boundary(to, Sign::kPlus));
  if (!minus || !plus) return std::nullopt;
  return merge_tables(*minus, *plus);
}

void require_spherical(const OgPoset& p, const char* what) {
  if (!has_spherical_boundary(ClosedSubset::whole(p))) {
    throw Error(ErrorKind::kNotSpherical,
                std::string(what) + " does not have spherical boundary");
  }
}

}  // namespace

PastingResult pushout(const OgPoset& left, const OgPoset& right,
                      const std::vector<int>& glue_to_left, int k) {
  Glued g = glue(left, right, glue_to_left, false);
  return {g.poset, PosetMap(left, g.poset, g.left_index),
          PosetMap(right, g.poset, g.right_index), k};
}

PastingResult paste(const OgPoset& u, const OgPoset& v, int k) {
  auto table = match_subsets(boundary(ClosedSubset::whole(v), Sign::kMinus, k),
                             boundary(ClosedSubset::whole(u), Sign::kPlus, k));
  if (!table) {
    throw Error(ErrorKind::kBoundaryMismatch,
                "output " + std::to_string(k) +
                    "-boundary of the left molecule does not match the input "
                    "boundary of the right one");
  }
  return pushout(u, v, *table, k);
}

PastingResult paste_along(const OgPoset& u1, const OgPoset& u2,
                          const ClosedSubset& v, Sign alpha) {
  const ClosedSubset whole2 = ClosedSubset::whole(u2);
  const ClosedSubset side = boundary(whole2, alpha);
  if (!(v.parent() == u2) || !v.is_subset_of(side) ||
      !find_submolecule(v, side)) {
    throw Error(ErrorKind::kNotASubmolecule,
                "gluing region is not a submolecule of the boundary");
  }
  auto table = match_subsets(v, boundary(ClosedSubset::whole(u1), flip(alpha)));
  if (!table) {
    throw Error(ErrorKind::kBoundaryMismatch,
                "gluing region does not match the boundary of the pasted "
                "molecule");
  }
  return pushout(u1, u2, *table, u2.dim().value_or(0) - 1);
}

SubstitutionResult substitute(const OgPoset& u, const ClosedSubset& v,
                              const OgPoset& w) {
  if (!(v.parent() == u)) {
    throw Error(ErrorKind::kNotASubmolecule, "V is not a subset of U");
  }
  if (u.dim() != v.dim() || u.dim() != w.dim()) {
    throw Error(ErrorKind::kPrecondition, "dimensions of U, V, W differ");
  }
  if (!has_spherical_boundary(v)) {
    throw Error(ErrorKind::kNotSpherical, "V does not have spherical boundary");
  }
  require_spherical(w, "W");
  if (!find_submolecule(v, ClosedSubset::whole(u))) {
    throw Error(ErrorKind::kNotASubmolecule, "V is not a submolecule of U");
  }
  // From the boundary of W to the boundary of V.
  auto table = match_boundaries(ClosedSubset::whole(w), v);
  if (!table) {
    throw Error(ErrorKind::kBoundaryMismatch,
                "boundaries of V and W are not isomorphic");
  }
  const Bitset interior = v.members() - boundary(v).members();
  const ClosedSubset rest(u, u.all_elements() - interior);
  Restriction r = restrict_to(rest);
  std::vector<int> to_rest(u.size(), -1);
  for (std::size_t i = 0; i < r.poset.size(); ++i) {
    to_rest[r.inclusion(i)] = static_cast<int>(i);
  }
  std::vector<int> glue_to_rest(w.size(), -1);
  for (std::size_t y = 0; y < w.size(); ++y) {
    if ((*table)[y] >= 0) glue_to_rest[y] = to_rest[(*table)[y]];
  }
  PastingResult pr = pushout(r.poset, w, glue_to_rest, -1);
  std::vector<int> from_u(u.size(), -1);
  for (std::size_t i = 0; i < r.poset.size(); ++i) {
    from_u[r.inclusion(i)] = pr.left_incl(i);
  }
  return {pr.whole, pr.right_incl, std::move(from_u)};
}

PosetMap embed_onto(const OgPoset& source, const ClosedSubset& image) {
  auto table = match_subsets(ClosedSubset::whole(source), image);
  if (!table) {
    throw Error(ErrorKind::kBoundaryMismatch,
                "subset is not isomorphic to the source");
  }
  return PosetMap(source, image.parent(), std::move(*table));
}

CeltoResult celto(const OgPoset& u, const OgPoset& v) {
  if (u.empty() || v.empty() || u.dim() != v.dim()) {
    throw Error(ErrorKind::kPrecondition,
                "celto needs nonempty molecules of equal dimension");
  }
  require_spherical(u, "input");
  require_spherical(v, "output");
  std::vector<int> table(v.size(), -1);
  if (*u.dim() > 0) {
    auto m = match_boundaries(ClosedSubset::whole(v), ClosedSubset::whole(u));
    if (!m) {
      throw Error(ErrorKind::kBoundaryMismatch,
                  "input and output are not parallel");
    }
    table = std::move(*m);
  }
  Glued g = glue(u, v, table, true);
  return {g.poset, PosetMap(u, g.poset, g.left_index),
          PosetMap(v, g.poset, g.right_index), g.top};
}

CeltoResult compos(const OgPoset& u) {
  require_spherical(u, "molecule");
  const ClosedSubset whole = ClosedSubset::whole(u);
  return celto(restrict_to(boundary(whole, Sign::kMinus)).poset,
               restrict_to(boundary(whole, Sign::kPlus)).poset);
}

}  // namespace rdc
