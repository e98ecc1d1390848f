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

#ifndef RDC_CONSTRUCT_HPP_
#define RDC_CONSTRUCT_HPP_

#include <set>
#include <utility>
#include <vector>

#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

// Results of gluing are labelled left part first, then the non-glued right
// part, each in source order, then stable-sorted by dimension.
struct PastingResult {
  OgPoset whole;
  PosetMap left_incl;
  PosetMap right_incl;
  int k = -1;
};

// Pushout of two posets along a partial identification: glue[y] is the
// element of left that y in right is identified with, or -1.
PastingResult pushout(const OgPoset& left, const OgPoset& right,
                      const std::vector<int>& glue, int k);

// U cp_k V. Throws kBoundaryMismatch unless the output k-boundary of U is
// isomorphic to the input k-boundary of V.
PastingResult paste(const OgPoset& u, const OgPoset& v, int k);

// Pastes u1 onto u2 along v, a submolecule of the alpha-boundary of u2
// isomorphic to the (-alpha)-boundary of u1. Left part is u1.
PastingResult paste_along(const OgPoset& u1, const OgPoset& u2,
                          const ClosedSubset& v, Sign alpha);

struct SubstitutionResult {
  OgPoset whole;
  PosetMap w_incl;
  // Index in whole of each element of U outside the interior of V, else -1.
  std::vector<int> from_u;
};
// U[W/V]. Throws kNotSpherical, kBoundaryMismatch or kNotASubmolecule.
SubstitutionResult substitute(const OgPoset& u, const ClosedSubset& v,
                              const OgPoset& w);

struct CeltoResult {
  OgPoset atom;
  PosetMap input_incl;
  PosetMap output_incl;
  int top = -1;
};
// The inclusion of `source` with image `image`, through the unique
// isomorphism. Throws kBoundaryMismatch if they are not isomorphic.
PosetMap embed_onto(const OgPoset& source, const ClosedSubset& image);

// The atom U => V. Throws kNotSpherical or kBoundaryMismatch.
CeltoResult celto(const OgPoset& u, const OgPoset& v);
// <U> = (input boundary) => (output boundary).
CeltoResult compos(const OgPoset& u);

// ---------------------------------------------------------------------------
// Products.

struct GrayProduct {
  OgPoset poset;
  std::size_t right_size = 0;
  std::vector<int> index;                    // index[x * right_size + y]
  std::vector<std::pair<int, int>> factors;  // by product index

  int at(int x, int y) const { return index[x * right_size + y]; }
};
GrayProduct gray_product(const OgPoset& p, const OgPoset& q);
OgPoset gray(const OgPoset& p, const OgPoset& q);
// f (x) g between the products of sources and targets.
PosetMap gray_map(const PosetMap& f, const PosetMap& g);
ClosedSubset gray_subset(const GrayProduct& g, const ClosedSubset& u,
                         const ClosedSubset& v);
// Compares the k-boundary of U (x) V with the union of products of
// boundaries of the factors.
bool gray_boundary_check(const ClosedSubset& u, const ClosedSubset& v, int k,
                         Sign alpha);

struct Suspension {
  OgPoset poset;
  int bottom_minus = 0;
  int bottom_plus = 1;
  std::vector<int> image;  // x -> index of its suspension
};
Suspension suspension(const OgPoset& p);
OgPoset suspend(const OgPoset& p);
PosetMap suspend_map(const PosetMap& f);

struct JoinProduct {
  OgPoset poset;
  std::size_t right_size = 0;
  std::vector<int> left;   // x -> index of x
  std::vector<int> right;  // y -> index of y
  std::vector<int> pair;   // pair[x * right_size + y] -> index of x * y

  int at(int x, int y) const { return pair[x * right_size + y]; }
};
JoinProduct join_product(const OgPoset& p, const OgPoset& q);
OgPoset join(const OgPoset& p, const OgPoset& q);
ClosedSubset join_subset(const JoinProduct& j, const ClosedSubset& u,
                         const ClosedSubset& v);
bool join_boundary_check(const ClosedSubset& u, const ClosedSubset& v, int k,
                         Sign alpha);
// Embedding of P * Q into (suspension P) (x) (suspension Q): the empty
// element goes to the output bottom point.
std::vector<int> join_embedding(const JoinProduct& j, const Suspension& sp,
                                const Suspension& sq, const GrayProduct& g);

// A set J of positive dimensions whose elements get their faces' signs
// flipped.
class Duality {
 public:
  static Duality of(std::set<int> dims);
  static Duality odd();
  static Duality even();
  static Duality all();
  bool contains(int d) const;

 private:
  enum class Kind { kSet, kOdd, kEven, kAll };
  Kind kind_ = Kind::kSet;
  std::set<int> dims_;
};
OgPoset dual(const OgPoset& p, const Duality& j);
OgPoset op(const OgPoset& p);
OgPoset co(const OgPoset& p);
// The same function between the duals.
PosetMap dual_map(const PosetMap& f, const Duality& j);

// ---------------------------------------------------------------------------
// Cylinders.

// O^1 (x) P with the three copies of each element of V identified.
struct CylinderQuotient {
  OgPoset poset;
  GrayProduct cylinder;
  PosetMap quotient;

  // Class of (a, x) with a in {0: input end, 1: output end, 2: interval}.
  int at(int a, int x) const { return quotient(cylinder.at(a, x)); }
};
CylinderQuotient cylinder_quotient(const OgPoset& p, const ClosedSubset& v);

// The inflation of U: the cylinder on U collapsed along its boundary.
struct Inflation {
  OgPoset base;
  CylinderQuotient quotient;
  PosetMap collapse;     // onto the base
  PosetMap input_incl;   // base into the input boundary
  PosetMap output_incl;  // base into the output boundary

  const OgPoset& poset() const { return quotient.poset; }
  const PosetMap& incl(Sign s) const {
    return s == Sign::kMinus ? input_incl : output_incl;
  }
};
// Throws kNotSpherical.
Inflation inflate(const OgPoset& u);
// The map induced on inflations by a surjection p of equal-dimensional
// atoms, where src and tgt inflate p's source and target.
PosetMap inflate_map(const Inflation& src, const Inflation& tgt,
                     const PosetMap& p);

enum class UnitorSide { kLeft, kRight };
struct UnitorShape {
  OgPoset shape;
  PosetMap retraction;
};
// Left shapes need V inside the input boundary of U, right shapes the output.
UnitorShape unitor_shape(const OgPoset& u, const ClosedSubset& v,
                         UnitorSide side, Sign sign);

// The reverse of a surjection p: U -> V with dim U > dim V, as a map out of
// the top-dimensional dual of U.
PosetMap reverse_map(const PosetMap& p);

}  // namespace rdc

#endif  // RDC_CONSTRUCT_HPP_
