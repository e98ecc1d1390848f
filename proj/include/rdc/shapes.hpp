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


#ifndef RDC_SHAPES_HPP_
#define RDC_SHAPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rdc/construct.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

// Globes. Elements of O^n are k^- = 2k, k^+ = 2k + 1 for k < n, and the
// top element n = 2n.
OgPoset globe(int n);
int globe_index(int k, Sign s);
int globe_top(int n);

// String b_0 ... b_n of bits, not all zero, naming an element of the
// n-simplex. Bit i is vertex i.
class BitString {
 public:
  BitString() = default;
  BitString(int length, std::uint32_t bits) : length_(length), bits_(bits) {}
  // Parses "0110"; throws kParse.
  static BitString parse(const std::string& text);

  int length() const { return length_; }
  std::uint32_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1u; }
  int dim() const;
  // Position of the last 1.
  int last() const;
  std::string str() const;

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  int length_ = 0;
  std::uint32_t bits_ = 0;
};

// Delta^n = 1 * Delta^(n-1); within each dimension the elements appear in
// ascending lexicographic order of their bit strings.
OgPoset simplex(int n);
int simplex_index(int n, const BitString& b);
BitString simplex_string(int n, int index);

// cube(n) = O^1 (x) cube(n - 1).
OgPoset cube(int n);

// The simplex map induced by a monotone function [n] -> [m].
PosetMap simplex_map(int n, int m, const std::vector<int>& vertices);
// Coface d^k: Delta^(n-1) -> Delta^n, skipping vertex k.
PosetMap simplex_face(int n, int k);
// Codegeneracy s^k: Delta^(n+1) -> Delta^n, hitting vertex k twice.
PosetMap simplex_degeneracy(int n, int k);

// The horn of U at the codimension-1 atom V: the boundary of U without the
// interior of V.
struct Horn {
  ClosedSubset subset;
  PosetMap inclusion;
};
Horn horn(const OgPoset& u, const ClosedSubset& v);

// Vertex index of the last 1 in each element of Delta^n.
std::vector<int> last_vertex(int n);

// All maps of oriented graded posets from U to V, in lexicographic order of
// their assignments.
std::vector<PosetMap> enumerate_maps(const OgPoset& u, const OgPoset& v);

// ---------------------------------------------------------------------------
// Inflations and foldings.

// O^k(U) with the inflation at each level: levels[i] inflates O^i(U).
struct InflationTower {
  OgPoset base;
  std::vector<Inflation> levels;

  const OgPoset& at(int k) const {
    return k == 0 ? base : levels[k - 1].poset();
  }
};
InflationTower inflation_tower(const OgPoset& u, int k);
// O^k(p) for a surjection of equal-dimensional atoms.
PosetMap iterated_inflate_map(const InflationTower& src,
                              const InflationTower& tgt, const PosetMap& p,
                              int k);

// p_< : U -> inflation of V, for a surjection p of atoms dropping dimension
// by one.
struct Fattening {
  Inflation inflation;
  PosetMap map;
};
Fattening fatten(const PosetMap& p);

// a_n: Delta^n -> O^n from the closed form on bit strings.
PosetMap folding_a(int n);
// a_n as s^0_< followed by the inflation of a_(n-1).
PosetMap folding_a_recursive(int n);

// Phi^(n+1) = O^n => (O^n cp_(n-1) O^n), with its named elements.
struct Phi {
  int n = 0;
  OgPoset poset;
  int top = -1;
  int input = -1;  // the single input face
  int output_first = -1;
  int output_second = -1;
  int middle = -1;     // between the two output faces
  PosetMap input_incl;  // O^n onto the input boundary
  PosetMap first_incl;
  PosetMap second_incl;
};
// Requires n >= 1; builds Phi^(n+1).
Phi phi(int n);
// c_(n+1): Delta^(n+1) -> Phi^(n+1).
PosetMap folding_c(int n);

// C_(n,k) with its inclusion of O^n cp_k O^n and retraction onto it.
struct Compositor {
  OgPoset poset;
  PosetMap incl;
  PosetMap retraction;
};
Compositor compositor(int n, int k);

// E^k_n with j_(k,n): O^(k+1)(Delta^(n-1)) -> E and r_(k,n) back.
struct Extrusion {
  int k = 0;
  int n = 0;
  OgPoset poset;
  PosetMap j;
  PosetMap r;
};
Extrusion extrusion(int k, int n);

// The tilde version, with the inclusion of the globe O^(k+n) and the
// composite retraction r' onto it.
struct TildeExtrusion {
  int k = 0;
  int n = 0;
  OgPoset poset;
  PosetMap globe_incl;
  PosetMap retraction;
};
TildeExtrusion tilde_extrusion(int k, int n);

// Inclusion of the boundary of Delta^n into the tilde extrusion (0, n)
// through the isomorphism of boundaries.
PosetMap simplex_boundary_incl(const TildeExtrusion& e);

}  // namespace rdc

#endif  // RDC_SHAPES_HPP_
