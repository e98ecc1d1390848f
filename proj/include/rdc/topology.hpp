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


#ifndef RDC_TOPOLOGY_HPP_
#define RDC_TOPOLOGY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rdc/ogposet.hpp"
#include "rdc/smith.hpp"

namespace rdc {

// Order complex: strictly increasing chains of elements, each chain listed
// in ascending index order.
struct SimplicialComplex {
  std::vector<int> vertices;
  std::vector<std::vector<std::vector<int>>> simplices;  // by dimension

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(int d) const {
    return d >= 0 && d <= dim() ? simplices[d].size() : 0;
  }
  std::size_t size() const;
};

SimplicialComplex nerve(const OgPoset& p);
SimplicialComplex nerve(const ClosedSubset& u);

// Image of a chain under a map, with repeated elements collapsed.
std::vector<int> chain_image(const PosetMap& f, const std::vector<int>& chain);

// Simplicial chains: boundary[k] maps degree k to degree k - 1. With
// reduced, boundary[0] is the augmentation onto a single generator.
struct ChainComplex {
  std::vector<std::size_t> ranks;  // number of generators per degree
  std::vector<SparseMatrix> boundary;
  bool reduced = false;
};
ChainComplex chain_complex(const SimplicialComplex& k, bool reduced);
bool squares_to_zero(const ChainComplex& c);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};
// Homology in degrees 0 .. dim K. Throws kPrecondition if the boundary
// maps do not compose to zero.
std::vector<HomologyGroup> homology(const SimplicialComplex& k,
                                    bool reduced = false,
                                    const SmithOptions& options = {});

std::int64_t euler(const SimplicialComplex& k);

// Reduced homology of a point: nonempty and acyclic.
bool has_point_homology(const SimplicialComplex& k);
// Reduced homology of the d-sphere; d = -1 means the empty complex.
bool has_sphere_homology(const SimplicialComplex& k, int d);

// For every element x of dimension n, the nerve of the elements strictly
// below x must have the homology of the (n-1)-sphere.
struct CwReport {
  bool ok = true;
  int failing_element = -1;
  std::size_t atoms_checked = 0;
  std::string message;
};
CwReport cw_check(const OgPoset& p);

}  // namespace rdc

#endif  // RDC_TOPOLOGY_HPP_
