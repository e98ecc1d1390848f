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

#ifndef RDC_MOLECULE_HPP_
#define RDC_MOLECULE_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc {

struct MoleculeCert;
using CertPtr = std::shared_ptr<const MoleculeCert>;

// Either an atom (top >= 0) or a pasting of two certified molecules along
// their k-boundaries.
struct MoleculeCert {
  ClosedSubset subset;
  int top = -1;
  CertPtr left;
  CertPtr right;
  int k = -1;

  bool is_atom() const { return top >= 0; }
};

// Recognises molecules inside one fixed poset, memoising every subset it
// has decided. Not thread-safe; use one instance per thread.
class MoleculeRecognizer {
 public:
  explicit MoleculeRecognizer(OgPoset p);

  const OgPoset& poset() const { return p_; }

  // Null when u is not a molecule.
  CertPtr recognize(const Bitset& u);

  // Visits every decomposition u = left cp_k right with both sides proper
  // molecules, in tie-break order (left part ascending). The visitor returns
  // true to stop.
  void for_each_split(const Bitset& u, int k,
                      const std::function<bool(const CertPtr&, const CertPtr&)>&
                          visit);

 private:
  // Visits candidate splits satisfying the set equations, before the
  // recursive molecule test.
  void for_each_candidate(const Bitset& u, int k,
                          const std::function<bool(Bitset, Bitset)>& visit);

  OgPoset p_;
  std::vector<Bitset> closures_;
  std::unordered_map<Bitset, CertPtr, BitsetHash> memo_;
};

CertPtr is_molecule(const ClosedSubset& u);
CertPtr is_molecule(const OgPoset& p);

// Recomputes every node's set equations from scratch.
bool verify_certificate(const MoleculeCert& cert);

bool is_atom(const ClosedSubset& u);

struct Decomposition {
  std::vector<ClosedSubset> parts;
  int k = -1;
};
// U = V1 cp_k ... cp_k Vm with exactly one maximal element of dimension > k
// in each part, k the gluing dimension of the certificate's root.
Decomposition toplevel_decomposition(const MoleculeCert& cert);
// The same with k = dim U - 1: one top-dimensional element per part.
Decomposition codim_one_decomposition(const MoleculeCert& cert);
// Checks that the parts paste back to `whole` in sequence.
bool recomposes(const Decomposition& d, const ClosedSubset& whole);

// For all k < dim U: the intersection of the two k-boundaries is the
// (k-1)-boundary.
bool has_spherical_boundary(const ClosedSubset& u);
bool has_spherical_boundary(const MoleculeCert& cert);

// Index of the first element whose atom breaks regularity, if any.
std::optional<int> first_irregular_element(const OgPoset& p);
bool is_regular_complex(const OgPoset& p);

// Acyclicity of the Hasse diagram with input edges reversed.
bool is_totally_loop_free(const ClosedSubset& u);
bool is_totally_loop_free(const OgPoset& p);

struct SubmoleculeStep {
  ClosedSubset whole;
  ClosedSubset left;
  ClosedSubset right;
  int k = -1;
  bool into_left = true;
};
// Chain of decompositions from u down to v; empty when v == u. Requires both
// to be molecules of the same poset.
std::optional<std::vector<SubmoleculeStep>> find_submolecule(
    const ClosedSubset& v, const ClosedSubset& u);

struct ClassTag {
  bool spherical_boundary = false;
  bool totally_loop_free = false;
  bool regular_ambient = false;
};
ClassTag classify(const MoleculeCert& cert);

// Every molecule of p, generated from its atoms by closing under pasting.
// Stops once `limit` molecules are found.
std::vector<ClosedSubset> molecules_of(const OgPoset& p, std::size_t limit);

}  // namespace rdc

#endif  // RDC_MOLECULE_HPP_
