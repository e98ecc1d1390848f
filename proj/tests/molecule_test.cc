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


#include <functional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "rdc/construct.hpp"
#include "rdc/corpus.hpp"
#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"
#include "rdc/shapes.hpp"

namespace rdc {
namespace {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = gen_corpus(0);
  return c;
}

ClosedSubset whole(const OgPoset& p) { return ClosedSubset::whole(p); }

// Re-checks a certificate tree against the reference boundary.
bool tree_ok(const oracle::Order& ord, const MoleculeCert& cert) {
  const oracle::Set u = oracle::from_bits(cert.subset.members());
  if (!ord.closed(u)) return false;
  if (cert.is_atom()) {
    return ord.closure(oracle::singleton(u.size(), cert.top)) == u;
  }
  const oracle::Set l = oracle::from_bits(cert.left->subset.members());
  const oracle::Set r = oracle::from_bits(cert.right->subset.members());
  const oracle::Set meet = oracle::intersect(l, r);
  return oracle::unite(l, r) == u && l != u && r != u &&
         meet == ord.boundary(l, cert.k, Sign::kPlus) &&
         meet == ord.boundary(r, cert.k, Sign::kMinus) &&
         tree_ok(ord, *cert.left) && tree_ok(ord, *cert.right);
}

// The recursive definition of spherical boundary.
bool spherical_reference(const oracle::Order& ord, const oracle::Set& u) {
  const ClosedSubset cs(ord.poset(), oracle::to_bits(u));
  if (!is_molecule(cs)) return false;
  const int n = ord.dim(u);
  if (n <= 0) return true;
  const oracle::Set in = ord.boundary(u, n - 1, Sign::kMinus);
  const oracle::Set out = ord.boundary(u, n - 1, Sign::kPlus);
  return spherical_reference(ord, in) && spherical_reference(ord, out) &&
         oracle::intersect(in, out) == ord.boundary(u, n - 2, true, true);
}

// Directed cycle search on the flow graph: input faces point at the element,
// the element points at its output faces.
bool has_flow_cycle(const OgPoset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<int>> next(n);
  for (int y = 0; y < n; ++y) {
    for (int x : p.faces(y, Sign::kMinus)) next[x].push_back(y);
    for (int x : p.faces(y, Sign::kPlus)) next[y].push_back(x);
  }
  std::vector<int> color(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int w : next[v]) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && dfs(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0 && dfs(v)) return true;
  }
  return false;
}

// A 2-cell whose input and output edges share no vertex.
OgPoset broken_cell() {
  return validate({{0, {}, {}},
                   {0, {}, {}},
                   {0, {}, {}},
                   {0, {}, {}},
                   {1, {0}, {1}},
                   {1, {2}, {3}},
                   {2, {4}, {5}}});
}

TEST(MoleculeTest, Examples) {
  for (int n = 0; n <= 4; ++n) {
    const CertPtr c = is_molecule(globe(n));
    ASSERT_TRUE(c);
    EXPECT_TRUE(c->is_atom());
    EXPECT_EQ(c->top, globe_top(n));
  }
  EXPECT_FALSE(is_molecule(validate({{0, {}, {}}, {0, {}, {}}})));
  EXPECT_FALSE(is_molecule(ClosedSubset::none(globe(1))));
  EXPECT_FALSE(is_molecule(boundary(whole(globe(2)))));
  const CertPtr path = is_molecule(paste(globe(1), globe(1), 0).whole);
  ASSERT_TRUE(path);
  EXPECT_FALSE(path->is_atom());
  EXPECT_EQ(path->k, 0);
}

TEST(MoleculeTest, AtomExamples) {
  EXPECT_TRUE(is_atom(whole(globe(3))));
  EXPECT_FALSE(is_atom(boundary(whole(globe(2)))));
  EXPECT_TRUE(is_atom(whole(simplex(2))));
}

TEST(MoleculeTest, RecognizerMatchesInductiveDefinition) {
  std::vector<OgPoset> cases = {broken_cell(),
                                restrict_to(boundary(whole(globe(3)))).poset,
                                cyclic_complex(2)};
  for (const auto& e : corpus()) {
    if (e.poset.size() <= 15) cases.push_back(e.poset);
  }
  std::mt19937 rng(3);
  for (const OgPoset& p : cases) {
    const std::set<oracle::Set> mols = oracle::molecules(p);
    for (const oracle::Set& m : mols) {
      const CertPtr c = is_molecule(ClosedSubset(p, oracle::to_bits(m)));
      ASSERT_TRUE(c);
      EXPECT_TRUE(verify_certificate(*c));
    }
    oracle::Order ord(p);
    for (int trial = 0; trial < 200; ++trial) {
      oracle::Set pick(p.size(), 0);
      for (auto& b : pick) b = rng() % 3 == 0;
      const oracle::Set u = ord.closure(pick);
      const bool lib = is_molecule(ClosedSubset(p, oracle::to_bits(u))) != nullptr;
      EXPECT_EQ(lib, mols.count(u) == 1);
    }
  }
}

TEST(MoleculeTest, CertificatesReverify) {
  for (const auto& e : corpus()) {
    if (e.poset.size() > 60) continue;
    const CertPtr c = is_molecule(e.poset);
    ASSERT_TRUE(c) << e.name;
    oracle::Order ord(e.poset);
    EXPECT_TRUE(tree_ok(ord, *c)) << e.name;
  }
}

TEST(MoleculeTest, TamperedCertificateFails) {
  const OgPoset p = paste(globe(2), globe(2), 1).whole;
  const CertPtr c = is_molecule(p);
  ASSERT_TRUE(c && !c->is_atom());
  MoleculeCert bad = *c;
  bad.k = 0;
  EXPECT_FALSE(verify_certificate(bad));
  bad = *c;
  std::swap(bad.left, bad.right);
  EXPECT_FALSE(verify_certificate(bad));
}

TEST(MoleculeTest, DecompositionsRecompose) {
  for (const auto& e : corpus()) {
    if (e.poset.size() > 60) continue;
    const CertPtr c = is_molecule(e.poset);
    ASSERT_TRUE(c);
    const ClosedSubset u = whole(e.poset);
    const Decomposition top = toplevel_decomposition(*c);
    EXPECT_TRUE(recomposes(top, u)) << e.name;
    const Decomposition codim = codim_one_decomposition(*c);
    EXPECT_TRUE(recomposes(codim, u)) << e.name;
    const int n = *e.poset.dim();
    for (const ClosedSubset& part : codim.parts) {
      EXPECT_TRUE(is_molecule(part));
      int tops = 0;
      for (int x : part.elements()) tops += e.poset.dim_of(x) == n;
      EXPECT_EQ(tops, 1) << e.name;
    }
  }
}

TEST(SphericalTest, Examples) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_TRUE(has_spherical_boundary(whole(globe(n))));
    EXPECT_TRUE(has_spherical_boundary(whole(simplex(n))));
    EXPECT_TRUE(has_spherical_boundary(whole(cube(n))));
  }
  EXPECT_FALSE(has_spherical_boundary(whole(broken_cell())));
}

TEST(SphericalTest, MatchesRecursiveDefinition) {
  for (const auto& e : corpus()) {
    if (e.poset.size() > 60) continue;
    oracle::Order ord(e.poset);
    for (int x = 0; x < static_cast<int>(e.poset.size()); ++x) {
      const ClosedSubset c = closure_of(e.poset, x);
      EXPECT_EQ(has_spherical_boundary(c),
                spherical_reference(ord, oracle::from_bits(c.members())))
          << e.name << " element " << x;
    }
    const ClosedSubset u = whole(e.poset);
    EXPECT_EQ(has_spherical_boundary(u),
              spherical_reference(ord, oracle::from_bits(u.members())))
        << e.name;
  }
}

TEST(SphericalTest, TopBoundariesDisjointAndInhabited) {
  for (const auto& e : corpus()) {
    const ClosedSubset u = whole(e.poset);
    if (!has_spherical_boundary(u)) continue;
    const int n = *e.poset.dim();
    EXPECT_TRUE(is_pure(u));
    if (n == 0) continue;
    const ClosedSubset in = boundary(u, Sign::kMinus);
    const ClosedSubset out = boundary(u, Sign::kPlus);
    int in_top = 0;
    int out_top = 0;
    for (int x = e.poset.first_of_dim(n - 1); x < e.poset.end_of_dim(n - 1);
         ++x) {
      EXPECT_FALSE(in.contains(x) && out.contains(x)) << e.name;
      in_top += in.contains(x);
      out_top += out.contains(x);
    }
    EXPECT_GT(in_top, 0);
    EXPECT_GT(out_top, 0);
  }
}

TEST(SphericalTest, LowerBoundariesHaveExactDimension) {
  for (const auto& e : corpus()) {
    const ClosedSubset u = whole(e.poset);
    const int n = *e.poset.dim();
    for (int k = 0; k < n; ++k) {
      for (Sign a : kSigns) {
        EXPECT_EQ(boundary(u, a, k).dim(), k) << e.name;
      }
    }
  }
}

TEST(RegularTest, CorpusAndCounterexample) {
  for (const auto& e : corpus()) EXPECT_TRUE(is_regular_complex(e.poset));
  EXPECT_FALSE(is_regular_complex(broken_cell()));
  EXPECT_EQ(first_irregular_element(broken_cell()), 6);
}

TEST(LoopFreeTest, Examples) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_TRUE(is_totally_loop_free(globe(n)));
    EXPECT_TRUE(is_totally_loop_free(simplex(n)));
  }
  const OgPoset loop = validate(
      {{0, {}, {}}, {0, {}, {}}, {1, {0}, {1}}, {1, {1}, {0}}});
  EXPECT_FALSE(is_totally_loop_free(loop));
  EXPECT_FALSE(is_totally_loop_free(cyclic_complex(3)));
}

TEST(LoopFreeTest, MatchesCycleSearch) {
  for (const auto& e : corpus()) {
    EXPECT_EQ(is_totally_loop_free(e.poset), !has_flow_cycle(e.poset))
        << e.name;
  }
  for (int len = 2; len <= 5; ++len) {
    EXPECT_TRUE(has_flow_cycle(cyclic_complex(len)));
  }
}

TEST(SubmoleculeTest, Examples) {
  const OgPoset o2 = globe(2);
  const auto self = find_submolecule(whole(o2), whole(o2));
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->empty());

  const PastingResult p = paste(globe(2), globe(2), 1);
  const ClosedSubset left =
      apply_map(p.left_incl, whole(p.left_incl.source()));
  const auto one = find_submolecule(left, whole(p.whole));
  ASSERT_TRUE(one.has_value());
  ASSERT_EQ(one->size(), 1u);
  EXPECT_EQ((*one)[0].k, 1);
  EXPECT_TRUE((*one)[0].into_left);

  // The input boundary of the unique top atom sits inside the input
  // boundary of the whole molecule.
  const PastingResult w = paste(globe(1), globe(2), 0);
  const ClosedSubset u = whole(w.whole);
  const int top = *greatest_element(
      apply_map(w.right_incl, whole(w.right_incl.source())));
  const auto chain = find_submolecule(
      boundary(closure_of(w.whole, top), Sign::kMinus), boundary(u, Sign::kMinus));
  EXPECT_TRUE(chain.has_value());

  EXPECT_FALSE(
      find_submolecule(boundary(whole(o2), Sign::kPlus), boundary(whole(o2), Sign::kMinus))
          .has_value());
}

TEST(CofaceTest, CodimensionOneCounts) {
  for (const auto& e : corpus()) {
    const ClosedSubset u = whole(e.poset);
    const int n = *e.poset.dim();
    if (n == 0) continue;
    const ClosedSubset in = boundary(u, Sign::kMinus);
    const ClosedSubset out = boundary(u, Sign::kPlus);
    for (int x = e.poset.first_of_dim(n - 1); x < e.poset.end_of_dim(n - 1);
         ++x) {
      std::vector<Sign> signs;
      for (const Coface& c : e.poset.cofaces(x)) signs.push_back(c.sign);
      const bool both = in.contains(x) && out.contains(x);
      const bool either = in.contains(x) || out.contains(x);
      if (both) {
        EXPECT_EQ(signs.size(), 0u) << e.name;
      } else if (either) {
        EXPECT_EQ(signs.size(), 1u) << e.name;
      } else {
        ASSERT_EQ(signs.size(), 2u) << e.name;
        EXPECT_NE(signs[0], signs[1]) << e.name;
      }
    }
  }
}

TEST(ClassifyTest, FlagsMatchPredicates) {
  for (const auto& e : corpus()) {
    if (e.poset.size() > 60) continue;
    const CertPtr c = is_molecule(e.poset);
    ASSERT_TRUE(c);
    const ClassTag t = classify(*c);
    EXPECT_EQ(t.spherical_boundary, has_spherical_boundary(whole(e.poset)));
    EXPECT_EQ(t.totally_loop_free, is_totally_loop_free(e.poset));
    EXPECT_TRUE(t.regular_ambient);
  }
}

TEST(MoleculesOfTest, MatchesInductiveDefinition) {
  for (const auto& e : corpus()) {
    if (e.poset.size() > 15) continue;
    std::set<oracle::Set> lib;
    for (const ClosedSubset& m : molecules_of(e.poset, 100000)) {
      lib.insert(oracle::from_bits(m.members()));
    }
    EXPECT_EQ(lib, oracle::molecules(e.poset)) << e.name;
  }
}

}  // namespace
}  // namespace rdc
