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

#include "rdc/topology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "rdc/error.hpp"

namespace rdc {

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& level : simplices) total += level.size();
  return total;
}

SimplicialComplex nerve(const ClosedSubset& u) {
  const OgPoset& p = u.parent();
  const Bitset& members = u.members();
  // Strictly greater elements inside u, through covering edges.
  std::vector<std::vector<int>> above(p.size());
  const auto closures = detail::all_closures(p);
  members.for_each([&](int y) {
    closures[y].for_each([&](int x) {
      if (x != y) above[x].push_back(y);
    });
  });
  for (auto& a : above) std::sort(a.begin(), a.end());

  SimplicialComplex k;
  k.vertices = members.indices();
  std::vector<int> chain;
  auto extend = [&](auto&& self) -> void {
    const int d = static_cast<int>(chain.size()) - 1;
    if (static_cast<int>(k.simplices.size()) <= d) k.simplices.resize(d + 1);
    k.simplices[d].push_back(chain);
    for (int y : above[chain.back()]) {
      chain.push_back(y);
      self(self);
      chain.pop_back();
    }
  };
  for (int x : k.vertices) {
    chain = {x};
    extend(extend);
  }
  for (auto& level : k.simplices) std::sort(level.begin(), level.end());
  return k;
}

SimplicialComplex nerve(const OgPoset& p) {
  return nerve(ClosedSubset::whole(p));
}

std::vector<int> chain_image(const PosetMap& f, const std::vector<int>& chain) {
  std::vector<int> out;
  for (int x : chain) {
    const int y = f(x);
    if (out.empty() || out.back() != y) out.push_back(y);
  }
  return out;
}

ChainComplex chain_complex(const SimplicialComplex& k, bool reduced) {
  ChainComplex c;
  c.reduced = reduced;
  const int top = k.dim();
  std::vector<std::map<std::vector<int>, int>> index(top + 1);
  for (int d = 0; d <= top; ++d) {
    c.ranks.push_back(k.simplices[d].size());
    for (std::size_t i = 0; i < k.simplices[d].size(); ++i) {
      index[d][k.simplices[d][i]] = static_cast<int>(i);
    }
  }
  for (int d = 0; d <= top; ++d) {
    SparseMatrix m;
    m.cols = static_cast<int>(k.count(d));
    if (d == 0) {
      m.rows = reduced ? 1 : 0;
      if (reduced) {
        for (int j = 0; j < m.cols; ++j) m.entries.emplace_back(0, j, 1);
      }
    } else {
      m.rows = static_cast<int>(k.count(d - 1));
      for (int j = 0; j < m.cols; ++j) {
        const auto& s = k.simplices[d][j];
        for (int i = 0; i <= d; ++i) {
          std::vector<int> face = s;
          face.erase(face.begin() + i);
          m.entries.emplace_back(index[d - 1].at(face), j, i % 2 == 0 ? 1 : -1);
        }
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

bool squares_to_zero(const ChainComplex& c) {
  for (std::size_t d = 1; d < c.boundary.size(); ++d) {
    if (c.boundary[d - 1].rows == 0) continue;
    if (!product_is_zero(c.boundary[d - 1], c.boundary[d])) return false;
  }
  return true;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& k, bool reduced,
                                    const SmithOptions& options) {
  const ChainComplex c = chain_complex(k, reduced);
  if (!squares_to_zero(c)) {
    throw Error(ErrorKind::kPrecondition, "boundary maps do not square to zero");
  }
  const int top = k.dim();
  std::vector<SmithResult> forms;
  for (const SparseMatrix& m : c.boundary) forms.push_back(smith(m, options));
  std::vector<HomologyGroup> out(top + 1);
  for (int d = 0; d <= top; ++d) {
    const std::size_t outgoing = forms[d].rank;
    const std::size_t incoming = d < top ? forms[d + 1].rank : 0;
    out[d].betti = c.ranks[d] - outgoing - incoming;
    if (d < top) out[d].torsion = forms[d + 1].torsion;
  }
  return out;
}

std::int64_t euler(const SimplicialComplex& k) {
  std::int64_t total = 0;
  for (int d = 0; d <= k.dim(); ++d) {
    total += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.count(d));
  }
  return total;
}

bool has_point_homology(const SimplicialComplex& k) {
  if (k.size() == 0) return false;
  for (const HomologyGroup& g : homology(k, true)) {
    if (g.betti != 0 || !g.torsion.empty()) return false;
  }
  return true;
}

bool has_sphere_homology(const SimplicialComplex& k, int d) {
  if (d < 0) return k.size() == 0;
  if (k.size() == 0) return false;
  const auto h = homology(k, true);
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    if (!h[i].torsion.empty()) return false;
    if (h[i].betti != (i == d ? 1u : 0u)) return false;
  }
  return static_cast<int>(h.size()) > d;
}

CwReport cw_check(const OgPoset& p) {
  CwReport report;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const int n = p.dim_of(static_cast<int>(x));
    Bitset below = closure_of(p, static_cast<int>(x)).members();
    below.reset(static_cast<int>(x));
    const SimplicialComplex k =
        nerve(make_closed_unchecked(p, std::move(below)));
    ++report.atoms_checked;
    if (!has_sphere_homology(k, n - 1)) {
      std::ostringstream msg;
      msg << "element " << x << " of dimension " << n
          << ": the elements below it do not have the homology of a "
          << (n - 1) << "-sphere";
      report.ok = false;
      report.failing_element = static_cast<int>(x);
      report.message = msg.str();
      return report;
    }
  }
  report.message = "every atom bounds a homology sphere";
  return report;
}

}  // namespace rdc
