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

// Isomorphism search: colour refinement on the face/coface graph, then
// backtracking along a breadth-first order so that every element after the
// first of its component has an already-matched neighbour.

#include <algorithm>
#include <deque>
#include <map>

#include "rdc/ogposet.hpp"

namespace rdc {
namespace {

// Refines colours jointly on the disjoint union of p and q.
void refine_colours(const OgPoset& p, const OgPoset& q, std::vector<int>& cp,
                    std::vector<int>& cq) {
  const int n = static_cast<int>(p.size());
  const int m = static_cast<int>(q.size());
  auto poset_of = [&](int v) -> const OgPoset& { return v < n ? p : q; };
  auto local = [&](int v) { return v < n ? v : v - n; };
  std::vector<int> colour(n + m);
  {
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n + m; ++v) {
      const OgPoset& P = poset_of(v);
      const int x = local(v);
      int minus_up = 0;
      int plus_up = 0;
      for (const Coface& c : P.cofaces(x)) {
        (c.sign == Sign::kMinus ? minus_up : plus_up)++;
      }
      std::vector<int> key = {P.dim_of(x),
                              static_cast<int>(P.faces(x, Sign::kMinus).size()),
                              static_cast<int>(P.faces(x, Sign::kPlus).size()),
                              minus_up, plus_up};
      colour[v] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n + m);
    for (int v = 0; v < n + m; ++v) {
      const OgPoset& P = poset_of(v);
      const int x = local(v);
      const int offset = v < n ? 0 : n;
      std::vector<int> nbrs;
      for (Sign s : kSigns) {
        for (int f : P.faces(x, s)) {
          nbrs.push_back(colour[f + offset] * 4 + static_cast<int>(s));
        }
      }
      for (const Coface& c : P.cofaces(x)) {
        nbrs.push_back(colour[c.element + offset] * 4 + 2 +
                       static_cast<int>(c.sign));
      }
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.insert(nbrs.begin(), colour[v]);
      next[v] = ids.emplace(nbrs, static_cast<int>(ids.size())).first->second;
    }
    colour.swap(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  cp.assign(colour.begin(), colour.begin() + n);
  cq.assign(colour.begin() + n, colour.end());
}

struct Step {
  int element;
  int parent;      // -1 for a component root
  bool via_face;   // element is a face of parent (else a coface)
  Sign sign;
};

class Search {
 public:
  Search(const OgPoset& p, const OgPoset& q, std::size_t limit)
      : p_(p), q_(q), limit_(limit) {}

  std::vector<std::vector<int>> run() {
    if (p_.size() != q_.size()) return {};
    refine_colours(p_, q_, cp_, cq_);
    std::vector<int> hp = cp_, hq = cq_;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return {};
    build_order();
    f_.assign(p_.size(), -1);
    used_.assign(q_.size(), false);
    backtrack(0);
    return std::move(results_);
  }

 private:
  void build_order() {
    const int n = static_cast<int>(p_.size());
    std::vector<bool> seen(n, false);
    for (int root = n - 1; root >= 0; --root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<int> queue = {root};
      order_.push_back({root, -1, false, Sign::kMinus});
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (Sign s : kSigns) {
          for (int f : p_.faces(x, s)) {
            if (seen[f]) continue;
            seen[f] = true;
            order_.push_back({f, x, true, s});
            queue.push_back(f);
          }
        }
        for (const Coface& c : p_.cofaces(x)) {
          if (seen[c.element]) continue;
          seen[c.element] = true;
          order_.push_back({c.element, x, false, c.sign});
          queue.push_back(c.element);
        }
      }
    }
  }

  static bool has_face(const OgPoset& P, int x, Sign s, int f) {
    const auto& faces = P.faces(x, s);
    return std::binary_search(faces.begin(), faces.end(), f);
  }

  bool consistent(int e, int c) const {
    if (cp_[e] != cq_[c] || used_[c]) return false;
    for (Sign s : kSigns) {
      for (int w : p_.faces(e, s)) {
        if (f_[w] >= 0 && !has_face(q_, c, s, f_[w])) return false;
      }
    }
    for (const Coface& y : p_.cofaces(e)) {
      if (f_[y.element] >= 0 && !has_face(q_, f_[y.element], y.sign, c)) {
        return false;
      }
    }
    return true;
  }

  void try_candidate(std::size_t i, int e, int c) {
    if (results_.size() >= limit_ || !consistent(e, c)) return;
    f_[e] = c;
    used_[c] = true;
    backtrack(i + 1);
    f_[e] = -1;
    used_[c] = false;
  }

  void backtrack(std::size_t i) {
    if (results_.size() >= limit_) return;
    if (i == order_.size()) {
      results_.push_back(f_);
      return;
    }
    const Step& step = order_[i];
    if (step.parent < 0) {
      for (int c = 0; c < static_cast<int>(q_.size()); ++c) {
        try_candidate(i, step.element, c);
      }
    } else if (step.via_face) {
      for (int c : q_.faces(f_[step.parent], step.sign)) {
        try_candidate(i, step.element, c);
      }
    } else {
      for (const Coface& c : q_.cofaces(f_[step.parent])) {
        if (c.sign == step.sign) try_candidate(i, step.element, c.element);
      }
    }
  }

  const OgPoset& p_;
  const OgPoset& q_;
  std::size_t limit_;
  std::vector<int> cp_, cq_;
  std::vector<Step> order_;
  std::vector<int> f_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> results_;
};

}  // namespace

std::vector<PosetMap> isomorphisms(const OgPoset& p, const OgPoset& q,
                                   std::size_t limit) {
  std::vector<PosetMap> out;
  for (auto& a : Search(p, q, limit).run()) {
    // Edge-preserving bijections with matching degrees are isomorphisms.
    out.push_back(PosetMap::unchecked(p, q, std::move(a)));
  }
  return out;
}

std::optional<PosetMap> find_isomorphism(const OgPoset& p, const OgPoset& q) {
  auto all = isomorphisms(p, q, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace rdc
