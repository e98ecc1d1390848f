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

#include "rdc/molecule.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace rdc {

using detail::boundary_bits;
using detail::closure_bits;
using detail::dim_bits;
using detail::maximal_bits;
using detail::signed_top_bits;

MoleculeRecognizer::MoleculeRecognizer(OgPoset p)
    : p_(std::move(p)), closures_(detail::all_closures(p_)) {}

void MoleculeRecognizer::for_each_candidate(
    const Bitset& u, int k, const std::function<bool(Bitset, Bitset)>& visit) {
  // Maximal elements above dimension k each belong to exactly one side; the
  // left side also contains the input k-boundary and the right side the
  // output one.
  std::vector<int> high;
  maximal_bits(p_, u).for_each([&](int x) {
    if (p_.dim_of(x) > k) high.push_back(x);
  });
  const int m = static_cast<int>(high.size());
  if (m < 2) return;

  std::vector<Bitset> in(m), out(m);
  for (int i = 0; i < m; ++i) {
    in[i] = signed_top_bits(p_, closures_[high[i]], k, Sign::kMinus);
    out[i] = signed_top_bits(p_, closures_[high[i]], k, Sign::kPlus);
  }
  // pred[j] holds i when an output k-face of i is an input k-face of j, so
  // that i must sit on the left whenever j does.
  std::vector<std::vector<int>> pred(m), succ(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && out[i].intersects(in[j])) {
        pred[j].push_back(i);
        succ[i].push_back(j);
      }
    }
  }
  const Bitset bminus = boundary_bits(p_, u, k, true, false);
  const Bitset bplus = boundary_bits(p_, u, k, false, true);

  std::vector<int> forced(m, 0), forbidden(m, 0);
  std::vector<bool> chosen(m, false);
  bool stop = false;

  auto test_leaf = [&]() {
    Bitset left = bminus;
    Bitset right = bplus;
    int taken = 0;
    for (int i = 0; i < m; ++i) {
      if (chosen[i]) {
        left |= closures_[high[i]];
        ++taken;
      } else {
        right |= closures_[high[i]];
      }
    }
    if (taken == 0 || taken == m) return;
    if (left == u || right == u || (left | right) != u) return;
    const Bitset meet = left & right;
    if (meet != boundary_bits(p_, left, k, false, true)) return;
    if (meet != boundary_bits(p_, right, k, true, false)) return;
    stop = visit(std::move(left), std::move(right));
  };

  // Decides positions from the highest down, excluding before including, so
  // that left parts come out in ascending binary order.
  std::function<void(int)> dfs = [&](int pos) {
    if (stop) return;
    if (pos < 0) {
      test_leaf();
      return;
    }
    if (forced[pos] == 0) {
      for (int j : succ[pos]) {
        if (j < pos) ++forbidden[j];
      }
      dfs(pos - 1);
      for (int j : succ[pos]) {
        if (j < pos) --forbidden[j];
      }
    }
    if (stop) return;
    if (forbidden[pos] == 0) {
      chosen[pos] = true;
      for (int i : pred[pos]) {
        if (i < pos) ++forced[i];
      }
      dfs(pos - 1);
      for (int i : pred[pos]) {
        if (i < pos) --forced[i];
      }
      chosen[pos] = false;
    }
  };
  dfs(m - 1);
}

void MoleculeRecognizer::for_each_split(
    const Bitset& u, int k,
    const std::function<bool(const CertPtr&, const CertPtr&)>& visit) {
  for_each_candidate(u, k, [&](Bitset left, Bitset right) {
    CertPtr l = recognize(left);
    if (!l) return false;
    CertPtr r = recognize(right);
    if (!r) return false;
    return visit(l, r);
  });
}

CertPtr MoleculeRecognizer::recognize(const Bitset& u) {
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  CertPtr result;
  const Bitset maximal = maximal_bits(p_, u);
  if (maximal.count() == 1) {
    auto cert = std::make_shared<MoleculeCert>();
    cert->subset = make_closed_unchecked(p_, u);
    cert->top = maximal.last();
    result = cert;
  } else if (maximal.any()) {
    const int n = dim_bits(p_, u);
    for (int k = n - 1; k >= 0 && !result; --k) {
      for_each_split(u, k, [&](const CertPtr& l, const CertPtr& r) {
        auto cert = std::make_shared<MoleculeCert>();
        cert->subset = make_closed_unchecked(p_, u);
        cert->left = l;
        cert->right = r;
        cert->k = k;
        result = cert;
        return true;
      });
    }
  }
  memo_.emplace(u, result);
  return result;
}

CertPtr is_molecule(const ClosedSubset& u) {
  MoleculeRecognizer r(u.parent());
  return r.recognize(u.members());
}

CertPtr is_molecule(const OgPoset& p) {
  return is_molecule(ClosedSubset::whole(p));
}

bool verify_certificate(const MoleculeCert& cert) {
  const OgPoset& p = cert.subset.parent();
  const Bitset& u = cert.subset.members();
  // The subset must be closed.
  if (closure_bits(p, u) != u) return false;
  if (cert.is_atom()) {
    const Bitset maximal = maximal_bits(p, u);
    return maximal.count() == 1 && maximal.test(cert.top);
  }
  if (!cert.left || !cert.right || cert.k < 0) return false;
  if (!(cert.left->subset.parent() == p) || !(cert.right->subset.parent() == p)) {
    return false;
  }
  const Bitset& l = cert.left->subset.members();
  const Bitset& r = cert.right->subset.members();
  if ((l | r) != u || l == u || r == u) return false;
  const Bitset meet = l & r;
  if (meet != boundary_bits(p, l, cert.k, false, true)) return false;
  if (meet != boundary_bits(p, r, cert.k, true, false)) return false;
  return verify_certificate(*cert.left) && verify_certificate(*cert.right);
}

bool is_atom(const ClosedSubset& u) { return greatest_element(u).has_value(); }

namespace {

int count_high(const OgPoset& p, const Bitset& u, int k) {
  int c = 0;
  maximal_bits(p, u).for_each([&](int x) {
    if (p.dim_of(x) > k) ++c;
  });
  return c;
}

void split_fully(MoleculeRecognizer& rec, const Bitset& u, int k,
                 std::vector<ClosedSubset>& out) {
  if (count_high(rec.poset(), u, k) <= 1) {
    out.push_back(make_closed_unchecked(rec.poset(), u));
    return;
  }
  CertPtr left, right;
  rec.for_each_split(u, k, [&](const CertPtr& l, const CertPtr& r) {
    left = l;
    right = r;
    return true;
  });
  if (!left) {
    throw Error(ErrorKind::kNotAMolecule,
                "no decomposition at dimension " + std::to_string(k));
  }
  split_fully(rec, left->subset.members(), k, out);
  split_fully(rec, right->subset.members(), k, out);
}

Decomposition decompose_at(const MoleculeCert& cert, int k) {
  if (!verify_certificate(cert)) {
    throw Error(ErrorKind::kNotAMolecule, "invalid certificate");
  }
  Decomposition d;
  d.k = k;
  if (cert.is_atom() || k < 0) {
    d.parts.push_back(cert.subset);
    return d;
  }
  MoleculeRecognizer rec(cert.subset.parent());
  split_fully(rec, cert.subset.members(), k, d.parts);
  return d;
}

}  // namespace

Decomposition toplevel_decomposition(const MoleculeCert& cert) {
  const int k = cert.is_atom() ? cert.subset.dim().value_or(0) - 1 : cert.k;
  return decompose_at(cert, k);
}

Decomposition codim_one_decomposition(const MoleculeCert& cert) {
  return decompose_at(cert, cert.subset.dim().value_or(0) - 1);
}

bool recomposes(const Decomposition& d, const ClosedSubset& whole) {
  if (d.parts.empty()) return false;
  const OgPoset& p = whole.parent();
  Bitset acc = d.parts.front().members();
  for (std::size_t i = 1; i < d.parts.size(); ++i) {
    const Bitset& next = d.parts[i].members();
    const Bitset meet = acc & next;
    if (meet != boundary_bits(p, acc, d.k, false, true)) return false;
    if (meet != boundary_bits(p, next, d.k, true, false)) return false;
    acc |= next;
  }
  return acc == whole.members();
}

bool has_spherical_boundary(const ClosedSubset& u) {
  const OgPoset& p = u.parent();
  const int n = dim_bits(p, u.members());
  for (int k = 0; k < n; ++k) {
    const Bitset meet = boundary_bits(p, u.members(), k, false, true) &
                        boundary_bits(p, u.members(), k, true, false);
    if (meet != boundary_bits(p, u.members(), k - 1, true, true)) return false;
  }
  return true;
}

bool has_spherical_boundary(const MoleculeCert& cert) {
  return has_spherical_boundary(cert.subset);
}

std::optional<int> first_irregular_element(const OgPoset& p) {
  MoleculeRecognizer rec(p);
  const auto closures = detail::all_closures(p);
  for (int x = 0; x < static_cast<int>(p.size()); ++x) {
    const int n = p.dim_of(x);
    if (n == 0) continue;
    const Bitset& atom = closures[x];
    Bitset sides[2];
    for (Sign a : kSigns) {
      Bitset b = boundary_bits(p, atom, n - 1, a == Sign::kMinus,
                               a == Sign::kPlus);
      if (!rec.recognize(b)) return x;
      sides[static_cast<int>(a)] = std::move(b);
    }
    if (n >= 2) {
      for (Sign a : kSigns) {
        const bool minus = a == Sign::kMinus;
        const Bitset expect = boundary_bits(p, atom, n - 2, minus, !minus);
        for (const Bitset& side : sides) {
          if (boundary_bits(p, side, n - 2, minus, !minus) != expect) return x;
        }
      }
    }
    if (!has_spherical_boundary(make_closed_unchecked(p, atom))) return x;
  }
  return std::nullopt;
}

bool is_regular_complex(const OgPoset& p) {
  return !first_irregular_element(p).has_value();
}

bool is_totally_loop_free(const ClosedSubset& u) {
  const OgPoset& p = u.parent();
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  u.members().for_each([&](int x) {
    for (Sign s : kSigns) {
      for (int f : p.faces(x, s)) {
        // Output faces point downward, input faces point upward.
        const int from = s == Sign::kPlus ? x : f;
        const int to = s == Sign::kPlus ? f : x;
        out[from].push_back(to);
        ++indegree[to];
      }
    }
  });
  std::deque<int> ready;
  u.members().for_each([&](int x) {
    if (indegree[x] == 0) ready.push_back(x);
  });
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int x = ready.front();
    ready.pop_front();
    ++seen;
    for (int y : out[x]) {
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  return seen == u.size();
}

bool is_totally_loop_free(const OgPoset& p) {
  return is_totally_loop_free(ClosedSubset::whole(p));
}

std::optional<std::vector<SubmoleculeStep>> find_submolecule(
    const ClosedSubset& v, const ClosedSubset& u) {
  if (!(v.parent() == u.parent()) || !v.is_subset_of(u)) return std::nullopt;
  MoleculeRecognizer rec(u.parent());
  if (!rec.recognize(v.members()) || !rec.recognize(u.members())) {
    return std::nullopt;
  }
  std::unordered_set<Bitset, BitsetHash> visited;
  std::vector<SubmoleculeStep> chain;
  const OgPoset& p = u.parent();
  std::function<bool(const Bitset&)> search = [&](const Bitset& w) {
    if (w == v.members()) return true;
    if (!visited.insert(w).second) return false;
    const int n = dim_bits(p, w);
    bool found = false;
    for (int k = n - 1; k >= 0 && !found; --k) {
      rec.for_each_split(w, k, [&](const CertPtr& l, const CertPtr& r) {
        for (bool into_left : {true, false}) {
          const Bitset& side = into_left ? l->subset.members()
                                         : r->subset.members();
          if (!v.members().is_subset_of(side)) continue;
          chain.push_back({make_closed_unchecked(p, w), l->subset, r->subset,
                           k, into_left});
          if (search(side)) {
            found = true;
            return true;
          }
          chain.pop_back();
        }
        return false;
      });
    }
    return found;
  };
  if (!search(u.members())) return std::nullopt;
  return chain;
}

ClassTag classify(const MoleculeCert& cert) {
  ClassTag tag;
  tag.spherical_boundary = has_spherical_boundary(cert);
  tag.totally_loop_free = is_totally_loop_free(cert.subset);
  tag.regular_ambient = is_regular_complex(cert.subset.parent());
  return tag;
}

std::vector<ClosedSubset> molecules_of(const OgPoset& p, std::size_t limit) {
  struct Entry {
    Bitset set;
    int dim;
    std::vector<Bitset> bounds[2];  // bounds[sign][k]
  };
  const auto closures = detail::all_closures(p);
  std::vector<Entry> found;
  std::unordered_set<Bitset, BitsetHash> known;
  auto add = [&](const Bitset& s) {
    if (!known.insert(s).second) return;
    Entry e{s, dim_bits(p, s), {}};
    for (Sign a : kSigns) {
      for (int k = 0; k < e.dim; ++k) {
        e.bounds[static_cast<int>(a)].push_back(
            boundary_bits(p, s, k, a == Sign::kMinus, a == Sign::kPlus));
      }
    }
    found.push_back(std::move(e));
  };
  for (int x = 0; x < static_cast<int>(p.size()); ++x) add(closures[x]);
  auto bound = [](const Entry& e, Sign a, int k) -> const Bitset& {
    return k < e.dim ? e.bounds[static_cast<int>(a)][k] : e.set;
  };
  for (std::size_t i = 0; i < found.size() && found.size() < limit; ++i) {
    for (std::size_t j = 0; j <= i && found.size() < limit; ++j) {
      std::vector<Bitset> fresh;
      for (int order = 0; order < 2; ++order) {
        const Entry& a = order == 0 ? found[i] : found[j];
        const Entry& b = order == 0 ? found[j] : found[i];
        const Bitset meet = a.set & b.set;
        Bitset joined = a.set | b.set;
        if (joined == a.set || joined == b.set) continue;
        const int top = std::max(a.dim, b.dim);
        for (int k = 0; k < top; ++k) {
          if (meet == bound(a, Sign::kPlus, k) &&
              meet == bound(b, Sign::kMinus, k)) {
            fresh.push_back(joined);
            break;
          }
        }
      }
      for (const Bitset& s : fresh) add(s);
    }
  }
  std::vector<ClosedSubset> out;
  for (const Entry& e : found) out.push_back(make_closed_unchecked(p, e.set));
  return out;
}

}  // namespace rdc
