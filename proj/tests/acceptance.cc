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


// Acceptance gate: one PASS/FAIL line per criterion with its wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oracle.hpp"
#include "rdc/construct.hpp"
#include "rdc/corpus.hpp"
#include "rdc/json_io.hpp"
#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"
#include "rdc/shapes.hpp"
#include "rdc/topology.hpp"

namespace rdc {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (failures_++ < 5) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed: " << notes_.str();
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

ClosedSubset whole(const OgPoset& p) { return ClosedSubset::whole(p); }

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = gen_corpus(0);
  return c;
}

std::string str(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Criterion 1.
Outcome shape_census() {
  Tally t;
  std::size_t cube_size = 1;
  for (int n = 0; n <= 6; ++n) {
    t.expect(globe(n).size() == 2u * n + 1, str("|O^%d|", n));
    t.expect(simplex(n).size() == (1u << (n + 1)) - 1, str("|Delta^%d|", n));
    t.expect(cube(n).size() == cube_size, str("|cube^%d|", n));
    cube_size *= 3;
  }
  return t.outcome("n <= 6");
}

bool tree_ok(const oracle::Order& ord, const MoleculeCert& cert,
             std::size_t& nodes) {
  ++nodes;
  const oracle::Set u = oracle::from_bits(cert.subset.members());
  if (!ord.closed(u)) return false;
  if (cert.is_atom()) {
    return ord.closure(oracle::singleton(u.size(), cert.top)) == u;
  }
  const oracle::Set l = oracle::from_bits(cert.left->subset.members());
  const oracle::Set r = oracle::from_bits(cert.right->subset.members());
  const oracle::Set meet = oracle::intersect(l, r);
  return oracle::unite(l, r) == u && meet == ord.boundary(l, cert.k, Sign::kPlus) &&
         meet == ord.boundary(r, cert.k, Sign::kMinus) &&
         tree_ok(ord, *cert.left, nodes) && tree_ok(ord, *cert.right, nodes);
}

// Criterion 2.
Outcome recognition_soundness() {
  Tally t;
  std::size_t nodes = 0;
  for (const auto& e : corpus()) {
    const CertPtr c = is_molecule(e.poset);
    t.expect(c != nullptr, e.name + " not recognised");
    if (!c) continue;
    oracle::Order ord(e.poset);
    t.expect(tree_ok(ord, *c, nodes), e.name + " certificate");
    t.expect(verify_certificate(*c), e.name + " self-check");
    for (int x = 0; x < static_cast<int>(e.poset.size()); ++x) {
      t.expect(is_molecule(closure_of(e.poset, x)) != nullptr,
               e.name + " atom " + std::to_string(x));
    }
  }
  return t.outcome(str("%zu shapes, %zu certificate nodes", corpus().size(), nodes));
}

std::vector<const CorpusEntry*> by_dim(int max_dim, std::size_t max_size) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus()) {
    if (*e.poset.dim() <= max_dim && e.poset.size() <= max_size) out.push_back(&e);
  }
  return out;
}

// Criterion 3.
Outcome boundary_formulas() {
  Tally t;
  std::size_t pairs = 0;
  const auto mols = by_dim(4, 200);
  for (const CorpusEntry* u : mols) {
    for (const CorpusEntry* v : mols) {
      const int du = *u->poset.dim();
      const int dv = *v->poset.dim();
      if (du + dv > 4) continue;
      ++pairs;
      const ClosedSubset wu = whole(u->poset);
      const ClosedSubset wv = whole(v->poset);
      const std::string tag = u->name + " x " + v->name;
      for (int k = 0; k <= du + dv; ++k) {
        for (Sign a : kSigns) {
          t.expect(gray_boundary_check(wu, wv, k, a), "gray " + tag);
        }
      }
      for (int k = 0; k <= du + dv + 1; ++k) {
        for (Sign a : kSigns) {
          t.expect(join_boundary_check(wu, wv, k, a), "join " + tag);
        }
      }
    }
  }
  return t.outcome(str("%zu pairs", pairs));
}

bool spherical(const OgPoset& p) {
  const ClosedSubset w = whole(p);
  return is_molecule(w) != nullptr && has_spherical_boundary(w);
}

// Criterion 4.
Outcome class_closure() {
  Tally t;
  std::map<std::string, int> counts;
  auto check = [&](const std::string& op, const std::string& name,
                   const std::function<OgPoset()>& build) {
    ++counts[op];
    try {
      t.expect(spherical(build()), op + " " + name);
    } catch (const Error& e) {
      t.expect(false, op + " " + name + ": " + e.what());
    }
  };
  std::vector<const CorpusEntry*> members;
  for (const auto& e : corpus()) {
    if (spherical(e.poset)) members.push_back(&e);
  }
  for (const CorpusEntry* u : members) {
    const OgPoset& p = u->poset;
    const int n = *p.dim();
    const ClosedSubset w = whole(p);
    check("inflate", u->name, [&] { return inflate(p).poset(); });
    check("celto", u->name, [&] { return celto(p, p).atom; });
    check("dual", u->name, [&] { return dual(p, Duality::odd()); });
    if (n == 0) continue;
    // Pasting an inflated output face along it.
    const ClosedSubset out = boundary(w, Sign::kPlus);
    int y = maximal_elements(out).front();
    const ClosedSubset face = closure_of(p, y);
    check("paste_along", u->name, [&] {
      return paste_along(inflate(restrict_to(face).poset).poset(), p, face,
                         Sign::kPlus)
          .whole;
    });
    // Substituting a top atom by itself followed by a unit on its output.
    const int x = p.end_of_dim(n) - 1;
    check("substitute", u->name, [&] {
      const OgPoset atom = restrict_to(closure_of(p, x)).poset;
      const OgPoset unit =
          inflate(restrict_to(boundary(whole(atom), Sign::kPlus)).poset).poset();
      const OgPoset replacement = paste(atom, unit, n - 1).whole;
      return substitute(p, closure_of(p, x), replacement).whole;
    });
    if (p.size() <= 60) {
      for (UnitorSide side : {UnitorSide::kLeft, UnitorSide::kRight}) {
        const Sign where = side == UnitorSide::kLeft ? Sign::kMinus : Sign::kPlus;
        const ClosedSubset bd = boundary(w, where);
        int z = -1;
        for (int m : maximal_elements(bd)) {
          if (p.dim_of(m) == n - 1) z = m;
        }
        if (z < 0) continue;
        for (Sign s : kSigns) {
          check("unitor", u->name, [&] {
            return unitor_shape(p, closure_of(p, z), side, s).shape;
          });
        }
      }
    }
  }
  for (const CorpusEntry* u : members) {
    for (const CorpusEntry* v : members) {
      const int du = *u->poset.dim();
      const int dv = *v->poset.dim();
      if (u->poset.size() * v->poset.size() > 250) continue;
      if (du + dv <= 4) {
        check("gray", u->name + "," + v->name,
              [&] { return gray(u->poset, v->poset); });
      }
      if (du + dv + 1 <= 4) {
        check("join", u->name + "," + v->name,
              [&] { return join(u->poset, v->poset); });
      }
    }
  }
  std::ostringstream s;
  for (const auto& [op, c] : counts) s << op << "=" << c << " ";
  std::string summary = s.str();
  summary.pop_back();
  return t.outcome(summary);
}

// Criterion 5.
Outcome rigidity() {
  Tally t;
  for (const auto& e : corpus()) {
    const auto autos = isomorphisms(e.poset, e.poset, 2);
    t.expect(autos.size() == 1 && autos[0] == PosetMap::identity(e.poset),
             e.name);
  }
  return t.outcome(str("%zu molecules", corpus().size()));
}

// Criterion 6.
Outcome coface_counts() {
  Tally t;
  std::size_t elements = 0;
  for (const auto& e : corpus()) {
    const ClosedSubset w = whole(e.poset);
    const int n = *e.poset.dim();
    if (n == 0) continue;
    const ClosedSubset in = boundary(w, Sign::kMinus);
    const ClosedSubset out = boundary(w, Sign::kPlus);
    for (int x = e.poset.first_of_dim(n - 1); x < e.poset.end_of_dim(n - 1); ++x) {
      ++elements;
      const auto& cof = e.poset.cofaces(x);
      const bool both = in.contains(x) && out.contains(x);
      const bool one = in.contains(x) != out.contains(x);
      const std::string tag = e.name + " element " + std::to_string(x);
      if (both) {
        t.expect(cof.empty(), tag);
      } else if (one) {
        t.expect(cof.size() == 1, tag);
      } else {
        t.expect(cof.size() == 2 && cof[0].sign != cof[1].sign, tag);
      }
    }
  }
  return t.outcome(str("%zu codimension-one elements", elements));
}

PosetMap globe_incl(int n, Sign a) {
  std::vector<int> f(globe(n).size());
  for (int x = 0; x < static_cast<int>(f.size()); ++x) f[x] = x;
  f[globe_top(n)] = globe_index(n, a);
  return PosetMap(globe(n), globe(n + 1), f);
}

// Criterion 7.
Outcome folding_coherence() {
  Tally t;
  for (int n = 0; n <= 5; ++n) {
    t.expect(folding_a(n) == folding_a_recursive(n), str("a_%d forms", n));
    if (n >= 1) {
      const PosetMap a = folding_a(n - 1);
      t.expect(compose(simplex_face(n, 0), folding_a(n)) ==
                   compose(a, globe_incl(n - 1, Sign::kPlus)),
               str("d0 square %d", n));
      t.expect(compose(simplex_face(n, 1), folding_a(n)) ==
                   compose(a, globe_incl(n - 1, Sign::kMinus)),
               str("d1 square %d", n));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const PosetMap c = folding_c(n);
    const Phi f = phi(n);
    const PosetMap a = folding_a(n);
    t.expect(compose(simplex_face(n + 1, 0), c) == compose(a, f.second_incl),
             str("c d0 %d", n + 1));
    t.expect(compose(simplex_face(n + 1, 1), c) == compose(a, f.input_incl),
             str("c d1 %d", n + 1));
    t.expect(compose(simplex_face(n + 1, 2), c) == compose(a, f.first_incl),
             str("c d2 %d", n + 1));
  }
  return t.outcome("a_0..a_5, c_2..c_5");
}

// Criterion 8.
Outcome retraction_tower() {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 2; ++k) {
      const Extrusion e = extrusion(k, n);
      t.expect(compose(e.j, e.r) == PosetMap::identity(e.j.source()),
               str("jr E^%d_%d", k, n));
    }
    for (int k = 0; k <= 2; ++k) {
      const TildeExtrusion tk = tilde_extrusion(k, n);
      t.expect(compose(tk.globe_incl, tk.retraction) ==
                   PosetMap::identity(globe(n + k)),
               str("globe retraction %d %d", k, n));
    }
    const TildeExtrusion te = tilde_extrusion(0, n);
    const Restriction rim = restrict_to(boundary(whole(simplex(n))));
    t.expect(compose(simplex_boundary_incl(te), te.retraction) ==
                 compose(rim.inclusion, folding_a(n)),
             str("rim square %d", n));
  }
  return t.outcome("n <= 4, k <= 2");
}

// Criterion 9.
Outcome delta_fullness() {
  Tally t;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const auto maps = enumerate_maps(simplex(n), simplex(m));
      std::set<std::vector<int>> got;
      for (const PosetMap& f : maps) got.insert(f.assignment());
      std::set<std::vector<int>> want;
      for (const auto& v : oracle::monotone_functions(n, m)) {
        want.insert(simplex_map(n, m, v).assignment());
      }
      t.expect(maps.size() == oracle::binomial(n + m + 1, n + 1) && got == want,
               str("Delta^%d -> Delta^%d", n, m));
    }
  }
  return t.outcome("n, m <= 3");
}

// Criterion 10.
Outcome realization_homology() {
  Tally t;
  std::set<std::string> seen;
  for (const auto& e : corpus()) {
    for (int x = 0; x < static_cast<int>(e.poset.size()); ++x) {
      const ClosedSubset atom = closure_of(e.poset, x);
      const Restriction r = restrict_to(atom);
      if (!seen.insert(to_canonical_json(r.poset)).second) continue;
      const int n = e.poset.dim_of(x);
      const std::string tag = e.name + " atom " + std::to_string(x);
      t.expect(has_point_homology(nerve(atom)), tag + " ball");
      t.expect(has_sphere_homology(nerve(boundary(atom)), n - 1), tag + " sphere");
    }
  }
  return t.outcome(str("%zu distinct atoms", seen.size()));
}

// Criterion 11.
Outcome omega_laws() {
  Tally t;
  std::size_t complexes = 0;
  std::size_t cells = 0;
  std::size_t composites = 0;
  std::size_t interchanges = 0;
  for (const auto& e : corpus()) {
    if (e.poset.size() > 40) continue;
    ++complexes;
    const OgPoset& p = e.poset;
    const auto mols = molecules_of(p, 4000);
    const int top = *p.dim();
    std::vector<Bitset> sets;
    std::unordered_map<Bitset, int, BitsetHash> id;
    for (const ClosedSubset& m : mols) {
      id.emplace(m.members(), static_cast<int>(sets.size()));
      sets.push_back(m.members());
    }
    cells += sets.size();
    const int count = static_cast<int>(sets.size());
    // bd[x][k][a]
    std::vector<std::vector<std::array<Bitset, 2>>> bd(count);
    for (int x = 0; x < count; ++x) {
      const ClosedSubset u = make_closed_unchecked(p, sets[x]);
      for (int k = 0; k <= top; ++k) {
        bd[x].push_back({boundary(u, Sign::kMinus, k).members(),
                         boundary(u, Sign::kPlus, k).members()});
      }
    }
    auto is_cell = [&](const Bitset& b) { return id.count(b) == 1; };
    auto composable = [&](int x, int y, int k) {
      return (sets[x] & sets[y]) == bd[x][k][1] && bd[x][k][1] == bd[y][k][0];
    };
    auto compose_ids = [&](int x, int y) { return id.at(sets[x] | sets[y]); };
    const std::string tag = e.name;
    // Boundaries are cells and globular.
    for (int x = 0; x < count; ++x) {
      for (int k = 0; k <= top; ++k) {
        for (int a = 0; a < 2; ++a) {
          t.expect(is_cell(bd[x][k][a]), tag + " boundary cell");
          if (!is_cell(bd[x][k][a])) continue;
          const int b = id.at(bd[x][k][a]);
          for (int j = 0; j < k; ++j) {
            for (int c = 0; c < 2; ++c) {
              t.expect(bd[b][j][c] == bd[x][j][c], tag + " globular");
            }
          }
        }
        // Units.
        const int out = id.at(bd[x][k][1]);
        const int in = id.at(bd[x][k][0]);
        t.expect(composable(x, out, k) && (sets[x] | sets[out]) == sets[x],
                 tag + " right unit");
        t.expect(composable(in, x, k) && (sets[in] | sets[x]) == sets[x],
                 tag + " left unit");
      }
    }
    // Composable pairs at each k, their composites and boundaries.
    std::vector<std::vector<std::pair<int, int>>> pairs(top + 1);
    for (int k = 0; k < top; ++k) {
      for (int x = 0; x < count; ++x) {
        for (int y = 0; y < count; ++y) {
          if (x == y || !composable(x, y, k)) continue;
          const Bitset joined = sets[x] | sets[y];
          t.expect(is_cell(joined), tag + " composite is a molecule");
          if (!is_cell(joined)) continue;
          ++composites;
          pairs[k].emplace_back(x, y);
          const int z = id.at(joined);
          t.expect(bd[z][k][0] == bd[x][k][0] && bd[z][k][1] == bd[y][k][1],
                   tag + " composite boundary");
          for (int n = k + 1; n <= top; ++n) {
            for (int a = 0; a < 2; ++a) {
              const int bx = id.at(bd[x][n][a]);
              const int by = id.at(bd[y][n][a]);
              t.expect(composable(bx, by, k) || bx == by ||
                           (sets[bx] | sets[by]) == sets[bx] ||
                           (sets[bx] | sets[by]) == sets[by],
                       tag + " boundary of composite composable");
              t.expect(bd[z][n][a] == (sets[bx] | sets[by]),
                       tag + " boundary of composite");
            }
          }
        }
      }
    }
    // Associativity.
    for (int k = 0; k < top; ++k) {
      for (const auto& [x, y] : pairs[k]) {
        const int xy = compose_ids(x, y);
        for (const auto& [y2, z] : pairs[k]) {
          if (y2 != y) continue;
          const int yz = compose_ids(y, z);
          const bool left = composable(xy, z, k);
          const bool right = composable(x, yz, k);
          t.expect(left == right, tag + " associativity defined");
          if (left && right) {
            t.expect((sets[xy] | sets[z]) == (sets[x] | sets[yz]),
                     tag + " associativity");
          }
        }
      }
    }
    // Interchange for k < n.
    for (int n = 1; n < top; ++n) {
      std::map<int, std::vector<std::pair<int, int>>> by_left;
      for (const auto& pr : pairs[n]) by_left[pr.first].push_back(pr);
      for (int k = 0; k < n; ++k) {
        std::set<std::pair<int, int>> kpairs(pairs[k].begin(), pairs[k].end());
        for (const auto& [x, y] : pairs[k]) {
          auto xs = by_left.find(x);
          auto ys = by_left.find(y);
          if (xs == by_left.end() || ys == by_left.end()) continue;
          for (const auto& [x0, x1] : xs->second) {
            for (const auto& [y0, y1] : ys->second) {
              if (!kpairs.count({x1, y1})) continue;
              ++interchanges;
              const int xx = compose_ids(x0, x1);
              const int yy = compose_ids(y0, y1);
              const int top_left = compose_ids(x0, y0);
              const int top_right = compose_ids(x1, y1);
              t.expect(composable(xx, yy, k) && composable(top_left, top_right, n),
                       tag + " interchange defined");
              t.expect((sets[xx] | sets[yy]) == (sets[top_left] | sets[top_right]),
                       tag + " interchange");
            }
          }
        }
      }
    }
  }
  return t.outcome(str("%zu complexes, %zu cells, %zu composites, %zu interchanges",
                       complexes, cells, composites, interchanges));
}

// Criterion 12.
Outcome loop_freeness() {
  Tally t;
  for (int n = 0; n <= 4; ++n) {
    t.expect(is_totally_loop_free(globe(n)), str("O^%d", n));
    t.expect(is_totally_loop_free(simplex(n)), str("Delta^%d", n));
    t.expect(is_totally_loop_free(cube(n)), str("cube^%d", n));
  }
  std::mt19937 rng(0);
  const int length = 2 + static_cast<int>(rng() % 5);
  t.expect(!is_totally_loop_free(cyclic_complex(length)),
           str("cycle of length %d", length));
  return t.outcome(str("cycle length %d", length));
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;  // zero for no time bound
  Outcome (*run)();
};

}  // namespace
}  // namespace rdc

int main() {
  using rdc::Criterion;
  const Criterion criteria[] = {
      {1, "shape census", 1.0, rdc::shape_census},
      {2, "recognition soundness", 30.0, rdc::recognition_soundness},
      {3, "boundary formulas", 60.0, rdc::boundary_formulas},
      {4, "class closure", 60.0, rdc::class_closure},
      {5, "rigidity", 60.0, rdc::rigidity},
      {6, "codimension-one cofaces", 0.0, rdc::coface_counts},
      {7, "folding coherence", 0.0, rdc::folding_coherence},
      {8, "retraction tower", 0.0, rdc::retraction_tower},
      {9, "simplex fullness", 120.0, rdc::delta_fullness},
      {10, "realization homology", 120.0, rdc::realization_homology},
      {11, "omega-category laws", 0.0, rdc::omega_laws},
      {12, "loop-freeness", 0.0, rdc::loop_freeness},
  };
  // The corpus is shared; build it outside the timed sections.
  rdc::corpus();
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    rdc::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.ok = false;
      o.detail += " (over the time budget)";
    }
    std::printf("%s %2d %-26s %8.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.number,
                c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
