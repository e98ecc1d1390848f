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

#include "rdc/corpus.hpp"

#include <random>
#include <set>
#include <utility>

#include "rdc/construct.hpp"
#include "rdc/error.hpp"
#include "rdc/json_io.hpp"
#include "rdc/molecule.hpp"
#include "rdc/shapes.hpp"

namespace rdc {

namespace {

class Collector {
 public:
  explicit Collector(const CorpusBudget& budget) : budget_(budget) {}

  // Keeps p if it fits the budget, is regular and is new.
  bool offer(const std::string& name, const OgPoset& p) {
    if (p.empty() || p.size() > budget_.max_elements) return false;
    if (p.dim().value_or(-1) > budget_.max_dim) return false;
    if (!seen_.insert(to_canonical_json(p)).second) return false;
    if (!is_regular_complex(p)) return false;
    entries_.push_back({name, p});
    return true;
  }
  // Builds lazily so that oversized or failing constructions are skipped.
  template <class Make>
  void try_offer(const std::string& name, Make make) {
    try {
      offer(name, make());
    } catch (const Error&) {
    }
  }

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::vector<CorpusEntry> take() { return std::move(entries_); }

 private:
  CorpusBudget budget_;
  std::set<std::string> seen_;
  std::vector<CorpusEntry> entries_;
};

std::string call(const std::string& f, const std::string& a) {
  return f + "(" + a + ")";
}
std::string call(const std::string& f, const std::string& a,
                 const std::string& b) {
  return f + "(" + a + "," + b + ")";
}

}  // namespace

std::vector<CorpusEntry> gen_corpus(std::uint64_t seed,
                                    const CorpusBudget& budget) {
  Collector c(budget);
  const int top = budget.max_dim;
  for (int n = 0; n <= top; ++n) {
    c.try_offer("globe" + std::to_string(n), [n] { return globe(n); });
    c.try_offer("simplex" + std::to_string(n), [n] { return simplex(n); });
    c.try_offer("cube" + std::to_string(n), [n] { return cube(n); });
  }
  for (int n = 1; n < top; ++n) {
    c.try_offer("phi" + std::to_string(n + 1), [n] { return phi(n).poset; });
  }
  for (int n = 1; n <= top; ++n) {
    for (int k = 0; k < n; ++k) {
      c.try_offer("C" + std::to_string(n) + "_" + std::to_string(k),
                  [n, k] { return compositor(n, k).poset; });
    }
  }
  for (int n = 2; n <= top; ++n) {
    for (int k = 0; n + k <= top; ++k) {
      const std::string suffix = std::to_string(k) + "_" + std::to_string(n);
      c.try_offer("E" + suffix, [k, n] { return extrusion(k, n).poset; });
      c.try_offer("Etilde" + suffix,
                  [k, n] { return tilde_extrusion(k, n).poset; });
    }
  }
  for (int n = 1; n < top; ++n) {
    c.try_offer(call("inflate", "simplex" + std::to_string(n)),
                [n] { return inflate(simplex(n)).poset(); });
  }
  c.try_offer("unitor(globe1)", [] {
    const OgPoset o = globe(1);
    return unitor_shape(o, closure_of(o, 0), UnitorSide::kLeft, Sign::kPlus)
        .shape;
  });
  c.try_offer("unitor(simplex2)", [] {
    const OgPoset s = simplex(2);
    const ClosedSubset input = boundary(ClosedSubset::whole(s), Sign::kMinus);
    return unitor_shape(s, input, UnitorSide::kLeft, Sign::kMinus).shape;
  });

  // Seeded closure under the operations.
  std::mt19937_64 rng(seed);
  for (int round = 0; round < budget.random_rounds; ++round) {
    const auto& pool = c.entries();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const CorpusEntry a = pool[pick(rng)];
    const CorpusEntry b = pool[pick(rng)];
    const int choice = std::uniform_int_distribution<int>(0, 5)(rng);
    switch (choice) {
      case 0:
        c.try_offer(call("gray", a.name, b.name),
                    [&] { return gray(a.poset, b.poset); });
        break;
      case 1:
        c.try_offer(call("join", a.name, b.name),
                    [&] { return join(a.poset, b.poset); });
        break;
      case 2: {
        // Paste a with itself or b along a random dimension.
        const int d = std::min(a.poset.dim().value_or(0),
                               b.poset.dim().value_or(0));
        if (d == 0) break;
        const int k = std::uniform_int_distribution<int>(0, d - 1)(rng);
        c.try_offer(call("paste" + std::to_string(k), a.name, a.name),
                    [&] { return paste(a.poset, a.poset, k).whole; });
        c.try_offer(call("paste" + std::to_string(k), a.name, b.name),
                    [&] { return paste(a.poset, b.poset, k).whole; });
        break;
      }
      case 3:
        c.try_offer(call("suspend", a.name), [&] { return suspend(a.poset); });
        break;
      case 4:
        c.try_offer(call("op", a.name), [&] { return op(a.poset); });
        c.try_offer(call("co", b.name), [&] { return co(b.poset); });
        break;
      default:
        c.try_offer(call("inflate", a.name),
                    [&] { return inflate(a.poset).poset(); });
        break;
    }
  }
  return c.take();
}

OgPoset cyclic_complex(int length) {
  if (length < 2) {
    throw Error(ErrorKind::kPrecondition, "a cycle needs at least two points");
  }
  std::vector<Element> elems;
  for (int i = 0; i < length; ++i) elems.push_back({0, {}, {}});
  for (int i = 0; i < length; ++i) {
    elems.push_back({1, {i}, {(i + 1) % length}});
  }
  return validate(std::move(elems));
}

}  // namespace rdc
