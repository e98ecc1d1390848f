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

#include "rdc/ogposet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace rdc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFaceDimMismatch: return "FaceDimMismatch";
    case ErrorKind::kOrientationClash: return "OrientationClash";
    case ErrorKind::kNotGraded: return "NotGraded";
    case ErrorKind::kUnsortedElements: return "UnsortedElements";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotAMap: return "NotAMap";
    case ErrorKind::kNotAMolecule: return "NotAMolecule";
    case ErrorKind::kNotASubmolecule: return "NotASubmolecule";
    case ErrorKind::kNotSpherical: return "NotSpherical";
    case ErrorKind::kBoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::kPrecondition: return "Precondition";
    case ErrorKind::kOverflowGuard: return "OverflowGuard";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

struct OgPoset::Data {
  std::vector<Element> elements;
  std::vector<std::vector<Coface>> cofaces;
  std::vector<int> dim_start;  // dim_start[d] = first index of dimension d
};

OgPoset::OgPoset() {
  static const std::shared_ptr<const Data> empty =
      std::make_shared<Data>(Data{{}, {}, {0}});
  data_ = empty;
}
OgPoset::OgPoset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

std::size_t OgPoset::size() const { return data_->elements.size(); }

std::optional<int> OgPoset::dim() const {
  if (data_->elements.empty()) return std::nullopt;
  return data_->elements.back().dim;
}

const Element& OgPoset::element(int x) const { return data_->elements[x]; }
const std::vector<Element>& OgPoset::elements() const {
  return data_->elements;
}
const std::vector<Coface>& OgPoset::cofaces(int x) const {
  return data_->cofaces[x];
}

int OgPoset::first_of_dim(int d) const {
  const auto& start = data_->dim_start;
  if (d < 0) return 0;
  if (d >= static_cast<int>(start.size())) return static_cast<int>(size());
  return start[d];
}
int OgPoset::end_of_dim(int d) const { return first_of_dim(d + 1); }

Bitset OgPoset::all_elements() const {
  Bitset b(size());
  b.set_all();
  return b;
}

bool operator==(const OgPoset& a, const OgPoset& b) {
  return a.data_ == b.data_ || a.data_->elements == b.data_->elements;
}

OgPoset validate(std::vector<Element> raw) {
  const int n = static_cast<int>(raw.size());
  auto fail = [](ErrorKind kind, int x, const std::string& what) {
    std::ostringstream msg;
    msg << "element " << x << ": " << what;
    throw Error(kind, msg.str());
  };
  for (int x = 0; x < n; ++x) {
    Element& e = raw[x];
    if (e.dim < 0) fail(ErrorKind::kNotGraded, x, "negative dimension");
    if (x > 0 && raw[x - 1].dim > e.dim) {
      fail(ErrorKind::kUnsortedElements, x, "elements not sorted by dimension");
    }
    for (auto* faces : {&e.minus, &e.plus}) {
      std::sort(faces->begin(), faces->end());
      faces->erase(std::unique(faces->begin(), faces->end()), faces->end());
      for (int f : *faces) {
        if (f < 0 || f >= n) {
          fail(ErrorKind::kIndexOutOfRange, x,
               "face index " + std::to_string(f) + " out of range");
        }
        if (raw[f].dim != e.dim - 1) {
          fail(ErrorKind::kFaceDimMismatch, x,
               "face " + std::to_string(f) + " has dimension " +
                   std::to_string(raw[f].dim));
        }
      }
    }
    std::vector<int> both;
    std::set_intersection(e.minus.begin(), e.minus.end(), e.plus.begin(),
                          e.plus.end(), std::back_inserter(both));
    if (!both.empty()) {
      fail(ErrorKind::kOrientationClash, x,
           "face " + std::to_string(both.front()) + " carries both signs");
    }
    // Longest chain down to a minimal element must have length dim.
    if (e.dim > 0 && e.minus.empty() && e.plus.empty()) {
      fail(ErrorKind::kNotGraded, x,
           "dimension " + std::to_string(e.dim) + " but no faces");
    }
  }

  auto data = std::make_shared<OgPoset::Data>();
  data->cofaces.resize(n);
  for (int x = 0; x < n; ++x) {
    for (Sign s : kSigns) {
      for (int f : raw[x].faces(s)) data->cofaces[f].push_back({x, s});
    }
  }
  const int top = n == 0 ? -1 : raw.back().dim;
  data->dim_start.assign(top + 2, n);
  for (int x = n - 1; x >= 0; --x) data->dim_start[raw[x].dim] = x;
  for (int d = top; d >= 0; --d) {
    data->dim_start[d] = std::min(data->dim_start[d], data->dim_start[d + 1]);
  }
  data->elements = std::move(raw);
  return OgPoset(std::move(data));
}

int OgPosetBuilder::add(int dim, std::vector<int> minus,
                        std::vector<int> plus) {
  elements_.push_back({dim, std::move(minus), std::move(plus)});
  return static_cast<int>(elements_.size()) - 1;
}

OgPosetBuilder::Built OgPosetBuilder::build() const {
  const int n = static_cast<int>(elements_.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return elements_[a].dim < elements_[b].dim;
  });
  std::vector<int> final_index(n);
  for (int i = 0; i < n; ++i) final_index[order[i]] = i;
  std::vector<Element> sorted;
  sorted.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Element& e = elements_[order[i]];
    Element out{e.dim, {}, {}};
    for (int f : e.minus) out.minus.push_back(final_index.at(f));
    for (int f : e.plus) out.plus.push_back(final_index.at(f));
    sorted.push_back(std::move(out));
  }
  return {validate(std::move(sorted)), std::move(final_index)};
}

// ---------------------------------------------------------------------------
// Closed subsets and boundaries.

namespace detail {

Bitset closure_bits(const OgPoset& p, Bitset s) {
  for (int x = s.last(); x >= 0; --x) {
    if (!s.test(x)) continue;
    for (Sign a : kSigns) {
      for (int f : p.faces(x, a)) s.set(f);
    }
  }
  return s;
}

Bitset signed_top_bits(const OgPoset& p, const Bitset& u, int n, Sign alpha) {
  Bitset out(p.size());
  for (int x = p.first_of_dim(n); x < p.end_of_dim(n); ++x) {
    if (!u.test(x)) continue;
    bool ok = true;
    for (const Coface& c : p.cofaces(x)) {
      if (u.test(c.element) && c.sign != alpha) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(x);
  }
  return out;
}

Bitset boundary_bits(const OgPoset& p, const Bitset& u, int n, bool minus,
                     bool plus) {
  Bitset out(p.size());
  if (n < 0) return out;
  if (dim_bits(p, u) <= n) return u;
  if (minus) out |= signed_top_bits(p, u, n, Sign::kMinus);
  if (plus) out |= signed_top_bits(p, u, n, Sign::kPlus);
  out = closure_bits(p, std::move(out));
  // Elements of u lying under nothing of dimension above n.
  const int last = u.last();
  std::vector<int> height(last + 1, -1);
  for (int x = last; x >= 0; --x) {
    if (!u.test(x)) continue;
    int h = p.dim_of(x);
    for (const Coface& c : p.cofaces(x)) {
      if (c.element <= last && u.test(c.element)) {
        h = std::max(h, height[c.element]);
      }
    }
    height[x] = h;
    if (h <= n) out.set(x);
  }
  return out;
}

Bitset maximal_bits(const OgPoset& p, const Bitset& u) {
  Bitset out(p.size());
  u.for_each([&](int x) {
    for (const Coface& c : p.cofaces(x)) {
      if (u.test(c.element)) return;
    }
    out.set(x);
  });
  return out;
}

int dim_bits(const OgPoset& p, const Bitset& u) {
  const int last = u.last();
  return last < 0 ? -1 : p.dim_of(last);
}

std::vector<Bitset> all_closures(const OgPoset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<Bitset> out(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    out[x].set(x);
    for (Sign a : kSigns) {
      for (int f : p.faces(x, a)) out[x] |= out[f];
    }
  }
  return out;
}

}  // namespace detail

ClosedSubset make_closed_unchecked(OgPoset parent, Bitset members) {
  return ClosedSubset(std::move(parent), std::move(members),
                      ClosedSubset::Trusted{});
}

ClosedSubset::ClosedSubset(OgPoset parent, Bitset members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (members_.size() != parent_.size()) {
    throw Error(ErrorKind::kIndexOutOfRange, "bitset size mismatch");
  }
  members_.for_each([&](int x) {
    for (Sign a : kSigns) {
      for (int f : parent_.faces(x, a)) {
        if (!members_.test(f)) {
          throw Error(ErrorKind::kNotClosed,
                      "face " + std::to_string(f) + " of " +
                          std::to_string(x) + " missing");
        }
      }
    }
  });
}

ClosedSubset ClosedSubset::whole(const OgPoset& p) {
  return make_closed_unchecked(p, p.all_elements());
}
ClosedSubset ClosedSubset::none(const OgPoset& p) {
  return make_closed_unchecked(p, p.no_elements());
}

std::optional<int> ClosedSubset::dim() const {
  const int d = detail::dim_bits(parent_, members_);
  if (d < 0) return std::nullopt;
  return d;
}

bool operator==(const ClosedSubset& a, const ClosedSubset& b) {
  return a.members_ == b.members_ && a.parent_ == b.parent_;
}
ClosedSubset operator|(const ClosedSubset& a, const ClosedSubset& b) {
  return make_closed_unchecked(a.parent_, a.members_ | b.members_);
}
ClosedSubset operator&(const ClosedSubset& a, const ClosedSubset& b) {
  return make_closed_unchecked(a.parent_, a.members_ & b.members_);
}

ClosedSubset closure(const OgPoset& p, const std::vector<int>& elements) {
  Bitset s(p.size());
  for (int x : elements) {
    if (x < 0 || x >= static_cast<int>(p.size())) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "element " + std::to_string(x) + " out of range");
    }
    s.set(x);
  }
  return make_closed_unchecked(p, detail::closure_bits(p, std::move(s)));
}

ClosedSubset closure_of(const OgPoset& p, int x) { return closure(p, {x}); }

ClosedSubset boundary(const ClosedSubset& u, Sign alpha, int n) {
  return make_closed_unchecked(
      u.parent(), detail::boundary_bits(u.parent(), u.members(), n,
                                        alpha == Sign::kMinus,
                                        alpha == Sign::kPlus));
}
ClosedSubset boundary(const ClosedSubset& u, int n) {
  return make_closed_unchecked(
      u.parent(), detail::boundary_bits(u.parent(), u.members(), n, true, true));
}
ClosedSubset boundary(const ClosedSubset& u, Sign alpha) {
  return boundary(u, alpha, u.dim().value_or(0) - 1);
}
ClosedSubset boundary(const ClosedSubset& u) {
  return boundary(u, u.dim().value_or(0) - 1);
}

std::vector<int> maximal_elements(const ClosedSubset& u) {
  return detail::maximal_bits(u.parent(), u.members()).indices();
}

bool is_pure(const ClosedSubset& u) {
  const auto d = u.dim();
  if (!d) return true;
  for (int x : maximal_elements(u)) {
    if (u.parent().dim_of(x) != *d) return false;
  }
  return true;
}

std::optional<int> greatest_element(const ClosedSubset& u) {
  const auto maximal = maximal_elements(u);
  if (maximal.size() != 1) return std::nullopt;
  return maximal.front();
}

// ---------------------------------------------------------------------------
// Maps.

const char* map_kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::kGeneral: return "general";
    case MapKind::kInclusion: return "inclusion";
    case MapKind::kSurjection: return "surjection";
    case MapKind::kIsomorphism: return "isomorphism";
  }
  return "general";
}

std::optional<std::string> map_law_violation(
    const OgPoset& source, const OgPoset& target,
    const std::vector<int>& assignment) {
  const int n = static_cast<int>(source.size());
  const int m = static_cast<int>(target.size());
  if (static_cast<int>(assignment.size()) != n) {
    return "assignment has " + std::to_string(assignment.size()) +
           " entries, source has " + std::to_string(n);
  }
  for (int x = 0; x < n; ++x) {
    if (assignment[x] < 0 || assignment[x] >= m) {
      return "element " + std::to_string(x) + " mapped out of range";
    }
  }
  const auto source_closures = detail::all_closures(source);
  const auto target_closures = detail::all_closures(target);
  auto image = [&](const Bitset& s) {
    Bitset out(m);
    s.for_each([&](int x) { out.set(assignment[x]); });
    return out;
  };
  for (int x = 0; x < n; ++x) {
    const int fx = assignment[x];
    const int d = source.dim_of(x);
    if (target.dim_of(fx) > d) {
      return "element " + std::to_string(x) + " mapped to higher dimension";
    }
    for (int k = 0; k <= d; ++k) {
      for (Sign a : kSigns) {
        const bool minus = a == Sign::kMinus;
        Bitset lhs = detail::boundary_bits(target, target_closures[fx], k,
                                           minus, !minus);
        Bitset rhs = image(detail::boundary_bits(source, source_closures[x], k,
                                                 minus, !minus));
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "boundary law fails at element " << x << ", n=" << k
              << ", sign " << sign_char(a);
          return msg.str();
        }
      }
    }
  }
  return std::nullopt;
}

PosetMap::PosetMap(OgPoset source, OgPoset target, std::vector<int> assignment)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)) {
  if (auto why = map_law_violation(source_, target_, assignment_)) {
    throw Error(ErrorKind::kNotAMap, *why);
  }
  compute_kind();
}

PosetMap::PosetMap(OgPoset source, OgPoset target, std::vector<int> assignment,
                   Trusted)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)) {
  compute_kind();
}

void PosetMap::compute_kind() {
  Bitset hit(target_.size());
  bool injective = true;
  for (int y : assignment_) {
    if (hit.test(y)) injective = false;
    hit.set(y);
  }
  const bool surjective = hit.count() == target_.size();
  if (injective && surjective) {
    kind_ = MapKind::kIsomorphism;
  } else if (injective) {
    kind_ = MapKind::kInclusion;
  } else if (surjective) {
    kind_ = MapKind::kSurjection;
  } else {
    kind_ = MapKind::kGeneral;
  }
}

PosetMap PosetMap::identity(const OgPoset& p) {
  std::vector<int> a(p.size());
  std::iota(a.begin(), a.end(), 0);
  return PosetMap(p, p, std::move(a), Trusted{});
}

PosetMap PosetMap::unchecked(OgPoset source, OgPoset target,
                             std::vector<int> assignment) {
  return PosetMap(std::move(source), std::move(target), std::move(assignment),
                  Trusted{});
}

bool operator==(const PosetMap& a, const PosetMap& b) {
  return a.assignment_ == b.assignment_ && a.source_ == b.source_ &&
         a.target_ == b.target_;
}

PosetMap compose(const PosetMap& first, const PosetMap& second) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorKind::kPrecondition, "compose: maps are not composable");
  }
  std::vector<int> a(first.assignment().size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = second(first(x));
  // Composites of maps are maps.
  return PosetMap(first.source(), second.target(), std::move(a),
                  PosetMap::Trusted{});
}

ClosedSubset apply_map(const PosetMap& f, const ClosedSubset& u) {
  Bitset out(f.target().size());
  u.members().for_each([&](int x) { out.set(f(x)); });
  return make_closed_unchecked(f.target(), std::move(out));
}

Restriction restrict_to(const ClosedSubset& u) {
  const OgPoset& p = u.parent();
  std::vector<int> to_local(p.size(), -1);
  std::vector<int> to_parent = u.elements();
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    to_local[to_parent[i]] = static_cast<int>(i);
  }
  std::vector<Element> elems;
  elems.reserve(to_parent.size());
  for (int x : to_parent) {
    Element e{p.dim_of(x), {}, {}};
    for (int f : p.faces(x, Sign::kMinus)) e.minus.push_back(to_local[f]);
    for (int f : p.faces(x, Sign::kPlus)) e.plus.push_back(to_local[f]);
    elems.push_back(std::move(e));
  }
  OgPoset sub = validate(std::move(elems));
  PosetMap incl = PosetMap::unchecked(sub, p, std::move(to_parent));
  return {std::move(sub), std::move(incl)};
}

Factorization factorize(const PosetMap& f) {
  const ClosedSubset image = apply_map(f, ClosedSubset::whole(f.source()));
  Restriction r = restrict_to(image);
  std::vector<int> to_local(f.target().size(), -1);
  for (std::size_t i = 0; i < r.inclusion.assignment().size(); ++i) {
    to_local[r.inclusion(i)] = static_cast<int>(i);
  }
  std::vector<int> a(f.source().size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = to_local[f(x)];
  PosetMap surjection(f.source(), r.poset, std::move(a));
  return {std::move(surjection), std::move(r.inclusion)};
}

std::optional<std::vector<int>> match_subsets(const ClosedSubset& a,
                                              const ClosedSubset& b) {
  if (a.size() != b.size()) return std::nullopt;
  Restriction ra = restrict_to(a);
  Restriction rb = restrict_to(b);
  auto iso = find_isomorphism(ra.poset, rb.poset);
  if (!iso) return std::nullopt;
  std::vector<int> table(a.parent().size(), -1);
  for (std::size_t i = 0; i < ra.poset.size(); ++i) {
    table[ra.inclusion(i)] = rb.inclusion((*iso)(i));
  }
  return table;
}

}  // namespace rdc
