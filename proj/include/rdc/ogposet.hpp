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

#ifndef RDC_OGPOSET_HPP_
#define RDC_OGPOSET_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdc/bitset.hpp"
#include "rdc/error.hpp"

namespace rdc {

enum class Sign : std::uint8_t { kMinus = 0, kPlus = 1 };

constexpr Sign flip(Sign s) {
  return s == Sign::kMinus ? Sign::kPlus : Sign::kMinus;
}
// (-)^i s.
constexpr Sign sign_power(int i, Sign s) { return (i % 2 == 0) ? s : flip(s); }
constexpr char sign_char(Sign s) { return s == Sign::kMinus ? '-' : '+'; }

inline constexpr Sign kSigns[] = {Sign::kMinus, Sign::kPlus};

// One element record: its dimension and its input/output faces.
struct Element {
  int dim = 0;
  std::vector<int> minus;
  std::vector<int> plus;

  const std::vector<int>& faces(Sign s) const {
    return s == Sign::kMinus ? minus : plus;
  }
  friend bool operator==(const Element&, const Element&) = default;
};

struct Coface {
  int element;
  Sign sign;
};

// A finite oriented graded poset. Elements are dense indices sorted by
// dimension. Immutable; copies share storage.
class OgPoset {
 public:
  OgPoset();

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // Maximal dimension, or nullopt for the empty poset.
  std::optional<int> dim() const;

  int dim_of(int x) const { return element(x).dim; }
  const Element& element(int x) const;
  const std::vector<Element>& elements() const;
  const std::vector<int>& faces(int x, Sign s) const {
    return element(x).faces(s);
  }
  const std::vector<Coface>& cofaces(int x) const;

  // Elements of dimension d occupy [first_of_dim(d), end_of_dim(d)).
  int first_of_dim(int d) const;
  int end_of_dim(int d) const;

  Bitset no_elements() const { return Bitset(size()); }
  Bitset all_elements() const;

  bool same_object(const OgPoset& other) const { return data_ == other.data_; }
  friend bool operator==(const OgPoset& a, const OgPoset& b);

 private:
  struct Data;
  explicit OgPoset(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;

  friend OgPoset validate(std::vector<Element> raw);
};

// Checks every invariant of an oriented graded poset and returns the
// validated value. Face lists are sorted and deduplicated. Throws Error with
// kind kFaceDimMismatch, kOrientationClash, kNotGraded, kIndexOutOfRange or
// kUnsortedElements.
OgPoset validate(std::vector<Element> raw);

// Accumulates elements under provisional ids, then stable-sorts them by
// dimension. Used by every construction to produce the canonical labelling.
class OgPosetBuilder {
 public:
  int add(int dim, std::vector<int> minus, std::vector<int> plus);
  std::size_t size() const { return elements_.size(); }

  struct Built {
    OgPoset poset;
    std::vector<int> final_index;  // provisional id -> final index
  };
  Built build() const;

 private:
  std::vector<Element> elements_;
};

class ClosedSubset {
 public:
  ClosedSubset() = default;
  // Throws kNotClosed unless members is downward closed in parent.
  ClosedSubset(OgPoset parent, Bitset members);

  static ClosedSubset whole(const OgPoset& p);
  static ClosedSubset none(const OgPoset& p);

  const OgPoset& parent() const { return parent_; }
  const Bitset& members() const { return members_; }
  bool contains(int x) const { return members_.test(x); }
  std::size_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }
  std::optional<int> dim() const;
  std::vector<int> elements() const { return members_.indices(); }
  bool is_subset_of(const ClosedSubset& o) const {
    return members_.is_subset_of(o.members_);
  }

  friend bool operator==(const ClosedSubset& a, const ClosedSubset& b);
  friend ClosedSubset operator|(const ClosedSubset& a, const ClosedSubset& b);
  friend ClosedSubset operator&(const ClosedSubset& a, const ClosedSubset& b);

 private:
  struct Trusted {};
  ClosedSubset(OgPoset parent, Bitset members, Trusted)
      : parent_(std::move(parent)), members_(std::move(members)) {}
  friend ClosedSubset make_closed_unchecked(OgPoset parent, Bitset members);

  OgPoset parent_;
  Bitset members_;
};

// For library internals that already know the set is closed.
ClosedSubset make_closed_unchecked(OgPoset parent, Bitset members);

ClosedSubset closure(const OgPoset& p, const std::vector<int>& elements);
ClosedSubset closure_of(const OgPoset& p, int x);

// The n-boundary of U with the given orientation. For n >= dim U this is U
// itself; for n < 0 it is empty.
ClosedSubset boundary(const ClosedSubset& u, Sign alpha, int n);
// Union of both orientations.
ClosedSubset boundary(const ClosedSubset& u, int n);
// Codimension-one boundaries (n = dim U - 1).
ClosedSubset boundary(const ClosedSubset& u, Sign alpha);
ClosedSubset boundary(const ClosedSubset& u);

bool is_pure(const ClosedSubset& u);
std::vector<int> maximal_elements(const ClosedSubset& u);
std::optional<int> greatest_element(const ClosedSubset& u);

// Bitset kernels shared by the higher modules.
namespace detail {
Bitset closure_bits(const OgPoset& p, Bitset s);
// Elements of dimension n all of whose covers inside u carry sign alpha.
Bitset signed_top_bits(const OgPoset& p, const Bitset& u, int n, Sign alpha);
Bitset boundary_bits(const OgPoset& p, const Bitset& u, int n, bool minus,
                     bool plus);
Bitset maximal_bits(const OgPoset& p, const Bitset& u);
// -1 for the empty set.
int dim_bits(const OgPoset& p, const Bitset& u);
// One closure bitset per element, built bottom-up.
std::vector<Bitset> all_closures(const OgPoset& p);
}  // namespace detail

enum class MapKind { kGeneral, kInclusion, kSurjection, kIsomorphism };

const char* map_kind_name(MapKind kind);

// A map of oriented graded posets: closed, and commuting with every
// boundary operator.
class PosetMap {
 public:
  // The empty map from the empty poset to itself.
  PosetMap() : kind_(MapKind::kIsomorphism) {}
  // Throws kNotAMap if the assignment violates the boundary law.
  PosetMap(OgPoset source, OgPoset target, std::vector<int> assignment);

  static PosetMap identity(const OgPoset& p);
  // Skips the law check; for callers whose construction guarantees it.
  static PosetMap unchecked(OgPoset source, OgPoset target,
                            std::vector<int> assignment);

  const OgPoset& source() const { return source_; }
  const OgPoset& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int x) const { return assignment_[x]; }
  MapKind kind() const { return kind_; }
  bool is_injective() const {
    return kind_ == MapKind::kInclusion || kind_ == MapKind::kIsomorphism;
  }
  bool is_surjective() const {
    return kind_ == MapKind::kSurjection || kind_ == MapKind::kIsomorphism;
  }

  friend bool operator==(const PosetMap& a, const PosetMap& b);

 private:
  struct Trusted {};
  PosetMap(OgPoset source, OgPoset target, std::vector<int> assignment,
           Trusted);
  void compute_kind();
  friend PosetMap compose(const PosetMap& first, const PosetMap& second);

  OgPoset source_;
  OgPoset target_;
  std::vector<int> assignment_;
  MapKind kind_ = MapKind::kGeneral;
};

// Describes the first violation of the map law, or nullopt for a valid map.
std::optional<std::string> map_law_violation(
    const OgPoset& source, const OgPoset& target,
    const std::vector<int>& assignment);

// Diagrammatic order: apply first, then second.
PosetMap compose(const PosetMap& first, const PosetMap& second);

ClosedSubset apply_map(const PosetMap& f, const ClosedSubset& u);

struct Factorization {
  PosetMap surjection;
  PosetMap inclusion;
};
// Image factorization; the image carries the order of the target.
Factorization factorize(const PosetMap& f);

struct Restriction {
  OgPoset poset;
  PosetMap inclusion;
};
// The closed subset as a poset of its own, with its inclusion.
Restriction restrict_to(const ClosedSubset& u);

// First isomorphism in the deterministic search order.
std::optional<PosetMap> find_isomorphism(const OgPoset& p, const OgPoset& q);
// Up to limit isomorphisms, in search order.
std::vector<PosetMap> isomorphisms(const OgPoset& p, const OgPoset& q,
                                   std::size_t limit);

// Isomorphism between two closed subsets, as a table from indices of
// a.parent() to indices of b.parent() (-1 outside a).
std::optional<std::vector<int>> match_subsets(const ClosedSubset& a,
                                              const ClosedSubset& b);

}  // namespace rdc

#endif  // RDC_OGPOSET_HPP_
