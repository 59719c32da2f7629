#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace grpiso {

/// Index of a group element, 0..n-1. Index 0 is always the identity.
using Element = std::uint32_t;

/// A finite group stored as its full Cayley table.
///
/// Groups are immutable and cheap to copy: copies share one table. Two
/// groups compare equal iff their tables are identical, which is how
/// homomorphism domains are matched.
class Group {
public:
  /// Wraps a row-major table that is already known to satisfy the group
  /// axioms with identity 0. Library constructors use this; external input
  /// goes through build_group().
  static Group unchecked(std::size_t n, std::vector<Element> table);

  std::size_t order() const noexcept { return data_->n; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->n + b];
  }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element commutator(Element a, Element b) const noexcept;

  /// Smallest t >= 1 with a^t = identity.
  std::uint32_t element_order(Element a) const noexcept {
    return data_->element_order[a];
  }

  std::span<const Element> table() const noexcept { return data_->table; }
  std::span<const Element> row(Element a) const noexcept {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->n,
            data_->n};
  }

  /// Exponent: lcm of all element orders.
  std::uint64_t exponent() const noexcept { return data_->exponent; }

  friend bool operator==(const Group &a, const Group &b) noexcept;

private:
  struct Data {
    std::size_t n = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::uint32_t> element_order;
    std::uint64_t exponent = 1;
  };
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Result of validating an externally supplied table. When the identity was
/// not at index 0 the elements are re-indexed; relabel[old] = new.
struct BuiltGroup {
  Group group;
  std::vector<Element> relabel;
  bool relabeled = false;
};

/// Validates a raw Cayley table. Checks run in a fixed order and the first
/// failure is reported with its cell: EntryOutOfRange, NoIdentity,
/// NotBijectiveRow (rows, then columns), NoInverse, NonAssociative.
BuiltGroup build_group(const std::vector<std::vector<Element>> &raw);

/// Same checks on a flat row-major table of n*n entries.
BuiltGroup build_group(std::size_t n, std::span<const Element> flat);

/// Re-indexes G by a bijection with new_index[old] = new. The identity must
/// stay at 0.
Group relabel_group(const Group &G, std::span<const Element> new_index);

/// A subgroup stored as its strictly increasing element list.
class Subgroup {
public:
  /// Validates closure; the identity must be present.
  static Subgroup from_elements(const Group &parent,
                                std::vector<Element> elements);
  static Subgroup trivial(const Group &parent);
  static Subgroup whole(const Group &parent);

  const Group &parent() const noexcept { return parent_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element g) const noexcept;
  bool is_normal() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

private:
  Subgroup(Group parent, std::vector<Element> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {}

  Group parent_;
  std::vector<Element> elements_;

  friend Subgroup subgroup_closure(const Group &, std::span<const Element>);
};

/// A homomorphism stored densely: images()[g] is the image of g.
class Homomorphism {
public:
  const Group &source() const noexcept { return source_; }
  const Group &target() const noexcept { return target_; }
  Element operator()(Element g) const noexcept { return images_[g]; }
  std::span<const Element> images() const noexcept { return images_; }

  friend bool operator==(const Homomorphism &a,
                         const Homomorphism &b) noexcept {
    return a.images_ == b.images_ && a.source_ == b.source_ &&
           a.target_ == b.target_;
  }

  /// For library code whose construction guarantees the homomorphism
  /// identity.
  static Homomorphism unchecked(Group source, Group target,
                                std::vector<Element> images);

private:
  Homomorphism(Group source, Group target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)),
        images_(std::move(images)) {}

  Group source_;
  Group target_;
  std::vector<Element> images_;
};

std::uint32_t element_order(const Group &G, Element g);

/// Smallest subgroup containing seed.
Subgroup subgroup_closure(const Group &G, std::span<const Element> seed);

Subgroup center(const Group &G);
Subgroup derived_subgroup(const Group &G);

/// Conjugacy classes, each sorted, listed by smallest member.
std::vector<std::vector<Element>> conjugacy_classes(const Group &G);

/// Normal closure of a set: the smallest normal subgroup containing it.
Subgroup normal_closure(const Group &G, std::span<const Element> seed);

struct Quotient {
  Group group;
  Homomorphism projection;
};

/// Quotient by a normal subgroup. Coset k of the result is the k-th coset in
/// order of smallest representative, so coset 0 is N itself.
Quotient quotient(const Group &G, const Subgroup &N);

/// The subgroup as a group in its own right (elements renumbered in sorted
/// order), with the inclusion map into the parent.
struct InducedGroup {
  Group group;
  Homomorphism inclusion;
};
InducedGroup as_group(const Subgroup &S);

/// G x H on pairs flattened row-major: (g, h) has index g*|H| + h.
struct DirectProduct {
  Group group;
  Homomorphism embed_left;  // g -> (g, 1)
  Homomorphism embed_right; // h -> (1, h)
  Homomorphism proj_left;   // (g, h) -> g
  Homomorphism proj_right;  // (g, h) -> h
};
DirectProduct direct_product(const Group &G, const Group &H);

inline Element pair_index(const Group &, const Group &H, Element g, Element h) {
  return static_cast<Element>(g * H.order() + h);
}

/// Validates images as a homomorphism source -> target. Throws
/// NotHomomorphism naming the first violating pair.
Homomorphism build_hom(const Group &source, const Group &target,
                       std::vector<Element> images);

Homomorphism identity_hom(const Group &G);
Homomorphism trivial_hom(const Group &source, const Group &target);

/// (outer . inner)(a) = outer(inner(a)).
Homomorphism hom_compose(const Homomorphism &outer,
                         const Homomorphism &inner);

/// (a + b)(x) = a(x) b(x). Requires every a(x) to commute with every b(y).
Homomorphism hom_pointwise_sum(const Homomorphism &a, const Homomorphism &b);

bool is_isomorphism(const Homomorphism &phi);

/// Inverse of an isomorphism; throws NotIsomorphism otherwise.
Homomorphism hom_inverse(const Homomorphism &phi);

/// Image of a homomorphism as a subgroup of its target.
Subgroup hom_image(const Homomorphism &phi);

} // namespace grpiso
