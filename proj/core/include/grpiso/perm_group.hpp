#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "grpiso/count.hpp"
#include "grpiso/group.hpp"

namespace grpiso {

/// A bijection of {0, ..., n-1} stored as its image sequence.
class Permutation {
public:
  /// Throws NotPermutation unless images is a bijection.
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Element operator[](Element x) const noexcept { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Element> images)
      : images_(std::move(images)) {}

  std::vector<Element> images_;
};

/// Canonical partition: every block ascending, blocks ordered by their
/// smallest point.
using Partition = std::vector<std::vector<Element>>;

/// A permutation group given by generators. The stabilizer chain is built
/// on first use of order() or contains() and shared between copies.
class PermGroup {
public:
  /// Throws DomainMismatch if a generator has the wrong degree.
  PermGroup(std::size_t domain_size, std::vector<Permutation> generators);

  std::size_t domain_size() const noexcept { return domain_size_; }
  std::span<const Permutation> generators() const noexcept {
    return generators_;
  }

  Count order() const;
  Partition orbits() const;
  bool contains(const Permutation &p) const;

  /// Base points of the stabilizer chain and the basic orbit lengths;
  /// order() is the product of the lengths.
  std::vector<Element> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

private:
  struct Chain;
  struct Lazy;
  const Chain &chain() const;

  std::size_t domain_size_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

Count group_order(const PermGroup &P);
Partition orbits(const PermGroup &P);
bool contains(const PermGroup &P, const Permutation &p);

} // namespace grpiso
