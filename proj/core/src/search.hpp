#pragma once

// Backtracking over generator images shared by the automorphism oracle and
// the brute-force isomorphism search. A map is fixed by the images of an
// irredundant generating sequence of the source; every partial assignment
// is extended over the generated subgroup and rejected as soon as it stops
// being an injective homomorphism.

#include <array>
#include <cstdint>
#include <vector>

#include "grpiso/group.hpp"

namespace grpiso::detail {

/// Per-element automorphism invariants: order, conjugacy class size and the
/// number of square roots.
using ElementKey = std::array<std::uint32_t, 3>;

std::vector<ElementKey> element_keys(const Group &G);

/// Greedy irredundant generating sequence: each step appends the element
/// whose closure with the current sequence is largest, preferring rarer
/// invariant keys and then smaller indices.
std::vector<Element> generating_sequence(const Group &G,
                                         const std::vector<ElementKey> &keys);

class Matcher {
public:
  Matcher(const Group &source, const Group &target,
          std::vector<Element> generators,
          const std::vector<ElementKey> &source_keys,
          const std::vector<ElementKey> &target_keys);

  std::size_t levels() const noexcept { return gens_.size(); }
  Element generator(std::size_t level) const noexcept { return gens_[level]; }
  const std::vector<Element> &candidates(std::size_t level) const noexcept {
    return candidates_[level];
  }

  /// Sends generator `level` to y; levels must be assigned in order. Returns
  /// false (leaving state unchanged) if the extension is not an injective
  /// homomorphism.
  bool assign(std::size_t level, Element y);
  void unassign(std::size_t level);

  /// The full map; valid once every level is assigned.
  const std::vector<Element> &images() const noexcept { return phi_; }

  /// Depth-first over levels [from, levels()). on_complete returns true to
  /// stop; the return value says whether the search was stopped.
  template <class F> bool search(std::size_t from, F &&on_complete) {
    if (from == gens_.size())
      return on_complete(phi_);
    for (Element y : candidates_[from]) {
      if (!assign(from, y))
        continue;
      const bool stop = search(from + 1, on_complete);
      unassign(from);
      if (stop)
        return true;
    }
    return false;
  }

private:
  static constexpr Element unset = ~Element{0};

  const Group &source_;
  const Group &target_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> gen_images_;
  std::vector<Element> phi_;
  std::vector<bool> used_;
  std::vector<Element> known_;
  std::vector<std::size_t> mark_;
};

} // namespace grpiso::detail
