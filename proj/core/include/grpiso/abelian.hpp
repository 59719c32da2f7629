#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grpiso/count.hpp"
#include "grpiso/group.hpp"

namespace grpiso {

bool is_abelian(const Group &G);

/// An abelian group written as an internal direct product of cyclic groups
/// of prime-power order. Primes ascend; orders are non-increasing within a
/// prime, so two decompositions of isomorphic groups have equal orders().
class CyclicDecomposition {
public:
  const Group &parent() const noexcept { return parent_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::span<const std::uint32_t> orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// (prime, number of cyclic factors for that prime), primes ascending.
  std::span<const std::pair<std::uint32_t, std::size_t>> ranks() const noexcept {
    return ranks_;
  }

  /// Exponents k_i with g = a_1^k_1 ... a_r^k_r, 0 <= k_i < |a_i|.
  std::span<const std::uint32_t> exponents(Element g) const noexcept {
    return {normal_form_.data() + g * generators_.size(), generators_.size()};
  }

private:
  friend CyclicDecomposition cyclic_decomposition(const Group &A);
  CyclicDecomposition(Group parent) : parent_(std::move(parent)) {}

  Group parent_;
  std::vector<Element> generators_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::pair<std::uint32_t, std::size_t>> ranks_;
  std::vector<std::uint32_t> normal_form_;
};

/// Per prime, peels a maximal-order element of the Sylow subgroup whose
/// cyclic subgroup meets the accumulated product trivially. Throws
/// NotAbelian.
CyclicDecomposition cyclic_decomposition(const Group &A);

/// N(t): number of b in B with b^t = 1.
std::uint64_t count_order_dividing(const Group &B, std::uint64_t t);

/// |Hom(A, B)| for abelian A and B as the product of N(|a_i|) over a cyclic
/// decomposition of A. Throws NotAbelian.
Count hom_count_abelian(const Group &A, const Group &B);

/// |Hom(G, Z(H))| = |Hom(G/[G,G], Z(H))|.
Count hom_count_to_center(const Group &G, const Group &H);

/// The unique homomorphism sending the i-th decomposition generator to
/// images[i]. Throws NotHomomorphism if some images[i] has order not
/// dividing |a_i| or the images do not commute.
Homomorphism extend_from_generators(const CyclicDecomposition &dec,
                                    const Group &target,
                                    std::span<const Element> images);

/// An explicit isomorphism when A and B have the same prime-power orders,
/// otherwise nothing. Throws NotAbelian.
std::optional<Homomorphism> abelian_iso(const Group &A, const Group &B);

} // namespace grpiso
