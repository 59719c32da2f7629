#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grpiso/group.hpp"

namespace grpiso {

/// G as an internal direct product N_1 ... N_k of directly indecomposable
/// normal subgroups, together with the external picture.
struct Decomposition {
  Group parent;
  std::vector<Subgroup> internal_factors;
  std::vector<Group> external_factors;
  /// external_factors[i] -> parent, onto internal_factors[i].
  std::vector<Homomorphism> inclusions;
  /// ((G_1 x G_2) x G_3) x ..., row-major at every step.
  Group product;
  /// parent -> product, g = n_1 ... n_k maps to (n_1, ..., n_k).
  Homomorphism witness;

  std::size_t size() const noexcept { return external_factors.size(); }
};

/// All normal subgroups, sorted by order and then by element list. Each is
/// a join of normal closures of conjugacy classes.
std::vector<Subgroup> normal_subgroups(const Group &G);

/// First pair (N1, N2) of nontrivial normal subgroups with trivial
/// intersection and |N1||N2| = |G|, scanning |N1| ascending.
std::optional<std::pair<Subgroup, Subgroup>> find_direct_split(const Group &G);

bool is_directly_indecomposable(const Group &G);

/// Splits recursively until every factor is indecomposable. The trivial
/// group yields one trivial factor.
Decomposition decompose_indecomposable(const Group &G);

/// Left-associated iterated direct product of the given groups.
Group iterated_product(std::span<const Group> factors);

/// Index of a coordinate tuple in iterated_product (mixed radix, first
/// coordinate most significant) and its inverse.
Element tuple_index(std::span<const Element> coords,
                    std::span<const Group> factors);
std::vector<Element> tuple_coordinates(Element index,
                                       std::span<const Group> factors);

} // namespace grpiso
