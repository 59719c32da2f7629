#pragma once

#include <cstddef>

#include "grpiso/group.hpp"

namespace grpiso::catalog {

// Element orderings are part of the contract:
//   cyclic       g^i has index i
//   dihedral     r^i at i, r^i s at n+i (order 2n)
//   quaternion   x^i at i, x^i y at n/2+i (order n)
//   symmetric    permutations in lexicographic rank; product is p.q(x) = p(q(x))
//   alternating  even permutations in lexicographic rank
//   elementary   vectors over Z_p, first coordinate most significant

Group cyclic(std::size_t n);

/// Dihedral group of order 2n, n >= 2.
Group dihedral(std::size_t n);

/// Generalized quaternion group of order n, n a power of two, n >= 8.
Group quaternion(std::size_t n);

Group symmetric(std::size_t degree);
Group alternating(std::size_t degree);

/// (Z_p)^k for prime p.
Group elementary_abelian(std::size_t p, std::size_t k);

bool is_prime(std::size_t p);

} // namespace grpiso::catalog
