#pragma once

#include <optional>
#include <vector>

#include "grpiso/count.hpp"
#include "grpiso/group.hpp"
#include "grpiso/perm_group.hpp"

namespace grpiso {

/// Generators of Aut(G) as permutations of G's element indices.
///
/// Built as a stabilizer chain of Aut(G) acting on an irredundant generating
/// sequence x_1..x_k of G: for i = k..1, every image of x_i not already in
/// the orbit of the automorphisms found so far is tested by searching for
/// one automorphism fixing x_1..x_{i-1} and sending x_i there. The output is
/// deterministic; a group with trivial Aut(G) yields the identity alone.
PermGroup agen(const Group &G);

/// |Aut(G)|, equal to group_order(agen(G)).
Count acount(const Group &G);

/// Orbits of Aut(G) on G. The identity is always a singleton.
Partition apart(const Group &G);

/// Some isomorphism G -> H by exhaustive search over generator images, or
/// nothing. Deterministic in the input tables.
std::optional<Homomorphism> brute_iso(const Group &G, const Group &H);

/// Number of isomorphisms G -> H, by exhaustive enumeration.
Count brute_iso_count(const Group &G, const Group &H);

/// Every isomorphism G -> H in search order.
std::vector<Homomorphism> all_isomorphisms(const Group &G, const Group &H);

/// Every automorphism of G (= all_isomorphisms(G, G)).
std::vector<Homomorphism> automorphisms(const Group &G);

/// The permutation of G's elements given by an automorphism.
Permutation as_permutation(const Homomorphism &automorphism);

/// All homomorphisms G -> H whose image lies in Z(H), obtained by lifting
/// Hom(G/[G,G], Z(H)) through the projection.
std::vector<Homomorphism> homs_to_central(const Group &G, const Group &H);

/// Matrix [[alpha, beta], [gamma, delta]] acting on G x H by
///   (g, h) -> (alpha(g) beta(h), gamma(g) delta(h)).
struct FormalMatrix {
  Homomorphism alpha; // G -> G, automorphism
  Homomorphism beta;  // H -> Z(G)
  Homomorphism gamma; // G -> Z(H)
  Homomorphism delta; // H -> H, automorphism
};

/// Checks the entry types (DomainMismatch, NotIsomorphism, NotHomomorphism
/// for a non-central off-diagonal image).
void validate(const FormalMatrix &m);

/// The action of m on G x H (row-major pairs). Throws NotPermutation when
/// the matrix is not invertible.
Permutation matrix_action(const FormalMatrix &m);

/// |Aut(G)| |Aut(H)| |Hom(G, Z(H))| |Hom(H, Z(G))|: the number of formal
/// matrices.
Count formal_matrix_count(const Group &G, const Group &H);

/// One permutation of G x H per formal matrix, alpha outermost and delta
/// innermost. Throws NotPermutation if some matrix is not invertible, which
/// can only happen when G and H share a direct factor.
std::vector<Permutation> build_matrix_group(const Group &G, const Group &H);

/// (g, h) -> (pi^-1(h), pi(g)) on G x H. Throws NotIsomorphism.
Permutation build_flip(const Homomorphism &pi);

} // namespace grpiso
