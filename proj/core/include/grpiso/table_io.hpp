#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grpiso/group.hpp"

namespace grpiso {

/// Cayley-table text format:
///
///   # optional comment lines, only before the header
///   n
///   t00 t01 ... t0(n-1)
///   ...
///
/// Entries are decimal, separated by single spaces, every line ends in '\n'
/// (including the last one) and element 0 must be the identity.
Group parse_cayley_table(std::string_view text);
Group read_cayley_file(const std::string &path);

std::string format_cayley_table(const Group &G);
void write_cayley_file(const Group &G, const std::string &path);

/// Homomorphism as a list of pairs, one "g<TAB>phi(g)" line per source
/// element in ascending order.
std::string format_pair_list(const Homomorphism &phi);

/// Accepts the lines in any order but every source element exactly once;
/// the result is validated with build_hom.
Homomorphism parse_pair_list(std::string_view text, const Group &source,
                             const Group &target);

} // namespace grpiso
