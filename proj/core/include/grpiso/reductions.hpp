#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpiso/count.hpp"
#include "grpiso/decompose.hpp"
#include "grpiso/group.hpp"
#include "grpiso/perm_group.hpp"

namespace grpiso {

/// The automorphism problems as an injectable oracle. Implementations must
/// answer consistently: acount(G) = |agen(G)| and apart(G) = orbits of
/// agen(G).
class AutOracle {
public:
  virtual ~AutOracle() = default;
  virtual PermGroup agen(const Group &G) = 0;
  virtual Count acount(const Group &G) = 0;
  virtual Partition apart(const Group &G) = 0;
};

/// The concrete oracle backed by the backtracking search in aut_oracle.hpp.
class BacktrackOracle final : public AutOracle {
public:
  PermGroup agen(const Group &G) override;
  Count acount(const Group &G) override;
  Partition apart(const Group &G) override;
};

/// Oracle calls made by a reduction, with the order of every group passed.
struct OracleStats {
  std::size_t agen_calls = 0;
  std::size_t acount_calls = 0;
  std::size_t apart_calls = 0;
  std::vector<std::size_t> input_orders;

  std::size_t total_calls() const noexcept {
    return agen_calls + acount_calls + apart_calls;
  }
  std::size_t max_input_order() const noexcept;
  OracleStats &merge(const OracleStats &other);
};

enum class PairClass { BothAbelian, OneAbelian, BothNonabelian };

std::string_view pair_class_name(PairClass c) noexcept;

/// Outcome of comparing two directly indecomposable factors.
struct PairVerdict {
  PairClass classification = PairClass::BothAbelian;
  bool isomorphic = false;
  /// Only for both-nonabelian pairs decided through automorphism counts.
  std::optional<int> epsilon;
  bool order_mismatch = false;
};

struct PairRecord {
  std::size_t left = 0;  // factor index in G
  std::size_t right = 0; // factor index in H
  PairVerdict verdict;
};
using PairLog = std::vector<PairRecord>;

/// eps = |Aut(Gi x Hj)| / (|Aut Gi| |Aut Hj| |Hom(Gi, Z(Hj))| |Hom(Hj, Z(Gi))|)
/// with exactly three acount calls. Gi and Hj must be indecomposable,
/// nonabelian and of equal order. Throws EpsilonOutOfRange unless the
/// quotient is exactly 1 or 2.
PairVerdict epsilon_for_pair(const Group &Gi, const Group &Hj,
                             AutOracle &oracle, OracleStats &stats);

/// Isomorphism through automorphism counts of factor products.
bool iso_via_acount(const Group &G, const Group &H, AutOracle &oracle,
                    OracleStats &stats, PairLog *log = nullptr);

/// Isomorphism through the automorphic partition: a nonabelian factor pair
/// is isomorphic iff S = Gi x Z(Hj) is not a union of blocks of
/// apart(Gi x Hj).
bool iso_via_apart(const Group &G, const Group &H, AutOracle &oracle,
                   OracleStats &stats, PairLog *log = nullptr);

/// An isomorphism G -> H built from one agen call per nonabelian factor
/// pair, or nothing if G and H are not isomorphic. Throws ExtractionFailed
/// if a generator moves S but does not yield an isomorphism.
std::optional<Homomorphism> imap_via_agen(const Group &G, const Group &H,
                                          AutOracle &oracle,
                                          OracleStats &stats,
                                          PairLog *log = nullptr);

/// 0 if G and H are not isomorphic, |Aut(G)| otherwise.
Count icount_via_acount(const Group &G, const Group &H, AutOracle &oracle,
                        OracleStats &stats, PairLog *log = nullptr);

/// One agen call, then the order / orbits of the returned generators.
Count acount_via_agen(const Group &G, AutOracle &oracle, OracleStats &stats);
Partition apart_via_agen(const Group &G, AutOracle &oracle,
                         OracleStats &stats);

/// Isomorphism test between factor i of G and factor j of H.
using PairTest = std::function<bool(std::size_t, std::size_t)>;

/// Greedy matching: factor i of G goes to the first unmatched factor of H
/// that passes pair_test. Isomorphism is an equivalence, so this finds a
/// perfect matching whenever one exists. At most k*m tests.
std::optional<std::vector<std::size_t>>
match_factors(const Decomposition &decG, const Decomposition &decH,
              const PairTest &pair_test);

/// G -> prod G_i -> prod H_sigma(i) -> H, where factor_isos[i] maps
/// external factor i of G onto external factor matching[i] of H. Throws
/// ValidationFailed if the composite is not an isomorphism.
Homomorphism assemble_isomorphism(const Decomposition &decG,
                                  const Decomposition &decH,
                                  std::span<const std::size_t> matching,
                                  std::span<const Homomorphism> factor_isos);

/// S = G x Z(H) as a subgroup of direct_product(G, H).
Subgroup left_times_center(const Group &G, const Group &H);

bool is_union_of_blocks(const Subgroup &S, const Partition &blocks);
bool stabilizes(const Permutation &p, const Subgroup &S);

/// g -> proj_H(psi((g, 1))). Throws ExtractionFailed unless this is an
/// isomorphism G -> H.
Homomorphism extract_factor_isomorphism(const Group &G, const Group &H,
                                        const Permutation &psi);

/// Line-oriented reports. Text aligns columns with spaces; tsv uses tabs.
std::string format_pair_log(const PairLog &log, bool tsv);
std::string format_stats(const OracleStats &stats, bool tsv);

} // namespace grpiso
