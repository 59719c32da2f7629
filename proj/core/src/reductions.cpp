#include "grpiso/reductions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "grpiso/abelian.hpp"
#include "grpiso/aut_oracle.hpp"
#include "grpiso/error.hpp"

namespace grpiso {

PermGroup BacktrackOracle::agen(const Group &G) { return grpiso::agen(G); }
Count BacktrackOracle::acount(const Group &G) { return grpiso::acount(G); }
Partition BacktrackOracle::apart(const Group &G) { return grpiso::apart(G); }

std::size_t OracleStats::max_input_order() const noexcept {
  std::size_t m = 0;
  for (std::size_t n : input_orders)
    m = std::max(m, n);
  return m;
}

OracleStats &OracleStats::merge(const OracleStats &other) {
  agen_calls += other.agen_calls;
  acount_calls += other.acount_calls;
  apart_calls += other.apart_calls;
  input_orders.insert(input_orders.end(), other.input_orders.begin(),
                      other.input_orders.end());
  return *this;
}

std::string_view pair_class_name(PairClass c) noexcept {
  switch (c) {
  case PairClass::BothAbelian: return "both-abelian";
  case PairClass::OneAbelian: return "one-abelian";
  case PairClass::BothNonabelian: return "both-nonabelian";
  }
  return "?";
}

namespace {

PermGroup call_agen(AutOracle &o, OracleStats &s, const Group &G) {
  ++s.agen_calls;
  s.input_orders.push_back(G.order());
  return o.agen(G);
}

Count call_acount(AutOracle &o, OracleStats &s, const Group &G) {
  ++s.acount_calls;
  s.input_orders.push_back(G.order());
  return o.acount(G);
}

Partition call_apart(AutOracle &o, OracleStats &s, const Group &G) {
  ++s.apart_calls;
  s.input_orders.push_back(G.order());
  return o.apart(G);
}

enum class Route { Acount, Apart, Agen };

struct PairOutcome {
  PairVerdict verdict;
  std::optional<Homomorphism> iso; // Agen route only
};

PairOutcome compare_factors(const Group &Gi, const Group &Hj, Route route,
                            AutOracle &oracle, OracleStats &stats) {
  const bool ag = is_abelian(Gi), ah = is_abelian(Hj);
  PairOutcome out;
  out.verdict.classification = ag && ah   ? PairClass::BothAbelian
                               : ag || ah ? PairClass::OneAbelian
                                          : PairClass::BothNonabelian;
  if (Gi.order() != Hj.order()) {
    out.verdict.order_mismatch = true;
    return out;
  }
  switch (out.verdict.classification) {
  case PairClass::OneAbelian:
    return out;
  case PairClass::BothAbelian:
    // Indecomposable abelian groups are cyclic of prime-power order.
    if (route == Route::Agen) {
      out.iso = abelian_iso(Gi, Hj);
      out.verdict.isomorphic = out.iso.has_value();
    } else {
      out.verdict.isomorphic = true;
    }
    return out;
  case PairClass::BothNonabelian:
    break;
  }

  switch (route) {
  case Route::Acount:
    out.verdict = epsilon_for_pair(Gi, Hj, oracle, stats);
    break;
  case Route::Apart: {
    const Group P = direct_product(Gi, Hj).group;
    const Partition blocks = call_apart(oracle, stats, P);
    out.verdict.isomorphic =
        !is_union_of_blocks(left_times_center(Gi, Hj), blocks);
    break;
  }
  case Route::Agen: {
    const Group P = direct_product(Gi, Hj).group;
    const PermGroup aut = call_agen(oracle, stats, P);
    const Subgroup S = left_times_center(Gi, Hj);
    for (const Permutation &psi : aut.generators()) {
      if (stabilizes(psi, S))
        continue;
      out.iso = extract_factor_isomorphism(Gi, Hj, psi);
      break;
    }
    out.verdict.isomorphic = out.iso.has_value();
    break;
  }
  }
  return out;
}

struct Matched {
  Decomposition decG;
  Decomposition decH;
  std::optional<std::vector<std::size_t>> matching;
  std::map<std::pair<std::size_t, std::size_t>, Homomorphism> isos;
};

Matched match_with(const Group &G, const Group &H, Route route,
                   AutOracle &oracle, OracleStats &stats, PairLog *log) {
  Matched m{decompose_indecomposable(G), decompose_indecomposable(H), {}, {}};
  m.matching = match_factors(
      m.decG, m.decH, [&](std::size_t i, std::size_t j) {
        PairOutcome o =
            compare_factors(m.decG.external_factors[i],
                            m.decH.external_factors[j], route, oracle, stats);
        if (log)
          log->push_back({i, j, o.verdict});
        if (o.iso)
          m.isos.emplace(std::make_pair(i, j), std::move(*o.iso));
        return o.verdict.isomorphic;
      });
  return m;
}

} // namespace

PairVerdict epsilon_for_pair(const Group &Gi, const Group &Hj,
                             AutOracle &oracle, OracleStats &stats) {
  const Group P = direct_product(Gi, Hj).group;
  const Count aut_product = call_acount(oracle, stats, P);
  const Count aut_g = call_acount(oracle, stats, Gi);
  const Count aut_h = call_acount(oracle, stats, Hj);
  const Count base = aut_g * aut_h * hom_count_to_center(Gi, Hj) *
                     hom_count_to_center(Hj, Gi);
  if (base == 0 || aut_product % base != 0)
    throw Error(Errc::EpsilonOutOfRange,
                "|Aut(G x H)| = " + aut_product.str() +
                    " is not a multiple of " + base.str());
  const Count eps = aut_product / base;
  if (eps != 1 && eps != 2)
    throw Error(Errc::EpsilonOutOfRange, "epsilon = " + eps.str());

  PairVerdict v;
  v.classification = PairClass::BothNonabelian;
  v.epsilon = static_cast<int>(eps);
  v.isomorphic = eps == 2;
  return v;
}

bool iso_via_acount(const Group &G, const Group &H, AutOracle &oracle,
                    OracleStats &stats, PairLog *log) {
  if (G.order() != H.order())
    return false;
  return match_with(G, H, Route::Acount, oracle, stats, log)
      .matching.has_value();
}

bool iso_via_apart(const Group &G, const Group &H, AutOracle &oracle,
                   OracleStats &stats, PairLog *log) {
  if (G.order() != H.order())
    return false;
  return match_with(G, H, Route::Apart, oracle, stats, log)
      .matching.has_value();
}

std::optional<Homomorphism> imap_via_agen(const Group &G, const Group &H,
                                          AutOracle &oracle,
                                          OracleStats &stats, PairLog *log) {
  if (G.order() != H.order())
    return std::nullopt;
  Matched m = match_with(G, H, Route::Agen, oracle, stats, log);
  if (!m.matching)
    return std::nullopt;
  std::vector<Homomorphism> factor_isos;
  for (std::size_t i = 0; i < m.matching->size(); ++i)
    factor_isos.push_back(m.isos.at({i, (*m.matching)[i]}));
  return assemble_isomorphism(m.decG, m.decH, *m.matching, factor_isos);
}

Count icount_via_acount(const Group &G, const Group &H, AutOracle &oracle,
                        OracleStats &stats, PairLog *log) {
  if (!iso_via_acount(G, H, oracle, stats, log))
    return 0;
  return call_acount(oracle, stats, G);
}

Count acount_via_agen(const Group &G, AutOracle &oracle, OracleStats &stats) {
  return call_agen(oracle, stats, G).order();
}

Partition apart_via_agen(const Group &G, AutOracle &oracle,
                         OracleStats &stats) {
  return call_agen(oracle, stats, G).orbits();
}

std::optional<std::vector<std::size_t>>
match_factors(const Decomposition &decG, const Decomposition &decH,
              const PairTest &pair_test) {
  const std::size_t k = decG.size(), m = decH.size();
  if (k != m)
    return std::nullopt;
  std::vector<bool> taken(m, false);
  std::vector<std::size_t> sigma(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m && !found; ++j) {
      if (taken[j] || !pair_test(i, j))
        continue;
      sigma[i] = j;
      taken[j] = true;
      found = true;
    }
    if (!found)
      return std::nullopt;
  }
  return sigma;
}

Homomorphism assemble_isomorphism(const Decomposition &decG,
                                  const Decomposition &decH,
                                  std::span<const std::size_t> matching,
                                  std::span<const Homomorphism> factor_isos) {
  const std::size_t k = decG.size();
  if (matching.size() != k || factor_isos.size() != k || decH.size() != k)
    throw Error(Errc::ValidationFailed, "matching is not total");
  for (std::size_t i = 0; i < k; ++i)
    if (!(factor_isos[i].source() == decG.external_factors[i]) ||
        !(factor_isos[i].target() == decH.external_factors[matching[i]]) ||
        !is_isomorphism(factor_isos[i]))
      throw Error(Errc::ValidationFailed,
                  "factor map " + std::to_string(i) +
                      " is not an isomorphism onto its matched factor");

  const Homomorphism back = hom_inverse(decH.witness);
  const Group &G = decG.parent;
  std::vector<Element> images(G.order());
  std::vector<Element> target(k);
  for (Element g = 0; g < G.order(); ++g) {
    const auto coords =
        tuple_coordinates(decG.witness(g), decG.external_factors);
    for (std::size_t i = 0; i < k; ++i)
      target[matching[i]] = factor_isos[i](coords[i]);
    images[g] = back(tuple_index(target, decH.external_factors));
  }
  try {
    Homomorphism phi = build_hom(G, decH.parent, std::move(images));
    if (!is_isomorphism(phi))
      throw Error(Errc::ValidationFailed, "assembled map is not bijective");
    return phi;
  } catch (const Error &e) {
    if (e.code() == Errc::ValidationFailed)
      throw;
    throw Error(Errc::ValidationFailed, e.what());
  }
}

Subgroup left_times_center(const Group &G, const Group &H) {
  const Subgroup z = center(H);
  std::vector<Element> elems;
  for (Element g = 0; g < G.order(); ++g)
    for (Element h : z.elements())
      elems.push_back(pair_index(G, H, g, h));
  return Subgroup::from_elements(direct_product(G, H).group, std::move(elems));
}

bool is_union_of_blocks(const Subgroup &S, const Partition &blocks) {
  for (const auto &block : blocks) {
    std::size_t inside = 0;
    for (Element x : block)
      inside += S.contains(x);
    if (inside != 0 && inside != block.size())
      return false;
  }
  return true;
}

bool stabilizes(const Permutation &p, const Subgroup &S) {
  for (Element x : S.elements())
    if (!S.contains(p[x]))
      return false;
  return true;
}

Homomorphism extract_factor_isomorphism(const Group &G, const Group &H,
                                        const Permutation &psi) {
  if (psi.size() != G.order() * H.order())
    throw Error(Errc::ExtractionFailed, "permutation is not on G x H");
  std::vector<Element> images(G.order());
  for (Element g = 0; g < G.order(); ++g)
    images[g] = static_cast<Element>(psi[pair_index(G, H, g, 0)] % H.order());
  try {
    Homomorphism phi = build_hom(G, H, std::move(images));
    if (!is_isomorphism(phi))
      throw Error(Errc::ExtractionFailed, "projected map is not bijective");
    return phi;
  } catch (const Error &e) {
    if (e.code() == Errc::ExtractionFailed)
      throw;
    throw Error(Errc::ExtractionFailed, e.what());
  }
}

std::string format_pair_log(const PairLog &log, bool tsv) {
  std::string out;
  for (const auto &r : log) {
    const auto &v = r.verdict;
    const std::string eps = v.epsilon ? std::to_string(*v.epsilon) : "-";
    if (tsv) {
      out += "pair\t" + std::to_string(r.left) + '\t' +
             std::to_string(r.right) + '\t' +
             std::string(pair_class_name(v.classification)) + '\t' +
             (v.isomorphic ? "isomorphic" : "not-isomorphic") + '\t' + eps +
             '\t' + (v.order_mismatch ? "order-mismatch" : "-") + '\n';
    } else {
      out += "pair " + std::to_string(r.left) + ' ' + std::to_string(r.right) +
             ' ' + std::string(pair_class_name(v.classification)) + ' ' +
             (v.isomorphic ? "isomorphic" : "not-isomorphic");
      if (v.epsilon)
        out += " epsilon=" + eps;
      if (v.order_mismatch)
        out += " order-mismatch";
      out += '\n';
    }
  }
  return out;
}

std::string format_stats(const OracleStats &stats, bool tsv) {
  const char sep = tsv ? '\t' : ' ';
  std::string orders;
  for (std::size_t i = 0; i < stats.input_orders.size(); ++i) {
    if (i)
      orders += ',';
    orders += std::to_string(stats.input_orders[i]);
  }
  if (orders.empty())
    orders = "-";
  std::string out;
  out += std::string("oracle") + sep + "calls\n";
  out += std::string("agen") + sep + std::to_string(stats.agen_calls) + '\n';
  out += std::string("acount") + sep + std::to_string(stats.acount_calls) + '\n';
  out += std::string("apart") + sep + std::to_string(stats.apart_calls) + '\n';
  out += std::string("max-input-order") + sep +
         std::to_string(stats.max_input_order()) + '\n';
  out += std::string("input-orders") + sep + orders + '\n';
  return out;
}

} // namespace grpiso
