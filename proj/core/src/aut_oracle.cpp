#include "grpiso/aut_oracle.hpp"

#include <algorithm>
#include <map>

#include "grpiso/abelian.hpp"
#include "grpiso/error.hpp"
#include "search.hpp"

namespace grpiso {

namespace {

// Orbit of x under the given permutations, as a membership mask.
std::vector<bool> orbit_mask(std::size_t n, Element x,
                             const std::vector<Permutation> &gens) {
  std::vector<bool> in(n, false);
  std::vector<Element> list{x};
  in[x] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto &g : gens) {
      const Element y = g[list[i]];
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return in;
}

bool same_key_multiset(std::vector<detail::ElementKey> a,
                       std::vector<detail::ElementKey> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Runs f on each isomorphism G -> H until it returns true.
template <class F> void for_each_isomorphism(const Group &G, const Group &H,
                                             F &&f) {
  if (G.order() != H.order())
    return;
  const auto kg = detail::element_keys(G);
  const auto kh = detail::element_keys(H);
  if (!same_key_multiset(kg, kh))
    return;
  detail::Matcher m(G, H, detail::generating_sequence(G, kg), kg, kh);
  m.search(0, f);
}

} // namespace

PermGroup agen(const Group &G) {
  const std::size_t n = G.order();
  const auto keys = detail::element_keys(G);
  detail::Matcher m(G, G, detail::generating_sequence(G, keys), keys, keys);
  const std::size_t k = m.levels();

  std::vector<Permutation> found;
  for (std::size_t level = k; level-- > 0;) {
    for (std::size_t j = 0; j < level; ++j)
      m.assign(j, m.generator(j));
    const Element x = m.generator(level);
    std::vector<bool> orbit = orbit_mask(n, x, found);
    for (Element c : m.candidates(level)) {
      if (orbit[c] || !m.assign(level, c))
        continue;
      std::optional<Permutation> hit;
      m.search(level + 1, [&](const std::vector<Element> &phi) {
        hit.emplace(phi);
        return true;
      });
      m.unassign(level);
      if (hit) {
        found.push_back(std::move(*hit));
        orbit = orbit_mask(n, x, found);
      }
    }
    for (std::size_t j = level; j-- > 0;)
      m.unassign(j);
  }
  if (found.empty())
    found.push_back(Permutation::identity(n));
  return PermGroup(n, std::move(found));
}

Count acount(const Group &G) { return agen(G).order(); }

Partition apart(const Group &G) { return agen(G).orbits(); }

std::optional<Homomorphism> brute_iso(const Group &G, const Group &H) {
  std::optional<Homomorphism> out;
  for_each_isomorphism(G, H, [&](const std::vector<Element> &phi) {
    out = Homomorphism::unchecked(G, H, phi);
    return true;
  });
  return out;
}

Count brute_iso_count(const Group &G, const Group &H) {
  Count count = 0;
  for_each_isomorphism(G, H, [&](const std::vector<Element> &) {
    ++count;
    return false;
  });
  return count;
}

std::vector<Homomorphism> all_isomorphisms(const Group &G, const Group &H) {
  std::vector<Homomorphism> out;
  for_each_isomorphism(G, H, [&](const std::vector<Element> &phi) {
    out.push_back(Homomorphism::unchecked(G, H, phi));
    return false;
  });
  return out;
}

std::vector<Homomorphism> automorphisms(const Group &G) {
  return all_isomorphisms(G, G);
}

Permutation as_permutation(const Homomorphism &automorphism) {
  if (!(automorphism.source() == automorphism.target()))
    throw Error(Errc::DomainMismatch, "not an endomorphism");
  return Permutation(std::vector<Element>(automorphism.images().begin(),
                                          automorphism.images().end()));
}

std::vector<Homomorphism> homs_to_central(const Group &G, const Group &H) {
  const Quotient ab = quotient(G, derived_subgroup(G));
  const InducedGroup z = as_group(center(H));
  const CyclicDecomposition dec = cyclic_decomposition(ab.group);

  std::vector<std::vector<Element>> choices(dec.size());
  for (std::size_t i = 0; i < dec.size(); ++i)
    for (Element y = 0; y < z.group.order(); ++y)
      if (dec.orders()[i] % z.group.element_order(y) == 0)
        choices[i].push_back(y);

  std::vector<Homomorphism> out;
  std::vector<std::size_t> pick(dec.size(), 0);
  std::vector<Element> images(dec.size());
  while (true) {
    for (std::size_t i = 0; i < dec.size(); ++i)
      images[i] = choices[i][pick[i]];
    const Homomorphism lifted = extend_from_generators(dec, z.group, images);
    out.push_back(hom_compose(z.inclusion, hom_compose(lifted, ab.projection)));
    std::size_t i = dec.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size())
      pick[--i] = 0;
    if (i == 0)
      break;
  }
  return out;
}

void validate(const FormalMatrix &m) {
  const Group &G = m.alpha.source();
  const Group &H = m.delta.source();
  if (!(m.alpha.target() == G) || !(m.delta.target() == H) ||
      !(m.beta.source() == H) || !(m.beta.target() == G) ||
      !(m.gamma.source() == G) || !(m.gamma.target() == H))
    throw Error(Errc::DomainMismatch, "formal matrix entries do not line up");
  if (!is_isomorphism(m.alpha) || !is_isomorphism(m.delta))
    throw Error(Errc::NotIsomorphism, "diagonal entry is not an automorphism");
  const Subgroup zg = center(G), zh = center(H);
  for (Element y : m.beta.images())
    if (!zg.contains(y))
      throw Error(Errc::NotHomomorphism, "beta leaves the center of G");
  for (Element y : m.gamma.images())
    if (!zh.contains(y))
      throw Error(Errc::NotHomomorphism, "gamma leaves the center of H");
}

Permutation matrix_action(const FormalMatrix &m) {
  validate(m);
  const Group &G = m.alpha.source();
  const Group &H = m.delta.source();
  std::vector<Element> img(G.order() * H.order());
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < H.order(); ++h)
      img[pair_index(G, H, g, h)] =
          pair_index(G, H, G.mul(m.alpha(g), m.beta(h)),
                     H.mul(m.gamma(g), m.delta(h)));
  return Permutation(std::move(img));
}

Count formal_matrix_count(const Group &G, const Group &H) {
  return acount(G) * acount(H) * hom_count_to_center(G, H) *
         hom_count_to_center(H, G);
}

std::vector<Permutation> build_matrix_group(const Group &G, const Group &H) {
  const auto alphas = automorphisms(G);
  const auto deltas = automorphisms(H);
  const auto betas = homs_to_central(H, G);
  const auto gammas = homs_to_central(G, H);

  std::vector<Permutation> out;
  out.reserve(alphas.size() * betas.size() * gammas.size() * deltas.size());
  std::vector<Element> img(G.order() * H.order());
  for (const auto &alpha : alphas)
    for (const auto &beta : betas)
      for (const auto &gamma : gammas)
        for (const auto &delta : deltas) {
          for (Element g = 0; g < G.order(); ++g)
            for (Element h = 0; h < H.order(); ++h)
              img[pair_index(G, H, g, h)] =
                  pair_index(G, H, G.mul(alpha(g), beta(h)),
                             H.mul(gamma(g), delta(h)));
          out.emplace_back(img);
        }
  return out;
}

Permutation build_flip(const Homomorphism &pi) {
  const Homomorphism back = hom_inverse(pi);
  const Group &G = pi.source();
  const Group &H = pi.target();
  std::vector<Element> img(G.order() * H.order());
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < H.order(); ++h)
      img[pair_index(G, H, g, h)] = pair_index(G, H, back(h), pi(g));
  return Permutation(std::move(img));
}

} // namespace grpiso
