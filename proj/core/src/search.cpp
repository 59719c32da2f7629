#include "search.hpp"

#include <algorithm>
#include <map>

namespace grpiso::detail {

std::vector<ElementKey> element_keys(const Group &G) {
  const std::size_t n = G.order();
  std::vector<ElementKey> keys(n);
  std::vector<std::uint32_t> roots(n, 0);
  for (Element x = 0; x < n; ++x)
    ++roots[G.mul(x, x)];
  for (Element g = 0; g < n; ++g) {
    std::uint32_t centralizer = 0;
    for (Element x = 0; x < n; ++x)
      centralizer += G.mul(g, x) == G.mul(x, g);
    keys[g] = {G.element_order(g), static_cast<std::uint32_t>(n / centralizer),
               roots[g]};
  }
  return keys;
}

std::vector<Element> generating_sequence(const Group &G,
                                         const std::vector<ElementKey> &keys) {
  const std::size_t n = G.order();
  std::map<ElementKey, std::size_t> multiplicity;
  for (const auto &k : keys)
    ++multiplicity[k];

  std::vector<Element> gens;
  std::vector<bool> in(n, false);
  in[0] = true;
  std::size_t covered = 1;
  std::vector<bool> scratch(n);
  std::vector<Element> list;
  while (covered < n) {
    Element best = 0;
    std::size_t best_size = 0, best_mult = 0;
    for (Element x = 1; x < n; ++x) {
      if (in[x])
        continue;
      std::fill(scratch.begin(), scratch.end(), false);
      list.assign(1, 0);
      scratch[0] = true;
      for (std::size_t i = 0; i < list.size(); ++i) {
        auto step = [&](Element s) {
          const Element y = G.mul(list[i], s);
          if (!scratch[y]) {
            scratch[y] = true;
            list.push_back(y);
          }
        };
        for (Element s : gens)
          step(s);
        step(x);
      }
      const std::size_t mult = multiplicity[keys[x]];
      if (list.size() > best_size ||
          (list.size() == best_size && mult < best_mult)) {
        best = x;
        best_size = list.size();
        best_mult = mult;
      }
    }
    gens.push_back(best);
    // Recompute membership for the chosen extension.
    std::fill(in.begin(), in.end(), false);
    list.assign(1, 0);
    in[0] = true;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Element s : gens) {
        const Element y = G.mul(list[i], s);
        if (!in[y]) {
          in[y] = true;
          list.push_back(y);
        }
      }
    covered = list.size();
  }
  return gens;
}

Matcher::Matcher(const Group &source, const Group &target,
                 std::vector<Element> generators,
                 const std::vector<ElementKey> &source_keys,
                 const std::vector<ElementKey> &target_keys)
    : source_(source), target_(target), gens_(std::move(generators)),
      candidates_(gens_.size()), gen_images_(gens_.size(), unset),
      phi_(source.order(), unset), used_(target.order(), false),
      mark_(gens_.size(), 0) {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (Element y = 0; y < target.order(); ++y)
      if (target_keys[y] == source_keys[gens_[i]])
        candidates_[i].push_back(y);
  phi_[0] = 0;
  used_[0] = true;
  known_.push_back(0);
}

bool Matcher::assign(std::size_t level, Element y) {
  if (used_[y])
    return false;
  const std::size_t old = known_.size();
  mark_[level] = old;
  gen_images_[level] = y;
  for (std::size_t idx = 0; idx < known_.size(); ++idx) {
    const Element a = known_[idx];
    const std::size_t first = idx < old ? level : 0;
    for (std::size_t j = first; j <= level; ++j) {
      const Element b = source_.mul(a, gens_[j]);
      const Element img = target_.mul(phi_[a], gen_images_[j]);
      if (phi_[b] == unset) {
        if (used_[img]) {
          unassign(level);
          return false;
        }
        phi_[b] = img;
        used_[img] = true;
        known_.push_back(b);
      } else if (phi_[b] != img) {
        unassign(level);
        return false;
      }
    }
  }
  return true;
}

void Matcher::unassign(std::size_t level) {
  for (std::size_t idx = mark_[level]; idx < known_.size(); ++idx) {
    used_[phi_[known_[idx]]] = false;
    phi_[known_[idx]] = unset;
  }
  known_.resize(mark_[level]);
  gen_images_[level] = unset;
}

} // namespace grpiso::detail
