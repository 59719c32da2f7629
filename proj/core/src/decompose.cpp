#include "grpiso/decompose.hpp"

#include <algorithm>
#include <set>

#include "grpiso/error.hpp"

namespace grpiso {

namespace {

bool meets_trivially(const Subgroup &a, const Subgroup &b) {
  for (Element x : a.elements())
    if (x != 0 && b.contains(x))
      return false;
  return true;
}

} // namespace

std::vector<Subgroup> normal_subgroups(const Group &G) {
  const auto classes = conjugacy_classes(G);
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> queue{Subgroup::trivial(G)};
  seen.insert({0});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto &cls : classes) {
      if (queue[i].contains(cls.front()))
        continue;
      std::vector<Element> seed(queue[i].elements().begin(),
                                queue[i].elements().end());
      seed.insert(seed.end(), cls.begin(), cls.end());
      Subgroup joined = subgroup_closure(G, seed);
      std::vector<Element> key(joined.elements().begin(),
                               joined.elements().end());
      if (seen.insert(std::move(key)).second)
        queue.push_back(std::move(joined));
    }
  }
  std::sort(queue.begin(), queue.end(),
            [](const Subgroup &a, const Subgroup &b) {
              if (a.order() != b.order())
                return a.order() < b.order();
              return std::ranges::lexicographical_compare(a.elements(),
                                                          b.elements());
            });
  return queue;
}

std::optional<std::pair<Subgroup, Subgroup>> find_direct_split(const Group &G) {
  const std::size_t n = G.order();
  const auto normals = normal_subgroups(G);
  for (const auto &a : normals) {
    if (a.order() == 1 || a.order() == n || n % a.order() != 0)
      continue;
    for (const auto &b : normals) {
      if (b.order() * a.order() != n)
        continue;
      if (meets_trivially(a, b))
        return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool is_directly_indecomposable(const Group &G) {
  return G.order() == 1 || !find_direct_split(G);
}

Group iterated_product(std::span<const Group> factors) {
  if (factors.empty())
    return Group::unchecked(1, {0});
  Group out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = direct_product(out, factors[i]).group;
  return out;
}

Element tuple_index(std::span<const Element> coords,
                    std::span<const Group> factors) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    idx = idx * factors[i].order() + coords[i];
  return static_cast<Element>(idx);
}

std::vector<Element> tuple_coordinates(Element index,
                                       std::span<const Group> factors) {
  std::vector<Element> coords(factors.size());
  std::size_t rest = index;
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(rest % factors[i].order());
    rest /= factors[i].order();
  }
  return coords;
}

namespace {

// Internal factors as element lists of G.
void split_recursive(const Group &G, const Homomorphism &into_parent,
                     std::vector<std::vector<Element>> &out) {
  auto split = find_direct_split(G);
  if (!split) {
    out.emplace_back(into_parent.images().begin(), into_parent.images().end());
    return;
  }
  for (const Subgroup *part : {&split->first, &split->second}) {
    const InducedGroup sub = as_group(*part);
    split_recursive(sub.group, hom_compose(into_parent, sub.inclusion), out);
  }
}

} // namespace

Decomposition decompose_indecomposable(const Group &G) {
  std::vector<std::vector<Element>> parts;
  split_recursive(G, identity_hom(G), parts);

  std::vector<Subgroup> internal;
  std::vector<Group> external;
  std::vector<Homomorphism> inclusions;
  for (auto &elems : parts) {
    internal.push_back(Subgroup::from_elements(G, std::move(elems)));
    InducedGroup sub = as_group(internal.back());
    external.push_back(sub.group);
    inclusions.push_back(sub.inclusion);
  }

  Group product = iterated_product(external);
  constexpr Element unset = ~Element{0};
  std::vector<Element> witness(G.order(), unset);
  for (Element t = 0; t < product.order(); ++t) {
    const auto coords = tuple_coordinates(t, external);
    Element g = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      g = G.mul(g, inclusions[i](coords[i]));
    if (witness[g] != unset)
      throw Error(Errc::ValidationFailed,
                  "factors do not form an internal direct product");
    witness[g] = t;
  }
  Homomorphism w = build_hom(G, product, std::move(witness));
  return {G,
          std::move(internal),
          std::move(external),
          std::move(inclusions),
          std::move(product),
          std::move(w)};
}

} // namespace grpiso
