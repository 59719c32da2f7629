#include "grpiso/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "grpiso/error.hpp"

namespace grpiso {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

Group Group::unchecked(std::size_t n, std::vector<Element> table) {
  auto data = std::make_shared<Data>();
  data->n = n;
  data->table = std::move(table);
  data->inverse.assign(n, 0);
  data->element_order.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (data->table[a * n + b] == 0) {
        data->inverse[a] = b;
        break;
      }
    }
    std::uint32_t ord = 1;
    for (Element x = a; x != 0; x = data->table[x * n + a])
      ++ord;
    data->element_order[a] = ord;
    data->exponent = std::lcm(data->exponent, std::uint64_t{ord});
  }
  return Group(std::move(data));
}

bool operator==(const Group &a, const Group &b) noexcept {
  return a.data_ == b.data_ ||
         (a.data_->n == b.data_->n && a.data_->table == b.data_->table);
}

Element Group::pow(Element a, std::uint64_t e) const noexcept {
  e %= element_order(a);
  Element r = 0;
  for (std::uint64_t i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

Element Group::commutator(Element a, Element b) const noexcept {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

BuiltGroup build_group(const std::vector<std::vector<Element>> &raw) {
  const std::size_t n = raw.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw Error(Errc::ParseError, "row " + std::to_string(i) + " has " +
                                        std::to_string(raw[i].size()) +
                                        " entries, expected " +
                                        std::to_string(n));
    flat.insert(flat.end(), raw[i].begin(), raw[i].end());
  }
  return build_group(n, flat);
}

BuiltGroup build_group(std::size_t n, std::span<const Element> t) {
  if (n == 0)
    throw Error(Errc::ParseError, "empty table");
  if (t.size() != n * n)
    throw Error(Errc::ParseError, "table is not square");
  auto at = [&](std::size_t i, std::size_t j) { return t[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j) >= n)
        throw Error(Errc::EntryOutOfRange,
                    "entry " + std::to_string(at(i, j)) + " at cell " +
                        cell(i, j));

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = at(c, j) == j && at(j, c) == j;
    if (ok)
      e = c;
  }
  if (e == n) {
    // Name the first cell of row 0 that disagrees with an identity row.
    std::size_t j = 0;
    while (j + 1 < n && at(0, j) == j)
      ++j;
    throw Error(Errc::NoIdentity, "no two-sided identity; first deviation at "
                                  "cell " + cell(0, j));
  }

  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)] != n)
        throw Error(Errc::NotBijectiveRow,
                    "row " + std::to_string(i) + " repeats " +
                        std::to_string(at(i, j)) + " at cell " + cell(i, j));
      seen[at(i, j)] = j;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[at(i, j)] != n)
        throw Error(Errc::NotBijectiveRow,
                    "column " + std::to_string(j) + " repeats " +
                        std::to_string(at(i, j)) + " at cell " + cell(i, j));
      seen[at(i, j)] = i;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (at(a, b) != e)
      ++b;
    if (at(b, a) != e)
      throw Error(Errc::NoInverse, "element " + std::to_string(a) +
                                       " has right inverse " +
                                       std::to_string(b) +
                                       " that is not a left inverse; cell " +
                                       cell(b, a));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = at(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (at(ij, k) != at(i, at(j, k)))
          throw Error(Errc::NonAssociative,
                      "(" + std::to_string(i) + "*" + std::to_string(j) +
                          ")*" + std::to_string(k) + " != " +
                          std::to_string(i) + "*(" + std::to_string(j) +
                          "*" + std::to_string(k) + "); cell " + cell(ij, k));
    }

  BuiltGroup out{Group::unchecked(1, {0}), {}, e != 0};
  out.relabel.resize(n);
  std::iota(out.relabel.begin(), out.relabel.end(), Element{0});
  std::swap(out.relabel[0], out.relabel[e]);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[out.relabel[i] * n + out.relabel[j]] = out.relabel[at(i, j)];
  out.group = Group::unchecked(n, std::move(table));
  return out;
}

Group relabel_group(const Group &G, std::span<const Element> new_index) {
  const std::size_t n = G.order();
  if (new_index.size() != n)
    throw Error(Errc::DomainMismatch, "relabeling has wrong length");
  std::vector<bool> hit(n, false);
  for (Element x : new_index) {
    if (x >= n || hit[x])
      throw Error(Errc::NotPermutation, "relabeling is not a bijection");
    hit[x] = true;
  }
  if (new_index[0] != 0)
    throw Error(Errc::NotPermutation, "relabeling must fix the identity");
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[new_index[a] * n + new_index[b]] = new_index[G.mul(a, b)];
  return Group::unchecked(n, std::move(table));
}

Subgroup Subgroup::from_elements(const Group &parent,
                                 std::vector<Element> elements) {
  elements = sorted_unique(std::move(elements));
  if (elements.empty() || elements.front() != 0)
    throw Error(Errc::ValidationFailed, "subgroup must contain the identity");
  if (elements.back() >= parent.order())
    throw Error(Errc::EntryOutOfRange, "subgroup element out of range");
  Subgroup s(parent, std::move(elements));
  for (Element a : s.elements_)
    for (Element b : s.elements_)
      if (!s.contains(parent.mul(a, b)))
        throw Error(Errc::ValidationFailed,
                    "element list is not closed under the product");
  return s;
}

Subgroup Subgroup::trivial(const Group &parent) { return Subgroup(parent, {0}); }

Subgroup Subgroup::whole(const Group &parent) {
  std::vector<Element> all(parent.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(parent, std::move(all));
}

bool Subgroup::contains(Element g) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_normal() const {
  for (Element x : elements_)
    for (Element g = 0; g < parent_.order(); ++g)
      if (!contains(parent_.mul(parent_.mul(parent_.inv(g), x), g)))
        return false;
  return true;
}

Homomorphism Homomorphism::unchecked(Group source, Group target,
                                     std::vector<Element> images) {
  return Homomorphism(std::move(source), std::move(target), std::move(images));
}

std::uint32_t element_order(const Group &G, Element g) {
  return G.element_order(g);
}

Subgroup subgroup_closure(const Group &G, std::span<const Element> seed) {
  std::vector<Element> gens;
  for (Element s : seed)
    if (s != 0)
      gens.push_back(s);
  gens = sorted_unique(std::move(gens));

  std::vector<bool> in(G.order(), false);
  std::vector<Element> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Element s : gens) {
      const Element x = G.mul(list[i], s);
      if (!in[x]) {
        in[x] = true;
        list.push_back(x);
      }
    }
  std::sort(list.begin(), list.end());
  return Subgroup(G, std::move(list));
}

Subgroup center(const Group &G) {
  std::vector<Element> z;
  for (Element a = 0; a < G.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < G.order() && central; ++b)
      central = G.mul(a, b) == G.mul(b, a);
    if (central)
      z.push_back(a);
  }
  return Subgroup::from_elements(G, std::move(z));
}

Subgroup derived_subgroup(const Group &G) {
  std::vector<bool> hit(G.order(), false);
  std::vector<Element> comms;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) {
      const Element c = G.commutator(a, b);
      if (!hit[c]) {
        hit[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_closure(G, comms);
}

std::vector<std::vector<Element>> conjugacy_classes(const Group &G) {
  std::vector<bool> seen(G.order(), false);
  std::vector<std::vector<Element>> classes;
  for (Element g = 0; g < G.order(); ++g) {
    if (seen[g])
      continue;
    std::vector<Element> cls;
    for (Element x = 0; x < G.order(); ++x) {
      const Element c = G.mul(G.mul(G.inv(x), g), x);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup normal_closure(const Group &G, std::span<const Element> seed) {
  std::vector<bool> hit(G.order(), false);
  std::vector<Element> conj;
  for (Element s : seed)
    for (Element x = 0; x < G.order(); ++x) {
      const Element c = G.mul(G.mul(G.inv(x), s), x);
      if (!hit[c]) {
        hit[c] = true;
        conj.push_back(c);
      }
    }
  return subgroup_closure(G, conj);
}

Quotient quotient(const Group &G, const Subgroup &N) {
  if (!(N.parent() == G))
    throw Error(Errc::DomainMismatch, "subgroup of a different group");
  if (!N.is_normal())
    throw Error(Errc::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t n = G.order();
  constexpr Element unset = ~Element{0};
  std::vector<Element> coset(n, unset);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (coset[g] != unset)
      continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(g);
    for (Element x : N.elements())
      coset[G.mul(g, x)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = coset[G.mul(reps[a], reps[b])];
  Group Q = Group::unchecked(m, std::move(table));
  return {Q, Homomorphism::unchecked(G, Q, std::move(coset))};
}

InducedGroup as_group(const Subgroup &S) {
  const Group &G = S.parent();
  const auto elems = S.elements();
  const std::size_t m = elems.size();
  std::vector<Element> local(G.order(), 0);
  for (std::size_t i = 0; i < m; ++i)
    local[elems[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = local[G.mul(elems[a], elems[b])];
  Group sub = Group::unchecked(m, std::move(table));
  return {sub, Homomorphism::unchecked(
                   sub, G, std::vector<Element>(elems.begin(), elems.end()))};
}

DirectProduct direct_product(const Group &G, const Group &H) {
  const std::size_t g = G.order(), h = H.order(), n = g * h;
  std::vector<Element> table(n * n);
  for (Element a1 = 0; a1 < g; ++a1)
    for (Element b1 = 0; b1 < h; ++b1) {
      const std::size_t row = (a1 * h + b1) * n;
      for (Element a2 = 0; a2 < g; ++a2)
        for (Element b2 = 0; b2 < h; ++b2)
          table[row + a2 * h + b2] =
              static_cast<Element>(G.mul(a1, a2) * h + H.mul(b1, b2));
    }
  Group P = Group::unchecked(n, std::move(table));

  std::vector<Element> el(g), er(h), pl(n), pr(n);
  for (Element a = 0; a < g; ++a)
    el[a] = static_cast<Element>(a * h);
  for (Element b = 0; b < h; ++b)
    er[b] = b;
  for (Element x = 0; x < n; ++x) {
    pl[x] = static_cast<Element>(x / h);
    pr[x] = static_cast<Element>(x % h);
  }
  return {P, Homomorphism::unchecked(G, P, std::move(el)),
          Homomorphism::unchecked(H, P, std::move(er)),
          Homomorphism::unchecked(P, G, std::move(pl)),
          Homomorphism::unchecked(P, H, std::move(pr))};
}

Homomorphism build_hom(const Group &source, const Group &target,
                       std::vector<Element> images) {
  if (images.size() != source.order())
    throw Error(Errc::DomainMismatch,
                "image list has " + std::to_string(images.size()) +
                    " entries for a source of order " +
                    std::to_string(source.order()));
  for (std::size_t g = 0; g < images.size(); ++g)
    if (images[g] >= target.order())
      throw Error(Errc::NotHomomorphism,
                  "image of " + std::to_string(g) + " is out of range");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
        throw Error(Errc::NotHomomorphism,
                    "phi(" + std::to_string(a) + "*" + std::to_string(b) +
                        ") != phi(" + std::to_string(a) + ")*phi(" +
                        std::to_string(b) + ")");
  return Homomorphism::unchecked(source, target, std::move(images));
}

Homomorphism identity_hom(const Group &G) {
  std::vector<Element> id(G.order());
  std::iota(id.begin(), id.end(), Element{0});
  return Homomorphism::unchecked(G, G, std::move(id));
}

Homomorphism trivial_hom(const Group &source, const Group &target) {
  return Homomorphism::unchecked(source, target,
                                 std::vector<Element>(source.order(), 0));
}

Homomorphism hom_compose(const Homomorphism &outer,
                         const Homomorphism &inner) {
  if (!(inner.target() == outer.source()))
    throw Error(Errc::DomainMismatch,
                "inner target does not match outer source");
  std::vector<Element> img(inner.source().order());
  for (Element a = 0; a < img.size(); ++a)
    img[a] = outer(inner(a));
  return Homomorphism::unchecked(inner.source(), outer.target(),
                                 std::move(img));
}

Homomorphism hom_pointwise_sum(const Homomorphism &a, const Homomorphism &b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw Error(Errc::DomainMismatch, "summands have different domains");
  const Group &T = a.target();
  std::vector<Element> ia(a.images().begin(), a.images().end());
  std::vector<Element> ib(b.images().begin(), b.images().end());
  ia = sorted_unique(std::move(ia));
  ib = sorted_unique(std::move(ib));
  for (Element x : ia)
    for (Element y : ib)
      if (T.mul(x, y) != T.mul(y, x))
        throw Error(Errc::NotHomomorphism,
                    "summand images " + std::to_string(x) + " and " +
                        std::to_string(y) + " do not commute");
  std::vector<Element> img(a.source().order());
  for (Element x = 0; x < img.size(); ++x)
    img[x] = T.mul(a(x), b(x));
  return build_hom(a.source(), T, std::move(img));
}

bool is_isomorphism(const Homomorphism &phi) {
  if (phi.source().order() != phi.target().order())
    return false;
  std::vector<bool> hit(phi.target().order(), false);
  for (Element y : phi.images()) {
    if (hit[y])
      return false;
    hit[y] = true;
  }
  return true;
}

Homomorphism hom_inverse(const Homomorphism &phi) {
  if (!is_isomorphism(phi))
    throw Error(Errc::NotIsomorphism, "map is not a bijection");
  std::vector<Element> inv(phi.target().order());
  for (Element g = 0; g < inv.size(); ++g)
    inv[phi(g)] = g;
  return Homomorphism::unchecked(phi.target(), phi.source(), std::move(inv));
}

Subgroup hom_image(const Homomorphism &phi) {
  std::vector<Element> img(phi.images().begin(), phi.images().end());
  return Subgroup::from_elements(phi.target(), std::move(img));
}

} // namespace grpiso
