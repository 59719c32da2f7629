#include "grpiso/abelian.hpp"

#include <algorithm>
#include <string>

#include "grpiso/error.hpp"

namespace grpiso {

namespace {

std::vector<std::uint32_t> prime_factors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

bool is_power_of(std::uint32_t x, std::uint32_t p) {
  while (x % p == 0)
    x /= p;
  return x == 1;
}

void require_abelian(const Group &G, const char *what) {
  if (!is_abelian(G))
    throw Error(Errc::NotAbelian, std::string(what) + " is not abelian");
}

} // namespace

bool is_abelian(const Group &G) {
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = a + 1; b < G.order(); ++b)
      if (G.mul(a, b) != G.mul(b, a))
        return false;
  return true;
}

CyclicDecomposition cyclic_decomposition(const Group &A) {
  require_abelian(A, "group");
  const std::size_t n = A.order();
  CyclicDecomposition dec(A);

  for (std::uint32_t p : prime_factors(n)) {
    std::vector<Element> sylow;
    for (Element x = 0; x < n; ++x)
      if (is_power_of(A.element_order(x), p))
        sylow.push_back(x);

    std::vector<bool> acc(n, false);
    acc[0] = true;
    std::vector<Element> acc_list{0};
    std::size_t rank = 0;
    while (acc_list.size() < sylow.size()) {
      Element best = 0;
      std::uint32_t best_order = 1;
      for (Element x : sylow) {
        const std::uint32_t ord = A.element_order(x);
        if (ord <= best_order)
          continue;
        bool meets = false;
        for (Element y = x; y != 0 && !meets; y = A.mul(y, x))
          meets = acc[y];
        if (!meets) {
          best = x;
          best_order = ord;
        }
      }
      if (best_order == 1)
        throw Error(Errc::ValidationFailed,
                    "cyclic peeling stalled below the Sylow subgroup");
      std::vector<Element> grown;
      grown.reserve(acc_list.size() * best_order);
      for (Element h : acc_list)
        for (Element y = h, i = 0; i < best_order; ++i, y = A.mul(y, best))
          grown.push_back(y);
      for (Element y : grown)
        acc[y] = true;
      acc_list = std::move(grown);
      dec.generators_.push_back(best);
      dec.orders_.push_back(best_order);
      ++rank;
    }
    dec.ranks_.emplace_back(p, rank);
  }

  // Normal forms: walk all exponent vectors in mixed radix.
  const std::size_t r = dec.generators_.size();
  dec.normal_form_.assign(n * r, 0);
  std::vector<bool> hit(n, false);
  std::vector<std::uint32_t> k(r, 0);
  std::size_t visited = 0;
  while (true) {
    Element g = 0;
    for (std::size_t i = 0; i < r; ++i)
      g = A.mul(g, A.pow(dec.generators_[i], k[i]));
    if (hit[g])
      throw Error(Errc::ValidationFailed, "cyclic factors are not independent");
    hit[g] = true;
    std::copy(k.begin(), k.end(), dec.normal_form_.begin() + g * r);
    ++visited;
    std::size_t i = r;
    while (i > 0 && ++k[i - 1] == dec.orders_[i - 1])
      k[--i] = 0;
    if (i == 0)
      break;
  }
  if (visited != n)
    throw Error(Errc::ValidationFailed, "cyclic factors do not exhaust A");
  return dec;
}

std::uint64_t count_order_dividing(const Group &B, std::uint64_t t) {
  std::uint64_t count = 0;
  for (Element b = 0; b < B.order(); ++b)
    count += t % B.element_order(b) == 0;
  return count;
}

Count hom_count_abelian(const Group &A, const Group &B) {
  require_abelian(B, "target");
  const CyclicDecomposition dec = cyclic_decomposition(A);
  Count count = 1;
  for (std::uint32_t ord : dec.orders())
    count *= count_order_dividing(B, ord);
  return count;
}

Count hom_count_to_center(const Group &G, const Group &H) {
  const Group abelianized = quotient(G, derived_subgroup(G)).group;
  const Group z = as_group(center(H)).group;
  return hom_count_abelian(abelianized, z);
}

Homomorphism extend_from_generators(const CyclicDecomposition &dec,
                                    const Group &target,
                                    std::span<const Element> images) {
  if (images.size() != dec.size())
    throw Error(Errc::DomainMismatch, "one image per cyclic generator needed");
  for (std::size_t i = 0; i < images.size(); ++i)
    if (dec.orders()[i] % target.element_order(images[i]) != 0)
      throw Error(Errc::NotHomomorphism,
                  "image order does not divide the generator order");
  const Group &A = dec.parent();
  std::vector<Element> img(A.order());
  for (Element g = 0; g < A.order(); ++g) {
    const auto k = dec.exponents(g);
    Element y = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
      y = target.mul(y, target.pow(images[i], k[i]));
    img[g] = y;
  }
  return build_hom(A, target, std::move(img));
}

std::optional<Homomorphism> abelian_iso(const Group &A, const Group &B) {
  require_abelian(B, "second group");
  const CyclicDecomposition da = cyclic_decomposition(A);
  const CyclicDecomposition db = cyclic_decomposition(B);
  if (!std::ranges::equal(da.orders(), db.orders()) ||
      A.order() != B.order())
    return std::nullopt;
  return extend_from_generators(da, B, db.generators());
}

} // namespace grpiso
