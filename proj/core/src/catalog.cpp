#include "grpiso/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "grpiso/error.hpp"

namespace grpiso::catalog {

namespace {

using Perm = std::vector<std::size_t>;

Group from_permutations(const std::vector<Perm> &perms) {
  const std::size_t n = perms.size();
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(perms[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  Perm prod(perms.empty() ? 0 : perms[0].size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < prod.size(); ++x)
        prod[x] = perms[a][perms[b][x]];
      table[a * n + b] = index.at(prod);
    }
  return Group::unchecked(n, std::move(table));
}

bool is_even(const Perm &p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

std::vector<Perm> all_permutations(std::size_t degree, bool even_only) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Perm> out;
  do {
    if (!even_only || is_even(p))
      out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

bool is_prime(std::size_t p) {
  if (p < 2)
    return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

Group cyclic(std::size_t n) {
  if (n == 0)
    throw Error(Errc::ParseError, "cyclic group order must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>((a + b) % n);
  return Group::unchecked(n, std::move(table));
}

Group dihedral(std::size_t n) {
  if (n < 2)
    throw Error(Errc::ParseError, "dihedral:n needs n >= 2");
  const std::size_t m = 2 * n;
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t i = a % n, j = b % n;
      const bool sa = a >= n, sb = b >= n;
      // r^i s^sa * r^j s^sb = r^(i +/- j) s^(sa xor sb)
      const std::size_t k = sa ? (i + n - j) % n : (i + j) % n;
      table[a * m + b] = static_cast<Element>((sa != sb) ? n + k : k);
    }
  return Group::unchecked(m, std::move(table));
}

Group quaternion(std::size_t n) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw Error(Errc::ParseError,
                "quaternion:n needs n a power of two, n >= 8");
  const std::size_t h = n / 2; // order of x
  const std::size_t m = h / 2; // y^2 = x^m
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = a % h, j = b % h;
      const bool ya = a >= h, yb = b >= h;
      std::size_t k;
      if (!ya)
        k = (i + j) % h;
      else if (!yb)
        k = (i + h - j) % h;
      else
        k = (i + h - j + m) % h;
      table[a * n + b] = static_cast<Element>((ya != yb) ? h + k : k);
    }
  return Group::unchecked(n, std::move(table));
}

Group symmetric(std::size_t degree) {
  if (degree == 0)
    throw Error(Errc::ParseError, "sym:n needs n >= 1");
  return from_permutations(all_permutations(degree, false));
}

Group alternating(std::size_t degree) {
  if (degree == 0)
    throw Error(Errc::ParseError, "alt:n needs n >= 1");
  return from_permutations(all_permutations(degree, true));
}

Group elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p))
    throw Error(Errc::ParseError, "elem:p^k needs p prime, got " +
                                      std::to_string(p));
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i)
    n *= p;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      table[a * n + b] = static_cast<Element>(r);
    }
  return Group::unchecked(n, std::move(table));
}

} // namespace grpiso::catalog
