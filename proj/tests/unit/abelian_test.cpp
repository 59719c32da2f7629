#include <gtest/gtest.h>

#include <numeric>

#include "grpiso/abelian.hpp"
#include "grpiso/aut_oracle.hpp"
#include "grpiso/catalog.hpp"
#include "grpiso/error.hpp"
#include "support/oracles.hpp"

namespace grpiso {
namespace {

using testing::catalog_group;

std::vector<testing::NamedGroup> abelian_catalog(std::size_t max_order) {
  std::vector<testing::NamedGroup> out;
  for (auto &g : testing::catalog_up_to(max_order))
    if (is_abelian(g.group))
      out.push_back(std::move(g));
  return out;
}

std::vector<std::uint32_t> orders_of(const CyclicDecomposition &d) {
  return {d.orders().begin(), d.orders().end()};
}

TEST(IsAbelian, Examples) {
  EXPECT_TRUE(is_abelian(catalog::cyclic(6)));
  EXPECT_FALSE(is_abelian(catalog::symmetric(3)));
  EXPECT_TRUE(is_abelian(catalog::cyclic(1)));
}

TEST(CyclicDecomposition, Examples) {
  EXPECT_EQ(orders_of(cyclic_decomposition(catalog::cyclic(12))),
            (std::vector<std::uint32_t>{4, 3}));
  EXPECT_EQ(orders_of(cyclic_decomposition(catalog::elementary_abelian(2, 2))),
            (std::vector<std::uint32_t>{2, 2}));
  EXPECT_EQ(cyclic_decomposition(catalog::cyclic(1)).size(), 0u);
  try {
    cyclic_decomposition(catalog::symmetric(3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotAbelian);
  }
}

TEST(CyclicDecomposition, NormalFormIsUnique) {
  for (const auto &[name, A] : abelian_catalog(64)) {
    SCOPED_TRACE(name);
    const auto d = cyclic_decomposition(A);
    std::size_t prod = 1;
    for (auto o : d.orders())
      prod *= o;
    EXPECT_EQ(prod, A.order());
    std::set<std::vector<std::uint32_t>> forms;
    for (Element g = 0; g < A.order(); ++g) {
      const auto e = d.exponents(g);
      Element x = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_LT(e[i], d.orders()[i]);
        x = A.mul(x, A.pow(d.generators()[i], e[i]));
      }
      EXPECT_EQ(x, g);
      forms.emplace(e.begin(), e.end());
    }
    EXPECT_EQ(forms.size(), A.order());
  }
}

TEST(CountOrderDividing, Examples) {
  EXPECT_EQ(count_order_dividing(catalog::symmetric(3), 1), 1u);
  EXPECT_EQ(count_order_dividing(catalog::elementary_abelian(2, 2), 2), 4u);
  EXPECT_EQ(count_order_dividing(catalog::cyclic(4), 2), 2u);
}

TEST(CountOrderDividing, OnlyGcdWithExponentMatters) {
  for (const auto &[name, B] : testing::catalog_up_to(32))
    for (std::uint64_t t = 1; t <= 40; ++t)
      EXPECT_EQ(count_order_dividing(B, t),
                count_order_dividing(B, std::gcd(t, B.exponent())))
          << name << " t=" << t;
}

TEST(HomCountAbelian, Examples) {
  EXPECT_EQ(hom_count_abelian(catalog::cyclic(6), catalog::cyclic(1)), 1);
  EXPECT_EQ(hom_count_abelian(catalog::cyclic(4), catalog::elementary_abelian(2, 2)),
            4);
  EXPECT_EQ(hom_count_abelian(catalog::cyclic(6), catalog::cyclic(3)), 3);
  EXPECT_THROW(hom_count_abelian(catalog::symmetric(3), catalog::cyclic(2)),
               Error);
  EXPECT_THROW(hom_count_abelian(catalog::cyclic(2), catalog::symmetric(3)),
               Error);
}

TEST(HomCountAbelian, MatchesBruteForce) {
  const auto groups = abelian_catalog(16);
  std::size_t pairs = 0;
  for (const auto &a : groups)
    for (const auto &b : groups) {
      EXPECT_EQ(hom_count_abelian(a.group, b.group),
                testing::naive_hom_count(a.group, b.group))
          << a.name << " -> " << b.name;
      ++pairs;
    }
  EXPECT_GE(pairs, 36u);
}

TEST(HomCountAbelian, MultiplicativeOverCoprimeParts) {
  // Hom(A, B) = Hom(A_p, B) Hom(A_p', B) for A = A_p x A_p'.
  const std::pair<const char *, std::pair<const char *, const char *>> cases[] = {
      {"Z12", {"Z4", "Z3"}}, {"Z6", {"Z2", "Z3"}}, {"Z10", {"Z2", "Z5"}},
      {"Z15", {"Z3", "Z5"}}, {"Z14", {"Z2", "Z7"}}};
  for (const auto &[whole, parts] : cases)
    for (const char *b : {"Z12", "Z2^3", "Z4xZ2", "Z6", "Z15", "Z3^2"}) {
      const Group B = catalog_group(b);
      EXPECT_EQ(hom_count_abelian(catalog_group(whole), B),
                hom_count_abelian(catalog_group(parts.first), B) *
                    hom_count_abelian(catalog_group(parts.second), B))
          << whole << " -> " << b;
    }
}

TEST(HomCountToCenter, Examples) {
  EXPECT_EQ(hom_count_to_center(catalog::cyclic(5), catalog::symmetric(3)), 1);
  EXPECT_EQ(hom_count_to_center(catalog::dihedral(4), catalog::dihedral(4)), 4);
  EXPECT_EQ(hom_count_to_center(catalog::symmetric(3), catalog::cyclic(4)), 2);
}

TEST(ExtendFromGenerators, BuildsAndRejects) {
  const Group z12 = catalog::cyclic(12);
  const auto d = cyclic_decomposition(z12);
  const Group z6 = catalog::cyclic(6);
  // order 4 generator -> element of order 2, order 3 generator -> order 3.
  const Element imgs[] = {3, 2};
  const auto phi = extend_from_generators(d, z6, imgs);
  for (std::size_t i = 0; i < d.size(); ++i)
    EXPECT_EQ(phi(d.generators()[i]), imgs[i]);
  const Element bad[] = {1, 2}; // order 6 does not divide 4
  EXPECT_THROW(extend_from_generators(d, z6, bad), Error);
}

TEST(AbelianIso, Examples) {
  const Group z1 = catalog::cyclic(1);
  EXPECT_EQ(abelian_iso(z1, z1).value(), identity_hom(z1));
  const auto phi = abelian_iso(catalog::cyclic(6), catalog_group("Z2xZ3"));
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_isomorphism(*phi));
  EXPECT_FALSE(abelian_iso(catalog::cyclic(4), catalog::elementary_abelian(2, 2)));
  try {
    abelian_iso(catalog::cyclic(6), catalog::symmetric(3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotAbelian);
  }
}

TEST(AbelianIso, AgreesWithBruteForce) {
  const auto groups = abelian_catalog(32);
  for (const auto &a : groups)
    for (const auto &b : groups) {
      if (a.group.order() != b.group.order())
        continue;
      const auto phi = abelian_iso(a.group, b.group);
      EXPECT_EQ(phi.has_value(), brute_iso(a.group, b.group).has_value())
          << a.name << " " << b.name;
      if (phi)
        EXPECT_TRUE(is_isomorphism(*phi));
    }
}

} // namespace
} // namespace grpiso
