#include <gtest/gtest.h>

#include <random>

#include "grpiso/abelian.hpp"
#include "grpiso/catalog.hpp"
#include "grpiso/error.hpp"
#include "grpiso/group.hpp"
#include "support/oracles.hpp"

namespace grpiso {
namespace {

using testing::catalog_group;
using testing::catalog_up_to;

std::vector<std::vector<Element>> rows_of(const Group &G) {
  std::vector<std::vector<Element>> raw(G.order());
  for (Element a = 0; a < G.order(); ++a) {
    auto r = G.row(a);
    raw[a].assign(r.begin(), r.end());
  }
  return raw;
}

Errc build_error(const std::vector<std::vector<Element>> &raw) {
  try {
    build_group(raw);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "table accepted";
  return Errc::ParseError;
}

TEST(BuildGroup, TrivialTable) {
  auto b = build_group({{0}});
  EXPECT_EQ(b.group.order(), 1u);
  EXPECT_FALSE(b.relabeled);
}

TEST(BuildGroup, S3FromCatalogRoundTrips) {
  const Group s3 = catalog::symmetric(3);
  auto b = build_group(rows_of(s3));
  EXPECT_EQ(b.group.order(), 6u);
  EXPECT_EQ(b.group, s3);
}

TEST(BuildGroup, RepeatedRowEntry) {
  const Errc e = build_error({{0, 1}, {1, 1}});
  EXPECT_TRUE(e == Errc::NotBijectiveRow || e == Errc::NonAssociative);
}

TEST(BuildGroup, IdentityElsewhereIsMovedToZero) {
  // Z3 with identity labelled 2.
  std::vector<std::vector<Element>> raw = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto b = build_group(raw);
  EXPECT_TRUE(b.relabeled);
  EXPECT_EQ(b.relabel[2], 0u);
  EXPECT_EQ(b.group.mul(0, 1), 1u);
  EXPECT_EQ(b.group.element_order(1), 3u);
}

TEST(BuildGroup, SingleCellCorruptions) {
  auto raw = rows_of(catalog::cyclic(4));
  auto out_of_range = raw;
  out_of_range[2][3] = 7;
  EXPECT_EQ(build_error(out_of_range), Errc::EntryOutOfRange);

  auto no_identity = raw;
  no_identity[0][1] = 2; // row 0 is no longer the identity row
  EXPECT_EQ(build_error(no_identity), Errc::NoIdentity);

  auto dup = raw;
  dup[2][1] = 2;
  EXPECT_EQ(build_error(dup), Errc::NotBijectiveRow);

  auto col = rows_of(catalog::symmetric(3));
  std::swap(col[3][1], col[3][2]); // row stays a permutation, columns break
  EXPECT_EQ(build_error(col), Errc::NotBijectiveRow);
}

TEST(BuildGroup, LatinSquareWithoutInverse) {
  // Identity 0, every row and column a permutation, but 1*x = 0 and
  // x*1 = 0 need different x.
  std::vector<std::vector<Element>> raw = {
      {0, 1, 2, 3, 4}, {1, 2, 0, 4, 3}, {2, 4, 3, 0, 1},
      {3, 0, 4, 1, 2}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(build_error(raw), Errc::NoInverse);
}

TEST(BuildGroup, LoopThatIsNotAssociative) {
  // Smallest non-associative loop with two-sided inverses (order 5).
  std::vector<std::vector<Element>> raw = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(build_error(raw), Errc::NonAssociative);
}

TEST(BuildGroup, NotSquare) {
  EXPECT_THROW(build_group({{0, 1}, {1}}), Error);
  EXPECT_THROW(build_group(std::vector<std::vector<Element>>{}), Error);
}

TEST(BuildGroup, EveryCatalogGroupIsAssociative) {
  for (const auto &[name, G] : catalog_up_to(64)) {
    SCOPED_TRACE(name);
    const std::size_t n = G.order();
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i)
      for (Element j = 0; j < n && ok; ++j)
        for (Element k = 0; k < n && ok; ++k)
          ok = G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k));
    EXPECT_TRUE(ok);
    for (Element i = 0; i < n; ++i)
      EXPECT_EQ(G.mul(i, G.inv(i)), 0u);
  }
}

TEST(ElementOrder, Examples) {
  const Group z8 = catalog::cyclic(8);
  EXPECT_EQ(element_order(z8, 0), 1u);
  EXPECT_EQ(element_order(z8, 1), 8u);
  const Group s3 = catalog::symmetric(3);
  std::size_t transpositions = 0;
  for (Element g = 1; g < 6; ++g) {
    Element x = g;
    std::uint32_t k = 1;
    while (x != 0) {
      x = s3.mul(x, g);
      ++k;
    }
    EXPECT_EQ(element_order(s3, g), k);
    transpositions += k == 2;
  }
  EXPECT_EQ(transpositions, 3u);
}

TEST(SubgroupClosure, Examples) {
  const Group s3 = catalog::symmetric(3);
  EXPECT_EQ(subgroup_closure(s3, {}).order(), 1u);
  for (Element g = 0; g < 6; ++g)
    if (s3.element_order(g) == 3) {
      const Element seed[] = {g};
      EXPECT_EQ(subgroup_closure(s3, seed).order(), 3u);
    }
  std::vector<Element> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(subgroup_closure(s3, all), Subgroup::whole(s3));
}

TEST(Subgroup, FromElementsRejectsNonSubgroup) {
  const Group z4 = catalog::cyclic(4);
  EXPECT_THROW(Subgroup::from_elements(z4, {0, 1}), Error);
  EXPECT_NO_THROW(Subgroup::from_elements(z4, {2, 0}));
}

TEST(Center, Examples) {
  EXPECT_EQ(center(catalog::cyclic(6)).order(), 6u);
  EXPECT_EQ(center(catalog::symmetric(3)).order(), 1u);
  EXPECT_EQ(center(catalog::dihedral(4)).order(), 2u);
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(catalog::cyclic(6)).order(), 1u);
  const Subgroup d = derived_subgroup(catalog::symmetric(3));
  EXPECT_EQ(d.order(), 3u);
  for (Element g : d.elements())
    EXPECT_NE(catalog::symmetric(3).element_order(g), 2u);
  EXPECT_EQ(derived_subgroup(catalog::quaternion(8)).order(), 2u);
}

TEST(Quotient, Examples) {
  const Group s3 = catalog::symmetric(3);
  EXPECT_EQ(quotient(s3, Subgroup::whole(s3)).group.order(), 1u);
  EXPECT_EQ(quotient(s3, derived_subgroup(s3)).group.order(), 2u);
  const Group z4 = catalog::cyclic(4);
  auto q = quotient(z4, Subgroup::from_elements(z4, {0, 2}));
  EXPECT_EQ(q.group.order(), 2u);
  EXPECT_EQ(q.projection(2), 0u);
  EXPECT_EQ(q.projection(3), 1u);
}

TEST(Quotient, NotNormal) {
  const Group s3 = catalog::symmetric(3);
  Element t = 0;
  for (Element g = 1; g < 6; ++g)
    if (s3.element_order(g) == 2)
      t = g;
  const Element seed[] = {t};
  try {
    quotient(s3, subgroup_closure(s3, seed));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotNormal);
  }
}

TEST(DirectProduct, Examples) {
  const Group h = catalog::dihedral(4);
  auto p = direct_product(catalog::cyclic(1), h);
  EXPECT_EQ(p.group, h); // row-major with |G| = 1 is the identity labelling

  auto z6 = direct_product(catalog::cyclic(2), catalog::cyclic(3)).group;
  EXPECT_TRUE(is_abelian(z6));
  bool has6 = false;
  for (Element g = 0; g < 6; ++g)
    has6 = has6 || z6.element_order(g) == 6;
  EXPECT_TRUE(has6);

  const Group s3 = catalog::symmetric(3);
  auto s3s3 = direct_product(s3, s3).group;
  EXPECT_EQ(s3s3.order(), 36u);
  EXPECT_EQ(center(s3s3).order(), 1u);
}

TEST(DirectProduct, ProjectionsRecoverComponents) {
  for (const char *a : {"S3", "Z4", "Q8"})
    for (const char *b : {"Z3", "D4", "Z1"}) {
      const Group G = catalog_group(a), H = catalog_group(b);
      auto P = direct_product(G, H);
      for (Element g = 0; g < G.order(); ++g)
        for (Element h = 0; h < H.order(); ++h) {
          const Element x = P.group.mul(P.embed_left(g), P.embed_right(h));
          EXPECT_EQ(x, pair_index(G, H, g, h));
          EXPECT_EQ(P.proj_left(x), g);
          EXPECT_EQ(P.proj_right(x), h);
        }
    }
}

TEST(BuildHom, Examples) {
  const Group z4 = catalog::cyclic(4);
  EXPECT_NO_THROW(build_hom(z4, z4, {0, 0, 0, 0}));
  EXPECT_NO_THROW(build_hom(z4, z4, {0, 1, 2, 3}));
  try {
    build_hom(z4, z4, {0, 2, 2, 0});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotHomomorphism);
  }
  EXPECT_THROW(build_hom(z4, z4, {0, 1, 2}), Error);
}

TEST(HomCompose, Examples) {
  const Group G = catalog::dihedral(4);
  const Group H = catalog::cyclic(2);
  const auto phi = build_hom(G, H, [&] {
    std::vector<Element> v(8);
    for (Element g = 0; g < 8; ++g)
      v[g] = g >= 4;
    return v;
  }());
  EXPECT_EQ(hom_compose(phi, identity_hom(G)), phi);
  EXPECT_EQ(hom_compose(identity_hom(H), phi), phi);
  EXPECT_EQ(hom_compose(trivial_hom(H, G), phi), trivial_hom(G, G));

  auto P = direct_product(G, catalog::cyclic(3));
  EXPECT_EQ(hom_compose(P.proj_left, P.embed_left), identity_hom(G));
  EXPECT_EQ(hom_compose(P.proj_right, P.embed_right),
            identity_hom(catalog::cyclic(3)));

  try {
    hom_compose(phi, phi);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::DomainMismatch);
  }
}

TEST(HomPointwiseSum, Examples) {
  const Group z2 = catalog::cyclic(2);
  const auto id = identity_hom(z2);
  EXPECT_EQ(hom_pointwise_sum(id, trivial_hom(z2, z2)), id);
  EXPECT_EQ(hom_pointwise_sum(id, id), trivial_hom(z2, z2));

  const Group s3 = catalog::symmetric(3);
  const auto ids3 = identity_hom(s3);
  try {
    hom_pointwise_sum(ids3, ids3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotHomomorphism);
  }
  try {
    hom_pointwise_sum(ids3, id);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::DomainMismatch);
  }
}

TEST(HomPointwiseSum, AlphaPlusCentralBeta) {
  // First coordinate of the matrix action is alpha(g) beta(h).
  const Group G = catalog::dihedral(4);
  const Group H = catalog::cyclic(4);
  const Subgroup Z = center(G);
  const Element z = Z.elements()[1];
  std::vector<Element> bimg(4);
  for (Element h = 0; h < 4; ++h)
    bimg[h] = h % 2 ? z : 0;
  const auto beta = build_hom(H, G, bimg);
  auto P = direct_product(G, H);
  const auto alpha = hom_compose(identity_hom(G), P.proj_left);
  const auto b = hom_compose(beta, P.proj_right);
  const auto sum = hom_pointwise_sum(alpha, b);
  for (Element g = 0; g < 8; ++g)
    for (Element h = 0; h < 4; ++h)
      EXPECT_EQ(sum(pair_index(G, H, g, h)), G.mul(g, beta(h)));
}

TEST(IsIsomorphism, Examples) {
  const Group d4 = catalog::dihedral(4);
  EXPECT_TRUE(is_isomorphism(identity_hom(d4)));
  EXPECT_FALSE(is_isomorphism(trivial_hom(d4, d4)));
  EXPECT_TRUE(is_isomorphism(identity_hom(catalog::cyclic(1))));
}

TEST(HomInverse, RoundTrip) {
  const Group z5 = catalog::cyclic(5);
  const auto phi = build_hom(z5, z5, {0, 2, 4, 1, 3});
  const auto inv = hom_inverse(phi);
  EXPECT_EQ(hom_compose(inv, phi), identity_hom(z5));
  EXPECT_THROW(hom_inverse(trivial_hom(z5, z5)), Error);
}

TEST(Properties, StructureOnCatalog) {
  for (const auto &[name, G] : catalog_up_to(48)) {
    SCOPED_TRACE(name);
    for (const Subgroup &N : {center(G), derived_subgroup(G)}) {
      EXPECT_TRUE(N.is_normal());
      const auto q = quotient(G, N);
      EXPECT_EQ(q.group.order() * N.order(), G.order());
      auto raw = rows_of(q.group);
      EXPECT_NO_THROW(build_group(raw));
      EXPECT_NO_THROW(build_hom(G, q.group, std::vector<Element>(
                                                q.projection.images().begin(),
                                                q.projection.images().end())));
    }
  }
}

TEST(Properties, RandomHomsRevalidate) {
  std::mt19937 rng(7);
  const auto groups = catalog_up_to(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Group &A = groups[rng() % groups.size()].group;
    const Group &B = groups[rng() % groups.size()].group;
    const Group &C = groups[rng() % groups.size()].group;
    std::vector<std::vector<Element>> ab, bc;
    testing::for_each_hom(A, B, false,
                          [&](const std::vector<Element> &f) { ab.push_back(f); });
    testing::for_each_hom(B, C, false,
                          [&](const std::vector<Element> &f) { bc.push_back(f); });
    const auto f = build_hom(A, B, ab[rng() % ab.size()]);
    const auto g = build_hom(B, C, bc[rng() % bc.size()]);
    const auto gf = hom_compose(g, f);
    EXPECT_NO_THROW(build_hom(A, C, std::vector<Element>(gf.images().begin(),
                                                         gf.images().end())));
    if (is_abelian(B)) {
      const auto f2 = build_hom(A, B, ab[rng() % ab.size()]);
      const auto s = hom_pointwise_sum(f, f2);
      EXPECT_NO_THROW(build_hom(
          A, B, std::vector<Element>(s.images().begin(), s.images().end())));
    }
  }
}

TEST(Properties, ConjugacyClassesPartitionTheGroup) {
  for (const auto &[name, G] : catalog_up_to(24)) {
    SCOPED_TRACE(name);
    std::size_t total = 0;
    for (const auto &c : conjugacy_classes(G)) {
      total += c.size();
      EXPECT_EQ(G.order() % c.size(), 0u);
    }
    EXPECT_EQ(total, G.order());
  }
}

TEST(RelabelGroup, PreservesStructure) {
  std::mt19937 rng(3);
  const Group G = catalog_group("S4");
  const auto p = testing::random_relabeling(G.order(), rng);
  const Group R = relabel_group(G, p);
  for (Element a = 0; a < 24; ++a)
    for (Element b = 0; b < 24; ++b)
      EXPECT_EQ(R.mul(p[a], p[b]), p[G.mul(a, b)]);
}

} // namespace
} // namespace grpiso
