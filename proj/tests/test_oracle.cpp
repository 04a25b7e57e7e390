#include <set>

#include "support.hpp"

using namespace crossed;

namespace {

bool preserves_products(const FiniteGroupTable& a, const FiniteGroupTable& b,
                        const std::vector<Elem>& map) {
  std::set<Elem> image(map.begin(), map.end());
  if (image.size() != a.order)
    return false;
  for (Elem x = 0; x < a.order; ++x)
    for (Elem y = 0; y < a.order; ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y]))
        return false;
  return true;
}

Int totient(Int n) {
  Int k = 0;
  for (Int x = 1; x <= n; ++x)
    k += test::naive_gcd(x, n) == 1;
  return k;
}

} // namespace

TEST(BruteForceCyclic, Examples) {
  CyclicCheck c6 = brute_force_is_cyclic(cyclic_table(6));
  EXPECT_TRUE(c6.cyclic);
  ASSERT_TRUE(c6.generator.has_value());
  EXPECT_EQ(brute_order(cyclic_table(6), *c6.generator), 6);
  CyclicCheck v4 = brute_force_is_cyclic(test::klein_four());
  EXPECT_FALSE(v4.cyclic);
  EXPECT_FALSE(v4.generator.has_value());
  EXPECT_FALSE(brute_force_is_cyclic(test::q8()).cyclic);
}

TEST(OrderProfile, Examples) {
  EXPECT_EQ(order_profile(cyclic_table(4)), (std::vector<Int>{1, 2, 4, 4}));
  EXPECT_EQ(order_profile(test::q8()), (std::vector<Int>{1, 2, 4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(order_profile(build_crossed_product(test::s3_system())),
            (std::vector<Int>{1, 2, 2, 2, 3, 3}));
}

TEST(Isomorphic, Examples) {
  FiniteGroupTable tw = to_table(make_twisted(make_profile(2, 2, {0, 1})));
  auto map = tables_isomorphic(cyclic_table(4), tw);
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(preserves_products(cyclic_table(4), tw, *map));
  EXPECT_FALSE(tables_isomorphic(cyclic_table(4), test::klein_four()).has_value());
  FiniteGroupTable q8 = test::q8();
  auto self = tables_isomorphic(q8, q8);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(preserves_products(q8, q8, *self));
}

TEST(Isomorphic, SameOrderProfileButDifferentGroups) {
  FiniteGroupTable a = direct_product(cyclic_table(4), cyclic_table(4));
  FiniteGroupTable b = direct_product(test::q8(), cyclic_table(2));
  ASSERT_EQ(order_profile(a), order_profile(b));
  EXPECT_FALSE(tables_isomorphic(a, b).has_value());
  EXPECT_FALSE(tables_isomorphic(b, a).has_value());
}

TEST(Isomorphic, SymmetricOnFamilyTables) {
  std::vector<FiniteGroupTable> ts;
  for (Int n = 2; n <= 6; ++n)
    for (Int m = 2; n * m <= 16; ++m)
      for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j)
          if (!test::error_kind([&] { validate_family(Holder{n, m, i, j}); }))
            ts.push_back(to_table(Holder{n, m, i, j}));
  for (std::size_t x = 0; x < ts.size(); ++x)
    for (std::size_t y = x; y < ts.size(); ++y) {
      auto xy = tables_isomorphic(ts[x], ts[y]);
      auto yx = tables_isomorphic(ts[y], ts[x]);
      EXPECT_EQ(xy.has_value(), yx.has_value());
      if (xy) {
        EXPECT_TRUE(preserves_products(ts[x], ts[y], *xy));
        EXPECT_EQ(order_profile(ts[x]), order_profile(ts[y]));
      }
    }
}

TEST(Isomorphic, OrderLimit) {
  EXPECT_ERROR(ErrorKind::TooLarge, tables_isomorphic(cyclic_table(65), cyclic_table(65)));
}

TEST(Automorphisms, Counts) {
  for (Int n = 1; n <= 12; ++n)
    EXPECT_EQ(Int(automorphisms(cyclic_table(std::size_t(n))).size()), totient(n)) << n;
  EXPECT_EQ(automorphisms(test::klein_four()).size(), 6u);
  EXPECT_EQ(automorphisms(test::q8()).size(), 24u);
  EXPECT_EQ(automorphisms(build_crossed_product(test::s3_system())).size(), 6u);
}

TEST(Enumerate, C2ByC2) {
  std::vector<CrossedSystem> all = enumerate_crossed_systems(cyclic_table(2), cyclic_table(2));
  // f(1, g) = f(g, 1) = 1 is forced, leaving f(x, x) free
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(cocycle_is_trivial(all[0]));
  EXPECT_EQ(all[1].cocycle(1, 1), 1u);
}

TEST(Enumerate, C3ByC2) {
  std::vector<CrossedSystem> all = enumerate_crossed_systems(cyclic_table(3), cyclic_table(2));
  std::vector<Int> c6 = order_profile(cyclic_table(6));
  std::vector<Int> s3 = order_profile(build_crossed_product(test::s3_system()));
  int semidirect = 0, twisted = 0;
  for (const CrossedSystem& s : all) {
    std::vector<Int> prof = order_profile(build_crossed_product(s));
    EXPECT_TRUE(prof == c6 || prof == s3);
    if (action_is_trivial(s)) {
      ++twisted;
      EXPECT_EQ(prof, c6);
    } else {
      ++semidirect;
      EXPECT_TRUE(cocycle_is_trivial(s));
      EXPECT_EQ(prof, s3);
    }
  }
  EXPECT_EQ(semidirect, 1);
  EXPECT_EQ(twisted, 3);
}

TEST(Enumerate, Budget) {
  EXPECT_ERROR(ErrorKind::TooLarge, enumerate_crossed_systems(cyclic_table(2), cyclic_table(2), 0));
}

TEST(Enumerate, AbelianCriterion) {
  for (std::size_t nh : {2u, 3u})
    for (std::size_t ng : {2u, 3u})
      for (const CrossedSystem& s : enumerate_crossed_systems(cyclic_table(nh), cyclic_table(ng))) {
        FiniteGroupTable e = build_crossed_product(s);
        EXPECT_TRUE(verify_group_axioms(e).ok());
        EXPECT_EQ(is_abelian(e), action_is_trivial(s) && cocycle_is_symmetric(s));
      }
}

TEST(Enumerate, SymmetricSystemsAreProfileImages) {
  for (Int n = 2; n <= 3; ++n)
    for (Int m = 2; m <= 3; ++m) {
      std::set<std::vector<Elem>> from_search, from_profiles;
      for (const CrossedSystem& s :
           enumerate_crossed_systems(cyclic_table(std::size_t(n)), cyclic_table(std::size_t(m))))
        if (action_is_trivial(s) && cocycle_is_symmetric(s))
          from_search.insert(s.f);
      for (const CocycleProfile& p : enumerate_profiles(m, n))
        from_profiles.insert(twisted_crossed_system(p).f);
      EXPECT_EQ(from_search, from_profiles) << n << " " << m;
    }
}
