#include <random>

#include "support.hpp"

using namespace crossed;

TEST(VerifyGroupAxioms, CyclicPasses) {
  EXPECT_TRUE(verify_group_axioms(cyclic_table(4)).ok());
  EXPECT_TRUE(verify_group_axioms(cyclic_table(1)).ok());
}

TEST(VerifyGroupAxioms, CorruptedEntryBreaksAssociativity) {
  FiniteGroupTable c4 = cyclic_table(4);
  std::vector<std::vector<Elem>> rows(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      rows[a].push_back(c4.mul(a, b));
  rows[2][3] = 2;  // was 1
  FiniteGroupTable bad = table_from_rows(rows);
  AxiomReport r = verify_group_axioms(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.identity);
  EXPECT_TRUE(r.inverses);
  EXPECT_FALSE(r.associativity);
  ASSERT_TRUE(r.associativity_witness.has_value());
  auto [x, y, z] = *r.associativity_witness;
  EXPECT_NE(bad.mul(bad.mul(x, y), z), bad.mul(x, bad.mul(y, z)));
}

TEST(VerifyGroupAxioms, AssociativityWitnessIsReal) {
  // a latin square with identity 0 that is not associative (order 5 loop)
  std::vector<std::vector<Elem>> rows = {{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  FiniteGroupTable t = table_from_rows(rows);
  AxiomReport r = verify_group_axioms(t);
  EXPECT_TRUE(r.closure);
  EXPECT_TRUE(r.identity);
  EXPECT_FALSE(r.associativity);
  ASSERT_TRUE(r.associativity_witness.has_value());
  auto [x, y, z] = *r.associativity_witness;
  EXPECT_NE(t.mul(t.mul(x, y), z), t.mul(x, t.mul(y, z)));
}

TEST(VerifyGroupAxioms, OutOfRangeAndMissingIdentity) {
  EXPECT_FALSE(verify_group_axioms(table_from_rows({{0, 1}, {1, 2}})).closure);
  EXPECT_FALSE(verify_group_axioms(table_from_rows({{1, 1}, {1, 1}})).ok());
}

TEST(VerifyGroupAxioms, Q8Passes) { EXPECT_TRUE(verify_group_axioms(test::q8()).ok()); }

TEST(VerifyGroupAxioms, RandomProductsOfCyclicGroups) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> k(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteGroupTable t = direct_product(cyclic_table(std::size_t(k(rng))),
                                        cyclic_table(std::size_t(k(rng))));
    EXPECT_TRUE(verify_group_axioms(t).ok());
    EXPECT_TRUE(is_abelian(t));
  }
}

TEST(TableFromRows, FindsIdentityAndInverses) {
  // C_3 with identity at index 2
  FiniteGroupTable t = table_from_rows({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  EXPECT_EQ(t.identity, 2u);
  EXPECT_EQ(t.inv(0), 1u);
  EXPECT_TRUE(verify_group_axioms(t).ok());
  EXPECT_ERROR(ErrorKind::InvalidArgument, table_from_rows({{0, 1}, {1}}));
  EXPECT_ERROR(ErrorKind::InvalidArgument, table_from_rows({}));
}

TEST(DirectProduct, IndexLayout) {
  FiniteGroupTable a = cyclic_table(2), b = cyclic_table(3), p = direct_product(a, b);
  ASSERT_EQ(p.order, 6u);
  // (x, y) has index x + 2y
  for (Elem x1 = 0; x1 < 2; ++x1)
    for (Elem y1 = 0; y1 < 3; ++y1)
      for (Elem x2 = 0; x2 < 2; ++x2)
        for (Elem y2 = 0; y2 < 3; ++y2)
          EXPECT_EQ(p.mul(x1 + 2 * y1, x2 + 2 * y2), (x1 + x2) % 2 + 2 * ((y1 + y2) % 3));
}

TEST(ElementOrders, CyclicGroup) {
  FiniteGroupTable c12 = cyclic_table(12);
  for (Elem x = 0; x < 12; ++x)
    EXPECT_EQ(table_element_order(c12, x), 12 / test::naive_gcd(x, 12));
  EXPECT_EQ(find_generator(c12), std::optional<Elem>(1));
  EXPECT_FALSE(find_generator(test::klein_four()).has_value());
  EXPECT_EQ(cyclic_subgroup(c12, 4), (std::vector<Elem>{0, 4, 8}));
  EXPECT_EQ(table_power(c12, 5, -1), 7u);
  EXPECT_EQ(table_power(c12, 5, 3), 3u);
}

TEST(Center, Q8AndAbelian) {
  EXPECT_EQ(center(test::q8()).size(), 2u);
  EXPECT_EQ(center(cyclic_table(5)).size(), 5u);
  EXPECT_FALSE(is_abelian(test::q8()));
}
