#include "support.hpp"

using namespace crossed;

namespace {

// H = G = C_2, trivial action, f(x, x) = a.
CrossedSystem c2_twisted() {
  CrossedSystem s = trivial_crossed_system(cyclic_table(2), cyclic_table(2));
  s.f[1 * 2 + 1] = 1;
  return s;
}

} // namespace

TEST(Validate, TrivialSystem) {
  CrossedSystem s = validate_crossed_system(trivial_crossed_system(cyclic_table(2), cyclic_table(3)));
  EXPECT_TRUE(s.validated);
}

TEST(Validate, TwistedC2ByC2) { EXPECT_TRUE(validate_crossed_system(c2_twisted()).validated); }

TEST(Validate, CocycleIdentityByHand) {
  // every triple of C_2 against f(x,x) = a, additively
  CrossedSystem s = c2_twisted();
  auto f = [&](Elem a, Elem b) { return s.cocycle(a, b); };
  for (Elem g1 = 0; g1 < 2; ++g1)
    for (Elem g2 = 0; g2 < 2; ++g2)
      for (Elem g3 = 0; g3 < 2; ++g3)
        EXPECT_EQ((f(g1, g2) + f((g1 + g2) % 2, g3)) % 2, (f(g2, g3) + f(g1, (g2 + g3) % 2)) % 2);
}

TEST(Validate, NotNormalized) {
  CrossedSystem s = c2_twisted();
  s.f[0] = 1;
  EXPECT_ERROR(ErrorKind::NotNormalized, validate_crossed_system(s));
}

TEST(Validate, NotAutomorphism) {
  CrossedSystem s = trivial_crossed_system(cyclic_table(3), cyclic_table(2));
  s.alpha[1] = {1, 0, 2};
  EXPECT_ERROR(ErrorKind::NotAutomorphism, validate_crossed_system(s));
}

TEST(Validate, WeakActionViolated) {
  // g -> inversion for g = 1 only; not a homomorphism and f is trivial
  CrossedSystem s = trivial_crossed_system(cyclic_table(3), cyclic_table(3));
  s.alpha[1] = {0, 2, 1};
  try {
    validate_crossed_system(s);
    FAIL() << "accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WeakActionViolated);
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(Validate, CocycleViolated) {
  CrossedSystem s = trivial_crossed_system(cyclic_table(3), cyclic_table(2));
  s.f[0 * 2 + 1] = 1;  // f(1, x) = a
  EXPECT_ERROR(ErrorKind::CocycleViolated, validate_crossed_system(s));
}

TEST(Validate, ShapeErrors) {
  CrossedSystem s = trivial_crossed_system(cyclic_table(3), cyclic_table(2));
  s.f.pop_back();
  EXPECT_ERROR(ErrorKind::InvalidArgument, validate_crossed_system(s));
}

TEST(Build, TrivialIsDirectProduct) {
  FiniteGroupTable e = build_crossed_product(trivial_crossed_system(cyclic_table(2), cyclic_table(3)));
  EXPECT_EQ(e, direct_product(cyclic_table(2), cyclic_table(3)));
  EXPECT_TRUE(brute_force_is_cyclic(e).cyclic);
  EXPECT_EQ(e.order, 6u);
}

TEST(Build, TwistedC2ByC2IsC4) {
  CrossedSystem s = validate_crossed_system(c2_twisted());
  FiniteGroupTable e = build_crossed_product(s);
  Elem x = s.pair_index(0, 1), a = s.pair_index(1, 0);
  EXPECT_EQ(e.mul(x, x), a);
  EXPECT_EQ(table_element_order(e, x), 4);
}

TEST(Build, InversionActionGivesS3) {
  FiniteGroupTable e = build_crossed_product(test::s3_system());
  EXPECT_FALSE(is_abelian(e));
  EXPECT_EQ(order_profile(e), (std::vector<Int>{1, 2, 2, 2, 3, 3}));
}

TEST(Build, ProductLawMatchesDefinition) {
  CrossedSystem s = validate_crossed_system(test::s3_system());
  FiniteGroupTable e = build_crossed_product(s);
  for (Elem h1 = 0; h1 < 3; ++h1)
    for (Elem g1 = 0; g1 < 2; ++g1)
      for (Elem h2 = 0; h2 < 3; ++h2)
        for (Elem g2 = 0; g2 < 2; ++g2) {
          Elem h = s.H.mul(s.H.mul(h1, s.act(g1, h2)), s.cocycle(g1, g2));
          EXPECT_EQ(e.mul(s.pair_index(h1, g1), s.pair_index(h2, g2)),
                    s.pair_index(h, s.G.mul(g1, g2)));
        }
}

TEST(Classify, SpecialCases) {
  EXPECT_EQ(classify_special_case(trivial_crossed_system(cyclic_table(2), cyclic_table(3))),
            SpecialCase::Trivial);
  EXPECT_EQ(classify_special_case(c2_twisted()), SpecialCase::Twisted);
  EXPECT_EQ(classify_special_case(test::s3_system()), SpecialCase::Semidirect);
  Extraction q = extract_crossed_system(test::q8(), {0, 1, 2, 3}, {0, 4});
  EXPECT_EQ(classify_special_case(q.system), SpecialCase::General);
}

TEST(Validated, Norm2ConsequencesHold) {
  for (std::size_t nh : {2u, 3u})
    for (std::size_t ng : {2u, 3u})
      for (const CrossedSystem& s : enumerate_crossed_systems(cyclic_table(nh), cyclic_table(ng))) {
        for (Elem g = 0; g < ng; ++g) {
          EXPECT_EQ(s.cocycle(0, g), 0u);
          EXPECT_EQ(s.cocycle(g, 0), 0u);
        }
        for (Elem h = 0; h < nh; ++h)
          EXPECT_EQ(s.act(0, h), h);
        EXPECT_TRUE(verify_group_axioms(build_crossed_product(s)).ok());
      }
}

TEST(Extract, C4OverC2) {
  FiniteGroupTable c4 = cyclic_table(4);
  Extraction x = extract_crossed_system(c4, {0, 2}, {0, 1});
  EXPECT_TRUE(action_is_trivial(x.system));
  // f(x, x) = s(x)^2 = c^2, which is the non-identity element of H
  EXPECT_EQ(x.h_elements[x.system.cocycle(1, 1)], 2u);
  EXPECT_TRUE(tables_isomorphic(build_crossed_product(x.system), c4).has_value());
}

TEST(Extract, KleinFourFirstFactor) {
  Extraction x = extract_crossed_system(test::klein_four(), {0, 1}, {0, 2});
  EXPECT_EQ(classify_special_case(x.system), SpecialCase::Trivial);
}

TEST(Extract, Q8OverCyclicSubgroup) {
  FiniteGroupTable q8 = test::q8();
  Extraction x = extract_crossed_system(q8, {0, 1, 2, 3}, {0, 4});
  EXPECT_TRUE(tables_isomorphic(build_crossed_product(x.system), q8).has_value());
  // the isomorphism recorded by the extraction is itself product-preserving
  FiniteGroupTable e = build_crossed_product(x.system);
  for (Elem a = 0; a < e.order; ++a)
    for (Elem b = 0; b < e.order; ++b)
      EXPECT_EQ(x.iso[e.mul(a, b)], q8.mul(x.iso[a], x.iso[b]));
}

TEST(Extract, DefaultTransversalIsLeastElement) {
  Extraction x = extract_crossed_system(cyclic_table(6), {0, 3});
  EXPECT_EQ(x.transversal, (std::vector<Elem>{0, 1, 2}));
}

TEST(Extract, Errors) {
  FiniteGroupTable s3 = build_crossed_product(test::s3_system());
  // {1, (0, x)} has order 2 and is not normal in S_3
  EXPECT_ERROR(ErrorKind::NotNormalSubgroup, extract_crossed_system(s3, {0, 3}));
  EXPECT_ERROR(ErrorKind::BadTransversal, extract_crossed_system(cyclic_table(4), {0, 2}, {0, 2}));
  EXPECT_ERROR(ErrorKind::BadTransversal, extract_crossed_system(cyclic_table(4), {0, 2}, {0}));
}

TEST(Helpers, SymmetryAndCenter) {
  EXPECT_TRUE(cocycle_is_symmetric(c2_twisted()));
  EXPECT_FALSE(cocycle_is_trivial(c2_twisted()));
  EXPECT_FALSE(action_is_trivial(test::s3_system()));
}
