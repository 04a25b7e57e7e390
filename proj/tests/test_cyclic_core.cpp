#include <random>

#include "support.hpp"

using namespace crossed;

TEST(ExtGcd, Examples) {
  EXPECT_EQ(ext_gcd(4, 6), (ExtGcd{2, -1, 1}));
  EXPECT_EQ(ext_gcd(1, 0), (ExtGcd{1, 1, 0}));
  EXPECT_EQ(ext_gcd(0, 0), (ExtGcd{0, 0, 0}));
}

TEST(ExtGcd, BezoutIdentityAndGcd) {
  for (Int a = -40; a <= 40; ++a)
    for (Int b = -40; b <= 40; ++b) {
      ExtGcd g = ext_gcd(a, b);
      EXPECT_EQ(a * g.x + b * g.y, g.d) << a << " " << b;
      EXPECT_EQ(g.d, test::naive_gcd(a, b)) << a << " " << b;
      EXPECT_GE(g.d, 0);
    }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(3, 4), Residue(3, 4));
  for (Int n = 1; n <= 12; ++n)
    EXPECT_EQ(mod_inverse(1, n).value, 1 % n);
  EXPECT_ERROR(ErrorKind::NotInvertible, mod_inverse(2, 4));
}

TEST(ModInverse, ComposesToOne) {
  for (Int n = 2; n <= 40; ++n)
    for (Int a = -50; a <= 50; ++a) {
      if (test::naive_gcd(a, n) != 1)
        continue;
      Residue inv = mod_inverse(a, n);
      EXPECT_EQ((Residue(a, n) * inv).value, 1) << a << " mod " << n;
    }
}

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(3, 2, 4).value, 1);
  EXPECT_EQ(mod_pow(2, -1, 5).value, 3);
  for (Int b = -5; b <= 5; ++b)
    EXPECT_EQ(mod_pow(b, 0, 7).value, 1);
}

TEST(ModPow, ExponentsAdd) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> mod(2, 60), e(-200, 200), base(-100, 100);
  int done = 0;
  while (done < 2000) {
    Int n = mod(rng), b = base(rng);
    if (test::naive_gcd(b, n) != 1)
      continue;
    Int e1 = e(rng), e2 = e(rng);
    EXPECT_EQ(mod_pow(b, e1 + e2, n), mod_pow(b, e1, n) * mod_pow(b, e2, n));
    ++done;
  }
}

TEST(ModPow, MatchesRepeatedMultiplication) {
  for (Int n = 1; n <= 15; ++n)
    for (Int b = -6; b <= 6; ++b) {
      Int acc = 1 % n;
      for (Int k = 0; k <= 20; ++k) {
        EXPECT_EQ(mod_pow(b, k, n).value, acc);
        acc = ((acc * b) % n + n) % n;
      }
    }
}

TEST(Gcd3, Examples) {
  EXPECT_EQ(gcd3(2, 3, 2), 1);
  EXPECT_EQ(gcd3(0, 3, 2), 1);
  EXPECT_EQ(gcd3(2, 2, 0), 2);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(-12, 18), 6);
}

TEST(Gcd3, PermutationInvariant) {
  for (Int a = -12; a <= 12; ++a)
    for (Int b = -12; b <= 12; ++b)
      for (Int c = 0; c <= 12; ++c) {
        Int g = gcd3(a, b, c);
        EXPECT_EQ(g, gcd3(b, a, c));
        EXPECT_EQ(g, gcd3(c, b, a));
        EXPECT_EQ(g, gcd3(a, c, b));
      }
}

TEST(Gcd3, DependsOnlyOnTheClassModN) {
  for (Int n = 1; n <= 15; ++n)
    for (Int m = 1; m <= 15; ++m)
      for (Int s = 0; s < n; ++s)
        for (Int k = -5; k <= 5; ++k)
          EXPECT_EQ(gcd3(s + k * n, m, n), gcd3(s, m, n));
}

TEST(Checked, OverflowIsAnError) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_ERROR(ErrorKind::Overflow, checked_add(big, 1));
  EXPECT_ERROR(ErrorKind::Overflow, checked_mul(big / 2 + 1, 2));
  EXPECT_ERROR(ErrorKind::Overflow, checked_neg(std::numeric_limits<Int>::min()));
  EXPECT_EQ(checked_add(big - 1, 1), big);
}

TEST(FloorArithmetic, NegativeOperands) {
  EXPECT_EQ(mod_floor(-1, 3), 2);
  EXPECT_EQ(mod_floor(-3, 3), 0);
  EXPECT_EQ(floor_div(-1, 3), -1);
  EXPECT_EQ(floor_div(-3, 3), -1);
  EXPECT_EQ(floor_div(7, 3), 2);
  for (Int a = -30; a <= 30; ++a)
    for (Int d = 1; d <= 7; ++d)
      EXPECT_EQ(floor_div(a, d) * d + mod_floor(a, d), a);
}

TEST(Residue, MismatchedModuli) {
  EXPECT_ERROR(ErrorKind::InvalidArgument, Residue(1, 3) + Residue(1, 4));
  EXPECT_EQ(Residue(5, 3) - Residue(4, 3), Residue(1, 3));
}

TEST(Lcm, Basic) {
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_EQ(lcm(0, 5), 0);
}
