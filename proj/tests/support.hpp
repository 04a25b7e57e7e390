// Shared helpers for the unit suites.

#ifndef CROSSED_TESTS_SUPPORT_HPP_
#define CROSSED_TESTS_SUPPORT_HPP_

#include <gtest/gtest.h>

#include <optional>

#include "crossed/crossed.hpp"

namespace test {

// Runs body and returns the ErrorKind it throws, if any.
template <class F>
std::optional<crossed::ErrorKind> error_kind(F&& body) {
  try {
    body();
  } catch (const crossed::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline crossed::Int naive_gcd(crossed::Int a, crossed::Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  crossed::Int best = 0;
  for (crossed::Int d = 1; d <= (a > b ? a : b); ++d)
    if (a % d == 0 && b % d == 0)
      best = d;
  return best;
}

// Q8 as the Holder family with n=4, m=2, i=2, j=3.
inline crossed::FiniteGroupTable q8() { return crossed::to_table(crossed::Holder{4, 2, 2, 3}); }

inline crossed::FiniteGroupTable klein_four() {
  return crossed::direct_product(crossed::cyclic_table(2), crossed::cyclic_table(2));
}

// The inversion action of C_2 on C_3.
inline crossed::CrossedSystem s3_system() {
  crossed::CrossedSystem s =
      crossed::trivial_crossed_system(crossed::cyclic_table(3), crossed::cyclic_table(2));
  s.alpha[1] = {0, 2, 1};
  return s;
}

} // namespace test

#define EXPECT_ERROR(kind, stmt) \
  EXPECT_EQ(test::error_kind([&] { (void)(stmt); }), std::optional<crossed::ErrorKind>(kind))

#endif // CROSSED_TESTS_SUPPORT_HPP_
