// Exact integer and modular arithmetic.
//
// Everything is done in 64-bit signed integers with overflow detection:
// an overflow throws ErrorKind::Overflow instead of wrapping around.
// Intended operating range is moduli up to 2^20 and free exponents up to
// 2^31 in absolute value, far below the point where products could overflow.

#ifndef CROSSED_CYCLIC_CORE_HPP_
#define CROSSED_CYCLIC_CORE_HPP_

#include <compare>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace crossed {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int abs_value(Int a) { return a < 0 ? checked_neg(a) : a; }

// Least non-negative residue of a modulo n (n >= 1).
inline Int mod_floor(Int a, Int n) {
  if (n < 1)
    fail(ErrorKind::InvalidArgument, "modulus must be >= 1, got " + std::to_string(n));
  Int r = a % n;
  return r < 0 ? r + n : r;
}

// Floor division, rounding toward negative infinity (d != 0).
inline Int floor_div(Int a, Int d) {
  if (d == 0)
    fail(ErrorKind::InvalidArgument, "division by zero");
  Int q = a / d;
  if ((a % d != 0) && ((a < 0) != (d < 0)))
    q = checked_sub(q, 1);
  return q;
}

// An element a^value of C_modulus, stored as its least non-negative exponent.
struct Residue {
  Int value = 0;
  Int modulus = 1;

  Residue() = default;
  Residue(Int v, Int n) : value(mod_floor(v, n)), modulus(n) {}

  friend bool operator==(const Residue&, const Residue&) = default;

  friend Residue operator+(const Residue& a, const Residue& b) {
    require_same(a, b);
    return {checked_add(a.value, b.value), a.modulus};
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    require_same(a, b);
    return {checked_sub(a.value, b.value), a.modulus};
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    require_same(a, b);
    return {checked_mul(a.value, b.value), a.modulus};
  }

private:
  static void require_same(const Residue& a, const Residue& b) {
    if (a.modulus != b.modulus)
      fail(ErrorKind::InvalidArgument, "residues with different moduli");
  }
};

struct ExtGcd {
  Int d = 0;
  Int x = 0;
  Int y = 0;
  friend bool operator==(const ExtGcd&, const ExtGcd&) = default;
};

// d = gcd(|a|, |b|) together with a*x + b*y = d; gcd(0, 0) = 0 with x = y = 0.
inline ExtGcd ext_gcd(Int a, Int b) {
  if (a == 0 && b == 0)
    return {0, 0, 0};
  Int old_r = abs_value(a), r = abs_value(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r; r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s; s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t; t = tmp;
  }
  if (a < 0) old_s = checked_neg(old_s);
  if (b < 0) old_t = checked_neg(old_t);
  return {old_r, old_s, old_t};
}

inline Int gcd(Int a, Int b) { return ext_gcd(a, b).d; }

// gcd of three absolute values; a zero argument does not contribute.
inline Int gcd3(Int a, Int b, Int c) { return gcd(gcd(a, b), c); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0)
    return 0;
  return checked_mul(abs_value(a) / gcd(a, b), abs_value(b));
}

inline Residue mod_inverse(Int a, Int n) {
  if (n < 1)
    fail(ErrorKind::InvalidArgument, "modulus must be >= 1");
  ExtGcd e = ext_gcd(mod_floor(a, n), n);
  if (e.d != 1)
    fail(ErrorKind::NotInvertible,
         std::to_string(a) + " is not invertible modulo " + std::to_string(n),
         {a, n});
  return {e.x, n};
}

// base^exp mod n; a negative exponent goes through mod_inverse.
inline Residue mod_pow(Int base, Int exp, Int n) {
  if (n < 1)
    fail(ErrorKind::InvalidArgument, "modulus must be >= 1");
  Int b = mod_floor(base, n);
  if (exp < 0) {
    b = mod_inverse(b, n).value;
    // -exp is safe: |exp| <= 2^63 - 1 after this check
    if (exp == INT64_MIN)
      fail(ErrorKind::Overflow, "exponent out of range");
    exp = -exp;
  }
  Int result = 1 % n;
  while (exp > 0) {
    if (exp & 1)
      result = mod_floor(checked_mul(result, b), n);
    b = mod_floor(checked_mul(b, b), n);
    exp >>= 1;
  }
  return {result, n};
}

} // namespace crossed

#endif // CROSSED_CYCLIC_CORE_HPP_
