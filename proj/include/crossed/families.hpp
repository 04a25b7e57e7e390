// Every crossed product of two cyclic groups, as a presentation family with
// normal-form arithmetic.
//
//   Holder           <a,b | a^n = 1, b^m = a^i, b^-1 a b = a^j>      a^p b^q
//   FinByInf         <a,g | a^n = 1, g^-1 a g = a^t>, (t,n) = 1       g^p a^q
//   InfByFinAbelian  <g,h | gh = hg, h^n = g^t>                       h^p g^q
//   InfByFinFlip     <g,h | h^n = 1, ghg = h>, n even                 h^p g^q
//   ZxZ              <g1,g2 | g1 g2 = g2 g1>                          g2^p g1^q
//   KleinBottle      <g1,g2 | g1 g2 g1 = g2>                          g2^p g1^q
//   TwistedFinite    C_n x^f C_m                                      (a^p, x^q)
//   TwistedInfinite  C_g x^f C_m                                      (g^p, x^q)
//
// Residue components of a normal form are kept in [0, modulus); the other
// components are unrestricted integers.
//
// Multiplication laws, derived from the relations:
//
// Holder. From b^-1 a b = a^j we get b a b^-1 = a^j*, j* = j^-1 mod n (j is a
// unit because j^m = 1 mod n), so b^q a^r = a^(r j*^q) b^q. Since
// b^-1 a^i b = a^(ij) = a^i the element b^m = a^i is central, hence
//   (p,q)(r,s) = (p + r j*^q + i floor((q+s)/m) mod n, q+s mod m).
// FinByInf. a g = g a^t gives a^q g^p' = g^p' a^(q t^p'), so
//   (p,q)(p',q') = (p+p', q t^p' + q' mod n).
// InfByFinAbelian. Abelian, with h^n = g^t as the carry:
//   (p,q)(p',q') = (p+p' mod n, q+q' + t floor((p+p')/n)).
// InfByFinFlip and KleinBottle. Conjugation by the first generator inverts
// the second (h^-1 g h = g^-1, g2^-1 g1 g2 = g1^-1), so
//   (p,q)(p',q') = (p+p' [mod n], q (-1)^p' + q').
// Twisted. (u,k)(u',k') = (u + u' + S_{k+k'} - S_k - S_k', k+k' mod m).

#ifndef CROSSED_FAMILIES_HPP_
#define CROSSED_FAMILIES_HPP_

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cocycle.hpp"
#include "cyclic_core.hpp"
#include "group_table.hpp"

namespace crossed {

struct Holder {
  Int n = 2, m = 2, i = 0, j = 1;
  friend bool operator==(const Holder&, const Holder&) = default;
};
struct FinByInf {
  Int n = 2, t = 1;
  friend bool operator==(const FinByInf&, const FinByInf&) = default;
};
struct InfByFinAbelian {
  Int n = 2, t = 0;
  friend bool operator==(const InfByFinAbelian&, const InfByFinAbelian&) = default;
};
struct InfByFinFlip {
  Int n = 2;
  friend bool operator==(const InfByFinFlip&, const InfByFinFlip&) = default;
};
struct ZxZ {
  friend bool operator==(const ZxZ&, const ZxZ&) = default;
};
struct KleinBottle {
  friend bool operator==(const KleinBottle&, const KleinBottle&) = default;
};

// Twisted products carry their partial sums so that multiplication is O(1).
struct TwistedFinite {
  CocycleProfile profile;
  PartialSums sums;
  Int n() const { return *profile.n; }
  Int m() const { return profile.m; }
  friend bool operator==(const TwistedFinite& x, const TwistedFinite& y) {
    return x.profile == y.profile;
  }
};
struct TwistedInfinite {
  CocycleProfile profile;
  PartialSums sums;
  Int m() const { return profile.m; }
  friend bool operator==(const TwistedInfinite& x, const TwistedInfinite& y) {
    return x.profile == y.profile;
  }
};

using GroupFamily = std::variant<Holder, FinByInf, InfByFinAbelian, InfByFinFlip, ZxZ,
                                 KleinBottle, TwistedFinite, TwistedInfinite>;

struct FamilyElement {
  Int p = 0;
  Int q = 0;
  friend auto operator<=>(const FamilyElement&, const FamilyElement&) = default;
};

inline std::string to_string(const FamilyElement& e) {
  return "(" + std::to_string(e.p) + ", " + std::to_string(e.q) + ")";
}

// C_n x^f C_m or C_g x^f C_m depending on the profile's target.
inline GroupFamily make_twisted(const CocycleProfile& profile) {
  PartialSums sums = partial_sums(profile);
  if (profile.infinite())
    return TwistedInfinite{profile, std::move(sums)};
  return TwistedFinite{profile, std::move(sums)};
}

inline std::string family_name(const GroupFamily& fam) {
  static const char* names[] = {"holder",      "fin_by_inf",   "inf_by_fin_abelian",
                                "inf_by_fin_flip", "zxz",     "klein_bottle",
                                "twisted",     "twisted"};
  return names[fam.index()];
}

inline bool is_finite(const GroupFamily& fam) {
  return std::holds_alternative<Holder>(fam) || std::holds_alternative<TwistedFinite>(fam);
}

// |E| for finite families.
inline std::optional<Int> family_order(const GroupFamily& fam) {
  if (auto* h = std::get_if<Holder>(&fam))
    return checked_mul(h->n, h->m);
  if (auto* t = std::get_if<TwistedFinite>(&fam))
    return checked_mul(t->n(), t->m());
  return std::nullopt;
}

inline GroupFamily validate_family(GroupFamily fam) {
  auto s = [](Int v) { return std::to_string(v); };
  if (auto* h = std::get_if<Holder>(&fam)) {
    if (h->n < 2 || h->m < 2)
      fail(ErrorKind::InvalidArgument, "holder needs n, m >= 2");
    if (h->i < 0 || h->i >= h->n || h->j < 0 || h->j >= h->n)
      fail(ErrorKind::InvalidArgument, "holder needs i, j in [0, n)");
    if (mod_floor(checked_mul(h->i, h->j - 1), h->n) != 0)
      fail(ErrorKind::HolderCongruenceFailed,
           "i(j-1) = " + s(h->i * (h->j - 1)) + " is not 0 mod " + s(h->n), {1});
    if (mod_pow(h->j, h->m, h->n).value != 1 % h->n)
      fail(ErrorKind::HolderCongruenceFailed,
           "j^m = " + s(h->j) + "^" + s(h->m) + " is not 1 mod " + s(h->n), {2});
  } else if (auto* f = std::get_if<FinByInf>(&fam)) {
    if (f->n < 2)
      fail(ErrorKind::InvalidArgument, "fin_by_inf needs n >= 2");
    if (gcd(f->t, f->n) != 1)
      fail(ErrorKind::NotCoprime, "gcd(t, n) = " + s(gcd(f->t, f->n)), {f->t, f->n});
  } else if (auto* a = std::get_if<InfByFinAbelian>(&fam)) {
    if (a->n < 2)
      fail(ErrorKind::InvalidArgument, "inf_by_fin_abelian needs n >= 2");
  } else if (auto* fl = std::get_if<InfByFinFlip>(&fam)) {
    if (fl->n < 2)
      fail(ErrorKind::InvalidArgument, "inf_by_fin_flip needs n >= 2");
    if (fl->n % 2 != 0)
      fail(ErrorKind::OddOrderFlip, "n = " + s(fl->n) + " is odd", {fl->n});
  } else if (auto* tf = std::get_if<TwistedFinite>(&fam)) {
    if (tf->profile.infinite())
      fail(ErrorKind::InvalidArgument, "finite twisted product with an infinite target");
    tf->profile = make_profile(tf->profile.m, tf->profile.n, tf->profile.phi);
    tf->sums = partial_sums(tf->profile);
  } else if (auto* ti = std::get_if<TwistedInfinite>(&fam)) {
    if (!ti->profile.infinite())
      fail(ErrorKind::InvalidArgument, "infinite twisted product with a finite target");
    ti->profile = make_profile(ti->profile.m, ti->profile.n, ti->profile.phi);
    ti->sums = partial_sums(ti->profile);
  }
  return fam;
}

namespace detail {

inline Int sign_pow(Int e) { return (e % 2 == 0) ? 1 : -1; }

inline bool is_normal(const GroupFamily& fam, const FamilyElement& e) {
  auto in = [](Int v, Int n) { return v >= 0 && v < n; };
  return std::visit(
      [&](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Holder>)
          return in(e.p, f.n) && in(e.q, f.m);
        else if constexpr (std::is_same_v<T, FinByInf>)
          return in(e.q, f.n);
        else if constexpr (std::is_same_v<T, InfByFinAbelian> || std::is_same_v<T, InfByFinFlip>)
          return in(e.p, f.n);
        else if constexpr (std::is_same_v<T, TwistedFinite>)
          return in(e.p, f.n()) && in(e.q, f.m());
        else if constexpr (std::is_same_v<T, TwistedInfinite>)
          return in(e.q, f.m());
        else
          return true;
      },
      fam);
}

inline void require_normal(const GroupFamily& fam, const FamilyElement& e) {
  if (!is_normal(fam, e))
    fail(ErrorKind::InvalidArgument,
         to_string(e) + " is not a normal form of " + family_name(fam), {e.p, e.q});
}

// f(x^k, x^l) as an exponent (not reduced).
template <class Twisted>
Int twist(const Twisted& t, Int k, Int l) {
  return checked_sub(checked_sub(t.sums.at(k + l), t.sums.at(k)), t.sums.at(l));
}

} // namespace detail

inline FamilyElement identity(const GroupFamily&) { return {0, 0}; }

inline FamilyElement multiply(const GroupFamily& fam, const FamilyElement& x,
                              const FamilyElement& y) {
  detail::require_normal(fam, x);
  detail::require_normal(fam, y);
  return std::visit(
      [&](const auto& f) -> FamilyElement {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Holder>) {
          Int jstar_q = mod_pow(mod_inverse(f.j, f.n).value, x.q, f.n).value;
          Int qs = x.q + y.q;
          Int p = x.p + checked_mul(y.p, jstar_q) + checked_mul(f.i, qs / f.m);
          return {mod_floor(p, f.n), qs % f.m};
        } else if constexpr (std::is_same_v<T, FinByInf>) {
          Int tp = mod_pow(f.t, y.p, f.n).value;
          return {checked_add(x.p, y.p), mod_floor(checked_add(checked_mul(x.q, tp), y.q), f.n)};
        } else if constexpr (std::is_same_v<T, InfByFinAbelian>) {
          Int pp = x.p + y.p;
          Int q = checked_add(checked_add(x.q, y.q), checked_mul(f.t, pp / f.n));
          return {pp % f.n, q};
        } else if constexpr (std::is_same_v<T, InfByFinFlip>) {
          return {(x.p + y.p) % f.n, checked_add(checked_mul(x.q, detail::sign_pow(y.p)), y.q)};
        } else if constexpr (std::is_same_v<T, ZxZ>) {
          return {checked_add(x.p, y.p), checked_add(x.q, y.q)};
        } else if constexpr (std::is_same_v<T, KleinBottle>) {
          return {checked_add(x.p, y.p),
                  checked_add(checked_mul(x.q, detail::sign_pow(y.p)), y.q)};
        } else if constexpr (std::is_same_v<T, TwistedFinite>) {
          Int u = x.p + y.p + detail::twist(f, x.q, y.q);
          return {mod_floor(u, f.n()), (x.q + y.q) % f.m()};
        } else {
          Int u = checked_add(checked_add(x.p, y.p), detail::twist(f, x.q, y.q));
          return {u, (x.q + y.q) % f.m()};
        }
      },
      fam);
}

inline FamilyElement inverse(const GroupFamily& fam, const FamilyElement& x) {
  detail::require_normal(fam, x);
  return std::visit(
      [&](const auto& f) -> FamilyElement {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Holder>) {
          // (a^p b^q)^-1 = b^-q a^-p; solve (p,q)(p',q') = 1 for p' directly.
          Int qi = (f.m - x.q) % f.m;
          Int jstar_q = mod_pow(mod_inverse(f.j, f.n).value, x.q, f.n).value;
          Int carry = (x.q + qi) / f.m;
          // p + p' jstar^q + i carry = 0 (mod n)
          Int rhs = mod_floor(-(x.p + checked_mul(f.i, carry)), f.n);
          Int pi = mod_floor(checked_mul(rhs, mod_inverse(jstar_q, f.n).value), f.n);
          return {pi, qi};
        } else if constexpr (std::is_same_v<T, FinByInf>) {
          Int p = checked_neg(x.p);
          Int tp = mod_pow(f.t, p, f.n).value;
          return {p, mod_floor(checked_mul(-x.q, tp), f.n)};
        } else if constexpr (std::is_same_v<T, InfByFinAbelian>) {
          Int pi = (f.n - x.p) % f.n;
          Int carry = (x.p + pi) / f.n;
          return {pi, checked_sub(checked_neg(x.q), checked_mul(f.t, carry))};
        } else if constexpr (std::is_same_v<T, InfByFinFlip>) {
          Int pi = (f.n - x.p) % f.n;
          return {pi, checked_mul(checked_neg(x.q), detail::sign_pow(pi))};
        } else if constexpr (std::is_same_v<T, ZxZ>) {
          return {checked_neg(x.p), checked_neg(x.q)};
        } else if constexpr (std::is_same_v<T, KleinBottle>) {
          return {checked_neg(x.p), checked_mul(checked_neg(x.q), detail::sign_pow(x.p))};
        } else if constexpr (std::is_same_v<T, TwistedFinite>) {
          Int ki = (f.m() - x.q) % f.m();
          return {mod_floor(-(x.p + detail::twist(f, x.q, ki)), f.n()), ki};
        } else {
          Int ki = (f.m() - x.q) % f.m();
          return {checked_neg(checked_add(x.p, detail::twist(f, x.q, ki))), ki};
        }
      },
      fam);
}

inline FamilyElement power(const GroupFamily& fam, FamilyElement x, Int k) {
  if (k < 0) {
    x = inverse(fam, x);
    k = checked_neg(k);
  }
  FamilyElement result = identity(fam);
  while (k > 0) {
    if (k & 1)
      result = multiply(fam, result, x);
    k >>= 1;
    if (k > 0)
      x = multiply(fam, x, x);
  }
  return result;
}

// The two generators in normal-form order: (1,0) is a, g, h, g2, (a,1) or
// (g,1); (0,1) is b, a, g, g1 or (1,x). See the table at the top.
inline FamilyElement first_generator(const GroupFamily&) { return {1, 0}; }
inline FamilyElement second_generator(const GroupFamily&) { return {0, 1}; }

// Normal form of first^p * second^q for arbitrary integers p, q.
inline FamilyElement word(const GroupFamily& fam, Int p, Int q) {
  return multiply(fam, power(fam, first_generator(fam), p),
                  power(fam, second_generator(fam), q));
}

// Exponent of the image under theta(h) = t, theta(g) = n on the abelian
// family; the map is a homomorphism onto gcd(n,t) Z.
inline Int theta(const InfByFinAbelian& f, const FamilyElement& e) {
  return checked_add(checked_mul(e.p, f.t), checked_mul(e.q, f.n));
}

// The twisted infinite product C_g x^f C_m is the abelian family with n = m
// and t = S_m, through h^p g^q <-> (g,1)^q (1,x)^p. These convert normal forms.
inline InfByFinAbelian abelian_model(const TwistedInfinite& t) {
  return {t.m(), t.sums.s_m()};
}
inline FamilyElement twisted_to_abelian(const TwistedInfinite& t, const FamilyElement& e) {
  // (u,k) = (g,1)^(u - S_k) (1,x)^k
  return {e.q, checked_sub(e.p, t.sums.at(e.q))};
}
inline FamilyElement abelian_to_twisted(const TwistedInfinite& t, const FamilyElement& e) {
  return {checked_add(e.q, t.sums.at(e.p)), e.p};
}

// nullopt stands for infinite order. Infinite families are decided from the
// structure of their torsion, never by an unbounded search.
inline std::optional<Int> element_order(const GroupFamily& fam, const FamilyElement& e) {
  detail::require_normal(fam, e);
  return std::visit(
      [&](const auto& f) -> std::optional<Int> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Holder> || std::is_same_v<T, TwistedFinite>) {
          Int bound = *family_order(fam);
          FamilyElement y = e;
          for (Int k = 1; k <= bound; ++k) {
            if (y == FamilyElement{})
              return k;
            y = multiply(fam, y, e);
          }
          throw std::logic_error("element order exceeds the group order");
        } else if constexpr (std::is_same_v<T, FinByInf>) {
          // maps onto Z by p; the kernel is <a> = C_n
          if (e.p != 0)
            return std::nullopt;
          return f.n / gcd(e.q, f.n);
        } else if constexpr (std::is_same_v<T, InfByFinAbelian>) {
          // theta is injective off its kernel, which has order gcd(n,t); on the
          // kernel e^k = 1 iff n | kp
          if (theta(f, e) != 0)
            return std::nullopt;
          return f.n / gcd(e.p, f.n);
        } else if constexpr (std::is_same_v<T, InfByFinFlip>) {
          // e^2 = (2p, 0) when p is odd; odd powers keep the g-part q != 0
          if (e.q == 0)
            return f.n / gcd(e.p, f.n);
          if (e.p % 2 == 0)
            return std::nullopt;
          return 2 * (f.n / gcd(2 * e.p, f.n));
        } else if constexpr (std::is_same_v<T, ZxZ> || std::is_same_v<T, KleinBottle>) {
          // both are torsion-free: p maps onto Z, and p = 0 leaves g1^q
          if (e == FamilyElement{})
            return 1;
          return std::nullopt;
        } else {
          return element_order(GroupFamily{abelian_model(f)}, twisted_to_abelian(f, e));
        }
      },
      fam);
}

// Index of a normal form in to_table(): p + n q.
inline Elem table_index(const GroupFamily& fam, const FamilyElement& e) {
  detail::require_normal(fam, e);
  if (auto* h = std::get_if<Holder>(&fam))
    return Elem(e.p + h->n * e.q);
  if (auto* t = std::get_if<TwistedFinite>(&fam))
    return Elem(e.p + t->n() * e.q);
  fail(ErrorKind::InfiniteFamily, family_name(fam) + " has no table");
}

inline FamilyElement table_element(const GroupFamily& fam, Elem index) {
  Int n = 0;
  if (auto* h = std::get_if<Holder>(&fam))
    n = h->n;
  else if (auto* t = std::get_if<TwistedFinite>(&fam))
    n = t->n();
  else
    fail(ErrorKind::InfiniteFamily, family_name(fam) + " has no table");
  return {Int(index) % n, Int(index) / n};
}

inline FiniteGroupTable to_table(const GroupFamily& fam) {
  std::optional<Int> order = family_order(fam);
  if (!order)
    fail(ErrorKind::InfiniteFamily, family_name(fam) + " is infinite");
  if (*order > Int(kMaxTableOrder))
    fail(ErrorKind::TooLarge, "group of order " + std::to_string(*order));
  const std::size_t n = std::size_t(*order);
  FiniteGroupTable t;
  t.order = n;
  t.product.resize(n * n);
  t.inverse.resize(n);
  t.labels.resize(n);
  bool holder = std::holds_alternative<Holder>(fam);
  std::vector<FamilyElement> elems(n);
  for (Elem u = 0; u < n; ++u)
    elems[u] = table_element(fam, u);

  // Both laws have the shape (p,q)(r,s) = (p + c(q) r + d(q,s), q + s) with
  // c(q) = j*^q, d = i [q+s >= m] for Holder and c = 1, d = f(x^q, x^s) for
  // the twisted product; tabulate c and d once.
  Int hn = 0, hm = 0;
  std::vector<Int> coeff, carry;
  if (auto* h = std::get_if<Holder>(&fam)) {
    hn = h->n;
    hm = h->m;
    Int jstar = mod_inverse(h->j, hn).value;
    for (Int q = 0; q < hm; ++q)
      coeff.push_back(mod_pow(jstar, q, hn).value);
    for (Int q = 0; q < hm; ++q)
      for (Int r = 0; r < hm; ++r)
        carry.push_back(q + r >= hm ? h->i : 0);
  } else {
    const auto& tw = std::get<TwistedFinite>(fam);
    hn = tw.n();
    hm = tw.m();
    coeff.assign(std::size_t(hm), 1);
    for (Int q = 0; q < hm; ++q)
      for (Int r = 0; r < hm; ++r)
        carry.push_back(mod_floor(detail::twist(tw, q, r), hn));
  }
  for (Elem u = 0; u < n; ++u) {
    const FamilyElement& x = elems[u];
    for (Elem v = 0; v < n; ++v) {
      const FamilyElement& y = elems[v];
      Int p = (x.p + coeff[std::size_t(x.q)] * y.p + carry[std::size_t(x.q * hm + y.q)]) % hn;
      Int q = (x.q + y.q) % hm;
      t.product[std::size_t(u) * n + v] = Elem(p + hn * q);
    }
    t.inverse[u] = table_index(fam, inverse(fam, elems[u]));
    const FamilyElement& e = elems[u];
    t.labels[u] = holder ? "a^" + std::to_string(e.p) + "b^" + std::to_string(e.q)
                         : to_string(e);
  }
  t.identity = 0;
  return t;
}

} // namespace crossed

#endif // CROSSED_FAMILIES_HPP_
