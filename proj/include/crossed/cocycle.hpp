// Symmetric normalized 2-cocycles C_m x C_m -> C_n (n finite) or -> Z.
//
// Such a cocycle is determined by an m-periodic function phi with phi(0) = 0,
// via partial sums S_k = phi(0) + ... + phi(k-1):
//
//   f(x^k, x^l) = a^(S_{k+l} - S_k - S_l),     phi(k) = exponent of f(x, x^k).
//
// Cocycles are handled additively: a value is the exponent of a (or of the
// generator g of Z for the infinite target).

#ifndef CROSSED_COCYCLE_HPP_
#define CROSSED_COCYCLE_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossed_system.hpp"
#include "cyclic_core.hpp"

namespace crossed {

inline constexpr Int kDefaultProfileBudget = Int(1) << 16;

struct CocycleProfile {
  Int m = 2;
  std::optional<Int> n;  // empty: infinite cyclic target
  std::vector<Int> phi;  // phi(0), ..., phi(m-1); periodic extension is implicit

  bool infinite() const { return !n.has_value(); }
  Int at(Int k) const { return phi[std::size_t(mod_floor(k, m))]; }

  friend bool operator==(const CocycleProfile&, const CocycleProfile&) = default;
};

// Checks the shape and reduces finite values into [0, n).
inline CocycleProfile make_profile(Int m, std::optional<Int> n, std::vector<Int> phi) {
  if (m < 2)
    fail(ErrorKind::InvalidArgument, "m must be >= 2");
  if (n && *n < 2)
    fail(ErrorKind::InvalidArgument, "n must be >= 2 or infinite");
  if (Int(phi.size()) != m)
    fail(ErrorKind::InvalidArgument,
         "phi must list " + std::to_string(m) + " values, got " + std::to_string(phi.size()));
  if (n)
    for (Int& v : phi)
      v = mod_floor(v, *n);
  if (phi[0] != 0)
    fail(ErrorKind::SemanticError, "phi(0) must be 0");
  return {m, n, std::move(phi)};
}

inline CocycleProfile zero_profile(Int m, std::optional<Int> n) {
  return make_profile(m, n, std::vector<Int>(std::size_t(m), 0));
}

struct PartialSums {
  Int m = 2;
  std::optional<Int> n;
  std::vector<Int> S;  // S_0 .. S_m, exact integer representatives

  // S_k for any k, through whole periods: S_k = floor(k/m) S_m + S_{k mod m}.
  Int at(Int k) const {
    Int q = floor_div(k, m);
    return checked_add(checked_mul(q, S[std::size_t(m)]), S[std::size_t(k - q * m)]);
  }
  Int s_m() const { return S[std::size_t(m)]; }
  // S_m as a class modulo n; equals s_m() for the infinite target.
  Int s_m_reduced() const { return n ? mod_floor(s_m(), *n) : s_m(); }
};

inline PartialSums partial_sums(const CocycleProfile& p) {
  PartialSums ps{p.m, p.n, std::vector<Int>(std::size_t(p.m) + 1, 0)};
  for (Int k = 0; k < p.m; ++k)
    ps.S[std::size_t(k) + 1] = checked_add(ps.S[std::size_t(k)], p.phi[std::size_t(k)]);
  return ps;
}

// f on C_m x C_m as exponents; values[k * m + l] = f(x^k, x^l).
struct ExponentCocycle {
  Int m = 2;
  std::optional<Int> n;
  std::vector<Int> values;

  Int at(Int k, Int l) const {
    return values[std::size_t(mod_floor(k, m) * m + mod_floor(l, m))];
  }
  friend bool operator==(const ExponentCocycle&, const ExponentCocycle&) = default;
};

namespace detail {

inline Int reduce(Int v, const std::optional<Int>& n) { return n ? mod_floor(v, *n) : v; }

// Symmetry, normalization and the trivial-action cocycle identity
//   f(k,l) + f(k+l,p) = f(l,p) + f(k,l+p),
// each reported with its witness.
inline void check_symmetric_cocycle(const ExponentCocycle& f) {
  const Int m = f.m;
  auto s = [](Int v) { return std::to_string(v); };
  for (Int k = 0; k < m; ++k)
    for (Int l = k + 1; l < m; ++l)
      if (f.at(k, l) != f.at(l, k))
        fail(ErrorKind::NotSymmetric, "f(" + s(k) + "," + s(l) + ") != f(" + s(l) + "," + s(k) + ")",
             {k, l});
  for (Int k = 0; k < m; ++k)
    if (f.at(0, k) != 0 || f.at(k, 0) != 0)
      fail(ErrorKind::NotNormalized, "f(1, x^" + s(k) + ") is not the identity", {0, k});
  for (Int k = 0; k < m; ++k)
    for (Int l = 0; l < m; ++l)
      for (Int p = 0; p < m; ++p) {
        Int lhs = reduce(checked_add(f.at(k, l), f.at(k + l, p)), f.n);
        Int rhs = reduce(checked_add(f.at(l, p), f.at(k, l + p)), f.n);
        if (lhs != rhs)
          fail(ErrorKind::NotCocycle, "at (" + s(k) + "," + s(l) + "," + s(p) + ")", {k, l, p});
      }
}

} // namespace detail

inline ExponentCocycle profile_to_cocycle(const CocycleProfile& p) {
  PartialSums ps = partial_sums(p);
  ExponentCocycle f{p.m, p.n, std::vector<Int>(std::size_t(p.m * p.m))};
  for (Int k = 0; k < p.m; ++k)
    for (Int l = 0; l < p.m; ++l) {
      Int e = checked_sub(checked_sub(ps.at(k + l), ps.at(k)), ps.at(l));
      f.values[std::size_t(k * p.m + l)] = detail::reduce(e, p.n);
    }
  try {
    detail::check_symmetric_cocycle(f);
  } catch (const Error& e) {
    throw std::logic_error(std::string("profile produced a bad cocycle: ") + e.what());
  }
  for (Int k = 0; k < p.m; ++k)
    if (f.at(1, k) != p.phi[std::size_t(k)])
      throw std::logic_error("f(x, x^k) differs from phi(k)");
  return f;
}

inline CocycleProfile cocycle_to_profile(const ExponentCocycle& f) {
  if (f.m < 2 || Int(f.values.size()) != f.m * f.m)
    fail(ErrorKind::InvalidArgument, "cocycle table has the wrong shape");
  if (f.n) {
    if (*f.n < 2)
      fail(ErrorKind::InvalidArgument, "n must be >= 2 or infinite");
    for (Int v : f.values)
      if (v < 0 || v >= *f.n)
        fail(ErrorKind::InvalidArgument, "cocycle value outside Z_n");
  }
  detail::check_symmetric_cocycle(f);
  std::vector<Int> phi(std::size_t(f.m));
  for (Int k = 0; k < f.m; ++k)
    phi[std::size_t(k)] = f.at(1, k);
  CocycleProfile p = make_profile(f.m, f.n, std::move(phi));
  if (profile_to_cocycle(p) != f)
    throw std::logic_error("cocycle is not reproduced by its profile");
  return p;
}

inline Int profile_count(Int m, Int n) {
  Int count = 1;
  for (Int k = 1; k < m; ++k)
    count = checked_mul(count, n);
  return count;
}

// Visits all n^(m-1) profiles of Sigma_{m,n} in lexicographic order of
// (phi(1), ..., phi(m-1)).
inline void for_each_profile(Int m, Int n, Int budget,
                             const std::function<void(const CocycleProfile&)>& visit) {
  if (m < 2 || n < 2)
    fail(ErrorKind::InvalidArgument, "enumeration needs m >= 2 and finite n >= 2");
  Int count = 0;
  try {
    count = profile_count(m, n);
  } catch (const Error&) {
    fail(ErrorKind::TooLarge, "n^(m-1) overflows");
  }
  if (count > budget)
    fail(ErrorKind::TooLarge,
         std::to_string(count) + " profiles exceed the budget of " + std::to_string(budget),
         {count, budget});
  CocycleProfile p{m, n, std::vector<Int>(std::size_t(m), 0)};
  for (Int c = 0; c < count; ++c) {
    visit(p);
    for (Int k = m - 1; k >= 1; --k) {
      if (++p.phi[std::size_t(k)] < n)
        break;
      p.phi[std::size_t(k)] = 0;
    }
  }
}

inline std::vector<CocycleProfile> enumerate_profiles(Int m, Int n,
                                                      Int budget = kDefaultProfileBudget) {
  std::vector<CocycleProfile> out;
  for_each_profile(m, n, budget, [&](const CocycleProfile& p) { out.push_back(p); });
  return out;
}

// The twisted crossed system C_n x^f C_m: trivial action, f from the profile.
inline CrossedSystem twisted_crossed_system(const CocycleProfile& p) {
  if (p.infinite())
    fail(ErrorKind::InfiniteFamily, "an infinite target has no finite crossed system");
  ExponentCocycle f = profile_to_cocycle(p);
  CrossedSystem s = trivial_crossed_system(cyclic_table(std::size_t(*p.n)),
                                           cyclic_table(std::size_t(p.m)));
  for (std::size_t k = 0; k < f.values.size(); ++k)
    s.f[k] = Elem(f.values[k]);
  return s;
}

// Reads a finite trivial-action system over C_n, C_m (canonical tables,
// element k = a^k) as an exponent cocycle.
inline ExponentCocycle exponent_cocycle(const CrossedSystem& s) {
  ExponentCocycle f{Int(s.G.order), Int(s.H.order), {}};
  f.values.assign(s.f.begin(), s.f.end());
  return f;
}

} // namespace crossed

#endif // CROSSED_COCYCLE_HPP_
