// When is a crossed product of two cyclic groups cyclic?
//
//   C_n #_i^j C_m       cyclic iff j = 1 and gcd(m, n, i) = 1, generated by
//                       a^u b^v for um + vi + wn = 1 with gcd(m, v) = 1
//   <g,h | gh = hg,     cyclic iff gcd(n, t) = 1 (infinite cyclic)
//        h^n = g^t>
//   C_n x^f C_m         is C_n #_i^1 C_m with i = S_m mod n
//   C_g x^f C_m         is <g,h | gh = hg, h^m = g^(S_m)>
//
// The remaining families are never cyclic: C_n by Z and the flip family have
// torsion, and Z by Z has the non-cyclic quotient structure of a rank-two
// group. A non-trivial action makes the product non-abelian.

#ifndef CROSSED_CYCLICITY_HPP_
#define CROSSED_CYCLICITY_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cocycle.hpp"
#include "crossed_system.hpp"
#include "cyclic_core.hpp"
#include "families.hpp"

namespace crossed {

struct BezoutWitness {
  Int u = 0;
  Int v = 0;
  Int w = 0;
  Int d = 0;  // gcd(m, n)
  friend bool operator==(const BezoutWitness&, const BezoutWitness&) = default;
};

// Distinct prime factors by trial division.
inline std::vector<Int> prime_factors(Int x) {
  x = abs_value(x);
  std::vector<Int> ps;
  for (Int p = 2; p <= x / p; ++p)
    if (x % p == 0) {
      ps.push_back(p);
      while (x % p == 0)
        x /= p;
    }
  if (x > 1)
    ps.push_back(x);
  return ps;
}

// u m + v i + w n = 1 with gcd(m, v) = 1, for gcd(m, n, i) = 1.
//
// d = gcd(m, n) is coprime to i. m' is m stripped of the primes of d, so
// m' d carries every prime of m and gcd(m', d) = 1. Any v with d | vi - 1 and
// m' | v - 1 is then coprime to m; such a v exists below m' d by CRT. Writing
// vi + rd = 1 and u'm + w'n = d gives u = r u', w = r w'.
inline BezoutWitness bezout_coprime(Int m, Int n, Int i) {
  if (m < 2 || n < 1)
    fail(ErrorKind::InvalidArgument, "bezout_coprime needs m >= 2 and n >= 1");
  if (gcd3(m, n, i) != 1)
    fail(ErrorKind::NotCoprimeTriple,
         "gcd(m, n, i) = " + std::to_string(gcd3(m, n, i)), {m, n, i});
  ExtGcd mn = ext_gcd(m, n);
  const Int d = mn.d;
  Int m_prime = m;
  for (Int p : prime_factors(d))
    while (m_prime % p == 0)
      m_prime /= p;

  Int v = 0;
  const Int bound = checked_mul(m_prime, d);
  for (Int cand = 1; cand <= bound; ++cand)
    if (mod_floor(checked_sub(checked_mul(cand, i), 1), d) == 0 &&
        mod_floor(cand - 1, m_prime) == 0) {
      v = cand;
      break;
    }
  if (v == 0)
    throw std::logic_error("no v satisfies the simultaneous congruences");

  Int r = checked_sub(1, checked_mul(v, i)) / d;
  BezoutWitness out{checked_mul(r, mn.x), v, checked_mul(r, mn.y), d};
  Int check = checked_add(checked_add(checked_mul(out.u, m), checked_mul(out.v, i)),
                          checked_mul(out.w, n));
  if (check != 1 || gcd(m, out.v) != 1)
    throw std::logic_error("bezout_coprime postcondition failed");
  return out;
}

enum class Obstruction {
  NonTrivialAction,
  JNotOne,
  GcdObstruction,
  TorsionObstruction,
  QuotientObstruction,
};

inline std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::NonTrivialAction: return "NonTrivialAction";
    case Obstruction::JNotOne: return "JNotOne";
    case Obstruction::GcdObstruction: return "GcdObstruction";
    case Obstruction::TorsionObstruction: return "TorsionObstruction";
    case Obstruction::QuotientObstruction: return "QuotientObstruction";
  }
  return "Unknown";
}

// The homomorphism h -> t, g -> n from <g,h | gh = hg, h^n = g^t> onto
// d Z, d = gcd(n, t). Its kernel is generated by h^(n/d) g^(-t/d).
struct ThetaWitness {
  Int h_image = 0;
  Int g_image = 0;
  Int d = 0;
  FamilyElement kernel_generator;
};

struct CyclicityVerdict {
  bool cyclic = false;
  bool infinite = false;
  std::string family;
  std::vector<std::pair<std::string, Int>> parameters;
  std::optional<FamilyElement> witness;            // a generator when cyclic
  std::optional<Int> witness_order;                // empty for infinite generators
  std::optional<std::pair<Elem, Elem>> witness_pair;  // (h, g) for raw crossed systems
  std::optional<ThetaWitness> theta;
  std::optional<Obstruction> obstruction;
  Int obstruction_gcd = 0;                         // d for GcdObstruction
  std::optional<FamilyElement> obstruction_witness;  // e.g. the kernel generator
};

inline CyclicityVerdict decide_cyclic_holder(Int n, Int m, Int i, Int j) {
  GroupFamily fam = validate_family(Holder{n, m, i, j});
  CyclicityVerdict v;
  v.family = "holder";
  v.parameters = {{"n", n}, {"m", m}, {"i", i}, {"j", j}};
  if (j != 1) {
    v.obstruction = Obstruction::JNotOne;
    return v;
  }
  if (Int d = gcd3(m, n, i); d != 1) {
    v.obstruction = Obstruction::GcdObstruction;
    v.obstruction_gcd = d;
    return v;
  }
  BezoutWitness b = bezout_coprime(m, n, i);
  FamilyElement gen = word(fam, b.u, b.v);
  std::optional<Int> ord = element_order(fam, gen);
  if (!ord || *ord != n * m)
    throw std::logic_error("a^u b^v does not have order nm");
  v.cyclic = true;
  v.witness = gen;
  v.witness_order = ord;
  return v;
}

inline CyclicityVerdict decide_cyclic_inf_by_fin(Int n, Int t) {
  if (n < 2)
    fail(ErrorKind::InvalidArgument, "n must be >= 2");
  InfByFinAbelian f{n, t};
  GroupFamily fam = f;
  const Int d = gcd(n, t);
  ThetaWitness th{t, n, d, word(fam, n / d, checked_neg(t / d))};
  if (theta(f, th.kernel_generator) != 0)
    throw std::logic_error("theta does not kill its kernel generator");

  CyclicityVerdict v;
  v.family = "inf_by_fin_abelian";
  v.parameters = {{"n", n}, {"t", t}};
  v.infinite = true;
  v.theta = th;
  if (d != 1) {
    v.obstruction = Obstruction::GcdObstruction;
    v.obstruction_gcd = d;
    v.obstruction_witness = th.kernel_generator;
    return v;
  }
  // theta is a bijection onto Z; take the preimage of 1: p = t^-1 mod n.
  Int p = mod_inverse(t, n).value;
  FamilyElement gen{p, checked_sub(1, checked_mul(p, t)) / n};
  if (theta(f, gen) != 1)
    throw std::logic_error("generator does not map to 1");
  v.cyclic = true;
  v.witness = gen;
  return v;
}

struct HolderIso {
  Int i = 0;
  Holder holder;
  GroupFamily twisted;
  std::vector<Elem> map;  // holder table index -> twisted table index

  // a^p b^q -> (a,1)^p (1,x)^q
  FamilyElement apply(const FamilyElement& e) const { return word(twisted, e.p, e.q); }
};

// C_n x^f C_m is isomorphic to C_n #_i^1 C_m with i = S_m mod n. The map is
// checked to be a bijective homomorphism on the full tables.
inline HolderIso twisted_to_holder_iso(const CocycleProfile& profile) {
  if (profile.infinite())
    fail(ErrorKind::InvalidArgument, "twisted_to_holder_iso needs a finite target");
  HolderIso iso;
  iso.twisted = validate_family(make_twisted(profile));
  const Int n = *profile.n, m = profile.m;
  iso.i = partial_sums(profile).s_m_reduced();
  iso.holder = Holder{n, m, iso.i, 1};
  GroupFamily hol = validate_family(iso.holder);

  FiniteGroupTable th = to_table(hol), tt = to_table(iso.twisted);
  iso.map.resize(th.order);
  std::vector<bool> hit(tt.order, false);
  for (Elem u = 0; u < th.order; ++u) {
    Elem img = table_index(iso.twisted, iso.apply(table_element(hol, u)));
    if (hit[img])
      throw std::logic_error("holder isomorphism is not injective");
    hit[img] = true;
    iso.map[u] = img;
  }
  for (Elem u = 0; u < th.order; ++u)
    for (Elem v = 0; v < th.order; ++v)
      if (iso.map[th.mul(u, v)] != tt.mul(iso.map[u], iso.map[v]))
        throw std::logic_error("holder isomorphism is not a homomorphism");
  return iso;
}

struct PresentationIso {
  Int t = 0;
  InfByFinAbelian model;
  GroupFamily twisted;

  // h^p g^q -> (1,x)^p (g,1)^q
  FamilyElement apply(const FamilyElement& e) const {
    return multiply(twisted, power(twisted, second_generator(twisted), e.p),
                    power(twisted, first_generator(twisted), e.q));
  }
};

// C_g x^f C_m is isomorphic to <g,h | gh = hg, h^m = g^t>, t = S_m. Checked on
// the box of normal forms with |g-exponent| <= box: injective, a homomorphism
// (on the inner box |q| <= box/5), and onto the twisted normal forms there.
inline PresentationIso twisted_inf_to_presentation_iso(const CocycleProfile& profile,
                                                       Int box = 50) {
  if (!profile.infinite())
    fail(ErrorKind::InvalidArgument, "twisted_inf_to_presentation_iso needs an infinite target");
  PresentationIso iso;
  iso.twisted = validate_family(make_twisted(profile));
  const auto& tw = std::get<TwistedInfinite>(iso.twisted);
  iso.t = tw.sums.s_m();
  iso.model = abelian_model(tw);
  GroupFamily model = iso.model;
  const Int m = profile.m;

  std::vector<FamilyElement> images;
  for (Int p = 0; p < m; ++p)
    for (Int q = -box; q <= box; ++q) {
      FamilyElement img = iso.apply({p, q});
      if (img != abelian_to_twisted(tw, {p, q}))
        throw std::logic_error("presentation isomorphism disagrees with the closed form");
      images.push_back(img);
    }
  std::vector<FamilyElement> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("presentation isomorphism is not injective");

  const Int inner = box / 5;
  for (Int p1 = 0; p1 < m; ++p1)
    for (Int q1 = -inner; q1 <= inner; ++q1)
      for (Int p2 = 0; p2 < m; ++p2)
        for (Int q2 = -inner; q2 <= inner; ++q2) {
          FamilyElement lhs = iso.apply(multiply(model, {p1, q1}, {p2, q2}));
          FamilyElement rhs = multiply(iso.twisted, iso.apply({p1, q1}), iso.apply({p2, q2}));
          if (lhs != rhs)
            throw std::logic_error("presentation isomorphism is not a homomorphism");
        }

  for (Int k = 0; k < m; ++k)
    for (Int u = -box; u <= box; ++u) {
      FamilyElement pre = twisted_to_abelian(tw, {u, k});
      if (iso.apply(pre) != FamilyElement{u, k})
        throw std::logic_error("presentation isomorphism is not onto");
    }
  return iso;
}

// C_n x^f C_m with S_m represented by s_m; only the class of s_m mod n matters.
inline CyclicityVerdict decide_cyclic_twisted_sum(Int n, Int m, Int s_m) {
  CyclicityVerdict v;
  v.family = "twisted";
  v.parameters = {{"n", n}, {"m", m}, {"S_m", s_m}};
  if (Int d = gcd3(s_m, m, n); d != 1) {
    v.obstruction = Obstruction::GcdObstruction;
    v.obstruction_gcd = d;
    return v;
  }
  v.cyclic = true;
  return v;
}

inline CyclicityVerdict decide_cyclic_main(const GroupFamily& input) {
  GroupFamily fam = validate_family(input);
  CyclicityVerdict v;
  v.family = family_name(fam);
  if (auto* h = std::get_if<Holder>(&fam))
    return decide_cyclic_holder(h->n, h->m, h->i, h->j);
  if (auto* a = std::get_if<InfByFinAbelian>(&fam))
    return decide_cyclic_inf_by_fin(a->n, a->t);
  if (auto* f = std::get_if<FinByInf>(&fam)) {
    v.parameters = {{"n", f->n}, {"t", f->t}};
    v.infinite = true;
    v.obstruction = Obstruction::TorsionObstruction;
    v.obstruction_witness = FamilyElement{0, 1};  // a, of order n
    return v;
  }
  if (auto* fl = std::get_if<InfByFinFlip>(&fam)) {
    v.parameters = {{"n", fl->n}};
    v.infinite = true;
    v.obstruction = Obstruction::TorsionObstruction;
    v.obstruction_witness = FamilyElement{1, 0};  // h, of order n
    return v;
  }
  if (std::holds_alternative<ZxZ>(fam) || std::holds_alternative<KleinBottle>(fam)) {
    v.infinite = true;
    v.obstruction = Obstruction::QuotientObstruction;
    return v;
  }
  if (auto* tf = std::get_if<TwistedFinite>(&fam)) {
    const Int n = tf->n(), m = tf->m(), s = tf->sums.s_m();
    v = decide_cyclic_twisted_sum(n, m, s);
    v.parameters.emplace_back("i", mod_floor(s, n));
    if (v.cyclic) {
      BezoutWitness b = bezout_coprime(m, n, mod_floor(s, n));
      FamilyElement gen = word(fam, b.u, b.v);  // image of a^u b^v
      std::optional<Int> ord = element_order(fam, gen);
      if (!ord || *ord != n * m)
        throw std::logic_error("twisted generator does not have order nm");
      v.witness = gen;
      v.witness_order = ord;
    }
    return v;
  }
  const auto& ti = std::get<TwistedInfinite>(fam);
  CyclicityVerdict inner = decide_cyclic_inf_by_fin(ti.m(), ti.sums.s_m());
  v = inner;
  v.family = "twisted";
  v.parameters = {{"m", ti.m()}, {"S_m", ti.sums.s_m()}};
  if (inner.witness)
    v.witness = abelian_to_twisted(ti, *inner.witness);
  if (inner.obstruction_witness)
    v.obstruction_witness = abelian_to_twisted(ti, *inner.obstruction_witness);
  return v;
}

// Finite crossed systems over cyclic H and G.
inline CyclicityVerdict decide_cyclic_main(const CrossedSystem& input) {
  const CrossedSystem& s = input.validated ? input : validate_crossed_system(input);
  std::optional<Elem> gh = find_generator(s.H), gg = find_generator(s.G);
  if (!gh || !gg)
    fail(ErrorKind::NotCyclicInputs, std::string(!gh ? "H" : "G") + " is not cyclic");
  const Int n = Int(s.H.order), m = Int(s.G.order);

  CyclicityVerdict v;
  v.family = "crossed_system";
  v.parameters = {{"n", n}, {"m", m}};
  FiniteGroupTable product;
  auto check_witness = [&](Elem h, Elem g) {
    product = build_crossed_product(s);
    if (table_element_order(product, s.pair_index(h, g)) != n * m)
      throw std::logic_error("crossed-system generator has the wrong order");
    v.cyclic = true;
    v.witness_pair = std::make_pair(h, g);
    v.witness_order = n * m;
  };

  if (m == 1 || n == 1) {
    // E is H or G itself.
    check_witness(m == 1 ? *gh : s.H.identity, n == 1 ? *gg : s.G.identity);
    v.witness = FamilyElement{m == 1 ? 1 : 0, n == 1 ? 1 : 0};
    if (m == 1 && n == 1)
      v.witness = FamilyElement{0, 0};
    return v;
  }
  if (!action_is_trivial(s)) {
    v.obstruction = Obstruction::NonTrivialAction;
    return v;
  }

  std::vector<Elem> pow_h = cyclic_subgroup(s.H, *gh), pow_g = cyclic_subgroup(s.G, *gg);
  std::vector<Int> log_h(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k)
    log_h[pow_h[std::size_t(k)]] = k;
  ExponentCocycle f{m, n, std::vector<Int>(std::size_t(m * m))};
  for (Int k = 0; k < m; ++k)
    for (Int l = 0; l < m; ++l)
      f.values[std::size_t(k * m + l)] =
          log_h[s.cocycle(pow_g[std::size_t(k)], pow_g[std::size_t(l)])];
  CocycleProfile profile = cocycle_to_profile(f);

  CyclicityVerdict tw = decide_cyclic_main(GroupFamily{make_twisted(profile)});
  v.parameters.emplace_back("S_m", partial_sums(profile).s_m());
  v.obstruction = tw.obstruction;
  v.obstruction_gcd = tw.obstruction_gcd;
  if (tw.cyclic) {
    check_witness(pow_h[std::size_t(tw.witness->p)], pow_g[std::size_t(tw.witness->q)]);
    v.witness = tw.witness;
  }
  return v;
}

} // namespace crossed

#endif // CROSSED_CYCLICITY_HPP_
