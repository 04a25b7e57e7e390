// Crossed systems (H, G, alpha, f) over finite groups and their crossed
// products.
//
// Notation used in comments: g > h is alpha(g)(h), the weak action of G on H.
// A normalized crossed system satisfies
//
//   g1 > (g2 > h)           = f(g1,g2) ((g1 g2) > h) f(g1,g2)^-1      (WA)
//   f(g1,g2) f(g1 g2, g3)   = (g1 > f(g2,g3)) f(g1, g2 g3)           (CC)
//   f(1,1)                  = 1
//
// and the crossed product is H x G with
//
//   (h1,g1)(h2,g2) = (h1 (g1 > h2) f(g1,g2), g1 g2).

#ifndef CROSSED_CROSSED_SYSTEM_HPP_
#define CROSSED_CROSSED_SYSTEM_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "group_table.hpp"

namespace crossed {

using WeakActionMap = std::vector<std::vector<Elem>>;  // alpha[g][h] = g > h
using CocycleMap = std::vector<Elem>;                  // f[g1 * |G| + g2]

struct CrossedSystem {
  FiniteGroupTable H;
  FiniteGroupTable G;
  WeakActionMap alpha;
  CocycleMap f;
  bool validated = false;

  Elem act(Elem g, Elem h) const { return alpha[g][h]; }
  Elem cocycle(Elem g1, Elem g2) const { return f[std::size_t(g1) * G.order + g2]; }

  // Index of the pair (h, g) in the crossed product table.
  Elem pair_index(Elem h, Elem g) const { return Elem(h + H.order * g); }

  friend bool operator==(const CrossedSystem& x, const CrossedSystem& y) {
    return x.H == y.H && x.G == y.G && x.alpha == y.alpha && x.f == y.f;
  }
};

inline WeakActionMap trivial_action(const FiniteGroupTable& H, const FiniteGroupTable& G) {
  std::vector<Elem> id(H.order);
  for (Elem h = 0; h < H.order; ++h)
    id[h] = h;
  return WeakActionMap(G.order, id);
}

inline CocycleMap trivial_cocycle(const FiniteGroupTable& H, const FiniteGroupTable& G) {
  return CocycleMap(G.order * G.order, H.identity);
}

inline CrossedSystem trivial_crossed_system(FiniteGroupTable H, FiniteGroupTable G) {
  CrossedSystem s;
  s.alpha = trivial_action(H, G);
  s.f = trivial_cocycle(H, G);
  s.H = std::move(H);
  s.G = std::move(G);
  return s;
}

inline bool action_is_trivial(const CrossedSystem& s) {
  for (Elem g = 0; g < s.G.order; ++g)
    for (Elem h = 0; h < s.H.order; ++h)
      if (s.act(g, h) != h)
        return false;
  return true;
}

inline bool cocycle_is_trivial(const CrossedSystem& s) {
  return std::all_of(s.f.begin(), s.f.end(), [&](Elem x) { return x == s.H.identity; });
}

inline bool cocycle_is_symmetric(const CrossedSystem& s) {
  for (Elem a = 0; a < s.G.order; ++a)
    for (Elem b = a + 1; b < s.G.order; ++b)
      if (s.cocycle(a, b) != s.cocycle(b, a))
        return false;
  return true;
}

inline std::vector<Elem> center(const FiniteGroupTable& t) {
  std::vector<Elem> z;
  for (Elem a = 0; a < t.order; ++a) {
    bool central = true;
    for (Elem b = 0; b < t.order && central; ++b)
      central = t.mul(a, b) == t.mul(b, a);
    if (central)
      z.push_back(a);
  }
  return z;
}

namespace detail {

inline std::string idx(Elem e) { return std::to_string(e); }

inline void check_shapes(const CrossedSystem& s) {
  for (const FiniteGroupTable* t : {&s.H, &s.G}) {
    AxiomReport r = verify_group_axioms(*t);
    if (!r.ok())
      fail(ErrorKind::InvalidArgument,
           std::string(t == &s.H ? "H" : "G") + " is not a group: " + r.message);
  }
  const std::size_t nh = s.H.order, ng = s.G.order;
  if (s.alpha.size() != ng)
    fail(ErrorKind::InvalidArgument, "alpha needs one permutation per element of G");
  for (Elem g = 0; g < ng; ++g) {
    if (s.alpha[g].size() != nh)
      fail(ErrorKind::InvalidArgument, "alpha(" + idx(g) + ") has the wrong length");
    std::vector<bool> seen(nh, false);
    for (Elem h : s.alpha[g]) {
      if (h >= nh || seen[h])
        fail(ErrorKind::InvalidArgument, "alpha(" + idx(g) + ") is not a permutation", {g});
      seen[h] = true;
    }
  }
  if (s.f.size() != ng * ng)
    fail(ErrorKind::InvalidArgument, "f needs |G|^2 entries");
  for (Elem x : s.f)
    if (x >= nh)
      fail(ErrorKind::InvalidArgument, "f has an entry outside H");
}

} // namespace detail

// Exhaustive check of a crossed system. Returns a copy marked validated.
// Normalization is checked before the compatibility conditions so that a
// non-normalized input is always reported as NotNormalized.
inline CrossedSystem validate_crossed_system(CrossedSystem s) {
  using detail::idx;
  detail::check_shapes(s);
  const FiniteGroupTable& H = s.H;
  const FiniteGroupTable& G = s.G;

  for (Elem g = 0; g < G.order; ++g)
    for (Elem a = 0; a < H.order; ++a)
      for (Elem b = 0; b < H.order; ++b)
        if (s.act(g, H.mul(a, b)) != H.mul(s.act(g, a), s.act(g, b)))
          fail(ErrorKind::NotAutomorphism,
               "alpha(" + idx(g) + ") does not preserve " + idx(a) + "*" + idx(b), {g, a, b});

  if (s.cocycle(G.identity, G.identity) != H.identity)
    fail(ErrorKind::NotNormalized, "f(1,1) = " + idx(s.cocycle(G.identity, G.identity)));

  for (Elem g1 = 0; g1 < G.order; ++g1)
    for (Elem g2 = 0; g2 < G.order; ++g2) {
      Elem c = s.cocycle(g1, g2);
      Elem g12 = G.mul(g1, g2);
      for (Elem h = 0; h < H.order; ++h) {
        Elem lhs = s.act(g1, s.act(g2, h));
        Elem rhs = H.mul(H.mul(c, s.act(g12, h)), H.inv(c));
        if (lhs != rhs)
          fail(ErrorKind::WeakActionViolated,
               "at g1=" + idx(g1) + ", g2=" + idx(g2) + ", h=" + idx(h), {g1, g2, h});
      }
    }

  for (Elem g1 = 0; g1 < G.order; ++g1)
    for (Elem g2 = 0; g2 < G.order; ++g2) {
      Elem g12 = G.mul(g1, g2);
      for (Elem g3 = 0; g3 < G.order; ++g3) {
        Elem lhs = H.mul(s.cocycle(g1, g2), s.cocycle(g12, g3));
        Elem rhs = H.mul(s.act(g1, s.cocycle(g2, g3)), s.cocycle(g1, G.mul(g2, g3)));
        if (lhs != rhs)
          fail(ErrorKind::CocycleViolated,
               "at g1=" + idx(g1) + ", g2=" + idx(g2) + ", g3=" + idx(g3), {g1, g2, g3});
      }
    }

  // f(1,g) = f(g,1) = 1 and 1 > h = h follow from the above.
  for (Elem g = 0; g < G.order; ++g)
    if (s.cocycle(G.identity, g) != H.identity || s.cocycle(g, G.identity) != H.identity)
      throw std::logic_error("normalized crossed system with f(1,g) or f(g,1) != 1");
  for (Elem h = 0; h < H.order; ++h)
    if (s.act(G.identity, h) != h)
      throw std::logic_error("normalized crossed system with 1 > h != h");

  s.validated = true;
  return s;
}

// Crossed product table; the pair (h, g) has index h + |H| g.
inline FiniteGroupTable build_crossed_product(const CrossedSystem& input) {
  const CrossedSystem& s = input.validated ? input : validate_crossed_system(input);
  const FiniteGroupTable& H = s.H;
  const FiniteGroupTable& G = s.G;
  const std::size_t nh = H.order, n = H.order * G.order;
  if (n > kMaxTableOrder)
    fail(ErrorKind::TooLarge, "crossed product of order " + std::to_string(n));
  FiniteGroupTable t;
  t.order = n;
  t.product.resize(n * n);
  t.inverse.assign(n, Elem(n));
  t.labels.resize(n);
  for (Elem u = 0; u < n; ++u) {
    Elem h1 = Elem(u % nh), g1 = Elem(u / nh);
    for (Elem v = 0; v < n; ++v) {
      Elem h2 = Elem(v % nh), g2 = Elem(v / nh);
      Elem h = H.mul(H.mul(h1, s.act(g1, h2)), s.cocycle(g1, g2));
      t.product[std::size_t(u) * n + v] = s.pair_index(h, G.mul(g1, g2));
    }
    t.labels[u] = "(" + H.label(h1) + "," + G.label(g1) + ")";
  }
  t.identity = s.pair_index(H.identity, G.identity);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v)
      if (t.mul(u, v) == t.identity) {
        t.inverse[u] = v;
        break;
      }
  return t;
}

enum class SpecialCase { Trivial, Semidirect, Twisted, General };

inline std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::Trivial: return "trivial";
    case SpecialCase::Semidirect: return "semidirect";
    case SpecialCase::Twisted: return "twisted";
    case SpecialCase::General: return "general";
  }
  return "general";
}

// On a validated system: trivial f forces alpha to be a homomorphism, and
// trivial alpha forces f to be a central 2-cocycle. Both are asserted.
inline SpecialCase classify_special_case(const CrossedSystem& input) {
  const CrossedSystem& s = input.validated ? input : validate_crossed_system(input);
  const FiniteGroupTable& H = s.H;
  const FiniteGroupTable& G = s.G;
  bool trivial_alpha = action_is_trivial(s);
  bool trivial_f = cocycle_is_trivial(s);
  if (trivial_f) {
    for (Elem g1 = 0; g1 < G.order; ++g1)
      for (Elem g2 = 0; g2 < G.order; ++g2)
        for (Elem h = 0; h < H.order; ++h)
          if (s.act(G.mul(g1, g2), h) != s.act(g1, s.act(g2, h)))
            throw std::logic_error("trivial cocycle but alpha is not a homomorphism");
  }
  if (trivial_alpha) {
    std::vector<Elem> z = center(H);
    for (Elem x : s.f)
      if (!std::binary_search(z.begin(), z.end(), x))
        throw std::logic_error("trivial action but f leaves the center");
    for (Elem g1 = 0; g1 < G.order; ++g1)
      for (Elem g2 = 0; g2 < G.order; ++g2)
        for (Elem g3 = 0; g3 < G.order; ++g3)
          if (H.mul(s.cocycle(g1, g2), s.cocycle(G.mul(g1, g2), g3)) !=
              H.mul(s.cocycle(g2, g3), s.cocycle(g1, G.mul(g2, g3))))
            throw std::logic_error("trivial action but f is not a 2-cocycle");
  }
  if (trivial_alpha && trivial_f)
    return SpecialCase::Trivial;
  if (trivial_f)
    return SpecialCase::Semidirect;
  if (trivial_alpha)
    return SpecialCase::Twisted;
  return SpecialCase::General;
}

// Result of pulling a crossed system out of an extension H -> E -> E/H.
struct Extraction {
  CrossedSystem system;           // validated
  std::vector<Elem> h_elements;   // H index -> element of E
  std::vector<Elem> transversal;  // G index (coset) -> representative in E
  std::vector<Elem> coset_of;     // element of E -> G index
  std::vector<Elem> iso;          // crossed product index -> element of E
};

inline bool is_normal_subgroup(const FiniteGroupTable& E, const std::vector<Elem>& sub) {
  std::vector<bool> in(E.order, false);
  for (Elem x : sub) {
    if (x >= E.order)
      return false;
    in[x] = true;
  }
  if (!in[E.identity])
    return false;
  for (Elem a : sub)
    for (Elem b : sub)
      if (!in[E.mul(a, b)])
        return false;
  for (Elem x = 0; x < E.order; ++x)
    for (Elem a : sub)
      if (!in[E.mul(E.mul(x, a), E.inv(x))])
        return false;
  return true;
}

// Cosets of a normal subgroup are numbered by their least element, so the
// identity coset (containing the identity) is number 0 when identity is 0.
// If `transversal` is empty the least element of each coset is used.
// alpha(g)(h) = s(g) h s(g)^-1 and f(g1,g2) = s(g1) s(g2) s(g1 g2)^-1.
inline Extraction extract_crossed_system(const FiniteGroupTable& E,
                                         std::vector<Elem> h_elements,
                                         std::vector<Elem> transversal = {}) {
  AxiomReport rep = verify_group_axioms(E);
  if (!rep.ok())
    fail(ErrorKind::InvalidArgument, "E is not a group: " + rep.message);
  std::sort(h_elements.begin(), h_elements.end());
  h_elements.erase(std::unique(h_elements.begin(), h_elements.end()), h_elements.end());
  if (!is_normal_subgroup(E, h_elements))
    fail(ErrorKind::NotNormalSubgroup, "the given elements do not form a normal subgroup");
  if (h_elements.front() != E.identity) {
    // keep the identity at H index 0
    auto it = std::find(h_elements.begin(), h_elements.end(), E.identity);
    std::rotate(h_elements.begin(), it, it + 1);
  }

  const std::size_t nh = h_elements.size(), ng = E.order / nh;
  std::vector<Elem> h_index(E.order, Elem(nh));
  for (Elem k = 0; k < nh; ++k)
    h_index[h_elements[k]] = k;

  Extraction out;
  out.coset_of.assign(E.order, Elem(ng));
  std::vector<Elem> least;
  for (Elem x = 0; x < E.order; ++x) {
    if (out.coset_of[x] != ng)
      continue;
    Elem label = Elem(least.size());
    least.push_back(x);
    for (Elem h : h_elements)
      out.coset_of[E.mul(h, x)] = label;
  }
  if (out.coset_of[E.identity] != 0)
    fail(ErrorKind::BadTransversal, "the identity coset must be coset 0");

  if (transversal.empty()) {
    out.transversal = least;
    out.transversal[0] = E.identity;
  } else {
    if (transversal.size() != ng)
      fail(ErrorKind::BadTransversal, "expected " + std::to_string(ng) + " representatives");
    out.transversal.assign(ng, Elem(E.order));
    for (Elem r : transversal) {
      if (r >= E.order)
        fail(ErrorKind::BadTransversal, "representative out of range", {r});
      Elem c = out.coset_of[r];
      if (out.transversal[c] != E.order)
        fail(ErrorKind::BadTransversal, "two representatives of the same coset", {r});
      out.transversal[c] = r;
    }
    if (out.transversal[0] != E.identity)
      fail(ErrorKind::BadTransversal, "the identity coset must be represented by the identity");
  }
  const std::vector<Elem>& sec = out.transversal;

  CrossedSystem sys;
  sys.H.order = nh;
  sys.H.product.resize(nh * nh);
  sys.H.inverse.resize(nh);
  sys.H.identity = 0;
  for (Elem a = 0; a < nh; ++a) {
    for (Elem b = 0; b < nh; ++b)
      sys.H.product[a * nh + b] = h_index[E.mul(h_elements[a], h_elements[b])];
    sys.H.inverse[a] = h_index[E.inv(h_elements[a])];
    sys.H.labels.push_back(E.label(h_elements[a]));
  }
  sys.G.order = ng;
  sys.G.product.resize(ng * ng);
  sys.G.inverse.resize(ng);
  sys.G.identity = 0;
  for (Elem a = 0; a < ng; ++a) {
    for (Elem b = 0; b < ng; ++b)
      sys.G.product[a * ng + b] = out.coset_of[E.mul(sec[a], sec[b])];
    sys.G.inverse[a] = out.coset_of[E.inv(sec[a])];
    sys.G.labels.push_back(E.label(sec[a]) + "H");
  }
  sys.alpha.assign(ng, std::vector<Elem>(nh));
  for (Elem g = 0; g < ng; ++g)
    for (Elem k = 0; k < nh; ++k)
      sys.alpha[g][k] = h_index[E.mul(E.mul(sec[g], h_elements[k]), E.inv(sec[g]))];
  sys.f.resize(ng * ng);
  for (Elem g1 = 0; g1 < ng; ++g1)
    for (Elem g2 = 0; g2 < ng; ++g2) {
      Elem x = E.mul(E.mul(sec[g1], sec[g2]), E.inv(sec[sys.G.mul(g1, g2)]));
      sys.f[g1 * ng + g2] = h_index[x];
    }

  out.system = validate_crossed_system(std::move(sys));
  out.h_elements = std::move(h_elements);

  // (h, g) -> h s(g) must be an isomorphism onto E.
  FiniteGroupTable product = build_crossed_product(out.system);
  out.iso.resize(product.order);
  std::vector<bool> hit(E.order, false);
  for (Elem u = 0; u < product.order; ++u) {
    Elem x = E.mul(out.h_elements[u % nh], sec[u / nh]);
    if (hit[x])
      throw std::logic_error("extraction map is not injective");
    hit[x] = true;
    out.iso[u] = x;
  }
  for (Elem u = 0; u < product.order; ++u)
    for (Elem v = 0; v < product.order; ++v)
      if (out.iso[product.mul(u, v)] != E.mul(out.iso[u], out.iso[v]))
        throw std::logic_error("extraction map is not a homomorphism");
  return out;
}

} // namespace crossed

#endif // CROSSED_CROSSED_SYSTEM_HPP_
