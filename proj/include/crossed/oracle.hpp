// Brute-force ground truth for small finite groups. Nothing here relies on
// the structure theory in cyclicity.hpp; it only reads multiplication tables.

#ifndef CROSSED_ORACLE_HPP_
#define CROSSED_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crossed_system.hpp"
#include "group_table.hpp"

namespace crossed {

inline constexpr std::size_t kMaxIsoOrder = 64;
inline constexpr Int kDefaultSystemBudget = Int(1) << 24;

struct CyclicCheck {
  bool cyclic = false;
  std::optional<Elem> generator;  // least index of order |t|
};

inline Int brute_order(const FiniteGroupTable& t, Elem x) {
  Int k = 1;
  Elem y = x;
  while (y != t.identity) {
    y = t.mul(y, x);
    ++k;
  }
  return k;
}

inline CyclicCheck brute_force_is_cyclic(const FiniteGroupTable& t) {
  for (Elem x = 0; x < t.order; ++x)
    if (brute_order(t, x) == Int(t.order))
      return {true, x};
  return {};
}

// Sorted multiset of element orders.
inline std::vector<Int> order_profile(const FiniteGroupTable& t) {
  std::vector<Int> out(t.order);
  for (Elem x = 0; x < t.order; ++x)
    out[x] = brute_order(t, x);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Greedy generating set, trying elements of larger order first.
inline std::vector<Elem> generating_set(const FiniteGroupTable& t) {
  std::vector<Elem> order(t.order);
  for (Elem x = 0; x < t.order; ++x)
    order[x] = x;
  std::vector<Int> ord(t.order);
  for (Elem x = 0; x < t.order; ++x)
    ord[x] = brute_order(t, x);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return ord[a] > ord[b]; });

  std::vector<bool> in(t.order, false);
  in[t.identity] = true;
  std::vector<Elem> members{t.identity}, gens;
  for (Elem x : order) {
    if (in[x])
      continue;
    gens.push_back(x);
    // positive words suffice in a finite group
    for (std::size_t k = 0; k < members.size(); ++k)
      for (Elem g : gens) {
        Elem y = t.mul(members[k], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    if (members.size() == t.order)
      break;
  }
  return gens;
}

// Backtracking over generator images. Each partial assignment is propagated
// along the Cayley graph of the subgroup generated so far; a conflict or a
// collision prunes the branch. `visit` returns false to stop the search.
inline void search_isomorphisms(const FiniteGroupTable& a, const FiniteGroupTable& b,
                                const std::function<bool(const std::vector<Elem>&)>& visit) {
  const std::size_t n = a.order;
  if (n != b.order)
    return;
  const Elem unset = Elem(n);
  std::vector<Elem> gens = generating_set(a);
  std::vector<Int> ord_b(n);
  for (Elem y = 0; y < n; ++y)
    ord_b[y] = brute_order(b, y);
  std::vector<Int> ord_gen(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    ord_gen[k] = brute_order(a, gens[k]);

  std::vector<Elem> map(n, unset), img(gens.size(), unset);
  std::vector<bool> used(n, false);
  map[a.identity] = b.identity;
  used[b.identity] = true;
  std::vector<Elem> trail;  // elements of a assigned at the current depth

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (stop)
      return;
    if (level == gens.size()) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (map[a.mul(x, y)] != b.mul(map[x], map[y]))
            return;
      if (!visit(map))
        stop = true;
      return;
    }
    for (Elem cand = 0; cand < n && !stop; ++cand) {
      if (ord_b[cand] != ord_gen[level])
        continue;
      img[level] = cand;
      std::size_t mark = trail.size();
      bool ok = true;
      std::vector<Elem> frontier;
      for (Elem x = 0; x < n; ++x)
        if (map[x] != unset)
          frontier.push_back(x);
      for (std::size_t k = 0; k < frontier.size() && ok; ++k) {
        Elem x = frontier[k];
        for (std::size_t g = 0; g <= level && ok; ++g) {
          Elem z = a.mul(x, gens[g]);
          Elem w = b.mul(map[x], img[g]);
          if (map[z] == unset) {
            if (used[w]) {
              ok = false;
              break;
            }
            map[z] = w;
            used[w] = true;
            trail.push_back(z);
            frontier.push_back(z);
          } else if (map[z] != w) {
            ok = false;
          }
        }
      }
      if (ok)
        rec(level + 1);
      while (trail.size() > mark) {
        Elem z = trail.back();
        trail.pop_back();
        used[map[z]] = false;
        map[z] = unset;
      }
    }
    img[level] = unset;
  };
  rec(0);
}

} // namespace detail

// A product-preserving bijection t1 -> t2, or nothing if none exists.
inline std::optional<std::vector<Elem>> tables_isomorphic(const FiniteGroupTable& t1,
                                                          const FiniteGroupTable& t2,
                                                          std::size_t max_order = kMaxIsoOrder) {
  if (t1.order > max_order || t2.order > max_order)
    fail(ErrorKind::TooLarge, "isomorphism testing is limited to order " +
                                  std::to_string(max_order));
  if (t1.order != t2.order || order_profile(t1) != order_profile(t2))
    return std::nullopt;
  std::optional<std::vector<Elem>> found;
  detail::search_isomorphisms(t1, t2, [&](const std::vector<Elem>& map) {
    found = map;
    return false;
  });
  return found;
}

// All automorphisms of t as permutations of its indices.
inline std::vector<std::vector<Elem>> automorphisms(const FiniteGroupTable& t) {
  if (t.order > kMaxIsoOrder)
    fail(ErrorKind::TooLarge, "automorphism search is limited to order " +
                                  std::to_string(kMaxIsoOrder));
  std::vector<std::vector<Elem>> out;
  detail::search_isomorphisms(t, t, [&](const std::vector<Elem>& map) {
    out.push_back(map);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Direct check of the crossed-system conditions, independent of
// validate_crossed_system.
inline bool satisfies_crossed_conditions(const FiniteGroupTable& H, const FiniteGroupTable& G,
                                         const std::vector<const std::vector<Elem>*>& alpha,
                                         const std::vector<Elem>& f) {
  const std::size_t ng = G.order;
  if (f[G.identity * ng + G.identity] != H.identity)
    return false;
  for (Elem g1 = 0; g1 < ng; ++g1)
    for (Elem g2 = 0; g2 < ng; ++g2) {
      Elem c = f[g1 * ng + g2], ci = H.inv(c);
      const auto& a12 = *alpha[G.mul(g1, g2)];
      for (Elem h = 0; h < H.order; ++h)
        if ((*alpha[g1])[(*alpha[g2])[h]] != H.mul(H.mul(c, a12[h]), ci))
          return false;
    }
  for (Elem g1 = 0; g1 < ng; ++g1)
    for (Elem g2 = 0; g2 < ng; ++g2)
      for (Elem g3 = 0; g3 < ng; ++g3)
        if (H.mul(f[g1 * ng + g2], f[G.mul(g1, g2) * ng + g3]) !=
            H.mul((*alpha[g1])[f[g2 * ng + g3]], f[g1 * ng + G.mul(g2, g3)]))
          return false;
  return true;
}

} // namespace detail

// Every normalized crossed system on (H, G): alpha ranges over all functions
// G -> Aut(H), f over all functions G x G -> H.
inline std::vector<CrossedSystem> enumerate_crossed_systems(const FiniteGroupTable& H,
                                                            const FiniteGroupTable& G,
                                                            Int budget = kDefaultSystemBudget) {
  std::vector<std::vector<Elem>> aut = automorphisms(H);
  const std::size_t ng = G.order, cells = ng * ng;
  Int size = 1;
  try {
    for (std::size_t k = 0; k < cells; ++k)
      size = checked_mul(size, Int(H.order));
    for (std::size_t k = 0; k < ng; ++k)
      size = checked_mul(size, Int(aut.size()));
  } catch (const Error&) {
    fail(ErrorKind::TooLarge, "search space overflows");
  }
  if (size > budget)
    fail(ErrorKind::TooLarge,
         "search space of " + std::to_string(size) + " exceeds the budget of " +
             std::to_string(budget),
         {size, budget});

  std::vector<CrossedSystem> out;
  std::vector<std::size_t> a_idx(ng, 0);
  std::vector<const std::vector<Elem>*> alpha(ng);
  while (true) {
    for (std::size_t g = 0; g < ng; ++g)
      alpha[g] = &aut[a_idx[g]];
    std::vector<Elem> f(cells, 0);
    while (true) {
      if (detail::satisfies_crossed_conditions(H, G, alpha, f)) {
        CrossedSystem s;
        s.H = H;
        s.G = G;
        for (std::size_t g = 0; g < ng; ++g)
          s.alpha.push_back(*alpha[g]);
        s.f = f;
        out.push_back(validate_crossed_system(std::move(s)));
      }
      std::size_t k = 0;
      for (; k < cells; ++k) {
        if (++f[k] < H.order)
          break;
        f[k] = 0;
      }
      if (k == cells)
        break;
    }
    std::size_t g = 0;
    for (; g < ng; ++g) {
      if (++a_idx[g] < aut.size())
        break;
      a_idx[g] = 0;
    }
    if (g == ng)
      break;
  }
  return out;
}

} // namespace crossed

#endif // CROSSED_ORACLE_HPP_
