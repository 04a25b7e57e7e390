// Finite groups given by explicit multiplication tables.

#ifndef CROSSED_GROUP_TABLE_HPP_
#define CROSSED_GROUP_TABLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclic_core.hpp"

namespace crossed {

using Elem = std::uint32_t;

// Largest table the library will materialize (order * order entries).
inline constexpr std::size_t kMaxTableOrder = 4096;

// Elements are the dense indices 0..order-1. Every table produced by this
// library uses 0 as the identity; tables read from input may not, and
// verify_group_axioms() is what decides whether a table is a group.
struct FiniteGroupTable {
  std::size_t order = 0;
  std::vector<Elem> product;   // row-major, product[a * order + b] = a*b
  Elem identity = 0;
  std::vector<Elem> inverse;
  std::vector<std::string> labels;  // cosmetic, may be empty

  Elem mul(Elem a, Elem b) const { return product[std::size_t(a) * order + b]; }
  Elem inv(Elem a) const { return inverse[a]; }
  std::string label(Elem a) const {
    return a < labels.size() ? labels[a] : std::to_string(a);
  }

  // Labels do not take part in equality.
  friend bool operator==(const FiniteGroupTable& x, const FiniteGroupTable& y) {
    return x.order == y.order && x.product == y.product &&
           x.identity == y.identity && x.inverse == y.inverse;
  }
};

// Builds a table from its rows, locating the identity and the inverses.
// Entries outside [0, N) are kept as they are so that verify_group_axioms can
// report them; a missing identity or inverse is encoded as N.
inline FiniteGroupTable table_from_rows(const std::vector<std::vector<Elem>>& rows,
                                        std::vector<std::string> labels = {}) {
  FiniteGroupTable t;
  t.order = rows.size();
  if (t.order == 0)
    fail(ErrorKind::InvalidArgument, "a group table needs at least one row");
  if (t.order > kMaxTableOrder)
    fail(ErrorKind::TooLarge, "table order " + std::to_string(t.order) + " exceeds " +
                                  std::to_string(kMaxTableOrder));
  t.product.reserve(t.order * t.order);
  for (const auto& row : rows) {
    if (row.size() != t.order)
      fail(ErrorKind::InvalidArgument, "table is not square");
    t.product.insert(t.product.end(), row.begin(), row.end());
  }
  const std::size_t n = t.order;
  t.identity = Elem(n);
  for (std::size_t e = 0; e < n && t.identity == n; ++e) {
    bool unit = true;
    for (std::size_t x = 0; x < n && unit; ++x)
      unit = t.product[e * n + x] == x && t.product[x * n + e] == x;
    if (unit)
      t.identity = Elem(e);
  }
  t.inverse.assign(n, Elem(n));
  if (t.identity != n)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (t.product[x * n + y] == t.identity && t.product[y * n + x] == t.identity) {
          t.inverse[x] = Elem(y);
          break;
        }
  t.labels = std::move(labels);
  return t;
}

struct AxiomReport {
  bool closure = true;
  bool identity = true;
  bool inverses = true;
  bool associativity = true;
  std::optional<std::array<Elem, 3>> associativity_witness;
  std::string message;

  bool ok() const { return closure && identity && inverses && associativity; }
};

// Exhaustive check, including all order^3 associativity triples.
inline AxiomReport verify_group_axioms(const FiniteGroupTable& t) {
  AxiomReport r;
  const std::size_t n = t.order;
  if (n == 0 || t.product.size() != n * n || t.inverse.size() != n) {
    r.closure = false;
    r.message = "table shape is inconsistent";
    return r;
  }
  for (std::size_t k = 0; k < n * n; ++k)
    if (t.product[k] >= n) {
      r.closure = false;
      r.message = "entry (" + std::to_string(k / n) + ", " + std::to_string(k % n) +
                  ") is out of range";
      return r;
    }
  if (t.identity >= n) {
    r.identity = false;
    r.message = "no identity element";
    return r;
  }
  for (Elem x = 0; x < n; ++x)
    if (t.mul(t.identity, x) != x || t.mul(x, t.identity) != x) {
      r.identity = false;
      r.message = "element " + std::to_string(t.identity) + " is not a two-sided unit";
      return r;
    }
  for (Elem x = 0; x < n; ++x) {
    Elem y = t.inverse[x];
    if (y >= n || t.mul(x, y) != t.identity || t.mul(y, x) != t.identity) {
      r.inverses = false;
      r.message = "element " + std::to_string(x) + " has no correct inverse";
      return r;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = t.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (t.mul(ab, c) != t.mul(a, t.mul(b, c))) {
          r.associativity = false;
          r.associativity_witness = std::array<Elem, 3>{a, b, c};
          r.message = "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                      std::to_string(c) + " != " + std::to_string(a) + "*(" +
                      std::to_string(b) + "*" + std::to_string(c) + ")";
          return r;
        }
    }
  return r;
}

// C_n with element k standing for a^k.
inline FiniteGroupTable cyclic_table(std::size_t n) {
  if (n == 0 || n > kMaxTableOrder)
    fail(ErrorKind::InvalidArgument, "cyclic group order out of range");
  FiniteGroupTable t;
  t.order = n;
  t.product.resize(n * n);
  t.inverse.resize(n);
  t.labels.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      t.product[a * n + b] = Elem((a + b) % n);
    t.inverse[a] = Elem((n - a) % n);
    t.labels[a] = a == 0 ? "1" : a == 1 ? "a" : "a^" + std::to_string(a);
  }
  return t;
}

// Pairs (x, y) indexed x + |A| * y.
inline FiniteGroupTable direct_product(const FiniteGroupTable& A, const FiniteGroupTable& B) {
  const std::size_t na = A.order, nb = B.order, n = na * nb;
  if (n > kMaxTableOrder)
    fail(ErrorKind::TooLarge, "direct product too large");
  FiniteGroupTable t;
  t.order = n;
  t.product.resize(n * n);
  t.inverse.resize(n);
  t.labels.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    Elem x1 = Elem(u % na), y1 = Elem(u / na);
    for (std::size_t v = 0; v < n; ++v) {
      Elem x2 = Elem(v % na), y2 = Elem(v / na);
      t.product[u * n + v] = Elem(A.mul(x1, x2) + na * B.mul(y1, y2));
    }
    t.inverse[u] = Elem(A.inv(x1) + na * B.inv(y1));
    t.labels[u] = "(" + A.label(x1) + "," + B.label(y1) + ")";
  }
  t.identity = Elem(A.identity + na * B.identity);
  return t;
}

inline Int table_element_order(const FiniteGroupTable& t, Elem x) {
  Int k = 1;
  for (Elem y = x; y != t.identity; y = t.mul(y, x))
    if (++k > Int(t.order))
      fail(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " has no finite order");
  return k;
}

// Elements of <x> in the order x^0, x^1, ...
inline std::vector<Elem> cyclic_subgroup(const FiniteGroupTable& t, Elem x) {
  std::vector<Elem> out{t.identity};
  for (Elem y = x; y != t.identity; y = t.mul(y, x))
    out.push_back(y);
  return out;
}

// Least-index element of order |t|, if the group is cyclic.
inline std::optional<Elem> find_generator(const FiniteGroupTable& t) {
  for (Elem x = 0; x < t.order; ++x)
    if (table_element_order(t, x) == Int(t.order))
      return x;
  return std::nullopt;
}

inline bool is_abelian(const FiniteGroupTable& t) {
  for (Elem a = 0; a < t.order; ++a)
    for (Elem b = a + 1; b < t.order; ++b)
      if (t.mul(a, b) != t.mul(b, a))
        return false;
  return true;
}

inline Elem table_power(const FiniteGroupTable& t, Elem x, Int k) {
  if (k < 0) {
    x = t.inv(x);
    k = checked_neg(k);
  }
  Elem result = t.identity;
  while (k > 0) {
    if (k & 1)
      result = t.mul(result, x);
    x = t.mul(x, x);
    k >>= 1;
  }
  return result;
}

} // namespace crossed

#endif // CROSSED_GROUP_TABLE_HPP_
