// Line-oriented `key = value` input files, one construct per file.
//
//   # a presentation family
//   family = holder(n=4, m=2, i=2, j=3)
//   family = twisted(n=inf, m=3, phi=[0,1,1])
//   family = klein_bottle
//
//   # a cocycle profile
//   m = 3
//   n = inf
//   phi = [0, 1, 1]
//
//   # a finite group
//   group = cyclic(4)            # also direct(A, B), table([[...], ...]),
//                                # or any finite family expression
//
//   # a crossed system; alpha and f default to trivial
//   H = cyclic(2)
//   G = cyclic(2)
//   alpha = [[0, 1], [0, 1]]     # alpha[g][h] = index of g > h
//   f = [[0, 0], [0, 1]]         # f[g1][g2] = index in H
//
// format_spec() writes the same syntax back, and parse_spec(format_spec(x))
// == x for every value it can print.

#ifndef CROSSED_SPEC_FORMAT_HPP_
#define CROSSED_SPEC_FORMAT_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cocycle.hpp"
#include "crossed_system.hpp"
#include "families.hpp"
#include "group_table.hpp"

namespace crossed {

using ParsedSpec = std::variant<CrossedSystem, GroupFamily, CocycleProfile, FiniteGroupTable>;

namespace spec {

struct Node {
  enum class Kind { Integer, Inf, Name, Call, List };
  Kind kind = Kind::Integer;
  Int integer = 0;
  std::string name;
  std::vector<std::pair<std::string, Node>> args;  // name is empty for positional
  std::vector<Node> items;
  int line = 0;
  int column = 0;
};

[[noreturn]] inline void parse_error(int line, int column, const std::string& msg) {
  fail(ErrorKind::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg,
       {line, column});
}

[[noreturn]] inline void semantic_error(const Node& at, const std::string& msg) {
  fail(ErrorKind::SemanticError,
       "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + msg,
       {at.line, at.column});
}

class ValueParser {
public:
  ValueParser(std::string_view text, int line, int column_offset)
    : text_(text), line_(line), offset_(column_offset) {}

  Node parse_all() {
    Node n = value();
    skip_ws();
    if (pos_ != text_.size())
      error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;

  int column() const { return offset_ + int(pos_) + 1; }
  [[noreturn]] void error(const std::string& msg) const { parse_error(line_, column(), msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c))
      error(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Node value() {
    skip_ws();
    Node n;
    n.line = line_;
    n.column = column();
    if (pos_ >= text_.size())
      error("expected a value");
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      n.kind = Node::Kind::List;
      if (!peek(']')) {
        n.items.push_back(value());
        while (peek(',')) {
          ++pos_;
          n.items.push_back(value());
        }
      }
      expect(']');
      return n;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c == '-' || c == '+')
        ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        error("expected digits");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      try {
        n.integer = std::stoll(digits);
      } catch (const std::exception&) {
        error("integer out of range");
      }
      n.kind = Node::Kind::Integer;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      n.name = identifier();
      if (n.name == "inf") {
        n.kind = Node::Kind::Inf;
        return n;
      }
      n.kind = Node::Kind::Name;
      if (peek('(')) {
        ++pos_;
        n.kind = Node::Kind::Call;
        if (!peek(')')) {
          do {
            if (!n.args.empty())
              ++pos_;  // the comma
            n.args.push_back(argument());
          } while (peek(','));
        }
        expect(')');
      }
      return n;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::pair<std::string, Node> argument() {
    skip_ws();
    std::size_t save = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::string key = identifier();
      if (peek('=')) {
        ++pos_;
        return {key, value()};
      }
      pos_ = save;
    }
    return {"", value()};
  }
};

struct Entry {
  std::string key;
  Node value;
  int line = 0;
};

inline std::vector<Entry> parse_entries(std::string_view text) {
  std::vector<Entry> out;
  std::map<std::string, int> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size())
        break;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      parse_error(line_no, int(first) + 1, "expected 'key = value'");
    std::string_view key = line.substr(first, eq - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.remove_suffix(1);
    if (key.empty())
      parse_error(line_no, int(first) + 1, "missing key");
    for (char c : key)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        parse_error(line_no, int(first) + 1, "bad key '" + std::string(key) + "'");
    if (seen.count(std::string(key)))
      parse_error(line_no, int(first) + 1, "duplicate key '" + std::string(key) + "'");
    seen[std::string(key)] = line_no;
    ValueParser vp(line.substr(eq + 1), line_no, int(eq) + 1);
    out.push_back({std::string(key), vp.parse_all(), line_no});
    if (end == text.size())
      break;
  }
  return out;
}

inline Int as_int(const Node& n) {
  if (n.kind != Node::Kind::Integer)
    semantic_error(n, "expected an integer");
  return n.integer;
}

inline std::optional<Int> as_int_or_inf(const Node& n) {
  if (n.kind == Node::Kind::Inf)
    return std::nullopt;
  return as_int(n);
}

inline std::vector<Int> as_int_list(const Node& n) {
  if (n.kind != Node::Kind::List)
    semantic_error(n, "expected a list");
  std::vector<Int> out;
  for (const Node& x : n.items)
    out.push_back(as_int(x));
  return out;
}

inline std::vector<std::vector<Elem>> as_matrix(const Node& n) {
  if (n.kind != Node::Kind::List)
    semantic_error(n, "expected a list of lists");
  std::vector<std::vector<Elem>> rows;
  for (const Node& r : n.items) {
    std::vector<Elem> row;
    for (Int v : as_int_list(r)) {
      if (v < 0 || v > Int(UINT32_MAX))
        semantic_error(r, "entry out of range");
      row.push_back(Elem(v));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Keyword arguments of a call, with positional ones named in order.
inline std::map<std::string, const Node*> call_args(const Node& call,
                                                    const std::vector<std::string>& names) {
  std::map<std::string, const Node*> out;
  std::size_t positional = 0;
  for (const auto& [key, value] : call.args) {
    std::string k = key;
    if (k.empty()) {
      if (positional >= names.size())
        semantic_error(value, "too many arguments to " + call.name);
      k = names[positional++];
    }
    if (std::find(names.begin(), names.end(), k) == names.end())
      semantic_error(value, "unknown argument '" + k + "' to " + call.name);
    if (out.count(k))
      semantic_error(value, "argument '" + k + "' given twice");
    out[k] = &value;
  }
  for (const std::string& k : names)
    if (!out.count(k))
      semantic_error(call, call.name + " needs argument '" + k + "'");
  return out;
}

template <class F>
auto rethrow_semantic(const Node& at, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError)
      throw;
    semantic_error(at, e.what());
  }
}

inline std::optional<GroupFamily> family_from(const Node& n) {
  if (n.kind == Node::Kind::Name) {
    if (n.name == "zxz")
      return GroupFamily{ZxZ{}};
    if (n.name == "klein_bottle")
      return GroupFamily{KleinBottle{}};
    return std::nullopt;
  }
  if (n.kind != Node::Kind::Call)
    return std::nullopt;
  if (n.name == "holder") {
    auto a = call_args(n, {"n", "m", "i", "j"});
    return GroupFamily{Holder{as_int(*a["n"]), as_int(*a["m"]), as_int(*a["i"]), as_int(*a["j"])}};
  }
  if (n.name == "fin_by_inf") {
    auto a = call_args(n, {"n", "t"});
    return GroupFamily{FinByInf{as_int(*a["n"]), as_int(*a["t"])}};
  }
  if (n.name == "inf_by_fin_abelian") {
    auto a = call_args(n, {"n", "t"});
    return GroupFamily{InfByFinAbelian{as_int(*a["n"]), as_int(*a["t"])}};
  }
  if (n.name == "inf_by_fin_flip") {
    auto a = call_args(n, {"n"});
    return GroupFamily{InfByFinFlip{as_int(*a["n"])}};
  }
  if (n.name == "twisted") {
    auto a = call_args(n, {"n", "m", "phi"});
    std::optional<Int> target = as_int_or_inf(*a["n"]);
    Int m = as_int(*a["m"]);
    std::vector<Int> phi = as_int_list(*a["phi"]);
    return rethrow_semantic(n, [&] { return make_twisted(make_profile(m, target, phi)); });
  }
  if (n.name == "zxz" || n.name == "klein_bottle") {
    call_args(n, {});
    return family_from(Node{Node::Kind::Name, 0, n.name, {}, {}, n.line, n.column});
  }
  return std::nullopt;
}

inline FiniteGroupTable group_from(const Node& n) {
  if (n.kind == Node::Kind::Call && n.name == "cyclic") {
    auto a = call_args(n, {"n"});
    Int order = as_int(*a["n"]);
    if (order < 1 || order > Int(kMaxTableOrder))
      semantic_error(n, "cyclic group order out of range");
    return cyclic_table(std::size_t(order));
  }
  if (n.kind == Node::Kind::Call && n.name == "direct") {
    auto a = call_args(n, {"a", "b"});
    FiniteGroupTable x = group_from(*a["a"]), y = group_from(*a["b"]);
    return rethrow_semantic(n, [&] { return direct_product(x, y); });
  }
  if (n.kind == Node::Kind::Call && n.name == "table") {
    auto a = call_args(n, {"rows"});
    auto rows = as_matrix(*a["rows"]);
    return rethrow_semantic(n, [&] { return table_from_rows(rows); });
  }
  if (auto fam = family_from(n)) {
    return rethrow_semantic(n, [&] {
      GroupFamily v = validate_family(*fam);
      if (!is_finite(v))
        fail(ErrorKind::InfiniteFamily, family_name(v) + " is infinite");
      return to_table(v);
    });
  }
  semantic_error(n, "expected a group expression");
}

} // namespace spec

inline ParsedSpec parse_spec(std::string_view text) {
  using namespace spec;
  std::vector<Entry> entries = parse_entries(text);
  if (entries.empty())
    fail(ErrorKind::SemanticError, "empty input");
  std::map<std::string, const Entry*> by_key;
  for (const Entry& e : entries)
    by_key[e.key] = &e;
  auto only = [&](std::initializer_list<const char*> allowed) {
    for (const Entry& e : entries) {
      bool ok = false;
      for (const char* k : allowed)
        ok = ok || e.key == k;
      if (!ok)
        semantic_error(e.value, "key '" + e.key + "' does not belong in this file");
    }
  };

  if (by_key.count("family")) {
    only({"family"});
    const Node& n = by_key["family"]->value;
    std::optional<GroupFamily> fam = family_from(n);
    if (!fam)
      semantic_error(n, "unknown family");
    return *fam;
  }
  if (by_key.count("group")) {
    only({"group"});
    return group_from(by_key["group"]->value);
  }
  if (by_key.count("phi") || by_key.count("m")) {
    only({"m", "n", "phi"});
    if (by_key.count("phi")) {
      const Node& phi = by_key["phi"]->value;
      if (phi.kind == Node::Kind::List && !phi.items.empty() &&
          phi.items[0].kind == Node::Kind::Integer && phi.items[0].integer != 0)
        semantic_error(phi.items[0], "phi(0) must be 0");
    }
    for (const char* k : {"m", "n", "phi"})
      if (!by_key.count(k))
        fail(ErrorKind::SemanticError, std::string("profile needs key '") + k + "'");
    const Node& phi = by_key["phi"]->value;
    Int m = as_int(by_key["m"]->value);
    std::optional<Int> n = as_int_or_inf(by_key["n"]->value);
    std::vector<Int> values = as_int_list(phi);
    return rethrow_semantic(phi, [&] { return make_profile(m, n, values); });
  }
  if (by_key.count("H") || by_key.count("G")) {
    only({"H", "G", "alpha", "f"});
    if (!by_key.count("H") || !by_key.count("G"))
      fail(ErrorKind::SemanticError, "a crossed system needs both H and G");
    CrossedSystem s = trivial_crossed_system(group_from(by_key["H"]->value),
                                             group_from(by_key["G"]->value));
    if (by_key.count("alpha")) {
      const Node& n = by_key["alpha"]->value;
      s.alpha = as_matrix(n);
      if (s.alpha.size() != s.G.order)
        semantic_error(n, "alpha needs " + std::to_string(s.G.order) + " rows");
      for (const auto& row : s.alpha)
        if (row.size() != s.H.order)
          semantic_error(n, "each alpha row needs " + std::to_string(s.H.order) + " entries");
    }
    if (by_key.count("f")) {
      const Node& n = by_key["f"]->value;
      auto rows = as_matrix(n);
      if (rows.size() != s.G.order)
        semantic_error(n, "f needs " + std::to_string(s.G.order) + " rows");
      s.f.clear();
      for (const auto& row : rows) {
        if (row.size() != s.G.order)
          semantic_error(n, "each f row needs " + std::to_string(s.G.order) + " entries");
        s.f.insert(s.f.end(), row.begin(), row.end());
      }
    }
    return s;
  }
  semantic_error(entries.front().value, "cannot tell what this file describes");
}

namespace spec {

inline std::string list(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

template <class T>
std::string matrix(const std::vector<std::vector<T>>& rows) {
  std::string s = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      s += (k ? ", " : "") + std::to_string(rows[r][k]);
    s += "]";
  }
  return s + "]";
}

inline std::string target(const std::optional<Int>& n) {
  return n ? std::to_string(*n) : "inf";
}

} // namespace spec

inline std::string format_group_expr(const FiniteGroupTable& t) {
  std::vector<std::vector<Elem>> rows(t.order);
  for (std::size_t r = 0; r < t.order; ++r)
    rows[r].assign(t.product.begin() + long(r * t.order),
                   t.product.begin() + long((r + 1) * t.order));
  return "table(" + spec::matrix(rows) + ")";
}

inline std::string format_family_expr(const GroupFamily& fam) {
  auto s = [](Int v) { return std::to_string(v); };
  return std::visit(
      [&](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Holder>)
          return "holder(n=" + s(f.n) + ", m=" + s(f.m) + ", i=" + s(f.i) + ", j=" + s(f.j) + ")";
        else if constexpr (std::is_same_v<T, FinByInf>)
          return "fin_by_inf(n=" + s(f.n) + ", t=" + s(f.t) + ")";
        else if constexpr (std::is_same_v<T, InfByFinAbelian>)
          return "inf_by_fin_abelian(n=" + s(f.n) + ", t=" + s(f.t) + ")";
        else if constexpr (std::is_same_v<T, InfByFinFlip>)
          return "inf_by_fin_flip(n=" + s(f.n) + ")";
        else if constexpr (std::is_same_v<T, ZxZ>)
          return "zxz";
        else if constexpr (std::is_same_v<T, KleinBottle>)
          return "klein_bottle";
        else
          return "twisted(n=" + spec::target(f.profile.n) + ", m=" + s(f.profile.m) +
                 ", phi=" + spec::list(f.profile.phi) + ")";
      },
      fam);
}

inline std::string format_spec(const ParsedSpec& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupFamily>) {
          return "family = " + format_family_expr(v) + "\n";
        } else if constexpr (std::is_same_v<T, CocycleProfile>) {
          return "m = " + std::to_string(v.m) + "\nn = " + spec::target(v.n) +
                 "\nphi = " + spec::list(v.phi) + "\n";
        } else if constexpr (std::is_same_v<T, FiniteGroupTable>) {
          return "group = " + format_group_expr(v) + "\n";
        } else {
          std::vector<std::vector<Elem>> f(v.G.order);
          for (std::size_t r = 0; r < v.G.order; ++r)
            f[r].assign(v.f.begin() + long(r * v.G.order), v.f.begin() + long((r + 1) * v.G.order));
          return "H = " + format_group_expr(v.H) + "\nG = " + format_group_expr(v.G) +
                 "\nalpha = " + spec::matrix(v.alpha) + "\nf = " + spec::matrix(f) + "\n";
        }
      },
      value);
}

} // namespace crossed

#endif // CROSSED_SPEC_FORMAT_HPP_
