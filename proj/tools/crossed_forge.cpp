// crossed-forge: command-line front end for the crossed library.
//
// Exit codes: 0 success, 1 negative verdict, 2 invalid input, 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crossed/crossed.hpp"

namespace {

using namespace crossed;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  std::string format = "human";
  std::optional<Int> budget;
  bool json() const { return format == "json"; }
};

// Plain-text table with left-aligned columns.
void print_table(const std::vector<std::string>& head,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c)
    width[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size())
        s += std::string(width[c] - r[c].size() + 2, ' ');
    }
    std::cout << s << '\n';
  };
  line(head);
  for (const auto& r : rows)
    line(r);
}

void print_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t w = 0;
  for (const auto& [k, v] : kv)
    w = std::max(w, k.size());
  for (const auto& [k, v] : kv)
    std::cout << k << std::string(w - k.size() + 2, ' ') << v << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedSpec load(const std::string& path) { return parse_spec(read_file(path)); }

// Any finite construct as a multiplication table.
FiniteGroupTable as_table(const ParsedSpec& spec) {
  if (auto* t = std::get_if<FiniteGroupTable>(&spec))
    return *t;
  if (auto* s = std::get_if<CrossedSystem>(&spec))
    return build_crossed_product(*s);
  if (auto* p = std::get_if<CocycleProfile>(&spec))
    return build_crossed_product(twisted_crossed_system(*p));
  GroupFamily fam = validate_family(std::get<GroupFamily>(spec));
  if (!is_finite(fam))
    fail(ErrorKind::InfiniteFamily, family_name(fam) + " is infinite");
  return to_table(fam);
}

json element_json(const FamilyElement& e) { return json::array({e.p, e.q}); }

json verdict_json(const CyclicityVerdict& v) {
  json out;
  out["cyclic"] = v.cyclic;
  out["witness"] = v.witness ? element_json(*v.witness) : json(nullptr);
  out["obstruction"] = v.obstruction ? json(std::string(to_string(*v.obstruction))) : json(nullptr);
  out["family"] = v.family;
  json params = json::object();
  for (const auto& [k, val] : v.parameters)
    params[k] = val;
  out["parameters"] = params;
  out["infinite"] = v.infinite;
  if (v.witness_order)
    out["witness_order"] = *v.witness_order;
  if (v.witness_pair)
    out["witness_pair"] = json::array({v.witness_pair->first, v.witness_pair->second});
  if (v.obstruction_gcd)
    out["obstruction_gcd"] = v.obstruction_gcd;
  if (v.obstruction_witness)
    out["obstruction_witness"] = element_json(*v.obstruction_witness);
  if (v.theta)
    out["theta"] = {{"h", v.theta->h_image},
                    {"g", v.theta->g_image},
                    {"d", v.theta->d},
                    {"kernel_generator", element_json(v.theta->kernel_generator)}};
  return out;
}

void print_verdict_human(const CyclicityVerdict& v) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("family", v.family);
  std::string params;
  for (const auto& [k, val] : v.parameters)
    params += (params.empty() ? "" : ", ") + k + "=" + std::to_string(val);
  kv.emplace_back("parameters", params.empty() ? "-" : params);
  kv.emplace_back("cyclic", v.cyclic ? "yes" : "no");
  if (v.witness)
    kv.emplace_back("witness", to_string(*v.witness));
  if (v.witness_order)
    kv.emplace_back("order", std::to_string(*v.witness_order));
  else if (v.cyclic && v.infinite)
    kv.emplace_back("order", "infinite");
  if (v.witness_pair)
    kv.emplace_back("witness pair", "(h=" + std::to_string(v.witness_pair->first) +
                                        ", g=" + std::to_string(v.witness_pair->second) + ")");
  if (v.obstruction)
    kv.emplace_back("obstruction", std::string(to_string(*v.obstruction)));
  if (v.obstruction_gcd)
    kv.emplace_back("gcd", std::to_string(v.obstruction_gcd));
  if (v.obstruction_witness)
    kv.emplace_back("obstruction witness", to_string(*v.obstruction_witness));
  if (v.theta)
    kv.emplace_back("theta", "h -> " + std::to_string(v.theta->h_image) + ", g -> " +
                                 std::to_string(v.theta->g_image) +
                                 ", kernel generated by " + to_string(v.theta->kernel_generator));
  print_pairs(kv);
}

CyclicityVerdict decide(const ParsedSpec& spec) {
  if (auto* s = std::get_if<CrossedSystem>(&spec))
    return decide_cyclic_main(*s);
  if (auto* p = std::get_if<CocycleProfile>(&spec))
    return decide_cyclic_main(make_twisted(*p));
  if (auto* f = std::get_if<GroupFamily>(&spec))
    return decide_cyclic_main(*f);
  // A bare table: only the brute-force answer is available.
  const auto& t = std::get<FiniteGroupTable>(spec);
  CyclicityVerdict v;
  v.family = "table";
  v.parameters = {{"order", Int(t.order)}};
  CyclicCheck c = brute_force_is_cyclic(t);
  v.cyclic = c.cyclic;
  if (c.generator) {
    v.witness = FamilyElement{Int(*c.generator), 0};
    v.witness_order = Int(t.order);
  }
  return v;
}

// ---- subcommands ----

int cmd_validate(const Options& opt, const std::string& file) {
  ParsedSpec spec = load(file);
  json out;
  std::string kind, detail;
  try {
    if (auto* s = std::get_if<CrossedSystem>(&spec)) {
      CrossedSystem v = validate_crossed_system(*s);
      kind = "crossed_system";
      detail = std::string(to_string(classify_special_case(v)));
    } else if (auto* f = std::get_if<GroupFamily>(&spec)) {
      validate_family(*f);
      kind = "family";
      detail = family_name(*f);
    } else if (auto* p = std::get_if<CocycleProfile>(&spec)) {
      profile_to_cocycle(*p);
      kind = "profile";
      detail = "S_m=" + std::to_string(partial_sums(*p).s_m());
    } else {
      AxiomReport r = verify_group_axioms(std::get<FiniteGroupTable>(spec));
      kind = "group";
      if (!r.ok())
        fail(ErrorKind::InvalidArgument, r.message);
      detail = "order " + std::to_string(std::get<FiniteGroupTable>(spec).order);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TooLarge)
      throw;
    if (opt.json()) {
      out = {{"valid", false}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
      out["witness"] = e.witness();
      std::cout << out.dump() << '\n';
    } else {
      print_pairs({{"valid", "no"}, {"reason", e.what()}});
    }
    return kNegative;
  }
  if (opt.json()) {
    out = {{"valid", true}, {"kind", kind}, {"detail", detail}, {"spec", format_spec(spec)}};
    std::cout << out.dump() << '\n';
  } else {
    print_pairs({{"valid", "yes"}, {"kind", kind}, {"detail", detail}});
  }
  return kOk;
}

int cmd_product(const Options& opt, const std::string& file, bool table, bool profile) {
  ParsedSpec spec = load(file);
  FiniteGroupTable t = as_table(spec);
  CyclicCheck c = brute_force_is_cyclic(t);
  if (opt.json()) {
    json out = {{"order", t.order}, {"abelian", is_abelian(t)}, {"cyclic", c.cyclic}};
    if (profile)
      out["order_profile"] = order_profile(t);
    if (table) {
      json rows = json::array();
      for (Elem a = 0; a < t.order; ++a) {
        json r = json::array();
        for (Elem b = 0; b < t.order; ++b)
          r.push_back(t.mul(a, b));
        rows.push_back(r);
      }
      out["table"] = rows;
      json labels = json::array();
      for (Elem a = 0; a < t.order; ++a)
        labels.push_back(t.label(a));
      out["labels"] = labels;
    }
    out["spec"] = format_spec(t);
    std::cout << out.dump() << '\n';
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> kv{
      {"order", std::to_string(t.order)},
      {"abelian", is_abelian(t) ? "yes" : "no"},
      {"cyclic", c.cyclic ? "yes" : "no"}};
  if (profile) {
    std::string s;
    for (Int o : order_profile(t))
      s += (s.empty() ? "" : " ") + std::to_string(o);
    kv.emplace_back("order profile", s);
  }
  print_pairs(kv);
  if (table) {
    std::vector<std::string> head{"*"};
    for (Elem b = 0; b < t.order; ++b)
      head.push_back(t.label(b));
    std::vector<std::vector<std::string>> rows;
    for (Elem a = 0; a < t.order; ++a) {
      std::vector<std::string> r{t.label(a)};
      for (Elem b = 0; b < t.order; ++b)
        r.push_back(t.label(t.mul(a, b)));
      rows.push_back(std::move(r));
    }
    std::cout << '\n';
    print_table(head, rows);
  }
  return kOk;
}

int cmd_enumerate(const Options& opt, Int m, Int n, bool cyclic_only) {
  Int budget = opt.budget.value_or(kDefaultProfileBudget);
  std::vector<std::vector<std::string>> rows;
  for_each_profile(m, n, budget, [&](const CocycleProfile& p) {
    Int s = partial_sums(p).s_m();
    Int d = gcd3(s, m, n);
    if (cyclic_only && d != 1)
      return;
    if (opt.json()) {
      json out = {{"m", m}, {"n", n},          {"phi", p.phi},
                  {"S_m", s}, {"gcd", d},      {"cyclic", d == 1},
                  {"spec", format_spec(p)}};
      std::cout << out.dump() << '\n';
    } else {
      rows.push_back({spec::list(p.phi), std::to_string(s), std::to_string(mod_floor(s, n)),
                      std::to_string(d), d == 1 ? "yes" : "no"});
    }
  });
  if (!opt.json())
    print_table({"phi", "S_m", "S_m mod n", "gcd(S_m,m,n)", "cyclic"}, rows);
  return kOk;
}

int cmd_classify(const Options& opt, const std::string& file, bool generator_only) {
  ParsedSpec spec = load(file);
  CyclicityVerdict v = decide(spec);
  if (generator_only && !v.cyclic) {
    std::cerr << "not cyclic";
    if (v.obstruction)
      std::cerr << " (" << to_string(*v.obstruction) << ")";
    std::cerr << '\n';
    if (opt.json())
      std::cout << verdict_json(v).dump() << '\n';
    return kNegative;
  }
  if (opt.json()) {
    json out = verdict_json(v);
    out["spec"] = format_spec(spec);
    std::cout << out.dump() << '\n';
  } else if (generator_only) {
    if (v.witness)
      std::cout << to_string(*v.witness) << '\n';
    if (v.witness_pair)
      std::cout << "pair (h=" << v.witness_pair->first << ", g=" << v.witness_pair->second
                << ")\n";
  } else {
    print_verdict_human(v);
  }
  return v.cyclic ? kOk : kNegative;
}

int cmd_iso(const Options& opt, const std::string& a, const std::string& b) {
  FiniteGroupTable t1 = as_table(load(a)), t2 = as_table(load(b));
  std::optional<std::vector<Elem>> map = tables_isomorphic(t1, t2);
  if (opt.json()) {
    json out = {{"isomorphic", map.has_value()}};
    out["map"] = map ? json(*map) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    print_pairs({{"isomorphic", map ? "yes" : "no"}});
    if (map) {
      std::vector<std::vector<std::string>> rows;
      for (Elem x = 0; x < t1.order; ++x)
        rows.push_back({t1.label(x), t2.label((*map)[x])});
      std::cout << '\n';
      print_table({"first", "second"}, rows);
    }
  }
  return map ? kOk : kNegative;
}

std::vector<Elem> parse_indices(const std::string& text, const std::string& what) {
  std::vector<Elem> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size() || v < 0 || v > Int(kMaxTableOrder))
      fail(ErrorKind::ParseError, "bad index '" + item + "' in " + what);
    out.push_back(Elem(v));
  }
  if (out.empty())
    fail(ErrorKind::ParseError, what + " is empty");
  return out;
}

int cmd_extract(const Options& opt, const std::string& file, const std::string& normal,
                const std::string& transversal) {
  FiniteGroupTable E = as_table(load(file));
  std::vector<Elem> hs = parse_indices(normal, "--normal");
  std::vector<Elem> ts;
  if (!transversal.empty())
    ts = parse_indices(transversal, "--transversal");
  Extraction x = extract_crossed_system(E, hs, ts);
  std::string text = format_spec(x.system);
  if (opt.json()) {
    json out = {{"special_case", std::string(to_string(classify_special_case(x.system)))},
                {"h_elements", x.h_elements},
                {"transversal", x.transversal},
                {"spec", text}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "# special case: " << to_string(classify_special_case(x.system)) << '\n';
    std::cout << "# H elements: " << spec::list({x.h_elements.begin(), x.h_elements.end()})
              << '\n';
    std::cout << "# transversal: " << spec::list({x.transversal.begin(), x.transversal.end()})
              << '\n';
    std::cout << text;
  }
  return kOk;
}

// Streams one line per check; exits 1 on the first disagreement count > 0.
int cmd_sweep(const Options& opt, Int max_order) {
  if (max_order < 1)
    fail(ErrorKind::InvalidArgument, "--max-order must be positive");
  const Int system_budget = opt.budget.value_or(kDefaultSystemBudget);
  Int checks = 0, disagreements = 0, skipped = 0;
  auto emit = [&](const std::string& kind, const std::string& what, bool predicted, bool oracle) {
    ++checks;
    bool agree = predicted == oracle;
    if (!agree)
      ++disagreements;
    if (opt.json()) {
      std::cout << json{{"kind", kind}, {"input", what}, {"predicted", predicted},
                        {"oracle", oracle}, {"agree", agree}}
                       .dump()
                << '\n';
    } else {
      std::cout << (agree ? "ok    " : "FAIL  ") << kind << "  " << what
                << "  cyclic=" << (predicted ? "yes" : "no") << '\n';
    }
  };

  for (Int n = 2; n <= max_order; ++n)
    for (Int m = 2; n * m <= max_order; ++m)
      for_each_profile(m, n, std::numeric_limits<Int>::max(), [&](const CocycleProfile& p) {
        GroupFamily fam = make_twisted(p);
        emit("twisted", format_family_expr(fam), decide_cyclic_main(fam).cyclic,
             brute_force_is_cyclic(to_table(fam)).cyclic);
      });

  for (Int n = 1; n <= max_order; ++n)
    for (Int m = 1; n * m <= max_order; ++m)
      for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j) {
          GroupFamily fam = Holder{n, m, i, j};
          try {
            validate_family(fam);
          } catch (const Error&) {
            continue;
          }
          if (n < 2 || m < 2)
            continue;
          emit("holder", format_family_expr(fam), decide_cyclic_main(fam).cyclic,
               brute_force_is_cyclic(to_table(fam)).cyclic);
        }

  for (Int n = 2; n <= max_order; ++n)
    for (Int m = 2; n * m <= max_order; ++m) {
      FiniteGroupTable H = cyclic_table(std::size_t(n)), G = cyclic_table(std::size_t(m));
      std::vector<CrossedSystem> systems;
      try {
        systems = enumerate_crossed_systems(H, G, system_budget);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge)
          throw;
        ++skipped;
        if (opt.json())
          std::cout << json{{"kind", "crossed_system"},
                            {"input", "C" + std::to_string(n) + " by C" + std::to_string(m)},
                            {"skipped", e.what()}}
                           .dump()
                    << '\n';
        else
          std::cout << "skip  crossed_system  C" << n << " by C" << m << "  " << e.what()
                    << '\n';
        continue;
      }
      Int k = 0;
      for (const CrossedSystem& s : systems)
        emit("crossed_system",
             "C" + std::to_string(n) + " by C" + std::to_string(m) + " #" + std::to_string(k++),
             decide_cyclic_main(s).cyclic, brute_force_is_cyclic(build_crossed_product(s)).cyclic);
    }

  if (opt.json())
    std::cout << json{{"summary", true}, {"checks", checks}, {"disagreements", disagreements},
                      {"skipped", skipped}}
                     .dump()
              << '\n';
  else
    std::cout << checks << " checks, " << disagreements << " disagreements, " << skipped
              << " skipped\n";
  return disagreements ? kNegative : kOk;
}

int report(const Options& opt, const Error& e) {
  int code = e.kind() == ErrorKind::TooLarge ? kBudget : kInvalid;
  std::cerr << "error: " << e.what() << '\n';
  if (opt.json())
    std::cout << json{{"error", std::string(to_string(e.kind()))},
                      {"message", e.what()},
                      {"witness", e.witness()}}
                     .dump()
              << '\n';
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed products of groups: validation, construction and cyclicity."};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--budget", opt.budget, "Enumeration budget")
      ->envname("CROSSED_FORGE_BUDGET")
      ->check(CLI::PositiveNumber);

  std::string file, file_b, normal, transversal;
  bool table = false, order_profile_flag = false, cyclic_only = false;
  Int m = 0, n = 0, max_order = 0;

  auto* validate = app.add_subcommand("validate", "Validate a crossed system, family, profile or table");
  validate->add_option("file", file)->required();

  auto* product = app.add_subcommand("product", "Build the multiplication table of a finite construct");
  product->add_option("file", file)->required();
  product->add_flag("--table", table, "Print the full table");
  product->add_flag("--order-profile", order_profile_flag, "Print the sorted element orders");

  auto* cocycles = app.add_subcommand("cocycles", "Symmetric normalized cocycles C_m x C_m -> C_n");
  cocycles->require_subcommand(1);
  auto* enumerate = cocycles->add_subcommand("enumerate", "List all profiles");
  enumerate->add_option("--m", m)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--cyclic-only", cyclic_only, "Keep profiles with a cyclic product");

  auto* classify = app.add_subcommand("classify", "Decide whether the product is cyclic");
  classify->add_option("file", file)->required();

  auto* generator = app.add_subcommand("generator", "Print a generator of a cyclic product");
  generator->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Test two finite groups for isomorphism");
  iso->add_option("first", file)->required();
  iso->add_option("second", file_b)->required();

  auto* extract = app.add_subcommand("extract", "Extract a crossed system from an extension");
  extract->add_option("--group", file)->required();
  extract->add_option("--normal", normal, "Comma-separated element indices")->required();
  extract->add_option("--transversal", transversal, "One representative per coset");

  auto* oracle = app.add_subcommand("oracle", "Brute-force consistency checks");
  oracle->require_subcommand(1);
  auto* sweep = oracle->add_subcommand("sweep", "Compare every decision with the oracle");
  sweep->add_option("--max-order", max_order)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate)
      return cmd_validate(opt, file);
    if (*product)
      return cmd_product(opt, file, table, order_profile_flag);
    if (*enumerate)
      return cmd_enumerate(opt, m, n, cyclic_only);
    if (*classify)
      return cmd_classify(opt, file, false);
    if (*generator)
      return cmd_classify(opt, file, true);
    if (*iso)
      return cmd_iso(opt, file, file_b);
    if (*extract)
      return cmd_extract(opt, file, normal, transversal);
    if (*sweep)
      return cmd_sweep(opt, max_order);
  } catch (const Error& e) {
    return report(opt, e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
