// Command-line front end: group info, Burnside ring data, height-1
// cardinalities and poset Moebius tables.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ambicard/burnside.hpp"
#include "ambicard/cache.hpp"
#include "ambicard/cardinality.hpp"
#include "ambicard/io.hpp"

using namespace ambicard;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_invariant = 4;

struct GlobalOptions {
  bool json = false;
  std::string cache_dir = ".ambicard-cache";
  bool no_cache = false;
  bool check = false;
  std::size_t max_order = 2000;
};

struct GroupOptions {
  std::string family;
  unsigned n = 0;
  std::string file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "Named family: S, A, C, D or GL2");
    cmd->add_option("--n", n, "Family parameter");
    cmd->add_option("--group", file, "Group spec JSON file");
  }

  Json spec() const {
    if (!file.empty()) return read_json_file(file);
    if (family.empty()) throw InputError("give either --family/--n or --group FILE");
    return Json{{"family", family}, {"n", n}};
  }
};

/// Everything derived from a group spec, with the lattice served from the cache.
struct Loaded {
  Json spec;
  GroupPtr group;
  BurnsideRing::Ptr ring;
};

Loaded load_group(const GroupOptions& options, const GlobalOptions& global) {
  Loaded loaded;
  loaded.spec = options.spec();
  loaded.group = std::make_shared<PermGroup>(group_from_json(loaded.spec, global.max_order));
  LatticeCache cache(global.cache_dir, !global.no_cache);
  LatticeLimits limits;
  limits.max_group_order = global.max_order;
  loaded.ring = BurnsideRing::create(cache.lattice(loaded.group, limits));
  return loaded;
}

std::string class_label(std::size_t c) { return "(" + std::to_string(c) + ")"; }

std::string format_element(const BurnsideElement& x) {
  std::string out;
  for (std::size_t k = x.ring().rank(); k-- > 0;) {
    const Rational& v = x.coeff(k);
    if (v == 0) continue;
    const bool negative = v < 0;
    const Rational magnitude = negative ? Rational(-v) : v;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "[G/" + class_label(k) + "]";
  }
  return out.empty() ? "0" : out;
}

std::string format_vector(const Vector<Rational>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v(i));
  return out + ")";
}

Json vector_json(const Vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

void fail_check(const std::string& what) { throw InvariantError("check failed: " + what); }

// ---------------------------------------------------------------- commands

int group_info(const GroupOptions& options, std::optional<std::uint64_t> prime, bool show_marks,
               const GlobalOptions& global) {
  Loaded g = load_group(options, global);
  const auto& L = g.ring->lattice();
  if (prime && !is_prime(*prime)) throw InputError(std::to_string(*prime) + " is not prime");

  if (global.json) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < L.classes().size(); ++c) {
      const auto& cls = L.subgroup_class(c);
      Json row{{"index", c},
               {"order", cls.order},
               {"class_size", cls.class_size},
               {"normalizer_order", cls.normalizer_order},
               {"weyl_order", cls.weyl_order},
               {"solvable_residual_class", L.solvable_residual_class(c)}};
      if (prime) row["p_residual_class"] = L.p_residual_class(c, *prime);
      classes.push_back(row);
    }
    Json out{{"order", g.group->order()}, {"degree", g.group->degree()}, {"subgroups", L.subgroups().size()},
             {"classes", classes}};
    if (prime) out["prime"] = *prime;
    if (show_marks) {
      Json rows = Json::array();
      for (std::size_t h = 0; h < g.ring->rank(); ++h) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.ring->rank(); ++k) row.push_back(rational_to_json_num(g.ring->table()(h, k)));
        rows.push_back(row);
      }
      out["marks"] = rows;
    }
    std::cout << out.dump(2) << "\n";
    return exit_ok;
  }

  std::cout << "order " << g.group->order() << ", degree " << g.group->degree() << ", " << L.subgroups().size()
            << " subgroups in " << L.classes().size() << " classes\n";
  std::cout << "class\torder\tsize\t|NH|\t|WH|";
  if (prime) std::cout << "\tO^" << *prime;
  std::cout << "\tH_S\n";
  for (std::size_t c = 0; c < L.classes().size(); ++c) {
    const auto& cls = L.subgroup_class(c);
    std::cout << class_label(c) << "\t" << cls.order << "\t" << cls.class_size << "\t" << cls.normalizer_order << "\t"
              << cls.weyl_order;
    if (prime) std::cout << "\t" << class_label(L.p_residual_class(c, *prime));
    std::cout << "\t" << class_label(L.solvable_residual_class(c)) << "\n";
  }
  if (show_marks) {
    std::cout << "table of marks:\n";
    for (std::size_t h = 0; h < g.ring->rank(); ++h) {
      for (std::size_t k = 0; k < g.ring->rank(); ++k) std::cout << (k ? "\t" : "") << g.ring->table()(h, k);
      std::cout << "\n";
    }
  }
  return exit_ok;
}

int burnside_idempotents(const GroupOptions& options, std::optional<std::uint64_t> prime, bool rational,
                         const GlobalOptions& global) {
  if (prime.has_value() == rational) throw InputError("give exactly one of --prime P or --rational");
  Loaded g = load_group(options, global);
  auto idempotents = rational ? rational_idempotents(g.ring) : p_local_idempotents(g.ring, *prime);

  bool idempotent = true, orthogonal = true, integral = true;
  BurnsideElement total = BurnsideElement::zero(g.ring);
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    const auto& e = idempotents[i].element;
    idempotent = idempotent && e * e == e;
    integral = integral && (rational || e.is_p_integral(*prime));
    for (std::size_t j = i + 1; j < idempotents.size(); ++j)
      orthogonal = orthogonal && (e * idempotents[j].element).is_zero();
    total += e;
  }
  const bool sums_to_one = total == BurnsideElement::one(g.ring);

  if (global.json) {
    Json list = Json::array();
    for (const auto& [c, e] : idempotents)
      list.push_back({{"class_index", c},
                      {"class_order", g.ring->lattice().subgroup_class(c).order},
                      {"element", burnside_element_to_json(e, g.spec)},
                      {"marks", vector_json(marks(e).values)}});
    Json out{{"mode", rational ? "rational" : "p-local"}, {"idempotents", list},
             {"verified", {{"idempotent", idempotent}, {"orthogonal", orthogonal}, {"sum_to_one", sums_to_one}}}};
    if (prime) {
      out["prime"] = *prime;
      out["verified"]["p_integral"] = integral;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << idempotents.size() << (rational ? " rational" : " " + std::to_string(*prime) + "-local")
              << " primitive idempotents\n";
    for (const auto& [c, e] : idempotents) {
      std::cout << "e" << class_label(c) << " = " << format_element(e) << "\n";
      std::cout << "  marks " << format_vector(marks(e).values) << "\n";
    }
    std::cout << "idempotent: " << (idempotent ? "ok" : "FAIL") << "\n";
    std::cout << "orthogonal: " << (orthogonal ? "ok" : "FAIL") << "\n";
    std::cout << "sum to one: " << (sums_to_one ? "ok" : "FAIL") << "\n";
    if (prime) std::cout << "p-integral: " << (integral ? "ok" : "FAIL") << "\n";
  }
  if (!(idempotent && orthogonal && sums_to_one && integral)) fail_check("idempotent identities");
  return exit_ok;
}

int burnside_marks(const GroupOptions& options, const std::string& element_file, const GlobalOptions& global) {
  Loaded g = load_group(options, global);
  if (!element_file.empty()) {
    BurnsideElement x = burnside_element_from_json(read_json_file(element_file), g.ring);
    MarksVector m = marks(x);
    if (global.check && !(from_marks(m) == x)) fail_check("from_marks(marks(x)) = x");
    if (global.json) {
      std::cout << Json{{"element", burnside_element_to_json(x, g.spec)}, {"marks", vector_json(m.values)},
                        {"integral", x.is_integral()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << format_element(x) << "\n" << "marks " << format_vector(m.values) << "\n";
    }
    return exit_ok;
  }
  const auto& T = g.ring->table();
  if (global.json) {
    Json rows = Json::array();
    for (std::size_t h = 0; h < T.size(); ++h) {
      Json row = Json::array();
      for (std::size_t k = 0; k < T.size(); ++k) row.push_back(rational_to_json_num(T(h, k)));
      rows.push_back(row);
    }
    std::cout << Json{{"marks", rows}}.dump(2) << "\n";
  } else {
    for (std::size_t h = 0; h < T.size(); ++h) {
      for (std::size_t k = 0; k < T.size(); ++k) std::cout << (k ? "\t" : "") << T(h, k);
      std::cout << "\n";
    }
  }
  return exit_ok;
}

void print_card(const CardExpr& e, const Json& checks, const GlobalOptions& global) {
  if (global.json) {
    Json out = card_expr_to_json(e);
    if (!checks.empty()) out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << e.to_string() << "\n";
  for (const auto& [name, result] : checks.items()) std::cout << "check " << name << ": " << result.get<std::string>() << "\n";
}

int card_bg_command(const GroupOptions& options, std::uint64_t p, const GlobalOptions& global) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  Loaded g = load_group(options, global);
  const BurnsideElement weights = bg_weights(g.ring, p);
  const CardExpr result = integrate_over_bp(weights, p);

  Json checks = Json::object();
  if (global.check) {
    bool failed = false;
    auto record = [&](const std::string& name, bool ok) {
      checks[name] = ok ? "pass" : "FAIL";
      failed = failed || !ok;
    };
    try {
      record("route-equivalence", sylow_inclusion_exclusion(g.ring, p) == weights);
    } catch (const ResourceError&) {
      checks["route-equivalence"] = "skipped (Sylow count above cap)";
    }
    record("height-0", evaluate(result, Rational(1, p)) == Rational(1, static_cast<long long>(g.group->order())));
    bool integral = weights.is_p_integral(p);
    for (const auto& [e, c] : result.terms()) integral = integral && is_p_integral(c, p);
    record("p-integral", integral);
    print_card(result, checks, global);
    if (failed) fail_check("card bg self-checks");
    return exit_ok;
  }
  print_card(result, checks, global);
  return exit_ok;
}

int card_space_command(const std::string& file, std::uint64_t p, const GlobalOptions& global) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  SpaceSpec space = space_from_json(read_json_file(file), global.max_order);
  LatticeCache cache(global.cache_dir, !global.no_cache);
  LatticeLimits limits;
  limits.max_group_order = global.max_order;
  auto ring = BurnsideRing::create(cache.lattice(space.group_ptr(), limits));
  const CardExpr result = card_space(space, ring, p);
  Json checks = Json::object();
  bool failed = false;
  if (global.check) {
    bool ok = evaluate(result, Rational(1, p)) == homotopy_cardinality(space);
    checks["height-0"] = ok ? "pass" : "FAIL";
    failed = !ok;
  }
  print_card(result, checks, global);
  if (failed) fail_check("card space height-0 consistency");
  return exit_ok;
}

int poset_mobius_command(const std::string& file, const GlobalOptions& global) {
  auto poset = std::make_shared<const FinitePoset>(poset_from_json(read_json_file(file)));
  if (poset->empty()) throw InputError("poset has no elements");
  IncidenceFunction mu = mobius(poset);
  if (global.check && !(convolve(mu, zeta(poset)) == delta(poset))) fail_check("mu * zeta = delta");
  if (global.json) {
    Json pairs = Json::array();
    for (FinitePoset::Index x = 0; x < poset->size(); ++x)
      for (auto y : poset->above(x)) pairs.push_back({{"x", poset->id(x)}, {"y", poset->id(y)}, {"mu", to_string(mu(x, y))}});
    std::cout << Json{{"mobius", pairs}}.dump(2) << "\n";
  } else {
    for (FinitePoset::Index x = 0; x < poset->size(); ++x)
      for (auto y : poset->above(x))
        std::cout << "mu(" << poset->id(x) << ", " << poset->id(y) << ") = " << to_string(mu(x, y)) << "\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnside rings and height-1 cardinalities of finite groups and pi-finite spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json, "Machine-readable output");
  app.add_option("--cache-dir", global.cache_dir, "Subgroup-lattice cache directory");
  app.add_flag("--no-cache", global.no_cache, "Neither read nor write the lattice cache");
  app.add_flag("--check", global.check, "Run cross-validation checks");
  app.add_option("--max-order", global.max_order, "Largest group order accepted");

  int status = exit_ok;
  std::function<int()> run;

  auto* group_cmd = app.add_subcommand("group", "Group structure")->require_subcommand(1);
  GroupOptions info_group;
  std::optional<std::uint64_t> info_prime;
  bool info_marks = false;
  auto* info = group_cmd->add_subcommand("info", "Subgroup classes, normalizers, residuals");
  info_group.add_to(info);
  info->add_option("--prime", info_prime, "Prime for the O^p column");
  info->add_flag("--marks", info_marks, "Print the table of marks");
  info->callback([&] { run = [&] { return group_info(info_group, info_prime, info_marks, global); }; });

  auto* burnside_cmd = app.add_subcommand("burnside", "Burnside ring")->require_subcommand(1);
  GroupOptions idem_group;
  std::optional<std::uint64_t> idem_prime;
  bool idem_rational = false;
  auto* idem = burnside_cmd->add_subcommand("idempotents", "Primitive idempotents");
  idem_group.add_to(idem);
  idem->add_option("--prime", idem_prime, "p-local idempotents");
  idem->add_flag("--rational", idem_rational, "Rational idempotents");
  idem->callback([&] { run = [&] { return burnside_idempotents(idem_group, idem_prime, idem_rational, global); }; });

  GroupOptions marks_group;
  std::string element_file;
  auto* marks_cmd = burnside_cmd->add_subcommand("marks", "Table of marks, or the marks of an element");
  marks_group.add_to(marks_cmd);
  marks_cmd->add_option("--element", element_file, "Burnside element JSON file");
  marks_cmd->callback([&] { run = [&] { return burnside_marks(marks_group, element_file, global); }; });

  auto* card_cmd = app.add_subcommand("card", "Height-1 cardinalities")->require_subcommand(1);
  GroupOptions bg_group;
  std::uint64_t bg_prime = 0;
  auto* bg = card_cmd->add_subcommand("bg", "|BG| as a Laurent polynomial in x = |BC_p|");
  bg_group.add_to(bg);
  bg->add_option("--prime", bg_prime, "The prime p")->required();
  bg->callback([&] { run = [&] { return card_bg_command(bg_group, bg_prime, global); }; });

  std::string space_file;
  std::uint64_t space_prime = 0;
  auto* space = card_cmd->add_subcommand("space", "|A| for a connected pi-finite space");
  space->add_option("spec", space_file, "Space spec JSON file")->required();
  space->add_option("--prime", space_prime, "The prime p")->required();
  space->callback([&] { run = [&] { return card_space_command(space_file, space_prime, global); }; });

  auto* poset_cmd = app.add_subcommand("poset", "Posets")->require_subcommand(1);
  std::string poset_file;
  auto* mob = poset_cmd->add_subcommand("mobius", "Moebius function on all comparable pairs");
  mob->add_option("poset", poset_file, "Poset JSON file")->required();
  mob->callback([&] { run = [&] { return poset_mobius_command(poset_file, global); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    status = run();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const NotInvertibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return exit_invariant;
  }
  return status;
}
