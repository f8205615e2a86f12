#include "ambicard/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace ambicard {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<Perm> perms_from_json(const Json& lists, std::size_t degree) {
  std::vector<Perm> perms;
  for (const auto& list : lists) {
    auto images = list.get<std::vector<Perm::Point>>();
    if (images.size() != degree)
      throw InputError("permutation has " + std::to_string(images.size()) + " images, expected " + std::to_string(degree));
    perms.emplace_back(std::move(images));
  }
  return perms;
}

std::size_t predicted_order(const std::string& family, unsigned n) {
  auto factorial = [](unsigned k) {
    std::size_t f = 1;
    for (unsigned i = 2; i <= k; ++i) {
      if (f > std::numeric_limits<std::size_t>::max() / i) return std::numeric_limits<std::size_t>::max();
      f *= i;
    }
    return f;
  };
  if (family == "S") return factorial(n);
  if (family == "A") return n < 2 ? 1 : factorial(n) / 2;
  if (family == "C") return n;
  if (family == "D") return 2 * static_cast<std::size_t>(n);
  if (family == "GL2") {
    const std::size_t p = n;
    return (p * p - 1) * (p * p - p);
  }
  throw InputError("unknown group family '" + family + "' (expected S, A, C, D or GL2)");
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

PermGroup group_from_family(const std::string& family, unsigned n, std::size_t max_order) {
  if (n == 0) throw InputError("group family parameter n must be positive");
  if (predicted_order(family, n) > max_order)
    throw ResourceError("group " + family + " " + std::to_string(n) + " exceeds the order cap of " +
                        std::to_string(max_order));
  if (family == "S") return symmetric_group(n);
  if (family == "A") return alternating_group(n);
  if (family == "C") return cyclic_group(n);
  if (family == "D") return dihedral_group(n);
  return general_linear_2(n);
}

PermGroup group_from_json(const Json& spec, std::size_t max_order) {
  return guarded("group spec", [&] {
    if (!spec.is_object()) throw InputError("group spec must be a JSON object");
    if (spec.contains("family")) return group_from_family(spec.at("family").get<std::string>(), spec.at("n").get<unsigned>(), max_order);
    const auto degree = spec.at("degree").get<std::size_t>();
    return PermGroup::closure(degree, perms_from_json(spec.at("generators"), degree), max_order);
  });
}

Json group_to_json(const PermGroup& G) {
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return Json{{"degree", G.degree()}, {"generators", gens}};
}

GSet gset_from_json(const Json& spec, GroupPtr group) {
  return guarded("G-set spec", [&] {
    const auto size = spec.at("size").get<std::size_t>();
    std::optional<std::size_t> basepoint;
    if (spec.contains("basepoint") && !spec.at("basepoint").is_null()) basepoint = spec.at("basepoint").get<std::size_t>();
    return GSet(std::move(group), size, perms_from_json(spec.at("generator_images"), size), basepoint);
  });
}

Json gset_to_json(const GSet& X) {
  Json images = Json::array();
  for (const auto& g : X.generator_images()) images.push_back(g.images());
  Json j{{"size", X.size()}, {"generator_images", images}};
  if (X.basepoint()) j["basepoint"] = *X.basepoint();
  return j;
}

FinitePoset poset_from_json(const Json& spec) {
  return guarded("poset spec", [&] {
    if (!spec.is_object()) throw InputError("poset spec must be a JSON object");
    auto ids = spec.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& pair : spec.value("covers", Json::array())) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("each cover must be a pair [lower, upper]");
      covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return FinitePoset::from_relations(std::move(ids), covers);
  });
}

SpaceSpec space_from_json(const Json& spec, std::size_t max_order) {
  return guarded("space spec", [&] {
    if (!spec.is_object()) throw InputError("space spec must be a JSON object");
    auto group = std::make_shared<PermGroup>(group_from_json(spec.at("group"), max_order));
    std::vector<HomotopyGroup> homotopy;
    for (const auto& entry : spec.value("homotopy", Json::array())) {
      const auto level = entry.at("level").get<unsigned>();
      const auto size = entry.at("size").get<std::size_t>();
      auto table = entry.at("op_table").get<AbelianModule::Table>();
      if (table.size() != size) throw InputError("op_table of level " + std::to_string(level) + " does not have size rows");
      homotopy.push_back({level, AbelianModule(group, std::move(table), perms_from_json(entry.at("action"), size))});
    }
    return SpaceSpec(group, std::move(homotopy));
  });
}

Json space_to_json(const SpaceSpec& space) {
  Json homotopy = Json::array();
  for (const auto& [level, module] : space.homotopy()) {
    Json action = Json::array();
    for (const auto& g : module.action().generator_images()) action.push_back(g.images());
    homotopy.push_back({{"level", level}, {"size", module.size()}, {"op_table", module.table()}, {"action", action}});
  }
  return Json{{"group", group_to_json(space.group())}, {"homotopy", homotopy}};
}

Json rational_to_json_num(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    Rational r = parse_rational(v.get<std::string>());
    if (!is_integer(r)) throw InputError("expected an integer, got '" + v.get<std::string>() + "'");
    return numer(r);
  }
  throw InputError("expected an integer");
}

Json card_expr_to_json(const CardExpr& e) {
  Json terms = Json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    terms.push_back({{"exp", it->first}, {"num", rational_to_json_num(numer(it->second))},
                     {"den", rational_to_json_num(denom(it->second))}});
  return Json{{"prime", e.prime()}, {"terms", terms}, {"string", e.to_string()}};
}

CardExpr card_expr_from_json(const Json& j) {
  return guarded("card expression", [&] {
    CardExpr e(j.at("prime").get<std::uint64_t>());
    for (const auto& t : j.at("terms")) {
      Integer den = integer_from_json(t.at("den"));
      if (den == 0) throw InputError("zero denominator in card expression");
      e += CardExpr::monomial(e.prime(), Rational(integer_from_json(t.at("num")), den), t.at("exp").get<int>());
    }
    return e;
  });
}

Json burnside_element_to_json(const BurnsideElement& x, const Json& group_spec) {
  Json coeffs = Json::array();
  const auto& L = x.ring().lattice();
  for (std::size_t c = 0; c < x.ring().rank(); ++c) {
    const Rational& v = x.coeff(c);
    if (v == 0) continue;
    coeffs.push_back({{"class_order", L.subgroup_class(c).order}, {"class_index", c},
                      {"num", rational_to_json_num(numer(v))}, {"den", rational_to_json_num(denom(v))}});
  }
  return Json{{"group", group_spec}, {"coeffs", coeffs}};
}

BurnsideElement burnside_element_from_json(const Json& j, const BurnsideRing::Ptr& ring) {
  return guarded("Burnside element", [&] {
    BurnsideElement x = BurnsideElement::zero(ring);
    const auto& L = ring->lattice();
    for (const auto& entry : j.at("coeffs")) {
      const auto c = entry.at("class_index").get<std::size_t>();
      if (c >= ring->rank()) throw InputError("class_index " + std::to_string(c) + " out of range");
      if (entry.at("class_order").get<std::size_t>() != L.subgroup_class(c).order)
        throw InputError("class_order does not match class " + std::to_string(c));
      Integer den = integer_from_json(entry.at("den"));
      if (den == 0) throw InputError("zero denominator in Burnside element");
      x += Rational(integer_from_json(entry.at("num")), den) * BurnsideElement::basis(ring, c);
    }
    return x;
  });
}

}  // namespace ambicard
