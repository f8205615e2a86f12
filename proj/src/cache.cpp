#include "ambicard/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ambicard/burnside.hpp"
#include "ambicard/io.hpp"

namespace ambicard {

std::string LatticeCache::fingerprint(const PermGroup& G) {
  std::vector<std::vector<Perm::Point>> gens;
  for (const auto& g : G.generators()) gens.push_back(g.images());
  std::sort(gens.begin(), gens.end());
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(G.degree());
  mix(gens.size());
  for (const auto& g : gens)
    for (auto x : g) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path LatticeCache::entry_path(const PermGroup& G) const {
  return dir_ / ("lattice-" + fingerprint(G) + ".json");
}

SubgroupLattice::Ptr LatticeCache::lattice(GroupPtr group, LatticeLimits limits) {
  last_hit_ = false;
  if (enabled_) {
    if (auto cached = load(group)) {
      last_hit_ = true;
      return cached;
    }
  }
  auto computed = SubgroupLattice::compute(std::move(group), limits);
  if (enabled_) store(*computed);
  return computed;
}

SubgroupLattice::Ptr LatticeCache::load(const GroupPtr& group) const {
  const auto path = entry_path(*group);
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    Json entry = Json::parse(in);
    if (entry.at("version").get<std::string>() != version) return nullptr;
    if (entry.at("fingerprint").get<std::string>() != fingerprint(*group)) return nullptr;
    if (entry.at("order").get<std::size_t>() != group->order()) return nullptr;
    auto lattice = SubgroupLattice::from_subgroups(group, entry.at("subgroups").get<std::vector<std::vector<std::uint32_t>>>());

    const auto& classes = entry.at("classes");
    if (classes.size() != lattice->classes().size()) return nullptr;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cls = lattice->subgroup_class(c);
      if (classes[c].at("representative").get<std::size_t>() != cls.representative ||
          classes[c].at("class_size").get<std::size_t>() != cls.class_size)
        return nullptr;
    }
    TableOfMarks table(*lattice);
    const auto& stored = entry.at("marks");
    if (stored.size() != table.size()) return nullptr;
    for (std::size_t h = 0; h < table.size(); ++h)
      for (std::size_t k = 0; k < table.size(); ++k)
        if (integer_from_json(stored.at(h).at(k)) != table(h, k)) return nullptr;

    std::vector<Rational> mobius;
    for (const auto& v : entry.at("mobius")) mobius.push_back(parse_rational(v.get<std::string>()));
    if (!lattice->seed_mobius(std::move(mobius))) return nullptr;
    return lattice;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void LatticeCache::store(const SubgroupLattice& lattice) const {
  const PermGroup& G = lattice.group();
  Json subgroups = Json::array();
  for (const auto& H : lattice.subgroups()) subgroups.push_back(H.elements.indices());
  Json classes = Json::array();
  for (const auto& cls : lattice.classes())
    classes.push_back({{"order", cls.order}, {"class_size", cls.class_size}, {"normalizer_order", cls.normalizer_order},
                       {"weyl_order", cls.weyl_order}, {"representative", cls.representative}, {"members", cls.members}});
  TableOfMarks table(lattice);
  Json marks = Json::array();
  for (std::size_t h = 0; h < table.size(); ++h) {
    Json row = Json::array();
    for (std::size_t k = 0; k < table.size(); ++k) row.push_back(rational_to_json_num(table(h, k)));
    marks.push_back(row);
  }
  Json mobius = Json::array();
  for (const auto& v : lattice.mobius().values()) mobius.push_back(to_string(v));

  Json entry{{"version", version},     {"fingerprint", fingerprint(G)}, {"group", group_to_json(G)},
             {"order", G.order()},     {"subgroups", subgroups},        {"classes", classes},
             {"marks", marks},         {"mobius", mobius}};

  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const auto path = entry_path(G);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << entry.dump(1) << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace ambicard
