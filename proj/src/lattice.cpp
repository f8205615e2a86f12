#include "ambicard/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace ambicard {

namespace {

void check_group_size(const PermGroup& G, const LatticeLimits& limits) {
  if (G.order() > limits.max_group_order)
    throw ResourceError("group order " + std::to_string(G.order()) + " exceeds the subgroup-lattice cap of " +
                        std::to_string(limits.max_group_order));
}

}  // namespace

SubgroupLattice::Ptr SubgroupLattice::compute(GroupPtr group, LatticeLimits limits) {
  const PermGroup& G = *group;
  check_group_size(G, limits);

  std::shared_ptr<SubgroupLattice> lattice(new SubgroupLattice);
  lattice->group_ = std::move(group);
  auto& known = lattice->subgroups_;
  auto& index = lattice->index_;

  auto add = [&](Subgroup H) {
    if (index.contains(H.elements)) return;
    if (known.size() >= limits.max_subgroups)
      throw ResourceError("subgroup count exceeds the cap of " + std::to_string(limits.max_subgroups));
    index.emplace(H.elements, known.size());
    known.push_back(std::move(H));
  };

  // One generator per cyclic subgroup; every subgroup is a join of these.
  std::vector<PermGroup::Element> cyclic_generators;
  add(trivial_subgroup(G));
  for (PermGroup::Element g = 1; g < G.order(); ++g) {
    Subgroup C = join(G, trivial_subgroup(G), g);
    if (!index.contains(C.elements)) cyclic_generators.push_back(g);
    add(std::move(C));
  }
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (auto c : cyclic_generators) {
      if (known[i].contains(c)) continue;
      add(join(G, known[i], c));
    }
  }

  std::sort(known.begin(), known.end(),
            [](const Subgroup& a, const Subgroup& b) { return compare_indices(a.elements, b.elements) < 0; });
  lattice->classify();
  return lattice;
}

SubgroupLattice::Ptr SubgroupLattice::from_subgroups(GroupPtr group,
                                                     const std::vector<std::vector<std::uint32_t>>& subgroups) {
  const PermGroup& G = *group;
  std::shared_ptr<SubgroupLattice> lattice(new SubgroupLattice);
  lattice->group_ = std::move(group);
  for (const auto& members : subgroups) {
    for (auto g : members)
      if (g >= G.order()) throw InputError("stored subgroup refers to an element outside the group");
    Subgroup H = generate(G, members);
    if (H.order() != members.size()) throw InputError("stored element set is not a subgroup");
    lattice->subgroups_.push_back(std::move(H));
  }
  auto& known = lattice->subgroups_;
  std::sort(known.begin(), known.end(),
            [](const Subgroup& a, const Subgroup& b) { return compare_indices(a.elements, b.elements) < 0; });
  for (std::size_t i = 0; i + 1 < known.size(); ++i)
    if (known[i] == known[i + 1]) throw InputError("stored subgroup list has duplicates");
  if (known.empty() || known.front().order() != 1) throw InputError("stored subgroup list lacks the trivial subgroup");
  lattice->classify();
  return lattice;
}

void SubgroupLattice::classify() {
  const PermGroup& G = *group_;
  index_.clear();
  for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i].elements, i);

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> provisional(subgroups_.size(), unassigned);
  std::vector<SubgroupClass> found;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (provisional[i] != unassigned) continue;
    SubgroupClass cls;
    cls.members.push_back(i);
    provisional[i] = found.size();
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      for (auto s : G.generator_elements()) {
        Subgroup C = conjugate(G, subgroups_[cls.members[k]], s);
        auto it = index_.find(C.elements);
        if (it == index_.end()) throw InvariantError("subgroup list is not closed under conjugation");
        if (provisional[it->second] == unassigned) {
          provisional[it->second] = found.size();
          cls.members.push_back(it->second);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.order = subgroups_[i].order();
    cls.class_size = cls.members.size();
    cls.normalizer_order = G.order() / cls.class_size;
    cls.weyl_order = cls.normalizer_order / cls.order;
    found.push_back(std::move(cls));
  }
  std::sort(found.begin(), found.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return std::tie(a.order, a.class_size, a.representative) < std::tie(b.order, b.class_size, b.representative);
  });
  classes_ = std::move(found);
  class_of_.assign(subgroups_.size(), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto m : classes_[c].members) class_of_[m] = c;
  solvable_residuals_.assign(classes_.size(), unassigned);
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::index_of(const Subgroup& H) const {
  auto found = find(H.elements);
  if (!found) throw InvariantError("subgroup is missing from the lattice");
  return *found;
}

PosetPtr SubgroupLattice::poset() const {
  std::lock_guard lock(memo_mutex_);
  if (!poset_) {
    std::vector<std::string> ids;
    std::vector<std::vector<FinitePoset::Index>> above(subgroups_.size());
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      ids.push_back("H" + std::to_string(i));
      for (std::size_t j = 0; j < subgroups_.size(); ++j)
        if (subgroups_[i].elements.subset_of(subgroups_[j].elements)) above[i].push_back(j);
    }
    poset_ = std::make_shared<FinitePoset>(FinitePoset::from_up_sets(std::move(ids), std::move(above)));
  }
  return poset_;
}

const IncidenceFunction& SubgroupLattice::mobius() const {
  PosetPtr P = poset();
  std::lock_guard lock(memo_mutex_);
  if (!mobius_) mobius_ = std::make_unique<IncidenceFunction>(ambicard::mobius(P));
  return *mobius_;
}

bool SubgroupLattice::seed_mobius(std::vector<Rational> values) const {
  PosetPtr P = poset();
  if (values.size() != P->comparable_pair_count()) return false;
  IncidenceFunction mu(P);
  for (FinitePoset::Index x = 0; x < P->size(); ++x)
    for (auto y : P->above(x)) mu.set(x, y, values[P->pair_slot(x, y)]);
  if (!(convolve(mu, zeta(P)) == delta(P))) return false;
  std::lock_guard lock(memo_mutex_);
  if (!mobius_) mobius_ = std::make_unique<IncidenceFunction>(std::move(mu));
  return true;
}

const std::vector<std::size_t>& SubgroupLattice::p_residuals(std::uint64_t p) const {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::lock_guard lock(memo_mutex_);
  auto it = p_residuals_.find(p);
  if (it == p_residuals_.end()) {
    std::vector<std::size_t> residuals(subgroups_.size());
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      residuals[i] = index_of(p_residual(*group_, subgroups_[i], p));
    it = p_residuals_.emplace(p, std::move(residuals)).first;
  }
  return it->second;
}

std::size_t SubgroupLattice::p_residual_class(std::size_t c, std::uint64_t p) const {
  return class_of_[p_residuals(p)[classes_[c].representative]];
}

bool SubgroupLattice::is_p_perfect_class(std::size_t c, std::uint64_t p) const {
  return p_residuals(p)[classes_[c].representative] == classes_[c].representative;
}

std::size_t SubgroupLattice::solvable_residual_class(std::size_t c) const {
  std::lock_guard lock(memo_mutex_);
  if (solvable_residuals_[c] == static_cast<std::size_t>(-1))
    solvable_residuals_[c] = class_of_[index_of(solvable_residual(*group_, representative(c)))];
  return solvable_residuals_[c];
}

std::vector<std::size_t> SubgroupLattice::sylow_subgroups(std::uint64_t p) const {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  const std::size_t target = p_part(group_->order(), p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i].order() == target) out.push_back(i);
  return out;
}

bool SubgroupLattice::subconjugate(std::size_t h, std::size_t k) const {
  const auto& H = representative(h).elements;
  return std::any_of(classes_[k].members.begin(), classes_[k].members.end(),
                     [&](std::size_t m) { return H.subset_of(subgroups_[m].elements); });
}

std::vector<Subgroup> all_subgroups(const PermGroup& G, LatticeLimits limits) {
  return SubgroupLattice::compute(std::make_shared<PermGroup>(G), limits)->subgroups();
}

std::vector<Subgroup> sylow_subgroups(const PermGroup& G, std::uint64_t p, LatticeLimits limits) {
  auto lattice = SubgroupLattice::compute(std::make_shared<PermGroup>(G), limits);
  std::vector<Subgroup> out;
  for (auto i : lattice->sylow_subgroups(p)) out.push_back(lattice->subgroup(i));
  return out;
}

}  // namespace ambicard
