#include "ambicard/gset.hpp"

#include <algorithm>
#include <numeric>

namespace ambicard {

GSet::GSet(GroupPtr group, std::size_t size, std::vector<Perm> generator_images,
           std::optional<std::size_t> basepoint)
    : group_(std::move(group)), size_(size), generator_images_(std::move(generator_images)), basepoint_(basepoint) {
  const PermGroup& G = *group_;
  if (generator_images_.size() != G.generators().size())
    throw InputError("G-set needs one image per group generator (" + std::to_string(G.generators().size()) +
                     "), got " + std::to_string(generator_images_.size()));
  for (const auto& img : generator_images_)
    if (img.degree() != size_) throw InputError("generator image has the wrong length for the G-set carrier");
  if (basepoint_) {
    if (*basepoint_ >= size_) throw InputError("basepoint is outside the carrier");
    for (const auto& img : generator_images_)
      if (img(static_cast<Perm::Point>(*basepoint_)) != *basepoint_) throw InputError("basepoint is not fixed by the action");
  }

  // rho(g s) = rho(g) rho(s) along every edge of the Cayley graph.
  element_action_.assign(G.order(), Perm());
  std::vector<bool> assigned(G.order(), false);
  element_action_[PermGroup::identity()] = Perm::identity(size_);
  assigned[PermGroup::identity()] = true;
  std::vector<PermGroup::Element> queue{PermGroup::identity()};
  const auto& gens = G.generator_elements();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto g = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto h = G.mul(g, gens[k]);
      Perm candidate = element_action_[g] * generator_images_[k];
      if (!assigned[h]) {
        element_action_[h] = std::move(candidate);
        assigned[h] = true;
        queue.push_back(h);
      } else if (element_action_[h] != candidate) {
        throw InputError("generator images do not define an action of the group");
      }
    }
  }
}

GSet GSet::cosets(GroupPtr group, const Subgroup& H) {
  const PermGroup& G = *group;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(G.order(), none);
  std::vector<PermGroup::Element> reps;
  const auto members = H.elements.indices();
  for (PermGroup::Element g = 0; g < G.order(); ++g) {
    if (coset_of[g] != none) continue;
    for (auto h : members) coset_of[G.mul(g, h)] = reps.size();
    reps.push_back(g);
  }
  std::vector<Perm> images;
  for (auto s : G.generator_elements()) {
    std::vector<Perm::Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = static_cast<Perm::Point>(coset_of[G.mul(s, reps[c])]);
    images.emplace_back(img);
  }
  const std::size_t count = reps.size();
  return GSet(std::move(group), count, std::move(images), H.order() == G.order() ? std::optional<std::size_t>(0) : std::nullopt);
}

GSet GSet::regular(GroupPtr group) {
  Subgroup trivial = trivial_subgroup(*group);
  return cosets(std::move(group), trivial);
}

GSet GSet::trivial(GroupPtr group, std::size_t size) {
  std::vector<Perm> images(group->generators().size(), Perm::identity(size));
  return GSet(std::move(group), size, std::move(images));
}

GSet GSet::product(const GSet& X, const GSet& Y) {
  if (X.group_ != Y.group_) throw InputError("G-set product needs both factors over the same group");
  const std::size_t n = X.size() * Y.size();
  std::vector<Perm> images;
  for (std::size_t k = 0; k < X.generator_images().size(); ++k) {
    std::vector<Perm::Point> img(n);
    for (std::size_t x = 0; x < X.size(); ++x)
      for (std::size_t y = 0; y < Y.size(); ++y)
        img[x * Y.size() + y] = static_cast<Perm::Point>(X.generator_images()[k](static_cast<Perm::Point>(x)) * Y.size() +
                                                         Y.generator_images()[k](static_cast<Perm::Point>(y)));
    images.emplace_back(img);
  }
  return GSet(X.group_, n, std::move(images));
}

std::vector<std::vector<std::size_t>> GSet::orbits() const {
  std::vector<bool> seen(size_, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < size_; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& img : generator_images_) {
        std::size_t y = img(static_cast<Perm::Point>(orbit[i]));
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup GSet::stabilizer(std::size_t point) const {
  std::vector<PermGroup::Element> members;
  for (PermGroup::Element g = 0; g < group_->order(); ++g)
    if (element_action_[g](static_cast<Perm::Point>(point)) == point) members.push_back(g);
  return generate(*group_, members);
}

std::size_t fixed_count(const GSet& X, const Subgroup& H) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < X.size(); ++x) {
    const auto pt = static_cast<Perm::Point>(x);
    if (std::all_of(H.generators.begin(), H.generators.end(), [&](auto h) { return X.action(h)(pt) == pt; }))
      ++count;
  }
  return count;
}

std::map<std::size_t, std::size_t> orbit_decompose(const GSet& X, const SubgroupLattice& lattice) {
  if (&lattice.group() != &X.group() && lattice.group().elements() != X.group().elements())
    throw InputError("lattice and G-set are over different groups");
  std::map<std::size_t, std::size_t> multiplicity;
  for (const auto& orbit : X.orbits()) ++multiplicity[lattice.class_of(X.stabilizer(orbit.front()))];
  return multiplicity;
}

GSet restrict(const GSet& X, const Subgroup& D) {
  return restrict(X, D, std::make_shared<PermGroup>(as_group(X.group(), D)));
}

GSet restrict(const GSet& X, const Subgroup& D, GroupPtr target) {
  if (target->generators().size() != D.generators.size())
    throw InputError("restriction target is not generated by the subgroup's generators");
  std::vector<Perm> images;
  for (std::size_t k = 0; k < D.generators.size(); ++k) {
    if (target->generators()[k] != X.group().element(D.generators[k]))
      throw InputError("restriction target is not generated by the subgroup's generators");
    images.push_back(X.action(D.generators[k]));
  }
  return GSet(std::move(target), X.size(), std::move(images), X.basepoint());
}

CountingIdentity counting_identity(const GSet& X) {
  CountingIdentity result;
  result.group_times_orbits = X.group().order() * X.orbits().size();
  for (PermGroup::Element g = 0; g < X.group().order(); ++g) {
    const Perm& a = X.action(g);
    for (std::size_t x = 0; x < X.size(); ++x) result.fixed_point_sum += a(static_cast<Perm::Point>(x)) == x;
  }
  return result;
}

}  // namespace ambicard
