#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ambicard/group.hpp"
#include "ambicard/lattice.hpp"

namespace ambicard {

/// A finite set with a left action of a permutation group. The action is
/// given on generators and extended to every element; inconsistent
/// generator images are rejected.
class GSet {
 public:
  /// Throws InputError if an image list has the wrong size, is not a
  /// permutation, or the images do not define an action of `group`.
  GSet(GroupPtr group, std::size_t size, std::vector<Perm> generator_images,
       std::optional<std::size_t> basepoint = std::nullopt);

  /// Left cosets G/H with g . xH = gxH. Point i is the coset with the
  /// i-th smallest minimal element.
  static GSet cosets(GroupPtr group, const Subgroup& H);
  static GSet regular(GroupPtr group);
  static GSet trivial(GroupPtr group, std::size_t size);
  /// Diagonal action on X x Y; point (x, y) has index x * |Y| + y.
  static GSet product(const GSet& X, const GSet& Y);

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return size_; }
  const std::vector<Perm>& generator_images() const { return generator_images_; }
  std::optional<std::size_t> basepoint() const { return basepoint_; }

  /// The permutation of the carrier induced by group element g.
  const Perm& action(PermGroup::Element g) const { return element_action_[g]; }

  /// Orbits, each sorted, ordered by smallest point.
  std::vector<std::vector<std::size_t>> orbits() const;
  /// Elements of G fixing `point`.
  Subgroup stabilizer(std::size_t point) const;

 private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<Perm> generator_images_;
  std::optional<std::size_t> basepoint_;
  std::vector<Perm> element_action_;
};

/// |X^H|: points fixed by every element of H.
std::size_t fixed_count(const GSet& X, const Subgroup& H);

/// Multiplicity of each stabilizer class among the orbits of X, keyed by
/// class index in `lattice` (which must be the lattice of X's group).
std::map<std::size_t, std::size_t> orbit_decompose(const GSet& X, const SubgroupLattice& lattice);

/// X viewed as a set with an action of D <= G. The result is over the
/// standalone group generated by D's generators.
GSet restrict(const GSet& X, const Subgroup& D);
/// As above onto an existing group, which must be generated by the
/// permutations of D's generators in the same order.
GSet restrict(const GSet& X, const Subgroup& D, GroupPtr target);

/// Both sides of |G| * |X/G| = sum_g |X^<g>|.
struct CountingIdentity {
  std::size_t group_times_orbits = 0;
  std::size_t fixed_point_sum = 0;
  bool holds() const { return group_times_orbits == fixed_point_sum; }
};
CountingIdentity counting_identity(const GSet& X);

}  // namespace ambicard
