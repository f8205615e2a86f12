#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ambicard/group.hpp"
#include "ambicard/poset.hpp"

namespace ambicard {

struct LatticeLimits {
  std::size_t max_group_order = 2000;
  std::size_t max_subgroups = 20000;
};

/// A conjugacy class (H) of subgroups. Indices refer to
/// SubgroupLattice::subgroups().
struct SubgroupClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::size_t normalizer_order = 0;
  std::size_t weyl_order = 0;
};

/// Every subgroup of a finite group, in canonical order, with the
/// conjugacy-class partition and memoized derived data (containment poset,
/// Moebius function, p-residuals, solvable residuals).
class SubgroupLattice {
 public:
  using Ptr = std::shared_ptr<const SubgroupLattice>;

  /// Enumerates all subgroups by joining cyclic subgroups to a fixpoint.
  static Ptr compute(GroupPtr group, LatticeLimits limits = {});
  /// Rebuilds from a stored subgroup list (e.g. a cache entry). Subgroups
  /// are re-sorted and re-classified; throws InputError if any stored set is
  /// not a subgroup.
  static Ptr from_subgroups(GroupPtr group, const std::vector<std::vector<std::uint32_t>>& subgroups);

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  std::optional<std::size_t> find(const ElementSet& elements) const;
  /// Throws InvariantError if `H` is not one of the enumerated subgroups.
  std::size_t index_of(const Subgroup& H) const;

  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const SubgroupClass& subgroup_class(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(std::size_t subgroup) const { return class_of_[subgroup]; }
  std::size_t class_of(const Subgroup& H) const { return class_of_[index_of(H)]; }
  const Subgroup& representative(std::size_t c) const { return subgroups_[classes_[c].representative]; }
  std::size_t trivial_class() const { return 0; }
  std::size_t whole_class() const { return classes_.size() - 1; }

  /// Subgroups ordered by inclusion; element ids are "H<index>".
  PosetPtr poset() const;
  const IncidenceFunction& mobius() const;
  /// Installs stored Moebius values (slot order of poset()) after checking
  /// mu * zeta = delta; returns false and leaves the memo empty otherwise.
  bool seed_mobius(std::vector<Rational> values) const;

  /// Subgroup index of O^p(H) for every subgroup H.
  const std::vector<std::size_t>& p_residuals(std::uint64_t p) const;
  std::size_t p_residual_class(std::size_t c, std::uint64_t p) const;
  std::size_t solvable_residual_class(std::size_t c) const;
  bool is_p_perfect_class(std::size_t c, std::uint64_t p) const;

  /// Subgroups of order equal to the p-part of |G|.
  std::vector<std::size_t> sylow_subgroups(std::uint64_t p) const;

  /// True if some conjugate of a member of class `h` lies in the
  /// representative of class `k`.
  bool subconjugate(std::size_t h, std::size_t k) const;

 private:
  SubgroupLattice() = default;
  void classify();

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::size_t> class_of_;

  mutable std::mutex memo_mutex_;
  mutable PosetPtr poset_;
  mutable std::unique_ptr<IncidenceFunction> mobius_;
  mutable std::map<std::uint64_t, std::vector<std::size_t>> p_residuals_;
  mutable std::vector<std::size_t> solvable_residuals_;
};

/// The full subgroup list of G, each subgroup once, canonically ordered.
std::vector<Subgroup> all_subgroups(const PermGroup& G, LatticeLimits limits = {});
std::vector<Subgroup> sylow_subgroups(const PermGroup& G, std::uint64_t p, LatticeLimits limits = {});

}  // namespace ambicard
