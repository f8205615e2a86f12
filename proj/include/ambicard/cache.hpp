#pragma once

#include <filesystem>
#include <string>

#include "ambicard/lattice.hpp"

namespace ambicard {

/// Persistent store of subgroup lattices keyed by a group fingerprint.
/// Entries are versioned JSON files; unreadable or inconsistent entries are
/// ignored and rewritten.
class LatticeCache {
 public:
  static constexpr const char* version = "ambicard-lattice-v1";

  LatticeCache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

  /// FNV-1a over the degree and the sorted generator image lists, in hex.
  static std::string fingerprint(const PermGroup& G);

  SubgroupLattice::Ptr lattice(GroupPtr group, LatticeLimits limits = {});

  std::filesystem::path entry_path(const PermGroup& G) const;
  bool last_was_hit() const { return last_hit_; }

 private:
  SubgroupLattice::Ptr load(const GroupPtr& group) const;
  void store(const SubgroupLattice& lattice) const;

  std::filesystem::path dir_;
  bool enabled_;
  bool last_hit_ = false;
};

}  // namespace ambicard
