#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ambicard/errors.hpp"

namespace ambicard {

/// A bijection of {0, ..., n-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)).
class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;
  /// Throws InputError unless `images` is a permutation.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Product of disjoint or overlapping cycles, applied right to left.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// A set of element indices of a fixed group, stored as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<std::uint32_t> indices() const;

  /// Lexicographic order of the sorted index lists.
  friend std::strong_ordering compare_indices(const ElementSet& a, const ElementSet& b);
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A finite permutation group with its elements enumerated in canonical
/// order (lexicographic by image tuple, so the identity is element 0).
class PermGroup {
 public:
  using Element = std::uint32_t;

  static constexpr std::size_t default_max_order = 10000;

  /// Breadth-first closure of `generators`. Throws ResourceError if the group
  /// is larger than `max_order`, InputError on mismatched degrees.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::size_t max_order = default_max_order);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Element indices of the generators, in generator order.
  const std::vector<Element>& generator_elements() const { return generator_elements_; }

  const Perm& element(Element g) const { return elements_[g]; }
  const std::vector<Perm>& elements() const { return elements_; }
  static constexpr Element identity() { return 0; }
  /// Throws InputError if `p` is not in the group.
  Element index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_.contains(p); }

  Element mul(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const { return element_order_[a]; }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Element> generator_elements_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Element, PermHash> index_;
  std::vector<Element> table_;  // row-major Cayley table, empty for large groups
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// A subgroup of a PermGroup: its element set plus a generating list.
struct Subgroup {
  ElementSet elements;
  std::vector<PermGroup::Element> generators;

  std::size_t order() const { return elements.count(); }
  bool contains(PermGroup::Element g) const { return elements.contains(g); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup generate(const PermGroup& G, std::span<const PermGroup::Element> generators);
Subgroup trivial_subgroup(const PermGroup& G);
Subgroup whole_group(const PermGroup& G);
/// Smallest subgroup containing H and g.
Subgroup join(const PermGroup& G, const Subgroup& H, PermGroup::Element g);
Subgroup join(const PermGroup& G, const Subgroup& H, const Subgroup& K);
Subgroup intersect(const PermGroup& G, const Subgroup& H, const Subgroup& K);

/// g H g^-1.
Subgroup conjugate(const PermGroup& G, const Subgroup& H, PermGroup::Element g);
Subgroup normalizer(const PermGroup& G, const Subgroup& H);
bool is_normal(const PermGroup& G, const Subgroup& K, const Subgroup& H);

bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// log_p(n), or -1 if n is not a power of p.
int log_p(std::uint64_t n, std::uint64_t p);
bool is_p_group(const Subgroup& H, std::uint64_t p);

/// O^p(H): the subgroup generated by elements of order prime to p.
Subgroup p_residual(const PermGroup& G, const Subgroup& H, std::uint64_t p);
bool is_p_perfect(const PermGroup& G, const Subgroup& H, std::uint64_t p);
/// [H, H].
Subgroup derived_subgroup(const PermGroup& G, const Subgroup& H);
/// Last term of the derived series of H.
Subgroup solvable_residual(const PermGroup& G, const Subgroup& H);

/// H as a standalone permutation group on the same points.
PermGroup as_group(const PermGroup& G, const Subgroup& H);

// Named families.
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
/// Symmetries of the regular n-gon, order 2n.
PermGroup dihedral_group(unsigned n);
/// GL_2(F_p) acting on the p^2 - 1 nonzero vectors of F_p^2.
PermGroup general_linear_2(unsigned p);
/// Quaternion group in its regular representation on 8 points.
PermGroup quaternion_group();
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

}  // namespace ambicard
