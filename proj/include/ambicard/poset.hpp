#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ambicard/errors.hpp"
#include "ambicard/rational.hpp"

namespace ambicard {

/// A finite partially ordered set with its full order relation materialized.
///
/// Elements are addressed by index; each carries an opaque string id. For
/// every element the set of elements above it is stored sorted, which is
/// enough for interval enumeration and O(log n) comparison.
class FinitePoset {
 public:
  using Index = std::size_t;

  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `relations` (pairs x <= y).
  /// Throws InputError on duplicate ids, unknown ids or a cycle.
  static FinitePoset from_relations(std::vector<std::string> ids,
                                    const std::vector<std::pair<Index, Index>>& relations);
  static FinitePoset from_relations(std::vector<std::string> ids,
                                    const std::vector<std::pair<std::string, std::string>>& relations);

  /// Builds from precomputed up-sets: `above[x]` lists every y with x <= y.
  /// The poset axioms are verified; throws InputError if they fail.
  static FinitePoset from_up_sets(std::vector<std::string> ids, std::vector<std::vector<Index>> above);

  /// Builds from a complete order predicate, checking the poset axioms.
  template <typename Leq>
  static FinitePoset from_order(std::vector<std::string> ids, Leq&& leq) {
    std::vector<std::pair<Index, Index>> pairs;
    for (Index x = 0; x < ids.size(); ++x)
      for (Index y = 0; y < ids.size(); ++y)
        if (x != y && leq(x, y)) pairs.emplace_back(x, y);
    FinitePoset poset = from_relations(std::move(ids), pairs);
    if (poset.comparable_pair_count() != pairs.size() + poset.size())
      throw InputError("order predicate is not transitive");
    return poset;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& id(Index x) const { return ids_[x]; }
  Index index_of(std::string_view id) const;

  bool leq(Index x, Index y) const;
  bool less(Index x, Index y) const { return x != y && leq(x, y); }

  /// Elements y with x <= y, sorted by index.
  const std::vector<Index>& above(Index x) const { return above_[x]; }
  /// Elements z with z <= y, sorted by index.
  const std::vector<Index>& below(Index y) const { return below_[y]; }

  /// A linear extension: rank(x) < rank(y) whenever x < y.
  const std::vector<Index>& linear_extension() const { return order_; }
  std::size_t rank(Index x) const { return rank_[x]; }

  std::size_t comparable_pair_count() const { return pair_offset_.empty() ? 0 : pair_offset_.back(); }

  /// Slot of the comparable pair (x, y) in a flat array, or npos if x is not <= y.
  std::size_t pair_slot(Index x, Index y) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.ids_ == b.ids_ && a.above_ == b.above_;
  }

 private:
  void finalize();

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Index>> above_;
  std::vector<std::vector<Index>> below_;
  std::vector<std::size_t> pair_offset_;
  std::vector<Index> order_;
  std::vector<std::size_t> rank_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

/// A function on comparable pairs of a poset. Pairs x !<= y have no slot and
/// read as zero.
class IncidenceFunction {
 public:
  using Index = FinitePoset::Index;

  explicit IncidenceFunction(PosetPtr poset);

  const FinitePoset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  Rational operator()(Index x, Index y) const;
  /// Throws InputError when x is not <= y.
  void set(Index x, Index y, Rational value);

  const std::vector<Rational>& values() const { return values_; }

  IncidenceFunction& operator+=(const IncidenceFunction& other);
  friend IncidenceFunction operator+(IncidenceFunction a, const IncidenceFunction& b) { return a += b; }
  friend IncidenceFunction operator*(const Rational& s, IncidenceFunction f);

  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);

 private:
  Rational& slot(Index x, Index y);

  PosetPtr poset_;
  std::vector<Rational> values_;
};

/// A function on the elements of a poset.
using ElementFunction = std::vector<Rational>;

IncidenceFunction delta(const PosetPtr& poset);
IncidenceFunction zeta(const PosetPtr& poset);

/// (f * g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y).
/// Throws InputError if f and g live on different posets.
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

/// The Moebius function: mu(x, x) = 1 and mu(x, y) = -sum_{x <= z < y} mu(x, z).
IncidenceFunction mobius(const PosetPtr& poset);

/// f(y) = sum_{x <= y} g(x).
ElementFunction sum_below(const FinitePoset& poset, const ElementFunction& g);
/// Inverse of sum_below: g(y) = sum_{x <= y} mu(x, y) f(x).
ElementFunction mobius_invert_down(const IncidenceFunction& mu, const ElementFunction& f);

/// f(x) = sum_{y >= x} g(y).
ElementFunction sum_above(const FinitePoset& poset, const ElementFunction& g);
/// Inverse of sum_above: g(x) = sum_{y >= x} mu(x, y) f(y).
ElementFunction mobius_invert_up(const IncidenceFunction& mu, const ElementFunction& f);

// Standard examples.
PosetPtr subset_poset(unsigned set_size);
PosetPtr divisor_poset(unsigned n);
PosetPtr chain_poset(unsigned length);

}  // namespace ambicard
