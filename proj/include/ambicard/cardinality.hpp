#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ambicard/burnside.hpp"
#include "ambicard/gset.hpp"
#include "ambicard/rational.hpp"

namespace ambicard {

/// A Laurent polynomial in x = |BC_p| with rational coefficients. Zero
/// coefficients are never stored, so equality is structural.
class CardExpr {
 public:
  explicit CardExpr(std::uint64_t prime);

  static CardExpr constant(std::uint64_t prime, Rational c);
  static CardExpr monomial(std::uint64_t prime, Rational c, int exponent);

  std::uint64_t prime() const { return prime_; }
  /// Exponent -> coefficient, ascending by exponent.
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  CardExpr& operator+=(const CardExpr& other);
  CardExpr& operator-=(const CardExpr& other);
  CardExpr& operator*=(const CardExpr& other);
  friend CardExpr operator+(CardExpr a, const CardExpr& b) { return a += b; }
  friend CardExpr operator-(CardExpr a, const CardExpr& b) { return a -= b; }
  friend CardExpr operator*(CardExpr a, const CardExpr& b) { return a *= b; }
  friend CardExpr operator*(const Rational& s, CardExpr a);
  friend bool operator==(const CardExpr&, const CardExpr&) = default;

  /// Canonical text, exponents descending: "x - 1/3", "1/4*x^2 + 3", "x^-3".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& c);
  void require_same_prime(const CardExpr& other) const;

  std::uint64_t prime_;
  std::map<int, Rational> terms_;
};

/// Substitutes x = x0. Throws NotInvertibleError for x0 = 0 with negative powers.
Rational evaluate(const CardExpr& e, const Rational& x0);

/// |BP| = x^m for a p-group of order p^m; InputError otherwise.
CardExpr card_b_pgroup(std::size_t order, std::uint64_t p);
CardExpr card_b_pgroup(const Subgroup& P, std::uint64_t p);

/// The p-local idempotent e_p^1 on the [G/D] basis; only p-subgroup classes
/// have nonzero coefficients.
BurnsideElement bg_weights(const BurnsideRing::Ptr& ring, std::uint64_t p);

constexpr std::size_t default_sylow_cap = 14;

/// sum over nonempty sets of Sylow p-subgroups of
/// (-1)^(k-1) |Q_1 cap ... cap Q_k| / |G| [G/(Q_1 cap ... cap Q_k)],
/// with equal intersections merged. ResourceError above `sylow_cap`.
BurnsideElement sylow_inclusion_exclusion(const BurnsideRing::Ptr& ring, std::uint64_t p,
                                          std::size_t sylow_cap = default_sylow_cap);

/// Linear map [G/H] -> |BH| for elements supported on p-subgroup classes.
CardExpr integrate_over_bp(const BurnsideElement& b, std::uint64_t p);

CardExpr card_bg(const BurnsideRing::Ptr& ring, std::uint64_t p);

/// A finite abelian group given by its operation table, with an action of a
/// permutation group by automorphisms. The identity is the G-set basepoint.
class AbelianModule {
 public:
  using Table = std::vector<std::vector<std::uint32_t>>;
  static constexpr std::size_t max_size = 512;

  /// Validates the group axioms, commutativity and that every generator
  /// image is an automorphism; InputError names the failing triple.
  AbelianModule(GroupPtr group, Table table, std::vector<Perm> generator_images);

  std::size_t size() const { return table_.size(); }
  const Table& table() const { return table_; }
  std::uint32_t identity() const { return identity_; }
  std::size_t element_order(std::uint32_t a) const { return element_order_[a]; }
  const GSet& action() const { return action_; }

 private:
  Table table_;
  std::uint32_t identity_ = 0;
  std::vector<std::size_t> element_order_;
  GSet action_;
};

/// The Sylow q-subgroup of A with the inherited action.
AbelianModule primary_part(const AbelianModule& A, std::uint64_t q);

struct HomotopyGroup {
  unsigned level;
  AbelianModule module;
};

/// A connected pi-finite space: fundamental group plus higher homotopy
/// groups pi_i (i >= 2) as modules over it.
class SpaceSpec {
 public:
  /// Throws InputError on a level below 2, a repeated level, or a module
  /// over a different group.
  SpaceSpec(GroupPtr group, std::vector<HomotopyGroup> homotopy);

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<HomotopyGroup>& homotopy() const { return homotopy_; }
  unsigned truncation() const;

 private:
  GroupPtr group_;
  std::vector<HomotopyGroup> homotopy_;
};

/// |A| at height 1, from the p-local weights of the fundamental group and
/// the orbit structure of the prime-to-p homotopy on each weighted p-subgroup.
CardExpr card_space(const SpaceSpec& space, std::uint64_t p, LatticeLimits limits = {});
/// As above, reusing a Burnside ring already built for the fundamental group.
CardExpr card_space(const SpaceSpec& space, const BurnsideRing::Ptr& ring, std::uint64_t p);

/// prod over i >= 1 of |pi_i|^((-1)^i): the value card_space must take at x = 1/p.
Rational homotopy_cardinality(const SpaceSpec& space);

}  // namespace ambicard
