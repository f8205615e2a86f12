#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ambicard/gset.hpp"
#include "ambicard/lattice.hpp"
#include "ambicard/rational.hpp"

namespace ambicard {

/// The table of marks m(H, K) = |(G/K)^H| over conjugacy classes of
/// subgroups, rows H and columns K in lattice class order. Upper triangular
/// because class order refines subgroup order.
class TableOfMarks {
 public:
  explicit TableOfMarks(const SubgroupLattice& lattice);

  std::size_t size() const { return static_cast<std::size_t>(marks_.rows()); }
  const Integer& operator()(std::size_t h, std::size_t k) const { return marks_(h, k); }
  const Matrix<Integer>& matrix() const { return marks_; }
  const Matrix<Rational>& rational_matrix() const { return rational_; }

 private:
  Matrix<Integer> marks_;
  Matrix<Rational> rational_;
};

/// Omega(G) tensored with the rationals, with the basis [G/H] indexed by
/// subgroup class.
class BurnsideRing {
 public:
  using Ptr = std::shared_ptr<const BurnsideRing>;

  static Ptr create(SubgroupLattice::Ptr lattice);
  static Ptr create(GroupPtr group, LatticeLimits limits = {});

  const SubgroupLattice& lattice() const { return *lattice_; }
  const SubgroupLattice::Ptr& lattice_ptr() const { return lattice_; }
  const PermGroup& group() const { return lattice_->group(); }
  const TableOfMarks& table() const { return table_; }
  std::size_t rank() const { return table_.size(); }

 private:
  BurnsideRing(SubgroupLattice::Ptr lattice) : lattice_(std::move(lattice)), table_(*lattice_) {}

  SubgroupLattice::Ptr lattice_;
  TableOfMarks table_;
};

/// Ghost coordinates: one rational per subgroup class.
struct MarksVector {
  BurnsideRing::Ptr ring;
  Vector<Rational> values;

  friend bool operator==(const MarksVector& a, const MarksVector& b) {
    return a.ring == b.ring && a.values == b.values;
  }
};

/// A rational combination of the basis elements [G/H].
class BurnsideElement {
 public:
  BurnsideElement(BurnsideRing::Ptr ring, Vector<Rational> coeffs);

  static BurnsideElement zero(BurnsideRing::Ptr ring);
  static BurnsideElement one(BurnsideRing::Ptr ring);
  /// [G/H] for the class with index `c`.
  static BurnsideElement basis(BurnsideRing::Ptr ring, std::size_t c);
  /// The class [X] of a G-set, via its orbit decomposition.
  static BurnsideElement from_gset(BurnsideRing::Ptr ring, const GSet& X);

  const BurnsideRing& ring() const { return *ring_; }
  const BurnsideRing::Ptr& ring_ptr() const { return ring_; }
  const Vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t c) const { return coeffs_(static_cast<Eigen::Index>(c)); }

  bool is_integral() const;
  bool is_p_integral(std::uint64_t p) const;
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& other);
  BurnsideElement& operator-=(const BurnsideElement& other);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(const Rational& s, BurnsideElement x);
  friend BurnsideElement operator*(const BurnsideElement& x, const BurnsideElement& y);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

 private:
  BurnsideRing::Ptr ring_;
  Vector<Rational> coeffs_;
};

MarksVector marks(const BurnsideElement& x);
/// The unique rational preimage under the mark homomorphism.
BurnsideElement from_marks(const MarksVector& v);

BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y);
/// Throws NotInvertibleError naming the first class with a zero mark.
BurnsideElement invert(const BurnsideElement& x);
/// x^e for any integer e, computed pointwise on marks.
BurnsideElement pow(const BurnsideElement& x, int e);

struct CongruenceCheck {
  std::size_t subgroup_class = 0;
  Rational sum;
  std::uint64_t modulus = 1;
  bool holds = false;
};

struct CongruenceReport {
  std::vector<CongruenceCheck> checks;
  bool holds() const;
  /// First failing check, if any.
  std::optional<CongruenceCheck> witness() const;
};

/// sum over g in G of |X^<g>|, tested against 0 mod |G|.
CongruenceReport check_counting_congruence(const GSet& X);
/// sum over g in G of f(<g>), tested against 0 mod |G|.
CongruenceReport check_counting_congruence(const MarksVector& f);

/// For each class (H): the sum over cosets nH of WH of f(<n, H>) modulo |WH|.
/// With a prime, uses a Sylow p-subgroup W_pH of WH instead and accepts
/// p-local values. Passing all classes characterizes membership of f in the
/// image of Omega(G) (resp. its p-localization).
CongruenceReport check_wh_congruences(const MarksVector& f, std::optional<std::uint64_t> p = std::nullopt);

/// e^H = 1/|NH| sum_{D <= H} |D| mu(D, H) [G/D].
BurnsideElement idempotent_rational(const BurnsideRing::Ptr& ring, std::size_t c);
/// e_p^H = 1/|NH| sum_{D <= NH} |D| lambda(D, H) [G/D], where
/// lambda(D, H) sums mu(D, S) over subgroups S with O^p(S) = H.
/// Throws InputError unless the class is p-perfect.
BurnsideElement idempotent_p_local(const BurnsideRing::Ptr& ring, std::size_t c, std::uint64_t p);

struct ClassIdempotent {
  std::size_t subgroup_class;
  BurnsideElement element;
};
std::vector<ClassIdempotent> rational_idempotents(const BurnsideRing::Ptr& ring);
/// One idempotent per p-perfect class.
std::vector<ClassIdempotent> p_local_idempotents(const BurnsideRing::Ptr& ring, std::uint64_t p);

}  // namespace ambicard
