#include "ambicard/burnside.hpp"

#include <algorithm>

namespace ambicard {

TableOfMarks::TableOfMarks(const SubgroupLattice& lattice) {
  const auto n = static_cast<Eigen::Index>(lattice.classes().size());
  marks_ = Matrix<Integer>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& K = lattice.subgroup_class(static_cast<std::size_t>(k));
    // |(G/K)^H| = #{conjugates K' of K containing H} * |NK| / |K|.
    const std::size_t fiber = K.normalizer_order / K.order;
    for (Eigen::Index h = 0; h < n; ++h) {
      const auto& H = lattice.representative(static_cast<std::size_t>(h)).elements;
      std::size_t containing = 0;
      for (auto m : K.members) containing += H.subset_of(lattice.subgroup(m).elements);
      marks_(h, k) = Integer(containing * fiber);
    }
  }
  for (Eigen::Index h = 0; h < n; ++h) {
    for (Eigen::Index k = 0; k < h; ++k)
      if (marks_(h, k) != 0) throw InvariantError("table of marks is not upper triangular in class order");
    if (marks_(h, h) != lattice.subgroup_class(static_cast<std::size_t>(h)).weyl_order)
      throw InvariantError("table of marks diagonal differs from |WH|");
  }
  rational_ = marks_.unaryExpr([](const Integer& v) { return Rational(v); });
}

BurnsideRing::Ptr BurnsideRing::create(SubgroupLattice::Ptr lattice) {
  return Ptr(new BurnsideRing(std::move(lattice)));
}

BurnsideRing::Ptr BurnsideRing::create(GroupPtr group, LatticeLimits limits) {
  return create(SubgroupLattice::compute(std::move(group), limits));
}

// ---------------------------------------------------------------- elements

BurnsideElement::BurnsideElement(BurnsideRing::Ptr ring, Vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<std::size_t>(coeffs_.size()) != ring_->rank())
    throw InputError("coefficient vector length does not match the number of subgroup classes");
}

BurnsideElement BurnsideElement::zero(BurnsideRing::Ptr ring) {
  const auto n = static_cast<Eigen::Index>(ring->rank());
  return BurnsideElement(std::move(ring), Vector<Rational>::Constant(n, Rational(0)));
}

BurnsideElement BurnsideElement::one(BurnsideRing::Ptr ring) {
  const std::size_t top = ring->lattice().whole_class();
  return basis(std::move(ring), top);
}

BurnsideElement BurnsideElement::basis(BurnsideRing::Ptr ring, std::size_t c) {
  if (c >= ring->rank()) throw InputError("subgroup class index out of range");
  BurnsideElement x = zero(std::move(ring));
  x.coeffs_(static_cast<Eigen::Index>(c)) = 1;
  return x;
}

BurnsideElement BurnsideElement::from_gset(BurnsideRing::Ptr ring, const GSet& X) {
  BurnsideElement x = zero(ring);
  for (auto [c, count] : orbit_decompose(X, ring->lattice()))
    x.coeffs_(static_cast<Eigen::Index>(c)) += Rational(static_cast<long long>(count));
  return x;
}

bool BurnsideElement::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return is_integer(r); });
}

bool BurnsideElement::is_p_integral(std::uint64_t p) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [p](const Rational& r) { return ambicard::is_p_integral(r, p); });
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

namespace {

void require_same_ring(const BurnsideRing::Ptr& a, const BurnsideRing::Ptr& b) {
  if (a != b) throw InputError("Burnside elements belong to different rings");
}

}  // namespace

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& other) {
  require_same_ring(ring_, other.ring_);
  coeffs_ += other.coeffs_;
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& other) {
  require_same_ring(ring_, other.ring_);
  coeffs_ -= other.coeffs_;
  return *this;
}

BurnsideElement operator*(const Rational& s, BurnsideElement x) {
  x.coeffs_ *= s;
  return x;
}

BurnsideElement operator*(const BurnsideElement& x, const BurnsideElement& y) { return mul(x, y); }

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

MarksVector marks(const BurnsideElement& x) {
  return MarksVector{x.ring_ptr(), x.ring().table().rational_matrix() * x.coeffs()};
}

BurnsideElement from_marks(const MarksVector& v) {
  if (static_cast<std::size_t>(v.values.size()) != v.ring->rank())
    throw InputError("marks vector length does not match the number of subgroup classes");
  Vector<Rational> coeffs = v.ring->table().rational_matrix().triangularView<Eigen::Upper>().solve(v.values);
  return BurnsideElement(v.ring, std::move(coeffs));
}

BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) {
  require_same_ring(x.ring_ptr(), y.ring_ptr());
  MarksVector mx = marks(x);
  mx.values = mx.values.cwiseProduct(marks(y).values);
  return from_marks(mx);
}

BurnsideElement invert(const BurnsideElement& x) { return pow(x, -1); }

BurnsideElement pow(const BurnsideElement& x, int e) {
  MarksVector m = marks(x);
  for (Eigen::Index c = 0; c < m.values.size(); ++c) {
    if (e < 0 && m.values(c) == 0)
      throw NotInvertibleError("element is not invertible: its mark at class (" + std::to_string(c) + ") of order " +
                               std::to_string(x.ring().lattice().subgroup_class(c).order) + " is 0");
    m.values(c) = ambicard::pow(m.values(c), e);
  }
  return from_marks(m);
}

// ---------------------------------------------------------------- congruences

bool CongruenceReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const CongruenceCheck& c) { return c.holds; });
}

std::optional<CongruenceCheck> CongruenceReport::witness() const {
  for (const auto& c : checks)
    if (!c.holds) return c;
  return std::nullopt;
}

CongruenceReport check_counting_congruence(const GSet& X) {
  CountingIdentity identity = counting_identity(X);
  CongruenceCheck check;
  check.subgroup_class = 0;
  check.sum = Rational(static_cast<long long>(identity.fixed_point_sum));
  check.modulus = X.group().order();
  check.holds = identity.fixed_point_sum % X.group().order() == 0 && identity.holds();
  return CongruenceReport{{check}};
}

CongruenceReport check_counting_congruence(const MarksVector& f) {
  const SubgroupLattice& L = f.ring->lattice();
  const PermGroup& G = L.group();
  CongruenceCheck check;
  check.subgroup_class = L.trivial_class();
  check.modulus = G.order();
  bool integral = true;
  for (PermGroup::Element g = 0; g < G.order(); ++g) {
    const Rational& value = f.values(static_cast<Eigen::Index>(L.class_of(join(G, trivial_subgroup(G), g))));
    integral = integral && is_integer(value);
    check.sum += value;
  }
  check.holds = integral && is_integer(check.sum) && numer(check.sum) % check.modulus == 0;
  return CongruenceReport{{check}};
}

CongruenceReport check_wh_congruences(const MarksVector& f, std::optional<std::uint64_t> p) {
  const SubgroupLattice& L = f.ring->lattice();
  const PermGroup& G = L.group();
  if (p && !is_prime(*p)) throw InputError(std::to_string(*p) + " is not prime");
  auto admissible = [&](const Rational& v) { return p ? is_p_integral(v, *p) : is_integer(v); };

  CongruenceReport report;
  for (std::size_t c = 0; c < L.classes().size(); ++c) {
    const std::size_t h = L.subgroup_class(c).representative;
    const Subgroup& H = L.subgroup(h);
    Subgroup N = normalizer(G, H);

    // Subgroup K with H <= K <= NH whose image in WH is the acting group.
    const Subgroup* K = &N;
    std::uint64_t modulus = N.order() / H.order();
    if (p) {
      modulus = p_part(modulus, *p);
      const std::size_t target = H.order() * modulus;
      K = nullptr;
      for (auto j : L.poset()->above(h)) {
        const Subgroup& candidate = L.subgroup(j);
        if (candidate.order() == target && candidate.elements.subset_of(N.elements)) {
          K = &candidate;
          break;
        }
      }
      if (!K) throw InvariantError("no Sylow subgroup of the Weyl group found");
    }

    CongruenceCheck check;
    check.subgroup_class = c;
    check.modulus = modulus;
    bool values_ok = true;
    ElementSet covered(G.order());
    const auto h_members = H.elements.indices();
    for (auto n : K->elements.indices()) {
      if (covered.contains(n)) continue;
      for (auto x : h_members) covered.insert(G.mul(n, x));
      const Rational& value = f.values(static_cast<Eigen::Index>(L.class_of(join(G, H, n))));
      values_ok = values_ok && admissible(value);
      check.sum += value;
    }
    check.holds = values_ok && admissible(check.sum) && numer(check.sum) % modulus == 0;
    report.checks.push_back(std::move(check));
  }
  return report;
}

// ---------------------------------------------------------------- idempotents

BurnsideElement idempotent_rational(const BurnsideRing::Ptr& ring, std::size_t c) {
  const SubgroupLattice& L = ring->lattice();
  const auto& cls = L.subgroup_class(c);
  const IncidenceFunction& mu = L.mobius();
  BurnsideElement e = BurnsideElement::zero(ring);
  Vector<Rational> coeffs = e.coeffs();
  for (auto d : L.poset()->below(cls.representative))
    coeffs(static_cast<Eigen::Index>(L.class_of(d))) +=
        Rational(static_cast<long long>(L.subgroup(d).order())) * mu(d, cls.representative);
  coeffs /= Rational(static_cast<long long>(cls.normalizer_order));
  return BurnsideElement(ring, std::move(coeffs));
}

BurnsideElement idempotent_p_local(const BurnsideRing::Ptr& ring, std::size_t c, std::uint64_t p) {
  const SubgroupLattice& L = ring->lattice();
  if (!L.is_p_perfect_class(c, p))
    throw InputError("subgroup class " + std::to_string(c) + " is not " + std::to_string(p) + "-perfect");
  const auto& cls = L.subgroup_class(c);
  const auto& residuals = L.p_residuals(p);
  const IncidenceFunction& mu = L.mobius();
  PosetPtr poset = L.poset();

  // Accumulates |D| * mu(D, S) over all S with O^p(S) = H and all D <= S,
  // which is |D| * lambda(D, H) summed by class of D.
  Vector<Rational> coeffs = Vector<Rational>::Constant(static_cast<Eigen::Index>(ring->rank()), Rational(0));
  for (std::size_t s = 0; s < L.subgroups().size(); ++s) {
    if (residuals[s] != cls.representative) continue;
    for (auto d : poset->below(s))
      coeffs(static_cast<Eigen::Index>(L.class_of(d))) +=
          Rational(static_cast<long long>(L.subgroup(d).order())) * mu(d, s);
  }
  coeffs /= Rational(static_cast<long long>(cls.normalizer_order));
  return BurnsideElement(ring, std::move(coeffs));
}

std::vector<ClassIdempotent> rational_idempotents(const BurnsideRing::Ptr& ring) {
  std::vector<ClassIdempotent> out;
  for (std::size_t c = 0; c < ring->rank(); ++c) out.push_back({c, idempotent_rational(ring, c)});
  return out;
}

std::vector<ClassIdempotent> p_local_idempotents(const BurnsideRing::Ptr& ring, std::uint64_t p) {
  std::vector<ClassIdempotent> out;
  for (std::size_t c = 0; c < ring->rank(); ++c)
    if (ring->lattice().is_p_perfect_class(c, p)) out.push_back({c, idempotent_p_local(ring, c, p)});
  return out;
}

}  // namespace ambicard
