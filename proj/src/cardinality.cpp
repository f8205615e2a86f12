#include "ambicard/cardinality.hpp"

#include <algorithm>
#include <set>

namespace ambicard {

// ---------------------------------------------------------------- CardExpr

CardExpr::CardExpr(std::uint64_t prime) : prime_(prime) {
  if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
}

CardExpr CardExpr::constant(std::uint64_t prime, Rational c) { return monomial(prime, std::move(c), 0); }

CardExpr CardExpr::monomial(std::uint64_t prime, Rational c, int exponent) {
  CardExpr e(prime);
  e.add_term(exponent, c);
  return e;
}

Rational CardExpr::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CardExpr::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CardExpr::require_same_prime(const CardExpr& other) const {
  if (prime_ != other.prime_)
    throw InputError("cannot combine expressions in |BC_" + std::to_string(prime_) + "| and |BC_" +
                     std::to_string(other.prime_) + "|");
}

CardExpr& CardExpr::operator+=(const CardExpr& other) {
  require_same_prime(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CardExpr& CardExpr::operator-=(const CardExpr& other) {
  require_same_prime(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CardExpr& CardExpr::operator*=(const CardExpr& other) {
  require_same_prime(other);
  CardExpr product(prime_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) product.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(product.terms_);
  return *this;
}

CardExpr operator*(const Rational& s, CardExpr a) {
  if (s == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

std::string CardExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string power = e == 1 ? "x" : "x^" + std::to_string(e);
    if (e == 0)
      out += ambicard::to_string(magnitude);
    else if (magnitude == 1)
      out += power;
    else
      out += ambicard::to_string(magnitude) + "*" + power;
  }
  return out;
}

Rational evaluate(const CardExpr& e, const Rational& x0) {
  Rational sum(0);
  for (const auto& [exponent, c] : e.terms()) {
    if (exponent < 0 && x0 == 0) throw NotInvertibleError("cannot substitute x = 0 into a negative power of x");
    sum += c * pow(x0, exponent);
  }
  return sum;
}

// ---------------------------------------------------------------- |BG|

CardExpr card_b_pgroup(std::size_t order, std::uint64_t p) {
  const int m = log_p(order, p);
  if (m < 0) throw InputError("a group of order " + std::to_string(order) + " is not a " + std::to_string(p) + "-group");
  return CardExpr::monomial(p, Rational(1), m);
}

CardExpr card_b_pgroup(const Subgroup& P, std::uint64_t p) { return card_b_pgroup(P.order(), p); }

BurnsideElement bg_weights(const BurnsideRing::Ptr& ring, std::uint64_t p) {
  return idempotent_p_local(ring, ring->lattice().trivial_class(), p);
}

BurnsideElement sylow_inclusion_exclusion(const BurnsideRing::Ptr& ring, std::uint64_t p, std::size_t sylow_cap) {
  const SubgroupLattice& L = ring->lattice();
  const auto sylows = L.sylow_subgroups(p);
  if (sylows.size() > sylow_cap)
    throw ResourceError(std::to_string(sylows.size()) + " Sylow " + std::to_string(p) +
                        "-subgroups exceed the inclusion-exclusion cap of " + std::to_string(sylow_cap) +
                        "; use the idempotent route");

  // Signed count of subsets per intersection, built one Sylow at a time.
  std::map<std::size_t, Integer> signed_subsets;
  for (auto q : sylows) {
    std::map<std::size_t, Integer> next = signed_subsets;
    for (const auto& [i, count] : signed_subsets) {
      auto meet = L.find(L.subgroup(i).elements & L.subgroup(q).elements);
      if (!meet) throw InvariantError("intersection of subgroups is missing from the lattice");
      next[*meet] -= count;
    }
    next[q] += 1;
    signed_subsets = std::move(next);
  }

  BurnsideElement result = BurnsideElement::zero(ring);
  const Rational group_order(static_cast<long long>(L.group().order()));
  for (const auto& [i, count] : signed_subsets) {
    if (count == 0) continue;
    const Rational weight = Rational(count) * Rational(static_cast<long long>(L.subgroup(i).order())) / group_order;
    result += weight * BurnsideElement::basis(ring, L.class_of(i));
  }
  return result;
}

CardExpr integrate_over_bp(const BurnsideElement& b, std::uint64_t p) {
  const SubgroupLattice& L = b.ring().lattice();
  CardExpr result(p);
  for (std::size_t c = 0; c < L.classes().size(); ++c) {
    const Rational& coeff = b.coeff(c);
    if (coeff == 0) continue;
    result += coeff * card_b_pgroup(L.subgroup_class(c).order, p);
  }
  return result;
}

CardExpr card_bg(const BurnsideRing::Ptr& ring, std::uint64_t p) { return integrate_over_bp(bg_weights(ring, p), p); }

// ---------------------------------------------------------------- spaces

namespace {

std::uint32_t find_identity(const AbelianModule::Table& table) {
  const std::size_t n = table.size();
  for (std::uint32_t e = 0; e < n; ++e) {
    bool is_identity = true;
    for (std::uint32_t x = 0; x < n && is_identity; ++x) is_identity = table[e][x] == x;
    if (is_identity) return e;
  }
  throw InputError("operation table has no identity element");
}

std::vector<Perm> checked_images(std::vector<Perm> images, std::size_t size) {
  for (const auto& img : images)
    if (img.degree() != size) throw InputError("action image has the wrong length for the homotopy group");
  return images;
}

}  // namespace

AbelianModule::AbelianModule(GroupPtr group, Table table, std::vector<Perm> generator_images)
    : table_(std::move(table)),
      identity_(find_identity(table_)),
      action_(std::move(group), table_.size(), checked_images(std::move(generator_images), table_.size()), identity_) {
  const std::size_t n = table_.size();
  if (n > max_size) throw ResourceError("homotopy group of order " + std::to_string(n) + " exceeds the cap of " +
                                        std::to_string(max_size));
  auto triple = [](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
  };
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("operation table is not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n) throw InputError("operation table entry out of range");
      if (seen[v]) throw InputError("operation table row is not a permutation, so inverses fail");
      seen[v] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] != table_[b][a]) throw InputError("operation table is not commutative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("operation table is not associative at " + triple(a, b, c));
    }
  const auto& images = action_.generator_images();
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (images[k](table_[a][b]) != table_[images[k](a)][images[k](b)])
          throw InputError("generator " + std::to_string(k) + " does not act by an automorphism: f(a*b) != f(a)*f(b) for (a, b) = (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
  element_order_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (std::uint32_t x = a; x != identity_; x = table_[x][a]) ++k;
    element_order_[a] = k;
  }
}

AbelianModule primary_part(const AbelianModule& A, std::uint64_t q) {
  if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
  std::vector<std::uint32_t> kept;
  std::vector<std::uint32_t> new_index(A.size(), 0);
  for (std::uint32_t a = 0; a < A.size(); ++a)
    if (log_p(A.element_order(a), q) >= 0) {
      new_index[a] = static_cast<std::uint32_t>(kept.size());
      kept.push_back(a);
    }
  AbelianModule::Table table(kept.size(), std::vector<std::uint32_t>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) table[i][j] = new_index[A.table()[kept[i]][kept[j]]];
  std::vector<Perm> images;
  for (const auto& img : A.action().generator_images()) {
    std::vector<Perm::Point> restricted(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) restricted[i] = new_index[img(kept[i])];
    images.emplace_back(restricted);
  }
  return AbelianModule(A.action().group_ptr(), std::move(table), std::move(images));
}

SpaceSpec::SpaceSpec(GroupPtr group, std::vector<HomotopyGroup> homotopy)
    : group_(std::move(group)), homotopy_(std::move(homotopy)) {
  std::set<unsigned> levels;
  for (const auto& h : homotopy_) {
    if (h.level < 2) throw InputError("higher homotopy levels start at 2, got " + std::to_string(h.level));
    if (!levels.insert(h.level).second) throw InputError("homotopy level " + std::to_string(h.level) + " given twice");
    if (h.module.action().group().elements() != group_->elements() ||
        h.module.action().group().generators() != group_->generators())
      throw InputError("homotopy module at level " + std::to_string(h.level) + " is over a different group");
  }
  std::sort(homotopy_.begin(), homotopy_.end(), [](const auto& a, const auto& b) { return a.level < b.level; });
}

unsigned SpaceSpec::truncation() const { return homotopy_.empty() ? 1 : homotopy_.back().level; }

CardExpr card_space(const SpaceSpec& space, std::uint64_t p, LatticeLimits limits) {
  return card_space(space, BurnsideRing::create(space.group_ptr(), limits), p);
}

CardExpr card_space(const SpaceSpec& space, const BurnsideRing::Ptr& ring, std::uint64_t p) {
  if (ring->group().elements() != space.group().elements())
    throw InputError("Burnside ring is over a different group than the space");
  const SubgroupLattice& L = ring->lattice();

  int prefactor_exponent = 0;
  struct Factor {
    int exponent;
    AbelianModule module;
  };
  std::vector<Factor> factors;
  for (const auto& [level, module] : space.homotopy()) {
    const int sign = level % 2 == 0 ? 1 : -1;  // (-1)^level
    const std::size_t n = module.size();
    prefactor_exponent += -sign * log_p(p_part(n, p), p);
    std::size_t rest = n / p_part(n, p);
    for (std::uint64_t q = 2; rest > 1; ++q) {
      if (rest % q != 0) continue;
      while (rest % q == 0) rest /= q;
      factors.push_back({sign, primary_part(module, q)});
    }
  }

  const BurnsideElement weights = bg_weights(ring, p);
  CardExpr sum(p);
  for (std::size_t c = 0; c < L.classes().size(); ++c) {
    const Rational& w = weights.coeff(c);
    if (w == 0) continue;
    const Subgroup& D = L.representative(c);
    auto d_group = std::make_shared<PermGroup>(as_group(L.group(), D));
    auto d_ring = BurnsideRing::create(d_group);
    BurnsideElement product = BurnsideElement::one(d_ring);
    for (const auto& f : factors) {
      GSet restricted = restrict(f.module.action(), D, d_group);
      product = product * pow(BurnsideElement::from_gset(d_ring, restricted), f.exponent);
    }
    sum += w * integrate_over_bp(product, p);
  }
  return CardExpr::monomial(p, Rational(1), prefactor_exponent) * sum;
}

Rational homotopy_cardinality(const SpaceSpec& space) {
  Rational value = Rational(1) / Rational(static_cast<long long>(space.group().order()));
  for (const auto& [level, module] : space.homotopy())
    value *= pow(Rational(static_cast<long long>(module.size())), level % 2 == 0 ? 1 : -1);
  return value;
}

}  // namespace ambicard
