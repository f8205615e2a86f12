#include "ambicard/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace ambicard {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm result = identity(degree);
  for (const auto& cycle : cycles) {
    Perm c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw InputError("cycle point out of range");
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    c = Perm(c.images_);
    result = result * c;
  }
  return result;
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (Point x = 0; x < images_.size(); ++x) inv.images_[images_[x]] = x;
  return inv;
}

bool Perm::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm c;
  c.images_.resize(b.images_.size());
  for (std::size_t x = 0; x < b.images_.size(); ++x) c.images_[x] = a.images_[b.images_[x]];
  return c;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- ElementSet

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

std::vector<std::uint32_t> ElementSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
  return out;
}

std::strong_ordering compare_indices(const ElementSet& a, const ElementSet& b) {
  // Past the common prefix, the set holding the first differing index is
  // smaller unless the other set has no elements left at all.
  auto has_beyond = [](const ElementSet& s, std::size_t word, int bit) {
    std::uint64_t rest = bit == 63 ? 0 : s.words_[word] >> (bit + 1);
    if (rest) return true;
    for (std::size_t k = word + 1; k < s.words_.size(); ++k)
      if (s.words_[k]) return true;
    return false;
  };
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    int bit = std::countr_zero(diff);
    bool a_has = a.words_[w] >> bit & 1;
    const ElementSet& other = a_has ? b : a;
    bool holder_smaller = has_beyond(other, w, bit);
    if (a_has == holder_smaller) return std::strong_ordering::less;
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- PermGroup

namespace {
constexpr std::size_t table_limit = 2048;
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators, std::size_t max_order) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw InputError("generator degree does not match group degree");

  PermGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> found{Perm::identity(degree)};
  seen.insert(found.front());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : G.generators_) {
      Perm y = found[i] * s;
      if (seen.insert(y).second) {
        found.push_back(std::move(y));
        if (found.size() > max_order)
          throw ResourceError("group order exceeds the configured cap of " + std::to_string(max_order));
      }
    }
  }
  std::sort(found.begin(), found.end());
  G.elements_ = std::move(found);
  for (Element i = 0; i < G.elements_.size(); ++i) G.index_.emplace(G.elements_[i], i);

  const std::size_t n = G.elements_.size();
  if (n <= table_limit) {
    G.table_.resize(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) G.table_[a * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);
  }
  G.inverse_.resize(n);
  for (Element a = 0; a < n; ++a) G.inverse_[a] = G.index_.at(G.elements_[a].inverse());
  G.element_order_.resize(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != identity(); x = G.mul(x, a)) ++k;
    G.element_order_[a] = k;
  }
  for (const auto& s : G.generators_) G.generator_elements_.push_back(G.index_.at(s));
  return G;
}

PermGroup::Element PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InputError("permutation is not an element of the group");
  return it->second;
}

PermGroup::Element PermGroup::mul(Element a, Element b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

// ---------------------------------------------------------------- subgroups

namespace {

// Grows `H` (a subgroup) by `g`, returning the closure; assumes g not in H.
void extend(const PermGroup& G, Subgroup& H, PermGroup::Element g) {
  H.generators.push_back(g);
  std::vector<PermGroup::Element> members = H.elements.indices();
  // Breadth-first closure under right multiplication by all generators.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : H.generators) {
      auto y = G.mul(members[i], s);
      if (!H.elements.contains(y)) {
        H.elements.insert(y);
        members.push_back(y);
      }
    }
  }
}

template <typename Range>
Subgroup closure_of(const PermGroup& G, const Range& candidates) {
  Subgroup H = trivial_subgroup(G);
  for (auto g : candidates)
    if (!H.contains(g)) extend(G, H, g);
  return H;
}

}  // namespace

Subgroup trivial_subgroup(const PermGroup& G) {
  Subgroup H{ElementSet(G.order()), {}};
  H.elements.insert(PermGroup::identity());
  return H;
}

Subgroup whole_group(const PermGroup& G) {
  Subgroup H = closure_of(G, G.generator_elements());
  return H;
}

Subgroup generate(const PermGroup& G, std::span<const PermGroup::Element> generators) {
  return closure_of(G, generators);
}

Subgroup join(const PermGroup& G, const Subgroup& H, PermGroup::Element g) {
  if (H.contains(g)) return H;
  Subgroup K = H;
  extend(G, K, g);
  return K;
}

Subgroup join(const PermGroup& G, const Subgroup& H, const Subgroup& K) {
  Subgroup J = H;
  for (auto g : K.generators)
    if (!J.contains(g)) extend(G, J, g);
  return J;
}

Subgroup intersect(const PermGroup& G, const Subgroup& H, const Subgroup& K) {
  return closure_of(G, (H.elements & K.elements).indices());
}

Subgroup conjugate(const PermGroup& G, const Subgroup& H, PermGroup::Element g) {
  Subgroup C{ElementSet(G.order()), {}};
  const auto g_inv = G.inverse(g);
  for (auto h : H.elements.indices()) C.elements.insert(G.mul(G.mul(g, h), g_inv));
  for (auto h : H.generators) C.generators.push_back(G.mul(G.mul(g, h), g_inv));
  return C;
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  std::vector<PermGroup::Element> members;
  for (PermGroup::Element g = 0; g < G.order(); ++g) {
    const auto g_inv = G.inverse(g);
    bool normalizes = std::all_of(H.generators.begin(), H.generators.end(),
                                  [&](auto h) { return H.contains(G.mul(G.mul(g, h), g_inv)); });
    if (normalizes) members.push_back(g);
  }
  return closure_of(G, members);
}

bool is_normal(const PermGroup& G, const Subgroup& K, const Subgroup& H) {
  for (auto k : K.generators) {
    const auto k_inv = G.inverse(k);
    for (auto h : H.generators)
      if (!H.contains(G.mul(G.mul(k, h), k_inv))) return false;
  }
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

int log_p(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

bool is_p_group(const Subgroup& H, std::uint64_t p) { return log_p(H.order(), p) >= 0; }

Subgroup p_residual(const PermGroup& G, const Subgroup& H, std::uint64_t p) {
  std::vector<PermGroup::Element> coprime;
  for (auto h : H.elements.indices())
    if (G.element_order(h) % p != 0) coprime.push_back(h);
  return closure_of(G, coprime);
}

bool is_p_perfect(const PermGroup& G, const Subgroup& H, std::uint64_t p) {
  return p_residual(G, H, p).order() == H.order();
}

Subgroup derived_subgroup(const PermGroup& G, const Subgroup& H) {
  Subgroup D = trivial_subgroup(G);
  const auto members = H.elements.indices();
  for (auto a : members) {
    for (auto b : members) {
      auto c = G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b));
      if (!D.contains(c)) extend(G, D, c);
    }
    if (D.order() == H.order()) break;
  }
  return D;
}

Subgroup solvable_residual(const PermGroup& G, const Subgroup& H) {
  Subgroup current = H;
  for (;;) {
    Subgroup next = derived_subgroup(G, current);
    if (next.order() == current.order()) return current;
    current = std::move(next);
  }
}

PermGroup as_group(const PermGroup& G, const Subgroup& H) {
  std::vector<Perm> gens;
  for (auto h : H.generators) gens.push_back(G.element(h));
  return PermGroup::closure(G.degree(), std::move(gens), H.order());
}

// ---------------------------------------------------------------- families

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw InputError("symmetric group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<Perm::Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Perm::Point{0});
    if (n > 2) gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return PermGroup::closure(n, std::move(gens));
}

PermGroup alternating_group(unsigned n) {
  if (n == 0) throw InputError("alternating group needs n >= 1");
  std::vector<Perm> gens;
  for (Perm::Point i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup::closure(n, std::move(gens));
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw InputError("cyclic group needs n >= 1");
  std::vector<Perm::Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Perm::Point{0});
  std::vector<Perm> gens;
  if (n > 1) gens.push_back(Perm::from_cycles(n, {cycle}));
  return PermGroup::closure(n, std::move(gens));
}

PermGroup dihedral_group(unsigned n) {
  if (n == 0) throw InputError("dihedral group needs n >= 1");
  if (n == 1) return cyclic_group(2);
  if (n == 2) return PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  std::vector<Perm::Point> rotation(n), reflection(n);
  for (Perm::Point i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return PermGroup::closure(n, {Perm(rotation), Perm(reflection)});
}

PermGroup general_linear_2(unsigned p) {
  if (!is_prime(p)) throw InputError("GL2 needs a prime field size");
  // Points are the nonzero vectors (a, b), indexed as a * p + b - 1.
  auto index = [p](unsigned a, unsigned b) { return static_cast<Perm::Point>(a * p + b - 1); };
  auto matrix_action = [&](unsigned m00, unsigned m01, unsigned m10, unsigned m11) {
    std::vector<Perm::Point> images(p * p - 1);
    for (unsigned a = 0; a < p; ++a)
      for (unsigned b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        images[index(a, b)] = index((m00 * a + m01 * b) % p, (m10 * a + m11 * b) % p);
      }
    return Perm(images);
  };
  unsigned root = 1;
  for (unsigned g = 1; g < p; ++g) {
    unsigned k = 1, x = g;
    while (x != 1) {
      x = x * g % p;
      ++k;
    }
    if (k == p - 1) {
      root = g;
      break;
    }
  }
  return PermGroup::closure(p * p - 1, {matrix_action(1, 1, 0, 1), matrix_action(1, 0, 1, 1), matrix_action(root, 0, 0, 1)});
}

PermGroup quaternion_group() {
  // Elements s * u with s in {+1, -1} and u in {1, i, j, k}; index u + 4 * [s < 0].
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_product[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left_mult = [&](int unit) {
    std::vector<Perm::Point> images(8);
    for (int x = 0; x < 8; ++x) {
      int u = x % 4, s = x < 4 ? 1 : -1;
      int product_sign = s * sign_product[unit][u];
      images[x] = static_cast<Perm::Point>(unit_product[unit][u] + (product_sign < 0 ? 4 : 0));
    }
    return Perm(images);
  };
  return PermGroup::closure(8, {left_mult(1), left_mult(2)});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Perm::Point> images(degree);
    std::iota(images.begin(), images.end(), Perm::Point{0});
    for (std::size_t x = 0; x < a.degree(); ++x) images[x] = g(static_cast<Perm::Point>(x));
    gens.emplace_back(images);
  }
  for (const auto& g : b.generators()) {
    std::vector<Perm::Point> images(degree);
    std::iota(images.begin(), images.end(), Perm::Point{0});
    for (std::size_t x = 0; x < b.degree(); ++x)
      images[a.degree() + x] = static_cast<Perm::Point>(a.degree() + g(static_cast<Perm::Point>(x)));
    gens.emplace_back(images);
  }
  return PermGroup::closure(degree, std::move(gens));
}

}  // namespace ambicard
