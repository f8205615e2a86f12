#include "ambicard/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace ambicard {

namespace {

std::unordered_map<std::string, FinitePoset::Index> build_index(const std::vector<std::string>& ids) {
  std::unordered_map<std::string, FinitePoset::Index> index;
  for (FinitePoset::Index i = 0; i < ids.size(); ++i)
    if (!index.emplace(ids[i], i).second) throw InputError("duplicate poset element id '" + ids[i] + "'");
  return index;
}

}  // namespace

FinitePoset FinitePoset::from_relations(std::vector<std::string> ids,
                                        const std::vector<std::pair<Index, Index>>& relations) {
  FinitePoset poset;
  poset.index_ = build_index(ids);
  poset.ids_ = std::move(ids);
  const std::size_t n = poset.ids_.size();

  std::vector<std::vector<Index>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [x, y] : relations) {
    if (x >= n || y >= n) throw InputError("poset relation refers to an unknown element");
    if (x == y) continue;
    succ[x].push_back(y);
    ++indegree[y];
  }

  // Kahn's algorithm; leftover vertices sit on a cycle.
  std::vector<Index> topo;
  topo.reserve(n);
  std::queue<Index> ready;
  for (Index x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push(x);
  while (!ready.empty()) {
    Index x = ready.front();
    ready.pop();
    topo.push_back(x);
    for (Index y : succ[x])
      if (--indegree[y] == 0) ready.push(y);
  }
  if (topo.size() != n) {
    for (Index x = 0; x < n; ++x)
      if (indegree[x] != 0) throw InputError("poset relations contain a cycle through '" + poset.ids_[x] + "'");
  }

  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Index x = *it;
    reach[x][x / 64] |= std::uint64_t{1} << (x % 64);
    for (Index y : succ[x])
      for (std::size_t w = 0; w < words; ++w) reach[x][w] |= reach[y][w];
  }

  poset.above_.assign(n, {});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (reach[x][y / 64] >> (y % 64) & 1) poset.above_[x].push_back(y);
  poset.finalize();
  return poset;
}

FinitePoset FinitePoset::from_relations(std::vector<std::string> ids,
                                        const std::vector<std::pair<std::string, std::string>>& relations) {
  auto index = build_index(ids);
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw InputError("unknown poset element '" + a + "'");
    if (ib == index.end()) throw InputError("unknown poset element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_relations(std::move(ids), pairs);
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> ids, std::vector<std::vector<Index>> above) {
  FinitePoset poset;
  poset.index_ = build_index(ids);
  poset.ids_ = std::move(ids);
  const std::size_t n = poset.ids_.size();
  if (above.size() != n) throw InputError("up-set list does not match element count");
  for (Index x = 0; x < n; ++x) {
    auto& up = above[x];
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
    if (!up.empty() && up.back() >= n) throw InputError("up-set refers to an unknown element");
    if (!std::binary_search(up.begin(), up.end(), x))
      throw InputError("order is not reflexive at '" + poset.ids_[x] + "'");
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y : above[x]) {
      if (y != x && std::binary_search(above[y].begin(), above[y].end(), x))
        throw InputError("order is not antisymmetric: '" + poset.ids_[x] + "', '" + poset.ids_[y] + "'");
      if (!std::includes(above[x].begin(), above[x].end(), above[y].begin(), above[y].end()))
        throw InputError("order is not transitive above '" + poset.ids_[x] + "'");
    }
  }
  poset.above_ = std::move(above);
  poset.finalize();
  return poset;
}

void FinitePoset::finalize() {
  const std::size_t n = ids_.size();
  below_.assign(n, {});
  for (Index x = 0; x < n; ++x)
    for (Index y : above_[x]) below_[y].push_back(x);

  pair_offset_.assign(n + 1, 0);
  for (Index x = 0; x < n; ++x) pair_offset_[x + 1] = pair_offset_[x] + above_[x].size();

  // x < y implies below(x) is a proper subset of below(y).
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), Index{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Index a, Index b) { return below_[a].size() < below_[b].size(); });
  rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank_[order_[r]] = r;
}

FinitePoset::Index FinitePoset::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw InputError("unknown poset element '" + std::string(id) + "'");
  return it->second;
}

bool FinitePoset::leq(Index x, Index y) const {
  return std::binary_search(above_[x].begin(), above_[x].end(), y);
}

std::size_t FinitePoset::pair_slot(Index x, Index y) const {
  const auto& up = above_[x];
  auto it = std::lower_bound(up.begin(), up.end(), y);
  if (it == up.end() || *it != y) return npos;
  return pair_offset_[x] + static_cast<std::size_t>(it - up.begin());
}

IncidenceFunction::IncidenceFunction(PosetPtr poset)
    : poset_(std::move(poset)), values_(poset_->comparable_pair_count(), Rational(0)) {}

Rational IncidenceFunction::operator()(Index x, Index y) const {
  std::size_t s = poset_->pair_slot(x, y);
  return s == FinitePoset::npos ? Rational(0) : values_[s];
}

Rational& IncidenceFunction::slot(Index x, Index y) {
  std::size_t s = poset_->pair_slot(x, y);
  if (s == FinitePoset::npos)
    throw InputError("incidence function has no value off the order relation ('" + poset_->id(x) + "' not <= '" +
                     poset_->id(y) + "')");
  return values_[s];
}

void IncidenceFunction::set(Index x, Index y, Rational value) { slot(x, y) = std::move(value); }

namespace {

void require_same_poset(const IncidenceFunction& f, const IncidenceFunction& g) {
  if (f.poset_ptr() != g.poset_ptr() && !(f.poset() == g.poset()))
    throw InputError("incidence functions are defined over different posets");
}

}  // namespace

IncidenceFunction& IncidenceFunction::operator+=(const IncidenceFunction& other) {
  require_same_poset(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

IncidenceFunction operator*(const Rational& s, IncidenceFunction f) {
  for (auto& v : f.values_) v *= s;
  return f;
}

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
  return (a.poset_ == b.poset_ || *a.poset_ == *b.poset_) && a.values_ == b.values_;
}

IncidenceFunction delta(const PosetPtr& poset) {
  IncidenceFunction f(poset);
  for (FinitePoset::Index x = 0; x < poset->size(); ++x) f.set(x, x, Rational(1));
  return f;
}

IncidenceFunction zeta(const PosetPtr& poset) {
  IncidenceFunction f(poset);
  for (FinitePoset::Index x = 0; x < poset->size(); ++x)
    for (auto y : poset->above(x)) f.set(x, y, Rational(1));
  return f;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same_poset(f, g);
  const FinitePoset& P = f.poset();
  IncidenceFunction h(f.poset_ptr());
  for (FinitePoset::Index x = 0; x < P.size(); ++x) {
    for (auto y : P.above(x)) {
      Rational sum(0);
      for (auto z : P.above(x))
        if (P.leq(z, y)) sum += f(x, z) * g(z, y);
      h.set(x, y, std::move(sum));
    }
  }
  return h;
}

IncidenceFunction mobius(const PosetPtr& poset) {
  const FinitePoset& P = *poset;
  IncidenceFunction mu(poset);
  for (FinitePoset::Index x = 0; x < P.size(); ++x) {
    std::vector<FinitePoset::Index> up = P.above(x);
    std::sort(up.begin(), up.end(), [&](auto a, auto b) { return P.rank(a) < P.rank(b); });
    for (auto y : up) {
      if (y == x) {
        mu.set(x, x, Rational(1));
        continue;
      }
      Rational sum(0);
      for (auto z : P.below(y))
        if (z != y && P.leq(x, z)) sum += mu(x, z);
      mu.set(x, y, -sum);
    }
  }
  return mu;
}

ElementFunction sum_below(const FinitePoset& poset, const ElementFunction& g) {
  if (g.size() != poset.size()) throw InputError("element function size does not match poset");
  ElementFunction f(poset.size(), Rational(0));
  for (FinitePoset::Index y = 0; y < poset.size(); ++y)
    for (auto x : poset.below(y)) f[y] += g[x];
  return f;
}

ElementFunction sum_above(const FinitePoset& poset, const ElementFunction& g) {
  if (g.size() != poset.size()) throw InputError("element function size does not match poset");
  ElementFunction f(poset.size(), Rational(0));
  for (FinitePoset::Index x = 0; x < poset.size(); ++x)
    for (auto y : poset.above(x)) f[x] += g[y];
  return f;
}

ElementFunction mobius_invert_down(const IncidenceFunction& mu, const ElementFunction& f) {
  const FinitePoset& P = mu.poset();
  if (f.size() != P.size()) throw InputError("element function size does not match poset");
  ElementFunction g(P.size(), Rational(0));
  for (FinitePoset::Index y = 0; y < P.size(); ++y)
    for (auto x : P.below(y)) g[y] += mu(x, y) * f[x];
  return g;
}

ElementFunction mobius_invert_up(const IncidenceFunction& mu, const ElementFunction& f) {
  const FinitePoset& P = mu.poset();
  if (f.size() != P.size()) throw InputError("element function size does not match poset");
  ElementFunction g(P.size(), Rational(0));
  for (FinitePoset::Index x = 0; x < P.size(); ++x)
    for (auto y : P.above(x)) g[x] += mu(x, y) * f[y];
  return g;
}

PosetPtr subset_poset(unsigned set_size) {
  const unsigned count = 1u << set_size;
  std::vector<std::string> ids;
  for (unsigned mask = 0; mask < count; ++mask) {
    std::string id = "{";
    for (unsigned i = 0; i < set_size; ++i) {
      if (!(mask >> i & 1)) continue;
      if (id.size() > 1) id += ",";
      id += std::to_string(i + 1);
    }
    ids.push_back(id + "}");
  }
  return std::make_shared<FinitePoset>(
      FinitePoset::from_order(std::move(ids), [](std::size_t a, std::size_t b) { return (a & ~b) == 0; }));
}

PosetPtr divisor_poset(unsigned n) {
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::vector<std::string> ids;
  for (unsigned d : divisors) ids.push_back(std::to_string(d));
  return std::make_shared<FinitePoset>(FinitePoset::from_order(
      std::move(ids), [&](std::size_t a, std::size_t b) { return divisors[b] % divisors[a] == 0; }));
}

PosetPtr chain_poset(unsigned length) {
  std::vector<std::string> ids;
  std::vector<std::pair<FinitePoset::Index, FinitePoset::Index>> covers;
  for (unsigned i = 0; i < length; ++i) {
    ids.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return std::make_shared<FinitePoset>(FinitePoset::from_relations(std::move(ids), covers));
}

}  // namespace ambicard
