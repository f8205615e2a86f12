// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ambicard/cache.hpp"
#include "ambicard/cardinality.hpp"
#include "ambicard/io.hpp"
#include "cli_runner.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "random_posets.hpp"

using namespace ambicard;
namespace fs = std::filesystem;

namespace {

/// Collects failures; the first few are reported on the criterion line.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string summary() const {
    if (passed()) return std::to_string(checks_) + " checks";
    std::string out = std::to_string(failures_.size()) + "/" + std::to_string(checks_) + " failed:";
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) out += " [" + failures_[i] + "]";
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

const std::string data = AMBICARD_TEST_DATA;

const std::vector<std::string> space_files{"s3_on_c2cubed.json",     "trivial_pi2_c3.json",    "trivial_pi2_c3_pi3_c5.json",
                                          "c2_inverting_c3.json",   "c2_on_c6_with_pi4.json", "s3_sign_on_c3.json"};

std::string label(const std::string& name, std::uint64_t p) { return name + " p=" + std::to_string(p); }

CardExpr linear(std::uint64_t p, Rational a, Rational b) { return CardExpr::monomial(p, a, 1) + CardExpr::constant(p, b); }

void mobius_golden(Verdict& v) {
  auto b3 = subset_poset(3);
  auto mu = mobius(b3);
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < b3->size(); ++x)
    for (std::size_t y : b3->above(x)) {
      ++pairs;
      // the interval [x, y] is a Boolean lattice on |y - x| atoms
      std::size_t interval = 0;
      for (std::size_t z : b3->above(x)) interval += b3->leq(z, y);
      const int gap = std::countr_zero(interval);
      v.expect(mu(x, y) == (gap % 2 ? -1 : 1), "B3 " + b3->id(x) + "<=" + b3->id(y));
    }
  v.expect(pairs == 27, "B3 has 27 comparable pairs");
  for (unsigned n = 1; n <= 100; ++n) {
    auto poset = divisor_poset(n);
    auto m = mobius(poset);
    for (std::size_t a = 0; a < poset->size(); ++a)
      for (std::size_t b : poset->above(a)) {
        const auto q = std::stoul(poset->id(b)) / std::stoul(poset->id(a));
        v.expect(m(a, b) == oracle::number_theoretic_mobius(q), "divisors of " + std::to_string(n));
      }
  }
}

void incidence_laws(Verdict& v) {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  std::uniform_real_distribution<double> density(0.02, 0.3);
  for (int trial = 0; trial < 100; ++trial) {
    auto poset = testing::random_poset(rng, size(rng), density(rng));
    auto mu = mobius(poset);
    v.expect(convolve(mu, zeta(poset)) == delta(poset), "mu*zeta trial " + std::to_string(trial));
    v.expect(convolve(zeta(poset), mu) == delta(poset), "zeta*mu trial " + std::to_string(trial));
    auto g = testing::random_function(rng, poset->size());
    v.expect(mobius_invert_down(mu, sum_below(*poset, g)) == g, "down inversion trial " + std::to_string(trial));
    v.expect(mobius_invert_up(mu, sum_above(*poset, g)) == g, "up inversion trial " + std::to_string(trial));
  }
}

void table_of_marks(Verdict& v) {
  for (auto& [name, ring] : testing::corpus_rings()) {
    const auto& L = ring->lattice();
    const auto& T = ring->table();
    const auto& G = ring->group();
    for (std::size_t h = 0; h < T.size(); ++h) {
      v.expect(T(h, h) == L.subgroup_class(h).weyl_order, name + " diagonal");
      for (std::size_t k = 0; k < h; ++k) v.expect(T(h, k) == 0, name + " triangular");
      v.expect(T(0, h) == G.order() / L.subgroup_class(h).order, name + " first row");
    }
    if (G.order() > 24) continue;
    std::set<oracle::ElementSubset> ours;
    for (const auto& H : L.subgroups()) ours.insert(oracle::to_subset(G, H));
    v.expect(ours == oracle::subgroups(G), name + " subgroup list");
    const auto elems = oracle::elements(G);
    for (std::size_t h = 0; h < T.size(); ++h)
      for (std::size_t k = 0; k < T.size(); ++k)
        v.expect(T(h, k) == oracle::fixed_cosets(elems, oracle::to_subset(G, L.representative(h)),
                                                 oracle::to_subset(G, L.representative(k))),
                 name + " entry " + std::to_string(h) + "," + std::to_string(k));
  }
}

void burnside_ring(Verdict& v) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (auto& [name, ring] : testing::corpus_rings()) {
    const auto& L = ring->lattice();
    const auto G = L.group_ptr();
    const auto n = static_cast<Eigen::Index>(ring->rank());
    for (std::size_t a = 0; a < ring->rank(); ++a) {
      auto A = GSet::cosets(G, L.representative(a));
      v.expect(check_counting_congruence(A).holds(), name + " counting congruence G/H");
      if (G->order() > 60) continue;
      for (std::size_t b = a; b < ring->rank(); ++b) {
        auto X = GSet::product(A, GSet::cosets(G, L.representative(b)));
        Vector<Rational> direct = Vector<Rational>::Zero(n);
        for (auto [c, mult] : orbit_decompose(X, L)) direct(static_cast<Eigen::Index>(c)) = mult;
        v.expect(mul(BurnsideElement::basis(ring, a), BurnsideElement::basis(ring, b)) == BurnsideElement(ring, direct),
                 name + " product " + std::to_string(a) + "x" + std::to_string(b));
        v.expect(check_counting_congruence(X).holds(), name + " counting congruence on a product");
      }
    }
    v.expect(check_counting_congruence(GSet::regular(G)).holds(), name + " regular G-set");
    for (int trial = 0; trial < 4; ++trial) {
      Vector<Rational> coeffs(n);
      for (auto& c : coeffs) c = coeff(rng);
      const auto f = marks(BurnsideElement(ring, coeffs));
      v.expect(check_wh_congruences(f).holds(), name + " genuine element accepted");
      for (std::size_t c = 0; c < ring->rank(); ++c) {
        if (L.subgroup_class(c).weyl_order == 1) continue;
        auto g = f;
        g.values(static_cast<Eigen::Index>(c)) += 1;
        v.expect(!check_wh_congruences(g).holds(), name + " perturbation at class " + std::to_string(c) + " rejected");
      }
    }
  }
}

void idempotents(Verdict& v) {
  for (auto& [name, ring] : testing::corpus_rings()) {
    const auto& L = ring->lattice();
    const auto check_family = [&](const std::vector<ClassIdempotent>& ids, const std::string& tag,
                                  const std::function<bool(std::size_t k, std::size_t h)>& indicator,
                                  std::optional<std::uint64_t> p) {
      auto total = BurnsideElement::zero(ring);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto& e = ids[i].element;
        v.expect(e * e == e, tag + " idempotent");
        for (std::size_t j = i + 1; j < ids.size(); ++j) v.expect((e * ids[j].element).is_zero(), tag + " orthogonal");
        const auto m = marks(e).values;
        for (std::size_t k = 0; k < ring->rank(); ++k)
          v.expect(m(static_cast<Eigen::Index>(k)) == (indicator(k, ids[i].subgroup_class) ? 1 : 0), tag + " marks");
        if (p) v.expect(e.is_p_integral(*p), tag + " p-integral");
        total += e;
      }
      v.expect(total == BurnsideElement::basis(ring, L.whole_class()), tag + " sum is [G/G]");
    };
    check_family(rational_idempotents(ring), name + " rational", [](std::size_t k, std::size_t h) { return k == h; },
                 std::nullopt);
    for (auto p : testing::corpus_primes())
      check_family(p_local_idempotents(ring, p), label(name, p),
                   [&](std::size_t k, std::size_t h) { return L.p_residual_class(k, p) == h; }, p);
  }
}

void golden_cardinalities(Verdict& v) {
  auto ring_of = [](PermGroup G) { return BurnsideRing::create(std::make_shared<PermGroup>(std::move(G))); };
  v.expect(card_bg(ring_of(symmetric_group(3)), 2) == linear(2, 1, make_rational(-1, 3)), "S3 p=2 is x - 1/3");
  // 1/(p-1)^2 x - 1/((p+1)(p-1)^2) evaluated at p = 3
  const unsigned p = 3;
  const Rational a = make_rational(1, (p - 1) * (p - 1));
  v.expect(card_bg(ring_of(general_linear_2(p)), p) == linear(p, a, -a / (p + 1)), "GL2(F3) p=3 matches the closed form");
  for (auto& [name, ring] : testing::corpus_rings())
    for (auto q : testing::corpus_primes()) {
      const auto order = ring->group().order();
      if (order % q != 0)
        v.expect(card_bg(ring, q) == CardExpr::constant(q, make_rational(1, order)), label(name, q) + " prime to p");
      if (log_p(order, q) >= 0)
        v.expect(card_bg(ring, q) == CardExpr::monomial(q, 1, log_p(order, q)), label(name, q) + " p-group");
      // every subgroup that is a p-group, as a group in its own right
      for (const auto& P : ring->lattice().subgroups()) {
        const int m = log_p(P.order(), q);
        if (m < 0 || P.order() == 1 || P.order() > 16) continue;
        auto sub = BurnsideRing::create(std::make_shared<PermGroup>(as_group(ring->group(), P)));
        v.expect(card_bg(sub, q) == CardExpr::monomial(q, 1, m), label(name, q) + " p-subgroup");
      }
    }
}

void sp_case(Verdict& v, std::string& note) {
  auto ring = BurnsideRing::create(std::make_shared<PermGroup>(symmetric_group(5)));
  const auto weights = integrate_over_bp(bg_weights(ring, 5), 5);
  const auto sylow = integrate_over_bp(sylow_inclusion_exclusion(ring, 5), 5);
  v.expect(weights == sylow, "routes agree");
  v.expect(evaluate(weights, make_rational(1, 5)) == make_rational(1, 120), "height 0 gives 1/120");
  v.expect(weights == linear(5, make_rational(1, 4), make_rational(-1, 24)), "value is 1/4*x - 1/24");
  const bool printed_form = weights.coeff(1) == make_rational(1, 24);
  note = "value " + weights.to_string() + (printed_form ? "" : "; 1/(p-1)! leading coefficient refuted");
}

void route_equivalence(Verdict& v, std::size_t& skipped) {
  for (auto& [name, ring] : testing::corpus_rings())
    for (auto p : testing::corpus_primes()) {
      if (ring->lattice().sylow_subgroups(p).size() > default_sylow_cap) {
        ++skipped;
        continue;
      }
      v.expect(bg_weights(ring, p) == sylow_inclusion_exclusion(ring, p), label(name, p));
    }
}

void height_zero(Verdict& v) {
  for (auto& [name, ring] : testing::corpus_rings())
    for (auto p : testing::corpus_primes())
      v.expect(evaluate(card_bg(ring, p), make_rational(1, p)) == make_rational(1, ring->group().order()), label(name, p));
  for (const auto& file : space_files) {
    auto space = space_from_json(read_json_file(data + "/" + file));
    for (auto p : testing::corpus_primes())
      v.expect(evaluate(card_space(space, p), make_rational(1, p)) == homotopy_cardinality(space), label(file, p));
  }
}

void space_golden(Verdict& v) {
  auto space = space_from_json(read_json_file(data + "/s3_on_c2cubed.json"));
  v.expect(card_space(space, 3) == linear(3, 1, 1), "p=3 is x + 1");
  v.expect(evaluate(card_space(space, 2), make_rational(1, 2)) == homotopy_cardinality(space), "p=2 height 0");
}

void cli_determinism(Verdict& v) {
  using testing::run_cli;
  const auto dir = fs::temp_directory_path() / ("ambicard-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cache = "--cache-dir " + (dir / "cache").string();

  std::vector<std::string> commands{"group info --family S --n 4 --prime 2 --marks",
                                    "group info --family GL2 --n 3",
                                    "burnside idempotents --family S --n 4 --rational",
                                    "burnside idempotents --family A --n 5 --prime 2",
                                    "burnside marks --family D --n 6",
                                    "card bg --family S --n 5 --prime 5",
                                    "card bg --family GL2 --n 3 --prime 3",
                                    "card space " + data + "/s3_on_c2cubed.json --prime 3",
                                    "card space " + data + "/c2_on_c6_with_pi4.json --prime 2",
                                    "poset mobius " + data + "/boolean3.json"};
  for (const auto& command : commands)
    for (const std::string json : {"", "--json "}) {
      fs::remove_all(dir / "cache");
      const auto cold = run_cli("--check " + json + cache + " " + command);
      const auto warm = run_cli("--check " + json + cache + " " + command);
      const auto again = run_cli("--check " + json + cache + " " + command);
      const auto uncached = run_cli("--check " + json + "--no-cache " + command);
      v.expect(cold.exit_code == 0 && !cold.out.empty(), json + command + " succeeds");
      v.expect(cold.out == warm.out && warm.out == again.out, json + command + " cold/warm identical");
      v.expect(uncached.out == cold.out, json + command + " matches --no-cache");
    }

  // card bg: emitted JSON re-ingests to the same polynomial
  for (auto& [name, ring] : testing::corpus_rings()) {
    if (ring->group().order() > 60) continue;
    auto spec = group_to_json(ring->group());
    std::ofstream(dir / "group.json") << spec.dump();
    for (auto p : testing::corpus_primes()) {
      auto out = run_cli("--json --no-cache card bg --group " + (dir / "group.json").string() + " --prime " + std::to_string(p));
      auto parsed = card_expr_from_json(Json::parse(out.out));
      v.expect(parsed == card_bg(ring, p), label(name, p) + " card bg JSON round-trip");
      v.expect(Json::parse(out.out)["string"] == card_bg(ring, p).to_string(), label(name, p) + " card bg string");
    }
  }

  // idempotent elements: re-ingest each through burnside marks --element
  auto ids = Json::parse(run_cli("--json --no-cache burnside idempotents --family S --n 4 --prime 3").out);
  auto ring = BurnsideRing::create(std::make_shared<PermGroup>(symmetric_group(4)));
  for (const auto& entry : ids["idempotents"]) {
    std::ofstream(dir / "element.json") << entry["element"].dump();
    auto back = Json::parse(run_cli("--json --no-cache burnside marks --family S --n 4 --element " + (dir / "element.json").string()).out);
    v.expect(back["element"] == entry["element"], "idempotent element round-trip");
    v.expect(back["marks"] == entry["marks"], "idempotent marks round-trip");
    auto element = burnside_element_from_json(entry["element"], ring);
    v.expect(element == idempotent_p_local(ring, entry["class_index"].get<std::size_t>(), 3), "idempotent re-ingested in-process");
  }

  // space specs: the re-serialized spec gives identical output
  for (const auto& file : space_files) {
    auto space = space_from_json(read_json_file(data + "/" + file));
    std::ofstream(dir / "space.json") << space_to_json(space).dump(1);
    for (auto p : testing::corpus_primes()) {
      const auto args = " --prime " + std::to_string(p);
      v.expect(run_cli("--json --no-cache card space " + data + "/" + file + args).out ==
                   run_cli("--json --no-cache card space " + (dir / "space.json").string() + args).out,
               label(file, p) + " space round-trip");
    }
  }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<std::string(Verdict&)> run;
  };
  std::string sp_note;
  std::size_t skipped = 0;
  std::vector<Criterion> criteria{
      {1, "Moebius golden values (B3, divisor posets n <= 100)", [](Verdict& v) { return mobius_golden(v), std::string(); }},
      {2, "incidence algebra laws on 100 random posets", [](Verdict& v) { return incidence_laws(v), std::string(); }},
      {3, "table of marks shape and fixed-point oracle", [](Verdict& v) { return table_of_marks(v), std::string(); }},
      {4, "Burnside ring products and congruences", [](Verdict& v) { return burnside_ring(v), std::string(); }},
      {5, "rational and p-local idempotents", [](Verdict& v) { return idempotents(v), std::string(); }},
      {6, "golden height-1 cardinalities of BG", [](Verdict& v) { return golden_cardinalities(v), std::string(); }},
      {7, "S5 at p = 5 by both routes", [&](Verdict& v) { return sp_case(v, sp_note), sp_note; }},
      {8, "weights agree with Sylow inclusion-exclusion",
       [&](Verdict& v) {
         route_equivalence(v, skipped);
         return std::to_string(skipped) + " pairs above the Sylow cap skipped";
       }},
      {9, "height-0 consistency sweep", [](Verdict& v) { return height_zero(v), std::string(); }},
      {10, "S3 acting on C2^3 space value", [](Verdict& v) { return space_golden(v), std::string(); }},
      {11, "CLI determinism and JSON round-trip", [](Verdict& v) { return cli_determinism(v), std::string(); }},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Verdict verdict;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      note = criterion.run(verdict);
    } catch (const std::exception& e) {
      verdict.expect(false, std::string("exception: ") + e.what());
    }
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (verdict.passed() ? "PASS" : "FAIL") << "  criterion " << criterion.number << ": " << criterion.title << " ("
         << verdict.summary() << (note.empty() ? "" : "; " + note) << "; " << std::fixed;
    line.precision(2);
    line << seconds << "s)";
    std::cout << line.str() << std::endl;
    failed += !verdict.passed();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
