#include <doctest.h>

#include "ambicard/cardinality.hpp"
#include "ambicard/io.hpp"
#include "corpus.hpp"

using namespace ambicard;

namespace {

BurnsideRing::Ptr ring_of(PermGroup G) { return BurnsideRing::create(std::make_shared<PermGroup>(std::move(G))); }

CardExpr linear(std::uint64_t p, Rational a, Rational b) {
  return CardExpr::monomial(p, a, 1) + CardExpr::constant(p, b);
}

SpaceSpec load_space(const std::string& name) {
  return space_from_json(read_json_file(std::string(AMBICARD_TEST_DATA) + "/" + name));
}

AbelianModule::Table cyclic_table(std::uint32_t n) {
  AbelianModule::Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  auto x = CardExpr::monomial(3, 1, 1);
  auto e = x - CardExpr::constant(3, make_rational(1, 3));
  CHECK(e.to_string() == "x - 1/3");
  CHECK((e * e).to_string() == "x^2 - 2/3*x + 1/9");
  CHECK((make_rational(1, 4) * x - CardExpr::constant(3, make_rational(1, 16))).to_string() == "1/4*x - 1/16");
  CHECK(CardExpr::monomial(3, 1, -3).to_string() == "x^-3");
  CHECK(CardExpr(3).to_string() == "0");
  CHECK((e - e).is_zero());
  CHECK(evaluate(e, make_rational(1, 3)) == 0);
  CHECK(evaluate(CardExpr::monomial(3, 2, -2), make_rational(1, 3)) == 18);
  CHECK_THROWS_AS(evaluate(CardExpr::monomial(3, 1, -1), 0), NotInvertibleError);
  CHECK_THROWS_AS(x + CardExpr::constant(2, 1), InputError);
  CHECK(card_b_pgroup(9, 3) == CardExpr::monomial(3, 1, 2));
  CHECK_THROWS_AS(card_b_pgroup(6, 3), InputError);
}

TEST_CASE("golden height-1 cardinalities") {
  CHECK(card_bg(ring_of(symmetric_group(3)), 2) == linear(2, 1, make_rational(-1, 3)));
  CHECK(card_bg(ring_of(symmetric_group(3)), 2).to_string() == "x - 1/3");
  // 1/(p-1)^2 x - 1/((p+1)(p-1)^2) for GL_2(F_p)
  for (unsigned p : {2u, 3u}) {
    const Rational a = make_rational(1, (p - 1) * (p - 1));
    CHECK(card_bg(ring_of(general_linear_2(p)), p) == linear(p, a, -a / (p + 1)));
  }
  CHECK(card_bg(ring_of(symmetric_group(5)), 5) == linear(5, make_rational(1, 4), make_rational(-1, 24)));
  CHECK(card_bg(ring_of(cyclic_group(5)), 3) == CardExpr::constant(3, make_rational(1, 5)));
}

TEST_CASE("cardinality of BG for p-groups and groups prime to p") {
  for (auto& [name, ring] : testing::corpus_rings()) {
    const auto order = ring->group().order();
    for (auto p : testing::corpus_primes()) {
      CAPTURE(name);
      CAPTURE(p);
      if (order % p != 0) CHECK(card_bg(ring, p) == CardExpr::constant(p, make_rational(1, order)));
      if (log_p(order, p) >= 0) CHECK(card_bg(ring, p) == CardExpr::monomial(p, 1, log_p(order, p)));
    }
  }
}

TEST_CASE("weights agree with Sylow inclusion-exclusion") {
  for (auto& [name, ring] : testing::corpus_rings())
    for (auto p : testing::corpus_primes()) {
      CAPTURE(name);
      CAPTURE(p);
      auto w = bg_weights(ring, p);
      CHECK(w.is_p_integral(p));
      for (std::size_t c = 0; c < ring->rank(); ++c)
        if (w.coeff(c) != 0) CHECK(log_p(ring->lattice().subgroup_class(c).order, p) >= 0);
      if (ring->lattice().sylow_subgroups(p).size() > default_sylow_cap) {
        CHECK_THROWS_AS(sylow_inclusion_exclusion(ring, p), ResourceError);
        continue;
      }
      CHECK(sylow_inclusion_exclusion(ring, p) == w);
    }
}

TEST_CASE("height-0 shadow of card_bg") {
  for (auto& [name, ring] : testing::corpus_rings())
    for (auto p : testing::corpus_primes()) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(evaluate(card_bg(ring, p), make_rational(1, p)) == make_rational(1, ring->group().order()));
    }
}

TEST_CASE("space cardinalities") {
  CHECK(card_space(load_space("s3_on_c2cubed.json"), 3) == linear(3, 1, 1));
  CHECK(card_space(load_space("trivial_pi2_c3.json"), 2) == CardExpr::constant(2, 3));
  CHECK(card_space(load_space("c2_inverting_c3.json"), 2) == linear(2, 1, 1));
  for (const char* file : {"s3_on_c2cubed.json", "trivial_pi2_c3.json", "trivial_pi2_c3_pi3_c5.json", "c2_inverting_c3.json",
                           "c2_on_c6_with_pi4.json", "s3_sign_on_c3.json"}) {
    auto space = load_space(file);
    for (auto p : testing::corpus_primes()) {
      CAPTURE(file);
      CAPTURE(p);
      CHECK(evaluate(card_space(space, p), make_rational(1, p)) == homotopy_cardinality(space));
    }
  }
  CHECK(homotopy_cardinality(load_space("s3_on_c2cubed.json")) == make_rational(4, 3));
}

TEST_CASE("space with no higher homotopy is BG") {
  auto G = std::make_shared<PermGroup>(general_linear_2(3));
  SpaceSpec space(G, {});
  auto ring = BurnsideRing::create(G);
  CHECK(card_space(space, ring, 3) == card_bg(ring, 3));
  CHECK(space.truncation() == 1);
}

TEST_CASE("abelian module validation") {
  auto C2 = std::make_shared<PermGroup>(cyclic_group(2));
  CHECK_NOTHROW(AbelianModule(C2, cyclic_table(4), {Perm({0, 3, 2, 1})}));
  try {
    AbelianModule(C2, cyclic_table(4), {Perm({0, 2, 1, 3})});
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(1, 1)") != std::string::npos);
  }
  auto bad = cyclic_table(3);
  bad[1][2] = 1;
  CHECK_THROWS_AS(AbelianModule(C2, bad, {Perm({0, 1, 2})}), InputError);
  // S3 multiplication table is not commutative
  auto S3 = symmetric_group(3);
  AbelianModule::Table s3(6, std::vector<std::uint32_t>(6));
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) s3[a][b] = S3.mul(a, b);
  CHECK_THROWS_AS(AbelianModule(C2, s3, {Perm({0, 1, 2, 3, 4, 5})}), InputError);
  CHECK_THROWS_AS(AbelianModule(C2, cyclic_table(600), {Perm::identity(600)}), ResourceError);

  AbelianModule C6(C2, cyclic_table(6), {Perm({0, 5, 4, 3, 2, 1})});
  CHECK(primary_part(C6, 2).size() == 2);
  CHECK(primary_part(C6, 3).size() == 3);
  CHECK(primary_part(C6, 5).size() == 1);
}

TEST_CASE("space spec validation") {
  auto C2 = std::make_shared<PermGroup>(cyclic_group(2));
  auto other = std::make_shared<PermGroup>(cyclic_group(3));
  AbelianModule M(C2, cyclic_table(3), {Perm({0, 2, 1})});
  CHECK_THROWS_AS(SpaceSpec(C2, {{1, M}}), InputError);
  CHECK_THROWS_AS(SpaceSpec(C2, {{2, M}, {2, M}}), InputError);
  CHECK_THROWS_AS(SpaceSpec(other, {{2, M}}), InputError);
  CHECK(SpaceSpec(C2, {{2, M}, {5, M}}).truncation() == 5);
  CHECK_THROWS_AS(load_space("bad_not_automorphism.json"), InputError);
  CHECK_THROWS_AS(load_space("bad_not_homomorphic.json"), InputError);
}
