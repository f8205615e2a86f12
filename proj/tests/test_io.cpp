#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ambicard/cache.hpp"
#include "ambicard/io.hpp"
#include "cli_runner.hpp"
#include "corpus.hpp"

using namespace ambicard;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("ambicard-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

const std::string data = AMBICARD_TEST_DATA;

}  // namespace

TEST_CASE("group specs") {
  CHECK(group_from_family("S", 4).order() == 24);
  CHECK(group_from_family("GL2", 3).order() == 48);
  CHECK(group_from_json(Json{{"family", "D"}, {"n", 6}}).order() == 12);
  CHECK_THROWS_AS(group_from_family("Z", 3), InputError);
  CHECK_THROWS_AS(group_from_family("S", 9, 2000), ResourceError);
  CHECK_THROWS_AS(group_from_json(Json{{"degree", 3}, {"generators", {{0, 0, 1}}}}), InputError);
  CHECK_THROWS_AS(group_from_json(Json::array()), InputError);
  auto G = general_linear_2(3);
  auto back = group_from_json(group_to_json(G));
  CHECK(back.elements() == G.elements());
  CHECK(group_from_json(read_json_file(data + "/s3.json")).order() == 6);
  CHECK_THROWS_AS(read_json_file(data + "/malformed.json"), InputError);
  CHECK_THROWS_AS(read_json_file(data + "/missing.json"), InputError);
}

TEST_CASE("JSON round-trips") {
  auto space = space_from_json(read_json_file(data + "/s3_on_c2cubed.json"));
  auto again = space_from_json(space_to_json(space));
  CHECK(space_to_json(again) == space_to_json(space));
  CHECK(card_space(again, 3) == card_space(space, 3));

  auto G = std::make_shared<PermGroup>(symmetric_group(4));
  auto X = GSet::cosets(G, SubgroupLattice::compute(G)->representative(4));
  auto Y = gset_from_json(gset_to_json(X), G);
  CHECK(gset_to_json(Y) == gset_to_json(X));

  for (auto& [name, ring] : testing::corpus_rings())
    for (auto p : testing::corpus_primes()) {
      auto e = card_bg(ring, p);
      CHECK(card_expr_from_json(card_expr_to_json(e)) == e);
      auto w = bg_weights(ring, p);
      CHECK(burnside_element_from_json(burnside_element_to_json(w, group_to_json(ring->group())), ring) == w);
    }
  CHECK_THROWS_AS(card_expr_from_json(Json{{"prime", 2}, {"terms", {{{"exp", 0}, {"num", 1}, {"den", 0}}}}}), InputError);
  CHECK(integer_from_json(rational_to_json_num(Integer("123456789012345678901234567890"))) ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("lattice cache") {
  auto dir = fresh_dir("cache");
  auto G = std::make_shared<PermGroup>(symmetric_group(4));
  LatticeCache cache(dir, true);
  auto cold = cache.lattice(G);
  CHECK_FALSE(cache.last_was_hit());
  REQUIRE(fs::exists(cache.entry_path(*G)));
  auto warm = cache.lattice(G);
  CHECK(cache.last_was_hit());
  REQUIRE(warm->subgroups().size() == cold->subgroups().size());
  for (std::size_t i = 0; i < cold->subgroups().size(); ++i) CHECK(warm->subgroup(i) == cold->subgroup(i));
  CHECK(warm->mobius() == cold->mobius());
  CHECK(TableOfMarks(*warm).matrix() == TableOfMarks(*cold).matrix());

  // Same group, generators listed in another order: same fingerprint.
  auto gens = G->generators();
  std::reverse(gens.begin(), gens.end());
  CHECK(LatticeCache::fingerprint(PermGroup::closure(4, gens)) == LatticeCache::fingerprint(*G));
  CHECK(LatticeCache::fingerprint(alternating_group(4)) != LatticeCache::fingerprint(*G));

  std::ofstream(cache.entry_path(*G)) << "{ not json";
  auto recovered = cache.lattice(G);
  CHECK_FALSE(cache.last_was_hit());
  CHECK(recovered->subgroups().size() == 30);
  CHECK(cache.lattice(G) != nullptr);
  CHECK(cache.last_was_hit());

  auto entry = read_json_file(cache.entry_path(*G));
  entry["version"] = "ambicard-lattice-v0";
  std::ofstream(cache.entry_path(*G)) << entry.dump();
  cache.lattice(G);
  CHECK_FALSE(cache.last_was_hit());

  entry = read_json_file(cache.entry_path(*G));
  entry["mobius"][1] = 99;
  std::ofstream(cache.entry_path(*G)) << entry.dump();
  CHECK(cache.lattice(G)->mobius() == cold->mobius());
  CHECK_FALSE(cache.last_was_hit());

  LatticeCache off(dir / "off", false);
  off.lattice(G);
  CHECK_FALSE(fs::exists(dir / "off"));
  fs::remove_all(dir);
}

TEST_CASE("CLI exit codes") {
  using testing::run_cli;
  CHECK(run_cli("--no-cache card bg --family S --n 3 --prime 2").out == "x - 1/3\n");
  CHECK(run_cli("--no-cache card bg --family S --n 3 --prime 4").exit_code == 2);
  CHECK(run_cli("--no-cache card bg --family S --n 3").exit_code == 2);
  CHECK(run_cli("--no-cache group info --group " + data + "/malformed.json").exit_code == 2);
  CHECK(run_cli("--no-cache group info --family S --n 8 --max-order 1000").exit_code == 3);
  CHECK(run_cli("--no-cache card space " + data + "/bad_not_automorphism.json --prime 2").exit_code == 2);
  CHECK(run_cli("--no-cache card space " + data + "/bad_not_homomorphic.json --prime 2").exit_code == 2);
  CHECK(run_cli("poset mobius " + data + "/cyclic_covers.json").exit_code == 2);
  CHECK(run_cli("poset mobius " + data + "/empty.json").exit_code == 2);
  CHECK(run_cli("--no-cache burnside idempotents --family S --n 3").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);

  auto bg = run_cli("--no-cache --check card bg --family GL2 --n 3 --prime 3");
  CHECK(bg.exit_code == 0);
  CHECK(bg.out.rfind("1/4*x - 1/16\n", 0) == 0);
  auto space = run_cli("--no-cache --check card space " + data + "/s3_on_c2cubed.json --prime 3");
  CHECK(space.exit_code == 0);
  CHECK(space.out.rfind("x + 1\n", 0) == 0);
  CHECK(run_cli("--no-cache --check burnside idempotents --family A --n 5 --prime 2").exit_code == 0);
  CHECK(run_cli("poset mobius " + data + "/boolean3.json").out.find("mu(0, abc) = -1") != std::string::npos);
}
