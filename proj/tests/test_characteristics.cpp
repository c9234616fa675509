#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "torusmaps/characteristics.hpp"

using namespace torusmaps;

namespace {

CompleteCharacteristic kappa(int j) { return canonical_nonfree_characteristics()[j - 1]; }

CompleteCharacteristic free_char(long n, long p) {
  return CompleteCharacteristic::make(n, p, {});
}

}  // namespace

TEST_CASE("construction enforces the invariants") {
  CHECK_THROWS_AS(CompleteCharacteristic::make(0, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(CompleteCharacteristic::make(4, 1, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CompleteCharacteristic::make(4, 1, {{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CompleteCharacteristic::make(4, 1, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CompleteCharacteristic::make(6, 1, {{2, 4}}), std::invalid_argument);

  // storage order: descending n_i, then ascending d_i
  const auto k = CompleteCharacteristic::make(6, 1, {{1, 5}, {3, 1}, {2, 2}, {1, 1}});
  CHECK(k.orbits == std::vector<Valency>{{3, 1}, {2, 2}, {1, 1}, {1, 5}});
}

TEST_CASE("modular genus") {
  const auto g4 = modular_genus(kappa(4));
  REQUIRE(g4.has_value());
  CHECK(*g4 == 0);

  const auto g_free = modular_genus(free_char(2, 3));
  REQUIRE(g_free.has_value());
  CHECK(*g_free == 2);

  CHECK_FALSE(modular_genus(free_char(3, 3)).has_value());

  const auto g_torus = modular_genus(free_char(5, 1));
  REQUIRE(g_torus.has_value());
  CHECK(*g_torus == 1);

  for (int j = 1; j <= 7; ++j) {
    const auto g = modular_genus(kappa(j));
    REQUIRE(g.has_value());
    CHECK(*g == 0);
  }
}

TEST_CASE("valency sum") {
  CHECK(valency_sum_ok(kappa(5)));  // 1*3 + 2*2 + 5*1 = 12 = 0 mod 6
  CHECK(valency_sum_ok(kappa(2)));
  CHECK_FALSE(valency_sum_ok(
      CompleteCharacteristic::make(3, 1, {{1, 1}, {1, 1}, {1, 2}})));
  CHECK(valency_sum_ok(free_char(4, 1)));  // vacuous for k = 0
}

TEST_CASE("sphere gcd") {
  CHECK(sphere_gcd_ok(kappa(1)));
  CHECK_FALSE(sphere_gcd_ok(
      CompleteCharacteristic::make(4, 1, {{2, 1}, {2, 1}, {2, 1}, {2, 1}})));
  CHECK(sphere_gcd_ok(free_char(1, 0)));  // gcd(n) = 1
  CHECK_THROWS_AS(sphere_gcd_ok(free_char(5, 1)), GenusNotZero);  // g = 1
  CHECK_THROWS_AS(sphere_gcd_ok(free_char(2, 1)), GenusNotZero);  // no integer g
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(kappa(7)).ok);
  for (int j = 1; j <= 7; ++j) CHECK(is_admissible(kappa(j)).ok);

  const auto bad_sum = is_admissible(
      CompleteCharacteristic::make(3, 1, {{1, 1}, {1, 1}, {1, 2}}));
  CHECK_FALSE(bad_sum.ok);
  CHECK(bad_sum.reason.find("(2)") != std::string::npos);

  const auto bad_genus = is_admissible(
      CompleteCharacteristic::make(2, 1, {{1, 1}, {1, 1}}));
  CHECK_FALSE(bad_genus.ok);
  CHECK(bad_genus.reason.find("(3)") != std::string::npos);

  const auto bad_gcd = is_admissible(
      CompleteCharacteristic::make(4, 1, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}));
  CHECK_FALSE(bad_gcd.ok);
  CHECK(bad_gcd.reason.find("(4)") != std::string::npos);
}

TEST_CASE("equivalence is multiset equality") {
  CHECK_FALSE(equivalent(kappa(6), kappa(7)));
  CHECK_FALSE(equivalent(kappa(2), kappa(3)));
  const auto reordered = CompleteCharacteristic::make(6, 1, {{1, 1}, {2, 1}, {3, 1}});
  CHECK(equivalent(reordered, kappa(4)));
  CHECK_FALSE(equivalent(free_char(2, 1), free_char(2, 0)));
  CHECK_FALSE(equivalent(free_char(2, 1), free_char(3, 1)));
}

TEST_CASE("nonfree torus enumeration reproduces the seven classes") {
  const auto found = enumerate_torus_nonfree();
  REQUIRE(found.size() == 7);

  // contains kappa_1 and kappa_5 explicitly
  const auto has = [&](const CompleteCharacteristic& k) {
    return std::any_of(found.begin(), found.end(),
                       [&](const CompleteCharacteristic& f) { return equivalent(f, k); });
  };
  CHECK(has(CompleteCharacteristic::make(2, 1, {{1, 1}, {1, 1}, {1, 1}, {1, 1}})));
  CHECK(has(CompleteCharacteristic::make(6, 1, {{3, 1}, {2, 2}, {1, 5}})));

  // multiset equality with the canonical list
  for (int j = 1; j <= 7; ++j) CHECK(has(kappa(j)));
  for (const auto& k : found) {
    CHECK(is_admissible(k).ok);
    const auto g = modular_genus(k);
    REQUIRE(g.has_value());
    CHECK(*g == 0);
    CHECK(canonical_index(k).has_value());
  }
}

TEST_CASE("general enumeration") {
  SUBCASE("torus defaults: seven nonfree plus free shifts") {
    const auto all = enumerate_general(1, 12, 6);
    std::vector<CompleteCharacteristic> nonfree, free_part;
    for (const auto& k : all)
      (k.orbits.empty() ? free_part : nonfree).push_back(k);
    CHECK(free_part.size() == 12);  // one free class per period 1..12
    const auto specialized = enumerate_torus_nonfree();
    REQUIRE(nonfree.size() == specialized.size());
    for (size_t i = 0; i < nonfree.size(); ++i)
      CHECK(equivalent(nonfree[i], specialized[i]));
  }
  SUBCASE("sphere half-turn appears at genus zero") {
    const auto all = enumerate_general(0, 3, 4);
    const auto half_turn = CompleteCharacteristic::make(2, 0, {{1, 1}, {1, 1}});
    CHECK(std::any_of(all.begin(), all.end(), [&](const CompleteCharacteristic& k) {
      return equivalent(k, half_turn);
    }));
  }
  SUBCASE("trivial caps") {
    const auto all = enumerate_general(1, 1, 0);
    REQUIRE(all.size() == 1);
    CHECK(equivalent(all[0], free_char(1, 1)));
  }
  SUBCASE("free actions on the sphere exist only with period 1") {
    const auto frees = enumerate_general(0, 8, 0);
    REQUIRE(frees.size() == 1);
    CHECK(equivalent(frees[0], free_char(1, 0)));
  }
  SUBCASE("free actions on genus 3 have period dividing p-1") {
    const auto frees = enumerate_general(3, 4, 0);
    REQUIRE(frees.size() == 2);
    CHECK(equivalent(frees[0], free_char(1, 3)));
    CHECK(equivalent(frees[1], free_char(2, 3)));
  }
  SUBCASE("bad caps are rejected") {
    CHECK_THROWS_AS(enumerate_general(-1, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_general(1, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_general(1, 5, -1), std::invalid_argument);
  }
}

TEST_CASE("enumerated characteristics satisfy the derived bounds") {
  for (long p = 0; p <= 3; ++p) {
    for (const auto& k : enumerate_general(p, 10, 4)) {
      CHECK(is_admissible(k).ok);
      CHECK(free_genus_relation_holds(k));
      CHECK(nonfree_genus_bound_holds(k));
      CHECK(orbit_sum_bounds_hold(k));
      CHECK(torus_orbit_count_bound_holds(k));
    }
  }
}

TEST_CASE("enumeration output is canonically ordered and deduplicated") {
  const auto all = enumerate_general(1, 12, 6);
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  const auto again = enumerate_general(1, 12, 6);
  REQUIRE(all.size() == again.size());
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i] == again[i]);
}

TEST_CASE("canonical index") {
  for (int j = 1; j <= 7; ++j) {
    const auto idx = canonical_index(kappa(j));
    REQUIRE(idx.has_value());
    CHECK(*idx == j);
  }
  CHECK_FALSE(canonical_index(free_char(4, 1)).has_value());
}

TEST_CASE("display form") {
  CHECK(to_string(kappa(5)) == "(n=6, p=1, orbits={(3,1),(2,2),(1,5)})");
  CHECK(to_string(free_char(4, 1)) == "(n=4, p=1)");
}
