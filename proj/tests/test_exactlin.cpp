#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "test_util.hpp"
#include "torusmaps/exactlin.hpp"

using namespace torusmaps;

namespace {

const Mat2 kM5{0, 1, -1, 0};
const Mat2 kM6{0, 1, -1, -1};
const Mat2 kA5{1, 1, -1, 0};

// Brute-force oracle, independent of the solver: scan the grid with
// denominator |det(M)| * lcm of the denominators of b and keep every point
// with M x - b integral.
std::vector<Vec2Q> congruence_oracle(const Mat2& M, const Vec2Q& b) {
  const Int q = abs(det(M)) * lcm(b.x.get_den(), b.y.get_den());
  std::vector<Vec2Q> out;
  for (Int i = 0; i < q; ++i) {
    for (Int j = 0; j < q; ++j) {
      Rat x(i, q), y(j, q);
      x.canonicalize();
      y.canonicalize();
      const Vec2Q pt{x, y};
      if (is_integer(M * pt - b)) out.push_back(pt);
    }
  }
  return out;  // grid scan order is already lexicographic
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(frac_mod1(Rat(7, 3)) == Rat(1, 3));
  CHECK(frac_mod1(Rat(-1, 3)) == Rat(2, 3));
  CHECK(frac_mod1(Rat(-2)) == 0);
  CHECK(frac_mod1(Rat(0)) == 0);
  CHECK(is_integer(Rat(4, 2)));
  CHECK_FALSE(is_integer(Rat(1, 2)));
  CHECK(parse_rat("-3/9") == Rat(-1, 3));
  CHECK(parse_rat("5") == 5);
  CHECK(parse_rat("1/-3") == Rat(-1, 3));
  CHECK(rat_str(parse_rat("2/6")) == "1/3");
  CHECK(rat_str(Rat(-7)) == "-7");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("matrix product") {
  CHECK(Mat2::identity() * kM5 == kM5);
  CHECK(kA5 * kA5 == Mat2{0, 1, -1, -1});
  CHECK(kM5 * unimodular_inverse(kM5) == Mat2::identity());
}

TEST_CASE("matrix powers") {
  CHECK(mat_pow(kA5, 3) == Mat2{-1, 0, 0, -1});
  CHECK(mat_pow(kM6, 3) == Mat2::identity());
  CHECK(mat_pow(Mat2{2, 1, 1, 1}, 0) == Mat2::identity());
  CHECK_THROWS_AS(mat_pow(kM5, -1), std::invalid_argument);
}

TEST_CASE("power addition law") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat2 A = testutil::random_entries(rng, 3);
    for (int m = 0; m <= 12; m += 3)
      for (int k = 0; k <= 12; k += 4)
        CHECK(mat_pow(A, m + k) == mat_pow(A, m) * mat_pow(A, k));
  }
}

TEST_CASE("det and trace") {
  CHECK(det(kM5) == 1);
  CHECK(trace(kM5) == 0);
  CHECK(det(Mat2{1, 0, 0, -1}) == -1);
  CHECK(trace(Mat2{1, 0, 0, -1}) == 0);
  CHECK(det(Mat2::identity()) == 1);
  CHECK(trace(Mat2::identity()) == 2);
}

TEST_CASE("unimodular inverse") {
  CHECK(unimodular_inverse(kM5) == Mat2{0, -1, 1, 0});
  CHECK(unimodular_inverse(Mat2::identity()) == Mat2::identity());
  CHECK_THROWS_AS(unimodular_inverse(Mat2{2, 0, 0, 2}), NotUnimodular);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat2 S = testutil::random_unimodular(rng, 5);
    CHECK(unimodular_inverse(S) * S == Mat2::identity());
    CHECK(S * unimodular_inverse(S) == Mat2::identity());
  }
}

TEST_CASE("content") {
  CHECK(content(Mat2{2, 4, -6, 0}) == 2);
  CHECK(content(Mat2::zero()) == 0);
  CHECK(content(Mat2{1, 2, 0, 1} - Mat2::identity()) == 2);
}

TEST_CASE("torus congruence worked cases") {
  const Vec2Q zero{0, 0};
  const Rat third(1, 3), two_thirds(2, 3), half(1, 2);

  SUBCASE("unique solution") {
    const auto s = solve_torus_congruence(kA5 - Mat2::identity(), zero);
    REQUIRE(s.kind == SolutionSet::Kind::Finite);
    CHECK(s.points == std::vector<Vec2Q>{{0, 0}});
  }
  SUBCASE("three solutions") {
    const auto s = solve_torus_congruence(kA5 * kA5 - Mat2::identity(), zero);
    REQUIRE(s.kind == SolutionSet::Kind::Finite);
    CHECK(s.points ==
          std::vector<Vec2Q>{{0, 0}, {third, third}, {two_thirds, two_thirds}});
  }
  SUBCASE("four solutions") {
    const auto s = solve_torus_congruence(Mat2{-2, 0, 0, -2}, zero);
    REQUIRE(s.kind == SolutionSet::Kind::Finite);
    CHECK(s.points == std::vector<Vec2Q>{{0, 0}, {0, half}, {half, 0}, {half, half}});
  }
  SUBCASE("zero matrix") {
    CHECK(solve_torus_congruence(Mat2::zero(), Vec2Q{half, 0}).kind ==
          SolutionSet::Kind::Empty);
    CHECK(solve_torus_congruence(Mat2::zero(), zero).kind ==
          SolutionSet::Kind::AllOfTorus);
    CHECK(solve_torus_congruence(Mat2::zero(), Vec2Q{2, -3}).kind ==
          SolutionSet::Kind::AllOfTorus);
  }
  SUBCASE("singular but nonzero") {
    CHECK(solve_torus_congruence(Mat2{1, 1, 1, 1}, zero).kind ==
          SolutionSet::Kind::PositiveDimensional);
    CHECK(solve_torus_congruence(Mat2{2, 4, 1, 2}, Vec2Q{half, 0}).kind ==
          SolutionSet::Kind::PositiveDimensional);
  }
}

TEST_CASE("congruence solver matches the brute-force oracle") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  int tested = 0;
  while (tested < 40) {
    const Mat2 M = testutil::random_entries(rng, 3);
    const Int D = det(M);
    if (D == 0 || abs(D) > 6) continue;
    Rat bx(num(rng), den(rng)), by(num(rng), den(rng));
    bx.canonicalize();
    by.canonicalize();
    const Vec2Q b{bx, by};

    const auto s = solve_torus_congruence(M, b);
    REQUIRE(s.kind == SolutionSet::Kind::Finite);
    CHECK(s.points == congruence_oracle(M, b));
    CHECK(Int(s.points.size()) == abs(D));
    ++tested;
  }
}

TEST_CASE("solution points are reduced, distinct and sorted") {
  const auto s = solve_torus_congruence(Mat2{3, 1, -1, 2}, Vec2Q{Rat(1, 2), Rat(2, 5)});
  REQUIRE(s.kind == SolutionSet::Kind::Finite);
  CHECK(Int(s.points.size()) == abs(det(Mat2{3, 1, -1, 2})));
  for (size_t i = 0; i < s.points.size(); ++i) {
    CHECK(s.points[i].x >= 0);
    CHECK(s.points[i].x < 1);
    CHECK(s.points[i].y >= 0);
    CHECK(s.points[i].y < 1);
    if (i > 0) CHECK(s.points[i - 1] < s.points[i]);
  }
}
