#ifndef TORUSMAPS_TORUS_DYNAMICS_HPP
#define TORUSMAPS_TORUS_DYNAMICS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusmaps/characteristics.hpp"
#include "torusmaps/exactlin.hpp"

namespace torusmaps {

struct NotPeriodic : std::domain_error {
  NotPeriodic() : std::domain_error("map is not periodic") {}
};
struct DegenerateFixedSet : std::domain_error {
  DegenerateFixedSet() : std::domain_error("positive-dimensional fixed set encountered") {}
};
struct OrientationReversing : std::domain_error {
  OrientationReversing() : std::domain_error("map reverses orientation (det = -1)") {}
};
struct NotInvariant : std::domain_error {
  NotInvariant() : std::domain_error("point set is not invariant under the map") {}
};
struct WrongOrder : std::domain_error {
  WrongOrder() : std::domain_error("matrix order differs from the requested lambda") {}
};
struct NotSpecialLinear : std::domain_error {
  NotSpecialLinear() : std::domain_error("matrix determinant is not +1") {}
};
struct NotCoprime : std::domain_error {
  NotCoprime() : std::domain_error("arguments are not coprime") {}
};

// Exact point of the torus [0,1)^2.
using TorusPoint = Vec2Q;

// x -> A x + v (mod Z^2) with A unimodular and v rational.
struct AffineTorusMap {
  Mat2 A;
  Vec2Q v;  // stored reduced to [0,1)^2

  explicit AffineTorusMap(Mat2 A_, Vec2Q v_ = Vec2Q{Rat(0), Rat(0)});
};

bool operator==(const AffineTorusMap& f, const AffineTorusMap& g);

TorusPoint apply(const AffineTorusMap& f, const TorusPoint& x);

// f^m for m >= 0, i.e. (A^m, (A^{m-1} + ... + A + I) v) reduced mod 1.
AffineTorusMap iterate(const AffineTorusMap& f, const Int& m);

// Smallest n >= 1 with f^n = id; nullopt when the linear part has infinite
// order (a translation part alone never obstructs periodicity).
std::optional<Int> map_period(const AffineTorusMap& f);

// Solutions of f(x) = x, i.e. (A - I) x = -v (mod Z^2).
SolutionSet fixed_points(const AffineTorusMap& f);

// One orbit of points whose period n_i is a proper divisor of the map period.
struct Orbit {
  std::vector<TorusPoint> points;  // lexicographically least point first, then by iteration
  Int n_i;                         // orbit period, |points|
  Int lambda;                      // map period / n_i
  Int delta;                       // local rotation class of A^{n_i}, coprime to lambda
  Int d;                           // inverse of delta mod lambda
};

struct BSet {
  std::vector<Orbit> orbits;  // ordered by descending n_i, then least point
};

// Partition of an f-invariant finite set into f-orbits; orbits sorted by
// (descending size, least point), each listed from its least point onwards.
std::vector<std::vector<TorusPoint>> orbit_decomposition(const AffineTorusMap& f,
                                                         std::vector<TorusPoint> points);

// The class delta in {1..lambda-1} of B as a rotation by 2 pi delta / lambda:
// cos(2 pi delta / lambda) = trace(B)/2 and the sign of sin matches the sign
// of the lower-left entry of B. Requires det(B) = 1 and B of order exactly
// lambda.
Int local_rotation(const Mat2& B, const Int& lambda);

// The unique d in {1..lambda-1} with d * delta = 1 (mod lambda).
Int valency_d(const Int& delta, const Int& lambda);

// All points of period strictly less than the map period, as annotated orbits.
BSet lower_period_set(const AffineTorusMap& f);

CompleteCharacteristic complete_characteristic(const AffineTorusMap& f);

// det(I - A): the signed fixed point count of the induced torus map.
Int lefschetz_number(const Mat2& A);

struct ConjugacyVerdict {
  bool conjugate = false;
  std::string reason;
};

// Conjugacy by an orientation preserving homeomorphism: equal periods when
// both maps are free, equivalent complete characteristics otherwise.
ConjugacyVerdict conjugate_test(const AffineTorusMap& f, const AffineTorusMap& g);

}  // namespace torusmaps

#endif
