#include "torusmaps/torus_dynamics.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace torusmaps {

namespace {

// A^m together with A^{m-1} + ... + A + I, by binary splitting so that huge
// exponents (shift maps with large denominators) stay cheap.
struct PowerSum {
  Mat2 power;
  Mat2 sum;
};

PowerSum power_sum(const Mat2& A, const Int& m) {
  if (m == 0) return {Mat2::identity(), Mat2::zero()};
  const Int half = m / 2;
  PowerSum h = power_sum(A, half);
  PowerSum r;
  r.power = h.power * h.power;
  r.sum = h.sum + h.power * h.sum;  // S_{2q} = S_q + A^q S_q
  if (mpz_odd_p(m.get_mpz_t())) {
    r.sum = r.sum + r.power;  // S_{2q+1} = S_{2q} + A^{2q}
    r.power = r.power * A;
  }
  return r;
}

// Matrix order searched up to 12; every finite order in GL(2,Z) divides 12.
std::optional<int> matrix_order(const Mat2& A) {
  Mat2 P = A;
  for (int n = 1; n <= 12; ++n) {
    if (P == Mat2::identity()) return n;
    P = P * A;
  }
  return std::nullopt;
}

Int denominator_lcm(const Vec2Q& u) { return lcm(u.x.get_den(), u.y.get_den()); }

}  // namespace

AffineTorusMap::AffineTorusMap(Mat2 A_, Vec2Q v_) : A(std::move(A_)), v(frac_mod1(v_)) {
  const Int D = det(A);
  if (D != 1 && D != -1) throw NotUnimodular{};
}

bool operator==(const AffineTorusMap& f, const AffineTorusMap& g) {
  return f.A == g.A && f.v == g.v;
}

TorusPoint apply(const AffineTorusMap& f, const TorusPoint& x) {
  return frac_mod1(f.A * x + f.v);
}

AffineTorusMap iterate(const AffineTorusMap& f, const Int& m) {
  if (m < 0) throw std::invalid_argument("negative iterate");
  const PowerSum ps = power_sum(f.A, m);
  return AffineTorusMap(ps.power, ps.sum * f.v);
}

std::optional<Int> map_period(const AffineTorusMap& f) {
  const auto r = matrix_order(f.A);
  if (!r) return std::nullopt;
  // f^n = id iff A^n = I and (A^{n-1}+...+I)v is integral. A^n = I forces
  // r | n, and for n = r t the translation sum collapses to t * S_r v, so the
  // minimal t is the lcm of the denominators of S_r v.
  const PowerSum ps = power_sum(f.A, Int(*r));
  const Vec2Q w = ps.sum * f.v;
  return Int(*r) * denominator_lcm(w);
}

SolutionSet fixed_points(const AffineTorusMap& f) {
  return solve_torus_congruence(f.A - Mat2::identity(), -f.v);
}

std::vector<std::vector<TorusPoint>> orbit_decomposition(const AffineTorusMap& f,
                                                         std::vector<TorusPoint> points) {
  std::set<TorusPoint> remaining(points.begin(), points.end());
  for (const auto& pt : remaining)
    if (remaining.count(apply(f, pt)) == 0) throw NotInvariant{};

  std::vector<std::vector<TorusPoint>> orbits;
  while (!remaining.empty()) {
    const TorusPoint start = *remaining.begin();  // lexicographically least
    std::vector<TorusPoint> orbit;
    TorusPoint cur = start;
    do {
      orbit.push_back(cur);
      remaining.erase(cur);
      cur = apply(f, cur);
    } while (cur != start);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const std::vector<TorusPoint>& a, const std::vector<TorusPoint>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.front() < b.front();
            });
  return orbits;
}

Int local_rotation(const Mat2& B, const Int& lambda) {
  if (det(B) != 1) throw NotSpecialLinear{};
  if (lambda < 2) throw WrongOrder{};
  const auto order = matrix_order(B);
  if (!order || Int(*order) != lambda) throw WrongOrder{};
  // B is conjugate in the orientation preserving linear group to the rotation
  // by 2 pi delta / lambda. Both candidate classes delta and lambda - delta
  // share cos = trace/2; the sign of sin agrees with the sign of the
  // lower-left entry, which never vanishes for order > 2. Order 2 means
  // B = -I, a half turn.
  if (lambda == 2) return 1;
  return B.c > 0 ? Int(1) : lambda - 1;
}

Int valency_d(const Int& delta, const Int& lambda) {
  if (lambda < 2 || delta < 1 || delta >= lambda)
    throw std::invalid_argument("rotation class out of range");
  Int d;
  if (mpz_invert(d.get_mpz_t(), delta.get_mpz_t(), lambda.get_mpz_t()) == 0)
    throw NotCoprime{};
  return d;
}

BSet lower_period_set(const AffineTorusMap& f) {
  const auto n_opt = map_period(f);
  if (!n_opt) throw NotPeriodic{};
  if (det(f.A) == -1) throw OrientationReversing{};
  const Int n = *n_opt;

  BSet out;
  if (f.A == Mat2::identity()) return out;  // every point of a shift has full period

  // For a periodic non-identity linear part with det 1 the map period equals
  // the matrix order, so it is at most 6 and the divisor loop is short.
  std::set<TorusPoint> pts;
  for (Int m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    const SolutionSet fix = fixed_points(iterate(f, m));
    switch (fix.kind) {
      case SolutionSet::Kind::Finite:
        pts.insert(fix.points.begin(), fix.points.end());
        break;
      case SolutionSet::Kind::Empty:
        break;
      case SolutionSet::Kind::AllOfTorus:
        throw std::logic_error("f^m = id with m < period");  // period minimality
      case SolutionSet::Kind::PositiveDimensional:
        throw DegenerateFixedSet{};
    }
  }

  const auto orbits = orbit_decomposition(f, {pts.begin(), pts.end()});
  for (const auto& orbit_points : orbits) {
    Orbit o;
    o.points = orbit_points;
    o.n_i = Int(orbit_points.size());
    o.lambda = n / o.n_i;
    o.delta = local_rotation(mat_pow(f.A, o.n_i), o.lambda);
    o.d = valency_d(o.delta, o.lambda);
    out.orbits.push_back(std::move(o));
  }
  return out;
}

CompleteCharacteristic complete_characteristic(const AffineTorusMap& f) {
  const auto n = map_period(f);
  if (!n) throw NotPeriodic{};
  if (det(f.A) == -1) throw OrientationReversing{};
  const BSet bset = lower_period_set(f);
  std::vector<Valency> valencies;
  valencies.reserve(bset.orbits.size());
  for (const auto& o : bset.orbits) valencies.push_back(Valency{o.n_i, o.d});
  return CompleteCharacteristic::make(*n, 1, std::move(valencies));
}

Int lefschetz_number(const Mat2& A) { return det(Mat2::identity() - A); }

ConjugacyVerdict conjugate_test(const AffineTorusMap& f, const AffineTorusMap& g) {
  if (det(f.A) == -1 || det(g.A) == -1) throw OrientationReversing{};
  const auto nf = map_period(f);
  const auto ng = map_period(g);
  if (!nf || !ng) throw NotPeriodic{};

  const CompleteCharacteristic kf = complete_characteristic(f);
  const CompleteCharacteristic kg = complete_characteristic(g);
  if (kf.orbits.empty() && kg.orbits.empty()) {
    if (*nf == *ng)
      return {true, "both free with equal period " + nf->get_str()};
    return {false, "both free but periods differ: " + nf->get_str() + " vs " + ng->get_str()};
  }
  if (equivalent(kf, kg))
    return {true, "equal complete characteristics " + to_string(kf)};
  return {false,
          "complete characteristics differ: " + to_string(kf) + " vs " + to_string(kg)};
}

}  // namespace torusmaps
