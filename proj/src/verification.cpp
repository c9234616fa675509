#include "torusmaps/verification.hpp"

#include <sstream>

#include "torusmaps/characteristics.hpp"
#include "torusmaps/glz_classify.hpp"
#include "torusmaps/torus_dynamics.hpp"

namespace torusmaps {

namespace {

CheckResult check_enumeration() {
  CheckResult r{"seven nonfree characteristics", false, ""};
  const auto found = enumerate_torus_nonfree();
  const auto& expected = canonical_nonfree_characteristics();
  if (found.size() != expected.size()) {
    r.detail = "enumerated " + std::to_string(found.size()) + " characteristics";
    return r;
  }
  for (const auto& kappa : expected) {
    bool present = false;
    for (const auto& k : found) present = present || equivalent(k, kappa);
    if (!present) {
      r.detail = "missing " + to_string(kappa);
      return r;
    }
  }
  r.pass = true;
  r.detail = "enumeration matches kappa_1..kappa_7";
  return r;
}

CheckResult check_realization() {
  CheckResult r{"canonical matrices realize the seven classes", false, ""};
  const auto& mats = oriented_representatives();
  const auto& kappas = canonical_nonfree_characteristics();
  for (int j = 1; j <= 7; ++j) {
    const Mat2& A = mats[j - 1];
    const auto kappa = complete_characteristic(AffineTorusMap(A));
    if (!equivalent(kappa, kappas[j - 1])) {
      r.detail = "A" + std::to_string(j) + " has characteristic " + to_string(kappa);
      return r;
    }
    const auto cls = oriented_class(A);
    const auto expected_cls =
        static_cast<OrientedClass>(static_cast<int>(OrientedClass::A1) + j - 1);
    if (cls != expected_cls) {
      r.detail = "A" + std::to_string(j) + " classified as " + to_string(cls);
      return r;
    }
  }
  r.pass = true;
  r.detail = "A_j -> kappa_j for j = 1..7";
  return r;
}

CheckResult check_order6_example() {
  CheckResult r{"order-6 automorphism orbit data", false, ""};
  const Mat2 A5 = oriented_representatives()[4];
  const AffineTorusMap f(A5);

  const auto n = map_period(f);
  if (!n || *n != 6) {
    r.detail = "period is not 6";
    return r;
  }

  const auto expect_fix = [&](const Int& m, const std::vector<Vec2Q>& want) {
    const auto fix = fixed_points(iterate(f, m));
    return fix.kind == SolutionSet::Kind::Finite && fix.points == want;
  };
  const Rat h(1, 2), t1(1, 3), t2(2, 3);
  if (!expect_fix(1, {{0, 0}})) {
    r.detail = "Fix(f) is not {(0,0)}";
    return r;
  }
  if (!expect_fix(2, {{0, 0}, {t1, t1}, {t2, t2}})) {
    r.detail = "Fix(f^2) is wrong";
    return r;
  }
  if (!expect_fix(3, {{0, 0}, {0, h}, {h, 0}, {h, h}})) {
    r.detail = "Fix(f^3) is wrong";
    return r;
  }

  const auto bset = lower_period_set(f);
  if (bset.orbits.size() != 3) {
    r.detail = "expected 3 orbits";
    return r;
  }
  // Orbits in descending period order: (n_i, d_i) = (3,1), (2,2), (1,5).
  const Int want_n[3] = {3, 2, 1};
  const Int want_d[3] = {1, 2, 5};
  for (int i = 0; i < 3; ++i) {
    if (bset.orbits[i].n_i != want_n[i] || bset.orbits[i].d != want_d[i]) {
      std::ostringstream os;
      os << "orbit " << i << " has (n_i,d_i)=(" << bset.orbits[i].n_i.get_str() << ","
         << bset.orbits[i].d.get_str() << ")";
      r.detail = os.str();
      return r;
    }
  }
  r.pass = true;
  r.detail = "period 6, fixed sets and valencies d=5,2,1 confirmed";
  return r;
}

CheckResult check_count_law() {
  CheckResult r{"fixed point count law", false, ""};
  for (int j = 1; j <= 7; ++j) {
    const Mat2& A = oriented_representatives()[j - 1];
    const int n = *period_of(A);
    for (int m = 1; m < n; ++m) {
      const Mat2 Am = mat_pow(A, m);
      if (Am == Mat2::identity()) continue;
      const auto fix = fixed_points(AffineTorusMap(Am));
      if (fix.kind != SolutionSet::Kind::Finite) {
        r.detail = "Fix(A" + std::to_string(j) + "^" + std::to_string(m) + ") not finite";
        return r;
      }
      const Int expected = abs(lefschetz_number(Am));
      if (Int(fix.points.size()) != expected) {
        r.detail = "A" + std::to_string(j) + "^" + std::to_string(m) + ": " +
                   std::to_string(fix.points.size()) + " fixed points, |det(I-A^m)| = " +
                   expected.get_str();
        return r;
      }
    }
  }
  r.pass = true;
  r.detail = "|Fix(A_j^m)| = |det(I - A_j^m)| for all j, m < period";
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification() {
  return {check_enumeration(), check_realization(), check_order6_example(),
          check_count_law()};
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace torusmaps
