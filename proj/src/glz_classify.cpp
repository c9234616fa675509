#include "torusmaps/glz_classify.hpp"

#include "torusmaps/torus_dynamics.hpp"

namespace torusmaps {

namespace {

void require_unimodular(const Mat2& A) {
  const Int D = det(A);
  if (D != 1 && D != -1) throw NotUnimodular{};
}

bool congruent_to_identity_mod2(const Mat2& A) {
  return (A.a - 1) % 2 == 0 && A.b % 2 == 0 && A.c % 2 == 0 && (A.d - 1) % 2 == 0;
}

}  // namespace

bool operator==(const SimilarityClass& a, const SimilarityClass& b) {
  if (a.family != b.family) return false;
  if (a.family == SimilarityClass::Family::M1 || a.family == SimilarityClass::Family::M2)
    return a.m == b.m;
  return true;
}
bool operator!=(const SimilarityClass& a, const SimilarityClass& b) { return !(a == b); }

std::string to_string(const SimilarityClass& c) {
  switch (c.family) {
    case SimilarityClass::Family::M1: return "M1(" + c.m.get_str() + ")";
    case SimilarityClass::Family::M2: return "M2(" + c.m.get_str() + ")";
    case SimilarityClass::Family::M3: return "M3";
    case SimilarityClass::Family::M4: return "M4";
    case SimilarityClass::Family::M5: return "M5";
    case SimilarityClass::Family::M6: return "M6";
    case SimilarityClass::Family::M7: return "M7";
  }
  throw std::logic_error("unreachable");
}

Mat2 representative(const SimilarityClass& c) {
  switch (c.family) {
    case SimilarityClass::Family::M1: return Mat2{1, c.m, 0, 1};
    case SimilarityClass::Family::M2: return Mat2{-1, c.m, 0, -1};
    case SimilarityClass::Family::M3: return Mat2{1, 0, 0, -1};
    case SimilarityClass::Family::M4: return Mat2{1, 1, 0, -1};
    case SimilarityClass::Family::M5: return Mat2{0, 1, -1, 0};
    case SimilarityClass::Family::M6: return Mat2{0, 1, -1, -1};
    case SimilarityClass::Family::M7: return Mat2{0, -1, 1, 1};
  }
  throw std::logic_error("unreachable");
}

std::string to_string(OrientedClass c) {
  switch (c) {
    case OrientedClass::Identity: return "identity";
    case OrientedClass::A1: return "A1";
    case OrientedClass::A2: return "A2";
    case OrientedClass::A3: return "A3";
    case OrientedClass::A4: return "A4";
    case OrientedClass::A5: return "A5";
    case OrientedClass::A6: return "A6";
    case OrientedClass::A7: return "A7";
    case OrientedClass::NonPeriodic: return "non-periodic";
    case OrientedClass::OrientationReversing: return "orientation-reversing";
  }
  throw std::logic_error("unreachable");
}

const std::array<Mat2, 7>& oriented_representatives() {
  static const std::array<Mat2, 7> list = {
      Mat2{-1, 0, 0, -1},  // A1 = M2(0)
      Mat2{-1, -1, 1, 0},  // A2 = M6^-1
      Mat2{0, 1, -1, -1},  // A3 = M6
      Mat2{0, -1, 1, 1},   // A4 = M7
      Mat2{1, 1, -1, 0},   // A5 = M7^-1
      Mat2{0, -1, 1, 0},   // A6 = M5^-1
      Mat2{0, 1, -1, 0},   // A7 = M5
  };
  return list;
}

bool has_unit_modulus_spectrum(const Mat2& A) {
  const Int D = det(A);
  if (D != 1 && D != -1) throw NotUnimodular{};
  const Int t = trace(A);
  // det 1: eigenvalues conjugate on the unit circle iff |trace| <= 2.
  // det -1: real eigenvalues with product -1, both unit iff they are +-1.
  return D == 1 ? (t >= -2 && t <= 2) : t == 0;
}

std::optional<int> period_of(const Mat2& A) {
  require_unimodular(A);
  Mat2 P = A;
  for (int n = 1; n <= 12; ++n) {
    if (P == Mat2::identity()) return n;
    P = P * A;
  }
  return std::nullopt;
}

SimilarityClass batterson_class(const Mat2& A) {
  if (!has_unit_modulus_spectrum(A)) throw SpectrumNotUnitModulus{};
  const Int D = det(A);
  const Int t = trace(A);
  if (D == -1) {
    // trace is 0 here; the residue of A mod 2 separates the two classes and
    // is invariant under conjugation.
    return congruent_to_identity_mod2(A)
               ? SimilarityClass{SimilarityClass::Family::M3}
               : SimilarityClass{SimilarityClass::Family::M4};
  }
  if (t == 2) return SimilarityClass{SimilarityClass::Family::M1, content(A - Mat2::identity())};
  if (t == -2) return SimilarityClass{SimilarityClass::Family::M2, content(A + Mat2::identity())};
  if (t == 0) return SimilarityClass{SimilarityClass::Family::M5};
  if (t == -1) return SimilarityClass{SimilarityClass::Family::M6};
  return SimilarityClass{SimilarityClass::Family::M7};  // t == 1
}

bool are_similar_over_Z(const Mat2& A, const Mat2& B, int bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be positive");
  Mat2 S;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          const long ds = a * d - b * c;
          if (ds != 1 && ds != -1) continue;
          S = Mat2{a, b, c, d};
          if (S * B == A * S) return true;
        }
  return false;
}

OrientedClass oriented_class(const Mat2& A) {
  require_unimodular(A);
  if (A == Mat2::identity()) return OrientedClass::Identity;
  if (!period_of(A)) return OrientedClass::NonPeriodic;
  if (det(A) == -1) return OrientedClass::OrientationReversing;
  const auto kappa = complete_characteristic(AffineTorusMap(A));
  const auto j = canonical_index(kappa);
  if (!j) throw std::logic_error("periodic automorphism with unknown characteristic");
  return static_cast<OrientedClass>(static_cast<int>(OrientedClass::A1) + *j - 1);
}

}  // namespace torusmaps
