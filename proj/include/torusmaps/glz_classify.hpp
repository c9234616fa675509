#ifndef TORUSMAPS_GLZ_CLASSIFY_HPP
#define TORUSMAPS_GLZ_CLASSIFY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "torusmaps/exactlin.hpp"

namespace torusmaps {

struct SpectrumNotUnitModulus : std::domain_error {
  SpectrumNotUnitModulus()
      : std::domain_error("matrix has an eigenvalue of modulus != 1") {}
};

// Similarity class over Z of a unimodular matrix with unit-modulus spectrum:
// one of the seven canonical families M1(m), M2(m), M3..M7.
struct SimilarityClass {
  enum class Family { M1, M2, M3, M4, M5, M6, M7 };

  Family family;
  Int m = 0;  // parameter of the M1/M2 families; 0 otherwise
};

bool operator==(const SimilarityClass& a, const SimilarityClass& b);
bool operator!=(const SimilarityClass& a, const SimilarityClass& b);
std::string to_string(const SimilarityClass& c);

// The canonical matrix of the class.
Mat2 representative(const SimilarityClass& c);

// Conjugacy classes of periodic torus automorphisms under orientation
// preserving homeomorphisms.
enum class OrientedClass {
  Identity,
  A1,
  A2,
  A3,
  A4,
  A5,
  A6,
  A7,
  NonPeriodic,
  OrientationReversing,
};

std::string to_string(OrientedClass c);

// The representative matrices of A1..A7 (index j-1 holds A_j):
// A1 = M2(0), A2 = M6^-1, A3 = M6, A4 = M7, A5 = M7^-1, A6 = M5^-1, A7 = M5.
const std::array<Mat2, 7>& oriented_representatives();

// Both eigenvalues of modulus 1, decided exactly:
// det = 1 and |trace| <= 2, or det = -1 and trace = 0.
bool has_unit_modulus_spectrum(const Mat2& A);

// Smallest n >= 1 with A^n = I; nullopt for infinite order.
std::optional<int> period_of(const Mat2& A);

// The unique canonical family a unit-modulus unimodular matrix is similar to.
SimilarityClass batterson_class(const Mat2& A);

// Exhaustive search for S with entries in [-bound, bound], det(S) = +-1 and
// S B = A S. False negatives are possible when bound is too small.
bool are_similar_over_Z(const Mat2& A, const Mat2& B, int bound);

// Orientation preserving conjugacy class of the torus automorphism f_A.
OrientedClass oriented_class(const Mat2& A);

}  // namespace torusmaps

#endif
