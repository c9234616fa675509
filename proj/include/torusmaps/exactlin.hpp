#ifndef TORUSMAPS_EXACTLIN_HPP
#define TORUSMAPS_EXACTLIN_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace torusmaps {

using Int = mpz_class;
using Rat = mpq_class;

struct NotUnimodular : std::domain_error {
  NotUnimodular() : std::domain_error("matrix determinant is not +1 or -1") {}
};

// Fractional part x - floor(x), always in [0,1).
Rat frac_mod1(const Rat& x);
bool is_integer(const Rat& x);

// Accepts "p/q" or "p"; result is canonical (lowest terms, positive
// denominator). Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& x);

struct Vec2Q {
  Rat x;
  Rat y;
};

bool operator==(const Vec2Q& u, const Vec2Q& w);
bool operator!=(const Vec2Q& u, const Vec2Q& w);
bool operator<(const Vec2Q& u, const Vec2Q& w);  // lexicographic by (x, y)
Vec2Q operator+(const Vec2Q& u, const Vec2Q& w);
Vec2Q operator-(const Vec2Q& u);
Vec2Q operator-(const Vec2Q& u, const Vec2Q& w);
Vec2Q frac_mod1(const Vec2Q& u);
bool is_integer(const Vec2Q& u);

// Row-major 2x2 integer matrix (a b; c d).
struct Mat2 {
  Int a;
  Int b;
  Int c;
  Int d;

  static Mat2 identity() { return Mat2{1, 0, 0, 1}; }
  static Mat2 zero() { return Mat2{0, 0, 0, 0}; }
};

bool operator==(const Mat2& A, const Mat2& B);
bool operator!=(const Mat2& A, const Mat2& B);
Mat2 operator+(const Mat2& A, const Mat2& B);
Mat2 operator-(const Mat2& A, const Mat2& B);
Mat2 operator-(const Mat2& A);
Mat2 operator*(const Mat2& A, const Mat2& B);
Vec2Q operator*(const Mat2& A, const Vec2Q& u);

Mat2 mat_pow(const Mat2& A, const Int& m);  // m >= 0; A^0 = I
Int det(const Mat2& A);
Int trace(const Mat2& A);
Int content(const Mat2& A);  // gcd of absolute entries; 0 for the zero matrix
Mat2 adjugate(const Mat2& A);

// Exact inverse of a determinant +-1 matrix. Throws NotUnimodular otherwise.
Mat2 unimodular_inverse(const Mat2& A);

std::string mat_str(const Mat2& A);

// Solutions x in [0,1)^2 of M x = b (mod Z^2).
struct SolutionSet {
  enum class Kind { Finite, AllOfTorus, Empty, PositiveDimensional };

  Kind kind = Kind::Empty;
  // Finite only: distinct points, coordinates in [0,1), sorted lexicographically.
  std::vector<Vec2Q> points;
};

SolutionSet solve_torus_congruence(const Mat2& M, const Vec2Q& b);

}  // namespace torusmaps

#endif
