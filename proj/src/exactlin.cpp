#include "torusmaps/exactlin.hpp"

#include <set>
#include <utility>

namespace torusmaps {

Rat frac_mod1(const Rat& x) {
  Int floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat r = x - Rat(floor_q);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& x) { return x.get_num() % x.get_den() == 0; }

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool operator==(const Vec2Q& u, const Vec2Q& w) { return u.x == w.x && u.y == w.y; }
bool operator!=(const Vec2Q& u, const Vec2Q& w) { return !(u == w); }

bool operator<(const Vec2Q& u, const Vec2Q& w) {
  const int cx = cmp(u.x, w.x);
  if (cx != 0) return cx < 0;
  return cmp(u.y, w.y) < 0;
}

Vec2Q operator+(const Vec2Q& u, const Vec2Q& w) { return Vec2Q{u.x + w.x, u.y + w.y}; }
Vec2Q operator-(const Vec2Q& u) { return Vec2Q{-u.x, -u.y}; }
Vec2Q operator-(const Vec2Q& u, const Vec2Q& w) { return Vec2Q{u.x - w.x, u.y - w.y}; }

Vec2Q frac_mod1(const Vec2Q& u) { return Vec2Q{frac_mod1(u.x), frac_mod1(u.y)}; }

bool is_integer(const Vec2Q& u) { return is_integer(u.x) && is_integer(u.y); }

bool operator==(const Mat2& A, const Mat2& B) {
  return A.a == B.a && A.b == B.b && A.c == B.c && A.d == B.d;
}
bool operator!=(const Mat2& A, const Mat2& B) { return !(A == B); }

Mat2 operator+(const Mat2& A, const Mat2& B) {
  return Mat2{A.a + B.a, A.b + B.b, A.c + B.c, A.d + B.d};
}
Mat2 operator-(const Mat2& A, const Mat2& B) {
  return Mat2{A.a - B.a, A.b - B.b, A.c - B.c, A.d - B.d};
}
Mat2 operator-(const Mat2& A) { return Mat2{-A.a, -A.b, -A.c, -A.d}; }

Mat2 operator*(const Mat2& A, const Mat2& B) {
  return Mat2{A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
              A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
}

Vec2Q operator*(const Mat2& A, const Vec2Q& u) {
  Rat x = A.a * u.x + A.b * u.y;
  Rat y = A.c * u.x + A.d * u.y;
  x.canonicalize();
  y.canonicalize();
  return Vec2Q{x, y};
}

Mat2 mat_pow(const Mat2& A, const Int& m) {
  if (m < 0) throw std::invalid_argument("negative matrix exponent");
  Mat2 result = Mat2::identity();
  Mat2 base = A;
  Int e = m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Int det(const Mat2& A) { return A.a * A.d - A.b * A.c; }
Int trace(const Mat2& A) { return A.a + A.d; }

Int content(const Mat2& A) {
  Int g = gcd(gcd(A.a, A.b), gcd(A.c, A.d));
  return abs(g);
}

Mat2 adjugate(const Mat2& A) { return Mat2{A.d, -A.b, -A.c, A.a}; }

Mat2 unimodular_inverse(const Mat2& A) {
  const Int D = det(A);
  if (D == 1) return adjugate(A);
  if (D == -1) return -adjugate(A);
  throw NotUnimodular{};
}

std::string mat_str(const Mat2& A) {
  return "(" + A.a.get_str() + "," + A.b.get_str() + ";" + A.c.get_str() + "," +
         A.d.get_str() + ")";
}

SolutionSet solve_torus_congruence(const Mat2& M, const Vec2Q& b) {
  SolutionSet out;
  if (M == Mat2::zero()) {
    out.kind = is_integer(b) ? SolutionSet::Kind::AllOfTorus : SolutionSet::Kind::Empty;
    return out;
  }
  const Int D = det(M);
  if (D == 0) {
    out.kind = SolutionSet::Kind::PositiveDimensional;
    return out;
  }

  // M x = b + k with k integral, so x = adj(M)(b + k)/det(M). Shifting k by
  // an element of M Z^2 shifts x by an integer vector; the box [0,|det|)^2
  // covers every class of Z^2 / M Z^2, so reducing mod 1 and deduplicating
  // yields all |det(M)| solutions.
  const Mat2 adj = adjugate(M);
  const Int bound = abs(D);
  std::set<Vec2Q> sols;
  for (Int i = 0; i < bound; ++i) {
    for (Int j = 0; j < bound; ++j) {
      const Vec2Q w{b.x + i, b.y + j};
      Rat x = (adj.a * w.x + adj.b * w.y) / D;
      Rat y = (adj.c * w.x + adj.d * w.y) / D;
      x.canonicalize();
      y.canonicalize();
      sols.insert(frac_mod1(Vec2Q{x, y}));
    }
  }
  out.kind = SolutionSet::Kind::Finite;
  out.points.assign(sols.begin(), sols.end());
  return out;
}

}  // namespace torusmaps
