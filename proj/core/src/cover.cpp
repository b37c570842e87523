#include "gofk/cover.hpp"

#include <cstdlib>
#include <string>

#include "gofk/arith.hpp"
#include "gofk/error.hpp"

namespace gofk::cover {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_sub;

Int Matrix2::determinant() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }

Int Matrix2::trace() const { return checked_add(a, d); }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {
      checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
      checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
      checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
      checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d)),
  };
}

Matrix2 generator_matrix(int letter) {
  switch (letter) {
    case 1: return {1, 1, 0, 1};
    case -1: return {1, -1, 0, 1};
    case 2: return {1, 0, -1, 1};
    case -2: return {1, 0, 1, 1};
  }
  throw Error(ErrorKind::kParse, "invalid braid letter " + std::to_string(letter));
}

Matrix2 burau_matrix(const braid::BraidWord& w) {
  Matrix2 m;
  for (int l : w.letters()) m = m * generator_matrix(l);
  return m;
}

Int closure_determinant(const braid::BraidWord& w) {
  const Matrix2 m = burau_matrix(w);
  const Matrix2 shifted{checked_sub(m.a, 1), m.b, m.c, checked_sub(m.d, 1)};
  const Int det = shifted.determinant();
  return det < 0 ? -det : det;
}

HomologyClass smith_form(const Matrix2& m) {
  // For 2x2: d1 = gcd of entries, d1 * d2 = |det|.
  const Int d1 = arith::gcd(arith::gcd(m.a, m.b), arith::gcd(m.c, m.d));
  if (d1 == 0) return {{0, 0}};
  Int det = m.determinant();
  det = det < 0 ? -det : det;
  return {{d1, det / d1}};
}

HomologyClass dbc_homology(const braid::BraidWord& w) {
  Matrix2 m = burau_matrix(w);
  m.a = checked_sub(m.a, 1);
  m.d = checked_sub(m.d, 1);
  return smith_form(m);
}

SlopeSpec lift_slope(Int p, Int q) {
  if (q <= 0 || arith::gcd(p, q) != 1) {
    throw Error(ErrorKind::kInvalidSlope, "invalid slope " + std::to_string(p) + "/" +
                                              std::to_string(q) +
                                              ": need q > 0 and gcd(p, q) = 1");
  }
  if (q % 2 != 0) return {checked_mul(2, p), q, 1};
  return {p, q / 2, 2};
}

}  // namespace gofk::cover
