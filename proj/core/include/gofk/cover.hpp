#pragma once

#include <cstdint>
#include <vector>

#include "gofk/braid.hpp"

// Arithmetic of the double branched cover of a closed 3-braid: the reduced
// Burau representation at t = -1 (an SL(2,Z) image), the determinant of the
// closure and the first homology of its double branched cover.

namespace gofk::cover {

using Int = std::int64_t;

struct Matrix2 {
  Int a = 1, b = 0;
  Int c = 0, d = 1;

  static Matrix2 identity() { return {}; }
  Int determinant() const;
  Int trace() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct HomologyClass {
  // Smith invariant factors of M - I; 0 stands for a Z summand.
  std::vector<Int> factors;
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

struct SlopeSpec {
  Int numerator = 0;
  Int denominator = 1;
  int curve_count = 1;
  friend bool operator==(const SlopeSpec&, const SlopeSpec&) = default;
};

// s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]].
Matrix2 generator_matrix(int letter);
Matrix2 burau_matrix(const braid::BraidWord& w);

// |det(M - I)|, the determinant of the closed braid.
Int closure_determinant(const braid::BraidWord& w);

HomologyClass smith_form(const Matrix2& m);
HomologyClass dbc_homology(const braid::BraidWord& w);

// Lift of a slope p/q on the braid-axis torus to the lifted knot's torus.
SlopeSpec lift_slope(Int p, Int q);

}  // namespace gofk::cover
