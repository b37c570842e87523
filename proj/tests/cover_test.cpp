#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gofk/cover.hpp"
#include "gofk/error.hpp"
#include "gofk/verify.hpp"
#include "oracles.hpp"

using namespace gofk;
using namespace gofk::cover;
using braid::BraidWord;

namespace {

BraidWord power_word(std::initializer_list<std::pair<int, Int>> parts) {
  BraidWord w;
  for (auto [g, e] : parts) w.append_power(g, e);
  return w;
}

}  // namespace

TEST_CASE("burau_matrix examples") {
  CHECK(burau_matrix(BraidWord{1, 2, 1}) == Matrix2{0, 1, -1, 0});
  CHECK(burau_matrix(braid::full_twist()) == Matrix2{-1, 0, 0, -1});
  CHECK(burau_matrix(BraidWord{}) == Matrix2::identity());
  CHECK(burau_matrix(BraidWord{1, 2, 1}) == burau_matrix(BraidWord{2, 1, 2}));
}

TEST_CASE("burau_matrix is a homomorphism into SL(2,Z)") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord a = verify::random_word(rng, 60);
    const BraidWord b = verify::random_word(rng, 30);
    REQUIRE(burau_matrix(a).determinant() == 1);
    REQUIRE(burau_matrix(braid::concat(a, b)) == burau_matrix(a) * burau_matrix(b));
    REQUIRE(burau_matrix(braid::concat(a, braid::invert(a))) == Matrix2::identity());
  }
}

TEST_CASE("closure_determinant examples") {
  CHECK(closure_determinant(power_word({{1, 3}, {2, 1}})) == 3);
  CHECK(closure_determinant(power_word({{1, 3}, {2, 2}, {1, 2}, {2, -1}})) == 17);
  CHECK(closure_determinant(BraidWord{1, 2}) == 1);
  CHECK(closure_determinant(power_word({{1, 6}, {2, 2}, {1, 1}, {2, -1}})) == 19);
  CHECK(closure_determinant(power_word({{1, 1}, {2, 2}, {1, -2}, {2, -1}})) == 5);
  CHECK(closure_determinant(BraidWord{}) == 0);
}

TEST_CASE("closure_determinant agrees with the generic Burau oracle") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord w = verify::random_word(rng, 16);
    REQUIRE(closure_determinant(w) == oracle::determinant_via_generic_burau(w.letters()));
  }
}

TEST_CASE("closure_determinant invariances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord w = verify::random_word(rng, 30);
    const BraidWord u = verify::random_word(rng, 20);
    const Int det = closure_determinant(w);
    REQUIRE(closure_determinant(braid::conjugate_by(w, u)) == det);
    REQUIRE(closure_determinant(braid::mirror(w)) == det);
    REQUIRE(closure_determinant(braid::reverse(w)) == det);
    for (Int n = -3; n <= 3; ++n) {
      REQUIRE(closure_determinant(braid::surgery_twist(w, n)) == det);
    }
  }
}

TEST_CASE("dbc_homology examples") {
  CHECK(dbc_homology(power_word({{1, 4}, {2, 1}})).factors == std::vector<Int>{1, 4});
  CHECK(dbc_homology(BraidWord{2}).factors == std::vector<Int>{1, 0});
  CHECK(dbc_homology(BraidWord{1, 2}).factors == std::vector<Int>{1, 1});
  CHECK(dbc_homology(BraidWord{}).factors == std::vector<Int>{0, 0});
  CHECK(dbc_homology(power_word({{1, 2}, {2, 2}})).factors == std::vector<Int>{2, 2});
}

TEST_CASE("dbc_homology matches elimination and the determinant") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord w = verify::random_word(rng, 24);
    Matrix2 m = burau_matrix(w);
    const auto h = dbc_homology(w);
    const auto ref = oracle::smith_by_elimination({m.a - 1, m.b, m.c, m.d - 1});
    REQUIRE(h.factors == ref);
    REQUIRE(h.factors.size() == 2);
    if (h.factors[0] != 0) {
      CHECK(h.factors[1] % h.factors[0] == 0);
    }
    const Int det = closure_determinant(w);
    if (det != 0) CHECK(h.factors[0] * h.factors[1] == det);
  }
}

TEST_CASE("lift_slope") {
  CHECK(lift_slope(1, 1) == SlopeSpec{2, 1, 1});
  CHECK(lift_slope(1, 2) == SlopeSpec{1, 1, 2});
  CHECK(lift_slope(0, 1) == SlopeSpec{0, 1, 1});
  CHECK(lift_slope(-3, 4) == SlopeSpec{-3, 2, 2});
  CHECK(lift_slope(5, 3) == SlopeSpec{10, 3, 1});
  for (auto [p, q] : {std::pair<Int, Int>{2, 4}, {1, 0}, {1, -3}, {0, 2}}) {
    try {
      lift_slope(p, q);
      FAIL("accepted invalid slope");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidSlope);
    }
  }
}

TEST_CASE("matrix products report overflow") {
  BraidWord w;
  for (int i = 0; i < 200; ++i) w.append(BraidWord{1, -2});
  try {
    burau_matrix(w);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kOverflow);
  }
}
