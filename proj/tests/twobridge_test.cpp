#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gofk/error.hpp"
#include "gofk/twobridge.hpp"
#include "oracles.hpp"

using namespace gofk;
using namespace gofk::twobridge;

namespace {

std::set<Int> as_set(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kOverflow;
}

}  // namespace

TEST_CASE("canonical picks the orbit minimum") {
  CHECK(canonical(19, 16) == Fraction(19, 3));
  CHECK(canonical(4, 3) == Fraction(4, 1));
  CHECK(canonical(8, 5) == Fraction(8, 3));
  CHECK(canonical(0, -1) == Fraction(0, 1));
  CHECK(canonical(1, 7) == Fraction(1, 1));
  CHECK(canonical(1, 0) == Fraction(1, 1));
  // negative alpha is the mirror
  CHECK(canonical(-19, 16) == canonical(19, -16));
  CHECK(canonical(-5, 1) == Fraction(5, 1));
}

TEST_CASE("canonical rejects non-coprime input") {
  CHECK(kind_of([] { canonical(4, 2); }) == ErrorKind::kInvalidFraction);
  CHECK(kind_of([] { canonical(0, 3); }) == ErrorKind::kInvalidFraction);
  CHECK(kind_of([] { canonical(0, 0); }) == ErrorKind::kInvalidFraction);
  CHECK(kind_of([] { Fraction(-3, 1); }) == ErrorKind::kInvalidFraction);
}

TEST_CASE("canonical is idempotent and matches the brute-force orbit minimum") {
  for (Int alpha = 2; alpha <= 1000; ++alpha) {
    for (Int beta = -alpha; beta < 2 * alpha; beta += (alpha > 200 ? 7 : 1)) {
      if (oracle::gcd(alpha, beta) != 1) continue;
      const Fraction c = canonical(alpha, beta);
      REQUIRE(canonical(c) == c);
      const auto brute = oracle::brute_orbit(oracle::mod(beta, alpha), alpha, true);
      REQUIRE(c.beta() == *brute.upper_bound(0));
    }
  }
}

TEST_CASE("orbit examples") {
  CHECK(as_set(orbit(Fraction(19, 3), false, true)) == std::set<Int>{3, 6, 13, 16});
  CHECK(as_set(orbit(Fraction(8, 3), true, true)) == std::set<Int>{3, 5, 11, 13});
  CHECK(as_set(orbit(Fraction(0, 1), false, true)) == std::set<Int>{1});
  CHECK(as_set(orbit(Fraction(19, 3), false, false)) == std::set<Int>{3, 13});
  CHECK(kind_of([] { orbit(Fraction(9, 4), true, true); }) == ErrorKind::kOddFormRequired);
}

TEST_CASE("orbit agrees with brute force and has at most four members") {
  for (Int alpha = 1; alpha <= 120; ++alpha) {
    for (Int beta = 1; beta < 2 * alpha; ++beta) {
      if (oracle::gcd(alpha, beta) != 1) continue;
      for (bool mirror : {false, true}) {
        const auto un = orbit(Fraction(alpha, beta), false, mirror);
        CHECK(un.size() <= 4);
        CHECK(as_set(un) == oracle::brute_orbit(beta % alpha, alpha, mirror));
        if (beta % 2 == 1) {
          const auto ori = orbit(Fraction(alpha, beta), true, mirror);
          CHECK(ori.size() <= 4);
          CHECK(as_set(ori) == oracle::brute_orbit(beta, 2 * alpha, mirror));
        }
      }
    }
  }
}

TEST_CASE("equivalent examples") {
  CHECK(equivalent(Fraction(10, 3), Fraction(10, 7), true, false));
  CHECK_FALSE(equivalent(Fraction(4, 1), Fraction(4, 3), true, true));
  CHECK(equivalent(Fraction(3, 1), Fraction(3, 2), false, true));
  CHECK_FALSE(equivalent(Fraction(5, 1), Fraction(7, 1), false, true));
  CHECK(kind_of([] { equivalent(Fraction(5, 1), Fraction(5, 2), true, true); }) ==
        ErrorKind::kOddFormRequired);
}

TEST_CASE("unoriented mirror equivalence is equality of canonical keys") {
  for (Int alpha = 2; alpha <= 500; alpha += (alpha < 60 ? 1 : 13)) {
    for (Int b1 = 1; b1 < alpha; ++b1) {
      if (oracle::gcd(alpha, b1) != 1) continue;
      for (Int b2 = 1; b2 < alpha; ++b2) {
        if (oracle::gcd(alpha, b2) != 1) continue;
        REQUIRE(equivalent(Fraction(alpha, b1), Fraction(alpha, b2), false, true) ==
                (canonical(alpha, b1) == canonical(alpha, b2)));
      }
    }
  }
}

TEST_CASE("oriented equivalence refines unoriented equivalence and is symmetric") {
  for (Int alpha = 2; alpha <= 300; alpha += (alpha < 50 ? 1 : 11)) {
    for (Int b1 = 1; b1 < 2 * alpha; b1 += 2) {
      if (oracle::gcd(alpha, b1) != 1) continue;
      for (Int b2 = 1; b2 < 2 * alpha; b2 += 2) {
        if (oracle::gcd(alpha, b2) != 1) continue;
        const Fraction f1(alpha, b1), f2(alpha, b2);
        for (bool mirror : {false, true}) {
          const bool ori = equivalent(f1, f2, true, mirror);
          REQUIRE(ori == equivalent(f2, f1, true, mirror));
          if (ori) REQUIRE(equivalent(f1, f2, false, mirror));
        }
      }
    }
  }
}

TEST_CASE("orientation classes") {
  const auto c41 = orientation_classes(Fraction(4, 1));
  REQUIRE(c41.size() == 2);
  CHECK(c41[0].contains(1));
  CHECK(c41[1].contains(3));
  CHECK(orientation_classes(Fraction(8, 3)).size() == 1);
  CHECK(orientation_classes(Fraction(7, 3)).size() == 1);
  CHECK(orientation_classes(Fraction(2, 1)).size() == 1);
  CHECK(orientation_classes(Fraction(0, 1)).size() == 1);

  // members are odd, coprime to alpha, and classes are closed
  for (Int alpha = 1; alpha <= 150; ++alpha) {
    for (const Fraction& f : canonical_fractions(alpha)) {
      const auto classes = orientation_classes(f);
      CHECK(classes.size() == (alpha % 2 == 0 ? classes.size() : 1));
      for (const auto& cls : classes) {
        CHECK(cls.reps.size() <= 4);
        for (Int x : cls.reps) {
          CHECK(x % 2 == 1);
          CHECK(oracle::gcd(x, alpha) == 1);
          CHECK(cls.contains(oracle::mod(-x, 2 * alpha)));
        }
      }
    }
  }
}

TEST_CASE("cf_to_fraction examples") {
  CHECK(cf_to_fraction(ConwayDigits({1, 2, 1})).raw == RawFraction{4, 3});
  CHECK(cf_to_fraction(ConwayDigits({3, 2, 2})).raw == RawFraction{17, 5});
  const auto a = cf_to_fraction(ConwayDigits({1, 1, 1, 1}));
  CHECK(a.canonical == Fraction(5, 2));
  CHECK(cf_to_fraction(ConwayDigits({1, 2, -2})).canonical == a.canonical);
}

TEST_CASE("cf_to_fraction rejects degenerate input") {
  CHECK(kind_of([] { ConwayDigits({}); }) == ErrorKind::kDegenerateContinuedFraction);
  CHECK(kind_of([] { ConwayDigits({2, 0, 1}); }) == ErrorKind::kDegenerateContinuedFraction);
  // 1 + 1/(-1 + 1/1) divides by zero
  CHECK(kind_of([] { cf_to_fraction(ConwayDigits({1, -1, 1})); }) ==
        ErrorKind::kDegenerateContinuedFraction);
}

TEST_CASE("cf_to_fraction matches forward convergents") {
  const std::vector<std::vector<Int>> samples = {
      {5}, {1, 2, 6}, {2, 3, 4, 5}, {3, -2, 4}, {1, 1, 1, 1, 1, 1}, {-4, 2, 7}, {6, 2, 1}};
  for (const auto& d : samples) {
    const auto r = cf_to_fraction(ConwayDigits(d));
    const auto [h, k] = oracle::convergent(d);
    CHECK(r.raw == RawFraction{h, k});
  }
}

TEST_CASE("fraction_to_cf examples") {
  CHECK(fraction_to_cf(Fraction(19, 13)) == ConwayDigits({1, 2, 6}));
  CHECK(fraction_to_cf(Fraction(4, 3)) == ConwayDigits({1, 2, 1}));
  CHECK(fraction_to_cf(Fraction(2, 1)) == ConwayDigits({2}));
  CHECK(kind_of([] { fraction_to_cf(Fraction(5, 7)); }) == ErrorKind::kInvalidFraction);
  CHECK(kind_of([] { fraction_to_cf(Fraction(1, 1)); }) == ErrorKind::kInvalidFraction);
}

TEST_CASE("fraction_to_cf inverts cf_to_fraction") {
  for (Int alpha = 2; alpha <= 1000; ++alpha) {
    for (const Fraction& f : canonical_fractions(alpha)) {
      const auto digits = fraction_to_cf(f);
      CHECK(digits.digits().size() % 2 == 1);
      for (Int d : digits.digits()) CHECK(d > 0);
      REQUIRE(cf_to_fraction(digits).raw == RawFraction{f.alpha(), f.beta()});
    }
  }
}

TEST_CASE("Conway identities") {
  for (Int p = 1; p <= 50; ++p) {
    for (Int q = 1; q <= 50; ++q) {
      REQUIRE(cf_to_fraction(ConwayDigits({p, 1, 1, q})).canonical ==
              cf_to_fraction(ConwayDigits({p, 2, -q - 1})).canonical);
    }
  }
  for (Int p = 1; p <= 100; ++p) {
    for (Int q = 1; q <= 100; ++q) {
      REQUIRE(cf_to_fraction(ConwayDigits({p, 2, q})).raw ==
              RawFraction{2 * p * q + p + q, 2 * q + 1});
    }
  }
}

TEST_CASE("components") {
  CHECK(components(Fraction(4, 1)) == 2);
  CHECK(components(Fraction(19, 3)) == 1);
  CHECK(components(Fraction(0, 1)) == 2);
}
