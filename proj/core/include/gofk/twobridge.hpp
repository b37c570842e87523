#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

// Two-bridge fractions b(alpha, beta): validation, the four equivalence
// relations, orientation classes, and continued-fraction conversion.

namespace gofk::twobridge {

using Int = std::int64_t;

// A valid (not necessarily canonical) two-bridge parameter pair.
// alpha >= 0 and gcd(alpha, |beta|) = 1, so alpha = 0 forces beta = +-1.
class Fraction {
 public:
  // Throws Error(kInvalidFraction) when the pair violates the gcd rule or
  // alpha is negative. Use canonical() to accept the mirrored negative form.
  Fraction(Int alpha, Int beta);

  Int alpha() const noexcept { return alpha_; }
  Int beta() const noexcept { return beta_; }

  std::string to_string() const;

  friend auto operator<=>(const Fraction&, const Fraction&) = default;

 private:
  Int alpha_;
  Int beta_;
};

// One oriented two-bridge link up to mirror image, given by the odd
// representatives of its beta in (0, 2 alpha).
struct OrientationClass {
  Int alpha = 0;
  std::vector<Int> reps;  // sorted

  bool contains(Int x) const;
};

// Nonempty sequence of nonzero integers read as
// d1 + 1/(d2 + 1/(... + 1/dk)).
class ConwayDigits {
 public:
  // Throws Error(kDegenerateContinuedFraction) for an empty sequence or a
  // zero digit.
  explicit ConwayDigits(std::vector<Int> digits);

  const std::vector<Int>& digits() const noexcept { return digits_; }

  friend bool operator==(const ConwayDigits&, const ConwayDigits&) = default;

 private:
  std::vector<Int> digits_;
};

struct RawFraction {
  Int alpha = 0;
  Int beta = 0;
  friend bool operator==(const RawFraction&, const RawFraction&) = default;
};

struct CfResult {
  RawFraction raw;
  Fraction canonical;
};

// Minimum of {+-beta^(+-1) mod alpha} in [1, alpha-1] for alpha >= 2, (0,1)
// for alpha = 0 and (1,1) for alpha = 1. A negative alpha is read as the
// mirror (|alpha|, -beta).
Fraction canonical(Int alpha, Int beta);
Fraction canonical(const Fraction& f);

// Equivalence orbit of beta, reduced into [0, alpha) (unoriented) or
// [0, 2 alpha) (oriented, beta must be odd). Sorted, no duplicates.
std::vector<Int> orbit(const Fraction& f, bool oriented, bool mirror);

bool equivalent(const Fraction& f1, const Fraction& f2, bool oriented, bool mirror);

// One class for knots and the unlink; one or two for two-component links.
std::vector<OrientationClass> orientation_classes(const Fraction& f);

CfResult cf_to_fraction(const ConwayDigits& digits);

// All-positive digits of odd length. Requires alpha >= 2, 0 < beta < alpha.
ConwayDigits fraction_to_cf(const Fraction& f);

int components(const Fraction& f);

// Every canonical fraction with the given alpha, ordered by beta.
std::vector<Fraction> canonical_fractions(Int alpha);

}  // namespace gofk::twobridge
