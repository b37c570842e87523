#include "gofk/twobridge.hpp"

#include <algorithm>
#include <string>

#include "gofk/arith.hpp"
#include "gofk/error.hpp"

namespace gofk::twobridge {

namespace {

[[noreturn]] void invalid(Int alpha, Int beta, const char* why) {
  throw Error(ErrorKind::kInvalidFraction, "invalid fraction (" + std::to_string(alpha) + ", " +
                                               std::to_string(beta) + "): " + why);
}

void sort_unique(std::vector<Int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_odd(const Fraction& f) {
  if (f.beta() % 2 == 0) {
    throw Error(ErrorKind::kOddFormRequired,
                "oriented comparison needs odd beta, got " + f.to_string());
  }
}

}  // namespace

Fraction::Fraction(Int alpha, Int beta) : alpha_(alpha), beta_(beta) {
  if (alpha < 0) invalid(alpha, beta, "alpha must be non-negative");
  if (arith::gcd(alpha, beta) != 1) invalid(alpha, beta, "alpha and beta are not coprime");
}

std::string Fraction::to_string() const {
  return "b(" + std::to_string(alpha_) + "," + std::to_string(beta_) + ")";
}

bool OrientationClass::contains(Int x) const {
  return std::binary_search(reps.begin(), reps.end(), x);
}

ConwayDigits::ConwayDigits(std::vector<Int> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) {
    throw Error(ErrorKind::kDegenerateContinuedFraction, "empty Conway digit sequence");
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == 0) {
      throw Error(ErrorKind::kDegenerateContinuedFraction,
                  "Conway digit " + std::to_string(i + 1) + " is zero");
    }
  }
}

Fraction canonical(Int alpha, Int beta) {
  if (alpha < 0) {
    if (alpha == INT64_MIN || beta == INT64_MIN) invalid(alpha, beta, "out of range");
    alpha = -alpha;
    beta = -beta;
  }
  if (arith::gcd(alpha, beta) != 1) invalid(alpha, beta, "alpha and beta are not coprime");
  if (alpha == 0) return Fraction(0, 1);
  if (alpha == 1) return Fraction(1, 1);
  Int b = arith::mod(beta, alpha);
  Int inv = arith::inverse_mod(b, alpha);
  Int best = std::min({b, inv, alpha - b, alpha - inv});
  return Fraction(alpha, best);
}

Fraction canonical(const Fraction& f) { return canonical(f.alpha(), f.beta()); }

std::vector<Int> orbit(const Fraction& f, bool oriented, bool mirror) {
  if (oriented) require_odd(f);
  if (f.alpha() == 0) {
    // b(0, +-1): the unlink; +-1 are mirror images of each other.
    return {mirror ? Int{1} : f.beta()};
  }
  const Int m = oriented ? arith::checked_mul(2, f.alpha()) : f.alpha();
  const Int b = arith::mod(f.beta(), m);
  const Int inv = arith::inverse_mod(b, m);
  std::vector<Int> out{b, inv};
  if (mirror) {
    out.push_back(arith::mod(-b, m));
    out.push_back(arith::mod(-inv, m));
  }
  sort_unique(out);
  return out;
}

bool equivalent(const Fraction& f1, const Fraction& f2, bool oriented, bool mirror) {
  if (oriented) require_odd(f2);
  const auto o = orbit(f1, oriented, mirror);
  if (f1.alpha() != f2.alpha()) return false;
  if (f1.alpha() == 0) {
    return std::find(o.begin(), o.end(), mirror ? Int{1} : f2.beta()) != o.end();
  }
  const Int m = oriented ? 2 * f1.alpha() : f1.alpha();
  return std::binary_search(o.begin(), o.end(), arith::mod(f2.beta(), m));
}

std::vector<OrientationClass> orientation_classes(const Fraction& f) {
  const Fraction c = canonical(f);
  const Int alpha = c.alpha();
  if (alpha == 0) return {OrientationClass{0, {1}}};

  // odd lift of beta; for a knot exactly one of beta, beta + alpha is odd
  const Int odd_beta = c.beta() % 2 != 0 ? c.beta() : c.beta() + alpha;
  OrientationClass first{alpha, orbit(Fraction(alpha, odd_beta), true, true)};
  if (alpha % 2 != 0) return {first};

  // reversing one component of a two-component link shifts beta by alpha
  const Int other = arith::mod(odd_beta + alpha, 2 * alpha);
  if (first.contains(other)) return {first};
  OrientationClass second{alpha, orbit(Fraction(alpha, other), true, true)};
  return {first, second};
}

CfResult cf_to_fraction(const ConwayDigits& digits) {
  const auto& d = digits.digits();
  // (num, den) holds the value of the tail d_i + 1/(... + 1/d_k)
  Int num = d.back();
  Int den = 1;
  for (std::size_t i = d.size() - 1; i-- > 0;) {
    if (num == 0) {
      throw Error(ErrorKind::kDegenerateContinuedFraction,
                  "continued fraction divides by zero after digit " + std::to_string(i + 2));
    }
    Int next = arith::checked_add(arith::checked_mul(d[i], num), den);
    den = num;
    num = next;
  }
  if (num < 0) {
    num = -num;
    den = -den;
  }
  RawFraction raw{num, den};
  return CfResult{raw, canonical(num, den)};
}

ConwayDigits fraction_to_cf(const Fraction& f) {
  if (f.alpha() < 2 || f.beta() <= 0 || f.beta() >= f.alpha()) {
    invalid(f.alpha(), f.beta(), "expected alpha >= 2 and 0 < beta < alpha");
  }
  std::vector<Int> out;
  Int a = f.alpha(), b = f.beta();
  while (b != 0) {
    out.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  // [.., a_k] = [.., a_k - 1, 1]; a_k >= 2 here, so this keeps digits positive
  if (out.size() % 2 == 0) {
    out.back() -= 1;
    out.push_back(1);
  }
  return ConwayDigits(std::move(out));
}

int components(const Fraction& f) { return f.alpha() % 2 == 0 ? 2 : 1; }

std::vector<Fraction> canonical_fractions(Int alpha) {
  if (alpha < 0) invalid(alpha, 1, "alpha must be non-negative");
  if (alpha == 0) return {Fraction(0, 1)};
  if (alpha == 1) return {Fraction(1, 1)};
  std::vector<Fraction> out;
  for (Int beta = 1; beta < alpha; ++beta) {
    if (arith::gcd(alpha, beta) != 1) continue;
    Fraction c = canonical(alpha, beta);
    if (c.beta() == beta) out.push_back(c);
  }
  return out;
}

}  // namespace gofk::twobridge
