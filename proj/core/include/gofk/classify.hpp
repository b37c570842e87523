#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gofk/braid.hpp"
#include "gofk/twobridge.hpp"

// Counting closed 3-braid axes of two-bridge links, which is the same as
// counting genus one fibered knots in the lens space L(alpha, beta) that
// double covers S^3 branched over b(alpha, beta).

namespace gofk::classify {

using Int = std::int64_t;
using braid::BraidWord;
using twobridge::Fraction;

enum class Family { kOne, kTwo };

// Braid-index-3 two-bridge links: alpha = 2pq + p + q + delta, odd
// beta* = 2q + 1, with delta = 0 (kOne) or 1 (kTwo).
struct FamilyParams {
  Family family = Family::kOne;
  Int p = 1;
  Int q = 1;

  Int alpha() const;
  Int beta_star() const { return 2 * q + 1; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

enum class WitnessKind { kTorusPositive, kTorusNegative, kFlypeFamily };

struct Witness {
  BraidWord word;
  WitnessKind kind = WitnessKind::kTorusPositive;
  std::optional<FamilyParams> family;  // set for kFlypeFamily

  // "torus-positive", "torus-negative" or "flype-family(One,p=2,q=3)".
  std::string label() const;
};

struct AxisReport {
  Fraction canonical{0, 1};
  std::vector<Witness> witnesses;

  int count() const { return static_cast<int>(witnesses.size()); }
};

struct ClosureId {
  Fraction fraction{0, 1};
  bool mirrored = false;
  BraidWord matched_witness;
};

// Requires alpha >= 2, 0 < beta_star < alpha, gcd 1; even beta_star throws
// Error(kOddFormRequired). Family kOne is tried before kTwo; p, q >= 1.
std::optional<FamilyParams> family_membership(Int alpha, Int beta_star);

// s1^k s2 (positive) or s1^k s2^-1.
BraidWord torus_witness(Int k, bool positive);
// s1^p s2^2 s1^q s2^-1 (kOne) or s1^p s2^2 s1^-(q+1) s2^-1 (kTwo).
BraidWord family_witness(const FamilyParams& params);

AxisReport axis_classes(Int alpha, Int beta);

// Number of GOF-knots in L(alpha, beta); the report of axis_classes.
AxisReport gof_count(Int alpha, Int beta);

// Finds the two-bridge link realised by the closure of w among the witness
// lists of every canonical fraction with alpha = closure_determinant(w), up to
// conjugacy, mirroring and reversal of the word.
std::optional<ClosureId> identify_closure(const BraidWord& w);

// Free-form caveats attached to a report, e.g. for L(17,5).
std::vector<std::string> notes_for(const Fraction& f);

}  // namespace gofk::classify
