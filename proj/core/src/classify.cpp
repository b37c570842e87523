#include "gofk/classify.hpp"

#include <string>

#include "gofk/arith.hpp"
#include "gofk/cover.hpp"
#include "gofk/error.hpp"

namespace gofk::classify {

namespace {

Witness torus(Int k, bool positive) {
  return {torus_witness(k, positive),
          positive ? WitnessKind::kTorusPositive : WitnessKind::kTorusNegative, std::nullopt};
}

Witness flype(const FamilyParams& params) {
  return {family_witness(params), WitnessKind::kFlypeFamily, params};
}

}  // namespace

Int FamilyParams::alpha() const {
  using arith::checked_add;
  using arith::checked_mul;
  Int a = checked_add(checked_mul(checked_mul(2, p), q), checked_add(p, q));
  return family == Family::kTwo ? checked_add(a, 1) : a;
}

std::string Witness::label() const {
  switch (kind) {
    case WitnessKind::kTorusPositive: return "torus-positive";
    case WitnessKind::kTorusNegative: return "torus-negative";
    case WitnessKind::kFlypeFamily: break;
  }
  const FamilyParams& f = *family;
  return std::string("flype-family(") + (f.family == Family::kOne ? "One" : "Two") +
         ",p=" + std::to_string(f.p) + ",q=" + std::to_string(f.q) + ")";
}

std::optional<FamilyParams> family_membership(Int alpha, Int beta_star) {
  if (alpha < 2 || beta_star <= 0 || beta_star >= alpha) {
    throw Error(ErrorKind::kInvalidFraction,
                "family test needs alpha >= 2 and 0 < beta* < alpha, got (" +
                    std::to_string(alpha) + ", " + std::to_string(beta_star) + ")");
  }
  if (beta_star % 2 == 0) {
    throw Error(ErrorKind::kOddFormRequired,
                "family test needs odd beta*, got " + std::to_string(beta_star));
  }
  if (arith::gcd(alpha, beta_star) != 1) {
    throw Error(ErrorKind::kInvalidFraction, "alpha and beta* are not coprime: (" +
                                                 std::to_string(alpha) + ", " +
                                                 std::to_string(beta_star) + ")");
  }
  const Int q = (beta_star - 1) / 2;
  if (q < 1) return std::nullopt;
  if ((alpha - q) % beta_star == 0 && (alpha - q) / beta_star >= 1) {
    return FamilyParams{Family::kOne, (alpha - q) / beta_star, q};
  }
  if ((alpha - q - 1) % beta_star == 0 && (alpha - q - 1) / beta_star >= 1) {
    return FamilyParams{Family::kTwo, (alpha - q - 1) / beta_star, q};
  }
  return std::nullopt;
}

BraidWord torus_witness(Int k, bool positive) {
  BraidWord w;
  w.append_power(1, k).append_power(2, positive ? 1 : -1);
  return w;
}

BraidWord family_witness(const FamilyParams& params) {
  BraidWord w;
  w.append_power(1, params.p).append_power(2, 2);
  w.append_power(1, params.family == Family::kOne ? params.q : -(params.q + 1));
  w.append_power(2, -1);
  return w;
}

AxisReport axis_classes(Int alpha, Int beta) {
  AxisReport report;
  report.canonical = twobridge::canonical(alpha, beta);
  const Int a = report.canonical.alpha();
  const Int b = report.canonical.beta();
  auto& out = report.witnesses;

  if (a == 0) {
    out.push_back(torus(0, true));  // s2: the two-component unlink
    return report;
  }
  if (b == 1) {
    // covers a = 1 as well: s1 s2 and s1 s2^-1 for the unknot
    out.push_back(torus(a, true));
    out.push_back(torus(a, false));
    if (a == 4) out.push_back(flype(FamilyParams{Family::kOne, 1, 1}));
    return report;
  }
  for (Int member : twobridge::orbit(report.canonical, false, true)) {
    if (member % 2 == 0) continue;
    if (auto hit = family_membership(a, member)) {
      out.push_back(flype(*hit));
      break;
    }
  }
  return report;
}

AxisReport gof_count(Int alpha, Int beta) { return axis_classes(alpha, beta); }

namespace {

std::optional<ClosureId> match_closure(const BraidWord& w, Int alpha) {
  const Int e = braid::exponent_sum(w);
  const BraidWord mirrored = braid::mirror(w);
  for (const Fraction& f : twobridge::canonical_fractions(alpha)) {
    const AxisReport report = axis_classes(f.alpha(), f.beta());
    for (const Witness& witness : report.witnesses) {
      const Int we = braid::exponent_sum(witness.word);
      if (we == e && braid::is_conjugate(w, witness.word)) {
        return ClosureId{f, false, witness.word};
      }
      if (we == -e && braid::is_conjugate(mirrored, witness.word)) {
        return ClosureId{f, true, witness.word};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClosureId> identify_closure(const BraidWord& w) {
  const Int alpha = cover::closure_determinant(w);
  if (auto id = match_closure(w, alpha)) return id;
  // two-bridge links are invertible, so the reversed word closes to the same link
  return match_closure(braid::reverse(w), alpha);
}

std::vector<std::string> notes_for(const Fraction& f) {
  std::vector<std::string> notes;
  const Fraction c = twobridge::canonical(f);
  if (c.alpha() == 17) {
    const auto members = twobridge::orbit(c, false, true);
    bool flagged = false;
    for (Int m : members) flagged = flagged || m == 5 || m == 7;
    if (flagged) {
      notes.push_back(
          "L(17,5): a published remark states this lens space contains no GOF-knots, but "
          "b(17,7) satisfies alpha = 2pq+p+q, beta = 2q+1 with (p,q) = (2,3) and the closed "
          "braid s1^2 s2^2 s1^3 s2^-1 has determinant 17; the count reported here is 1");
    }
  }
  return notes;
}

}  // namespace gofk::classify
