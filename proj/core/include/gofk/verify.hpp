#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gofk/braid.hpp"
#include "gofk/twobridge.hpp"

// Exhaustive and randomized cross-checks of the classification. Each suite
// returns the list of violations it found; an empty list means the suite
// passed. Randomized parts use fixed seeds, so runs are reproducible.

namespace gofk::verify {

using Int = std::int64_t;

struct Violation {
  std::string suite;
  std::vector<std::pair<std::string, Int>> params;
  std::string expected;
  std::string actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline constexpr Int kDefaultCountsBound = 5000;
inline constexpr Int kDefaultOrientationBound = 2000;
inline constexpr Int kDefaultIdentityBound = 100;
inline constexpr Int kDefaultWitnessBound = 50;
inline constexpr Int kDefaultTorusBound = 2000;

std::vector<Violation> verify_counts(Int max_alpha);

// Two-component links with more than one orientation class admitting a closed
// 3-braid, over even alpha <= max_alpha.
std::vector<twobridge::Fraction> orientation_exceptions(Int max_alpha);
std::vector<Violation> verify_orientation_uniqueness(Int max_alpha);

std::vector<Violation> verify_inverse_identity(Int max_pq);
// (p,1,1,q) and (p,2,-q-1) give the same canonical fraction.
std::vector<Violation> verify_conway_identity(Int max_pq);

std::vector<Violation> verify_burau_witnesses(Int max_pq, Int max_torus_k);
inline std::vector<Violation> verify_burau_witnesses(Int max_pq) {
  return verify_burau_witnesses(max_pq, max_pq);
}

std::vector<Violation> verify_conjugacy_suite();

// Uniform word over {+-1, +-2} of length in [0, max_length].
braid::BraidWord random_word(std::mt19937_64& rng, std::size_t max_length);

// Inserts a braid relator or a cancelling pair at a random position.
braid::BraidWord random_rewrite(std::mt19937_64& rng, const braid::BraidWord& w);

// JSON array of {suite, params, expected, actual}.
std::string to_json(const std::vector<Violation>& violations);

}  // namespace gofk::verify
