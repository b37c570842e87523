#include "gofk/verify.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include <json.hpp>

#include "gofk/arith.hpp"
#include "gofk/classify.hpp"
#include "gofk/cover.hpp"

namespace gofk::verify {

namespace {

using braid::BraidWord;
using twobridge::Fraction;

constexpr std::uint64_t kSeed = 0x6f6b6e6f74ULL;

// Runs body(lo, hi) over [first, last] split into contiguous chunks, one per
// hardware thread, and concatenates the results in range order.
template <typename Body>
std::vector<Violation> chunked(Int first, Int last, Body body) {
  if (last < first) return {};
  const Int span = last - first + 1;
  const Int workers =
      std::clamp<Int>(static_cast<Int>(std::thread::hardware_concurrency()), 1, span);
  // interleave small and large alpha so chunks carry similar work
  std::vector<std::future<std::vector<Violation>>> jobs;
  for (Int w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [=] {
      std::vector<Violation> out;
      for (Int x = first + w; x <= last; x += workers) {
        auto v = body(x);
        out.insert(out.end(), v.begin(), v.end());
      }
      return out;
    }));
  }
  std::vector<Violation> merged;
  for (auto& job : jobs) {
    auto part = job.get();
    merged.insert(merged.end(), part.begin(), part.end());
  }
  // deterministic order regardless of the thread split
  std::stable_sort(merged.begin(), merged.end(), [](const Violation& a, const Violation& b) {
    return a.params < b.params;
  });
  return merged;
}

Violation make(std::string suite, std::vector<std::pair<std::string, Int>> params,
               std::string expected, std::string actual) {
  return {std::move(suite), std::move(params), std::move(expected), std::move(actual)};
}

std::vector<Violation> counts_for_alpha(Int alpha) {
  std::vector<Violation> out;
  for (const Fraction& f : twobridge::canonical_fractions(alpha)) {
    const auto report = classify::gof_count(f.alpha(), f.beta());
    const int count = report.count();
    const std::vector<std::pair<std::string, Int>> params{{"alpha", alpha}, {"beta", f.beta()}};
    const bool is_41 = alpha == 4 && f.beta() == 1;
    const bool torus = f.beta() == 1 && alpha != 0;

    if (count < 0 || count > 3) {
      out.push_back(make("counts", params, "count in {0,1,2,3}", std::to_string(count)));
    }
    if ((count == 3) != is_41) {
      out.push_back(make("counts", params, is_41 ? "3" : "count != 3", std::to_string(count)));
    }
    if ((count == 2) != (torus && !is_41)) {
      out.push_back(make("counts", params, torus && !is_41 ? "2" : "count != 2",
                         std::to_string(count)));
    }
    if (!torus && count > 1) {
      out.push_back(make("counts", params, "count <= 1", std::to_string(count)));
    }
    for (const auto& w : report.witnesses) {
      const Int det = cover::closure_determinant(w.word);
      if (det != alpha) {
        out.push_back(make("counts", params, "witness determinant " + std::to_string(alpha),
                           std::to_string(det) + " for " + braid::format_word(w.word)));
      }
    }
    // every representative of the homeomorphism class gets the same count
    std::vector<Int> betas;
    if (alpha == 0) {
      betas = {1, -1};
    } else if (alpha == 1) {
      betas = {0, 1, -1, 2};
    } else {
      for (Int member : twobridge::orbit(f, false, true)) {
        betas.insert(betas.end(), {member, member - alpha, -member, member + 3 * alpha});
      }
    }
    for (Int beta : betas) {
      const int other = classify::gof_count(alpha, beta).count();
      if (other != count) {
        out.push_back(make("counts", {{"alpha", alpha}, {"beta", beta}}, std::to_string(count),
                           std::to_string(other)));
      }
    }
  }
  return out;
}

bool admits_three_braid(Int alpha, Int odd_beta) {
  if (odd_beta == 1) return true;
  return classify::family_membership(alpha, odd_beta).has_value();
}

int admitting_classes(const Fraction& f) {
  int admitting = 0;
  for (const auto& cls : twobridge::orientation_classes(f)) {
    bool admits = false;
    for (Int x : cls.reps) {
      // classes are mirror-closed: 2 alpha - x is the mirror representative
      if (x < f.alpha()) admits = admits || admits_three_braid(f.alpha(), x);
    }
    if (admits) ++admitting;
  }
  return admitting;
}

}  // namespace

std::vector<Violation> verify_counts(Int max_alpha) {
  return chunked(0, max_alpha, counts_for_alpha);
}

std::vector<Fraction> orientation_exceptions(Int max_alpha) {
  std::vector<Fraction> out;
  for (Int alpha = 2; alpha <= max_alpha; alpha += 2) {
    for (const Fraction& f : twobridge::canonical_fractions(alpha)) {
      if (admitting_classes(f) > 1) out.push_back(f);
    }
  }
  return out;
}

std::vector<Violation> verify_orientation_uniqueness(Int max_alpha) {
  std::vector<Violation> out;
  const auto exceptions = orientation_exceptions(max_alpha);
  for (const Fraction& f : exceptions) {
    if (f != Fraction(4, 1)) {
      out.push_back(make("orientation", {{"alpha", f.alpha()}, {"beta", f.beta()}},
                         "at most one orientation class admits a closed 3-braid",
                         std::to_string(admitting_classes(f)) + " classes admit"));
    }
  }
  if (max_alpha >= 4 && std::find(exceptions.begin(), exceptions.end(), Fraction(4, 1)) ==
                            exceptions.end()) {
    out.push_back(make("orientation", {{"alpha", 4}, {"beta", 1}},
                       "two orientation classes admit closed 3-braids", "not an exception"));
  }
  // coincidences: the two orientations of b(8,3) and of b(10,3) agree
  const std::pair<Fraction, Fraction> coincidences[] = {
      {Fraction(8, 3), Fraction(8, 5)},
      {Fraction(10, 3), Fraction(10, 7)},
  };
  for (const auto& [f, g] : coincidences) {
    if (max_alpha < f.alpha()) continue;
    const auto classes = twobridge::orientation_classes(f);
    const bool mirror_needed = f.alpha() == 8;
    if (classes.size() != 1 || !twobridge::equivalent(f, g, true, mirror_needed)) {
      out.push_back(make("orientation", {{"alpha", f.alpha()}, {"beta", f.beta()}},
                         "one orientation class", std::to_string(classes.size()) + " classes"));
    }
  }
  return out;
}

std::vector<Violation> verify_inverse_identity(Int max_pq) {
  std::vector<Violation> out;
  for (Int p = 1; p <= max_pq; ++p) {
    for (Int q = 1; q <= max_pq; ++q) {
      const Int product = (2 * p + 1) * (2 * q + 1);
      const Int one = 2 * p * q + p + q;
      const Int two = one + 1;
      const std::vector<std::pair<std::string, Int>> params{{"p", p}, {"q", q}};
      if (arith::mod(product, 2 * one) != 1) {
        out.push_back(make("identity", params, "(2p+1)(2q+1) = 1 mod 2(2pq+p+q)",
                           std::to_string(arith::mod(product, 2 * one))));
      }
      if (arith::mod(product, 2 * two) != 2 * two - 1) {
        out.push_back(make("identity", params, "(2p+1)(2q+1) = -1 mod 2(2pq+p+q+1)",
                           std::to_string(arith::mod(product, 2 * two))));
      }
      // the same statement through the oriented equivalence relation
      if (!twobridge::equivalent(Fraction(one, 2 * p + 1), Fraction(one, 2 * q + 1), true,
                                 false)) {
        out.push_back(make("identity", params, "b(a,2p+1) ~ b(a,2q+1) oriented", "false"));
      }
      if (!twobridge::equivalent(Fraction(two, 2 * p + 1), Fraction(two, 2 * q + 1), true,
                                 true)) {
        out.push_back(
            make("identity", params, "b(a+1,2p+1) ~ b(a+1,2q+1) up to mirror", "false"));
      }
    }
  }
  return out;
}

std::vector<Violation> verify_conway_identity(Int max_pq) {
  std::vector<Violation> out;
  for (Int p = 1; p <= max_pq; ++p) {
    for (Int q = 1; q <= max_pq; ++q) {
      const auto a = twobridge::cf_to_fraction(twobridge::ConwayDigits({p, 1, 1, q}));
      const auto b = twobridge::cf_to_fraction(twobridge::ConwayDigits({p, 2, -q - 1}));
      if (a.canonical != b.canonical) {
        out.push_back(make("conway", {{"p", p}, {"q", q}}, a.canonical.to_string(),
                           b.canonical.to_string()));
      }
      const auto c = twobridge::cf_to_fraction(twobridge::ConwayDigits({p, 2, q}));
      if (c.raw != twobridge::RawFraction{2 * p * q + p + q, 2 * q + 1}) {
        out.push_back(make("conway", {{"p", p}, {"q", q}},
                           "(p,2,q) = (2pq+p+q, 2q+1)",
                           "(" + std::to_string(c.raw.alpha) + ", " +
                               std::to_string(c.raw.beta) + ")"));
      }
    }
  }
  return out;
}

std::vector<Violation> verify_burau_witnesses(Int max_pq, Int max_torus_k) {
  std::vector<Violation> out;
  auto check = [&](const BraidWord& w, Int expected, std::vector<std::pair<std::string, Int>> params) {
    const Int det = cover::closure_determinant(w);
    if (det != expected) {
      out.push_back(make("burau", std::move(params), std::to_string(expected),
                         std::to_string(det)));
    }
  };
  for (Int p = 1; p <= max_pq; ++p) {
    for (Int q = 1; q <= max_pq; ++q) {
      for (auto fam : {classify::Family::kOne, classify::Family::kTwo}) {
        const classify::FamilyParams params{fam, p, q};
        const Int delta = fam == classify::Family::kOne ? 0 : 1;
        check(classify::family_witness(params), params.alpha(),
              {{"p", p}, {"q", q}, {"delta", delta}});
      }
    }
  }
  for (Int k = 0; k <= max_torus_k; ++k) {
    check(classify::torus_witness(k, true), k, {{"k", k}, {"sign", 1}});
    check(classify::torus_witness(k, false), k, {{"k", k}, {"sign", -1}});
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<Int> twist(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord w = random_word(rng, 30);
    const Int n = twist(rng);
    check(braid::surgery_twist(w, n), cover::closure_determinant(w),
          {{"trial", trial}, {"n", n}});
  }
  return out;
}

std::vector<Violation> verify_conjugacy_suite() {
  std::vector<Violation> out;
  BraidWord s15;
  s15.append_power(1, 5).append_power(2, 1);
  BraidWord twisted = s15;
  for (int i = 0; i < 4; ++i) twisted.append(braid::invert(braid::delta()));
  const BraidWord target = braid::mirror(s15);
  if (!braid::is_conjugate(twisted, target)) {
    out.push_back(make("conjugacy", {{"case", 0}}, "(s1^5 s2) Delta^-4 ~ s1^-5 s2^-1", "false"));
  }
  for (Int k = 2; k <= 10; ++k) {
    const BraidWord a = classify::torus_witness(k, true);
    const BraidWord b = classify::torus_witness(k, false);
    if (braid::is_conjugate(a, b) || braid::exponent_sum(a) == braid::exponent_sum(b)) {
      out.push_back(make("conjugacy", {{"k", k}}, "s1^k s2 !~ s1^k s2^-1", "conjugate"));
    }
  }
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_word(rng, 20);
    const BraidWord u = random_word(rng, 20);
    const BraidWord c = braid::conjugate_by(w, u);
    if (!braid::is_conjugate(w, c) || !braid::is_conjugate(c, w)) {
      out.push_back(make("conjugacy", {{"trial", trial}}, "w ~ u w u^-1", "not conjugate"));
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const BraidWord w = random_word(rng, 40);
    const BraidWord v = random_rewrite(rng, w);
    if (braid::normal_form(w) != braid::normal_form(v)) {
      out.push_back(make("conjugacy", {{"rewrite", trial}}, "normal form unchanged",
                         braid::format_word(w) + " vs " + braid::format_word(v)));
    }
  }
  return out;
}

BraidWord random_word(std::mt19937_64& rng, std::size_t max_length) {
  static constexpr int kAlphabet[] = {1, -1, 2, -2};
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<int> letters(len(rng));
  for (int& l : letters) l = kAlphabet[pick(rng)];
  return BraidWord(std::move(letters));
}

BraidWord random_rewrite(std::mt19937_64& rng, const BraidWord& w) {
  // s1 s2 s1 (s2 s1 s2)^-1 and its variants are trivial in B3
  static const std::vector<std::vector<int>> kTrivial = {
      {1, 2, 1, -2, -1, -2}, {2, 1, 2, -1, -2, -1}, {-1, -2, -1, 2, 1, 2},
      {1, -1}, {-1, 1}, {2, -2}, {-2, 2},
  };
  std::uniform_int_distribution<std::size_t> where(0, w.size());
  std::uniform_int_distribution<std::size_t> which(0, kTrivial.size() - 1);
  std::vector<int> letters = w.letters();
  const auto& ins = kTrivial[which(rng)];
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(where(rng)), ins.begin(),
                 ins.end());
  return BraidWord(std::move(letters));
}

std::string to_json(const std::vector<Violation>& violations) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, x] : v.params) params[k] = x;
    arr.push_back({{"suite", v.suite},
                   {"params", params},
                   {"expected", v.expected},
                   {"actual", v.actual}});
  }
  return arr.dump();
}

}  // namespace gofk::verify
