#include "gofk/braid.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <optional>
#include <set>
#include <utility>

#include "gofk/error.hpp"

namespace gofk::braid {

namespace {

constexpr int kSimpleCount = 6;
constexpr int kDeltaLength = 3;

using Perm = std::array<int, 3>;

int index(Simple s) { return static_cast<int>(s); }
Simple simple_at(int i) { return static_cast<Simple>(i); }

const std::array<std::vector<int>, kSimpleCount> kLetters = {{
    {}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1},
}};

Perm perm_of(const std::vector<int>& letters) {
  Perm p{0, 1, 2};
  for (int g : letters) std::swap(p[g - 1], p[g]);
  return p;
}

int inversions(const Perm& p) {
  int n = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

// Multiplication and left-weighting tables for the six simples, derived from
// their permutations: x*y is simple iff lengths add under composition.
struct Tables {
  std::array<Perm, kSimpleCount> perm;
  std::array<std::array<std::optional<Simple>, kSimpleCount>, kSimpleCount> product;
  std::array<std::array<std::pair<Simple, Simple>, kSimpleCount>, kSimpleCount> weighted;

  Tables() {
    for (int i = 0; i < kSimpleCount; ++i) perm[i] = perm_of(kLetters[i]);
    auto find = [&](const Perm& p) {
      for (int i = 0; i < kSimpleCount; ++i)
        if (perm[i] == p) return simple_at(i);
      return Simple::kE;  // unreachable: S3 has six elements
    };
    for (int x = 0; x < kSimpleCount; ++x) {
      for (int y = 0; y < kSimpleCount; ++y) {
        Perm c{};
        for (int j = 0; j < 3; ++j) c[j] = perm[x][perm[y][j]];
        if (inversions(c) == inversions(perm[x]) + inversions(perm[y])) product[x][y] = find(c);
      }
    }
    for (int a = 0; a < kSimpleCount; ++a) {
      for (int b = 0; b < kSimpleCount; ++b) {
        // largest prefix c of b with a*c simple; b = c*d
        Simple best_c = Simple::kE;
        Simple best_d = simple_at(b);
        for (int c = 0; c < kSimpleCount; ++c) {
          if (!product[a][c]) continue;
          for (int d = 0; d < kSimpleCount; ++d) {
            if (product[c][d] == simple_at(b) &&
                length_of(simple_at(c)) > length_of(best_c)) {
              best_c = simple_at(c);
              best_d = simple_at(d);
            }
          }
        }
        weighted[a][b] = {*product[a][index(best_c)], best_d};
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

std::pair<Simple, Simple> left_weight(Simple a, Simple b) {
  return tables().weighted[index(a)][index(b)];
}

// Accumulates Delta^k * (product of simples) and keeps it in left normal form.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(Int delta_power) : delta_(delta_power) {}

  void push(Simple t) {
    if (t == Simple::kE) return;
    factors_.push_back(t);
    for (std::size_t j = factors_.size() - 1; j >= 1; --j) {
      auto [a, b] = left_weight(factors_[j - 1], factors_[j]);
      if (a == factors_[j - 1]) break;
      factors_[j - 1] = a;
      factors_[j] = b;
    }
  }

  NormalForm finish() && {
    stabilize();
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead] == Simple::kDelta) ++lead;
    NormalForm nf;
    nf.delta_power = delta_ + static_cast<Int>(lead);
    nf.factors.assign(factors_.begin() + static_cast<std::ptrdiff_t>(lead), factors_.end());
    return nf;
  }

 private:
  // Drops identity factors and repeats local left-weighting until every pair
  // is left-weighted. After push() this is a single verifying sweep.
  void stabilize() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::erase(factors_, Simple::kE);
      for (std::size_t j = 1; j < factors_.size(); ++j) {
        auto [a, b] = left_weight(factors_[j - 1], factors_[j]);
        if (a != factors_[j - 1]) {
          factors_[j - 1] = a;
          factors_[j] = b;
          changed = true;
        }
      }
    }
  }

  Int delta_;
  std::vector<Simple> factors_;
};

void check_letter(int letter) {
  if (letter != 1 && letter != -1 && letter != 2 && letter != -2) {
    throw ParseError(0, "invalid braid letter " + std::to_string(letter));
  }
}

NormalForm conjugate_nf(const NormalForm& x, Simple s) {
  // s^-1 x s
  BraidWord w = invert(BraidWord(letters_of(s)));
  w.append(x.to_word());
  w.append(BraidWord(letters_of(s)));
  return normal_form(w);
}

Simple flip_power(Simple s, Int k) { return k % 2 == 0 ? s : flip(s); }

}  // namespace

BraidWord::BraidWord(std::initializer_list<int> letters) : letters_(letters) {
  for (int l : letters_) check_letter(l);
}

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) check_letter(l);
}

BraidWord& BraidWord::append_power(int generator, Int exponent) {
  check_letter(generator);
  const int letter = exponent < 0 ? -generator : generator;
  const Int n = exponent < 0 ? -exponent : exponent;
  letters_.insert(letters_.end(), static_cast<std::size_t>(n), letter);
  return *this;
}

BraidWord& BraidWord::append(const BraidWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

const std::vector<int>& letters_of(Simple s) { return kLetters[index(s)]; }

int length_of(Simple s) { return static_cast<int>(kLetters[index(s)].size()); }

Simple flip(Simple s) {
  switch (s) {
    case Simple::kS1: return Simple::kS2;
    case Simple::kS2: return Simple::kS1;
    case Simple::kS1S2: return Simple::kS2S1;
    case Simple::kS2S1: return Simple::kS1S2;
    default: return s;
  }
}

bool is_left_weighted(Simple left, Simple right) {
  return left_weight(left, right).first == left;
}

BraidWord NormalForm::to_word() const {
  BraidWord w;
  for (Int i = 0; i < (delta_power < 0 ? -delta_power : delta_power); ++i) {
    w.append(delta_power < 0 ? invert(delta()) : delta());
  }
  for (Simple s : factors) w.append(BraidWord(letters_of(s)));
  return w;
}

BraidWord parse_word(std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  if (n == 0) return BraidWord{};
  auto fail = [&](std::size_t at, const std::string& why) -> void {
    throw ParseError(at, "braid word parse error at offset " + std::to_string(at) + ": " + why);
  };
  while (true) {
    const std::size_t start = pos;
    while (pos < n && text[pos] != ' ' && text[pos] != ',') ++pos;
    const std::string_view token = text.substr(start, pos - start);
    if (token.empty()) fail(start, "expected a letter");
    if (token == "1") letters.push_back(1);
    else if (token == "2") letters.push_back(2);
    else if (token == "-1") letters.push_back(-1);
    else if (token == "-2") letters.push_back(-2);
    else fail(start, "invalid token '" + std::string(token) + "'");
    if (pos == n) break;
    if (text[pos] == ',') {
      ++pos;
    } else {
      while (pos < n && text[pos] == ' ') ++pos;
    }
    if (pos == n) fail(pos, "trailing separator");
    if (text[pos] == ',' || text[pos] == ' ') fail(pos, "mixed or repeated separator");
  }
  return BraidWord(std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

Int exponent_sum(const BraidWord& w) {
  Int sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

BraidWord mirror(const BraidWord& w) {
  std::vector<int> out(w.letters());
  for (int& l : out) l = -l;
  return BraidWord(std::move(out));
}

BraidWord reverse(const BraidWord& w) {
  return BraidWord(std::vector<int>(w.letters().rbegin(), w.letters().rend()));
}

BraidWord invert(const BraidWord& w) { return mirror(reverse(w)); }

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

BraidWord conjugate_by(const BraidWord& w, const BraidWord& u) {
  return concat(concat(u, w), invert(u));
}

BraidWord flip(const BraidWord& w) {
  std::vector<int> out(w.letters());
  for (int& l : out) l = l > 0 ? 3 - l : -(3 + l);
  return BraidWord(std::move(out));
}

BraidWord delta() { return BraidWord{1, 2, 1}; }

BraidWord full_twist() { return BraidWord{1, 2, 1, 2, 1, 2}; }

NormalForm normal_form(const BraidWord& w) {
  // Each s_i^-1 is rewritten as Delta^-1 (Delta s_i^-1). Moving the Delta^-1
  // to the front flips every simple already emitted, so a simple emitted
  // after j inverse letters is flipped (total - j) times overall.
  Int total_negative = 0;
  for (int l : w.letters())
    if (l < 0) ++total_negative;

  NormalFormBuilder builder(-total_negative);
  Int seen_negative = 0;
  for (int l : w.letters()) {
    Simple s;
    if (l > 0) {
      s = l == 1 ? Simple::kS1 : Simple::kS2;
    } else {
      ++seen_negative;
      s = l == -1 ? Simple::kS1S2 : Simple::kS2S1;
    }
    builder.push(flip_power(s, total_negative - seen_negative));
  }
  return std::move(builder).finish();
}

bool is_equal(const BraidWord& a, const BraidWord& b) { return normal_form(a) == normal_form(b); }

NormalForm cycling(const NormalForm& x) {
  if (x.factors.empty()) return x;
  // Delta^k s1 s2..sm  ->  Delta^k s2..sm tau^k(s1)
  NormalFormBuilder builder(x.delta_power);
  for (std::size_t i = 1; i < x.factors.size(); ++i) builder.push(x.factors[i]);
  builder.push(flip_power(x.factors.front(), x.delta_power));
  return std::move(builder).finish();
}

NormalForm decycling(const NormalForm& x) {
  if (x.factors.empty()) return x;
  // sm Delta^k s1..s(m-1)  =  Delta^k tau^k(sm) s1..s(m-1)
  NormalFormBuilder builder(x.delta_power);
  builder.push(flip_power(x.factors.back(), x.delta_power));
  for (std::size_t i = 0; i + 1 < x.factors.size(); ++i) builder.push(x.factors[i]);
  return std::move(builder).finish();
}

NormalForm summit(const NormalForm& start) {
  // If inf (sup) is not extremal in the conjugacy class, at most |Delta|
  // cyclings (decyclings) raise (lower) it.
  NormalForm x = start;
  for (bool improved = true; improved;) {
    improved = false;
    NormalForm y = x;
    for (int i = 0; i < kDeltaLength; ++i) {
      y = cycling(y);
      if (y.inf() > x.inf()) {
        x = y;
        improved = true;
        break;
      }
    }
  }
  for (bool improved = true; improved;) {
    improved = false;
    NormalForm y = x;
    for (int i = 0; i < kDeltaLength; ++i) {
      y = decycling(y);
      if (y.sup() < x.sup()) {
        x = y;
        improved = true;
        break;
      }
    }
  }
  return x;
}

std::vector<NormalForm> super_summit_set(const BraidWord& w) {
  const NormalForm root = summit(normal_form(w));
  std::set<NormalForm> seen{root};
  std::deque<NormalForm> queue{root};
  constexpr std::array<Simple, 5> kConjugators = {Simple::kS1, Simple::kS2, Simple::kS1S2,
                                                  Simple::kS2S1, Simple::kDelta};
  while (!queue.empty()) {
    NormalForm z = std::move(queue.front());
    queue.pop_front();
    for (Simple s : kConjugators) {
      NormalForm next = conjugate_nf(z, s);
      if (next.inf() != root.inf() || next.sup() != root.sup()) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_conjugate(const BraidWord& a, const BraidWord& b) {
  if (exponent_sum(a) != exponent_sum(b)) return false;
  const NormalForm sb = summit(normal_form(b));
  const auto sss = super_summit_set(a);
  if (sss.front().inf() != sb.inf() || sss.front().sup() != sb.sup()) return false;
  return std::binary_search(sss.begin(), sss.end(), sb);
}

BraidWord surgery_twist(const BraidWord& w, Int n) {
  BraidWord out = w;
  const Int count = 6 * (n < 0 ? -n : n);  // (s1 s2)^(6|n|)
  const BraidWord unit = n < 0 ? BraidWord{1, 2} : BraidWord{-2, -1};
  for (Int i = 0; i < count; ++i) out.append(unit);
  return out;
}

}  // namespace gofk::braid
