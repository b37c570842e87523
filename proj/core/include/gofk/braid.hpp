#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

// The 3-strand braid group. Words use signed letters: +k is sigma_k and -k its
// inverse, k in {1, 2}. The word problem is solved by the classical Garside
// left normal form with Delta = s1 s2 s1, and conjugacy by comparing super
// summit sets.

namespace gofk::braid {

using Int = std::int64_t;

class BraidWord {
 public:
  BraidWord() = default;
  // Throws Error(kParse) on a letter outside {+-1, +-2}.
  BraidWord(std::initializer_list<int> letters);
  explicit BraidWord(std::vector<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // sigma_generator^exponent appended in place; generator in {1, 2}.
  BraidWord& append_power(int generator, Int exponent);
  BraidWord& append(const BraidWord& other);

  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<int> letters_;
};

// The six permutation braids of B3.
enum class Simple : std::uint8_t { kE, kS1, kS2, kS1S2, kS2S1, kDelta };

// Positive letters of a simple braid, e.g. {1, 2} for kS1S2.
const std::vector<int>& letters_of(Simple s);
int length_of(Simple s);
// Conjugation by Delta: swaps s1 and s2.
Simple flip(Simple s);

// Delta^delta_power * factors[0] * ... with every factor outside {e, Delta}
// and each adjacent pair left-weighted.
struct NormalForm {
  Int delta_power = 0;
  std::vector<Simple> factors;

  Int inf() const noexcept { return delta_power; }
  Int sup() const noexcept { return delta_power + static_cast<Int>(factors.size()); }
  Int canonical_length() const noexcept { return static_cast<Int>(factors.size()); }

  BraidWord to_word() const;

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

// True when no generator can move from the front of `right` onto the end of
// `left` with both factors staying simple.
bool is_left_weighted(Simple left, Simple right);

// Strict grammar: "1", "2", "-1", "-2" separated by runs of spaces or by a
// single comma, with no leading or trailing separator. Empty text is the
// identity. Throws ParseError carrying the offending offset.
BraidWord parse_word(std::string_view text);
std::string format_word(const BraidWord& w);

Int exponent_sum(const BraidWord& w);

BraidWord mirror(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
// u w u^-1
BraidWord conjugate_by(const BraidWord& w, const BraidWord& u);
// Swap s1 <-> s2 letterwise; equals Delta w Delta^-1 in the group.
BraidWord flip(const BraidWord& w);

BraidWord delta();
// (s1 s2)^3 = Delta^2, the central full twist.
BraidWord full_twist();

NormalForm normal_form(const BraidWord& w);
bool is_equal(const BraidWord& a, const BraidWord& b);

NormalForm cycling(const NormalForm& x);
NormalForm decycling(const NormalForm& x);
// A conjugate of x in its super summit set (maximal inf, minimal sup).
NormalForm summit(const NormalForm& x);
// Sorted super summit set of the conjugacy class of w.
std::vector<NormalForm> super_summit_set(const BraidWord& w);

bool is_conjugate(const BraidWord& a, const BraidWord& b);

// Appends ((s1 s2)^3)^(-2n): 1/n surgery on the lifted axis. Left-handed
// twists for n > 0, right-handed for n < 0.
BraidWord surgery_twist(const BraidWord& w, Int n);

}  // namespace gofk::braid
