#include "cli.hpp"

#include <charconv>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gofk/braid.hpp"
#include "gofk/classify.hpp"
#include "gofk/cover.hpp"
#include "gofk/error.hpp"
#include "gofk/twobridge.hpp"
#include "gofk/verify.hpp"

namespace gofk::cli {

namespace {

using json = nlohmann::ordered_json;
using Int = std::int64_t;
using Args = std::span<const std::string>;

constexpr const char* kUsage = R"(usage: gofk <command> [args]

  gof ALPHA BETA                      GOF-knot count of L(ALPHA, BETA)
  classify ALPHA BETA                 axis classes of b(ALPHA, BETA)
  equiv A1 B1 A2 B2 [--oriented] [--no-mirror]
  normalize ALPHA BETA                canonical fraction
  conway D1,D2,...                    continued fraction to fraction
  braid nf|exp|mirror|identify|det|homology WORD
  braid conj WORD1 -- WORD2
  braid twist N WORD
  enumerate --max N [--format tsv|json]
  verify [--suite all|counts|orientation|identity|burau|conjugacy] [--max N]

WORD is a list of letters 1, -1, 2, -2 separated by spaces or commas;
s1^k / s2^k tokens are expanded first.
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& token, const char* what) {
  Int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw UsageError(std::string("invalid integer '") + token + "' for " + what);
  }
  return value;
}

void require_count(Args args, std::size_t n, const char* form) {
  if (args.size() != n) throw UsageError(std::string("expected: ") + form);
}

json word_json(const braid::BraidWord& w) { return json(w.letters()); }

json pair_json(Int a, Int b) { return json::array({a, b}); }

// "s1^4 s2^-1" style tokens become plain letters; anything else is kept.
std::string expand_word(Args tokens) {
  static const std::regex kPower(R"(s([12])(?:\^(-?[0-9]+))?)");
  std::vector<std::string> parts;
  static const std::regex kSeparator(R"([\s,]+)");
  std::vector<std::string> split;
  for (const std::string& arg : tokens) {
    for (std::sregex_token_iterator it(arg.begin(), arg.end(), kSeparator, -1), end; it != end;
         ++it) {
      if (it->length() > 0) split.push_back(it->str());
    }
  }
  for (const std::string& t : split) {
    std::smatch m;
    if (std::regex_match(t, m, kPower)) {
      const std::string g = m[1].str();
      const Int e = m[2].matched ? parse_int(m[2].str(), "generator exponent") : 1;
      if (e == 0) continue;
      const std::string letter = e < 0 ? "-" + g : g;
      for (Int i = 0; i < (e < 0 ? -e : e); ++i) parts.push_back(letter);
    } else {
      parts.push_back(t);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(' ');
    out += parts[i];
  }
  return out;
}

braid::BraidWord read_word(Args tokens) {
  const std::string text = expand_word(tokens);
  try {
    return braid::parse_word(text);
  } catch (const ParseError& e) {
    // name the token under the reported offset
    std::size_t end = text.find_first_of(" ,", e.position());
    const std::string token =
        text.substr(e.position(), end == std::string::npos ? std::string::npos : end - e.position());
    throw ParseError(e.position(), std::string(e.what()) +
                                       (token.empty() ? "" : " (token '" + token + "')"));
  }
}

json report_json(const classify::AxisReport& report) {
  json witnesses = json::array();
  json labels = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(word_json(w.word));
    labels.push_back(w.label());
  }
  return json{{"canonical", pair_json(report.canonical.alpha(), report.canonical.beta())},
              {"count", report.count()},
              {"witnesses", witnesses},
              {"labels", labels}};
}

int cmd_gof(Args args, std::ostream& out) {
  require_count(args, 2, "gof ALPHA BETA");
  const Int alpha = parse_int(args[0], "ALPHA");
  const Int beta = parse_int(args[1], "BETA");
  const auto report = classify::gof_count(alpha, beta);
  const json r = report_json(report);
  json j{{"alpha", alpha},
         {"beta", beta},
         {"canonical", r["canonical"]},
         {"gof_count", report.count()},
         {"witnesses", r["witnesses"]},
         {"labels", r["labels"]},
         {"notes", classify::notes_for(report.canonical)}};
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_classify(Args args, std::ostream& out) {
  require_count(args, 2, "classify ALPHA BETA");
  const auto report =
      classify::axis_classes(parse_int(args[0], "ALPHA"), parse_int(args[1], "BETA"));
  out << report_json(report).dump() << '\n';
  return kExitOk;
}

int cmd_equiv(Args args, std::ostream& out) {
  bool oriented = false, mirror = true;
  std::vector<std::string> nums;
  for (const auto& a : args) {
    if (a == "--oriented") oriented = true;
    else if (a == "--no-mirror") mirror = false;
    else nums.push_back(a);
  }
  require_count(nums, 4, "equiv A1 B1 A2 B2 [--oriented] [--no-mirror]");
  const twobridge::Fraction f1(parse_int(nums[0], "A1"), parse_int(nums[1], "B1"));
  const twobridge::Fraction f2(parse_int(nums[2], "A2"), parse_int(nums[3], "B2"));
  out << json{{"equivalent", twobridge::equivalent(f1, f2, oriented, mirror)}}.dump() << '\n';
  return kExitOk;
}

int cmd_normalize(Args args, std::ostream& out) {
  require_count(args, 2, "normalize ALPHA BETA");
  const Int alpha = parse_int(args[0], "ALPHA");
  const Int beta = parse_int(args[1], "BETA");
  const auto c = twobridge::canonical(alpha, beta);
  out << json{{"alpha", alpha}, {"beta", beta}, {"canonical", pair_json(c.alpha(), c.beta())}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_conway(Args args, std::ostream& out) {
  if (args.empty()) throw UsageError("expected: conway D1,D2,...");
  std::vector<Int> digits;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string item;
    while (std::getline(ss, item, ',')) digits.push_back(parse_int(item, "Conway digit"));
    if (!a.empty() && a.back() == ',') throw UsageError("trailing comma in Conway digits");
  }
  const auto r = twobridge::cf_to_fraction(twobridge::ConwayDigits(digits));
  out << json{{"digits", digits},
              {"raw", pair_json(r.raw.alpha, r.raw.beta)},
              {"canonical", pair_json(r.canonical.alpha(), r.canonical.beta())}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_braid(Args args, std::ostream& out) {
  if (args.empty()) throw UsageError("expected: braid <op> WORD");
  const std::string op = args[0];
  const Args rest = args.subspan(1);

  if (op == "conj") {
    auto sep = std::find(rest.begin(), rest.end(), std::string("--"));
    if (sep == rest.end()) throw UsageError("expected: braid conj WORD1 -- WORD2");
    const auto cut = static_cast<std::size_t>(sep - rest.begin());
    const auto a = read_word(rest.subspan(0, cut));
    const auto b = read_word(rest.subspan(cut + 1));
    out << json{{"conjugate", braid::is_conjugate(a, b)}}.dump() << '\n';
    return kExitOk;
  }
  if (op == "twist") {
    if (rest.empty()) throw UsageError("expected: braid twist N WORD");
    const Int n = parse_int(rest[0], "N");
    const auto w = braid::surgery_twist(read_word(rest.subspan(1)), n);
    out << json{{"n", n}, {"word", word_json(w)}}.dump() << '\n';
    return kExitOk;
  }

  const auto w = read_word(rest);
  if (op == "nf") {
    const auto nf = braid::normal_form(w);
    json factors = json::array();
    for (auto s : nf.factors) factors.push_back(braid::letters_of(s));
    out << json{{"word", word_json(w)}, {"delta_power", nf.delta_power}, {"factors", factors}}
               .dump()
        << '\n';
  } else if (op == "exp") {
    out << json{{"exponent_sum", braid::exponent_sum(w)}}.dump() << '\n';
  } else if (op == "mirror") {
    out << json{{"word", word_json(braid::mirror(w))}}.dump() << '\n';
  } else if (op == "det") {
    out << json{{"determinant", cover::closure_determinant(w)}}.dump() << '\n';
  } else if (op == "homology") {
    out << json{{"invariant_factors", cover::dbc_homology(w).factors}}.dump() << '\n';
  } else if (op == "identify") {
    const auto id = classify::identify_closure(w);
    if (!id) {
      out << json{{"recognized", false}, {"determinant", cover::closure_determinant(w)}}.dump()
          << '\n';
      return kExitUnrecognized;
    }
    out << json{{"fraction", pair_json(id->fraction.alpha(), id->fraction.beta())},
                {"mirrored", id->mirrored},
                {"matched_witness", word_json(id->matched_witness)}}
               .dump()
        << '\n';
  } else {
    throw UsageError("unknown braid operation '" + op + "'");
  }
  return kExitOk;
}

int cmd_enumerate(Args args, std::ostream& out) {
  std::optional<Int> max;
  std::string format = "tsv";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--max" && i + 1 < args.size()) {
      max = parse_int(args[++i], "--max");
    } else if (args[i] == "--format" && i + 1 < args.size()) {
      format = args[++i];
    } else {
      throw UsageError("unexpected argument '" + args[i] + "' to enumerate");
    }
  }
  if (!max || *max < 0) throw UsageError("enumerate needs --max N with N >= 0");
  if (format != "tsv" && format != "json") {
    throw UsageError("invalid --format '" + format + "' (tsv or json)");
  }
  std::ostringstream buf;
  json rows = json::array();
  for (Int alpha = 0; alpha <= *max; ++alpha) {
    for (const auto& f : twobridge::canonical_fractions(alpha)) {
      const auto report = classify::gof_count(f.alpha(), f.beta());
      if (format == "tsv") {
        buf << f.alpha() << '\t' << f.beta() << '\t' << report.count() << '\t';
        for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
          if (i) buf << ';';
          buf << braid::format_word(report.witnesses[i].word);
        }
        buf << '\n';
      } else {
        json witnesses = json::array();
        for (const auto& w : report.witnesses) witnesses.push_back(word_json(w.word));
        rows.push_back(json{{"alpha", f.alpha()},
                            {"beta", f.beta()},
                            {"count", report.count()},
                            {"witnesses", witnesses}});
      }
    }
  }
  if (format == "json") buf << rows.dump() << '\n';
  out << buf.str();
  return kExitOk;
}

int cmd_verify(Args args, std::ostream& out) {
  std::string suite = "all";
  std::optional<Int> max;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--suite" && i + 1 < args.size()) {
      suite = args[++i];
    } else if (args[i] == "--max" && i + 1 < args.size()) {
      max = parse_int(args[++i], "--max");
    } else {
      throw UsageError("unexpected argument '" + args[i] + "' to verify");
    }
  }
  static const std::vector<std::string> kSuites = {"counts", "orientation", "identity", "burau",
                                                   "conjugacy"};
  if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (max && *max < 0) throw UsageError("--max must be non-negative");

  json suites = json::array();
  std::size_t total = 0;
  for (const auto& name : kSuites) {
    if (suite != "all" && suite != name) continue;
    std::vector<verify::Violation> v;
    json bound;
    if (name == "counts") {
      const Int b = max.value_or(verify::kDefaultCountsBound);
      v = verify::verify_counts(b);
      bound = b;
    } else if (name == "orientation") {
      const Int b = max.value_or(verify::kDefaultOrientationBound);
      v = verify::verify_orientation_uniqueness(b);
      bound = b;
    } else if (name == "identity") {
      const Int b = max.value_or(verify::kDefaultIdentityBound);
      v = verify::verify_inverse_identity(b);
      const auto c = verify::verify_conway_identity(std::min<Int>(b, 50));
      v.insert(v.end(), c.begin(), c.end());
      bound = b;
    } else if (name == "burau") {
      const Int b = max.value_or(verify::kDefaultWitnessBound);
      const Int k = max.value_or(verify::kDefaultTorusBound);
      v = verify::verify_burau_witnesses(b, k);
      bound = b;
    } else {
      v = verify::verify_conjugacy_suite();
    }
    total += v.size();
    suites.push_back(json{{"suite", name},
                          {"bound", bound},
                          {"violations", json::parse(verify::to_json(v))}});
  }
  out << json{{"suites", suites}, {"total_violations", total}}.dump() << '\n';
  return total == 0 ? kExitOk : kExitInvalidInput;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    (args.empty() ? err : out) << kUsage;
    return args.empty() ? kExitInvalidInput : kExitOk;
  }
  const std::string& cmd = args[0];
  const Args rest = args.subspan(1);
  try {
    if (cmd == "gof") return cmd_gof(rest, out);
    if (cmd == "classify") return cmd_classify(rest, out);
    if (cmd == "equiv") return cmd_equiv(rest, out);
    if (cmd == "normalize") return cmd_normalize(rest, out);
    if (cmd == "conway") return cmd_conway(rest, out);
    if (cmd == "braid") return cmd_braid(rest, out);
    if (cmd == "enumerate") return cmd_enumerate(rest, out);
    if (cmd == "verify") return cmd_verify(rest, out);
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  }
  return kExitInvalidInput;
}

}  // namespace gofk::cli
