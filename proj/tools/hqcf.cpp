// hqcf: continued fractions of hyperquadratic Laurent series over F_p((1/T)).
//
// Subcommands
//   expand     solve the family's equation and print certified quotients
//   predict    print the closed-form quotient stream without solving
//   verify     cross-check expansion, transition engine, and word stream
//   rules      transition rule table against the generic step, random inputs
//   identities tail-transform closed forms and the defining identity
//   words      print one generated word at depth k
//
// Exit codes: 0 success, 1 invalid configuration, 2 precision cap
// exhausted, 3 verification mismatch.  Diagnostics go to stderr; identical
// configurations (including --rng-seed) produce byte-identical output.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hqcf/contfrac.hpp"
#include "hqcf/error.hpp"
#include "hqcf/fp.hpp"
#include "hqcf/hyperquad.hpp"
#include "hqcf/json_io.hpp"
#include "hqcf/poly.hpp"
#include "hqcf/ratfunc.hpp"
#include "hqcf/solvers.hpp"
#include "hqcf/words.hpp"

namespace {

using namespace hqcf;

constexpr uint64_t kDefaultRngSeed = 1729;

struct Options {
  uint64_t p = 0;
  uint32_t t = 1;
  std::string family;
  std::string poly_text;  // --P
  std::string seed_text;  // --seed, comma-separated letters
  uint64_t n = 10;
  uint32_t k = 1;
  uint32_t trials = 100;
  std::string output = "text";
  uint64_t rng_seed = kDefaultRngSeed;
  bool random_seed = false;
  int64_t inject_fault = -1;
};

void require_expansion_r(const Session& sess) {
  if (sess.r <= 2)
    throw ConfigError("r>2 required (got r = " + std::to_string(sess.r) +
                      "; only the identities command accepts r = 2)");
}

int64_t max_window_from_env() {
  const char* env = std::getenv("HQCF_MAX_PREC");
  if (env == nullptr) return int64_t(1) << 25;
  int64_t v = 0;
  try {
    v = std::stoll(env);
  } catch (const std::exception&) {
    throw ConfigError("HQCF_MAX_PREC must be an integer");
  }
  if (v <= 0) throw ConfigError("HQCF_MAX_PREC must be positive");
  return v;
}

Family family_from_name(const std::string& name) {
  if (name == "baum-sweet") return Family::baum_sweet;
  if (name == "mahler") return Family::mahler;
  if (name == "general") return Family::general_p;
  if (name == "mahlergen") return Family::mahlergen;
  throw ConfigError("unknown family '" + name +
                    "' (expected baum-sweet, mahler, general, mahlergen)");
}

Poly parse_poly_flag(const Session& sess, const std::string& text, const char* flag) {
  if (text.empty()) throw ConfigError(std::string(flag) + " is required for this family");
  return Poly::parse(sess.p, text);
}

Word parse_seed_flag(const Session& sess, const std::string& text) {
  if (text.empty()) throw ConfigError("--seed is required for family mahlergen");
  Word w;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ConfigError("empty letter in --seed");
    w.push_back(Poly::parse(sess.p, item.substr(a, b - a + 1)));
    pos = comma + 1;
  }
  return w;
}

// Letters of the full expansion along one route, family prefix included.
Word take_expansion(std::vector<Poly> prefix, std::vector<Poly> rest, size_t n) {
  Word w;
  for (Poly& q : prefix) {
    if (w.size() == n) break;
    w.push_back(std::move(q));
  }
  for (Poly& q : rest) {
    if (w.size() == n) break;
    w.push_back(std::move(q));
  }
  return w;
}

size_t rest_count(size_t n, size_t prefix) { return n > prefix ? n - prefix : 0; }

// Closed-form route: the word streams, behind the family's fixed opening
// quotients.
Word predicted_stream(const Session& sess, Family family, const std::optional<Poly>& P,
                      const Word& seed, size_t n) {
  const Poly t = Poly::variable(sess.p);
  const Poly one = Poly::constant(sess.p, 1);
  switch (family) {
    case Family::baum_sweet:
      return take_expansion({one, -(t + one)}, OmegaStream(sess).take(rest_count(n, 2)), n);
    case Family::mahler: {
      Word unit;
      unit.push_back(t);
      return take_expansion({Poly::zero(sess.p)},
                            MahlergenStream(sess, unit).take(rest_count(n, 1)), n);
    }
    case Family::general_p:
      return take_expansion({}, OmegaStream(sess, *P).take(n), n);
    case Family::mahlergen:
      return take_expansion({}, MahlergenStream(sess, seed).take(n), n);
  }
  throw ConfigError("unknown family");
}

// Transition-engine route: self-generation from the family's defining
// relation P*z_m^r = Q*z_n + R, behind the same opening quotients.
Word engine_route(const Session& sess, Family family, const std::optional<Poly>& P,
                  const Word& seed, size_t n) {
  const Poly t = Poly::variable(sess.p);
  const Poly one = Poly::constant(sess.p, 1);
  switch (family) {
    case Family::baum_sweet: {
      Word w;
      w.push_back(Poly::monomial(sess.p, sess.p - 1, sess.r - 2));
      w.push_back(t + one);
      w.push_back(t - one);
      TransitionState a1 = TransitionState::from_tag(EqTag::A1, sess.p, 1, 4);
      return take_expansion({one, -(t + one)},
                            self_generate(sess, a1, w, rest_count(n, 2)).a, n);
    }
    case Family::mahler: {
      Word unit;
      unit.push_back(t);
      TransitionState st = TransitionState::make(one, -(t * t), -t, 1, 2);
      return take_expansion({Poly::zero(sess.p)},
                            self_generate(sess, st, unit, rest_count(n, 1)).a, n);
    }
    case Family::general_p: {
      Word w;
      w.push_back(*P);
      w.push_back(t + one);
      w.push_back(t - one);
      TransitionState a1 = TransitionState::from_tag(EqTag::A1, sess.p, 1, 4);
      return take_expansion({}, self_generate(sess, a1, w, n).a, n);
    }
    case Family::mahlergen: {
      TransitionState st = TransitionState::make(one, -(t * t), -t, 1, seed.size() + 1);
      return take_expansion({}, self_generate(sess, st, seed, n).a, n);
    }
  }
  throw ConfigError("unknown family");
}

std::string list_line(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i != 0) s += ", ";
    s += w[i].str();
  }
  return s;
}

struct FamilyInputs {
  Family family;
  std::optional<Poly> P;
  Word seed;
};

FamilyInputs family_inputs(const Session& sess, const Options& o) {
  FamilyInputs in;
  in.family = family_from_name(o.family);
  if (in.family == Family::general_p) in.P = parse_poly_flag(sess, o.poly_text, "--P");
  if (in.family == Family::mahlergen) in.seed = parse_seed_flag(sess, o.seed_text);
  if (o.n == 0) throw ConfigError("--n must be at least 1");
  return in;
}

json run_header(const char* command, const Options& o) {
  json j;
  j["command"] = command;
  j["family"] = o.family;
  j["p"] = o.p;
  j["t"] = o.t;
  return j;
}

int cmd_expand(const Options& o) {
  Session sess = Session::make(o.p, o.t);
  require_expansion_r(sess);
  FamilyInputs in = family_inputs(sess, o);
  CertifiedExpansion ce =
      expand_family(sess, in.family, in.P, in.seed, o.n, max_window_from_env());
  if (o.output == "json") {
    json j = run_header("expand", o);
    j["n"] = ce.word.size();
    j["prec"] = ce.used_prec;
    j["letters"] = word_json(ce.word);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << list_line(ce.word) << "\n";
    std::cout << "certified " << ce.word.size() << " quotients (window precision "
              << ce.used_prec << ")\n";
  }
  return 0;
}

int cmd_predict(const Options& o) {
  Session sess = Session::make(o.p, o.t);
  require_expansion_r(sess);
  FamilyInputs in = family_inputs(sess, o);
  Word w = predicted_stream(sess, in.family, in.P, in.seed, o.n);
  if (o.output == "json") {
    json j = run_header("predict", o);
    j["n"] = w.size();
    j["letters"] = word_json(w);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << list_line(w) << "\n";
    std::cout << "predicted " << w.size() << " quotients\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  Session sess = Session::make(o.p, o.t);
  require_expansion_r(sess);
  FamilyInputs in = family_inputs(sess, o);
  Word expansion =
      expand_family(sess, in.family, in.P, in.seed, o.n, max_window_from_env()).word;
  Word engine = engine_route(sess, in.family, in.P, in.seed, o.n);
  Word stream = predicted_stream(sess, in.family, in.P, in.seed, o.n);
  if (o.inject_fault >= 0 && static_cast<size_t>(o.inject_fault) < stream.size()) {
    size_t i = static_cast<size_t>(o.inject_fault);
    stream.a[i] = stream.a[i] + Poly::variable(sess.p);
  }
  std::optional<size_t> bad;
  for (size_t i = 0; i < o.n; ++i) {
    if (!(expansion[i] == engine[i]) || !(expansion[i] == stream[i])) {
      bad = i;
      break;
    }
  }
  if (o.output == "json") {
    json j = run_header("verify", o);
    j["n"] = o.n;
    j["agree"] = !bad.has_value();
    if (bad) {
      j["index"] = *bad;
      j["expansion"] = expansion[*bad].str();
      j["engine"] = engine[*bad].str();
      j["stream"] = stream[*bad].str();
    }
    std::cout << j.dump() << "\n";
  } else if (!bad) {
    std::cout << "expansion, engine and stream routes agree on " << o.n << " quotients\n";
  } else {
    std::cout << "routes disagree at index " << *bad << ":\n";
    std::cout << "  expansion: " << expansion[*bad].str() << "\n";
    std::cout << "  engine:    " << engine[*bad].str() << "\n";
    std::cout << "  stream:    " << stream[*bad].str() << "\n";
  }
  return bad ? 3 : 0;
}

int report_rows(const std::vector<ReportRow>& rows, const Options& o, const char* summary_ok) {
  bool all_pass = true;
  for (const ReportRow& row : rows) all_pass = all_pass && row.passes == row.trials;
  if (o.output == "json") {
    for (const ReportRow& row : rows) std::cout << report_json(row).dump() << "\n";
  } else {
    uint32_t passing = 0;
    for (const ReportRow& row : rows) {
      std::cout << row.rule << ": " << row.passes << "/" << row.trials << "\n";
      if (!row.first_failure.empty()) std::cout << "  first failure: " << row.first_failure << "\n";
      if (row.passes == row.trials) ++passing;
    }
    if (all_pass) {
      std::cout << passing << "/" << rows.size() << " rows pass; " << summary_ok << "\n";
    } else {
      std::cout << passing << "/" << rows.size() << " rows pass\n";
    }
  }
  return all_pass ? 0 : 3;
}

int cmd_rules(const Options& o) {
  Session sess = Session::make(o.p, o.t);
  require_expansion_r(sess);
  std::vector<ReportRow> rows = verify_rule_table(sess, o.trials, o.rng_seed);
  return report_rows(rows, o, "rule table matches the generic step");
}

Poly random_letter(const Session& sess, std::mt19937_64& rng) {
  uint64_t d = 1 + rng() % 3;
  std::vector<int64_t> c(d + 1);
  for (uint64_t i = 0; i < d; ++i) c[i] = static_cast<int64_t>(rng() % sess.p);
  c[d] = 1 + static_cast<int64_t>(rng() % (sess.p - 1));
  return Poly::from_coeffs(sess.p, c);
}

// Closed forms for the tail transform of short words, plus the defining
// identity on random words: (value of w) + 1/x = [w, f*x + g].
std::vector<ReportRow> identity_rows(const Session& sess, uint32_t trials, uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  const Poly one = Poly::constant(sess.p, 1);
  std::vector<ReportRow> rows;

  ReportRow two{"tail_two_letters", trials, 0, ""};
  for (uint32_t i = 0; i < trials; ++i) {
    Word w;
    w.push_back(random_letter(sess, rng));
    Poly a2 = random_letter(sess, rng);
    w.push_back(a2);
    auto [f, g] = tail_transform(w);
    if (f == RatFunc(-one, a2 * a2) && g == RatFunc(-one, a2)) {
      ++two.passes;
    } else if (two.first_failure.empty()) {
      two.first_failure = "w = (" + list_line(w) + ")";
    }
  }
  rows.push_back(two);

  ReportRow three{"tail_three_letters", trials, 0, ""};
  for (uint32_t i = 0; i < trials; ++i) {
    Word w;
    w.push_back(random_letter(sess, rng));
    Poly a2 = random_letter(sess, rng);
    Poly a3 = random_letter(sess, rng);
    w.push_back(a2);
    w.push_back(a3);
    Poly u = a2 * a3 + one;
    auto [f, g] = tail_transform(w);
    if (f == RatFunc(one, u * u) && g == RatFunc(-a2, u)) {
      ++three.passes;
    } else if (three.first_failure.empty()) {
      three.first_failure = "w = (" + list_line(w) + ")";
    }
  }
  rows.push_back(three);

  ReportRow fold_row{"tail_defining_identity", trials, 0, ""};
  for (uint32_t i = 0; i < trials; ++i) {
    Word w;
    size_t len = 1 + rng() % 5;
    for (size_t j = 0; j < len; ++j) w.push_back(random_letter(sess, rng));
    Poly x = random_letter(sess, rng);
    auto [f, g] = tail_transform(w);
    RatFunc lhs = fold(w) + RatFunc(one, x);
    RatFunc rhs = fold(w, f * RatFunc::from_poly(x) + g);
    if (lhs == rhs) {
      ++fold_row.passes;
    } else if (fold_row.first_failure.empty()) {
      fold_row.first_failure = "w = (" + list_line(w) + "), x = " + x.str();
    }
  }
  rows.push_back(fold_row);
  return rows;
}

int cmd_identities(const Options& o) {
  Session sess = Session::make(o.p, o.t);  // any r = p^t >= 2 is admissible here
  std::vector<ReportRow> rows = identity_rows(sess, o.trials, o.rng_seed);
  return report_rows(rows, o, "both closed forms pass");
}

int cmd_words(const Options& o) {
  Session sess = Session::make(o.p, o.t);
  require_expansion_r(sess);
  if (o.k == 0) throw ConfigError("--k must be at least 1");
  if (o.family != "omega" && !o.poly_text.empty())
    throw ConfigError("--P applies only to the omega family");
  Word w;
  if (o.family == "gamma") {
    w = gamma(sess, o.k);
  } else if (o.family == "lambda") {
    w = lambda_word(sess, o.k);
  } else if (o.family == "omega") {
    w = o.poly_text.empty() ? omega(sess, o.k)
                            : omega_p(sess, parse_poly_flag(sess, o.poly_text, "--P"), o.k);
  } else {
    throw ConfigError("unknown word family '" + o.family +
                      "' (expected gamma, lambda, omega)");
  }
  if (o.output == "json") {
    std::cout << words_json(o.family, o.k, sess, w).dump() << "\n";
  } else {
    std::cout << list_line(w) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continued fractions of hyperquadratic series over F_p((1/T))"};
  app.require_subcommand(1);
  Options o;

  auto add_session = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "characteristic (prime)")->required();
    cmd->add_option("--t", o.t, "exponent: r = p^t");
    cmd->add_option("--output", o.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--rng-seed", o.rng_seed, "seed for randomized suites");
    cmd->add_flag("--random", o.random_seed, "draw the rng seed from the system");
  };
  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", o.family, "baum-sweet, mahler, general, mahlergen")
        ->required();
    cmd->add_option("--P", o.poly_text, "polynomial P (general family)");
    cmd->add_option("--seed", o.seed_text, "comma-separated seed letters (mahlergen)");
    cmd->add_option("--n", o.n, "number of quotients");
  };

  CLI::App* expand = app.add_subcommand("expand", "certified quotients of the solved series");
  add_session(expand);
  add_family(expand);

  CLI::App* predict = app.add_subcommand("predict", "closed-form quotient stream");
  add_session(predict);
  add_family(predict);

  CLI::App* verify = app.add_subcommand("verify", "cross-check the three routes");
  add_session(verify);
  add_family(verify);
  verify->add_option("--inject-fault", o.inject_fault,
                     "corrupt the stream route at this index (test hook)");

  CLI::App* rules = app.add_subcommand("rules", "rule table vs generic step");
  add_session(rules);
  rules->add_option("--trials", o.trials, "random trials per row");

  CLI::App* identities = app.add_subcommand("identities", "tail-transform identities");
  add_session(identities);
  identities->add_option("--trials", o.trials, "random trials per identity");

  CLI::App* words = app.add_subcommand("words", "one generated word at depth k");
  add_session(words);
  words->add_option("--family", o.family, "gamma, lambda, omega")->required();
  words->add_option("--k", o.k, "recursion depth")->required();
  words->add_option("--P", o.poly_text, "seed polynomial (omega only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (o.random_seed) {
    std::random_device rd;
    o.rng_seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  }

  try {
    if (expand->parsed()) return cmd_expand(o);
    if (predict->parsed()) return cmd_predict(o);
    if (verify->parsed()) return cmd_verify(o);
    if (rules->parsed()) return cmd_rules(o);
    if (identities->parsed()) return cmd_identities(o);
    if (words->parsed()) return cmd_words(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
