#include "hqcf/hyperquad.hpp"

#include <algorithm>
#include <random>

#include "hqcf/contfrac.hpp"
#include "hqcf/error.hpp"
#include "hqcf/ratfunc.hpp"
#include "hqcf/words.hpp"

namespace hqcf {

namespace {

Poly tpow(uint32_t p, int64_t c, int64_t e) { return Poly::monomial(p, c, e); }

Poly t_plus(uint32_t p, int64_t c) { return Poly::from_coeffs(p, {c, 1}); }

void require_letter(const Poly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw StepError("consumed letter must have degree >= 1");
}

void require_session(const Session& sess, uint32_t p) {
  if (sess.p != p) throw ConfigError("session characteristic does not match the state");
  if (sess.r <= 2) throw ConfigError("transition steps require r > 2");
}

}  // namespace

const char* tag_name(EqTag tag) {
  switch (tag) {
    case EqTag::A1: return "A_1";
    case EqTag::A2: return "A_2";
    case EqTag::A3: return "A_3";
    case EqTag::A4: return "A_4";
    case EqTag::A5: return "A_5";
    case EqTag::A6: return "A_6";
  }
  throw Error("unknown equation tag");
}

TransitionState TransitionState::make(Poly P, Poly Q, Poly R, uint64_t m, uint64_t n) {
  if (P.is_zero() || Q.is_zero()) throw Error("transition state requires nonzero P and Q");
  if (P.p() != Q.p() || P.p() != R.p()) throw Error("mixed characteristics in transition state");
  if (m < 1 || m >= n) throw Error("transition state requires 1 <= m < n");
  TransitionState s{std::move(P), std::move(Q), std::move(R), m, n};
  return s;
}

TransitionState TransitionState::from_tag(EqTag tag, uint32_t p, uint64_t m, uint64_t n) {
  const Poly one = Poly::constant(p, 1);
  const Poly t = Poly::variable(p);
  const Poly t2 = tpow(p, 1, 2);
  switch (tag) {
    case EqTag::A1: return make(one, t2, t_plus(p, 1), m, n);
    case EqTag::A2: return make(one, t2, -t_plus(p, -1), m, n);
    case EqTag::A3: return make(t, -t, Poly::constant(p, -1), m, n);
    case EqTag::A4: return make(one, t2, -t, m, n);
    case EqTag::A5: return make(t, -t, one, m, n);
    case EqTag::A6: return make(one, t2, t, m, n);
  }
  throw Error("unknown equation tag");
}

TransitionState TransitionState::normalized() const {
  Poly g = Poly::gcd(Poly::gcd(P, Q), R);
  auto exact = [&](const Poly& x) {
    if (x.is_zero()) return x;
    auto [q, rem] = Poly::divmod(x, g);
    if (!rem.is_zero()) throw Error("gcd normalization failed");
    return q;
  };
  Poly np = exact(P), nq = exact(Q), nr = exact(R);
  Fp scale = inverse(np.lead());
  return make(np.times_const(scale), nq.times_const(scale), nr.times_const(scale), m, n);
}

std::optional<EqTag> TransitionState::classify() const {
  TransitionState ns = normalized();
  for (EqTag tag : {EqTag::A1, EqTag::A2, EqTag::A3, EqTag::A4, EqTag::A5, EqTag::A6}) {
    TransitionState canon = from_tag(tag, P.p(), m, n);
    if (ns.P == canon.P && ns.Q == canon.Q && ns.R == canon.R) return tag;
  }
  return std::nullopt;
}

std::string TransitionState::str() const {
  std::string out = "(" + P.str() + ", " + Q.str() + ", " + R.str() + ", m=" +
                    std::to_string(m) + ", n=" + std::to_string(n) + ")";
  if (auto tag = classify()) out += " [" + std::string(tag_name(*tag)) + "]";
  return out;
}

StepResult step_generic(const Session& sess, const TransitionState& s, const Poly& a_m) {
  require_session(sess, s.P.p());
  require_letter(a_m);
  // z_n = (P*a_m^r - R)/Q + (P/Q) / z_(m+1)^r, so the letters of z_n that
  // the relation pins down are the rational expansion of the first term.
  const Poly num = s.P * a_m.frobenius_pow(sess.r) - s.R;
  const Word w = continued_fraction(RatFunc(num, s.Q));
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i].is_zero() || w[i].degree() < 1)
      throw StepError("emitted letter not certified to have degree >= 1");
  auto [f, g] = tail_transform(w);
  // Certify |z'| > 1 assuming only deg(z_(m+1)) >= 1: the f-term of
  // z' = f*(Q/P)*z_(m+1)^r + g then dominates max(0, deg g).
  const int64_t lb = f.degree() + s.Q.degree() - s.P.degree() + static_cast<int64_t>(sess.r);
  const int64_t rhs = g.is_zero() ? 0 : std::max<int64_t>(0, g.degree());
  if (lb <= rhs) throw StepError("identification |z'| > 1 not certified");
  // Clear denominators of z' - g = f*(Q/P)*z^r into P1*z^r = Q1*z' + R1.
  Poly p1 = g.den() * f.num() * s.Q;
  Poly q1 = f.den() * g.den() * s.P;
  Poly r1 = -(f.den() * g.num() * s.P);
  TransitionState next =
      TransitionState::make(std::move(p1), std::move(q1), std::move(r1), s.m + 1, s.n + w.size())
          .normalized();
  return {w, std::move(next)};
}

StepResult apply_rule(const Session& sess, const TransitionState& s, const Poly& a_m) {
  require_session(sess, s.P.p());
  require_letter(a_m);
  const auto tag = s.classify();
  if (!tag) throw StepError("state does not normalize to a closed-form type");
  const uint32_t p = sess.p;
  const uint32_t res = a_m.at_zero().v;
  const auto dil2 = [&](const Poly& x) {  // x^r / T^2
    return x.frobenius_pow(sess.r).div_exact_pow_t(2);
  };
  const Poly one = Poly::constant(p, 1);

  Word emitted;
  EqTag to = *tag;
  switch (*tag) {
    case EqTag::A1:
      if (res == 0) {
        emitted.push_back(dil2(a_m));
        emitted.push_back(-t_plus(p, -1));
        emitted.push_back(-t_plus(p, 1));
        to = EqTag::A2;
      } else if (res == 1) {
        emitted.push_back(dil2(a_m - one));
        emitted.push_back(tpow(p, -1, 1));
        to = EqTag::A5;
      } else {
        throw StepError("uncovered residue class for type A1");
      }
      break;
    case EqTag::A2:
      if (res == 0) {
        emitted.push_back(dil2(a_m));
        emitted.push_back(t_plus(p, 1));
        emitted.push_back(t_plus(p, -1));
        to = EqTag::A1;
      } else if (res == 1) {
        emitted.push_back(dil2(a_m - one));
        emitted.push_back(tpow(p, 1, 1));
        to = EqTag::A3;
      } else {
        throw StepError("uncovered residue class for type A2");
      }
      break;
    case EqTag::A3:
      emitted.push_back(-a_m.frobenius_pow(sess.r));
      emitted.push_back(tpow(p, -1, 1));
      to = EqTag::A4;
      break;
    case EqTag::A4:
      if (res == 0) {
        emitted.push_back(dil2(a_m));
        emitted.push_back(tpow(p, 1, 1));
        to = EqTag::A3;
      } else if (res == p - 1) {
        emitted.push_back(dil2(a_m + one));
        emitted.push_back(t_plus(p, 1));
        emitted.push_back(t_plus(p, -1));
        to = EqTag::A1;
      } else {
        throw StepError("uncovered residue class for type A4");
      }
      break;
    case EqTag::A5:
      emitted.push_back(-a_m.frobenius_pow(sess.r));
      emitted.push_back(tpow(p, 1, 1));
      to = EqTag::A6;
      break;
    case EqTag::A6:
      if (res == 0) {
        emitted.push_back(dil2(a_m));
        emitted.push_back(tpow(p, -1, 1));
        to = EqTag::A5;
      } else if (res == p - 1) {
        emitted.push_back(dil2(a_m + one));
        emitted.push_back(-t_plus(p, -1));
        emitted.push_back(-t_plus(p, 1));
        to = EqTag::A2;
      } else {
        throw StepError("uncovered residue class for type A6");
      }
      break;
  }
  TransitionState next = TransitionState::from_tag(to, p, s.m + 1, s.n + emitted.size());
  return {std::move(emitted), std::move(next)};
}

Word self_generate(const Session& sess, const TransitionState& initial, const Word& seed,
                   size_t count) {
  require_session(sess, initial.P.p());
  if (seed.size() + 1 != initial.n)
    throw ConfigError("seed must supply the letters a_1..a_(n-1) of the initial state");
  for (size_t i = 0; i < seed.size(); ++i)
    if (seed[i].is_zero() || seed[i].degree() < 1)
      throw ConfigError("seed letters must have degree >= 1");
  std::vector<Poly> letters = seed.a;
  TransitionState state = initial;
  while (letters.size() < count) {
    if (state.m > letters.size()) throw Error("consumption pointer ran past the known letters");
    const Poly a_m = letters[state.m - 1];
    std::optional<StepResult> res;
    try {
      res = apply_rule(sess, state, a_m);
    } catch (const StepError&) {
      res = step_generic(sess, state, a_m);
    }
    for (const Poly& q : res->emitted.a) letters.push_back(q);
    state = std::move(res->next);
    if (letters.size() + 1 != state.n) throw Error("index bookkeeping mismatch");
  }
  Word out;
  out.a.assign(letters.begin(), letters.begin() + static_cast<ptrdiff_t>(count));
  return out;
}

namespace {

Poly random_in_class(std::mt19937_64& rng, uint32_t p, int residue) {
  const int64_t deg = 1 + static_cast<int64_t>(rng() % 4);
  std::vector<int64_t> c(static_cast<size_t>(deg) + 1, 0);
  for (int64_t i = 1; i < deg; ++i) c[static_cast<size_t>(i)] = static_cast<int64_t>(rng() % p);
  c[static_cast<size_t>(deg)] = 1 + static_cast<int64_t>(rng() % (p - 1));
  switch (residue) {
    case 0: c[0] = 0; break;
    case 1: c[0] = 1; break;
    case -1: c[0] = static_cast<int64_t>(p) - 1; break;
    default: c[0] = static_cast<int64_t>(rng() % p); break;
  }
  return Poly::from_coeffs(p, c);
}

}  // namespace

std::vector<ReportRow> verify_rule_table(const Session& sess, uint32_t trials,
                                         uint64_t rng_seed) {
  struct RuleRow {
    const char* name;
    EqTag tag;
    int residue;  // 0, 1, -1, or 2 for "any"
  };
  static const RuleRow kRows[10] = {
      {"A1_res0", EqTag::A1, 0},   {"A1_res1", EqTag::A1, 1},
      {"A2_res0", EqTag::A2, 0},   {"A2_res1", EqTag::A2, 1},
      {"A3_any", EqTag::A3, 2},    {"A4_res0", EqTag::A4, 0},
      {"A4_res-1", EqTag::A4, -1}, {"A5_any", EqTag::A5, 2},
      {"A6_res0", EqTag::A6, 0},   {"A6_res-1", EqTag::A6, -1},
  };
  std::mt19937_64 rng(rng_seed);
  std::vector<ReportRow> out;
  for (const RuleRow& row : kRows) {
    ReportRow rr{row.name, trials, 0, ""};
    for (uint32_t i = 0; i < trials; ++i) {
      const Poly a = random_in_class(rng, sess.p, row.residue);
      bool ok = false;
      std::string why;
      try {
        const TransitionState state = TransitionState::from_tag(row.tag, sess.p, 1, 2);
        const StepResult by_rule = apply_rule(sess, state, a);
        const StepResult by_generic = step_generic(sess, state, a);
        ok = by_rule.emitted == by_generic.emitted && by_rule.next == by_generic.next;
        if (!ok) why = "rule and generic step disagree";
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (ok) {
        ++rr.passes;
      } else if (rr.first_failure.empty()) {
        rr.first_failure = "trial " + std::to_string(i) + ": a = " + a.str() + ": " + why;
      }
    }
    out.push_back(std::move(rr));
  }
  return out;
}

namespace {

struct LemmaCase {
  std::string name;
  EqTag source;
  EqTag target;
  Word input;
  Word expected;
};

ReportRow run_lemma_case(const Session& sess, const LemmaCase& c) {
  ReportRow rr{c.name, 1, 0, ""};
  try {
    TransitionState state = TransitionState::from_tag(c.source, sess.p, 1, 2);
    Word emitted;
    for (size_t i = 0; i < c.input.size(); ++i) {
      StepResult res = apply_rule(sess, state, c.input[i]);
      emitted.append(res.emitted);
      state = std::move(res.next);
    }
    // Compare canonical triples, not tags: in characteristic 2 the types
    // collide in pairs, so the tag alone under-determines the state.
    const TransitionState ns = state.normalized();
    const TransitionState want = TransitionState::from_tag(c.target, sess.p, state.m, state.n);
    if (!(emitted == c.expected))
      rr.first_failure = "emitted word differs from the lemma's right-hand side";
    else if (!(ns.P == want.P && ns.Q == want.Q && ns.R == want.R))
      rr.first_failure = "final type is not " + std::string(tag_name(c.target));
    else
      rr.passes = 1;
  } catch (const std::exception& e) {
    rr.first_failure = e.what();
  }
  return rr;
}

}  // namespace

std::vector<ReportRow> verify_word_lemmas(const Session& sess, uint32_t k_max) {
  if (k_max < 2) throw ConfigError("k_max must be >= 2");
  const uint32_t p = sess.p;
  const int64_t rm2 = static_cast<int64_t>(sess.r) - 2;
  std::vector<ReportRow> out;
  for (uint32_t k = 1; k <= k_max; ++k) {
    const bool even = k % 2 == 0;
    const EqTag gamma_src = even ? EqTag::A5 : EqTag::A3;
    const EqTag gamma_dst = even ? EqTag::A6 : EqTag::A4;
    const std::string suffix = "_k" + std::to_string(k);

    LemmaCase gc{"Gamma" + suffix, gamma_src, gamma_dst, gamma(sess, k),
                 drop_take(gamma(sess, k + 1), 1, 0)};
    out.push_back(run_lemma_case(sess, gc));

    LemmaCase gm{"GammaMirror" + suffix, gamma_src, gamma_dst, reverse_neg(gamma(sess, k)),
                 drop_take(reverse_neg(gamma(sess, k + 1)), 1, 0)};
    out.push_back(run_lemma_case(sess, gm));

    Word lam_expect;
    lam_expect.push_back(tpow(p, 1, rm2));
    lam_expect.append(lambda_word(sess, k + 1));
    LemmaCase lc{"Lambda" + suffix, EqTag::A2, even ? EqTag::A6 : EqTag::A4,
                 lambda_word(sess, k), std::move(lam_expect)};
    out.push_back(run_lemma_case(sess, lc));

    Word lamm_expect = drop_take(reverse_neg(lambda_word(sess, k + 1)), 1, 0);
    lamm_expect.push_back(tpow(p, -1, rm2));
    lamm_expect.push_back(t_plus(p, 1));
    lamm_expect.push_back(t_plus(p, -1));
    LemmaCase lm{"LambdaMirror" + suffix, even ? EqTag::A5 : EqTag::A3, EqTag::A1,
                 reverse_neg(lambda_word(sess, k)), std::move(lamm_expect)};
    out.push_back(run_lemma_case(sess, lm));
  }
  return out;
}

}  // namespace hqcf
