#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqcf/cfword.hpp"
#include "hqcf/fp.hpp"
#include "hqcf/poly.hpp"

namespace hqcf {

// The six canonical equation types.  A state of type A_i encodes the
// relation P*z_m^r = Q*z_n + R with (P, Q, R) equal to the triple below:
//   A_1 = (1, T^2,  T+1)   A_2 = (1, T^2, -T+1)   A_3 = (T, -T, -1)
//   A_4 = (1, T^2, -T  )   A_5 = (T, -T,   1 )    A_6 = (1, T^2,  T)
enum class EqTag { A1, A2, A3, A4, A5, A6 };

const char* tag_name(EqTag tag);

// Relation "P * z_m^r = Q * z_n + R" between complete quotients, with
// 1 <= m < n and P, Q nonzero.
struct TransitionState {
  Poly P, Q, R;
  uint64_t m = 0, n = 0;

  static TransitionState make(Poly P, Poly Q, Poly R, uint64_t m, uint64_t n);
  static TransitionState from_tag(EqTag tag, uint32_t p, uint64_t m, uint64_t n);

  // Divides P, Q, R by their common gcd and scales so P is monic; the
  // canonical representative used for type recognition.
  TransitionState normalized() const;
  // Exact match against one of the six canonical triples, after
  // normalization.
  std::optional<EqTag> classify() const;

  std::string str() const;

  friend bool operator==(const TransitionState& a, const TransitionState& b) {
    return a.P == b.P && a.Q == b.Q && a.R == b.R && a.m == b.m && a.n == b.n;
  }
};

struct StepResult {
  Word emitted;
  TransitionState next;
};

// One consumption step computed from first principles: expands
// (P*a_m^r - R)/Q as a rational continued fraction w, rewrites the
// relation through the tail transform, and clears denominators into the
// normalized successor state at (m+1, n+|w|).  Refuses to emit when the
// identification guard
//   deg(f) + deg(Q) - deg(P) + r > max(0, deg(g))
// cannot certify that the new complete quotient has degree >= 1.
StepResult step_generic(const Session& sess, const TransitionState& s, const Poly& a_m);

// The same step via the closed rule table (ten rows).  Errors when the
// state does not normalize to a known type or the residue a_m(0) falls in
// a class the table does not cover.
StepResult apply_rule(const Session& sess, const TransitionState& s, const Poly& a_m);

// Grows a quotient sequence from a seed a_1..a_(n-1) consistent with the
// initial state: repeatedly consumes a_m (tries the rule table first, then
// the generic step) and appends the emitted letters, until count letters
// exist.  Returns the first count letters, seed included.
Word self_generate(const Session& sess, const TransitionState& initial, const Word& seed,
                   size_t count);

struct ReportRow {
  std::string rule;
  uint32_t trials = 0;
  uint32_t passes = 0;
  std::string first_failure;  // empty when all trials passed
};

// Draws random consumed letters in each rule row's residue class and
// checks apply_rule against step_generic (identical emitted letters and
// successor states).
std::vector<ReportRow> verify_rule_table(const Session& sess, uint32_t trials,
                                         uint64_t rng_seed);

// Feeds the recursive words letter-by-letter through the rule table and
// checks the emitted concatenations and final types:
//   gamma(k)  from A_5 (k even) / A_3 (k odd)
//       -> drop_take(gamma(k+1), 1, 0), ends A_6 / A_4;
//   the mirrored word reverse_neg(gamma(k)) likewise;
//   lambda_word(k) from A_2
//       -> (T^(r-2)) ++ lambda_word(k+1), ends A_6 (k even) / A_4 (k odd);
//   reverse_neg(lambda_word(k)) from A_5 (k even) / A_3 (k odd)
//       -> drop_take(reverse_neg(lambda_word(k+1)), 1, 0)
//          ++ (-T^(r-2), T+1, T-1), ends A_1.
std::vector<ReportRow> verify_word_lemmas(const Session& sess, uint32_t k_max);

}  // namespace hqcf
