#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hqcf/error.hpp"
#include "hqcf/words.hpp"

using namespace hqcf;

namespace {

Word word_of(uint32_t p, const std::vector<const char*>& letters) {
  Word w;
  for (const char* s : letters) w.push_back(Poly::parse(p, s));
  return w;
}

}  // namespace

TEST_CASE("exponent sequences") {
  Session s3 = Session::make(3, 1);
  CHECK(exp_value(ExpKind::lambda, s3, 1) == 3);
  CHECK(exp_value(ExpKind::lambda, s3, 2) == 7);
  CHECK(exp_value(ExpKind::lambda, s3, 3) == 19);
  CHECK(exp_value(ExpKind::lambda, s3, 4) == 55);
  // r = 3 pins the omega sequence at 1 forever.
  for (uint32_t k = 1; k <= 12; ++k) CHECK(exp_value(ExpKind::omega, s3, k) == 1);

  Session s5 = Session::make(5, 1);
  CHECK(exp_value(ExpKind::omega, s5, 1) == 3);
  CHECK(exp_value(ExpKind::omega, s5, 2) == 13);
  CHECK(exp_value(ExpKind::omega, s5, 3) == 63);

  Session s4 = Session::make(2, 2);
  CHECK(exp_value(ExpKind::omega, s4, 1) == 2);
  CHECK(exp_value(ExpKind::omega, s4, 2) == 6);
  CHECK(exp_value(ExpKind::omega, s4, 3) == 22);
  CHECK(exp_value(ExpKind::lambda, s4, 1) == 4);
  CHECK(exp_value(ExpKind::lambda, s4, 2) == 14);

  // The difference law: omega_{k} - omega_{k-1} = (r-3) * r^{k-1}.
  Session s7 = Session::make(7, 1);
  int64_t pw = 1;
  for (uint32_t k = 2; k <= 8; ++k) {
    pw *= 7;  // r^{k-1}
    CHECK(exp_value(ExpKind::omega, s7, k) - exp_value(ExpKind::omega, s7, k - 1) == 4 * pw);
  }

  CHECK_THROWS_AS(exp_value(ExpKind::omega, Session::make(2, 1), 1), ConfigError);
}

TEST_CASE("gamma words") {
  Session s = Session::make(3, 1);
  CHECK(gamma(s, 1) == word_of(3, {"2*T", "T^3", "T"}));
  CHECK(gamma(s, 2) == word_of(3, {"T", "T^3", "2*T", "T^7", "T", "2*T^3", "2*T"}));

  for (uint32_t k = 1; k <= 12; ++k)
    CHECK(gamma(s, k).size() == (size_t(2) << k) - 1);

  // Odd positions carry +-T; even positions are divisible by T^3.
  Word g5 = gamma(s, 5);
  Poly t = Poly::variable(3);
  for (size_t i = 0; i < g5.size(); i += 2) CHECK((g5[i] == t || g5[i] == -t));
  for (size_t i = 1; i < g5.size(); i += 2) CHECK(g5[i].divisible_by_t(3));

  Session s4 = Session::make(2, 2);
  CHECK(gamma(s4, 1) == word_of(2, {"T", "T^4", "T"}));
  CHECK(gamma(s4, 2).size() == 7);

  CHECK_THROWS_AS(gamma(Session::make(2, 1), 1), ConfigError);
  CHECK_THROWS_AS(gamma(s, 0), ConfigError);
}

TEST_CASE("lambda words") {
  Session s = Session::make(3, 1);
  CHECK(lambda_word(s, 1) == word_of(3, {"T+1", "T+2"}));
  CHECK(lambda_word(s, 2) == word_of(3, {"T", "2*T^3+1", "2*T"}));
  CHECK(lambda_word(s, 3) == word_of(3, {"T+1", "T+2", "2*T^7", "2*T", "T^3", "T"}));

  // |lambda_k| = |lambda_{k-2}| + 2^{k-1}.
  std::vector<size_t> sizes{0, 2, 3};
  for (uint32_t k = 3; k <= 10; ++k) sizes.push_back(sizes[k - 2] + (size_t(1) << (k - 1)));
  for (uint32_t k = 1; k <= 10; ++k) CHECK(lambda_word(s, k).size() == sizes[k]);

  Session s5 = Session::make(5, 1);
  CHECK(lambda_word(s5, 2) == word_of(5, {"T", "4*T^5+1", "4*T"}));
}

TEST_CASE("omega words: frozen levels, prefix growth, boundaries") {
  Session s = Session::make(3, 1);
  CHECK(omega(s, 1) == word_of(3, {"2*T"}));
  CHECK(omega(s, 2) == word_of(3, {"2*T", "T+1", "T+2", "2*T", "2*T+1", "2*T+2", "T"}));

  Session s4 = Session::make(2, 2);
  CHECK(omega(s4, 2) == word_of(2, {"T^2", "T+1", "T+1", "T^6", "T+1", "T+1", "T^2"}));

  for (Session sess : {Session::make(3, 1), Session::make(2, 2)}) {
    for (uint32_t k = 1; k <= 8; ++k) {
      Word a = omega(sess, k);
      Word b = omega(sess, k + 1);
      REQUIRE(a.size() < b.size());
      for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
  }

  // Boundary letters of omega_k for k > 1: starts with the level-1 letter
  // then T+1, T-1; ends with -(T+1) reversed-negated back, i.e.
  // -T+1, -T-1, T^(r-2).
  for (Session sess : {Session::make(3, 1), Session::make(5, 1), Session::make(2, 2)}) {
    Poly t = Poly::variable(sess.p);
    Poly one = Poly::constant(sess.p, 1);
    Poly lead = Poly::monomial(sess.p, -1, static_cast<int64_t>(sess.r) - 2);
    for (uint32_t k = 2; k <= 6; ++k) {
      Word w = omega(sess, k);
      CHECK(w[0] == lead);
      CHECK(w[1] == t + one);
      CHECK(w[2] == t - one);
      CHECK(w[w.size() - 3] == -(t - one));
      CHECK(w[w.size() - 2] == -(t + one));
      CHECK(w[w.size() - 1] == -lead);
    }
  }
}

TEST_CASE("seeded omega words") {
  Session s = Session::make(3, 1);
  Poly t = Poly::variable(3);

  // The default seed -T^(r-2) reproduces the plain family.
  for (Session sess : {Session::make(3, 1), Session::make(5, 1)}) {
    Poly lead = Poly::monomial(sess.p, -1, static_cast<int64_t>(sess.r) - 2);
    for (uint32_t k = 1; k <= 5; ++k) CHECK(omega_p(sess, lead, k) == omega(sess, k));
  }

  CHECK(omega_p(s, t * t, 1) == word_of(3, {"T^2"}));
  // Middle letter at level 2: T^(omega_1) * (P/T)^r.  The closing block is
  // the mirror of the plain word, so the seed does not reappear there.
  CHECK(omega_p(s, t * t, 2) ==
        word_of(3, {"T^2", "T+1", "T+2", "T^4", "2*T+1", "2*T+2", "T"}));

  CHECK_THROWS_AS(omega_p(s, Poly::zero(3), 1), ConfigError);
  CHECK_THROWS_AS(omega_p(s, t + Poly::constant(3, 1), 1), ConfigError);  // T must divide P
  CHECK_THROWS_AS(omega_p(s, Poly::variable(5), 1), ConfigError);         // wrong field
}

TEST_CASE("omega stream yields the limit word") {
  Session s = Session::make(3, 1);
  OmegaStream plain(s);
  std::vector<Poly> first = plain.take(omega(s, 5).size());
  Word w5 = omega(s, 5);
  REQUIRE(first.size() == w5.size());
  for (size_t i = 0; i < first.size(); ++i) CHECK(first[i] == w5[i]);

  // next() continues where take() stopped.
  OmegaStream again(s);
  std::vector<Poly> head = again.take(3);
  CHECK(again.next() == w5[3]);

  Poly seed = Poly::parse(3, "T^2+2*T");
  OmegaStream seeded(s, seed);
  std::vector<Poly> sv = seeded.take(omega_p(s, seed, 4).size());
  Word w4 = omega_p(s, seed, 4);
  for (size_t i = 0; i < sv.size(); ++i) CHECK(sv[i] == w4[i]);
}

TEST_CASE("self-referential quotient stream") {
  Session s = Session::make(3, 1);
  Word unit;
  unit.push_back(Poly::variable(3));
  MahlergenStream st(s, unit);
  std::vector<Poly> got = st.take(9);
  Word want = word_of(3, {"T", "2*T", "2*T", "2*T^3", "T", "T", "2*T", "2*T^9", "T"});
  REQUIRE(got.size() == 9);
  for (size_t i = 0; i < 9; ++i) CHECK(got[i] == want[i]);

  Session s4 = Session::make(2, 2);
  Word unit2;
  unit2.push_back(Poly::variable(2));
  MahlergenStream st2(s4, unit2);
  std::vector<Poly> got2 = st2.take(8);
  Word want2 = word_of(2, {"T", "T^2", "T", "T^8", "T", "T^2", "T", "T^32"});
  for (size_t i = 0; i < 8; ++i) CHECK(got2[i] == want2[i]);

  // A longer admissible seed: every block re-reads earlier letters.
  Word seed = word_of(3, {"T^2", "T+1", "T^3"});
  MahlergenStream st3(s, seed);
  std::vector<Poly> v = st3.take(11);
  CHECK(v[3] == Poly::parse(3, "2*T^4"));   // -a_1^r / T^2
  CHECK(v[4] == Poly::parse(3, "2*T"));     // -T
  CHECK(v[5] == Poly::parse(3, "T^3+1"));   // a_2^r
  CHECK(v[6] == Poly::parse(3, "T"));       // T
  CHECK(v[7] == Poly::parse(3, "2*T^7"));   // -a_3^r / T^2
  CHECK(v[10] == Poly::parse(3, "T"));

  // Seed validation.
  CHECK_THROWS_AS(MahlergenStream(s, Word()), ConfigError);
  Word bad1 = word_of(3, {"T+1"});  // odd position not divisible by T
  CHECK_THROWS_AS(MahlergenStream(s, bad1), ConfigError);
  Word bad2 = word_of(3, {"T", "2"});  // constant letter
  CHECK_THROWS_AS(MahlergenStream(s, bad2), ConfigError);

  // An even-length seed can poison a later block; the stream refuses
  // rather than inventing letters.  Here a_5 = (T+1)^3 enters the block
  // that generates letter 11 with a nonzero constant term.
  Word even = word_of(3, {"T", "T+1"});
  MahlergenStream st4(s, even);
  std::vector<Poly> ok = st4.take(10);
  CHECK(ok[4] == Poly::parse(3, "T^3+1"));
  CHECK_THROWS_AS(st4.take(12), Error);
}

TEST_CASE("word helpers") {
  Word w = word_of(3, {"T", "T+1", "2*T"});
  Word inner = drop_take(w, 1, 0);
  CHECK(inner == word_of(3, {"T+1", "2*T"}));
  CHECK(drop_take(w, 1, 1) == word_of(3, {"T+1"}));
  CHECK(drop_take(w, 0, 0) == w);
  CHECK_THROWS_AS(drop_take(w, 2, 2), Error);

  Word rn = reverse_neg(w);
  CHECK(rn == word_of(3, {"T", "2*T+2", "2*T"}));
  CHECK(reverse_neg(rn) == w);  // involution

  // In characteristic 2 negation is the identity, so the mirror is a plain
  // reversal.
  Word v = word_of(2, {"T", "T+1", "T^2"});
  CHECK(reverse_neg(v) == word_of(2, {"T^2", "T+1", "T"}));

  CHECK(w.str() == "T, T+1, 2*T");
  CHECK(w.slice(1, 3) == inner);
}
