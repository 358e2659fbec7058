#include <doctest.h>

#include <random>
#include <vector>

#include "hqcf/cfword.hpp"
#include "hqcf/error.hpp"
#include "hqcf/ratfunc.hpp"

using namespace hqcf;

namespace {

Poly random_poly(uint32_t p, size_t deg, std::mt19937_64& rng) {
  std::vector<int64_t> c(deg + 1);
  for (size_t i = 0; i < deg; ++i) c[i] = static_cast<int64_t>(rng() % p);
  c[deg] = 1 + static_cast<int64_t>(rng() % (p - 1));
  return Poly::from_coeffs(p, c);
}

}  // namespace

TEST_CASE("canonical form: reduced, monic denominator") {
  const uint32_t p = 3;
  Poly t = Poly::variable(p);
  Poly one = Poly::constant(p, 1);

  RatFunc a(Poly::from_coeffs(p, {2, 2}), Poly::constant(p, 2));
  CHECK(a.num().str() == "T+1");
  CHECK(a.den().str() == "1");
  CHECK(a.is_poly());

  const uint32_t p5 = 5;
  Poly t5 = Poly::variable(p5);
  RatFunc b(t5 * t5 - Poly::constant(p5, 1), t5 - Poly::constant(p5, 1));
  CHECK(b.num().str() == "T+1");
  CHECK(b.den().str() == "1");

  RatFunc c(t, Poly::from_coeffs(p, {1, 2}));  // T / (2T+1)
  CHECK(c.den().is_monic());
  CHECK(c.num().str() == "2*T");
  CHECK(c.den().str() == "T+2");

  CHECK_THROWS_AS(RatFunc(t, Poly::zero(p)), Error);
  CHECK(RatFunc(Poly::zero(p), t).is_zero());
  CHECK(RatFunc(Poly::zero(p), t) == RatFunc(p));
  CHECK(RatFunc::from_poly(one).is_poly());
}

TEST_CASE("field operations and degree") {
  const uint32_t p = 5;
  Poly t = Poly::variable(p);
  Poly one = Poly::constant(p, 1);
  RatFunc x(one, t);           // 1/T
  RatFunc y(t + one, t * t);   // (T+1)/T^2

  CHECK((x + y).num().str() == "2*T+1");
  CHECK((x + y).den().str() == "T^2");
  CHECK((x * y).num().str() == "T+1");
  CHECK((x * y).den().str() == "T^3");
  CHECK((x - x).is_zero());
  CHECK((x / y) == RatFunc(t, t + one));
  CHECK(x.inverse() == RatFunc::from_poly(t));
  CHECK_THROWS_AS(RatFunc(p).inverse(), Error);

  CHECK(RatFunc(t * t + one, t).degree() == 1);
  CHECK(x.degree() == -1);
  CHECK_THROWS_AS(RatFunc(p).degree(), Error);

  // Frobenius commutes with the quotient construction.
  CHECK(y.frobenius_pow(5) == RatFunc(t.frobenius_pow(5) + one, (t * t).frobenius_pow(5)));
}

TEST_CASE("polynomial part and proper remainder") {
  const uint32_t p = 2;
  Poly t = Poly::variable(p);
  Poly one = Poly::constant(p, 1);
  RatFunc f(t * t * t + t + one, t * t + one);
  auto [q, rem] = f.split();
  CHECK(q == t);
  CHECK(rem == RatFunc(one, t * t + one));
  CHECK(RatFunc::from_poly(q) + rem == f);
}

TEST_CASE("finite continued fraction: frozen case and inverse round trip") {
  const uint32_t p = 2;
  Poly t = Poly::variable(p);
  Poly one = Poly::constant(p, 1);
  RatFunc f(t * t * t + t + one, t * t + one);
  Word w = continued_fraction(f);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == t);
  CHECK(w[1] == t * t + one);
  CHECK(fold(w) == f);

  // A plain polynomial is its own one-letter expansion.
  Word single = continued_fraction(RatFunc::from_poly(t + one));
  CHECK(single.size() == 1);
  CHECK(single[0] == t + one);

  std::mt19937_64 rng(31);
  for (uint32_t prime : {2u, 3u, 5u}) {
    for (int i = 0; i < 60; ++i) {
      Poly num = random_poly(prime, rng() % 7, rng);
      Poly den = random_poly(prime, rng() % 5, rng);
      RatFunc g(num, den);
      Word cf = continued_fraction(g);
      CHECK(fold(cf) == g);
      for (size_t j = 1; j < cf.size(); ++j) {
        CHECK_FALSE(cf[j].is_zero());
        CHECK(cf[j].degree() >= 1);
      }
    }
  }
}

TEST_CASE("convergents satisfy the determinant identity") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const uint32_t p = 5;
    Word w;
    size_t len = 1 + rng() % 6;
    for (size_t j = 0; j < len; ++j) w.push_back(random_poly(p, 1 + rng() % 3, rng));
    auto conv = convergents(w);
    REQUIRE(conv.size() == w.size());
    Poly pm1 = Poly::constant(p, 1), qm1 = Poly::zero(p);  // (p_{-1}, q_{-1})
    Poly pm2 = Poly::zero(p), qm2 = Poly::constant(p, 1);  // (p_{-2}, q_{-2})
    int sign = -1;  // p_0 q_{-1} - p_{-1} q_0 = -1
    for (size_t j = 0; j < conv.size(); ++j) {
      CHECK(conv[j].first == w[j] * pm1 + pm2);
      CHECK(conv[j].second == w[j] * qm1 + qm2);
      Poly det = conv[j].first * qm1 - pm1 * conv[j].second;
      CHECK(det == Poly::constant(p, sign));
      sign = -sign;
      pm2 = pm1;
      qm2 = qm1;
      pm1 = conv[j].first;
      qm1 = conv[j].second;
    }
  }
}

TEST_CASE("fold with an explicit tail") {
  const uint32_t p = 3;
  Poly t = Poly::variable(p);
  Word w;
  w.push_back(t);
  w.push_back(t + Poly::constant(p, 1));
  RatFunc tail(t * t + Poly::constant(p, 2), t);
  // [t; t+1, tail] = t + 1/(t + 1 + 1/tail)
  RatFunc inner = RatFunc::from_poly(t + Poly::constant(p, 1)) + tail.inverse();
  CHECK(fold(w, tail) == RatFunc::from_poly(t) + inner.inverse());

  // The tail that zeroes the denominator is rejected.
  Word v;
  v.push_back(Poly::zero(p));
  v.push_back(t);
  CHECK_THROWS_AS(fold(v, RatFunc(-Poly::constant(p, 1), t)), Error);
}
