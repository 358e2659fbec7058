#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hqcf/error.hpp"
#include "hqcf/laurent.hpp"
#include "hqcf/ratfunc.hpp"

using namespace hqcf;

namespace {

Poly random_poly(uint32_t p, size_t deg, std::mt19937_64& rng) {
  std::vector<int64_t> c(deg + 1);
  for (size_t i = 0; i < deg; ++i) c[i] = static_cast<int64_t>(rng() % p);
  c[deg] = 1 + static_cast<int64_t>(rng() % (p - 1));
  return Poly::from_coeffs(p, c);
}

// Transparent reference for the series of N/D: peel the leading term of
// the remainder, one exponent at a time.
std::map<int64_t, uint32_t> long_division(const RatFunc& f, int64_t prec) {
  std::map<int64_t, uint32_t> out;
  const uint32_t p = f.p();
  std::map<int64_t, Fp> rem;  // remainder as exponent -> coefficient
  if (!f.num().is_zero()) {
    for (int64_t e = 0; e <= f.num().degree(); ++e)
      if (f.num().coeff(e).v != 0) rem[e] = f.num().coeff(e);
  }
  const Poly& d = f.den();
  while (!rem.empty()) {
    auto top = rem.rbegin();
    int64_t e = top->first - d.degree();
    if (e < prec) break;
    Fp c = top->second * inverse(d.lead());
    out[e] = c.v;
    for (int64_t j = 0; j <= d.degree(); ++j) {
      if (d.coeff(j).v == 0) continue;
      int64_t at = e + j;
      Fp cur = rem.count(at) ? rem[at] : Fp(0, p);
      Fp next = cur - c * d.coeff(j);
      if (next.v == 0)
        rem.erase(at);
      else
        rem[at] = next;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("window construction and coefficient access") {
  Series x = Series::from_poly(Poly::parse(3, "T^2+2*T"), -5);
  CHECK(x.top() == 2);
  CHECK(x.prec() == -5);
  CHECK(x.degree() == 2);
  CHECK(x.coeff(2).v == 1);
  CHECK(x.coeff(1).v == 2);
  CHECK(x.coeff(0).v == 0);
  CHECK(x.coeff(-5).v == 0);
  CHECK(x.coeff(99).v == 0);  // exact zero above the window
  CHECK_THROWS_AS(x.coeff(-6), Error);

  Series z = Series::zero_at(3, -4);
  CHECK(z.zero_so_far());
  CHECK(z.top() == -5);
  CHECK_THROWS_AS(z.degree(), Error);

  CHECK_THROWS_AS(Series::from_window(3, 2, 0, {1}), Error);   // wrong length
  CHECK_THROWS_AS(Series::from_window(3, 2, 0, {1, 5, 0}), Error);  // coeff >= p
}

TEST_CASE("rational embedding matches plain long division") {
  // 1/(T-1) = T^-1 + T^-2 + ... over F_3.
  Series g = Series::from_ratfunc(RatFunc(Poly::constant(3, 1), Poly::parse(3, "T+2")), -10);
  CHECK(g.degree() == -1);
  for (int64_t e = -1; e >= -10; --e) CHECK(g.coeff(e).v == 1);

  std::mt19937_64 rng(41);
  for (uint32_t p : {2u, 3u, 5u, 31u}) {
    for (int i = 0; i < 25; ++i) {
      RatFunc f(random_poly(p, rng() % 6, rng), random_poly(p, rng() % 4, rng));
      int64_t prec = -(3 + static_cast<int64_t>(rng() % 40));
      Series s = Series::from_ratfunc(f, prec);
      auto ref = long_division(f, prec);
      CHECK(s.prec() == prec);
      for (int64_t e = s.top(); e >= prec; --e) {
        uint32_t want = ref.count(e) ? ref[e] : 0;
        CHECK(s.coeff(e).v == want);
      }
    }
  }
}

TEST_CASE("addition and subtraction: precision is the worse floor") {
  Series x = Series::from_poly(Poly::parse(3, "T^2+1"), -6);
  Series y = Series::from_poly(Poly::parse(3, "2*T^2"), -3);
  Series s = x + y;
  CHECK(s.prec() == -3);
  CHECK(s.top() == 0);  // the T^2 terms cancel
  CHECK(s.coeff(0).v == 1);
  CHECK((x - x).zero_so_far());
  CHECK((x - x).prec() == -6);

  Series xp = x + Poly::parse(3, "2*T^2+T");
  CHECK(xp.prec() == -6);
  CHECK(xp.coeff(1).v == 1);
  CHECK(xp.coeff(2).v == 0);
}

TEST_CASE("product precision accounts for unknown-tail cross terms") {
  Series x = Series::from_poly(Poly::parse(5, "T^2+1"), -3);
  Series y = Series::from_poly(Poly::parse(5, "T+3"), -2);
  Series prod = x * y;
  // Tails enter no higher than top_x + (prec_y - 1) and top_y + (prec_x - 1).
  CHECK(prod.prec() == 0);
  CHECK(prod.top() == 3);
  CHECK(prod.coeff(3).v == 1);
  CHECK(prod.coeff(2).v == 3);
  CHECK(prod.coeff(1).v == 1);
  CHECK(prod.coeff(0).v == 3);

  Series xb = x * Poly::parse(5, "T^3");
  CHECK(xb.prec() == 0);  // prec + deg
  CHECK(xb.top() == 5);

  // Multiplying exact embeddings reproduces the polynomial product where
  // both windows certify it.
  std::mt19937_64 rng(43);
  for (int i = 0; i < 25; ++i) {
    Poly a = random_poly(3, rng() % 6, rng);
    Poly b = random_poly(3, rng() % 6, rng);
    Series sa = Series::from_poly(a, -8);
    Series sb = Series::from_poly(b, -8);
    Series sp = sa * sb;
    for (int64_t e = sp.top(); e >= sp.prec(); --e) CHECK(sp.coeff(e) == (a * b).coeff(e));
  }
}

TEST_CASE("inverse: certified window and true reciprocal") {
  Series x = Series::from_poly(Poly::parse(3, "T+2"), -5);
  Series inv = x.inverse();
  CHECK(inv.top() == -1);
  CHECK(inv.prec() == -7);  // floor drops by twice the leading exponent
  for (int64_t e = -1; e >= -7; --e) CHECK(inv.coeff(e).v == 1);  // 1/(T-1)
  Series prod = x * inv;
  CHECK(prod.coeff(0).v == 1);
  for (int64_t e = prod.top(); e >= prod.prec(); --e)
    if (e != 0) CHECK(prod.coeff(e).v == 0);

  CHECK_THROWS_AS(Series::zero_at(3, -4).inverse(), Error);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 20; ++i) {
    RatFunc f(random_poly(5, 1 + rng() % 4, rng), random_poly(5, rng() % 3, rng));
    Series s = Series::from_ratfunc(f, -30);
    CHECK(Series::agree(s.inverse(), Series::from_ratfunc(f.inverse(), -30)));
  }
}

TEST_CASE("frobenius power dilates exponents and dilates the floor") {
  Series x = Series::from_poly(Poly::parse(3, "T+1"), -3);
  Series y = x.frobenius_pow(3);
  CHECK(y.top() == 3);
  CHECK(y.prec() == 3 * (-3 - 1) + 1);  // unknown tail cubes too
  CHECK(y.coeff(3).v == 1);
  CHECK(y.coeff(0).v == 1);
  for (int64_t e : {2, 1, -1, -2, -3, -4}) CHECK(y.coeff(e).v == 0);

  // Against the exact rational route.
  RatFunc f(Poly::parse(5, "T^2+3"), Poly::parse(5, "T+1"));
  Series s = Series::from_ratfunc(f, -10).frobenius_pow(5);
  Series direct = Series::from_ratfunc(f.frobenius_pow(5), -40);
  CHECK(Series::agree(s, direct));
}

TEST_CASE("shift, truncate, polynomial part") {
  Series x = Series::from_ratfunc(RatFunc(Poly::parse(3, "T^3+T+1"), Poly::parse(3, "T^2+1")), -9);
  Series sh = x.shift(4);
  CHECK(sh.top() == x.top() + 4);
  CHECK(sh.prec() == x.prec() + 4);
  CHECK(sh.coeff(5).v == x.coeff(1).v);
  CHECK(x.shift(4).shift(-4) == x);

  Series tr = x.truncate_to(-2);
  CHECK(tr.prec() == -2);
  CHECK_THROWS_AS(x.truncate_to(-30), Error);  // cannot gain precision

  CHECK(x.polynomial_part() == Poly::variable(3));
  CHECK_THROWS_AS(Series::from_window(3, 3, 1, {1, 0, 1}).polynomial_part(), Error);
}

TEST_CASE("agreement on common windows; embedding is additive") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 25; ++i) {
    RatFunc f(random_poly(3, rng() % 5, rng), random_poly(3, rng() % 4, rng));
    RatFunc g(random_poly(3, rng() % 5, rng), random_poly(3, rng() % 4, rng));
    Series sf = Series::from_ratfunc(f, -20);
    Series sg = Series::from_ratfunc(g, -12);
    CHECK(Series::agree(sf + sg, Series::from_ratfunc(f + g, -12)));
    CHECK(Series::agree(sf * sg, Series::from_ratfunc(f * g, -8)));
  }
  // Everything above top is a certified zero, so a window whose top sits
  // below the other's nonzero terms conflicts with it.
  Series hi = Series::from_window(3, 5, 3, {1, 0, 2});
  Series lo = Series::from_window(3, -2, -4, {1, 1, 1});
  CHECK_FALSE(Series::agree(hi, lo));
  // A zero-so-far window only claims zeros, which the other side matches
  // above its own top.
  CHECK(Series::agree(Series::zero_at(3, 5), lo));
  CHECK_FALSE(Series::agree(Series::zero_at(3, -3), lo));
}

TEST_CASE("text form round trip") {
  Series x = Series::from_window(3, 1, -5, {2, 0, 0, 1, 0, 0, 0});
  CHECK(x.str() == "2*T^1+1*T^-2+O(T^-5)");
  CHECK(Series::parse(3, x.str()) == x);

  Series y = Series::parse(3, "2*T^1+0*T^0+1*T^-2+O(T^-5)");
  CHECK(y == x);  // redundant zero terms are accepted

  Series z = Series::parse(3, "O(T^-3)");
  CHECK(z.zero_so_far());
  CHECK(z.prec() == -3);
  CHECK(z.str() == "O(T^-3)");

  CHECK_THROWS_AS(Series::parse(3, "T^2+1"), Error);      // missing O-term
  CHECK_THROWS_AS(Series::parse(3, "2*T^1+O(T^3)x"), Error);

  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    RatFunc f(random_poly(5, rng() % 5, rng), random_poly(5, rng() % 4, rng));
    Series s = Series::from_ratfunc(f, -(1 + static_cast<int64_t>(rng() % 20)));
    CHECK(Series::parse(5, s.str()) == s);
  }
}
