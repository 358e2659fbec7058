#include "hqcf/solvers.hpp"

#include <algorithm>
#include <string>

#include "hqcf/contfrac.hpp"
#include "hqcf/error.hpp"
#include "hqcf/ratfunc.hpp"
#include "hqcf/words.hpp"

namespace hqcf {

namespace {

void require_r(const Session& sess) {
  if (sess.r <= 2) throw ConfigError("solvers require r > 2");
}

void require_prec(int64_t target_prec) {
  if (target_prec > -1) throw ConfigError("target precision must be negative");
}

int64_t iteration_cap(const Session& sess, int64_t target_prec) {
  return 4 + (-target_prec) / (static_cast<int64_t>(sess.r) - 2) + 1;
}

Series clip(const Series& s, int64_t prec) {
  return s.prec() >= prec ? s : s.truncate_to(prec);
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

Poly t_poly(uint32_t p) { return Poly::variable(p); }

Poly t2_poly(uint32_t p) { return Poly::monomial(p, 1, 2); }

void validate_seed(const Word& seed) {
  if (seed.empty()) throw ConfigError("seed word must be nonempty");
  for (size_t i = 0; i < seed.size(); ++i) {
    const Poly& a = seed[i];
    if (a.is_zero() || a.degree() < 1)
      throw ConfigError("seed letters must have degree >= 1");
    if (i % 2 == 0 && !a.divisible_by_t(1))
      throw ConfigError("odd-indexed seed letters must be divisible by T");
  }
}

// Runs a contraction x -> step(x) until the difference vanishes on the
// whole target window.  The iterate may start at a shallow precision and
// deepen as it converges (each step multiplies both the certified depth
// and the error exponent by about r), so the cost concentrates in the
// last iterations; convergence is only declared once the difference is
// certified zero all the way down to target_prec.  Visible difference
// degrees must strictly decrease.
template <typename StepFn>
Series fixed_point(const Session& sess, Series x, int64_t target_prec, StepFn step) {
  const int64_t cap = iteration_cap(sess, target_prec);
  int64_t prev_deg = 0;
  bool have_prev = false;
  for (int64_t iter = 0;; ++iter) {
    if (iter > cap) throw Error("iteration cap exceeded without convergence");
    Series next = step(x);
    Series diff = next - x;
    if (diff.zero_so_far()) {
      if (diff.prec() <= target_prec) return next;
    } else {
      const int64_t dd = diff.degree();
      if (have_prev && dd >= prev_deg)
        throw Error("non-contraction detected (difference degree not strictly decreasing)");
      prev_deg = dd;
      have_prev = true;
    }
    x = std::move(next);
  }
}

// Peels leading partial quotients off a series: returns the complete
// quotient that remains after the given letters.
Series peel(const Series& z, const Word& letters) {
  Series cur = z;
  for (size_t i = 0; i < letters.size(); ++i) {
    Series y = cur - letters[i];
    if (y.zero_so_far()) throw Error("series is rational at this precision; cannot peel");
    cur = y.inverse();
  }
  return cur;
}

}  // namespace

Series mahler_theta(const Session& sess, int64_t target_prec) {
  require_r(sess);
  require_prec(target_prec);
  const uint64_t limit = static_cast<uint64_t>(-target_prec);
  std::vector<uint32_t> c(limit, 0);  // window [target_prec, -1], top first
  uint64_t e = 1;
  while (e <= limit) {
    c[e - 1] = 1;
    if (e > limit / sess.r) break;
    e *= sess.r;
  }
  return Series::from_window(sess.p, -1, target_prec, std::move(c));
}

Series solve_bs(const Session& sess, int64_t target_prec) {
  require_r(sess);
  require_prec(target_prec);
  const uint32_t p = sess.p;
  const int64_t r = static_cast<int64_t>(sess.r);
  const Poly t = t_poly(p);
  const Poly one = Poly::constant(p, 1);
  // Coefficients of the iterate below e_min land under the target floor
  // after the r-fold dilation, so the step never needs them.
  const int64_t e_min = floor_div(target_prec - 1, r) + 1;
  Series x0 = Series::from_poly(one, std::max(target_prec, -4 * r));
  return fixed_point(sess, std::move(x0), target_prec, [&](const Series& x) {
    Series den = clip(x, e_min).frobenius_pow(sess.r) * t + one;
    return clip(den.inverse() * t, target_prec);
  });
}

Series solve_general(const Session& sess, const Poly& P, int64_t target_prec) {
  require_r(sess);
  require_prec(target_prec);
  if (P.p() != sess.p) throw ConfigError("P has the wrong characteristic");
  if (P.is_zero() || !P.divisible_by_t(1))
    throw ConfigError("P must be nonzero and divisible by T");
  const uint32_t p = sess.p;
  const int64_t r = static_cast<int64_t>(sess.r);
  const Poly t2 = t2_poly(p);
  const Poly t_plus_1 = Poly::from_coeffs(p, {1, 1});
  const Poly t_minus_1 = Poly::from_coeffs(p, {-1, 1});
  // C = (P*T^2 + T - 1)/T^2, the rational head of the fixed-point map.
  const Poly c_num = P.shift_up(2) + t_minus_1;
  const Series c_series = Series::from_ratfunc(RatFunc(c_num, t2), target_prec);
  // The denominator has degree d_den; inverting it gains 2*d_den of
  // absolute depth, so the iterate below e_min cannot reach the target
  // window and the dilation input can be truncated there.
  const int64_t d_den = r * P.degree() + 2;
  const int64_t e_min =
      std::min<int64_t>(floor_div(target_prec + 2 * d_den - 3, r) + 1, 0);
  Series x0 = clip(c_series, std::max(target_prec, -4 * (d_den + 1)));

  Series z = fixed_point(sess, std::move(x0), target_prec, [&](const Series& x) {
    Series den = clip(x, e_min).frobenius_pow(sess.r) * t2;
    return clip(c_series + den.inverse(), target_prec);
  });

  // The expansion must start (P, T+1, T-1) ...
  Word head;
  head.push_back(P);
  head.push_back(t_plus_1);
  head.push_back(t_minus_1);
  auto [got, cnt] = cf_expand(z, 3);
  if (cnt < 3 || !(got == head))
    throw Error("solution does not start with the quotients (P, T+1, T-1)");
  // ... and satisfy z^r = T^2 * z_4 + (T + 1) against the peeled fourth
  // complete quotient.
  Series z4 = peel(z, head);
  Series rel = z.frobenius_pow(sess.r) - z4.shift(2) - t_plus_1;
  if (!rel.zero_so_far())
    throw Error("solution violates z^r = T^2*z_4 + (T+1)");
  return z;
}

Series solve_mahlergen(const Session& sess, const Word& seed, int64_t target_prec) {
  require_r(sess);
  require_prec(target_prec);
  validate_seed(seed);
  if (seed[0].p() != sess.p) throw ConfigError("seed has the wrong characteristic");
  const Poly t = t_poly(sess.p);
  Series z0 = Series::from_ratfunc(fold(seed), target_prec);
  Series z = fixed_point(sess, std::move(z0), target_prec, [&](const Series& x) {
    Series tail = clip((-(x.frobenius_pow(sess.r) + t)).shift(-2), target_prec);
    return fold(seed, tail).truncate_to(target_prec);
  });
  // The expansion must begin with the seed and continue with its dilation
  // blocks; compare as much of that prefix as the window certifies.
  auto [w, count] = cf_expand(z, seed.size() + 4);
  std::vector<Poly> expect = MahlergenStream(sess, seed).take(count);
  for (size_t i = 0; i < count; ++i) {
    if (!(w[i] == expect[i])) throw MismatchError("expansion does not extend the seed blocks");
  }
  return z;
}

Series residual_mahler(const Session& sess, const Series& z) {
  require_r(sess);
  const Poly t = t_poly(sess.p);
  return z.frobenius_pow(sess.r) * t - z * t + Poly::constant(sess.p, 1);
}

Series residual_bs(const Session& sess, const Series& x) {
  require_r(sess);
  const Poly t = t_poly(sess.p);
  Series xr1 = x.frobenius_pow(sess.r) * x;
  return xr1 * t + x - t;
}

Series residual_general(const Session& sess, const Poly& P, const Series& z) {
  require_r(sess);
  const uint32_t p = sess.p;
  Series zr = z.frobenius_pow(sess.r);
  Series lhs = (zr * z).shift(2);
  const Poly rhs_poly = P.shift_up(2) + Poly::from_coeffs(p, {-1, 1});
  return lhs - zr * rhs_poly - Poly::constant(p, 1);
}

Series residual_mahlergen(const Session& sess, const Word& seed, const Series& z) {
  require_r(sess);
  validate_seed(seed);
  const Poly t = t_poly(sess.p);
  Series tail = (-(z.frobenius_pow(sess.r) + t)).shift(-2);
  return z - fold(seed, tail);
}

CertifiedExpansion expand_family(const Session& sess, Family family,
                                 const std::optional<Poly>& P, const Word& seed, size_t n,
                                 int64_t max_window) {
  require_r(sess);
  if (n == 0) return {Word{}, 0};
  if (family == Family::general_p && !P)
    throw ConfigError("the general family needs a polynomial P");
  if (family == Family::mahlergen && seed.empty())
    throw ConfigError("the self-referential family needs a seed word");
  int64_t window = 64 * static_cast<int64_t>(n);
  for (;;) {
    if (window > max_window)
      throw PrecisionError("precision cap reached before certifying " + std::to_string(n) +
                           " quotients");
    const int64_t prec = -window;
    Series z = [&] {
      switch (family) {
        case Family::mahler: return mahler_theta(sess, prec);
        case Family::baum_sweet: return solve_bs(sess, prec);
        case Family::general_p: return solve_general(sess, *P, prec);
        case Family::mahlergen: return solve_mahlergen(sess, seed, prec);
      }
      throw ConfigError("unknown family");
    }();
    auto [word, cnt] = cf_expand(z, n);
    if (cnt >= n) return {std::move(word), prec};
    window *= 2;
  }
}

}  // namespace hqcf
