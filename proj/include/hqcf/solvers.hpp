#pragma once

#include <cstdint>
#include <optional>

#include "hqcf/cfword.hpp"
#include "hqcf/fp.hpp"
#include "hqcf/laurent.hpp"
#include "hqcf/poly.hpp"

namespace hqcf {

// The four concrete series families.  All require r > 2.
enum class Family { mahler, baum_sweet, general_p, mahlergen };

// theta = sum of T^(-r^k) for k >= 0, written down directly (coefficient 1
// at the exponents -1, -r, -r^2, ... inside the window).
Series mahler_theta(const Session& sess, int64_t target_prec);

// The unique root of T*X^(r+1) + X - T = 0 with X(infinity) = 1, computed
// as the fixed point of X -> T/(T*X^r + 1) from X = 1; the error exponent
// multiplies by r per iteration.  Errors if the successive differences
// ever fail to contract.
Series solve_bs(const Session& sess, int64_t target_prec);

// The root of T^2*z^(r+1) = (P*T^2 + T - 1)*z^r + 1 with leading part P,
// for P nonzero and divisible by T, via z -> (P*T^2+T-1)/T^2 + 1/(T^2*z^r).
// Asserts that the expansion starts (P, T+1, T-1) and that the fourth
// complete quotient satisfies z^r = T^2*z_4 + (T+1).
Series solve_general(const Session& sess, const Poly& P, int64_t target_prec);

// The series whose expansion starts with the seed letters a_1..a_l (odd
// indices divisible by T) and continues self-referentially: fixed point of
// z -> fold(seed, -(z^r + T)/T^2).
Series solve_mahlergen(const Session& sess, const Word& seed, int64_t target_prec);

// Residuals of the defining equations; a correct solution is
// indistinguishable from zero, with the certified floor at most
// target_prec plus a family-dependent slack (see the definitions for the
// exact precision bookkeeping):
//   mahler:    T*z^r - T*z + 1                     (slack 1)
//   baum_sweet: T*x^(r+1) + x - T                  (slack 1)
//   general_p: T^2*z^(r+1) - (P*T^2+T-1)*z^r - 1   (slack r*deg(P) + 2)
//   mahlergen: z - fold(seed, -(z^r + T)/T^2)      (slack 0)
Series residual_mahler(const Session& sess, const Series& z);
Series residual_bs(const Session& sess, const Series& x);
Series residual_general(const Session& sess, const Poly& P, const Series& z);
Series residual_mahlergen(const Session& sess, const Word& seed, const Series& z);

struct CertifiedExpansion {
  Word word;
  int64_t used_prec = 0;
};

// Expands a family member to n certified partial quotients, solving at
// window -64*n and doubling until cf_expand certifies n letters.  Throws
// PrecisionError when the window magnitude would exceed max_window.
CertifiedExpansion expand_family(const Session& sess, Family family,
                                 const std::optional<Poly>& P, const Word& seed, size_t n,
                                 int64_t max_window = int64_t(1) << 25);

}  // namespace hqcf
