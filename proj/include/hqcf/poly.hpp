#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hqcf/fp.hpp"

namespace hqcf {

// Dense univariate polynomial over F_p in the variable T.
//
// Coefficients are stored low degree first with no trailing zeros, so the
// zero polynomial has an empty vector and degree() is undefined (throws).
// Text form: terms in decreasing exponent joined by '+', each term
// "c*T^e" with 1 <= c < p, abbreviated "c*T" for e = 1, "c" for e = 0,
// and "T^e"/"T" when c = 1.  The zero polynomial prints "0".
class Poly {
 public:
  explicit Poly(uint32_t p) : p_(p) {}

  static Poly zero(uint32_t p) { return Poly(p); }
  static Poly constant(uint32_t p, int64_t c);
  static Poly monomial(uint32_t p, int64_t c, int64_t e);
  // T itself.
  static Poly variable(uint32_t p) { return monomial(p, 1, 1); }
  // Coefficients listed low degree first; trailing zeros are stripped.
  static Poly from_coeffs(uint32_t p, const std::vector<int64_t>& low_to_high);

  uint32_t p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of a nonzero polynomial; throws Error on zero.
  int64_t degree() const;
  // Number of nonzero coefficients.
  size_t weight() const;
  Fp coeff(int64_t e) const;
  Fp lead() const;
  // Constant term, i.e. the residue at T = 0.
  Fp at_zero() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<uint32_t>& coeffs() const { return c_; }

  Poly& negate();
  Poly times_const(Fp c) const;
  Poly monic() const;  // divide by leading coefficient; throws on zero
  // Multiply by T^e (e >= 0).
  Poly shift_up(int64_t e) const;

  // x -> x^r for r a power of the characteristic: a pure exponent dilation,
  // since c^r = c for c in F_p.
  Poly frobenius_pow(uint64_t r) const;

  // Exact division by T^e; throws Error if any of the e low coefficients
  // is nonzero.
  Poly div_exact_pow_t(int64_t e) const;
  bool divisible_by_t(int64_t e) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  // Quotient and remainder with deg rem < deg b; throws Error when b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd.
  static Poly gcd(Poly a, Poly b);

  std::string str() const;
  static Poly parse(uint32_t p, const std::string& text);

 private:
  friend class Series;
  void trim();

  uint32_t p_;
  std::vector<uint32_t> c_;  // c_[i] is the coefficient of T^i
};

// Product of two coefficient windows (low first, arbitrary trailing zeros
// allowed), returned untrimmed with size a.size()+b.size()-1.  Dispatches
// between schoolbook and the transform-based path.  Exposed for the series
// layer, which works on raw windows.
std::vector<uint32_t> mul_windows(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b, uint32_t p);

// Inverse of a unit power series window mod s^n: in[0] != 0, out has size n.
// Newton iteration on top of mul_windows.
std::vector<uint32_t> invert_window(const std::vector<uint32_t>& in, size_t n,
                                    uint32_t p);

}  // namespace hqcf
