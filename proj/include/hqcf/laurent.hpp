#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hqcf/poly.hpp"
#include "hqcf/ratfunc.hpp"

namespace hqcf {

// Truncated formal Laurent series in 1/T over F_p with certified precision.
//
// The window [prec, top] of exponents carries exactly known coefficients;
// everything above top is known to be zero, everything below prec is
// unknown.  Invariants: prec <= top + 1; the coefficient at top is nonzero
// unless the window is all zero, in which case the canonical encoding is
// top == prec - 1 with an empty window ("zero so far": the value vanishes
// on the whole certified range but may have an unknown tail).
//
// Every operation returns the tightest sound precision:
//   add/sub:   max of the two precs
//   mul:       max(prec_x + top_y, prec_y + top_x)
//   inverse:   prec - 2*deg
//   frobenius: r*(prec - 1) + 1 (exact dilation bound)
// so a reported coefficient is never below its certified precision.
class Series {
 public:
  static Series zero_at(uint32_t p, int64_t prec);
  // Exact embedding of a polynomial (or rational function) with the given
  // certified precision.
  static Series from_poly(const Poly& q, int64_t prec);
  static Series from_ratfunc(const RatFunc& f, int64_t prec);
  // Builds a series from a raw window, top first: coeffs[i] is the
  // coefficient of T^(top - i) and coeffs must span exactly [prec, top].
  static Series from_window(uint32_t p, int64_t top, int64_t prec, std::vector<uint32_t> coeffs);

  uint32_t p() const { return p_; }
  int64_t top() const { return top_; }
  int64_t prec() const { return prec_; }
  bool zero_so_far() const { return c_.empty(); }
  // Leading exponent (the valuation degree); throws Error when zero-so-far.
  int64_t degree() const;

  // Coefficient at exponent e: exact for e >= prec (zero above top), throws
  // Error below the certified precision.
  Fp coeff(int64_t e) const;

  // Forgets coefficients below new_prec (new_prec >= prec).
  Series truncate_to(int64_t new_prec) const;

  // Multiplication by T^e: a pure exponent shift (exact).
  Series shift(int64_t e) const;

  // Sum of terms with exponent >= 0; requires prec <= 0.
  Poly polynomial_part() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator+(const Series& a, const Poly& b);
  friend Series operator-(const Series& a, const Poly& b);
  friend Series operator*(const Series& a, const Poly& b);

  // Multiplicative inverse; throws Error when the series is
  // indistinguishable from zero at the current precision.
  Series inverse() const;
  // x -> x^r for r a power of the characteristic (exponent dilation).
  Series frobenius_pow(uint64_t r) const;

  // Representation equality (same p, top, prec, window).
  friend bool operator==(const Series& a, const Series& b) {
    return a.p_ == b.p_ && a.top_ == b.top_ && a.prec_ == b.prec_ && a.c_ == b.c_;
  }

  // The certified windows coincide on their common exponent range.
  static bool agree(const Series& a, const Series& b);

  // Text form "2*T^1+1*T^-2+O(T^-5)": nonzero window terms in decreasing
  // exponent, always with an explicit exponent, then the O-term carrying
  // prec.  parse accepts redundant zero terms.
  std::string str() const;
  static Series parse(uint32_t p, const std::string& text);

  // Raw window, top first: window()[i] is the coefficient of T^(top - i).
  const std::vector<uint32_t>& window() const { return c_; }

 private:
  Series(uint32_t p, int64_t top, int64_t prec, std::vector<uint32_t> c)
      : p_(p), top_(top), prec_(prec), c_(std::move(c)) {
    normalize();
  }
  void normalize();

  uint32_t p_;
  int64_t top_;
  int64_t prec_;
  std::vector<uint32_t> c_;
};

}  // namespace hqcf
