#pragma once

#include <utility>
#include <vector>

#include "hqcf/cfword.hpp"
#include "hqcf/poly.hpp"

namespace hqcf {

// Rational function N/D over F_p, kept in canonical form: gcd(N, D) = 1 and
// D monic.  D is never zero.
class RatFunc {
 public:
  explicit RatFunc(uint32_t p)
      : num_(Poly::zero(p)), den_(Poly::constant(p, 1)) {}
  RatFunc(Poly num, Poly den);
  static RatFunc from_poly(Poly q);

  uint32_t p() const { return num_.p(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  // deg num - deg den; throws on zero.
  int64_t degree() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc frobenius_pow(uint64_t r) const;

  // Polynomial part [N/D] and the proper remainder N/D - [N/D].
  std::pair<Poly, RatFunc> split() const;

 private:
  Poly num_, den_;
};

RatFunc operator+(const RatFunc& a, const Poly& b);
RatFunc operator*(const Poly& a, const RatFunc& b);

// The finite continued fraction of f: Euclid on (num, den).  Every partial
// quotient after the first has degree >= 1; the word is normalized so that
// no intermediate quotient is a constant (the standard merge of a trailing
// or embedded constant quotient into its neighbours cannot occur for the
// Euclid construction, but the invariant is checked).  fold of the result
// returns exactly f.
Word continued_fraction(const RatFunc& f);

// Convergents (p_i, q_i) of a word, 0-based: p_{-1}=1, q_{-1}=0, p_0=a_0,
// q_0=1, and p_i = a_i p_{i-1} + p_{i-2}, likewise for q.  Entry i of the
// result is (p_i, q_i); the determinant identity
// p_i q_{i-1} - p_{i-1} q_i = (-1)^(i-1) holds throughout.
std::vector<std::pair<Poly, Poly>> convergents(const Word& w);

// Value of the finite continued fraction [a_0; a_1, ..., a_{n-1}].
RatFunc fold(const Word& w);
// Value of [a_0; a_1, ..., a_{n-1}, tail] with tail as the next complete
// quotient: (p_{n-1} tail + p_{n-2}) / (q_{n-1} tail + q_{n-2}).  The tail
// must not equal -q_{n-2}/q_{n-1}.
RatFunc fold(const Word& w, const RatFunc& tail);

}  // namespace hqcf
