#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hqcf/cfword.hpp"
#include "hqcf/fp.hpp"
#include "hqcf/poly.hpp"

namespace hqcf {

// Exponent sequences behind the word families:
//   lambda: e_1 = r,     e_{k+1} = r*e_k - 2
//   omega:  e_1 = r - 2, e_{k+1} = r*e_k - 2
// All values must stay positive (true for r > 2), and the arithmetic is
// overflow-checked.
enum class ExpKind { lambda, omega };
int64_t exp_value(ExpKind kind, const Session& s, uint32_t k);

// The three closed word families and the seeded variant.  All require
// r > 2 and return words whose letters all have degree >= 1.
//
//   gamma(1)       = (-T, T^r, T), |gamma(k)| = 2^(k+1) - 1
//   lambda_word(1) = (T+1, T-1), lambda_word(2) = (T, -T^r+1, -T),
//   lambda_word(k) = lambda_word(k-2), -T^lambda_(k-1), gamma(k-2)
//   omega(1)       = (-T^(r-2))
//   omega(k)       = omega(k-1), lambda_word(k-1), -T^omega_k,
//                    reverse_neg(lambda_word(k-1)), reverse_neg(omega(k-1))
//   omega_p(P, 1)  = (P) for P nonzero and divisible by T; deeper levels
//                    replace the middle letter by T^omega_(k-1) * (P/T)^(r^(k-1))
//                    and mirror the P-variant recursively.
Word gamma(const Session& s, uint32_t k);
Word lambda_word(const Session& s, uint32_t k);
Word omega(const Session& s, uint32_t k);
Word omega_p(const Session& s, const Poly& P, uint32_t k);

// Drops i letters from the front and j from the back; i + j <= |w|.
Word drop_take(const Word& w, size_t i, size_t j);

// Lazy letters of the infinite limit word: deepening from level k to k+1
// asserts that the level-k word stays a prefix (and never rewrites letters
// already yielded).  Without a seed this is the plain family; with a seed
// P it is the seeded variant.
class OmegaStream {
 public:
  explicit OmegaStream(const Session& s);
  OmegaStream(const Session& s, const Poly& P);

  Poly next();
  std::vector<Poly> take(size_t n);

 private:
  void ensure(size_t n);
  Session s_;
  std::optional<Poly> seed_;
  uint32_t level_;
  Word word_;
  size_t emitted_ = 0;
};

// Self-referential quotient stream: starting from a seed (a_1..a_l) whose
// odd-indexed letters are divisible by T, appends blocks of four letters
//   -a_(2k+1)^r / T^2,  -T,  a_(2k+2)^r,  T        for k = 0, 1, ...
// re-reading its own earlier letters.  Divisibility is re-checked at every
// block (it can fail for ill-chosen seeds, e.g. some even-length ones).
class MahlergenStream {
 public:
  MahlergenStream(const Session& s, const Word& seed);

  Poly next();
  std::vector<Poly> take(size_t n);

 private:
  void ensure(size_t n);
  Session s_;
  std::vector<Poly> seq_;
  size_t blocks_ = 0;
  size_t emitted_ = 0;
};

}  // namespace hqcf
