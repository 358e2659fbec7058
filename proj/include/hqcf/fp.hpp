#pragma once

#include <cstdint>
#include <string>

#include "hqcf/error.hpp"

namespace hqcf {

// Largest admissible characteristic.  Keeping p below 2^31 lets every
// coefficient live in a uint32_t and every product of two residues fit in a
// uint64_t without intermediate reduction.
inline constexpr uint32_t kMaxPrime = 0x7fffffffu;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

// Overflow-checked int64 helpers for exponent arithmetic.  Exponents of
// monomials grow like r^k in this domain, so unchecked products are a real
// hazard, not a theoretical one.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// Validated parameter pack for one characteristic: p prime, r = p^t.
// Everything downstream takes a Session rather than re-validating p and t.
struct Session {
  uint32_t p = 0;
  uint32_t t = 0;
  uint64_t r = 0;

  // Throws ConfigError unless p is prime, p <= kMaxPrime, t >= 1 and p^t
  // fits in uint64.
  static Session make(uint64_t p, uint32_t t);
};

// A residue mod p.  The modulus is carried by value so residues from
// different sessions can coexist; mixed-modulus operations throw.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;

  Fp() = default;
  Fp(int64_t value, uint32_t prime) : p(prime) {
    int64_t m = value % static_cast<int64_t>(prime);
    if (m < 0) m += prime;
    v = static_cast<uint32_t>(m);
  }

  bool is_zero() const { return v == 0; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p == b.p && a.v == b.v;
  }
};

Fp operator+(Fp a, Fp b);
Fp operator-(Fp a, Fp b);
Fp operator*(Fp a, Fp b);
Fp operator-(Fp a);

// Multiplicative inverse; throws Error on zero.
Fp inverse(Fp a);
Fp pow(Fp base, uint64_t e);

}  // namespace hqcf
