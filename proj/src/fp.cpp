#include "hqcf/fp.hpp"

#include <limits>

namespace hqcf {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t acc = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return acc;
}

void check_same_modulus(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw Error("mixed moduli in field arithmetic");
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("exponent overflow in addition");
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("exponent overflow in multiplication");
  return out;
}

Session Session::make(uint64_t p, uint32_t t) {
  if (p > kMaxPrime) throw ConfigError("characteristic too large (must fit in 31 bits)");
  if (!is_prime(p)) throw ConfigError("characteristic must be prime");
  if (t == 0) throw ConfigError("t must be at least 1");
  uint64_t r = 1;
  for (uint32_t i = 0; i < t; ++i) {
    if (r > std::numeric_limits<uint64_t>::max() / p) {
      throw ConfigError("p^t does not fit in 64 bits");
    }
    r *= p;
  }
  Session s;
  s.p = static_cast<uint32_t>(p);
  s.t = t;
  s.r = r;
  return s;
}

Fp operator+(Fp a, Fp b) {
  check_same_modulus(a, b);
  uint32_t v = a.v + b.v;
  if (v >= a.p) v -= a.p;
  Fp out;
  out.v = v;
  out.p = a.p;
  return out;
}

Fp operator-(Fp a, Fp b) {
  check_same_modulus(a, b);
  uint32_t v = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  Fp out;
  out.v = v;
  out.p = a.p;
  return out;
}

Fp operator*(Fp a, Fp b) {
  check_same_modulus(a, b);
  Fp out;
  out.v = static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % a.p);
  out.p = a.p;
  return out;
}

Fp operator-(Fp a) {
  Fp out;
  out.v = a.v == 0 ? 0 : a.p - a.v;
  out.p = a.p;
  return out;
}

Fp pow(Fp base, uint64_t e) {
  Fp acc(1, base.p);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fp inverse(Fp a) {
  if (a.v == 0) throw Error("inverse of zero");
  // Extended Euclid on (v, p).
  int64_t r0 = a.v, r1 = a.p;
  int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  Fp out(s0, a.p);
  return out;
}

}  // namespace hqcf
