#pragma once

#include <cstddef>
#include <cstdint>

namespace hqcf {

// Reduction context for a runtime modulus p < 2^31.
//
// Two regimes:
//  - p < 2^15: products fit in 30 bits, and the quotient estimate
//    (prod * ceil(2^30/p)) >> 30 is off by at most one, fixed with a single
//    conditional add.  The loop bodies built on this vectorize.
//  - general p: 64-bit Barrett with magic = floor(2^64 / p).
struct ModCtx {
  uint32_t p = 0;
  uint32_t small_magic = 0;  // ceil(2^30 / p), valid when small()
  uint64_t big_magic = 0;    // floor(2^64 / p)

  explicit ModCtx(uint32_t prime) : p(prime) {
    if (small()) small_magic = static_cast<uint32_t>((0x40000000ull + p - 1) / p);
    big_magic = static_cast<uint64_t>(~0ull) / p;  // floor((2^64 - 1)/p) == floor(2^64/p) for p not a power of 2
  }

  bool small() const { return p < (1u << 15); }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t v = a + b;
    return v >= p ? v - p : v;
  }

  uint32_t sub(uint32_t a, uint32_t b) const {
    uint32_t v = a - b;
    return a >= b ? v : v + p;
  }

  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (small()) {
      uint32_t prod = a * b;  // < 2^30
      uint32_t q = static_cast<uint32_t>((static_cast<uint64_t>(prod) * small_magic) >> 30);
      int32_t r = static_cast<int32_t>(prod) - static_cast<int32_t>(q * p);
      r += static_cast<int32_t>(p) & (r >> 31);
      return static_cast<uint32_t>(r);
    }
    uint64_t prod = static_cast<uint64_t>(a) * b;
    uint64_t q = static_cast<uint64_t>((static_cast<__uint128_t>(prod) * big_magic) >> 64);
    uint64_t r = prod - q * p;
    while (r >= p) r -= p;
    return static_cast<uint32_t>(r);
  }

  uint32_t pow(uint32_t base, uint64_t e) const {
    uint32_t acc = 1 % p;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  uint32_t inv(uint32_t a) const {
    int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
      int64_t q = r0 / r1;
      int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
    }
    s0 %= p;
    if (s0 < 0) s0 += p;
    return static_cast<uint32_t>(s0);
  }
};

// r[i] = r[i] - q * d[i] mod p for i in [0, n): the row update of long
// division.  This is the single hot loop of the big expansions, so it is
// written to auto-vectorize in both regimes.
inline void submul_row(uint32_t* r, const uint32_t* d, size_t n, uint32_t q, const ModCtx& m) {
  if (q == 0) return;
  if (m.small()) {
    const uint32_t p = m.p;
    const uint64_t magic = m.small_magic;
    for (size_t i = 0; i < n; ++i) {
      uint32_t prod = q * d[i];
      uint32_t qq = static_cast<uint32_t>((prod * magic) >> 30);
      int32_t v = static_cast<int32_t>(prod) - static_cast<int32_t>(qq * p);
      v += static_cast<int32_t>(p) & (v >> 31);
      uint32_t u = r[i] - static_cast<uint32_t>(v);
      r[i] = r[i] >= static_cast<uint32_t>(v) ? u : u + p;
    }
  } else {
    for (size_t i = 0; i < n; ++i) {
      r[i] = m.sub(r[i], m.mul(q, d[i]));
    }
  }
}

}  // namespace hqcf
