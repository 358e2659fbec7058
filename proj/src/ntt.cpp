#include "ntt.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "hqcf/error.hpp"
#include "modops.hpp"

namespace hqcf::ntt {

namespace {

// Compile-time modulus so the reduction inside the butterfly compiles to a
// multiply-shift sequence.
template <uint32_t MOD, uint32_t G, int LG2_ORDER>
struct Plan {
  static constexpr size_t kMaxLen = size_t(1) << LG2_ORDER;

  static uint32_t add(uint32_t a, uint32_t b) {
    uint32_t v = a + b;
    return v >= MOD ? v - MOD : v;
  }
  static uint32_t sub(uint32_t a, uint32_t b) {
    uint32_t v = a - b;
    return a >= b ? v : v + MOD;
  }
  static uint32_t mul(uint32_t a, uint32_t b) {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % MOD);
  }
  static uint32_t pw(uint32_t b, uint64_t e) {
    uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }

  // roots(inv)[k] generates the 2^k-th roots of unity.
  static const std::vector<uint32_t>& roots(bool invert) {
    static const std::vector<uint32_t> fwd = make_roots(false);
    static const std::vector<uint32_t> inv = make_roots(true);
    return invert ? inv : fwd;
  }

  static std::vector<uint32_t> make_roots(bool invert) {
    std::vector<uint32_t> out(LG2_ORDER + 1);
    uint32_t g = pw(G, (MOD - 1) >> LG2_ORDER);
    if (invert) g = pw(g, MOD - 2);
    out[LG2_ORDER] = g;
    for (int k = LG2_ORDER - 1; k >= 0; --k) out[k] = mul(out[k + 1], out[k + 1]);
    return out;
  }

  static void transform(std::vector<uint32_t>& a, bool invert) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
      size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    const std::vector<uint32_t>& rt = roots(invert);
    int lg = 0;
    while ((size_t(1) << lg) < n) ++lg;
    for (int k = 1; k <= lg; ++k) {
      const size_t len = size_t(1) << k;
      const uint32_t wlen = rt[k];
      for (size_t i = 0; i < n; i += len) {
        uint32_t w = 1;
        for (size_t j = 0; j < len / 2; ++j) {
          uint32_t u = a[i + j];
          uint32_t v = mul(a[i + j + len / 2], w);
          a[i + j] = add(u, v);
          a[i + j + len / 2] = sub(u, v);
          w = mul(w, wlen);
        }
      }
    }
    if (invert) {
      const uint32_t n_inv = pw(static_cast<uint32_t>(n % MOD), MOD - 2);
      for (uint32_t& x : a) x = mul(x, n_inv);
    }
  }

  // Convolution of a and b; entries are reduced mod MOD here.
  static std::vector<uint32_t> convolve(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
    size_t n = 1;
    while (n < a.size() + b.size() - 1) n <<= 1;
    if (n > kMaxLen) throw Error("transform length exceeds supported order");
    std::vector<uint32_t> fa(n, 0), fb(n, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % MOD;
    for (size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % MOD;
    transform(fa, false);
    transform(fb, false);
    for (size_t i = 0; i < n; ++i) fa[i] = mul(fa[i], fb[i]);
    transform(fa, true);
    fa.resize(a.size() + b.size() - 1);
    return fa;
  }
};

using P0 = Plan<998244353u, 3u, 23>;   // 998244353 = 119 * 2^23 + 1
using P1 = Plan<754974721u, 11u, 24>;  // 754974721 = 45 * 2^24 + 1
using P2 = Plan<167772161u, 3u, 25>;   // 167772161 = 5 * 2^25 + 1

constexpr uint64_t kM0 = 998244353u, kM1 = 754974721u, kM2 = 167772161u;

std::vector<uint32_t> schoolbook(const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b, uint32_t p) {
  const ModCtx m(p);
  std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const uint32_t c = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = m.add(out[i + j], m.mul(c, b[j]));
    }
  }
  return out;
}

}  // namespace

std::vector<uint32_t> convolve_mod(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b, uint32_t p) {
  if (a.empty() || b.empty()) throw Error("convolution of empty window");
  const size_t out_len = a.size() + b.size() - 1;
  size_t need = 1;
  while (need < out_len) need <<= 1;

  // Bound on the true integer convolution coefficients.
  const __uint128_t bound = static_cast<__uint128_t>(std::min(a.size(), b.size())) *
                            (static_cast<uint64_t>(p - 1) * (p - 1));

  if (bound < kM2 && need <= P2::kMaxLen) {
    std::vector<uint32_t> c = P2::convolve(a, b);
    for (uint32_t& x : c) x %= p;
    return c;
  }
  if (bound < static_cast<__uint128_t>(kM1) * kM2 && need <= P1::kMaxLen) {
    std::vector<uint32_t> c1 = P1::convolve(a, b);
    std::vector<uint32_t> c2 = P2::convolve(a, b);
    // Garner: x = c1 + kM1 * ((c2 - c1) * inv(kM1) mod kM2), x < kM1 * kM2.
    const ModCtx m2(kM2);
    const uint32_t inv12 = m2.inv(static_cast<uint32_t>(kM1 % kM2));
    std::vector<uint32_t> out(out_len);
    for (size_t i = 0; i < out_len; ++i) {
      uint32_t d = m2.mul(m2.sub(c2[i], c1[i] % kM2), inv12);
      uint64_t x = c1[i] + kM1 * static_cast<uint64_t>(d);
      out[i] = static_cast<uint32_t>(x % p);
    }
    return out;
  }
  if (bound < static_cast<__uint128_t>(kM0) * kM1 * kM2 && need <= P0::kMaxLen) {
    std::vector<uint32_t> c0 = P0::convolve(a, b);
    std::vector<uint32_t> c1 = P1::convolve(a, b);
    std::vector<uint32_t> c2 = P2::convolve(a, b);
    const ModCtx m1(kM1), m2(kM2);
    const uint32_t inv01 = m1.inv(static_cast<uint32_t>(kM0 % kM1));
    const uint32_t inv012 = m2.inv(m2.mul(static_cast<uint32_t>(kM0 % kM2),
                                          static_cast<uint32_t>(kM1 % kM2)));
    std::vector<uint32_t> out(out_len);
    for (size_t i = 0; i < out_len; ++i) {
      // Garner lift through the three residues.
      uint32_t d1 = m1.mul(m1.sub(c1[i], c0[i] % kM1), inv01);
      uint64_t x01 = c0[i] + kM0 * static_cast<uint64_t>(d1);  // < kM0 * kM1
      uint32_t d2 = m2.mul(m2.sub(c2[i], static_cast<uint32_t>(x01 % kM2)), inv012);
      __uint128_t x = x01 + static_cast<__uint128_t>(kM0) * kM1 * d2;
      out[i] = static_cast<uint32_t>(x % p);
    }
    return out;
  }
  return schoolbook(a, b, p);
}

}  // namespace hqcf::ntt
