#pragma once

#include <cstdint>
#include <vector>

namespace hqcf::ntt {

// Convolution of uint32 sequences whose entries are reduced mod p, result
// reduced mod p.  Internally uses radix-2 transforms over up to three
// fixed word-size primes with CRT reconstruction; the number of primes is
// chosen from the bound min(|a|,|b|) * (p-1)^2 on true integer convolution
// coefficients.  Falls back to schoolbook when even three primes cannot
// certify the bound (p within a few bits of 2^31 at huge lengths).
std::vector<uint32_t> convolve_mod(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b, uint32_t p);

}  // namespace hqcf::ntt
