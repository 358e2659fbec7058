#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hqcf {

// One parsed monomial c * T^e.  The coefficient is not yet reduced mod p.
struct TextTerm {
  int64_t c = 0;
  int64_t e = 0;
};

// Parses "c*T^e" sums such as "2*T^3+1*T+2" or "T^-2+1" (negative exponents
// only when allowed).  Whitespace is ignored; '-' introduces a negated term.
// Throws ConfigError on malformed input.
std::vector<TextTerm> parse_terms(const std::string& text,
                                  bool allow_negative_exponent);

}  // namespace hqcf
