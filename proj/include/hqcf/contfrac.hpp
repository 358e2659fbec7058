#pragma once

#include <cstddef>
#include <utility>

#include "hqcf/cfword.hpp"
#include "hqcf/laurent.hpp"
#include "hqcf/ratfunc.hpp"

namespace hqcf {

// Continued-fraction expansion of a truncated series.  Emits at most max_n
// partial quotients a_0, a_1, ... and stops as soon as the next quotient
// ceases to be certified by the window:
//   - a_0 requires prec <= 0;
//   - a quotient is produced only when the remainder x_i - a_i has its
//     leading exponent strictly above the current precision floor, and the
//     inverted precision remains <= 0.
// Every returned letter is exact; returns the word and its length.
std::pair<Word, size_t> cf_expand(const Series& x, size_t max_n);

// The unique rational pair (f, g) such that, identically in x,
//   (value of w) + 1/x = [a_1, .., a_n, f*x + g],
// i.e. perturbing the value of the word by 1/x is absorbed by appending
// the complete quotient f*x + g.  Derived from the convergents and the
// determinant identity; |w| >= 1.
std::pair<RatFunc, RatFunc> tail_transform(const Word& w);

// Value of the word with a series tail as the next complete quotient:
// (p_n*tail + p_{n-1}) / (q_n*tail + q_{n-1}).
Series fold(const Word& w, const Series& tail);

namespace detail {
// Reference path: repeated polynomial-part/invert steps on Series values.
std::pair<Word, size_t> cf_expand_series(const Series& x, size_t max_n);
// Fast path: polynomial pair Euclid on (window numerator, T^-prec) with the
// same certification rule; byte-identical output by construction.
std::pair<Word, size_t> cf_expand_euclid(const Series& x, size_t max_n);
}  // namespace detail

}  // namespace hqcf
