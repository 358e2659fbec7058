#pragma once

#include <string>
#include <vector>

#include "hqcf/poly.hpp"

namespace hqcf {

// A finite word of partial quotients.  Position i of the word is partial
// quotient a_{i} with 0-based indexing: a_0 is the polynomial part (it may
// be any polynomial, including 0), and every later letter must have
// degree >= 1 for the word to describe an actual expansion.  Helpers here
// do not enforce that; the generators and the expansion routines do.
struct Word {
  std::vector<Poly> a;

  Word() = default;
  explicit Word(std::vector<Poly> letters) : a(std::move(letters)) {}

  size_t size() const { return a.size(); }
  bool empty() const { return a.empty(); }
  const Poly& operator[](size_t i) const { return a[i]; }
  Poly& operator[](size_t i) { return a[i]; }

  void push_back(Poly q) { a.push_back(std::move(q)); }
  Word& append(const Word& w) {
    a.insert(a.end(), w.a.begin(), w.a.end());
    return *this;
  }

  // Letters i..j-1 (half-open), clamped to the word.
  Word slice(size_t i, size_t j) const;

  friend bool operator==(const Word& x, const Word& y) { return x.a == y.a; }

  // Comma-separated letter list, e.g. "T, 2*T^3+1, 2*T".
  std::string str() const;
};

// Reversal combined with elementwise negation: letter i of the result is
// the negation of letter n-1-i of w.  This is the involution used to build
// the palindromic-with-signs extensions of the recursive words.
Word reverse_neg(const Word& w);

// Elementwise negation.
Word negate(const Word& w);

}  // namespace hqcf
