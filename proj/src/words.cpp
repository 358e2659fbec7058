#include "hqcf/words.hpp"

#include <string>

#include "hqcf/error.hpp"

namespace hqcf {

namespace {

void require_r(const Session& s) {
  if (s.r <= 2) throw ConfigError("word families require r > 2");
}

uint64_t pow_u64_checked(uint64_t b, uint32_t e) {
  uint64_t out = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (b != 0 && out > UINT64_MAX / b) throw Error("exponent overflow");
    out *= b;
  }
  return out;
}

Poly t_plus(uint32_t p, int64_t c) {  // T + c
  return Poly::from_coeffs(p, {c, 1});
}

Poly signed_t_pow(uint32_t p, int64_t sign, int64_t e) {  // sign * T^e
  return Poly::monomial(p, sign, e);
}

}  // namespace

int64_t exp_value(ExpKind kind, const Session& s, uint32_t k) {
  if (k < 1) throw ConfigError("exponent index must be >= 1");
  require_r(s);
  const int64_t r = static_cast<int64_t>(s.r);
  int64_t v = kind == ExpKind::lambda ? r : r - 2;
  for (uint32_t i = 1; i < k; ++i) v = checked_add(checked_mul(r, v), -2);
  if (v <= 0) throw Error("exponent sequence left the positive range");
  return v;
}

Word gamma(const Session& s, uint32_t k) {
  if (k < 1) throw ConfigError("gamma depth must be >= 1");
  require_r(s);
  if (k > 40) throw ConfigError("gamma depth too large");
  const uint32_t p = s.p;
  if (k == 1) {
    Word w;
    w.push_back(signed_t_pow(p, -1, 1));
    w.push_back(signed_t_pow(p, 1, static_cast<int64_t>(s.r)));
    w.push_back(signed_t_pow(p, 1, 1));
    return w;
  }
  const Word prev = gamma(s, k - 1);
  const uint64_t src = k - 1;  // depth of the word the rules read from
  const size_t n_out = (size_t(2) << k) - 1;
  Word w;
  w.a.resize(n_out, Poly::zero(p));
  // Odd slots alternate +/-T starting from the parity of the source depth.
  for (uint64_t i = 1; i <= (uint64_t(1) << k); ++i)
    w.a[2 * i - 2] = signed_t_pow(p, (i + src) % 2 == 0 ? 1 : -1, 1);
  for (uint64_t i = 1; i <= (uint64_t(1) << (k - 1)) - 1; ++i)
    w.a[4 * i - 1] = prev[2 * i - 1].frobenius_pow(s.r).div_exact_pow_t(2);
  for (uint64_t i = 1; i <= (uint64_t(1) << (k - 1)); ++i)
    w.a[4 * i - 3] = -prev[2 * i - 2].frobenius_pow(s.r);
  return w;
}

Word lambda_word(const Session& s, uint32_t k) {
  if (k < 1) throw ConfigError("lambda depth must be >= 1");
  require_r(s);
  const uint32_t p = s.p;
  if (k == 1) {
    Word w;
    w.push_back(t_plus(p, 1));
    w.push_back(t_plus(p, -1));
    return w;
  }
  if (k == 2) {
    Word w;
    w.push_back(signed_t_pow(p, 1, 1));
    w.push_back(signed_t_pow(p, -1, static_cast<int64_t>(s.r)) + Poly::constant(p, 1));
    w.push_back(signed_t_pow(p, -1, 1));
    return w;
  }
  Word w = lambda_word(s, k - 2);
  w.push_back(signed_t_pow(p, -1, exp_value(ExpKind::lambda, s, k - 1)));
  w.append(gamma(s, k - 2));
  return w;
}

Word omega(const Session& s, uint32_t k) {
  if (k < 1) throw ConfigError("omega depth must be >= 1");
  require_r(s);
  if (k == 1) {
    Word w;
    w.push_back(signed_t_pow(s.p, -1, exp_value(ExpKind::omega, s, 1)));
    return w;
  }
  Word w = omega(s, k - 1);
  const Word lam = lambda_word(s, k - 1);
  const Word mirror = reverse_neg(w);
  w.append(lam);
  w.push_back(signed_t_pow(s.p, -1, exp_value(ExpKind::omega, s, k)));
  w.append(reverse_neg(lam));
  w.append(mirror);
  return w;
}

Word omega_p(const Session& s, const Poly& P, uint32_t k) {
  if (k < 1) throw ConfigError("omega depth must be >= 1");
  require_r(s);
  if (P.p() != s.p) throw ConfigError("seed polynomial has the wrong characteristic");
  if (P.is_zero()) throw ConfigError("seed polynomial must be nonzero");
  if (!P.divisible_by_t(1)) throw ConfigError("seed polynomial must be divisible by T");
  if (k == 1) {
    Word w;
    w.push_back(P);
    return w;
  }
  Word w = omega_p(s, P, k - 1);
  const Word lam = lambda_word(s, k - 1);
  // The closing block mirrors the plain word: only the opening letter and
  // the middle letters carry the seed.
  const Word mirror = reverse_neg(omega(s, k - 1));
  const Poly dilated = P.div_exact_pow_t(1).frobenius_pow(pow_u64_checked(s.r, k - 1));
  const Poly mid =
      dilated.shift_up(exp_value(ExpKind::omega, s, k - 1));
  w.append(lam);
  w.push_back(mid);
  w.append(reverse_neg(lam));
  w.append(mirror);
  return w;
}

Word drop_take(const Word& w, size_t i, size_t j) {
  if (i + j > w.size()) throw Error("drop_take out of range");
  return w.slice(i, w.size() - j);
}

OmegaStream::OmegaStream(const Session& s) : s_(s), level_(1), word_(omega(s, 1)) {}

OmegaStream::OmegaStream(const Session& s, const Poly& P)
    : s_(s), seed_(P), level_(1), word_(omega_p(s, P, 1)) {}

void OmegaStream::ensure(size_t n) {
  while (word_.size() < n) {
    const uint32_t next_level = level_ + 1;
    Word deeper = seed_ ? omega_p(s_, *seed_, next_level) : omega(s_, next_level);
    if (deeper.size() < word_.size())
      throw Error("omega deepening shrank the word");
    for (size_t i = 0; i < word_.size(); ++i)
      if (!(deeper[i] == word_[i]))
        throw Error("omega prefix property violated at level " + std::to_string(next_level));
    word_ = std::move(deeper);
    level_ = next_level;
  }
}

Poly OmegaStream::next() {
  ensure(emitted_ + 1);
  return word_[emitted_++];
}

std::vector<Poly> OmegaStream::take(size_t n) {
  std::vector<Poly> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

MahlergenStream::MahlergenStream(const Session& s, const Word& seed) : s_(s) {
  if (seed.empty()) throw ConfigError("seed word must be nonempty");
  if (s.r <= 2) throw ConfigError("quotient stream requires r > 2");
  for (size_t i = 0; i < seed.size(); ++i) {
    const Poly& a = seed[i];
    if (a.is_zero() || a.degree() < 1)
      throw ConfigError("seed letters must have degree >= 1");
    if (i % 2 == 0 && !a.divisible_by_t(1))
      throw ConfigError("odd-indexed seed letters must be divisible by T");
    seq_.push_back(a);
  }
}

void MahlergenStream::ensure(size_t n) {
  while (seq_.size() < n) {
    const size_t k = blocks_;
    if (2 * k + 1 > seq_.size()) throw Error("quotient stream consumed past its end");
    const Poly& a_odd = seq_[2 * k];
    if (!a_odd.divisible_by_t(1))
      throw Error("stream letter at odd index " + std::to_string(2 * k + 1) +
                  " is not divisible by T");
    seq_.push_back(-a_odd.frobenius_pow(s_.r).div_exact_pow_t(2));
    seq_.push_back(signed_t_pow(s_.p, -1, 1));
    const Poly& a_even = seq_[2 * k + 1];
    seq_.push_back(a_even.frobenius_pow(s_.r));
    seq_.push_back(signed_t_pow(s_.p, 1, 1));
    ++blocks_;
  }
}

Poly MahlergenStream::next() {
  ensure(emitted_ + 1);
  return seq_[emitted_++];
}

std::vector<Poly> MahlergenStream::take(size_t n) {
  std::vector<Poly> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

}  // namespace hqcf
