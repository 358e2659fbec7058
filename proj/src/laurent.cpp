#include "hqcf/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hqcf/error.hpp"
#include "textform.hpp"

namespace hqcf {

namespace {

void require_same_p(uint32_t a, uint32_t b) {
  if (a != b) throw Error("series characteristic mismatch");
}

uint32_t reduce_int(int64_t c, uint32_t p) {
  int64_t r = c % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

}  // namespace

void Series::normalize() {
  if (p_ < 2) throw Error("invalid characteristic");
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<ptrdiff_t>(k));
    top_ -= static_cast<int64_t>(k);
  }
  if (c_.empty()) top_ = prec_ - 1;
  if (prec_ > top_ + 1) throw Error("series window invariant violated");
}

Series Series::zero_at(uint32_t p, int64_t prec) { return Series(p, prec - 1, prec, {}); }

Series Series::from_window(uint32_t p, int64_t top, int64_t prec, std::vector<uint32_t> coeffs) {
  if (static_cast<int64_t>(coeffs.size()) != top - prec + 1)
    throw Error("window length does not match its exponent range");
  for (uint32_t v : coeffs)
    if (v >= p) throw Error("window coefficient out of range");
  return Series(p, top, prec, std::move(coeffs));
}

Series Series::from_poly(const Poly& q, int64_t prec) {
  if (q.is_zero()) return zero_at(q.p(), prec);
  int64_t top = q.degree();
  if (top < prec) return zero_at(q.p(), prec);
  std::vector<uint32_t> c(static_cast<size_t>(top - prec + 1), 0);
  for (int64_t e = top; e >= std::max<int64_t>(prec, 0); --e)
    c[static_cast<size_t>(top - e)] = q.coeff(e).v;
  return Series(q.p(), top, prec, std::move(c));
}

Series Series::from_ratfunc(const RatFunc& f, int64_t prec) {
  if (f.is_zero()) return zero_at(f.p(), prec);
  const Poly& num = f.num();
  const Poly& den = f.den();
  int64_t top = num.degree() - den.degree();
  if (top < prec) return zero_at(f.p(), prec);
  size_t len = static_cast<size_t>(top - prec + 1);
  // In s = 1/T the value is s^(-top) * N~(s)/D~(s) with the reversed
  // coefficient sequences; D~(0) is the leading coefficient, a unit.
  auto reversed = [&](const Poly& q) {
    std::vector<uint32_t> out(len, 0);
    int64_t d = q.degree();
    for (size_t i = 0; i < len && static_cast<int64_t>(i) <= d; ++i)
      out[i] = q.coeff(d - static_cast<int64_t>(i)).v;
    return out;
  };
  std::vector<uint32_t> n_rev = reversed(num);
  std::vector<uint32_t> d_inv = invert_window(reversed(den), len, f.p());
  std::vector<uint32_t> prod = mul_windows(n_rev, d_inv, f.p());
  prod.resize(len);
  return Series(f.p(), top, prec, std::move(prod));
}

int64_t Series::degree() const {
  if (zero_so_far()) throw Error("degree of series indistinguishable from zero");
  return top_;
}

Fp Series::coeff(int64_t e) const {
  if (e < prec_) throw Error("coefficient below certified precision");
  if (e > top_) return Fp{0, p_};
  return Fp{c_[static_cast<size_t>(top_ - e)], p_};
}

Series Series::truncate_to(int64_t new_prec) const {
  if (new_prec < prec_) throw Error("cannot refine precision by truncation");
  if (new_prec > top_) return zero_at(p_, new_prec);
  std::vector<uint32_t> c(c_.begin(), c_.begin() + static_cast<ptrdiff_t>(top_ - new_prec + 1));
  return Series(p_, top_, new_prec, std::move(c));
}

Series Series::shift(int64_t e) const {
  return Series(p_, checked_add(top_, e), checked_add(prec_, e), c_);
}

Poly Series::polynomial_part() const {
  if (prec_ > 0) throw Error("polynomial part not certified at positive precision");
  if (zero_so_far() || top_ < 0) return Poly::zero(p_);
  std::vector<int64_t> low_first(static_cast<size_t>(top_) + 1, 0);
  for (int64_t e = 0; e <= top_; ++e) low_first[static_cast<size_t>(e)] = c_[static_cast<size_t>(top_ - e)];
  return Poly::from_coeffs(p_, low_first);
}

Series operator+(const Series& a, const Series& b) {
  require_same_p(a.p_, b.p_);
  int64_t prec = std::max(a.prec_, b.prec_);
  int64_t top = std::max(a.top_, b.top_);
  if (top < prec) return Series::zero_at(a.p_, prec);
  std::vector<uint32_t> c(static_cast<size_t>(top - prec + 1), 0);
  for (int64_t e = top; e >= prec; --e) {
    uint32_t va = (e <= a.top_ && e >= a.prec_) ? a.c_[static_cast<size_t>(a.top_ - e)] : 0;
    uint32_t vb = (e <= b.top_ && e >= b.prec_) ? b.c_[static_cast<size_t>(b.top_ - e)] : 0;
    uint32_t s = va + vb;
    if (s >= a.p_) s -= a.p_;
    c[static_cast<size_t>(top - e)] = s;
  }
  return Series(a.p_, top, prec, std::move(c));
}

Series operator-(const Series& a) {
  std::vector<uint32_t> c = a.c_;
  for (uint32_t& v : c)
    if (v != 0) v = a.p_ - v;
  return Series(a.p_, a.top_, a.prec_, std::move(c));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  require_same_p(a.p_, b.p_);
  // Unknown tails enter the product no higher than these cross terms.
  int64_t prec = std::max(a.prec_ + b.top_, b.prec_ + a.top_);
  if (a.zero_so_far() || b.zero_so_far()) return Series::zero_at(a.p_, prec);
  int64_t top = a.top_ + b.top_;
  std::vector<uint32_t> prod = mul_windows(a.c_, b.c_, a.p_);
  prod.resize(static_cast<size_t>(top - prec + 1));
  return Series(a.p_, top, prec, std::move(prod));
}

Series operator+(const Series& a, const Poly& b) {
  require_same_p(a.p_, b.p());
  if (b.is_zero()) return a;
  int64_t top = std::max(a.top_, b.degree());
  if (top < a.prec_) return Series::zero_at(a.p_, a.prec_);
  std::vector<uint32_t> c(static_cast<size_t>(top - a.prec_ + 1), 0);
  for (int64_t e = top; e >= a.prec_; --e) {
    uint32_t va = (e <= a.top_ && e >= a.prec_) ? a.c_[static_cast<size_t>(a.top_ - e)] : 0;
    uint32_t vb = (e >= 0 && e <= b.degree()) ? b.coeff(e).v : 0;
    uint32_t s = va + vb;
    if (s >= a.p_) s -= a.p_;
    c[static_cast<size_t>(top - e)] = s;
  }
  return Series(a.p_, top, a.prec_, std::move(c));
}

Series operator-(const Series& a, const Poly& b) { return a + (-b); }

Series operator*(const Series& a, const Poly& b) {
  require_same_p(a.p_, b.p());
  if (b.is_zero()) return Series::zero_at(a.p_, a.prec_);
  int64_t d = b.degree();
  if (a.zero_so_far()) return Series::zero_at(a.p_, a.prec_ + d);
  std::vector<uint32_t> b_rev(static_cast<size_t>(d) + 1, 0);
  for (int64_t e = 0; e <= d; ++e) b_rev[static_cast<size_t>(d - e)] = b.coeff(e).v;
  std::vector<uint32_t> prod = mul_windows(a.c_, b_rev, a.p_);
  prod.resize(a.c_.size() + static_cast<size_t>(d));
  return Series(a.p_, a.top_ + d, a.prec_ + d, std::move(prod));
}

Series Series::inverse() const {
  if (zero_so_far()) throw Error("inverse of series indistinguishable from zero");
  std::vector<uint32_t> inv = invert_window(c_, c_.size(), p_);
  return Series(p_, -top_, prec_ - 2 * top_, std::move(inv));
}

Series Series::frobenius_pow(uint64_t r) const {
  if (r == 0) throw Error("frobenius exponent must be positive");
  uint64_t m = r;
  while (m % p_ == 0) m /= p_;
  if (m != 1) throw Error("frobenius exponent must be a power of the characteristic");
  int64_t ri = static_cast<int64_t>(r);
  int64_t prec = checked_add(checked_mul(ri, prec_ - 1), 1);
  if (zero_so_far()) return zero_at(p_, prec);
  int64_t top = checked_mul(ri, top_);
  std::vector<uint32_t> c(static_cast<size_t>(top - prec + 1), 0);
  // Coefficients are fixed by x -> x^p in the prime field, so dilation
  // just spreads the window by a factor of r.
  for (size_t i = 0; i < c_.size(); ++i) c[i * r] = c_[i];
  return Series(p_, top, prec, std::move(c));
}

bool Series::agree(const Series& a, const Series& b) {
  require_same_p(a.p_, b.p_);
  int64_t lo = std::max(a.prec_, b.prec_);
  int64_t hi = std::max(a.top_, b.top_);
  for (int64_t e = lo; e <= hi; ++e)
    if (a.coeff(e).v != b.coeff(e).v) return false;
  return true;
}

std::string Series::str() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += std::to_string(c_[i]) + "*T^" + std::to_string(top_ - static_cast<int64_t>(i)) + "+";
  }
  out += "O(T^" + std::to_string(prec_) + ")";
  return out;
}

Series Series::parse(uint32_t p, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  size_t at = s.rfind("O(T^");
  if (at == std::string::npos || s.back() != ')')
    throw ConfigError("series text must end with O(T^prec)");
  if (at > 0) {
    if (s[at - 1] != '+') throw ConfigError("malformed series text");
    --at;
  }
  std::string tail = s.substr(at == 0 ? 4 : at + 5, s.size() - (at == 0 ? 4 : at + 5) - 1);
  int64_t prec = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), prec);
  if (ec != std::errc() || ptr != tail.data() + tail.size())
    throw ConfigError("bad precision in series text");
  // A bare O-term is the zero-so-far series.
  std::vector<TextTerm> terms;
  if (at > 0) terms = parse_terms(s.substr(0, at), true);
  int64_t top = prec - 1;
  for (const TextTerm& t : terms) {
    if (t.e < prec) throw ConfigError("series term below stated precision");
    top = std::max(top, t.e);
  }
  std::vector<uint32_t> c(static_cast<size_t>(top - prec + 1), 0);
  for (const TextTerm& t : terms) {
    size_t i = static_cast<size_t>(top - t.e);
    uint32_t v = c[i] + reduce_int(t.c, p);
    c[i] = v >= p ? v - p : v;
  }
  return Series(p, top, prec, std::move(c));
}

}  // namespace hqcf
