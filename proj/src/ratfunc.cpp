#include "hqcf/ratfunc.hpp"

#include <utility>

namespace hqcf {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.p() != den_.p()) throw Error("mixed characteristics in rational function");
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Fp lead = den_.lead();
  if (!(lead.v == 1)) {
    Fp inv = hqcf::inverse(lead);
    num_ = num_.times_const(inv);
    den_ = den_.times_const(inv);
  }
}

RatFunc RatFunc::from_poly(Poly q) {
  RatFunc out(q.p());
  out.num_ = std::move(q);
  return out;
}

int64_t RatFunc::degree() const {
  return num_.degree() - den_.degree();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc out = a;
  out.num_.negate();
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::frobenius_pow(uint64_t r) const {
  return RatFunc(num_.frobenius_pow(r), den_.frobenius_pow(r));
}

std::pair<Poly, RatFunc> RatFunc::split() const {
  auto [q, rem] = Poly::divmod(num_, den_);
  return {q, RatFunc(rem, den_)};
}

RatFunc operator+(const RatFunc& a, const Poly& b) {
  return a + RatFunc::from_poly(b);
}

RatFunc operator*(const Poly& a, const RatFunc& b) {
  return RatFunc::from_poly(a) * b;
}

Word continued_fraction(const RatFunc& f) {
  Word out;
  Poly n = f.num(), d = f.den();
  while (!d.is_zero()) {
    auto [q, r] = Poly::divmod(n, d);
    out.push_back(std::move(q));
    n = std::move(d);
    d = std::move(r);
  }
  // Euclid cannot emit a constant after the first letter (remainders have
  // strictly smaller degree than their divisors), but guard the output
  // invariant anyway: [.., a, c] and [.., a + 1/c] name the same value.
  if (out.size() >= 2 && out[out.size() - 1].is_constant()) {
    Poly c = out[out.size() - 1];
    Poly merged = out[out.size() - 2] + Poly::constant(c.p(), inverse(c.lead()).v);
    out.a.pop_back();
    out.a.back() = std::move(merged);
  }
  return out;
}

std::vector<std::pair<Poly, Poly>> convergents(const Word& w) {
  std::vector<std::pair<Poly, Poly>> out;
  out.reserve(w.size());
  if (w.empty()) return out;
  const uint32_t p = w[0].p();
  Poly p1 = Poly::constant(p, 1), q1 = Poly::zero(p);  // (p_{i-1}, q_{i-1})
  Poly p2 = Poly::zero(p), q2 = Poly::constant(p, 1);  // (p_{i-2}, q_{i-2})
  for (size_t i = 0; i < w.size(); ++i) {
    Poly pi = w[i] * p1 + p2;
    Poly qi = w[i] * q1 + q2;
    out.emplace_back(pi, qi);
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = std::move(pi);
    q1 = std::move(qi);
  }
  return out;
}

RatFunc fold(const Word& w) {
  if (w.empty()) throw Error("fold of an empty word");
  auto conv = convergents(w);
  return RatFunc(conv.back().first, conv.back().second);
}

RatFunc fold(const Word& w, const RatFunc& tail) {
  if (w.empty()) return tail;
  auto conv = convergents(w);
  const uint32_t p = w[0].p();
  Poly pn = conv.back().first, qn = conv.back().second;
  Poly pn1 = conv.size() >= 2 ? conv[conv.size() - 2].first : Poly::constant(p, 1);
  Poly qn1 = conv.size() >= 2 ? conv[conv.size() - 2].second : Poly::zero(p);
  RatFunc den = qn * tail + qn1;
  if (den.is_zero()) throw Error("fold tail collides with a pole");
  return (pn * tail + pn1) / den;
}

Word Word::slice(size_t i, size_t j) const {
  Word out;
  if (i >= a.size()) return out;
  j = std::min(j, a.size());
  out.a.assign(a.begin() + i, a.begin() + j);
  return out;
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a[i].str();
  }
  return out;
}

Word reverse_neg(const Word& w) {
  Word out;
  out.a.reserve(w.size());
  for (size_t i = w.size(); i-- > 0;) {
    out.a.push_back(-w.a[i]);
  }
  return out;
}

Word negate(const Word& w) {
  Word out;
  out.a.reserve(w.size());
  for (const Poly& q : w.a) out.a.push_back(-q);
  return out;
}

}  // namespace hqcf
