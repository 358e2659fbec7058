#include "hqcf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "modops.hpp"
#include "ntt.hpp"
#include "textform.hpp"

namespace hqcf {

namespace {

void check_same_p(const Poly& a, const Poly& b) {
  if (a.p() != b.p()) throw Error("mixed characteristics in polynomial arithmetic");
}

}  // namespace

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(uint32_t p, int64_t c) {
  Poly out(p);
  Fp v(c, p);
  if (!v.is_zero()) out.c_.push_back(v.v);
  return out;
}

Poly Poly::monomial(uint32_t p, int64_t c, int64_t e) {
  if (e < 0) throw Error("negative exponent in polynomial monomial");
  Poly out(p);
  Fp v(c, p);
  if (v.is_zero()) return out;
  out.c_.assign(static_cast<size_t>(e) + 1, 0);
  out.c_.back() = v.v;
  return out;
}

Poly Poly::from_coeffs(uint32_t p, const std::vector<int64_t>& low_to_high) {
  Poly out(p);
  out.c_.reserve(low_to_high.size());
  for (int64_t c : low_to_high) out.c_.push_back(Fp(c, p).v);
  out.trim();
  return out;
}

int64_t Poly::degree() const {
  if (c_.empty()) throw Error("degree of the zero polynomial");
  return static_cast<int64_t>(c_.size()) - 1;
}

size_t Poly::weight() const {
  size_t n = 0;
  for (uint32_t c : c_) n += c != 0;
  return n;
}

Fp Poly::coeff(int64_t e) const {
  Fp out;
  out.p = p_;
  if (e >= 0 && e < static_cast<int64_t>(c_.size())) out.v = c_[static_cast<size_t>(e)];
  return out;
}

Fp Poly::lead() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  Fp out;
  out.p = p_;
  out.v = c_.back();
  return out;
}

Fp Poly::at_zero() const { return coeff(0); }

Poly& Poly::negate() {
  for (uint32_t& c : c_) c = c == 0 ? 0 : p_ - c;
  return *this;
}

Poly Poly::times_const(Fp c) const {
  if (c.p != p_) throw Error("mixed characteristics in polynomial arithmetic");
  Poly out(p_);
  if (c.is_zero() || c_.empty()) return out;
  const ModCtx m(p_);
  out.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = m.mul(c_[i], c.v);
  return out;
}

Poly Poly::monic() const {
  return times_const(inverse(lead()));
}

Poly Poly::shift_up(int64_t e) const {
  if (e < 0) throw Error("negative shift of a polynomial");
  if (c_.empty()) return *this;
  Poly out(p_);
  out.c_.assign(static_cast<size_t>(e), 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

Poly Poly::frobenius_pow(uint64_t r) const {
  if (r == 0) throw Error("frobenius exponent must be positive");
  uint64_t m = r;
  while (m % p_ == 0) m /= p_;
  if (m != 1) throw Error("frobenius exponent must be a power of the characteristic");
  if (c_.empty()) return *this;
  // (sum c_k T^k)^r = sum c_k T^(rk) when r is a power of the characteristic.
  const int64_t new_deg = checked_mul(degree(), static_cast<int64_t>(r));
  Poly out(p_);
  out.c_.assign(static_cast<size_t>(new_deg) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i]) out.c_[i * r] = c_[i];
  }
  return out;
}

bool Poly::divisible_by_t(int64_t e) const {
  if (c_.empty()) return true;
  const size_t k = std::min<size_t>(static_cast<size_t>(std::max<int64_t>(e, 0)), c_.size());
  for (size_t i = 0; i < k; ++i) {
    if (c_[i] != 0) return false;
  }
  // A nonzero trimmed polynomial with deg < e would have tripped the loop.
  return true;
}

Poly Poly::div_exact_pow_t(int64_t e) const {
  if (e < 0) throw Error("negative exponent in exact division");
  if (c_.empty()) return *this;
  if (!divisible_by_t(e)) throw Error("polynomial not divisible by requested power of T");
  Poly out(p_);
  out.c_.assign(c_.begin() + static_cast<size_t>(e), c_.end());
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_p(a, b);
  Poly out(a.p_);
  const ModCtx m(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < out.c_.size(); ++i) {
    uint32_t x = i < a.c_.size() ? a.c_[i] : 0;
    uint32_t y = i < b.c_.size() ? b.c_[i] : 0;
    out.c_[i] = m.add(x, y);
  }
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_p(a, b);
  Poly out(a.p_);
  const ModCtx m(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < out.c_.size(); ++i) {
    uint32_t x = i < a.c_.size() ? a.c_[i] : 0;
    uint32_t y = i < b.c_.size() ? b.c_[i] : 0;
    out.c_[i] = m.sub(x, y);
  }
  out.trim();
  return out;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  out.negate();
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_p(a, b);
  Poly out(a.p_);
  if (a.c_.empty() || b.c_.empty()) return out;
  out.c_ = mul_windows(a.c_, b.c_, a.p_);
  out.trim();
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  check_same_p(a, b);
  if (b.c_.empty()) throw Error("polynomial division by zero");
  if (a.c_.empty() || a.c_.size() < b.c_.size()) return {Poly(a.p_), a};
  const ModCtx m(a.p_);
  const size_t db = b.c_.size() - 1;
  std::vector<uint32_t> rem = a.c_;
  Poly q(a.p_);
  q.c_.assign(a.c_.size() - db, 0);
  const uint32_t inv_lead = m.inv(b.c_.back());
  for (size_t i = q.c_.size(); i-- > 0;) {
    const uint32_t qi = m.mul(rem[i + db], inv_lead);
    if (qi == 0) continue;
    q.c_[i] = qi;
    submul_row(rem.data() + i, b.c_.data(), db, qi, m);
    rem[i + db] = 0;
  }
  rem.resize(db);
  Poly r(a.p_);
  r.c_ = std::move(rem);
  r.trim();
  q.trim();
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
    out += i == 1 ? "T" : "T^" + std::to_string(i);
  }
  return out;
}

Poly Poly::parse(uint32_t p, const std::string& text) {
  const std::vector<TextTerm> terms = parse_terms(text, /*allow_negative_exponent=*/false);
  Poly out(p);
  const ModCtx m(p);
  for (const TextTerm& t : terms) {
    const Fp c(t.c, p);
    if (c.is_zero()) continue;
    if (static_cast<size_t>(t.e) >= out.c_.size()) out.c_.resize(static_cast<size_t>(t.e) + 1, 0);
    out.c_[static_cast<size_t>(t.e)] = m.add(out.c_[static_cast<size_t>(t.e)], c.v);
  }
  out.trim();
  return out;
}

std::vector<uint32_t> mul_windows(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  const size_t small = std::min(a.size(), b.size());
  const size_t large = std::max(a.size(), b.size());
  if (small <= 32 || large <= 64) {
    const ModCtx m(p);
    std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
    const std::vector<uint32_t>& s = a.size() <= b.size() ? a : b;
    const std::vector<uint32_t>& l = a.size() <= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) continue;
      const uint32_t c = s[i];
      for (size_t j = 0; j < l.size(); ++j) {
        out[i + j] = m.add(out[i + j], m.mul(c, l[j]));
      }
    }
    return out;
  }
  return ntt::convolve_mod(a, b, p);
}

std::vector<uint32_t> invert_window(const std::vector<uint32_t>& in, size_t n,
                                    uint32_t p) {
  if (n == 0) return {};
  if (in.empty() || in[0] == 0) throw Error("window inverse requires a unit constant term");
  const ModCtx m(p);
  std::vector<uint32_t> v{m.inv(in[0])};
  size_t k = 1;
  while (k < n) {
    const size_t k2 = std::min(2 * k, n);
    // v <- v * (2 - in * v) mod s^k2
    std::vector<uint32_t> u(in.begin(), in.begin() + std::min(k2, in.size()));
    std::vector<uint32_t> w = mul_windows(u, v, p);
    w.resize(k2, 0);
    for (uint32_t& x : w) x = m.neg(x);
    w[0] = m.add(w[0], 2 % p);
    std::vector<uint32_t> v2 = mul_windows(v, w, p);
    v2.resize(k2, 0);
    v = std::move(v2);
    k = k2;
  }
  return v;
}

std::vector<TextTerm> parse_terms(const std::string& text, bool allow_negative_exponent) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ConfigError("empty polynomial text");

  std::vector<TextTerm> out;
  size_t i = 0;
  auto parse_int = [&](bool allow_sign) -> int64_t {
    size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
    if (ec != std::errc() || ptr != s.data() + i || start == i) {
      throw ConfigError("malformed number in polynomial text: " + text);
    }
    return value;
  };

  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (first && s[i] == '+') throw ConfigError("malformed polynomial text: " + text);
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ConfigError("malformed polynomial text: " + text);
    }
    first = false;
    if (i >= s.size()) throw ConfigError("dangling sign in polynomial text: " + text);

    TextTerm term;
    term.c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      term.c = parse_int(false);
      have_coeff = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'T') throw ConfigError("expected T after '*' in: " + text);
      }
    }
    if (i < s.size() && s[i] == 'T') {
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        term.e = parse_int(true);
        if (term.e < 0 && !allow_negative_exponent) {
          throw ConfigError("negative exponent not allowed here: " + text);
        }
      } else {
        term.e = 1;
      }
    } else if (!have_coeff) {
      throw ConfigError("malformed term in polynomial text: " + text);
    }
    term.c *= sign;
    out.push_back(term);
  }
  return out;
}

}  // namespace hqcf
