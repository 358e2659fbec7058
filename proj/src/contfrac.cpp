#include "hqcf/contfrac.hpp"

#include <algorithm>

#include "hqcf/error.hpp"
#include "modops.hpp"

namespace hqcf {

std::pair<Word, size_t> cf_expand(const Series& x, size_t max_n) {
  if (x.window().size() <= 4096) return detail::cf_expand_series(x, max_n);
  return detail::cf_expand_euclid(x, max_n);
}

std::pair<RatFunc, RatFunc> tail_transform(const Word& w) {
  if (w.empty()) throw Error("tail_transform of the empty word");
  const uint32_t p = w[0].p();
  std::vector<std::pair<Poly, Poly>> conv = convergents(w);
  const Poly& pn = conv.back().first;
  const Poly& qn = conv.back().second;
  Poly pp = w.size() >= 2 ? conv[w.size() - 2].first : Poly::constant(p, 1);
  Poly qp = w.size() >= 2 ? conv[w.size() - 2].second : Poly::zero(p);
  Poly det = pn * qp - pp * qn;
  if (!det.is_constant() || det.is_zero()) throw Error("determinant identity violated");
  RatFunc f(-det, qn * qn);
  RatFunc g(-qp, qn);
  return {f, g};
}

Series fold(const Word& w, const Series& tail) {
  if (w.empty()) return tail;
  std::vector<std::pair<Poly, Poly>> conv = convergents(w);
  const Poly& pn = conv.back().first;
  const Poly& qn = conv.back().second;
  Poly pp = w.size() >= 2 ? conv[w.size() - 2].first : Poly::constant(w[0].p(), 1);
  Poly qp = w.size() >= 2 ? conv[w.size() - 2].second : Poly::zero(w[0].p());
  Series den = tail * qn + qp;
  if (den.zero_so_far()) throw Error("fold tail cancels the denominator at this precision");
  return (tail * pn + pp) * den.inverse();
}

namespace detail {

std::pair<Word, size_t> cf_expand_series(const Series& x, size_t max_n) {
  Word w;
  if (max_n == 0 || x.prec() > 0) return {w, 0};
  Series cur = x;
  Poly a = cur.polynomial_part();
  w.push_back(a);
  while (w.size() < max_n) {
    Series y = cur - a;
    if (y.zero_so_far()) break;
    if (y.degree() <= y.prec()) break;
    Series next = y.inverse();
    if (next.prec() > 0) break;
    a = next.polynomial_part();
    w.push_back(a);
    cur = std::move(next);
  }
  return {w, w.size()};
}

namespace {

void trim(std::vector<uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Quotient of a by b (low-first, b trimmed and nonzero); a becomes the
// remainder.  Zero quotient rows are skipped, so the cost is governed by
// the number of nonzero quotient coefficients.
std::vector<uint32_t> div_into(std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                               const ModCtx& m) {
  trim(a);
  if (a.size() < b.size()) return {};
  std::vector<uint32_t> q(a.size() - b.size() + 1, 0);
  const uint32_t lead_inv = m.inv(b.back());
  for (size_t i = q.size(); i-- > 0;) {
    const uint32_t top = a[i + b.size() - 1];
    if (top == 0) continue;
    const uint32_t qi = m.mul(top, lead_inv);
    q[i] = qi;
    submul_row(a.data() + i, b.data(), b.size() - 1, qi, m);
    a[i + b.size() - 1] = 0;
  }
  trim(a);
  return q;
}

Poly poly_from_vec(uint32_t p, const std::vector<uint32_t>& v) {
  std::vector<int64_t> c(v.begin(), v.end());
  return Poly::from_coeffs(p, c);
}

}  // namespace

std::pair<Word, size_t> cf_expand_euclid(const Series& x, size_t max_n) {
  Word w;
  if (max_n == 0 || x.prec() > 0) return {w, 0};
  const uint32_t p = x.p();
  const int64_t floor0 = x.prec();
  const ModCtx m(p);

  // x = N/T^W + O(T^floor0) with W = -floor0 and N read off the window.
  std::vector<uint32_t> u(static_cast<size_t>(x.top() - floor0 + 1), 0);
  const std::vector<uint32_t>& win = x.window();
  for (size_t i = 0; i < win.size(); ++i)
    u[static_cast<size_t>((x.top() - static_cast<int64_t>(i)) - floor0)] = win[i];
  std::vector<uint32_t> v(static_cast<size_t>(-floor0) + 1, 0);
  v.back() = 1;

  w.push_back(poly_from_vec(p, div_into(u, v, m)));
  int64_t deg_sum = 0;
  while (w.size() < max_n) {
    if (u.empty()) break;  // remainder vanishes on the whole window
    // Absolute leading exponent of the remainder x_i - a_i.
    const int64_t dy = static_cast<int64_t>(u.size()) - static_cast<int64_t>(v.size());
    if (dy <= floor0 + 2 * deg_sum) break;
    std::vector<uint32_t> q = div_into(v, u, m);
    const int64_t d = static_cast<int64_t>(q.size()) - 1;
    if (floor0 + 2 * (deg_sum + d) > 0) break;
    w.push_back(poly_from_vec(p, q));
    deg_sum += d;
    std::swap(u, v);
  }
  return {w, w.size()};
}

}  // namespace detail

}  // namespace hqcf
