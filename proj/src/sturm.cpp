#include "tdp/sturm.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace tdp {

namespace {

using Coeffs = std::vector<BigInt>;  // index = degree, normalized

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Divide out the (positive) content.
void make_primitive(Coeffs& c) {
  BigInt g = 0;
  for (const auto& x : c) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& x : c) x /= g;
}

// Pseudo-remainder: returns lc(b)^{deg a - deg b + 1} * a mod b, exact over
// the integers. Requires deg a >= deg b >= 0.
Coeffs pseudo_remainder(Coeffs r, const Coeffs& b) {
  const BigInt& d = b.back();
  int e = deg(r) - deg(b) + 1;
  while (!r.empty() && deg(r) >= deg(b)) {
    BigInt s = r.back();
    int shift = deg(r) - deg(b);
    for (int i = 0; i < static_cast<int>(r.size()); ++i) r[i] *= d;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) r[i + shift] -= s * b[i];
    trim(r);
    --e;
  }
  if (e > 0) {
    BigInt f = pow(d, e);
    for (auto& x : r) x *= f;
  }
  return r;
}

Coeffs derivative(const Coeffs& c) {
  Coeffs d;
  for (int i = 1; i < static_cast<int>(c.size()); ++i) d.push_back(BigInt(i) * c[i]);
  trim(d);
  return d;
}

// Sturm chain of a square-free polynomial, each entry primitive; the
// pseudo-remainder's sign is corrected so every step equals the textbook
// -rem(prev, cur) up to a positive factor.
std::vector<Coeffs> sturm_chain(Coeffs s0) {
  std::vector<Coeffs> chain;
  make_primitive(s0);
  chain.push_back(std::move(s0));
  Coeffs s1 = derivative(chain[0]);
  if (s1.empty()) return chain;
  make_primitive(s1);
  chain.push_back(std::move(s1));
  while (deg(chain.back()) >= 0) {
    const Coeffs& a = chain[chain.size() - 2];
    const Coeffs& b = chain.back();
    if (deg(b) == 0) break;
    int exp = deg(a) - deg(b) + 1;
    Coeffs r = pseudo_remainder(a, b);
    if (r.empty()) break;  // square-free input never reaches here
    int correction = (exp % 2 == 0 || sgn(b.back()) > 0) ? 1 : -1;
    // next = -rem = -r / lc(b)^exp up to positive scale
    if (correction > 0)
      for (auto& x : r) x = -x;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

// Sign of c at the rational point t = num/den (den > 0): the sign of
// sum c_i num^i den^(deg-i), accumulated Horner-style.
int sign_at(const Coeffs& c, const BigInt& num, const BigInt& den) {
  if (c.empty()) return 0;
  BigInt acc = c.back(), den_pow = 1;
  for (int i = deg(c) - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + c[i] * den_pow;
  }
  return sgn(acc);
}

int sign_at_neg_inf(const Coeffs& c) {
  if (c.empty()) return 0;
  return deg(c) % 2 == 0 ? sgn(c.back()) : -sgn(c.back());
}

int sign_at_pos_inf(const Coeffs& c) {
  return c.empty() ? 0 : sgn(c.back());
}

template <typename SignFn>
int variations(const std::vector<Coeffs>& chain, SignFn sign_of) {
  int count = 0, prev = 0;
  for (const auto& c : chain) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Exact division quotient of a by b (must divide); both integer polynomials.
Coeffs exact_divide(Coeffs a, const Coeffs& b) {
  if (b.empty()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  Coeffs q(deg(a) - deg(b) + 1, 0);
  while (!a.empty() && deg(a) >= deg(b)) {
    if (a.back() % b.back() != 0)
      throw std::logic_error("exact_divide: inexact leading coefficient");
    BigInt f = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[shift] = f;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

Coeffs gcd_poly(Coeffs a, Coeffs b) {
  make_primitive(a);
  make_primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) return {BigInt(1)};
    Coeffs r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

}  // namespace

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
  Coeffs c = p.coeffs();
  make_primitive(c);
  if (deg(c) <= 0) return Polynomial::constant(1);
  Coeffs g = gcd_poly(c, derivative(c));
  Coeffs q = exact_divide(c, g);
  return Polynomial(std::move(q));
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_decomposition: zero polynomial");
  Coeffs c = p.coeffs();
  make_primitive(c);
  // chain[k] = gcd iterate; chain[k] = prod_{j > k} f_j^(j-k) up to constants
  std::vector<Coeffs> chain{c};
  while (deg(chain.back()) >= 1)
    chain.push_back(gcd_poly(chain.back(), derivative(chain.back())));
  std::vector<Coeffs> distinct;  // distinct[k] = prod_{j >= k+1} f_j
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    Coeffs s = exact_divide(chain[k], chain[k + 1]);
    make_primitive(s);
    distinct.push_back(std::move(s));
  }
  std::vector<std::pair<Polynomial, int>> out;
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    Coeffs f = k + 1 < distinct.size() ? exact_divide(distinct[k], distinct[k + 1])
                                       : distinct[k];
    if (deg(f) >= 1) out.emplace_back(Polynomial(std::move(f)), static_cast<int>(k) + 1);
  }
  return out;
}

int count_real_roots(const Polynomial& p, const std::optional<BigRat>& a,
                     const std::optional<BigRat>& b) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (a && b && *a >= *b) throw std::invalid_argument("count_real_roots: need a < b");
  if (a && p.eval_rational(*a) == 0)
    throw std::invalid_argument("count_real_roots: left endpoint is a root");
  if (b && p.eval_rational(*b) == 0)
    throw std::invalid_argument("count_real_roots: right endpoint is a root");
  if (p.degree() == 0) return 0;

  Polynomial sf = square_free_part(p);
  if (sf.degree() == 0) return 0;
  auto chain = sturm_chain(sf.coeffs());

  auto vars_at = [&](const std::optional<BigRat>& t, bool low) {
    if (!t) {
      return low ? variations(chain, sign_at_neg_inf) : variations(chain, sign_at_pos_inf);
    }
    BigInt num = numerator(*t), den = denominator(*t);
    return variations(chain, [&](const Coeffs& c) { return sign_at(c, num, den); });
  };
  // Sturm: V(a) - V(b) counts distinct roots in (a, b]; with b not a root
  // that is the open-interval count.
  return vars_at(a, true) - vars_at(b, false);
}

Polynomial deflate_zero_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("deflate_zero_roots: zero polynomial");
  int k = p.lowest_degree();
  std::vector<BigInt> c(p.coeffs().begin() + k, p.coeffs().end());
  return Polynomial(std::move(c));
}

int count_nonzero_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("count_nonzero_real_roots: zero polynomial");
  Polynomial q = deflate_zero_roots(p);
  if (q.degree() <= 0) return 0;
  return count_real_roots(q, std::nullopt, std::nullopt);
}

}  // namespace tdp
