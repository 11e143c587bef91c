#include "tdp/closed_forms.hpp"

#include <stdexcept>

namespace tdp {

Polynomial dt_complete(int n) {
  if (n < 2) throw std::invalid_argument("dt_complete: n >= 2 required");
  return Polynomial::binomial_shift(n) - Polynomial::monomial(n, 1) - Polynomial::constant(1);
}

Polynomial dt_friendship(int n) {
  if (n < 2) throw std::invalid_argument("dt_friendship: n >= 2 required");
  return Polynomial::monomial(1, 1) * Polynomial::binomial_shift(2 * n) +
         Polynomial::monomial(1, 2 * n) - Polynomial::monomial(1, 1);
}

Polynomial dt_book(int n) {
  if (n < 2) throw std::invalid_argument("dt_book: n >= 2 required");
  Polynomial spine_pair = Polynomial::monomial(1, 2) * Polynomial::binomial_shift(2 * n);
  Polynomial one_spine =
      BigInt(2) * (Polynomial::monomial(1, n + 1) * Polynomial::binomial_shift(n));
  Polynomial no_spine = Polynomial::monomial(1, 2 * n);
  return spine_pair + one_spine + no_spine;
}

Polynomial dt_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("dt_complete_bipartite: m,n >= 1 required");
  Polynomial one = Polynomial::constant(1);
  return (Polynomial::binomial_shift(m) - one) * (Polynomial::binomial_shift(n) - one);
}

Polynomial dt_corona_empty(int n_g, int m) {
  if (n_g < 2) throw std::invalid_argument("dt_corona_empty: base order >= 2 required");
  if (m < 1) throw std::invalid_argument("dt_corona_empty: m >= 1 required");
  return Polynomial::monomial(1, n_g) * Polynomial::binomial_shift(m * n_g);
}

Polynomial dt_k1_corona(const Graph& h, const EnumOptions& opts) {
  if (h.order() == 0) throw std::invalid_argument("dt_k1_corona: h must be nonempty");
  int n = h.order();
  return Polynomial::monomial(1, 1) * Polynomial::binomial_shift(n) - Polynomial::monomial(1, 1) +
         total_domination_polynomial(h, opts);
}

Polynomial dt_empty_corona(const Graph& h, int m, const EnumOptions& opts) {
  if (m < 1) throw std::invalid_argument("dt_empty_corona: m >= 1 required");
  return pow(dt_k1_corona(h, opts), static_cast<unsigned>(m));
}

}  // namespace tdp
