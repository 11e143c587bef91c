#pragma once

#include <optional>

#include "tdp/polynomial.hpp"

namespace tdp {

// p with repeated factors reduced to multiplicity one (p / gcd(p, p')),
// up to a positive constant.
Polynomial square_free_part(const Polynomial& p);

// Exact multiplicity structure: factors f with multiplicity m such that
// prod f^m = p up to a constant, each f square-free, computed over the
// integers via the gcd chain.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

// Exact count of distinct real roots of p in the open interval (a, b);
// nullopt endpoints mean -inf / +inf. The Sturm chain is carried over the
// integers (primitive pseudo-remainders, sign-exact), endpoints are exact
// rationals. Finite endpoints must not be roots.
int count_real_roots(const Polynomial& p, const std::optional<BigRat>& a,
                     const std::optional<BigRat>& b);

// Distinct nonzero real roots of p: the zero root is deflated exactly and
// the remainder is counted over the whole line.
int count_nonzero_real_roots(const Polynomial& p);

// p / x^{lowest_degree(p)}, exact; input error on the zero polynomial.
Polynomial deflate_zero_roots(const Polynomial& p);

}  // namespace tdp
