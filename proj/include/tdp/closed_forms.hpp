#pragma once

#include "tdp/enumeration.hpp"
#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"

namespace tdp {

// Closed forms for the families with a known total domination polynomial.
// These evaluate far past the enumeration cap and double as cross-checks
// against enumeration at small orders.

// (x+1)^n - nx - 1.
Polynomial dt_complete(int n);

// x(x+1)^{2n} + x^{2n} - x.
Polynomial dt_friendship(int n);

// x^2(x+1)^{2n} + 2x^{n+1}(x+1)^n + x^{2n}, i.e. (x(x+1)^n + x^n)^2.
// Matches enumeration on book(n); the x^{2n} term counts the single
// total dominating set avoiding both spine vertices.
Polynomial dt_book(int n);

// ((x+1)^m - 1)((x+1)^n - 1).
Polynomial dt_complete_bipartite(int m, int n);

// x^{n_g} (x+1)^{m*n_g}: the corona of any isolate-free order-n_g graph with
// the edgeless order-m graph; depends only on the orders.
Polynomial dt_corona_empty(int n_g, int m);

// x(1+x)^{|V(h)|} - x + D_t(h); D_t(h) comes from enumeration.
Polynomial dt_k1_corona(const Graph& h, const EnumOptions& opts = {});

// dt_k1_corona(h)^m: the corona of the edgeless order-m graph with h.
Polynomial dt_empty_corona(const Graph& h, int m, const EnumOptions& opts = {});

}  // namespace tdp
