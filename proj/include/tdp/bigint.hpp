#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tdp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k), exact.
BigInt binomial(unsigned n, unsigned k);

}  // namespace tdp
