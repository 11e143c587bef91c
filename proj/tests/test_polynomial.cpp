#include <doctest.h>

#include <random>

#include "tdp/polynomial.hpp"

using namespace tdp;

namespace {

Polynomial P(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial random_poly(std::mt19937_64& rng) {
  std::vector<BigInt> c(rng() % 7);
  for (auto& x : c) x = static_cast<long long>(rng() % 19) - 9;
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK((P({0, 0, 1}) - P({0, 0, 1})).is_zero());
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
  CHECK(pow(P({1, 1}), 0) == P({1}));
  CHECK(P({}).degree() == Polynomial::kZeroDegree);
  CHECK(P({0, 0, 0}).is_zero());
}

TEST_CASE("binomial shift") {
  CHECK(Polynomial::binomial_shift(0) == P({1}));
  CHECK(Polynomial::binomial_shift(3) == P({1, 3, 3, 1}));
  CHECK(Polynomial::binomial_shift(10).coeff(5) == 252);
  for (int k : {1, 7, 20, 40})
    CHECK(Polynomial::binomial_shift(k).eval_int(1) == BigInt(1) << k);
  CHECK(binomial(26, 13) == BigInt("10400600"));
}

TEST_CASE("evaluation") {
  CHECK(P({0, 0, 1}).eval_int(-1) == 1);
  Polynomial p = Polynomial::binomial_shift(2) - BigInt(2) * Polynomial::binomial_shift(1) +
                 Polynomial::constant(1);
  CHECK(p == P({0, 0, 1}));
  CHECK(p.eval_int(0) == 0);
  CHECK(Polynomial().eval_int(123) == 0);
  CHECK(P({1, 2}).eval_rational(BigRat(1, 2)) == BigRat(2));
  CHECK(P({0, 0, 1}).eval_complex({0.0, 1.0}).real() == doctest::Approx(-1.0));
}

TEST_CASE("derivative") {
  CHECK(P({0, 0, 3, 1}).derivative() == P({0, 6, 3}));
  CHECK(P({5}).derivative().is_zero());
  CHECK(Polynomial().derivative().is_zero());
}

TEST_CASE("unimodality") {
  auto u = P({0, 0, 3, 1}).is_unimodal();
  CHECK(u.unimodal);
  CHECK(u.mode == 2);

  auto f2 = P({0, 0, 4, 6, 5, 1}).is_unimodal();
  CHECK(f2.unimodal);
  CHECK(f2.mode == 3);

  CHECK_FALSE(P({1, 0, 1}).is_unimodal().unimodal);
  CHECK(P({1, 2, 2, 1}).is_unimodal().unimodal);
  CHECK_THROWS_AS(Polynomial().is_unimodal(), std::invalid_argument);
}

TEST_CASE("lowest degree") {
  CHECK(P({0, 0, 3, 1}).lowest_degree() == 2);
  CHECK(P({7}).lowest_degree() == 0);
  CHECK_THROWS_AS(Polynomial().lowest_degree(), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    BigInt z = static_cast<long long>(rng() % 21) - 10;
    CHECK((a * b).eval_int(z) == a.eval_int(z) * b.eval_int(z));
  }
  std::mt19937_64 rng2(7);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial a = random_poly(rng2);
    unsigned k = rng2() % 5;
    Polynomial by_mul = Polynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) by_mul = by_mul * a;
    CHECK(pow(a, k) == by_mul);
  }
}

TEST_CASE("JSON round trip keeps big coefficients") {
  BigInt huge = BigInt(1) << 200;
  Polynomial p = Polynomial::monomial(huge, 3) + P({1, -7});
  Polynomial q = Polynomial::from_json(p.to_json());
  CHECK(p == q);
  CHECK(p.to_json()[3].get<std::string>() == huge.str());
}

TEST_CASE("printing") {
  CHECK(P({0, 0, 3, 1}).to_string() == "x^3 + 3*x^2");
  CHECK(P({-1, 1}).to_string() == "x - 1");
  CHECK(Polynomial().to_string() == "0");
}
