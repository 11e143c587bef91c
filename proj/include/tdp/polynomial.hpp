#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdp/bigint.hpp"

namespace tdp {

struct UnimodalResult {
  bool unimodal = false;
  int mode = -1;  // a valid mode index when unimodal
};

// Dense univariate polynomial over arbitrary-precision integers,
// coeffs[i] = coefficient of x^i. Always normalized: the highest stored
// coefficient is nonzero, and the zero polynomial stores nothing.
class Polynomial {
 public:
  // degree() of the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(BigInt c);
  static Polynomial monomial(BigInt c, int deg);
  // (x+1)^k with exact binomial coefficients.
  static Polynomial binomial_shift(int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading_coeff() const;

  // Index of the lowest nonzero coefficient; input error on the zero
  // polynomial (no total dominating set exists when used on a D_t).
  int lowest_degree() const;

  Polynomial derivative() const;

  BigInt eval_int(const BigInt& z) const;
  BigRat eval_rational(const BigRat& z) const;
  std::complex<double> eval_complex(std::complex<double> z) const;

  // Coefficient sequence from index 0 to degree rises (weakly) to a mode and
  // then falls; interior zeros count. Input error on the zero polynomial.
  UnimodalResult is_unimodal() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigInt& c, const Polynomial& p);
  friend Polynomial pow(const Polynomial& p, unsigned k);

  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

  // JSON array of decimal coefficient strings, index = degree.
  nlohmann::ordered_json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned k);

}  // namespace tdp
