#include "tdp/polynomial.hpp"

#include <stdexcept>

namespace tdp {

namespace {
const BigInt kZero = 0;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
  Polynomial p;
  p.coeffs_.push_back(std::move(c));
  p.normalize();
  return p;
}

Polynomial Polynomial::monomial(BigInt c, int deg) {
  if (deg < 0) throw std::invalid_argument("monomial: negative degree");
  Polynomial p;
  p.coeffs_.assign(deg + 1, 0);
  p.coeffs_[deg] = std::move(c);
  p.normalize();
  return p;
}

Polynomial Polynomial::binomial_shift(int k) {
  if (k < 0) throw std::invalid_argument("binomial_shift: k >= 0 required");
  std::vector<BigInt> c(k + 1);
  c[0] = 1;
  for (int i = 1; i <= k; ++i) {
    c[i] = 1;
    for (int j = i - 1; j > 0; --j) c[j] += c[j - 1];
  }
  return Polynomial(std::move(c));
}

const BigInt& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const BigInt& Polynomial::leading_coeff() const {
  if (is_zero()) throw std::invalid_argument("leading_coeff: zero polynomial");
  return coeffs_.back();
}

int Polynomial::lowest_degree() const {
  if (is_zero()) throw std::invalid_argument("lowest_degree: zero polynomial");
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    if (coeffs_[i] != 0) return i;
  return kZeroDegree;  // unreachable for normalized nonzero input
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = BigInt(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

BigInt Polynomial::eval_int(const BigInt& z) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

BigRat Polynomial::eval_rational(const BigRat& z) const {
  BigRat r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + BigRat(*it);
  return r;
}

std::complex<double> Polynomial::eval_complex(std::complex<double> z) const {
  std::complex<double> r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * z + it->convert_to<double>();
  return r;
}

UnimodalResult Polynomial::is_unimodal() const {
  if (is_zero()) throw std::invalid_argument("is_unimodal: zero polynomial");
  int d = degree();
  int k = 0;
  while (k < d && coeffs_[k] <= coeffs_[k + 1]) ++k;
  for (int j = k; j < d; ++j)
    if (coeffs_[j] < coeffs_[j + 1]) return {false, -1};
  return {true, k};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const BigInt& c, const Polynomial& p) {
  std::vector<BigInt> out(p.coeffs_.size());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    BigInt a = abs(c);
    bool show_coeff = (a != 1) || i == 0;
    if (show_coeff) s += a.str();
    if (i > 0) {
      if (show_coeff) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

nlohmann::ordered_json Polynomial::to_json() const {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) j.push_back(c.str());
  return j;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON: expected array");
  std::vector<BigInt> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_string())
      c.emplace_back(e.get<std::string>());
    else if (e.is_number_integer())
      c.emplace_back(e.get<long long>());
    else
      throw std::invalid_argument("polynomial JSON: expected decimal strings");
  }
  return Polynomial(std::move(c));
}

}  // namespace tdp
