#include "coprimal/polynomials.hpp"

#include <sstream>
#include <stdexcept>

#include "coprimal/common.hpp"
#include "coprimal/numtheory.hpp"

namespace coprimal {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::constant(BigInt c) {
  return IntegerPolynomial({std::move(c)});
}

IntegerPolynomial IntegerPolynomial::monomial(int degree, BigInt c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator*(const BigInt& c) const {
  std::vector<BigInt> r = coeffs_;
  for (auto& v : r) v *= c;
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("IntegerPolynomial::pow: negative exponent");
  IntegerPolynomial result = constant(1);
  for (int i = 0; i < e; ++i) result = result * (*this);
  return result;
}

IntegerPolynomial IntegerPolynomial::divide_by_x() const {
  if (is_zero()) return {};
  if (coeffs_[0] != 0)
    throw internal_fault("divide_by_x: constant term does not vanish");
  return IntegerPolynomial({coeffs_.begin() + 1, coeffs_.end()});
}

BigInt IntegerPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    BigInt a = abs(c);
    if (i == 0 || a != 1) out << a.str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

namespace {

IntegerPolynomial x_minus_one_pow(int e) {
  return IntegerPolynomial({BigInt(-1), BigInt(1)}).pow(e);
}

}  // namespace

IntegerPolynomial build_F(int k, int s) {
  if (k < 3 || s < 1 || s > k - 1)
    throw std::invalid_argument("build_F: need k >= 3 and 1 <= s <= k-1");
  IntegerPolynomial x = IntegerPolynomial::monomial(1);
  IntegerPolynomial bracket = x.pow(k) + x_minus_one_pow(k) -
                              x.pow(s) * x_minus_one_pow(k - s) -
                              x.pow(k - s) * x_minus_one_pow(s) +
                              IntegerPolynomial::constant(k % 2 == 1 ? 1 : -1);
  IntegerPolynomial f = bracket.divide_by_x();
  if (f.degree() != k - 3)
    throw internal_fault("build_F: degree is not k-3");
  return f;
}

IntegerPolynomial build_G(int k, int t) {
  if (k < 3 || t < 2 || t > k)
    throw std::invalid_argument("build_G: need k >= 3 and 2 <= t <= k");
  IntegerPolynomial x = IntegerPolynomial::monomial(1);

  IntegerPolynomial bracket1;
  for (int j = 0; j <= t - 1; ++j)
    bracket1 = bracket1 + x_minus_one_pow(k - j) * binomial(k, j);
  BigInt tail = binomial(k - 1, t - 1);
  bracket1 = bracket1 +
             IntegerPolynomial::constant((k - t) % 2 == 0 ? tail : -tail);

  IntegerPolynomial bracket2 = x.pow(k);
  for (int j = t; j <= k - 1; ++j) {
    BigInt c = binomial(k, j) * binomial(j - 1, t - 1);
    IntegerPolynomial term = IntegerPolynomial::monomial(k - j, c);
    if ((j - t) % 2 == 0)
      bracket2 = bracket2 - term;
    else
      bracket2 = bracket2 + term;
  }

  if (!(bracket1 == bracket2))
    throw internal_fault("build_G: the two closed forms disagree");
  IntegerPolynomial g = bracket1.divide_by_x();
  if (g.degree() != k - 1)
    throw internal_fault("build_G: degree is not k-1");
  return g;
}

BigInt eval_poly(const IntegerPolynomial& p, const BigInt& x) {
  return p.eval(x);
}

Rational elementary_symmetric(int j, std::span<const Rational> values) {
  if (j < 0 || j > static_cast<int>(values.size())) return 0;
  std::vector<Rational> e(j + 1);
  e[0] = 1;
  int filled = 0;
  for (const Rational& v : values) {
    ++filled;
    for (int i = std::min(j, filled); i >= 1; --i) e[i] += e[i - 1] * v;
  }
  return e[j];
}

}  // namespace coprimal
