#pragma once

#include <span>
#include <string>
#include <vector>

#include "coprimal/numbers.hpp"

namespace coprimal {

// Dense univariate polynomial with exact integer coefficients, ascending
// degree order. Leading coefficient is nonzero unless the polynomial is zero.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;  // zero polynomial
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);
  static IntegerPolynomial constant(BigInt c);
  static IntegerPolynomial monomial(int degree, BigInt c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;

  IntegerPolynomial operator+(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const BigInt& c) const;
  bool operator==(const IntegerPolynomial& o) const = default;

  IntegerPolynomial pow(int e) const;

  // Exact division by x; throws internal_fault if the constant term is not 0.
  IntegerPolynomial divide_by_x() const;

  BigInt eval(const BigInt& x) const;  // Horner

  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

// F_{k,s}: the bracket x^k + (x-1)^k - x^s (x-1)^{k-s} - x^{k-s} (x-1)^s
// + (-1)^{k-1}, divided exactly by x. Degree k-3. Requires k >= 3,
// 1 <= s <= k-1.
IntegerPolynomial build_F(int k, int s);

// G_{k,t}: built from both closed forms (the binomial sum in (x-1) and the
// alternating sum in x); the two expansions are checked coefficient-wise.
// Degree k-1. Requires k >= 3, 2 <= t <= k.
IntegerPolynomial build_G(int k, int t);

BigInt eval_poly(const IntegerPolynomial& p, const BigInt& x);

// Elementary symmetric polynomial e_j of the given values. e_0 = 1,
// e_j = 0 for j > #values or j < 0.
Rational elementary_symmetric(int j, std::span<const Rational> values);

}  // namespace coprimal
