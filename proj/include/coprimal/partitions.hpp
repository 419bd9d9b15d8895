#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coprimal/numbers.hpp"

namespace coprimal {

// Weights a_1..a_k of the linear form a_1 x_1 + ... + a_k x_k. All entries
// >= 1, k >= 1; gcd is computed on construction.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::uint64_t> entries);

  const std::vector<std::uint64_t>& entries() const { return a_; }
  int k() const { return static_cast<int>(a_.size()); }
  std::uint64_t gcd() const { return gcd_; }
  std::uint64_t sum() const { return sum_; }
  std::uint64_t lcm() const;  // throws on uint64 overflow
  BigInt product() const;

 private:
  std::vector<std::uint64_t> a_;
  std::uint64_t gcd_;
  std::uint64_t sum_;
};

struct QuasiPolyReport {
  std::uint64_t period;           // lcm(a_1..a_k)
  int degree;                     // k - 1
  BigInt max_abs_kth_difference;  // 0 iff quasi-polynomial on tested range
};

// P(n;a): solutions of a.x = n over nonnegative integers. Exact, DP over the
// coin-problem recurrence, one pass per weight.
BigInt count_nonneg(std::uint64_t n, const WeightVector& a);

// N(n;a): solutions over positive integers; N(n;a) = P(n - sum(a); a).
BigInt count_positive(std::uint64_t n, const WeightVector& a);

// n^{k-1} / ((k-1)! a_1...a_k), the uniform main term. Requires gcd(a) = 1.
Rational main_term(std::uint64_t n, const WeightVector& a);

// (c_{k-1}, c_{k-2}) of the polynomial part of P(.;a). Requires gcd(a) = 1
// and k >= 2.
std::pair<Rational, Rational> leading_coeffs(const WeightVector& a);

// Verifies the degree-(k-1), period-lcm(a) quasi-polynomial structure by
// taking the k-th finite difference with step lcm(a) over [0, n_max - k*lcm].
QuasiPolyReport quasipoly_check(const WeightVector& a, std::uint64_t n_max);

}  // namespace coprimal
