#include "coprimal/partitions.hpp"

#include <numeric>
#include <stdexcept>

#include "coprimal/common.hpp"
#include "coprimal/numtheory.hpp"

namespace coprimal {

WeightVector::WeightVector(std::vector<std::uint64_t> entries)
    : a_(std::move(entries)), gcd_(0), sum_(0) {
  if (a_.empty())
    throw std::invalid_argument("WeightVector: need at least one weight");
  for (std::uint64_t w : a_) {
    if (w == 0) throw std::invalid_argument("WeightVector: weights must be >= 1");
    gcd_ = std::gcd(gcd_, w);
    sum_ += w;
  }
}

std::uint64_t WeightVector::lcm() const {
  std::uint64_t l = 1;
  for (std::uint64_t w : a_) {
    std::uint64_t g = std::gcd(l, w);
    std::uint64_t q = l / g;
    if (w != 0 && q > UINT64_MAX / w)
      throw std::overflow_error("WeightVector::lcm overflows 64 bits");
    l = q * w;
  }
  return l;
}

BigInt WeightVector::product() const {
  BigInt p = 1;
  for (std::uint64_t w : a_) p *= w;
  return p;
}

BigInt count_nonneg(std::uint64_t n, const WeightVector& a) {
  std::vector<BigInt> dp(n + 1);
  dp[0] = 1;
  for (std::uint64_t w : a.entries()) {
    for (std::uint64_t m = w; m <= n; ++m) dp[m] += dp[m - w];
  }
  return dp[n];
}

BigInt count_positive(std::uint64_t n, const WeightVector& a) {
  if (n < a.sum()) return 0;
  return count_nonneg(n - a.sum(), a);
}

Rational main_term(std::uint64_t n, const WeightVector& a) {
  if (a.gcd() != 1)
    throw std::invalid_argument("main_term: requires gcd(a) = 1");
  if (n == 0) throw std::invalid_argument("main_term: n must be positive");
  int k = a.k();
  BigInt num = boost::multiprecision::pow(BigInt(n), k - 1);
  BigInt den = a.product();
  for (int i = 2; i <= k - 1; ++i) den *= i;
  return Rational(num, den);
}

std::pair<Rational, Rational> leading_coeffs(const WeightVector& a) {
  if (a.gcd() != 1)
    throw std::invalid_argument("leading_coeffs: requires gcd(a) = 1");
  int k = a.k();
  if (k < 2) throw std::invalid_argument("leading_coeffs: requires k >= 2");
  BigInt prod = a.product();
  BigInt fact = 1;  // (k-2)!
  for (int i = 2; i <= k - 2; ++i) fact *= i;
  Rational c_top(1, fact * (k - 1) * prod);
  Rational c_next(BigInt(a.sum()), 2 * fact * prod);
  return {c_top, c_next};
}

QuasiPolyReport quasipoly_check(const WeightVector& a, std::uint64_t n_max) {
  if (a.gcd() != 1)
    throw std::invalid_argument("quasipoly_check: requires gcd(a) = 1");
  int k = a.k();
  std::uint64_t period = a.lcm();
  if (n_max < static_cast<std::uint64_t>(k + 1) * period)
    throw std::invalid_argument(
        "quasipoly_check: n_max too small to form a k-th difference");

  // One DP pass gives P(m;a) for every m <= n_max.
  std::vector<BigInt> dp(n_max + 1);
  dp[0] = 1;
  for (std::uint64_t w : a.entries())
    for (std::uint64_t m = w; m <= n_max; ++m) dp[m] += dp[m - w];

  std::vector<BigInt> binom(k + 1);
  for (int i = 0; i <= k; ++i) binom[i] = binomial(k, i);

  BigInt max_abs = 0;
  for (std::uint64_t n = 0; n + static_cast<std::uint64_t>(k) * period <= n_max;
       ++n) {
    BigInt diff = 0;
    for (int i = 0; i <= k; ++i) {
      BigInt term = binom[i] * dp[n + static_cast<std::uint64_t>(i) * period];
      if ((k - i) % 2 == 0)
        diff += term;
      else
        diff -= term;
    }
    if (abs(diff) > max_abs) max_abs = abs(diff);
  }
  return QuasiPolyReport{period, k - 1, max_abs};
}

}  // namespace coprimal
