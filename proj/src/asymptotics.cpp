#include "coprimal/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "coprimal/counting.hpp"
#include "coprimal/partitions.hpp"
#include "parallel.hpp"

namespace coprimal {

namespace {

constexpr std::size_t kChunk = 4096;  // fixed, so reductions are reproducible

BigInt int_pow(std::uint64_t base, int e) {
  return boost::multiprecision::pow(BigInt(base), e);
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::span<const std::uint32_t> primes_below(const PrimeTable& table,
                                            std::uint64_t prime_bound) {
  if (prime_bound > table.bound())
    throw std::invalid_argument(
        "prime_bound exceeds the prime table sieve bound");
  const auto& primes = table.primes();
  auto end = std::upper_bound(primes.begin(), primes.end(), prime_bound);
  return {primes.data(), static_cast<std::size_t>(end - primes.begin())};
}

long double abs_coeff_sum(const IntegerPolynomial& p) {
  BigInt s = 0;
  for (const BigInt& c : p.coeffs()) s += abs(c);
  return to_long_double(s);
}

// Chunked product of per-prime factors; factor_fn must return the exact
// rational local factor and is responsible for validity checks.
template <class FactorFn>
EulerProductResult accumulate_euler(std::span<const std::uint32_t> primes,
                                    std::uint64_t prime_bound,
                                    long double tail_coeff_sum, int threads,
                                    FactorFn factor_fn) {
  std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
  std::vector<long double> partial(chunks, 1.0L);
  detail::parallel_for(chunks, threads, [&](std::size_t c) {
    std::size_t lo = c * kChunk;
    std::size_t hi = std::min(primes.size(), lo + kChunk);
    long double prod = 1.0L;
    for (std::size_t i = lo; i < hi; ++i)
      prod *= to_long_double(factor_fn(primes[i]));
    partial[c] = prod;
  });
  long double value = 1.0L;
  for (long double p : partial) value *= p;

  long double tail = 0.0L;
  if (tail_coeff_sum > 0 && prime_bound >= 2) {
    long double pb = static_cast<long double>(prime_bound);
    tail = 2.0L * tail_coeff_sum / (pb * std::log(pb));
  }
  return EulerProductResult{value, prime_bound, tail, primes.size()};
}

Rational factor_C(int k, const IntegerPolynomial& F, std::uint64_t p) {
  BigInt den = int_pow(p, k - 1);
  BigInt num = den - F.eval(BigInt(p));
  if (num <= 0 || num > den)
    throw internal_fault("constant_C: local factor outside (0,1]");
  return Rational(num, den);
}

Rational factor_D(int k, const IntegerPolynomial& G, std::uint64_t p) {
  BigInt den = int_pow(p, k - 1);
  BigInt num = G.eval(BigInt(p));
  if (num <= 0 || num > den)
    throw internal_fault("constant_D: local factor outside (0,1]");
  return Rational(num, den);
}

Rational factor_H(int k, int s, const IntegerPolynomial& F, std::uint64_t p) {
  BigInt den = int_pow(p, k);
  BigInt num = den - (p * F.eval(BigInt(p)) + (k % 2 == 0 ? 1 : -1));
  if (num <= 0)
    throw internal_fault("H_at_ones: non-positive local factor");
  Rational factor(num, den);
  if (!euler_factor_identity_F(k, s, F, p))
    throw internal_fault("H_at_ones: factor fails the (1-1/p)-power identity");
  return factor;
}

Rational factor_L(int k, int t, const IntegerPolynomial& G, std::uint64_t p) {
  BigInt den = int_pow(p, k);
  BigInt c = binomial(k - 1, t - 1);
  if ((k - t + 1) % 2 != 0) c = -c;
  BigInt num = p * G.eval(BigInt(p)) + c;
  if (num <= 0)
    throw internal_fault("L_at_ones: non-positive local factor");
  Rational factor(num, den);
  if (!euler_factor_identity_G(k, t, G, p))
    throw internal_fault("L_at_ones: factor fails the symmetric-form identity");
  return factor;
}

void require_split_args(int k, int s, const char* who) {
  if (k < 3 || s < 1 || s > k - 1)
    throw std::invalid_argument(std::string(who) +
                                ": need k >= 3 and 1 <= s <= k-1");
}

void require_twise_args(int k, int t, const char* who) {
  if (k < 3 || t < 2 || t > k)
    throw std::invalid_argument(std::string(who) +
                                ": need k >= 3 and 2 <= t <= k");
}

}  // namespace

EulerProductResult constant_C(int k, int s, std::uint64_t prime_bound,
                              const PrimeTable& table, int threads) {
  require_split_args(k, s, "constant_C");
  if (prime_bound < 2)
    throw std::invalid_argument("constant_C: prime_bound must be >= 2");
  IntegerPolynomial F = build_F(k, s);
  auto primes = primes_below(table, prime_bound);
  return accumulate_euler(primes, prime_bound, abs_coeff_sum(F), threads,
                          [&](std::uint64_t p) { return factor_C(k, F, p); });
}

EulerProductResult constant_D(int k, int t, std::uint64_t prime_bound,
                              const PrimeTable& table, int threads) {
  require_twise_args(k, t, "constant_D");
  if (prime_bound < 2)
    throw std::invalid_argument("constant_D: prime_bound must be >= 2");
  IntegerPolynomial G = build_G(k, t);
  IntegerPolynomial deviation =
      IntegerPolynomial::monomial(k - 1) - G;  // degree <= k-3
  auto primes = primes_below(table, prime_bound);
  return accumulate_euler(primes, prime_bound, abs_coeff_sum(deviation),
                          threads,
                          [&](std::uint64_t p) { return factor_D(k, G, p); });
}

EulerProductResult H_at_ones(int k, int s, std::uint64_t prime_bound,
                             const PrimeTable& table, int threads) {
  require_split_args(k, s, "H_at_ones");
  IntegerPolynomial F = build_F(k, s);
  IntegerPolynomial numerator_dev =
      IntegerPolynomial::monomial(1) * F +
      IntegerPolynomial::constant(k % 2 == 0 ? 1 : -1);
  auto primes = primes_below(table, prime_bound);
  return accumulate_euler(primes, prime_bound, abs_coeff_sum(numerator_dev),
                          threads,
                          [&](std::uint64_t p) { return factor_H(k, s, F, p); });
}

EulerProductResult L_at_ones(int k, int t, std::uint64_t prime_bound,
                             const PrimeTable& table, int threads) {
  require_twise_args(k, t, "L_at_ones");
  IntegerPolynomial G = build_G(k, t);
  BigInt c = binomial(k - 1, t - 1);
  if ((k - t + 1) % 2 != 0) c = -c;
  IntegerPolynomial deviation = IntegerPolynomial::monomial(k) -
                                (IntegerPolynomial::monomial(1) * G +
                                 IntegerPolynomial::constant(c));
  auto primes = primes_below(table, prime_bound);
  return accumulate_euler(primes, prime_bound, abs_coeff_sum(deviation),
                          threads,
                          [&](std::uint64_t p) { return factor_L(k, t, G, p); });
}

Rational local_f(int k, int s, std::uint64_t n, const PrimeTable& table) {
  require_split_args(k, s, "local_f");
  if (n == 0) throw std::invalid_argument("local_f: n must be positive");
  IntegerPolynomial F = build_F(k, s);
  Rational prod = 1;
  for (const auto& [p, e] : table.factorize(n).entries) {
    BigInt den = int_pow(p, k - 1) - F.eval(BigInt(p));
    if (den <= 0)
      throw internal_fault("local_f: p^{k-1} - F(p) is not positive");
    prod *= Rational(den + (k % 2 == 1 ? 1 : -1), den);
  }
  return prod;
}

Rational local_g(int k, int t, std::uint64_t n, const PrimeTable& table) {
  require_twise_args(k, t, "local_g");
  if (n == 0) throw std::invalid_argument("local_g: n must be positive");
  IntegerPolynomial G = build_G(k, t);
  BigInt c = binomial(k - 1, t - 1);
  if ((k - t + 1) % 2 != 0) c = -c;
  Rational prod = 1;
  for (const auto& [p, e] : table.factorize(n).entries) {
    BigInt den = G.eval(BigInt(p));
    if (den <= 0) throw internal_fault("local_g: G(p) is not positive");
    BigInt num = den + c;
    if (num <= 0) throw internal_fault("local_g: non-positive local factor");
    prod *= Rational(num, den);
  }
  return prod;
}

long double main_term_A(std::uint64_t n, int k, int s,
                        const EulerProductResult& C, const PrimeTable& table) {
  if (n < static_cast<std::uint64_t>(k))
    throw std::invalid_argument("main_term_A: requires n >= k");
  Rational exact = local_f(k, s, n, table) *
                   Rational(int_pow(n, k - 1), factorial(k - 1));
  return C.value * to_long_double(exact);
}

long double main_term_B(std::uint64_t n, int k, int t,
                        const EulerProductResult& D, const PrimeTable& table) {
  if (n < static_cast<std::uint64_t>(k))
    throw std::invalid_argument("main_term_B: requires n >= k");
  Rational exact = local_g(k, t, n, table) *
                   Rational(int_pow(n, k - 1), factorial(k - 1));
  return D.value * to_long_double(exact);
}

namespace {

// Shared tuple-sum side of the T_delta / V_delta reports.
template <class WeightFn>
long double constrained_tuple_sum(int k, std::uint64_t delta,
                                  std::uint64_t j_bound,
                                  const PrimeTable& table, WeightFn weight) {
  std::vector<char> usable(j_bound + 1, 0);
  for (std::uint64_t j = 1; j <= j_bound; ++j)
    usable[j] = table.is_squarefree(j) && std::gcd(j, delta) == 1;

  std::vector<std::uint64_t> tuple(k, 1);
  long double sum = 0.0L;
  auto recurse = [&](auto&& self, int pos, std::uint64_t g,
                     long double denom) -> void {
    if (pos == k) {
      if (g != 1) return;
      long long w = weight(tuple);
      if (w != 0) sum += static_cast<long double>(w) / denom;
      return;
    }
    for (std::uint64_t j = 1; j <= j_bound; ++j) {
      if (!usable[j]) continue;
      tuple[pos] = j;
      self(self, pos + 1, std::gcd(g, j), denom * j);
    }
  };
  recurse(recurse, 0, 0, 1.0L);
  return sum;
}

}  // namespace

std::pair<long double, long double> T_delta_check(
    int k, int s, std::uint64_t delta, std::uint64_t j_bound,
    std::uint64_t product_prime_bound, const PrimeTable& table) {
  require_split_args(k, s, "T_delta_check");
  if (delta == 0 || !table.is_squarefree(delta))
    throw std::invalid_argument("T_delta_check: delta must be squarefree");
  long double sum = constrained_tuple_sum(
      k, delta, j_bound, table,
      [&](std::span<const std::uint64_t> j) { return lambda(k, s, j, table); });

  if (product_prime_bound == 0) product_prime_bound = j_bound;
  IntegerPolynomial F = build_F(k, s);
  long double product = 1.0L;
  for (std::uint32_t p : primes_below(table, product_prime_bound)) {
    if (delta % p == 0) continue;
    product *= to_long_double(factor_C(k, F, p));
  }
  return {sum, product};
}

std::pair<long double, long double> V_delta_check(
    int k, int t, std::uint64_t delta, std::uint64_t j_bound,
    std::uint64_t product_prime_bound, const PrimeTable& table) {
  require_twise_args(k, t, "V_delta_check");
  if (delta == 0 || !table.is_squarefree(delta))
    throw std::invalid_argument("V_delta_check: delta must be squarefree");
  long double sum = constrained_tuple_sum(
      k, delta, j_bound, table,
      [&](std::span<const std::uint64_t> j) { return psi(k, t, j, table); });

  if (product_prime_bound == 0) product_prime_bound = j_bound;
  IntegerPolynomial G = build_G(k, t);
  long double product = 1.0L;
  for (std::uint32_t p : primes_below(table, product_prime_bound)) {
    if (delta % p == 0) continue;
    product *= to_long_double(factor_D(k, G, p));
  }
  return {sum, product};
}

ScanResult residual_scan(const CoprimalityConstraint& constraint,
                         std::span<const std::uint64_t> n_list,
                         WorkBudget& budget, std::uint64_t prime_bound,
                         int threads, const PrimeTable& table) {
  constraint.validate();
  int k = constraint.k;
  for (std::uint64_t n : n_list)
    if (n < static_cast<std::uint64_t>(k))
      throw std::invalid_argument("residual_scan: every n must be >= k");

  EulerProductResult product{1.0L, prime_bound, 0.0L, 0};
  if (constraint.kind == ConstraintKind::SplitCoprime)
    product = constant_C(k, constraint.param, prime_bound, table, threads);
  else if (constraint.kind == ConstraintKind::TWiseCoprime)
    product = constant_D(k, constraint.param, prime_bound, table, threads);

  // Feasibility guard: the enumeration visits at most ~k * binom(n-1, k-1)
  // nodes; rows past the budget are dropped, not attempted.
  std::size_t accepted = 0;
  BigInt planned = 0;
  BigInt available = budget.remaining();
  while (accepted < n_list.size()) {
    BigInt estimate =
        k * binomial(n_list[accepted] - 1, k - 1) + 1024;
    if (planned + estimate > available) break;
    planned += estimate;
    ++accepted;
  }

  ScanResult result;
  result.truncated = accepted < n_list.size();
  result.rows.resize(accepted);
  std::vector<std::uint64_t> actual_work(accepted, 0);

  detail::parallel_for(accepted, threads, [&](std::size_t i) {
    std::uint64_t n = n_list[i];
    WorkBudget local;  // row-level guard already applied above
    local.limit = UINT64_MAX;
    BigInt exact = brute_count(n, constraint, local, table);
    long double main = 0.0L;
    switch (constraint.kind) {
      case ConstraintKind::AllCoprime:
        main = to_long_double(
            Rational(jordan_totient(k - 1, n), factorial(k - 1)));
        break;
      case ConstraintKind::SplitCoprime:
        main = main_term_A(n, k, constraint.param, product, table);
        break;
      case ConstraintKind::TWiseCoprime:
        main = main_term_B(n, k, constraint.param, product, table);
        break;
    }
    long double residual = to_long_double(exact) - main;
    long double normalized =
        residual / std::pow(static_cast<long double>(n),
                            static_cast<long double>(k - 2));
    result.rows[i] = ResidualRow{n, std::move(exact), main, residual, normalized};
    actual_work[i] = local.used;
  });

  for (std::uint64_t w : actual_work) budget.used += w;  // guard was upfront
  return result;
}

bool euler_factor_identity_F(int k, int s, const IntegerPolynomial& F,
                             std::uint64_t p) {
  auto rpow = [&](int e) {
    return Rational(boost::multiprecision::pow(BigInt(p) - 1, e),
                    int_pow(p, e));
  };
  Rational lhs = rpow(s) + rpow(k - s) - rpow(k);
  BigInt den = int_pow(p, k);
  BigInt num = den - (p * F.eval(BigInt(p)) + (k % 2 == 0 ? 1 : -1));
  return lhs == Rational(num, den);
}

bool euler_factor_identity_G(int k, int t, const IntegerPolynomial& G,
                             std::uint64_t p) {
  // e_j(1/p,...,1/p) = C(k,j) / p^j
  Rational lhs = 1;
  for (int j = t; j <= k; ++j) {
    Rational term(binomial(k, j) * binomial(j - 1, t - 1), int_pow(p, j));
    if ((j - t) % 2 == 0)
      lhs -= term;
    else
      lhs += term;
  }
  BigInt c = binomial(k - 1, t - 1);
  if ((k - t + 1) % 2 != 0) c = -c;
  return lhs == Rational(p * G.eval(BigInt(p)) + c, int_pow(p, k));
}

}  // namespace coprimal
