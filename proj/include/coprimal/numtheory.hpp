#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coprimal/numbers.hpp"

namespace coprimal {

// Prime-power factorization. Primes strictly increasing, exponents >= 1;
// the empty sequence represents n = 1.
struct Factorization {
  std::vector<std::pair<std::uint64_t, int>> entries;

  int omega() const { return static_cast<int>(entries.size()); }
  bool is_squarefree() const;
  std::uint64_t value() const;
};

// Sieve built once (smallest prime factor up to `bound`); every query on a
// fully constructed table is const and safe to run from multiple threads.
// Factorization works for any n < bound^2 via trial division by the sieved
// primes.
class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultBound = 1'000'000;

  explicit PrimeTable(std::uint64_t bound = kDefaultBound);

  std::uint64_t bound() const { return bound_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // All primes <= limit, ascending. limit may not exceed bound().
  std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) const;

  bool is_prime(std::uint64_t n) const;
  Factorization factorize(std::uint64_t n) const;
  int mobius(std::uint64_t n) const;
  bool is_squarefree(std::uint64_t n) const { return mobius(n) != 0; }

  // Smallest prime factor of n, for 2 <= n <= bound().
  std::uint32_t smallest_factor(std::uint64_t n) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> spf_;  // smallest prime factor, index <= bound_
  std::vector<std::uint32_t> primes_;
};

// Process-wide table at the default bound, built on first use.
const PrimeTable& default_table();

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);
Factorization factorize(std::uint64_t n);
int mobius(std::uint64_t n);
int omega(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// J_t(n) = n^t * prod_{p|n} (1 - 1/p^t), exact.
BigInt jordan_totient(int t, std::uint64_t n);

// Signed Stirling numbers of the first kind, s(n+1,k) = s(n,k-1) - n*s(n,k).
BigInt stirling_first_signed(int n, int k);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace coprimal
