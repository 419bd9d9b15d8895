#include "coprimal/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace coprimal {

bool Factorization::is_squarefree() const {
  for (const auto& [p, e] : entries)
    if (e > 1) return false;
  return true;
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : entries)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

PrimeTable::PrimeTable(std::uint64_t bound) : bound_(bound) {
  if (bound_ < 2) bound_ = 2;
  spf_.assign(bound_ + 1, 0);
  for (std::uint64_t i = 2; i <= bound_; ++i) {
    if (spf_[i] == 0) {
      primes_.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i; j <= bound_; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<std::uint32_t> PrimeTable::primes_up_to(std::uint64_t limit) const {
  if (limit > bound_)
    throw std::invalid_argument("primes_up_to: limit exceeds sieve bound");
  auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
  return {primes_.begin(), end};
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n < 2) return false;
  if (n <= bound_) return spf_[n] == n;
  if (n > bound_ * bound_)
    throw std::domain_error("is_prime: n exceeds sieve bound squared");
  for (std::uint32_t p : primes_) {
    if (static_cast<std::uint64_t>(p) * p > n) break;
    if (n % p == 0) return false;
  }
  return true;
}

Factorization PrimeTable::factorize(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  if (n <= bound_) {
    while (n > 1) {
      std::uint32_t p = spf_[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.entries.emplace_back(p, e);
    }
    return f;
  }
  for (std::uint32_t p : primes_) {
    if (static_cast<std::uint64_t>(p) * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.entries.emplace_back(p, e);
    }
  }
  if (n > 1) {
    // Any composite remainder would have two factors > bound_.
    if (n > bound_ * bound_)
      throw std::domain_error("factorize: n exceeds sieve bound squared");
    f.entries.emplace_back(n, 1);
  }
  return f;
}

std::uint32_t PrimeTable::smallest_factor(std::uint64_t n) const {
  if (n < 2 || n > bound_)
    throw std::invalid_argument("smallest_factor: n outside sieve range");
  return spf_[n];
}

int PrimeTable::mobius(std::uint64_t n) const {
  Factorization f = factorize(n);
  if (!f.is_squarefree()) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}

const PrimeTable& default_table() {
  static const PrimeTable table(PrimeTable::kDefaultBound);
  return table;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) return {};
  if (limit <= default_table().bound())
    return default_table().primes_up_to(limit);
  return PrimeTable(limit).primes_up_to(limit);
}

Factorization factorize(std::uint64_t n) { return default_table().factorize(n); }

int mobius(std::uint64_t n) { return default_table().mobius(n); }

int omega(std::uint64_t n) { return default_table().factorize(n).omega(); }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  Factorization f = default_table().factorize(n);
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : f.entries) {
    std::size_t base = divs.size();
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

BigInt jordan_totient(int t, std::uint64_t n) {
  if (t < 1) throw std::invalid_argument("jordan_totient: t must be >= 1");
  if (n == 0) throw std::invalid_argument("jordan_totient: n must be positive");
  Factorization f = default_table().factorize(n);
  BigInt result = 1;
  for (const auto& [p, e] : f.entries) {
    BigInt pt = boost::multiprecision::pow(BigInt(p), t);
    // p^{t e} - p^{t (e-1)} = p^{t(e-1)} (p^t - 1)
    result *= boost::multiprecision::pow(pt, e - 1) * (pt - 1);
  }
  return result;
}

BigInt stirling_first_signed(int n, int k) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("stirling_first_signed: negative argument");
  if (k > n) return 0;
  std::vector<BigInt> row{1};  // s(0,0)
  for (int m = 0; m < n; ++m) {
    std::vector<BigInt> next(m + 2);
    for (int j = 0; j <= m + 1; ++j) {
      BigInt v = 0;
      if (j >= 1) v += row[j - 1];
      if (j <= m) v -= m * row[j];
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers
  }
  return result;
}

}  // namespace coprimal
