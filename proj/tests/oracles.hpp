// Independent reference implementations used only by tests. Everything here
// is written against the standard library alone so the oracles share no code
// with the paths they check.
#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace oracles {

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) primes.push_back(n);
  }
  return primes;
}

inline bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Pascal-triangle binomial, additive only.
inline std::uint64_t pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows[n][k];
}

// Euler phi by counting units.
inline std::uint64_t phi_by_enumeration(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return count;
}

// Signed Stirling numbers via the recurrence table only.
inline long long stirling_table(int n, int k) {
  std::vector<std::vector<long long>> s(n + 1);
  for (int i = 0; i <= n; ++i) s[i].assign(n + 1, 0);
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      long long v = j >= 1 ? s[i - 1][j - 1] : 0;
      s[i][j] = v - (i - 1) * s[i - 1][j];
    }
  return s[n][k];
}

// Nonnegative solutions of a.x = n by nested enumeration.
inline std::uint64_t nonneg_solutions(std::uint64_t n,
                                      std::span<const std::uint64_t> a) {
  if (a.empty()) return n == 0 ? 1 : 0;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; a[0] * x <= n; ++x)
    count += nonneg_solutions(n - a[0] * x, a.subspan(1));
  return count;
}

// Positive solutions of a.x = n by nested enumeration.
inline std::uint64_t positive_solutions(std::uint64_t n,
                                        std::span<const std::uint64_t> a) {
  if (a.empty()) return n == 0 ? 1 : 0;
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; a[0] * x + (a.size() - 1) <= n; ++x)
    count += positive_solutions(n - a[0] * x, a.subspan(1));
  return count;
}

enum class Family { AllCoprime, Split, TWise };

// Counts k-compositions of n under a coprimality constraint by enumerating
// every tuple in [1, n]^k and checking the defining condition verbatim.
inline std::uint64_t compositions_by_definition(std::uint64_t n, int k,
                                                Family family, int param) {
  std::vector<std::uint64_t> x(k, 1);
  std::uint64_t count = 0;
  auto ok = [&]() {
    switch (family) {
      case Family::AllCoprime: {
        std::uint64_t g = 0;
        for (std::uint64_t v : x) g = std::gcd(g, v);
        return g == 1;
      }
      case Family::Split: {
        // gcd of the two block products, exactly as defined; block products
        // stay small at oracle scales.
        unsigned long long p1 = 1, p2 = 1;
        for (int i = 0; i < param; ++i) p1 *= x[i];
        for (int i = param; i < k; ++i) p2 *= x[i];
        return std::gcd(p1, p2) == 1ull;
      }
      case Family::TWise: {
        // every t-subset has gcd 1
        int t = param;
        std::vector<int> idx(t);
        auto subsets = [&](auto&& self, int pos, int start) -> bool {
          if (pos == t) {
            std::uint64_t g = 0;
            for (int i : idx) g = std::gcd(g, x[i]);
            return g == 1;
          }
          for (int i = start; i < k; ++i) {
            idx[pos] = i;
            if (!self(self, pos + 1, i + 1)) return false;
          }
          return true;
        };
        return subsets(subsets, 0, 0);
      }
    }
    return false;
  };
  auto rec = [&](auto&& self, int pos, std::uint64_t sum) -> void {
    if (pos == k) {
      if (sum == n && ok()) ++count;
      return;
    }
    for (std::uint64_t v = 1; sum + v <= n; ++v) {
      x[pos] = v;
      self(self, pos + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace oracles
