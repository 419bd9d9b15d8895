#include "coprimal/multifunc.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "coprimal/common.hpp"
#include "coprimal/numbers.hpp"

namespace coprimal {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("multiplicative value overflows 64 bits");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("convolution sum overflows 64 bits");
  return r;
}

void require_pattern(int k, const ExponentTuple& nu, const char* who) {
  if (k < 2) throw std::invalid_argument(std::string(who) + ": requires k >= 2");
  if (nu.k() != k)
    throw std::invalid_argument(std::string(who) + ": pattern length != k");
  for (int v : nu.nu)
    if (v < 0) throw std::invalid_argument(std::string(who) + ": negative exponent");
}

void require_split(int k, int s, const char* who) {
  if (s < 1 || s > k - 1)
    throw std::invalid_argument(std::string(who) + ": requires 1 <= s <= k-1");
}

void require_twise(int k, int t, const char* who) {
  if (t < 2 || t > k)
    throw std::invalid_argument(std::string(who) + ": requires 2 <= t <= k");
}

void require_tuple(int k, std::span<const std::uint64_t> tuple, const char* who) {
  if (static_cast<int>(tuple.size()) != k)
    throw std::invalid_argument(std::string(who) + ": tuple length != k");
  for (std::uint64_t v : tuple)
    if (v == 0)
      throw std::invalid_argument(std::string(who) + ": entries must be positive");
}

}  // namespace

CoprimalityConstraint CoprimalityConstraint::all_coprime(int k) {
  CoprimalityConstraint c{ConstraintKind::AllCoprime, k, 0};
  c.validate();
  return c;
}

CoprimalityConstraint CoprimalityConstraint::split(int k, int s) {
  CoprimalityConstraint c{ConstraintKind::SplitCoprime, k, s};
  c.validate();
  return c;
}

CoprimalityConstraint CoprimalityConstraint::t_wise(int k, int t) {
  CoprimalityConstraint c{ConstraintKind::TWiseCoprime, k, t};
  c.validate();
  return c;
}

void CoprimalityConstraint::validate() const {
  switch (kind) {
    case ConstraintKind::AllCoprime:
      if (k < 2) throw std::invalid_argument("AllCoprime requires k >= 2");
      return;
    case ConstraintKind::SplitCoprime:
      if (k < 2) throw std::invalid_argument("SplitCoprime requires k >= 2");
      require_split(k, param, "SplitCoprime");
      return;
    case ConstraintKind::TWiseCoprime:
      if (k < 2) throw std::invalid_argument("TWiseCoprime requires k >= 2");
      require_twise(k, param, "TWiseCoprime");
      return;
  }
  throw std::invalid_argument("CoprimalityConstraint: unknown kind");
}

std::string CoprimalityConstraint::label() const {
  switch (kind) {
    case ConstraintKind::AllCoprime:
      return "R";
    case ConstraintKind::SplitCoprime:
      return "A:s=" + std::to_string(param);
    case ConstraintKind::TWiseCoprime:
      return "B:t=" + std::to_string(param);
  }
  return "?";
}

int theta_local(int k, int s, const ExponentTuple& nu) {
  require_pattern(k, nu, "theta_local");
  require_split(k, s, "theta_local");
  bool first_zero = true, last_zero = true;
  for (int i = 0; i < s; ++i)
    if (nu.nu[i] != 0) first_zero = false;
  for (int i = s; i < k; ++i)
    if (nu.nu[i] != 0) last_zero = false;
  return (first_zero || last_zero) ? 1 : 0;
}

int rho_local(int k, int t, const ExponentTuple& nu) {
  require_pattern(k, nu, "rho_local");
  require_twise(k, t, "rho_local");
  int hits = 0;
  for (int v : nu.nu)
    if (v >= 1) ++hits;
  return hits <= t - 1 ? 1 : 0;
}

int lambda_local(int k, int s, const ExponentTuple& nu) {
  require_pattern(k, nu, "lambda_local");
  require_split(k, s, "lambda_local");
  int total = 0, first = 0, last = 0;
  for (int i = 0; i < k; ++i) {
    int v = nu.nu[i];
    if (v > 1) return 0;
    total += v;
    if (i < s)
      first += v;
    else
      last += v;
  }
  if (total == 0) return 1;
  if (first >= 1 && last >= 1) return (total - 1) % 2 == 0 ? 1 : -1;
  return 0;
}

int psi_local(int k, int t, const ExponentTuple& nu) {
  require_pattern(k, nu, "psi_local");
  require_twise(k, t, "psi_local");
  int j = 0;
  for (int v : nu.nu) {
    if (v > 1) return 0;
    j += v;
  }
  if (j == 0) return 1;
  if (j < t) return 0;
  BigInt c = binomial(j - 1, t - 1);
  int sign = (j - t + 1) % 2 == 0 ? 1 : -1;
  return sign * c.convert_to<int>();
}

long long eval_multiplicative(std::span<const std::uint64_t> tuple,
                              const LocalFn& local, const PrimeTable& table) {
  int k = static_cast<int>(tuple.size());
  std::map<std::uint64_t, std::vector<int>> patterns;
  for (int i = 0; i < k; ++i) {
    for (const auto& [p, e] : table.factorize(tuple[i]).entries) {
      auto [it, inserted] = patterns.try_emplace(p, std::vector<int>(k, 0));
      it->second[i] = e;
    }
  }
  long long acc = 1;
  for (const auto& [p, pattern] : patterns) {
    long long v = local(ExponentTuple{pattern});
    if (v == 0) return 0;
    acc = checked_mul(acc, v);
  }
  return acc;
}

int theta(int k, int s, std::span<const std::uint64_t> tuple,
          const PrimeTable& table) {
  require_split(k, s, "theta");
  require_tuple(k, tuple, "theta");
  BigInt first = 1, last = 1;
  for (int i = 0; i < s; ++i) first *= tuple[i];
  for (int i = s; i < k; ++i) last *= tuple[i];
  int direct = gcd(first, last) == 1 ? 1 : 0;
  long long local = eval_multiplicative(
      tuple, [k, s](const ExponentTuple& nu) { return theta_local(k, s, nu); },
      table);
  if (direct != local)
    throw internal_fault("theta: direct gcd and prime-local routes disagree");
  return direct;
}

int rho(int k, int t, std::span<const std::uint64_t> tuple,
        const PrimeTable& table) {
  require_twise(k, t, "rho");
  require_tuple(k, tuple, "rho");
  if (k > 30) throw std::invalid_argument("rho: k too large for subset scan");
  int direct = 1;
  for (std::uint32_t mask = 0; mask < (1u << k) && direct; ++mask) {
    if (__builtin_popcount(mask) != t) continue;
    std::uint64_t g = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) g = std::gcd(g, tuple[i]);
    if (g != 1) direct = 0;
  }
  long long local = eval_multiplicative(
      tuple, [k, t](const ExponentTuple& nu) { return rho_local(k, t, nu); },
      table);
  if (direct != local)
    throw internal_fault("rho: direct subset and prime-local routes disagree");
  return direct;
}

long long lambda(int k, int s, std::span<const std::uint64_t> tuple,
                 const PrimeTable& table) {
  require_split(k, s, "lambda");
  require_tuple(k, tuple, "lambda");
  return eval_multiplicative(
      tuple, [k, s](const ExponentTuple& nu) { return lambda_local(k, s, nu); },
      table);
}

long long psi(int k, int t, std::span<const std::uint64_t> tuple,
              const PrimeTable& table) {
  require_twise(k, t, "psi");
  require_tuple(k, tuple, "psi");
  return eval_multiplicative(
      tuple, [k, t](const ExponentTuple& nu) { return psi_local(k, t, nu); },
      table);
}

bool convolution_check(const CoprimalityConstraint& constraint,
                       std::span<const std::uint64_t> tuple,
                       const PrimeTable& table) {
  constraint.validate();
  if (constraint.kind == ConstraintKind::AllCoprime)
    throw std::invalid_argument(
        "convolution_check: constraint must be SplitCoprime or TWiseCoprime");
  int k = constraint.k;
  require_tuple(k, tuple, "convolution_check");

  const bool split = constraint.kind == ConstraintKind::SplitCoprime;
  const int param = constraint.param;

  std::vector<std::vector<std::uint64_t>> divs(k);
  for (int i = 0; i < k; ++i) divs[i] = divisors(tuple[i]);

  std::vector<std::uint64_t> d(k, 1);
  long long sum = 0;
  auto recurse = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      long long w = split ? lambda(k, param, d, table) : psi(k, param, d, table);
      sum = checked_add(sum, w);
      return;
    }
    for (std::uint64_t v : divs[pos]) {
      d[pos] = v;
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);

  long long indicator = split ? theta(k, param, tuple, table)
                              : rho(k, param, tuple, table);
  return sum == indicator;
}

}  // namespace coprimal
