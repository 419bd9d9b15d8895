#include "coprimal/counting.hpp"

#include <numeric>
#include <stdexcept>

#include "coprimal/partitions.hpp"

namespace coprimal {

namespace {

constexpr std::uint64_t kChargeBlock = 1 << 16;

// Enumeration state shared across the recursion. Coordinates fit in 32 bits;
// anything larger is far beyond brute-force feasibility anyway.
struct BruteEngine {
  int k;
  ConstraintKind kind;
  int param;  // s or t
  const PrimeTable* table;
  std::vector<std::uint32_t> x;
  std::vector<std::uint64_t> prefix_gcd;
  std::uint64_t count = 0;
  std::uint64_t steps = 0;
  WorkBudget* budget;
  std::vector<std::pair<std::uint32_t, int>> incidence;  // scratch for t >= 3

  void flush() {
    budget->charge(steps);
    steps = 0;
  }
  void step() {
    if (++steps == kChargeBlock) flush();
  }

  bool prefix_ok(int pos) {
    std::uint32_t v = x[pos];
    switch (kind) {
      case ConstraintKind::AllCoprime:
        prefix_gcd[pos] =
            pos == 0 ? v : std::gcd(prefix_gcd[pos - 1], std::uint64_t(v));
        return true;
      case ConstraintKind::SplitCoprime:
        if (pos >= param) {
          for (int j = 0; j < param; ++j)
            if (std::gcd(x[j], v) != 1) return false;
        }
        return true;
      case ConstraintKind::TWiseCoprime:
        if (param == 2) {
          for (int j = 0; j < pos; ++j)
            if (std::gcd(x[j], v) != 1) return false;
        }
        return true;
    }
    return false;
  }

  bool leaf_ok() {
    std::uint32_t v = x[k - 1];
    switch (kind) {
      case ConstraintKind::AllCoprime:
        return std::gcd(prefix_gcd[k - 2], std::uint64_t(v)) == 1;
      case ConstraintKind::SplitCoprime:
        for (int j = 0; j < param; ++j)
          if (std::gcd(x[j], v) != 1) return false;
        return true;
      case ConstraintKind::TWiseCoprime:
        if (param == 2) {
          for (int j = 0; j < k - 1; ++j)
            if (std::gcd(x[j], v) != 1) return false;
          return true;
        }
        return incidence_ok();
    }
    return false;
  }

  // No prime may divide param (= t) or more coordinates.
  bool incidence_ok() {
    incidence.clear();
    for (int i = 0; i < k; ++i) {
      std::uint64_t m = x[i];
      while (m > 1) {
        std::uint32_t p = table->smallest_factor(m);
        while (m % p == 0) m /= p;
        bool found = false;
        for (auto& [q, c] : incidence) {
          if (q == p) {
            if (++c >= param) return false;
            found = true;
            break;
          }
        }
        if (!found) incidence.emplace_back(p, 1);
      }
    }
    return true;
  }

  void recurse(int pos, std::uint64_t rem) {
    if (pos == k - 1) {
      x[pos] = static_cast<std::uint32_t>(rem);
      step();
      if (leaf_ok()) ++count;
      return;
    }
    std::uint64_t hi = rem - (k - pos - 1);  // leave >= 1 for each remaining
    for (std::uint64_t v = 1; v <= hi; ++v) {
      x[pos] = static_cast<std::uint32_t>(v);
      step();
      if (!prefix_ok(pos)) continue;
      recurse(pos + 1, rem - v);
    }
  }
};

BigInt neg_one_pow(int e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

}  // namespace

BigInt total_compositions(std::uint64_t n, int k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("total_compositions: requires n, k >= 1");
  return binomial(n - 1, k - 1);
}

BigInt brute_count(std::uint64_t n, const CoprimalityConstraint& constraint,
                   WorkBudget& budget, const PrimeTable& table) {
  constraint.validate();
  int k = constraint.k;
  if (n < static_cast<std::uint64_t>(k)) return 0;
  if (n > table.bound())
    throw std::invalid_argument("brute_count: n exceeds the prime table bound");

  BruteEngine engine;
  engine.k = k;
  engine.kind = constraint.kind;
  engine.param = constraint.param;
  engine.table = &table;
  engine.x.assign(k, 0);
  engine.prefix_gcd.assign(k, 0);
  engine.budget = &budget;
  engine.recurse(0, n);
  engine.flush();
  return BigInt(engine.count);
}

BigInt brute_count(const CountQuery& q, WorkBudget& budget,
                   const PrimeTable& table) {
  if (q.method != Method::BruteForce)
    throw std::invalid_argument("brute_count: query method is not BruteForce");
  return brute_count(q.n, q.constraint, budget, table);
}

BigInt mobius_R(std::uint64_t n, int k) {
  if (n < 1 || k < 2)
    throw std::invalid_argument("mobius_R: requires n >= 1, k >= 2");
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) sum += binomial(d - 1, k - 1) * mobius(n / d);
  return sum;
}

std::vector<BigInt> a_coefficients(int k) {
  if (k < 2) throw std::invalid_argument("a_coefficients: requires k >= 2");
  std::vector<BigInt> stirling_row(k);  // s(k-1, j) for j = 0..k-1
  for (int j = 0; j < k; ++j) stirling_row[j] = stirling_first_signed(k - 1, j);
  std::vector<BigInt> a(k - 1);
  for (int t = 1; t <= k - 1; ++t) {
    BigInt sum = 0;
    for (int j = t; j <= k - 1; ++j)
      sum += neg_one_pow(j - t) * stirling_row[j] * binomial(j, t);
    a[t - 1] = sum;
  }
  return a;
}

BigInt jordan_R(std::uint64_t n, int k) {
  if (k < 2) throw std::invalid_argument("jordan_R: requires k >= 2");
  if (n < static_cast<std::uint64_t>(k))
    throw std::invalid_argument("jordan_R: requires n >= k");
  std::vector<BigInt> a = a_coefficients(k);
  BigInt sum = 0;
  for (int t = 1; t <= k - 1; ++t) sum += a[t - 1] * jordan_totient(t, n);
  BigInt fact = 1;
  for (int i = 2; i <= k - 1; ++i) fact *= i;
  BigInt q = sum / fact;
  if (q * fact != sum)
    throw internal_fault("jordan_R: (k-1)! does not divide the Jordan sum");
  return q;
}

BigInt identity_count(std::uint64_t n, int k, const TupleWeightFn& tuple_weight,
                      const DeltaWeightFn& delta_weight, WorkBudget& budget,
                      const PrimeTable& table) {
  if (k < 2) throw std::invalid_argument("identity_count: requires k >= 2");
  if (n < static_cast<std::uint64_t>(k)) return 0;

  std::vector<char> squarefree(n + 1, 0);
  for (std::uint64_t j = 1; j <= n; ++j)
    squarefree[j] = table.mobius(j) != 0 ? 1 : 0;

  BigInt total = 0;
  for (std::uint64_t delta : divisors(n)) {
    if (!squarefree[delta]) continue;
    std::uint64_t m = n / delta;
    if (m < static_cast<std::uint64_t>(k)) continue;

    std::vector<char> usable(m + 1, 0);
    for (std::uint64_t j = 1; j <= m; ++j)
      usable[j] = squarefree[j] && std::gcd(j, delta) == 1;

    std::vector<std::uint64_t> tuple(k, 0);
    BigInt inner = 0;
    auto recurse = [&](auto&& self, int pos, std::uint64_t used,
                       std::uint64_t g) -> void {
      if (pos == k) {
        if (g != 1) return;
        budget.charge();
        long long w = tuple_weight(tuple);
        if (w != 0)
          inner += BigInt(w) * count_positive(m, WeightVector(tuple));
        return;
      }
      std::uint64_t hi = m - used - (k - pos - 1);
      for (std::uint64_t j = 1; j <= hi; ++j) {
        if (!usable[j]) continue;
        tuple[pos] = j;
        self(self, pos + 1, used + j, std::gcd(g, j));
      }
    };
    recurse(recurse, 0, 0, 0);

    total += delta_weight(table.factorize(delta).omega()) * inner;
  }
  return total;
}

BigInt identity_A(std::uint64_t n, int k, int s, WorkBudget& budget,
                  const PrimeTable& table) {
  if (k < 3) throw std::invalid_argument("identity_A: requires k >= 3");
  CoprimalityConstraint::split(k, s);  // validates s
  return identity_count(
      n, k,
      [k, s, &table](std::span<const std::uint64_t> j) {
        return lambda(k, s, j, table);
      },
      [k](int w) { return neg_one_pow((k - 1) * w); }, budget, table);
}

BigInt identity_B(std::uint64_t n, int k, int t, WorkBudget& budget,
                  const PrimeTable& table) {
  if (k < 3) throw std::invalid_argument("identity_B: requires k >= 3");
  CoprimalityConstraint::t_wise(k, t);  // validates t
  BigInt base = neg_one_pow(k - t + 1) * binomial(k - 1, t - 1);
  return identity_count(
      n, k,
      [k, t, &table](std::span<const std::uint64_t> j) {
        return psi(k, t, j, table);
      },
      [base](int w) { return boost::multiprecision::pow(base, w); }, budget,
      table);
}

BigInt identity_count_for(std::uint64_t n, const CoprimalityConstraint& c,
                          WorkBudget& budget, const PrimeTable& table) {
  c.validate();
  if (n < static_cast<std::uint64_t>(c.k)) return 0;
  switch (c.kind) {
    case ConstraintKind::AllCoprime:
      return mobius_R(n, c.k);
    case ConstraintKind::SplitCoprime:
      return identity_A(n, c.k, c.param, budget, table);
    case ConstraintKind::TWiseCoprime:
      return identity_B(n, c.k, c.param, budget, table);
  }
  throw std::invalid_argument("identity_count_for: unknown constraint");
}

}  // namespace coprimal
