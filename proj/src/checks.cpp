#include "coprimal/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "coprimal/asymptotics.hpp"
#include "coprimal/counting.hpp"
#include "coprimal/partitions.hpp"
#include "coprimal/polynomials.hpp"

namespace coprimal::checks {

namespace {

const PrimeTable& table_of(const CheckOptions& opt) {
  return opt.table ? *opt.table : default_table();
}

LocalPattern effective_lambda(const CheckOptions& opt) {
  if (opt.lambda_local_fn) return opt.lambda_local_fn;
  return [](int k, int s, const ExponentTuple& nu) {
    return static_cast<long long>(lambda_local(k, s, nu));
  };
}

LocalPattern effective_psi(const CheckOptions& opt) {
  if (opt.psi_local_fn) return opt.psi_local_fn;
  return [](int k, int t, const ExponentTuple& nu) {
    return static_cast<long long>(psi_local(k, t, nu));
  };
}

TupleWeightFn tuple_weight(const LocalPattern& local, int k, int param,
                           const PrimeTable& table) {
  return [&local, k, param, &table](std::span<const std::uint64_t> j) {
    return eval_multiplicative(
        j,
        [&local, k, param](const ExponentTuple& nu) {
          return local(k, param, nu);
        },
        table);
  };
}

// delta coefficient of the identity: value on the all-ones pattern, raised
// to omega(delta).
DeltaWeightFn delta_weight(const LocalPattern& local, int k, int param) {
  ExponentTuple ones{std::vector<int>(k, 1)};
  BigInt diag = local(k, param, ones);
  return [diag](int w) { return boost::multiprecision::pow(diag, w); };
}

std::string fmt_ld(long double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
  return buf;
}

// Least-squares slope of y against x.
long double fit_slope(const std::vector<std::pair<long double, long double>>& pts) {
  long double mx = 0, my = 0;
  for (auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  long double num = 0, den = 0;
  for (auto& [x, y] : pts) {
    num += (x - mx) * (y - my);
    den += (x - mx) * (x - mx);
  }
  return num / den;
}

// Independent positive-solution counter (plain recursion, no DP).
std::uint64_t oracle_positive_solutions(std::uint64_t n,
                                        std::span<const std::uint64_t> a) {
  if (a.size() == 1) return (n >= a[0] && n % a[0] == 0) ? 1 : 0;
  std::uint64_t count = 0;
  std::uint64_t tail_min = 0;
  for (std::size_t i = 1; i < a.size(); ++i) tail_min += a[i];
  for (std::uint64_t x = 1; a[0] * x + tail_min <= n; ++x)
    count += oracle_positive_solutions(n - a[0] * x, a.subspan(1));
  return count;
}

}  // namespace

CheckResult r_family_oracle(const CheckOptions& opt) {
  CheckResult res{"r_family_oracle", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  for (int k = 2; k <= 5; ++k) {
    for (std::uint64_t n = k; n <= 60; ++n) {
      WorkBudget budget;
      BigInt via_mobius = mobius_R(n, k);
      BigInt via_jordan = jordan_R(n, k);
      BigInt via_brute =
          brute_count(n, CoprimalityConstraint::all_coprime(k), budget, table);
      ++res.cases_run;
      if (via_mobius != via_jordan || via_mobius != via_brute) {
        ++res.failures;
        if (opt.stop_on_first_failure) return res;
      }
    }
  }
  return res;
}

CheckResult a_family_oracle(const CheckOptions& opt) {
  CheckResult res{"a_family_oracle", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  LocalPattern local = effective_lambda(opt);
  for (int k = 3; k <= 4; ++k) {
    for (int s = 1; s <= k - 1; ++s) {
      TupleWeightFn weight = tuple_weight(local, k, s, table);
      DeltaWeightFn delta = delta_weight(local, k, s);
      for (std::uint64_t n = k; n <= 30; ++n) {
        WorkBudget budget;
        BigInt via_identity = identity_count(n, k, weight, delta, budget, table);
        WorkBudget budget2;
        BigInt via_brute =
            brute_count(n, CoprimalityConstraint::split(k, s), budget2, table);
        ++res.cases_run;
        if (via_identity != via_brute) {
          ++res.failures;
          if (opt.stop_on_first_failure) return res;
        }
      }
    }
  }
  return res;
}

CheckResult b_family_oracle(const CheckOptions& opt) {
  CheckResult res{"b_family_oracle", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  LocalPattern local = effective_psi(opt);
  for (int k = 3; k <= 4; ++k) {
    for (int t = 2; t <= k; ++t) {
      TupleWeightFn weight = tuple_weight(local, k, t, table);
      DeltaWeightFn delta = delta_weight(local, k, t);
      for (std::uint64_t n = k; n <= 30; ++n) {
        WorkBudget budget;
        BigInt via_identity = identity_count(n, k, weight, delta, budget, table);
        WorkBudget budget2;
        BigInt via_brute =
            brute_count(n, CoprimalityConstraint::t_wise(k, t), budget2, table);
        ++res.cases_run;
        if (via_identity != via_brute) {
          ++res.failures;
          if (opt.stop_on_first_failure) return res;
        }
      }
    }
  }
  return res;
}

CheckResult convolution_identities(const CheckOptions& opt) {
  CheckResult res{"convolution_identities", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  LocalPattern lam = effective_lambda(opt);
  LocalPattern ps = effective_psi(opt);

  constexpr int kMax3 = 36;
  std::vector<std::vector<std::uint64_t>> divs(kMax3 + 1);
  for (std::uint64_t v = 1; v <= kMax3; ++v) divs[v] = divisors(v);

  // k = 3, exhaustive cube of coordinates <= 36 for every s and t.
  struct Param {
    bool is_split;
    int value;
  };
  const Param params3[] = {{true, 1}, {true, 2}, {false, 2}, {false, 3}};
  for (const Param& prm : params3) {
    const LocalPattern& local = prm.is_split ? lam : ps;
    // Memoized tuple weights over the full 36^3 cube.
    std::vector<long long> memo((kMax3 + 1) * (kMax3 + 1) * (kMax3 + 1));
    std::uint64_t d[3];
    for (d[0] = 1; d[0] <= kMax3; ++d[0])
      for (d[1] = 1; d[1] <= kMax3; ++d[1])
        for (d[2] = 1; d[2] <= kMax3; ++d[2]) {
          memo[(d[0] * (kMax3 + 1) + d[1]) * (kMax3 + 1) + d[2]] =
              eval_multiplicative(
                  std::span<const std::uint64_t>(d, 3),
                  [&](const ExponentTuple& nu) { return local(3, prm.value, nu); },
                  table);
        }

    std::uint64_t tup[3];
    for (tup[0] = 1; tup[0] <= kMax3; ++tup[0])
      for (tup[1] = 1; tup[1] <= kMax3; ++tup[1])
        for (tup[2] = 1; tup[2] <= kMax3; ++tup[2]) {
          long long sum = 0;
          for (std::uint64_t a : divs[tup[0]])
            for (std::uint64_t b : divs[tup[1]])
              for (std::uint64_t c : divs[tup[2]])
                sum += memo[(a * (kMax3 + 1) + b) * (kMax3 + 1) + c];
          std::span<const std::uint64_t> t3(tup, 3);
          long long indicator = prm.is_split ? theta(3, prm.value, t3, table)
                                             : rho(3, prm.value, t3, table);
          ++res.cases_run;
          if (sum != indicator) {
            ++res.failures;
            if (opt.stop_on_first_failure) return res;
          }
        }
  }

  // k = 4, seeded random tuples with coordinates <= 24, every s and t.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> coord(1, 24);
  std::vector<std::vector<std::uint64_t>> divs24(25);
  for (std::uint64_t v = 1; v <= 24; ++v) divs24[v] = divisors(v);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t tup[4] = {coord(rng), coord(rng), coord(rng), coord(rng)};
    std::span<const std::uint64_t> t4(tup, 4);
    for (int s = 1; s <= 3; ++s) {
      long long sum = 0;
      std::uint64_t d[4];
      for (std::uint64_t a : divs24[tup[0]]) {
        d[0] = a;
        for (std::uint64_t b : divs24[tup[1]]) {
          d[1] = b;
          for (std::uint64_t c : divs24[tup[2]]) {
            d[2] = c;
            for (std::uint64_t e : divs24[tup[3]]) {
              d[3] = e;
              sum += eval_multiplicative(
                  std::span<const std::uint64_t>(d, 4),
                  [&](const ExponentTuple& nu) { return lam(4, s, nu); }, table);
            }
          }
        }
      }
      ++res.cases_run;
      if (sum != theta(4, s, t4, table)) {
        ++res.failures;
        if (opt.stop_on_first_failure) return res;
      }
    }
    for (int t = 2; t <= 4; ++t) {
      long long sum = 0;
      std::uint64_t d[4];
      for (std::uint64_t a : divs24[tup[0]]) {
        d[0] = a;
        for (std::uint64_t b : divs24[tup[1]]) {
          d[1] = b;
          for (std::uint64_t c : divs24[tup[2]]) {
            d[2] = c;
            for (std::uint64_t e : divs24[tup[3]]) {
              d[3] = e;
              sum += eval_multiplicative(
                  std::span<const std::uint64_t>(d, 4),
                  [&](const ExponentTuple& nu) { return ps(4, t, nu); }, table);
            }
          }
        }
      }
      ++res.cases_run;
      if (sum != rho(4, t, t4, table)) {
        ++res.failures;
        if (opt.stop_on_first_failure) return res;
      }
    }
  }
  return res;
}

CheckResult lambert_partition(const CheckOptions& opt) {
  CheckResult res{"lambert_partition", 0, 0, ""};
  for (int k = 2; k <= 5; ++k) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      BigInt sum = 0;
      for (std::uint64_t d : divisors(n)) sum += mobius_R(n / d, k);
      ++res.cases_run;
      if (sum != binomial(n - 1, k - 1)) {
        ++res.failures;
        if (opt.stop_on_first_failure) return res;
      }
    }
  }
  return res;
}

CheckResult polynomial_structure(const CheckOptions& opt) {
  CheckResult res{"polynomial_structure", 0, 0, ""};
  for (int k = 3; k <= 12; ++k) {
    for (int s = 1; s <= k - 1; ++s) {
      IntegerPolynomial F = build_F(k, s);
      ++res.cases_run;
      if (F.degree() != k - 3) ++res.failures;
      ++res.cases_run;
      if (!(F == build_F(k, k - s))) ++res.failures;
    }
    for (int t = 2; t <= k; ++t) {
      // build_G verifies the two closed forms against each other internally.
      IntegerPolynomial G = build_G(k, t);
      ++res.cases_run;
      if (G.degree() != k - 1) ++res.failures;
    }
    ++res.cases_run;
    if (!(build_G(k, k) == IntegerPolynomial::monomial(k - 1))) ++res.failures;
    if (opt.stop_on_first_failure && res.failures) return res;
  }
  return res;
}

CheckResult euler_factor_identities(const CheckOptions& opt) {
  CheckResult res{"euler_factor_identities", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  auto primes = table.primes_up_to(1000);
  for (int k = 3; k <= 8; ++k) {
    for (int s = 1; s <= k - 1; ++s) {
      IntegerPolynomial F = build_F(k, s);
      for (std::uint32_t p : primes) {
        ++res.cases_run;
        if (!euler_factor_identity_F(k, s, F, p)) {
          ++res.failures;
          if (opt.stop_on_first_failure) return res;
        }
      }
    }
    for (int t = 2; t <= k; ++t) {
      IntegerPolynomial G = build_G(k, t);
      for (std::uint32_t p : primes) {
        ++res.cases_run;
        if (!euler_factor_identity_G(k, t, G, p)) {
          ++res.failures;
          if (opt.stop_on_first_failure) return res;
        }
      }
    }
  }
  return res;
}

CheckResult constant_stability(const CheckOptions& opt) {
  CheckResult res{"constant_stability", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  long double worst = 0.0L;
  auto check_pair = [&](long double lo, long double hi) {
    long double gap = std::fabs(hi - lo);
    if (gap > worst) worst = gap;
    ++res.cases_run;
    if (gap >= 1e-6L) ++res.failures;
  };
  for (int k = 3; k <= 5; ++k) {
    for (int s = 1; s <= k - 1; ++s)
      check_pair(constant_C(k, s, 100'000, table, opt.threads).value,
                 constant_C(k, s, 1'000'000, table, opt.threads).value);
    for (int t = 2; t <= k; ++t)
      check_pair(constant_D(k, t, 100'000, table, opt.threads).value,
                 constant_D(k, t, 1'000'000, table, opt.threads).value);
    ++res.cases_run;
    if (constant_D(k, k, 1'000'000, table, opt.threads).value != 1.0L)
      ++res.failures;
  }
  res.detail = "max |value(1e5) - value(1e6)| = " + fmt_ld(worst, 3);
  return res;
}

CheckResult main_term_accuracy(const CheckOptions& opt) {
  CheckResult res{"main_term_accuracy", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  const std::uint64_t ns[] = {1000, 2000, 5000, 10000};
  std::ostringstream detail;

  auto run_family = [&](const CoprimalityConstraint& c, const char* tag) {
    WorkBudget budget;
    budget.limit = 2'000'000'000;  // sized to the pinned n list
    ScanResult scan =
        residual_scan(c, ns, budget, 1'000'000, opt.threads, table);
    if (scan.truncated || scan.rows.size() != 4) {
      res.cases_run += 3;
      res.failures += 3;
      detail << tag << ": scan truncated; ";
      return;
    }
    long double r1e3 =
        std::fabs(to_long_double(scan.rows[0].exact_count) /
                      scan.rows[0].main_term - 1.0L);
    long double r1e4 =
        std::fabs(to_long_double(scan.rows[3].exact_count) /
                      scan.rows[3].main_term - 1.0L);
    std::vector<std::pair<long double, long double>> pts;
    for (const ResidualRow& row : scan.rows) {
      long double mag = std::fabs(row.normalized_residual);
      if (mag < 1e-12L) mag = 1e-12L;
      pts.emplace_back(std::log(std::log(static_cast<long double>(row.n))),
                       std::log(mag));
    }
    long double slope = fit_slope(pts);
    ++res.cases_run;
    if (!(r1e3 <= 0.10L)) ++res.failures;
    ++res.cases_run;
    if (!(r1e4 <= 0.03L)) ++res.failures;
    ++res.cases_run;
    if (!(slope <= 2.5L)) ++res.failures;
    detail << tag << ": |ratio-1|@1e3=" << fmt_ld(r1e3, 4)
           << " @1e4=" << fmt_ld(r1e4, 4) << " slope=" << fmt_ld(slope, 4)
           << "; ";
  };

  run_family(CoprimalityConstraint::split(3, 1), "A(3,1)");
  run_family(CoprimalityConstraint::t_wise(3, 2), "B(3,2)");
  res.detail = detail.str();
  return res;
}

CheckResult quasipolynomial_structure(const CheckOptions& opt) {
  CheckResult res{"quasipolynomial_structure", 0, 0, ""};
  const std::vector<std::vector<std::uint64_t>> weights = {
      {1, 2, 3}, {2, 3, 5}, {1, 1, 2, 3}};
  for (const auto& w : weights) {
    WeightVector a(w);
    std::uint64_t span = 300 + static_cast<std::uint64_t>(a.k()) * a.lcm();
    QuasiPolyReport report = quasipoly_check(a, span);
    ++res.cases_run;
    if (report.max_abs_kth_difference != 0) {
      ++res.failures;
      if (opt.stop_on_first_failure) return res;
    }
  }
  return res;
}

CheckResult local_factor_bounds(const CheckOptions& opt) {
  CheckResult res{"local_factor_bounds", 0, 0, ""};
  const PrimeTable& table = table_of(opt);
  constexpr std::uint64_t kLimit = 100'000;
  auto primes = table.primes_up_to(kLimit);

  for (int k = 3; k <= 5; ++k) {
    // Per-prime factors of f_{k,1} and g_{k,2}, cached by prime value.
    IntegerPolynomial F = build_F(k, 1);
    IntegerPolynomial G = build_G(k, 2);
    BigInt cg = binomial(k - 1, 1);
    if ((k - 1) % 2 != 0) cg = -cg;  // (-1)^{k-2+1} C(k-1,1)
    std::vector<Rational> f_factor(kLimit + 1), g_factor(kLimit + 1);
    for (std::uint32_t p : primes) {
      BigInt den_f =
          boost::multiprecision::pow(BigInt(p), k - 1) - F.eval(BigInt(p));
      f_factor[p] = Rational(den_f + (k % 2 == 1 ? 1 : -1), den_f);
      BigInt den_g = G.eval(BigInt(p));
      g_factor[p] = Rational(den_g + cg, den_g);
    }

    const Rational f_lo(2, 3), f_hi(2, 1);
    const Rational g_lo(1, 2 * k), g_hi(2 * k, 1);
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
      Rational f = 1, g = 1;
      std::uint64_t m = n;
      while (m > 1) {
        std::uint32_t p = table.smallest_factor(m);
        while (m % p == 0) m /= p;
        f *= f_factor[p];
        g *= g_factor[p];
      }
      ++res.cases_run;
      if (!(f_lo < f && f < f_hi)) ++res.failures;
      ++res.cases_run;
      if (!(g_lo < g && g < g_hi)) ++res.failures;
      if (opt.stop_on_first_failure && res.failures) return res;
    }
  }
  return res;
}

CheckResult partition_count_oracle(const CheckOptions& opt) {
  CheckResult res{"partition_count_oracle", 0, 0, ""};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> entry(1, 6);
  std::uniform_int_distribution<int> kk(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int k = kk(rng);
    std::vector<std::uint64_t> w(k);
    for (auto& v : w) v = entry(rng);
    WeightVector a(w);
    for (std::uint64_t n = 0; n <= 40; ++n) {
      BigInt dp = count_positive(n, a);
      std::uint64_t direct = oracle_positive_solutions(n, w);
      BigInt shifted = n >= a.sum() ? count_nonneg(n - a.sum(), a) : BigInt(0);
      ++res.cases_run;
      if (dp != direct || dp != shifted) {
        ++res.failures;
        if (opt.stop_on_first_failure) return res;
      }
    }
  }
  return res;
}

Suite parse_suite(const std::string& name) {
  if (name == "identities") return Suite::Identities;
  if (name == "convolution") return Suite::Convolution;
  if (name == "partitions") return Suite::Partitions;
  if (name == "asymptotics") return Suite::Asymptotics;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckResult> run_suite(Suite suite, const CheckOptions& opt) {
  std::vector<CheckResult> results;
  auto add = [&](CheckResult r) { results.push_back(std::move(r)); };
  bool all = suite == Suite::All;
  if (all || suite == Suite::Identities) {
    add(r_family_oracle(opt));
    add(a_family_oracle(opt));
    add(b_family_oracle(opt));
    add(lambert_partition(opt));
    add(polynomial_structure(opt));
  }
  if (all || suite == Suite::Convolution) {
    add(convolution_identities(opt));
  }
  if (all || suite == Suite::Partitions) {
    add(quasipolynomial_structure(opt));
    add(partition_count_oracle(opt));
  }
  if (all || suite == Suite::Asymptotics) {
    add(euler_factor_identities(opt));
    add(constant_stability(opt));
    add(local_factor_bounds(opt));
    add(main_term_accuracy(opt));
  }
  return results;
}

}  // namespace coprimal::checks
