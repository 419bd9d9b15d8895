#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "coprimal/numtheory.hpp"
#include "oracles.hpp"

using namespace coprimal;

TEST_SUITE("numtheory") {

TEST_CASE("primes_up_to basics") {
  CHECK(primes_up_to(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(primes_up_to(2) == std::vector<std::uint32_t>{2});
  CHECK(primes_up_to(1).empty());

  auto got = primes_up_to(100);
  auto expected = oracles::trial_division_primes(100);
  REQUIRE(got.size() == 25);
  CHECK(got.back() == 97);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("primes_up_to matches trial division up to 500") {
  auto got = primes_up_to(500);
  auto expected = oracles::trial_division_primes(500);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("factorize basics") {
  CHECK(factorize(1).entries.empty());

  Factorization f12 = factorize(12);
  REQUIRE(f12.entries.size() == 2);
  CHECK(f12.entries[0] == std::pair<std::uint64_t, int>{2, 2});
  CHECK(f12.entries[1] == std::pair<std::uint64_t, int>{3, 1});

  REQUIRE(oracles::trial_division_is_prime(9973));
  Factorization fp = factorize(9973);
  REQUIRE(fp.entries.size() == 1);
  CHECK(fp.entries[0] == std::pair<std::uint64_t, int>{9973, 1});

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs sampled n up to 1e6") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = pick(rng);
    Factorization f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t j = 1; j < f.entries.size(); ++j)
      CHECK(f.entries[j - 1].first < f.entries[j].first);
    for (const auto& [p, e] : f.entries) CHECK(e >= 1);
  }
}

TEST_CASE("factorize beyond the sieve bound") {
  // 999983 is the largest prime below 1e6; its square is within bound^2.
  std::uint64_t p = 999'983;
  REQUIRE(oracles::trial_division_is_prime(p));
  Factorization f = default_table().factorize(p * p);
  REQUIRE(f.entries.size() == 1);
  CHECK(f.entries[0] == std::pair<std::uint64_t, int>{p, 2});
}

TEST_CASE("mobius basics and divisor-sum identity") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    int sum = 0;
    for (std::uint64_t d : divisors(n)) sum += mobius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("jordan totient values and power sum") {
  CHECK(jordan_totient(1, 4) == oracles::phi_by_enumeration(4));
  CHECK(jordan_totient(1, 4) == 2);
  CHECK(jordan_totient(2, 4) == 12);
  for (int t = 1; t <= 4; ++t) CHECK(jordan_totient(t, 1) == 1);

  for (std::uint64_t n = 1; n <= 60; ++n)
    CHECK(jordan_totient(1, n) == oracles::phi_by_enumeration(n));

  for (int t = 1; t <= 4; ++t) {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      BigInt sum = 0;
      for (std::uint64_t d : divisors(n)) sum += jordan_totient(t, d);
      CHECK(sum == boost::multiprecision::pow(BigInt(n), t));
    }
  }
}

TEST_CASE("stirling numbers of the first kind") {
  for (int n = 0; n <= 10; ++n) CHECK(stirling_first_signed(n, n) == 1);
  CHECK(stirling_first_signed(2, 1) == oracles::stirling_table(2, 1));
  CHECK(stirling_first_signed(2, 1) == -1);
  CHECK(stirling_first_signed(3, 1) == 2);

  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirling_first_signed(n, k) == oracles::stirling_table(n, k));

  CHECK(stirling_first_signed(3, 7) == 0);

  // Row sums vanish for n >= 2.
  for (int n = 2; n <= 30; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += stirling_first_signed(n, k);
    CHECK(sum == 0);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(49, 5) == 1906884);
  CHECK(binomial(49, 5) == oracles::pascal_binomial(49, 5));
  CHECK(binomial(5, 9) == 0);
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == oracles::pascal_binomial(n, k));
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(divisors(36).size() == 9);
  for (std::uint64_t n : {24ull, 97ull, 360ull, 1024ull}) {
    auto divs = divisors(n);
    for (std::size_t i = 1; i < divs.size(); ++i) CHECK(divs[i - 1] < divs[i]);
    for (std::uint64_t d : divs) CHECK(n % d == 0);
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) ++count;
    CHECK(divs.size() == count);
  }
}

TEST_CASE("omega") {
  CHECK(omega(1) == 0);
  CHECK(omega(12) == 2);
  CHECK(omega(30030) == 6);  // 2*3*5*7*11*13
  // Beyond the sieve: both factors exceed 1e6 after the first is removed.
  CHECK(omega(999'983ull * 1'000'003ull) == 2);
  CHECK(omega(999'983ull * 999'983ull) == 1);
}

TEST_CASE("shared table is safe for concurrent readers") {
  const PrimeTable& table = default_table();  // fully built before the race
  std::vector<std::uint64_t> expected_mu(2001);
  for (std::uint64_t n = 2; n <= 2000; ++n)
    expected_mu[n] = static_cast<std::uint64_t>(table.mobius(n) + 1);

  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (int i = 0; i < 500; ++i) {
        std::uint64_t n = 2 + (static_cast<std::uint64_t>(w) * 499 + i) % 1999;
        if (table.factorize(n).value() != n) ++mismatches;
        if (static_cast<std::uint64_t>(table.mobius(n) + 1) != expected_mu[n])
          ++mismatches;
        if (jordan_totient(2, n) <= 0) ++mismatches;
      }
    });
  }
  for (auto& th : workers) th.join();
  CHECK(mismatches == 0);
}

}  // TEST_SUITE
