#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coprimal/common.hpp"
#include "coprimal/multifunc.hpp"
#include "coprimal/numbers.hpp"
#include "coprimal/numtheory.hpp"

namespace coprimal {

enum class Method { BruteForce, Identity };

struct CountQuery {
  std::uint64_t n;
  CoprimalityConstraint constraint;
  Method method;

  int k() const { return constraint.k; }
};

// binomial(n-1, k-1): all k-compositions of n.
BigInt total_compositions(std::uint64_t n, int k);

// Exact count by enumeration of (x_1,...,x_{k-1}) with x_k determined.
// Prefix pruning for the split constraint and for pairwise coprimality;
// t-subset conditions with t >= 3 are checked on the completed tuple via
// prime incidence counts.
BigInt brute_count(std::uint64_t n, const CoprimalityConstraint& constraint,
                   WorkBudget& budget, const PrimeTable& table = default_table());
BigInt brute_count(const CountQuery& q, WorkBudget& budget,
                   const PrimeTable& table = default_table());

// R_k(n) as the Mobius divisor sum over binomial(d-1, k-1).
BigInt mobius_R(std::uint64_t n, int k);

// Coefficients (a_{k,1},...,a_{k,k-1}) of the Jordan-totient decomposition
// of (k-1)! R_k(n).
std::vector<BigInt> a_coefficients(int k);

// R_k(n) via the weighted Jordan-totient sum; the division by (k-1)! is
// checked to be exact. Requires n >= k >= 2.
BigInt jordan_R(std::uint64_t n, int k);

// Generic double loop of the divisor-sum identities: outer over squarefree
// delta | n, inner over tuples (j_1..j_k) with squarefree coordinates coprime
// to delta, gcd(j_1..j_k) = 1 and sum <= n/delta, accumulating
// tuple_weight(j) * N(n/delta; j) * delta_weight(omega(delta)).
using TupleWeightFn = std::function<long long(std::span<const std::uint64_t>)>;
using DeltaWeightFn = std::function<BigInt(int omega_delta)>;
BigInt identity_count(std::uint64_t n, int k, const TupleWeightFn& tuple_weight,
                      const DeltaWeightFn& delta_weight, WorkBudget& budget,
                      const PrimeTable& table = default_table());

// A_{k,s}(n) via the lambda identity. Requires k >= 3, 1 <= s <= k-1.
BigInt identity_A(std::uint64_t n, int k, int s, WorkBudget& budget,
                  const PrimeTable& table = default_table());

// B_{k,t}(n) via the psi identity. Requires k >= 3, 2 <= t <= k.
BigInt identity_B(std::uint64_t n, int k, int t, WorkBudget& budget,
                  const PrimeTable& table = default_table());

// Identity-path dispatch: R -> mobius_R, split -> identity_A, t-wise ->
// identity_B.
BigInt identity_count_for(std::uint64_t n, const CoprimalityConstraint& c,
                          WorkBudget& budget,
                          const PrimeTable& table = default_table());

}  // namespace coprimal
