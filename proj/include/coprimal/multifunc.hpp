#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coprimal/numtheory.hpp"

namespace coprimal {

// One prime's exponent pattern across a k-tuple.
struct ExponentTuple {
  std::vector<int> nu;

  int k() const { return static_cast<int>(nu.size()); }
};

enum class ConstraintKind { AllCoprime, SplitCoprime, TWiseCoprime };

// Selects which counting family is meant: R_k (gcd of all summands is 1),
// A_{k,s} (first s summands coprime to the last k-s), or B_{k,t} (t-wise
// relatively prime summands).
struct CoprimalityConstraint {
  ConstraintKind kind;
  int k;
  int param;  // s for SplitCoprime, t for TWiseCoprime, unused otherwise

  static CoprimalityConstraint all_coprime(int k);
  static CoprimalityConstraint split(int k, int s);
  static CoprimalityConstraint t_wise(int k, int t);

  void validate() const;  // throws std::invalid_argument
  std::string label() const;
};

// Local (prime-power) values. All take the full pattern of length k.
int theta_local(int k, int s, const ExponentTuple& nu);
int rho_local(int k, int t, const ExponentTuple& nu);
int lambda_local(int k, int s, const ExponentTuple& nu);
int psi_local(int k, int t, const ExponentTuple& nu);

// Evaluates a multiplicative k-variable function on an integer tuple as the
// product of `local` over the primes dividing any coordinate. Returns 0 as
// soon as a local value vanishes; products are overflow-checked.
using LocalFn = std::function<long long(const ExponentTuple&)>;
long long eval_multiplicative(std::span<const std::uint64_t> tuple,
                              const LocalFn& local,
                              const PrimeTable& table = default_table());

// Indicator of gcd(n_1...n_s, n_{s+1}...n_k) = 1. Both the direct gcd test
// and the prime-local product are computed and must agree.
int theta(int k, int s, std::span<const std::uint64_t> tuple,
          const PrimeTable& table = default_table());

// Indicator of t-wise relative primality. Direct t-subset gcds and the
// prime-local route (no prime divides t or more coordinates) must agree.
int rho(int k, int t, std::span<const std::uint64_t> tuple,
        const PrimeTable& table = default_table());

long long lambda(int k, int s, std::span<const std::uint64_t> tuple,
                 const PrimeTable& table = default_table());

long long psi(int k, int t, std::span<const std::uint64_t> tuple,
              const PrimeTable& table = default_table());

// True iff the divisor-tuple sum of lambda (split constraint) or psi (t-wise
// constraint) reproduces theta / rho on the given tuple.
bool convolution_check(const CoprimalityConstraint& constraint,
                       std::span<const std::uint64_t> tuple,
                       const PrimeTable& table = default_table());

}  // namespace coprimal
