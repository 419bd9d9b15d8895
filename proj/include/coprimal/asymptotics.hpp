#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coprimal/common.hpp"
#include "coprimal/multifunc.hpp"
#include "coprimal/numbers.hpp"
#include "coprimal/numtheory.hpp"
#include "coprimal/polynomials.hpp"

namespace coprimal {

// Truncated Euler product. Every local factor is computed as an exact
// rational and converted once; accumulation is chunked with fixed chunk
// boundaries, so values are bit-identical for any thread count.
// tail_bound_estimate is a documented heuristic, not a proven bound: the
// deviation polynomial of each factor has degree two below the denominator,
// so |log(true/truncated)| is estimated by S / (P log P) with S twice the
// coefficient sum of the deviation.
struct EulerProductResult {
  long double value;
  std::uint64_t prime_bound;
  long double tail_bound_estimate;
  std::uint64_t factor_count;
};

struct ResidualRow {
  std::uint64_t n;
  BigInt exact_count;
  long double main_term;
  long double residual;             // exact - main
  long double normalized_residual;  // residual / n^{k-2}
};

struct ScanResult {
  std::vector<ResidualRow> rows;
  bool truncated = false;
};

// C_{k,s} = prod_p (1 - F_{k,s}(p)/p^{k-1}); factors must lie in (0,1].
EulerProductResult constant_C(int k, int s, std::uint64_t prime_bound,
                              const PrimeTable& table = default_table(),
                              int threads = 1);

// D_{k,t} = prod_p G_{k,t}(p)/p^{k-1}; factors must lie in (0,1].
EulerProductResult constant_D(int k, int t, std::uint64_t prime_bound,
                              const PrimeTable& table = default_table(),
                              int threads = 1);

// H_{k,s}(1,..,1) = prod_p (1 - (p F_{k,s}(p) + (-1)^k)/p^k). Every factor is
// cross-checked against the (1-1/p)-power form.
EulerProductResult H_at_ones(int k, int s, std::uint64_t prime_bound,
                             const PrimeTable& table = default_table(),
                             int threads = 1);

// L_{k,t}(1,..,1) = prod_p (p G_{k,t}(p) + (-1)^{k-t+1} C(k-1,t-1))/p^k.
// Every factor is cross-checked against the elementary-symmetric form.
EulerProductResult L_at_ones(int k, int t, std::uint64_t prime_bound,
                             const PrimeTable& table = default_table(),
                             int threads = 1);

// f_{k,s}(n) = prod_{p|n} (1 + (-1)^{k-1}/(p^{k-1} - F_{k,s}(p))), exact.
Rational local_f(int k, int s, std::uint64_t n,
                 const PrimeTable& table = default_table());

// g_{k,t}(n) = prod_{p|n} (1 + (-1)^{k-t+1} C(k-1,t-1)/G_{k,t}(p)), exact.
Rational local_g(int k, int t, std::uint64_t n,
                 const PrimeTable& table = default_table());

// C_{k,s} f_{k,s}(n) n^{k-1}/(k-1)!; the rational part is exact and widened
// once at the end.
long double main_term_A(std::uint64_t n, int k, int s,
                        const EulerProductResult& C,
                        const PrimeTable& table = default_table());

long double main_term_B(std::uint64_t n, int k, int t,
                        const EulerProductResult& D,
                        const PrimeTable& table = default_table());

// Truncated series sum of lambda(j)/(j_1...j_k) over constrained tuples with
// j_i <= j_bound against the product over p not dividing delta. Both sides
// are returned for convergence reporting; nothing is asserted. The product
// is truncated at product_prime_bound, or at j_bound when 0 is passed, so
// both sides approach the limit together.
std::pair<long double, long double> T_delta_check(
    int k, int s, std::uint64_t delta, std::uint64_t j_bound,
    std::uint64_t product_prime_bound = 0,
    const PrimeTable& table = default_table());

std::pair<long double, long double> V_delta_check(
    int k, int t, std::uint64_t delta, std::uint64_t j_bound,
    std::uint64_t product_prime_bound = 0,
    const PrimeTable& table = default_table());

// Pairs exact brute-force counts with main-term predictions for each n.
// Rows whose estimated enumeration cost would blow the budget are dropped
// and the result is flagged truncated.
ScanResult residual_scan(const CoprimalityConstraint& constraint,
                         std::span<const std::uint64_t> n_list,
                         WorkBudget& budget,
                         std::uint64_t prime_bound = PrimeTable::kDefaultBound,
                         int threads = 0,
                         const PrimeTable& table = default_table());

// Exact per-prime identities behind Lemmas on H and L at z = (1,...,1).
bool euler_factor_identity_F(int k, int s, const IntegerPolynomial& F,
                             std::uint64_t p);
bool euler_factor_identity_G(int k, int t, const IntegerPolynomial& G,
                             std::uint64_t p);

}  // namespace coprimal
