#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coprimal/multifunc.hpp"
#include "coprimal/numtheory.hpp"

namespace coprimal::checks {

// Local prime-pattern rule, injectable so the verification engines can be
// run against deliberately broken variants (mutation sanity).
using LocalPattern =
    std::function<long long(int k, int param, const ExponentTuple&)>;

struct CheckOptions {
  int threads = 0;
  std::uint64_t seed = 0;
  bool stop_on_first_failure = false;
  LocalPattern lambda_local_fn;  // empty: production lambda_local
  LocalPattern psi_local_fn;     // empty: production psi_local
  const PrimeTable* table = nullptr;  // null: default_table()
};

struct CheckResult {
  std::string name;
  std::uint64_t cases_run = 0;
  std::uint64_t failures = 0;
  std::string detail;

  bool ok() const { return failures == 0; }
};

// Each check pins its own ranges, tolerances and budgets; options only steer
// threading, seeding and the injected local rules.
CheckResult r_family_oracle(const CheckOptions& opt = {});
CheckResult a_family_oracle(const CheckOptions& opt = {});
CheckResult b_family_oracle(const CheckOptions& opt = {});
CheckResult convolution_identities(const CheckOptions& opt = {});
CheckResult lambert_partition(const CheckOptions& opt = {});
CheckResult polynomial_structure(const CheckOptions& opt = {});
CheckResult euler_factor_identities(const CheckOptions& opt = {});
CheckResult constant_stability(const CheckOptions& opt = {});
CheckResult main_term_accuracy(const CheckOptions& opt = {});
CheckResult quasipolynomial_structure(const CheckOptions& opt = {});
CheckResult local_factor_bounds(const CheckOptions& opt = {});
CheckResult partition_count_oracle(const CheckOptions& opt = {});

enum class Suite { Identities, Convolution, Partitions, Asymptotics, All };

Suite parse_suite(const std::string& name);
std::vector<CheckResult> run_suite(Suite suite, const CheckOptions& opt = {});

}  // namespace coprimal::checks
