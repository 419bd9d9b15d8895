#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coprimal {

// Dual-route evaluations that disagree, or exact-division steps that leave a
// remainder, throw this: it signals a bug in the library, not bad input.
class internal_fault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(std::uint64_t used, std::uint64_t limit)
      : std::runtime_error("work budget exceeded: " + std::to_string(used) +
                           " > " + std::to_string(limit)),
        used(used),
        limit(limit) {}
  std::uint64_t used;
  std::uint64_t limit;
};

// Counts enumeration steps (tuple visits, weight evaluations) so the
// exponential identity paths stay bounded.
struct WorkBudget {
  std::uint64_t limit = 100'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t w = 1) {
    used += w;
    if (used > limit) throw budget_exceeded(used, limit);
  }
  std::uint64_t remaining() const { return used >= limit ? 0 : limit - used; }
};

}  // namespace coprimal
