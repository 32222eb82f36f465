#include "chaintutte/chain_enum.hpp"

#include <limits>
#include <string>

#include "chaintutte/error.hpp"

namespace chaintutte {

unsigned ComputeOptions::worker_count() const {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

void check_budget(std::uint64_t count, std::uint64_t limit, const char* what) {
  if (count > limit)
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + ": " + std::to_string(count) +
                                               " exceeds the budget of " + std::to_string(limit));
}

}  // namespace chaintutte
