#pragma once

#include <array>
#include <cstdint>
#include <thread>
#include <vector>

#include "chaintutte/subset.hpp"

namespace chaintutte {

/// Resource limits and parallelism shared by every enumeration.
struct ComputeOptions {
  unsigned threads = 0;                        // 0 = hardware concurrency
  std::uint64_t max_chains = std::uint64_t{1} << 30;
  std::uint64_t max_perms = 362880;            // 9!
  int max_top_tutte_ground = 6;

  unsigned worker_count() const;
};

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, int exp);

/// Throws BudgetExceeded unless count <= limit.
void check_budget(std::uint64_t count, std::uint64_t limit, const char* what);

/// Splits [0, total) into contiguous ranges, runs work(worker, begin, end)
/// on each (in parallel when workers > 1) and returns when all are done.
/// Ranges are assigned in order, so a caller that merges per-worker results
/// by worker index sees a fixed partition for a fixed worker count.
template <class Work>
void parallel_ranges(std::uint64_t total, unsigned workers, Work&& work) {
  if (workers == 0) workers = 1;
  if (total < workers) workers = total == 0 ? 1 : static_cast<unsigned>(total);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;
  std::vector<std::thread> pool;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    if (workers == 1)
      work(w, begin, end);
    else
      pool.emplace_back([&work, w, begin, end] { work(w, begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

/// Chains S_1 ⊆ ... ⊆ S_k of subsets of {0..n-1}, encoded as level
/// functions: element e has level l(e) in [min_level, k] and lies in S_i iff
/// l(e) >= k - i + 1. min_level = 0 gives all (k+1)^n chains; min_level = 1
/// pins S_k to the whole ground set.
///
/// visit(worker, sets) is called once per chain with sets[i-1] = S_i.
/// Chains are visited in mixed-radix order of the level vector (element 0 is
/// the least significant digit), split across workers by index range.
template <class Visit>
void enumerate_chains(int n, int k, int min_level, unsigned workers, Visit&& visit) {
  const int radix = k - min_level + 1;
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(radix), n);
  if (k == 0) {
    // Only the empty chain.
    visit(0U, static_cast<const Mask*>(nullptr));
    return;
  }
  parallel_ranges(total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    if (begin == end) return;
    std::vector<int> level(static_cast<std::size_t>(n));
    std::vector<Mask> sets(static_cast<std::size_t>(k), 0);
    std::uint64_t idx = begin;
    for (int e = 0; e < n; ++e) {
      level[e] = min_level + static_cast<int>(idx % radix);
      idx /= radix;
      for (int i = k - level[e] + 1; i <= k; ++i) sets[i - 1] |= bit(e);
    }
    for (std::uint64_t c = begin;;) {
      visit(w, static_cast<const Mask*>(sets.data()));
      if (++c == end) break;
      for (int e = 0; e < n; ++e) {
        if (level[e] < k) {
          // Level l -> l+1 adds e to S_{k-l}.
          sets[k - level[e] - 1] |= bit(e);
          ++level[e];
          break;
        }
        level[e] = min_level;
        for (int i = 1; i <= k - min_level; ++i) sets[i - 1] &= ~bit(e);
      }
    }
  });
}

}  // namespace chaintutte
