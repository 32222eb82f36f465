#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace chaintutte {

/// Subset of a ground set {0..n-1}, bit i set iff element i is present.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 63;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool contains(Mask set, int i) { return (set >> i) & 1U; }

constexpr bool is_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Calls f(sub) for every sub ⊆ set, including ∅ and set, in decreasing
/// bitmask order.
template <class F>
void for_each_subset(Mask set, F&& f) {
  Mask sub = set;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & set;
  }
}

/// Spreads the low bits of `packed` onto the positions listed in `positions`.
inline Mask spread_bits(Mask packed, const std::vector<int>& positions) {
  Mask out = 0;
  for (std::size_t j = 0; j < positions.size(); ++j)
    if ((packed >> j) & 1U) out |= bit(positions[j]);
  return out;
}

/// Inverse of spread_bits: gathers the bits of `set` at `positions`.
inline Mask gather_bits(Mask set, const std::vector<int>& positions) {
  Mask out = 0;
  for (std::size_t j = 0; j < positions.size(); ++j)
    if (contains(set, positions[j])) out |= bit(static_cast<int>(j));
  return out;
}

}  // namespace chaintutte
