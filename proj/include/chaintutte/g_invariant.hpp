#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include <json.hpp>

#include "chaintutte/chain_enum.hpp"
#include "chaintutte/matroid.hpp"

namespace chaintutte {

/// Derksen's invariant as a multiset of rank-increment vectors, one per
/// complete chain ∅ ⊂ X_1 ⊂ ... ⊂ X_n. Counts may go negative only in
/// intermediate alternating sums; zero counts are never stored.
struct GInvariant {
  int n = 0;
  std::map<std::vector<int>, mpz_class> counts;

  bool operator==(const GInvariant&) const = default;

  /// this += coeff * other. Both sides must have the same n.
  void add_scaled(const GInvariant& other, long coeff);

  /// {"n":3,"counts":{"1,1,0":6}}. Counts beyond 64 bits become decimal strings.
  nlohmann::json to_json() const;
  static GInvariant from_json(const nlohmann::json& j);
};

/// One pass over all n! orderings of the ground set. Throws BudgetExceeded
/// past opts.max_perms.
GInvariant g_invariant(const Matroid& m, const ComputeOptions& opts = {});

/// Reads the invariant off the exponent-complete monomials of W^n
/// (a_i - b_i = rk M - i). Throws BudgetExceeded when n exceeds
/// opts.max_top_tutte_ground.
GInvariant g_from_top_tutte(const Matroid& m, const ComputeOptions& opts = {});

}  // namespace chaintutte
