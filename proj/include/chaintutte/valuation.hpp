#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chaintutte/chain_enum.hpp"
#include "chaintutte/g_invariant.hpp"
#include "chaintutte/laurent_poly.hpp"
#include "chaintutte/matroid.hpp"

namespace chaintutte {

/// Cells of a matroid polytope subdivision and the matroids of their common
/// faces. Index sets are sorted and 0-based here; std::nullopt marks an
/// empty intersection.
struct SubdivisionNerve {
  std::vector<Matroid> cells;
  std::map<std::vector<int>, std::optional<Matroid>> intersections;
};

/// Throws InconsistentNerve if a singleton disagrees with its cell, a
/// multi-index intersection is missing, or a face has a basis its parent
/// face lacks. Singletons may be omitted.
void validate_nerve(const SubdivisionNerve& nerve, const Matroid& big);

using InvariantValue = std::variant<LaurentPoly, GInvariant>;

/// Accepted ids: chain-tutte, chain-whitney (both need k >= 0), mobius-poly,
/// opp-char-poly, j-mobius, ford-s, g-invariant. Underscores and the long
/// forms opposite-char-poly, j-mobius-poly, ford-s-poly are also accepted.
std::string canonical_invariant_id(const std::string& id);
std::vector<std::string> registered_invariants();

/// Throws UnknownInvariant for an unregistered id; k < 0 means "not given".
InvariantValue evaluate_invariant(const std::string& id, const Matroid& m, int k,
                                  const ComputeOptions& opts = {});

nlohmann::json invariant_value_to_json(const InvariantValue& v);

struct ValuationReport {
  std::string invariant;
  InvariantValue lhs;  // f(big)
  InvariantValue rhs;  // Σ_{J ≠ ∅} (-1)^{|J|+1} f(face_J)
  bool equal = false;

  nlohmann::json to_json() const;
};

ValuationReport check_valuation(const std::string& id, const Matroid& big,
                                const SubdivisionNerve& nerve, int k,
                                const ComputeOptions& opts = {});

}  // namespace chaintutte
