#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chaintutte/subset.hpp"

namespace chaintutte {

enum class MatroidKind { Matroid, Polymatroid };

/// A (poly)matroid on the ground set {0..n-1} given by its rank function.
///
/// Instances are immutable and cheap to copy (the rank data is shared). For
/// n <= kDenseRankLimit the whole rank table is computed at construction;
/// larger ground sets use a lazily filled, mutex-protected cache, so a
/// Matroid may be read from several threads at once either way.
class Matroid {
 public:
  using RankFn = std::function<int(Mask)>;

  static constexpr int kDenseRankLimit = 24;

  /// Wraps an arbitrary rank oracle. No axiom checking is done here; use
  /// the named constructors below for validated input.
  static Matroid from_oracle(int n, RankFn rank, MatroidKind kind);

  /// The empty matroid.
  Matroid();

  int size() const;
  MatroidKind kind() const;
  bool is_matroid() const { return kind() == MatroidKind::Matroid; }

  /// rk(S). Throws OutOfRange if S is not a subset of the ground set.
  int rank(Mask s) const;
  /// rk(M) = rk(ground set).
  int rank() const;
  int corank(Mask s) const { return rank() - rank(s); }
  int nullity(Mask s) const { return popcount(s) - rank(s); }
  Mask ground() const { return full_mask(size()); }

  /// Every rank value, indexed by bitmask. Only sensible for small n.
  std::vector<int> rank_table() const;

  bool same_rank_function(const Matroid& other) const;

 private:
  struct Impl;
  explicit Matroid(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Construction ---------------------------------------------------------------

Matroid make_uniform(int r, int n);
Matroid make_boolean(int n);

/// Cycle matroid of a multigraph; edge i is ground element i. Loops and
/// parallel edges are allowed.
Matroid make_graphic(int n_vertices, const std::vector<std::pair<int, int>>& edges);

/// Matroid whose bases are `bases` (each a bitmask over {0..n-1}). Checks
/// equicardinality and the basis exchange axiom.
Matroid make_from_bases(int n, const std::vector<Mask>& bases);

/// Validates the (poly)matroid rank axioms on a total table indexed by mask.
/// The result is a polymatroid iff some singleton has rank > 1.
Matroid make_from_rank_table(int n, const std::vector<int>& table);

// Operations ------------------------------------------------------------------

Matroid dual(const Matroid& m);

/// M∖S, relabelled onto {0..n-|S|-1} preserving element order.
Matroid delete_set(const Matroid& m, Mask s);
/// M/S, relabelled the same way.
Matroid contract_set(const Matroid& m, Mask s);
/// M|S = M∖(ground - S).
Matroid restrict_to(const Matroid& m, Mask s);
/// General minor (M/c)∖d with c, d disjoint.
Matroid minor(const Matroid& m, Mask contract, Mask remove);

/// M1 ⊕ M2; elements of m2 are shifted by m1.size().
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

bool is_loop(const Matroid& m, int a);
bool is_coloop(const Matroid& m, int a);
bool is_simple(const Matroid& m);
bool has_loop(const Matroid& m);

/// Closure of S: S together with every element that does not raise its rank.
Mask closure(const Matroid& m, Mask s);

/// Bases as bitmasks, increasing order. Matroids only.
std::vector<Mask> bases(const Matroid& m);
bool is_independent(const Matroid& m, Mask s);

}  // namespace chaintutte
