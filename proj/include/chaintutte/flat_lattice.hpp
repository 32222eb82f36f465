#pragma once

#include <memory>
#include <vector>

#include "chaintutte/matroid.hpp"

namespace chaintutte {

/// Lattice of flats of a matroid, ordered by inclusion.
///
/// Flats are indexed 0..size()-1 sorted by (rank, mask), so index 0 is the
/// bottom closure(∅) and size()-1 is the top (the ground set). All Möbius
/// values are computed at construction. The J-function table is built on
/// first use under std::call_once, so concurrent readers are safe.
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m);

  int size() const { return static_cast<int>(flats_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  Mask flat(int i) const { return flats_[i]; }
  const std::vector<Mask>& flats() const { return flats_; }
  int rank(int i) const { return ranks_[i]; }
  int corank(int i) const { return ranks_[top()] - ranks_[i]; }

  /// Index of the flat equal to `s`, or -1.
  int index_of(Mask s) const;
  /// Index of the closure of `s` (the join of its atoms).
  int join_of(Mask s) const;

  bool leq(int i, int j) const { return is_subset(flats_[i], flats_[j]); }

  /// μ(X, Y). Throws Domain if X is not below Y.
  long long mobius(int x, int y) const;

  /// J(x, y, z) for a 3-flag x <= y <= z. Throws Domain otherwise.
  long long j_function(int x, int y, int z) const;

  const Matroid& matroid() const { return matroid_; }

 private:
  struct JTable;

  Matroid matroid_;
  std::vector<Mask> flats_;
  std::vector<int> ranks_;
  std::vector<long long> mobius_;  // row-major size() x size()
  std::shared_ptr<JTable> j_;
};

}  // namespace chaintutte
