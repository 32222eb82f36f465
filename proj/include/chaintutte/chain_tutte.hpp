#pragma once

#include "chaintutte/chain_enum.hpp"
#include "chaintutte/laurent_poly.hpp"
#include "chaintutte/matroid.hpp"

namespace chaintutte {

/// Which variable families a chain polynomial is written in.
enum class Coordinates {
  Tutte,      // x1..xk, y1..yk
  Whitney,    // a1..ak, b1..bk
  Universal,  // u1..uk, v1..vk
};

struct ChainTuttePoly {
  int k = 0;
  int n = 0;
  int matroid_rank = 0;
  Coordinates coords = Coordinates::Tutte;
  LaurentPoly poly;
};

/// W^k_M: Σ over chains S_1 ⊆ ... ⊆ S_k of Π a_i^{crk S_i} b_i^{|S_i| - rk S_i}.
/// Polymatroids are allowed. Throws BudgetExceeded past opts.max_chains.
ChainTuttePoly chain_whitney(const Matroid& m, int k, const ComputeOptions& opts = {});

/// T^k_M = W^k_M(x_i - 1; y_i - 1), fully expanded.
ChainTuttePoly chain_tutte(const Matroid& m, int k, const ComputeOptions& opts = {});

/// a_i -> x_i - 1, b_i -> y_i - 1 for i = 1..k.
LaurentPoly whitney_to_tutte(const LaurentPoly& w, int k);
/// x_i -> a_i + 1, y_i -> b_i + 1 for i = 1..k.
LaurentPoly tutte_to_whitney(const LaurentPoly& t, int k);

/// The split chain Tutte polynomial sT^{k,j}_{M,a} in x/y coordinates.
/// j = 0 is T^k of M/a and j = k is T^k of M∖a.
LaurentPoly split_chain_tutte(const Matroid& m, int a, int k, int j,
                              const ComputeOptions& opts = {});

/// T^k via repeated k-term deletion/contraction on the smallest element that
/// is neither a loop nor a coloop, bottoming out in the loop/coloop product.
/// Matroids only.
ChainTuttePoly chain_tutte_recursive(const Matroid& m, int k, const ComputeOptions& opts = {});

/// Recovers T^k from T^{k'} (k <= k'). Works in Whitney coordinates and keeps
/// the terms in which every level i > k carries a_i^0 b_i^{n - rk M}: those
/// come exactly from chains whose top k' - k sets are the whole ground set.
ChainTuttePoly specialize_down(const ChainTuttePoly& top, int k);

/// uT^k_M: Σ over chains A_1 ⊆ ... ⊆ A_k = ground of
/// Π u_i^{|A_i - A_{i-1}|} v_i^{rk A_i - rk A_{i-1}}, A_0 = ∅. Needs k >= 1.
ChainTuttePoly universal_chain_tutte(const Matroid& m, int k, const ComputeOptions& opts = {});

/// Applies u_i = Π_{j>=i} b_j, v_i = Π_{j>=i} b_j^{-1} Π_{j<i} a_j to uT^{k+1}
/// (given as `universal`, with k+1 levels). The result is W^k; a negative
/// exponent left over raises Internal.
LaurentPoly universal_to_whitney(const LaurentPoly& universal, int k_plus_one);

/// Computes both sides of the coordinate change for (M, k) and compares.
bool universal_to_whitney_check(const Matroid& m, int k, const ComputeOptions& opts = {});

/// T^k of a single coloop: 1 + Σ_{i=1}^k Π_{j<=i} (x_j - 1).
LaurentPoly coloop_chain_tutte(int k);
/// T^k of a single loop: 1 + Σ_{l=1}^k Π_{i=k-l+1}^k (y_i - 1).
LaurentPoly loop_chain_tutte(int k);

/// x_i -> y_{k+1-i}, y_i -> x_{k+1-i}. T^k_{M*} is this applied to T^k_M.
LaurentPoly reverse_swap_xy(const LaurentPoly& p, int k);

}  // namespace chaintutte
