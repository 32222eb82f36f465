#pragma once

#include <gmpxx.h>

#include <vector>

#include "chaintutte/chain_enum.hpp"
#include "chaintutte/flat_lattice.hpp"
#include "chaintutte/laurent_poly.hpp"
#include "chaintutte/matroid.hpp"

namespace chaintutte {

/// T_M(x1; y1) = T^1_M.
LaurentPoly classical_tutte(const Matroid& m, const ComputeOptions& opts = {});

/// χ_M(t) = (-1)^{rk M} T_M(1 - t; 0). Zero when M has a loop.
LaurentPoly characteristic_poly(const Matroid& m, const ComputeOptions& opts = {});
/// Σ_x μ(0̂, x) t^{crk x} over the flats, or 0 when M has a loop.
LaurentPoly characteristic_poly_mobius(const FlatLattice& lattice);

// Möbius polynomial χ̄_M(s, t) = Σ_{X <= Y} μ(X, Y) s^{crk X} t^{crk Y}.
LaurentPoly mobius_poly(const FlatLattice& lattice);
LaurentPoly mobius_poly(const Matroid& m);
/// T^2_M(1 - s, 1 - t; 0, 0).
LaurentPoly mobius_poly_via_tutte(const Matroid& m, const ComputeOptions& opts = {});
/// Deletion/contraction on the smallest non-loop non-coloop element with the
/// split correction term; falls back to the flat sum when there is none.
LaurentPoly mobius_poly_recursive(const Matroid& m);

// Opposite characteristic polynomial χ^op_M(t) = Σ_x μ(x, 1̂) t^{rk x}.
LaurentPoly opposite_char_poly(const FlatLattice& lattice);
LaurentPoly opposite_char_poly(const Matroid& m);
/// Reads χ^op off T^2_M(1 - t, 1; 0, 0) = t^{rk M} χ^op_M(1/t).
LaurentPoly opposite_char_poly_via_tutte(const Matroid& m, const ComputeOptions& opts = {});
LaurentPoly opposite_char_poly_recursive(const Matroid& m);

/// p(t) -> t^d p(1/t). Throws Internal if the result is not a polynomial.
LaurentPoly reverse_in_t(const LaurentPoly& p, int d);

/// Σ over 3-flags of J(x, y, z) t^{crk x + crk y + crk z}.
LaurentPoly j_mobius_poly(const FlatLattice& lattice);
LaurentPoly j_mobius_poly(const Matroid& m);

/// a(∅) = 0, a(A) = |A| - rk A - Σ_{B ⊊ A} a(B).
long long ford_a(const Matroid& m, Mask a);
/// a(A) for every A, indexed by mask.
std::vector<long long> ford_a_table(const Matroid& m);

/// Σ_A crk(A) a(A).
long long expected_codim(const Matroid& m);
/// ∂x ∂y of T^2_M(z+1, y/z+1; x/z+1, z+1) at (x, y, z) = (1, 1, -1).
long long expected_codim_via_tutte(const Matroid& m, const ComputeOptions& opts = {});
/// ec(M∖a) + ec(M/a) - Σ_{A ⊆ B ⊆ E-a} null(A) crk_{M/a}(B) (-1)^{|B|-|A|}.
long long expected_codim_recursive(const Matroid& m);

/// S_M(x, y, z) = Σ_{A ⊆ B} x^{|A| - rk A} y^{rk M - rk B} z^{|B| - |A|}.
LaurentPoly ford_s_poly(const Matroid& m);
/// T^2_M(z+1, y/z+1; x/z+1, z+1); intermediate negative powers of z cancel.
LaurentPoly ford_s_poly_via_tutte(const Matroid& m, const ComputeOptions& opts = {});
LaurentPoly ford_s_poly_recursive(const Matroid& m);

/// One quantity computed from a chain Tutte evaluation and by direct count.
struct DualRoute {
  mpz_class via_tutte;
  mpz_class direct;
  bool agree() const { return via_tutte == direct; }
};

struct ConstantEvaluations {
  int k = 1;
  DualRoute num_bases;                // T^k(1..1; 1..1)
  DualRoute num_independent;          // T^1(2; 1)
  DualRoute independent_chain_count;  // T^k(2..2; 1,2..2) = Σ_I k^{n-|I|}
  DualRoute parity_1100;              // T^k(1..1; 0..0)
  DualRoute euler;                    // T^k(0..0; 1..1)
  DualRoute eval_2112;                // T^2(2,1; 1,2): A ⊆ B, A independent, B spanning
  DualRoute sum_2m_Im;                // T^2(2,2; 1,1) = Σ_m 2^m I_m
  DualRoute spanning_pair;            // T^2(1,1; 2,2): A ⊆ B both spanning

  bool all_agree() const;
};

/// Matroids only; k >= 1.
ConstantEvaluations constant_evaluations(const Matroid& m, int k, const ComputeOptions& opts = {});

/// Exact value of a chain Tutte polynomial at x_i = xs[i-1], y_i = ys[i-1].
mpz_class evaluate_chain(const LaurentPoly& t, const std::vector<long>& xs,
                         const std::vector<long>& ys);

}  // namespace chaintutte
