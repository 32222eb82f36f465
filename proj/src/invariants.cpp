#include "chaintutte/invariants.hpp"

#include <array>
#include <map>

#include "chaintutte/chain_tutte.hpp"
#include "chaintutte/error.hpp"

namespace chaintutte {

namespace {

void require_matroid(const Matroid& m, const char* what) {
  if (!m.is_matroid())
    throw Error(ErrorKind::Unsupported, std::string(what) + " is defined for matroids only");
}

LaurentPoly var(Variable v) { return LaurentPoly(v); }

LaurentPoly power(Variable v, int e, long coeff = 1) {
  if (e == 0) return LaurentPoly(coeff);
  return LaurentPoly(Monomial{{v, e}}, mpz_class(coeff));
}

int sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// Smallest element that is neither a loop nor a coloop, or -1.
int pivot_element(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e)
    if (!is_loop(m, e) && !is_coloop(m, e)) return e;
  return -1;
}

/// χ of M|S in the variable v from the subset expansion
/// Σ_{A ⊆ S} (-1)^{|A|} v^{rk S - rk A}.
LaurentPoly chi_of_restriction(const Matroid& m, Mask s, Variable v) {
  const int rs = m.rank(s);
  std::map<int, long long> coeffs;
  for_each_subset(s, [&](Mask a) { coeffs[rs - m.rank(a)] += sign(popcount(a)); });
  LaurentPoly out;
  for (const auto& [e, c] : coeffs)
    if (c != 0) out += power(v, e, static_cast<long>(c));
  return out;
}

using Triple = std::array<int, 3>;

LaurentPoly poly_from_xyz(const std::map<Triple, long long>& counts) {
  LaurentPoly out;
  for (const auto& [e, c] : counts) {
    if (c == 0) continue;
    out += LaurentPoly(Monomial{{X(1), e[0]}, {Y(1), e[1]}, {kZ, e[2]}}, mpz_class(static_cast<long>(c)));
  }
  return out;
}

/// Σ_{A ⊆ B ⊆ s} of f(A, B); visits pairs in a fixed order.
template <class F>
void for_each_nested_pair(Mask s, F&& f) {
  for_each_subset(s, [&](Mask b) { for_each_subset(b, [&](Mask a) { f(a, b); }); });
}

}  // namespace

LaurentPoly classical_tutte(const Matroid& m, const ComputeOptions& opts) {
  return chain_tutte(m, 1, opts).poly;
}

LaurentPoly characteristic_poly(const Matroid& m, const ComputeOptions& opts) {
  require_matroid(m, "the characteristic polynomial");
  const LaurentPoly t = classical_tutte(m, opts);
  const LaurentPoly v = t.substitute({{X(1), 1 - var(kT)}, {Y(1), 0}});
  return sign(m.rank()) * v;
}

LaurentPoly characteristic_poly_mobius(const FlatLattice& lattice) {
  if (has_loop(lattice.matroid())) return {};
  LaurentPoly out;
  for (int x = 0; x < lattice.size(); ++x)
    out += power(kT, lattice.corank(x), static_cast<long>(lattice.mobius(lattice.bottom(), x)));
  return out;
}

LaurentPoly mobius_poly(const FlatLattice& lattice) {
  LaurentPoly out;
  for (int x = 0; x < lattice.size(); ++x)
    for (int y = x; y < lattice.size(); ++y) {
      if (!lattice.leq(x, y)) continue;
      const long long mu = lattice.mobius(x, y);
      if (mu == 0) continue;
      out += LaurentPoly(Monomial{{kS, lattice.corank(x)}, {kT, lattice.corank(y)}},
                         mpz_class(static_cast<long>(mu)));
    }
  return out;
}

LaurentPoly mobius_poly(const Matroid& m) { return mobius_poly(FlatLattice(m)); }

LaurentPoly mobius_poly_via_tutte(const Matroid& m, const ComputeOptions& opts) {
  require_matroid(m, "the Möbius polynomial");
  const LaurentPoly t2 = chain_tutte(m, 2, opts).poly;
  return t2.substitute({{X(1), 1 - var(kS)}, {X(2), 1 - var(kT)}, {Y(1), 0}, {Y(2), 0}});
}

LaurentPoly mobius_poly_recursive(const Matroid& m) {
  require_matroid(m, "the Möbius polynomial");
  const int a = pivot_element(m);
  if (a < 0) return mobius_poly(m);
  LaurentPoly out = mobius_poly_recursive(delete_set(m, bit(a))) +
                    mobius_poly_recursive(contract_set(m, bit(a)));
  const int r = m.rank();
  const int r_con = r - 1;
  for_each_subset(m.ground() & ~bit(a), [&](Mask s) {
    const int rs = m.rank(s);
    const int rs_con = m.rank(s | bit(a)) - 1;
    const int sg = sign(r_con + (r - rs) + popcount(s) + rs);
    out += sg * LaurentPoly(Monomial{{kS, r - rs}, {kT, r_con - rs_con}}, mpz_class(1)) *
           chi_of_restriction(m, s, kS);
  });
  return out;
}

LaurentPoly opposite_char_poly(const FlatLattice& lattice) {
  LaurentPoly out;
  for (int x = 0; x < lattice.size(); ++x)
    out += power(kT, lattice.rank(x), static_cast<long>(lattice.mobius(x, lattice.top())));
  return out;
}

LaurentPoly opposite_char_poly(const Matroid& m) { return opposite_char_poly(FlatLattice(m)); }

LaurentPoly reverse_in_t(const LaurentPoly& p, int d) {
  LaurentPoly out = p.substitute({{kT, power(kT, -1)}}) * power(kT, d);
  out.require_polynomial("t-reversal");
  return out;
}

LaurentPoly opposite_char_poly_via_tutte(const Matroid& m, const ComputeOptions& opts) {
  require_matroid(m, "the opposite characteristic polynomial");
  const LaurentPoly t2 = chain_tutte(m, 2, opts).poly;
  const LaurentPoly v =
      t2.substitute({{X(1), 1 - var(kT)}, {X(2), 1}, {Y(1), 0}, {Y(2), 0}});
  return reverse_in_t(v, m.rank());
}

LaurentPoly opposite_char_poly_recursive(const Matroid& m) {
  require_matroid(m, "the opposite characteristic polynomial");
  const int a = pivot_element(m);
  if (a < 0) return opposite_char_poly(m);
  LaurentPoly out = opposite_char_poly_recursive(delete_set(m, bit(a))) +
                    var(kT) * opposite_char_poly_recursive(contract_set(m, bit(a)));
  const int r = m.rank();
  const int r_con = r - 1;
  LaurentPoly correction;
  for_each_subset(m.ground() & ~bit(a), [&](Mask s) {
    if (m.rank(s | bit(a)) - 1 != r_con) return;
    const int rs = m.rank(s);
    const int sg = sign(rs + popcount(s) - r_con);
    correction += sg * chi_of_restriction(m, s, kT) * power(kT, r - rs, sign(r - rs));
  });
  return out + reverse_in_t(correction, r);
}

LaurentPoly j_mobius_poly(const FlatLattice& lattice) {
  LaurentPoly out;
  const int f = lattice.size();
  for (int x = 0; x < f; ++x)
    for (int y = x; y < f; ++y) {
      if (!lattice.leq(x, y)) continue;
      for (int z = y; z < f; ++z) {
        if (!lattice.leq(y, z)) continue;
        const long long j = lattice.j_function(x, y, z);
        if (j == 0) continue;
        out += power(kT, lattice.corank(x) + lattice.corank(y) + lattice.corank(z),
                     static_cast<long>(j));
      }
    }
  return out;
}

LaurentPoly j_mobius_poly(const Matroid& m) { return j_mobius_poly(FlatLattice(m)); }

std::vector<long long> ford_a_table(const Matroid& m) {
  require_matroid(m, "Ford's a-function");
  const int n = m.size();
  if (n > 24) throw Error(ErrorKind::BudgetExceeded, "Ford's a-function table needs n <= 24");
  // null(A) = Σ_{B ⊆ A} a(B), so a is the subset Möbius inverse of nullity.
  std::vector<long long> a(std::size_t{1} << n);
  for (Mask s = 0; s < a.size(); ++s) a[s] = m.nullity(s);
  for (int e = 0; e < n; ++e)
    for (Mask s = 0; s < a.size(); ++s)
      if (contains(s, e)) a[s] -= a[s & ~bit(e)];
  return a;
}

long long ford_a(const Matroid& m, Mask a) {
  require_matroid(m, "Ford's a-function");
  if (!is_subset(a, m.ground())) throw Error(ErrorKind::OutOfRange, "subset outside the ground set");
  long long out = 0;
  for_each_subset(a, [&](Mask b) { out += sign(popcount(a & ~b)) * m.nullity(b); });
  return out;
}

long long expected_codim(const Matroid& m) {
  const std::vector<long long> a = ford_a_table(m);
  long long out = 0;
  for (Mask s = 0; s < a.size(); ++s) out += m.corank(s) * a[s];
  return out;
}

long long expected_codim_via_tutte(const Matroid& m, const ComputeOptions& opts) {
  require_matroid(m, "the expected codimension");
  const LaurentPoly s = ford_s_poly_via_tutte(m, opts);
  const mpq_class v = s.partial_derivative(X(1)).partial_derivative(Y(1)).evaluate(
      {{X(1), 1}, {Y(1), 1}, {kZ, -1}});
  if (v.get_den() != 1 || !v.get_num().fits_slong_p())
    throw Error(ErrorKind::Internal, "expected codimension is not a machine integer");
  return v.get_num().get_si();
}

long long expected_codim_recursive(const Matroid& m) {
  require_matroid(m, "the expected codimension");
  const int a = pivot_element(m);
  if (a < 0) return expected_codim(m);
  long long out = expected_codim_recursive(delete_set(m, bit(a))) +
                  expected_codim_recursive(contract_set(m, bit(a)));
  const int r_con = m.rank() - 1;
  for_each_nested_pair(m.ground() & ~bit(a), [&](Mask s_a, Mask s_b) {
    const int crk_con = r_con - (m.rank(s_b | bit(a)) - 1);
    out -= static_cast<long long>(m.nullity(s_a)) * crk_con * sign(popcount(s_b) - popcount(s_a));
  });
  return out;
}

LaurentPoly ford_s_poly(const Matroid& m) {
  std::map<Triple, long long> counts;
  const int r = m.rank();
  for_each_nested_pair(m.ground(), [&](Mask s_a, Mask s_b) {
    ++counts[{m.nullity(s_a), r - m.rank(s_b), popcount(s_b) - popcount(s_a)}];
  });
  return poly_from_xyz(counts);
}

LaurentPoly ford_s_poly_via_tutte(const Matroid& m, const ComputeOptions& opts) {
  const LaurentPoly t2 = chain_tutte(m, 2, opts).poly;
  const LaurentPoly z = var(kZ);
  const LaurentPoly z_inv = power(kZ, -1);
  LaurentPoly s = t2.substitute({{X(1), z + 1},
                                 {X(2), var(Y(1)) * z_inv + 1},
                                 {Y(1), var(X(1)) * z_inv + 1},
                                 {Y(2), z + 1}});
  s.require_polynomial("Ford substitution");
  return s;
}

LaurentPoly ford_s_poly_recursive(const Matroid& m) {
  require_matroid(m, "the S-polynomial recursion");
  const int a = pivot_element(m);
  if (a < 0) return ford_s_poly(m);
  LaurentPoly out =
      ford_s_poly_recursive(delete_set(m, bit(a))) + ford_s_poly_recursive(contract_set(m, bit(a)));
  const int r_con = m.rank() - 1;
  std::map<Triple, long long> counts;
  for_each_nested_pair(m.ground() & ~bit(a), [&](Mask s_a, Mask s_b) {
    ++counts[{m.nullity(s_a), r_con - (m.rank(s_b | bit(a)) - 1),
              popcount(s_b) - popcount(s_a) + 1}];
  });
  return out + poly_from_xyz(counts);
}

mpz_class evaluate_chain(const LaurentPoly& t, const std::vector<long>& xs,
                         const std::vector<long>& ys) {
  std::map<Variable, mpq_class> point;
  for (std::size_t i = 0; i < xs.size(); ++i) point.emplace(X(static_cast<std::uint32_t>(i + 1)), xs[i]);
  for (std::size_t i = 0; i < ys.size(); ++i) point.emplace(Y(static_cast<std::uint32_t>(i + 1)), ys[i]);
  const mpq_class v = t.evaluate(point);
  if (v.get_den() != 1) throw Error(ErrorKind::Internal, "non-integral chain evaluation");
  return v.get_num();
}

bool ConstantEvaluations::all_agree() const {
  return num_bases.agree() && num_independent.agree() && independent_chain_count.agree() &&
         parity_1100.agree() && euler.agree() && eval_2112.agree() && sum_2m_Im.agree() &&
         spanning_pair.agree();
}

ConstantEvaluations constant_evaluations(const Matroid& m, int k, const ComputeOptions& opts) {
  require_matroid(m, "constant evaluations");
  if (k < 1) throw Error(ErrorKind::InvalidParameters, "constant evaluations need k >= 1");
  const int n = m.size();
  const int r = m.rank();
  const auto uk = static_cast<std::size_t>(k);
  const LaurentPoly t1 = chain_tutte(m, 1, opts).poly;
  const LaurentPoly t2 = chain_tutte(m, 2, opts).poly;
  const LaurentPoly tk = k == 2 ? t2 : k == 1 ? t1 : chain_tutte(m, k, opts).poly;

  ConstantEvaluations out;
  out.k = k;
  out.num_bases.via_tutte = evaluate_chain(tk, std::vector<long>(uk, 1), std::vector<long>(uk, 1));
  out.num_independent.via_tutte = evaluate_chain(t1, {2}, {1});
  {
    std::vector<long> ys(uk, 2);
    ys[0] = 1;
    out.independent_chain_count.via_tutte = evaluate_chain(tk, std::vector<long>(uk, 2), ys);
  }
  out.parity_1100.via_tutte = evaluate_chain(tk, std::vector<long>(uk, 1), std::vector<long>(uk, 0));
  out.euler.via_tutte = evaluate_chain(tk, std::vector<long>(uk, 0), std::vector<long>(uk, 1));
  out.eval_2112.via_tutte = evaluate_chain(t2, {2, 1}, {1, 2});
  out.sum_2m_Im.via_tutte = evaluate_chain(t2, {2, 2}, {1, 1});
  out.spanning_pair.via_tutte = evaluate_chain(t2, {1, 1}, {2, 2});

  mpz_class bases_count, indep_count, chain_count, euler_sum, pow2_sum, pairs_2112, spanning_pairs;
  mpz_class k_pow;
  for_each_subset(m.ground(), [&](Mask s) {
    const int rs = m.rank(s);
    const int size = popcount(s);
    if (rs == size) {
      ++indep_count;
      if (rs == r) ++bases_count;
      mpz_ui_pow_ui(k_pow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n - size));
      chain_count += k_pow;
      euler_sum += sign(size);
      pow2_sum += mpz_class(1) << size;
    }
    if (rs == r) {
      for_each_subset(s, [&](Mask a) {
        const int ra = m.rank(a);
        if (ra == popcount(a)) ++pairs_2112;
        if (ra == r) ++spanning_pairs;
      });
    }
  });
  out.num_bases.direct = bases_count;
  out.num_independent.direct = indep_count;
  out.independent_chain_count.direct = chain_count;
  if (k % 2 == 0) {
    out.parity_1100.direct = 1;
    out.euler.direct = 1;
  } else {
    const FlatLattice lattice(m);
    out.parity_1100.direct =
        has_loop(m) ? 0L : static_cast<long>(sign(r) * lattice.mobius(lattice.bottom(), lattice.top()));
    out.euler.direct = sign(r) * euler_sum;
  }
  out.eval_2112.direct = pairs_2112;
  out.sum_2m_Im.direct = pow2_sum;
  out.spanning_pair.direct = spanning_pairs;
  return out;
}

}  // namespace chaintutte
