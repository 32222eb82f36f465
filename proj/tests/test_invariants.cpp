#include <doctest.h>

#include "chaintutte/chain_tutte.hpp"
#include "chaintutte/error.hpp"
#include "chaintutte/g_invariant.hpp"
#include "chaintutte/invariants.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chaintutte;

namespace {

const LaurentPoly s(kS), t(kT), x(X(1)), y(Y(1)), z(kZ);

GInvariant g_of(int n, std::map<std::vector<int>, long> counts) {
  GInvariant g;
  g.n = n;
  for (const auto& [k, c] : counts) g.counts[k] = c;
  return g;
}

}  // namespace

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_poly(make_uniform(1, 1)) == t - 1);
  CHECK(characteristic_poly(make_uniform(2, 3)) == t * t - 3 * t + 2);
  CHECK(characteristic_poly(direct_sum(make_uniform(0, 1), make_uniform(1, 1))).is_zero());
  for (const auto& [name, m] : testing::corpus_up_to(7)) {
    INFO(name);
    CHECK(characteristic_poly(m) == characteristic_poly_mobius(FlatLattice(m)));
  }
}

TEST_CASE("Mobius polynomial") {
  CHECK(mobius_poly(make_uniform(1, 1)) == s * t - s + 1);
  CHECK(mobius_poly(make_uniform(2, 3)).evaluate({{kS, 0}, {kT, 0}}) == 1);
  for (const auto& [name, m] : testing::corpus_up_to(6)) {
    INFO(name);
    const LaurentPoly direct = mobius_poly(m);
    CHECK(direct.evaluate({{kS, 0}, {kT, 0}}) == 1);
    CHECK(direct == mobius_poly_via_tutte(m));
    CHECK(direct == mobius_poly_recursive(m));
  }
}

TEST_CASE("opposite characteristic polynomial") {
  CHECK(opposite_char_poly(make_uniform(1, 1)) == t - 1);
  for (const auto& [name, m] : testing::corpus_up_to(6)) {
    INFO(name);
    const LaurentPoly direct = opposite_char_poly(m);
    CHECK(direct == opposite_char_poly_via_tutte(m));
    CHECK(direct == opposite_char_poly_recursive(m));
    if (is_simple(m) && m.rank() > 0) CHECK(direct.evaluate({{kT, 1}}) == 0);
  }
  CHECK(opposite_char_poly_recursive(testing::complete_graph(4)) ==
        opposite_char_poly(testing::complete_graph(4)));
}

TEST_CASE("J-Mobius polynomial") {
  CHECK(j_mobius_poly(make_uniform(0, 1)) == LaurentPoly(1L));
  // 2-chain: J(0,0,0)=J(1,1,1)=1, J(0,0,1)=J(0,1,1)=-1, crk 0̂ = 1
  CHECK(j_mobius_poly(make_uniform(1, 1)) ==
        monomial({{kT, 3}}) - monomial({{kT, 2}}) - t + 1);
  for (const auto& [name, m] : testing::corpus_up_to(4)) {
    INFO(name);
    const FlatLattice l(m);
    const auto solved = testing::brute_j_solve(m);
    LaurentPoly oracle;
    for (const auto& [flag, j] : solved) {
      const auto [a, b, c] = flag;
      CHECK(j.get_den() == 1);
      oracle += LaurentPoly(Monomial{{kT, 3 * m.rank() - m.rank(a) - m.rank(b) - m.rank(c)}}, j.get_num());
    }
    CHECK(j_mobius_poly(l) == oracle);
  }
}

TEST_CASE("Ford's a-function and expected codimension") {
  const Matroid u23 = make_uniform(2, 3);
  CHECK(ford_a(u23, 0) == 0);
  CHECK(ford_a(make_uniform(1, 1), 1) == 0);
  CHECK(ford_a(u23, 0b001) == 0);
  CHECK(ford_a(u23, 0b111) == 1);
  for (int n = 0; n <= 4; ++n) CHECK(expected_codim(make_boolean(n)) == 0);
  CHECK(expected_codim_via_tutte(make_uniform(2, 4)) == expected_codim(make_uniform(2, 4)));
  CHECK(expected_codim_recursive(u23) == expected_codim(u23));
  for (const auto& [name, m] : testing::corpus_up_to(7)) {
    INFO(name);
    const auto table = ford_a_table(m);
    for (Mask a = 0; a <= m.ground(); ++a) CHECK(table[a] == ford_a(m, a));
    const long long ec = expected_codim(m);
    CHECK(ec == expected_codim_via_tutte(m));
    CHECK(ec == expected_codim_recursive(m));
  }
}

TEST_CASE("Ford S-polynomial") {
  CHECK(ford_s_poly(make_uniform(1, 1)) == y + z + 1);
  CHECK(ford_s_poly_via_tutte(make_uniform(2, 3)) == ford_s_poly(make_uniform(2, 3)));
  const Matroid u24 = make_uniform(2, 4);
  LaurentPoly correction;
  for (Mask b = 0; b <= 0b1110; b += 2)
    for (Mask a = 0; a <= b; a += 2)
      if ((a & ~b) == 0) {
        const int rk_con_b = u24.rank(b | 1) - 1;
        correction += LaurentPoly(Monomial{{X(1), u24.nullity(a)}, {Y(1), 1 - rk_con_b},
                                           {kZ, popcount(b) - popcount(a)}},
                                  mpz_class(1));
      }
  CHECK(ford_s_poly(u24) ==
        ford_s_poly(delete_set(u24, 1)) + ford_s_poly(contract_set(u24, 1)) + z * correction);
  for (const auto& [name, m] : testing::corpus_up_to(6)) {
    INFO(name);
    CHECK(ford_s_poly(m) == ford_s_poly_via_tutte(m));
    CHECK(ford_s_poly(m) == ford_s_poly_recursive(m));
  }
}

TEST_CASE("G-invariant") {
  CHECK(g_invariant(make_uniform(1, 1)) == g_of(1, {{{1}, 1}}));
  CHECK(g_invariant(make_uniform(1, 2)) == g_of(2, {{{1, 0}, 2}}));
  CHECK(g_invariant(make_uniform(2, 3)) == g_of(3, {{{1, 1, 0}, 6}}));
  CHECK(g_invariant(Matroid()) == g_of(0, {{{}, 1}}));
  for (const auto& [name, m] : testing::corpus_up_to(5)) {
    INFO(name);
    const GInvariant g = g_invariant(m);
    CHECK(g == g_from_top_tutte(m));
    mpz_class total = 0, fact = 1;
    for (int i = 2; i <= m.size(); ++i) fact *= i;
    for (const auto& [ranks, c] : g.counts) {
      total += c;
      int ones = 0;
      for (int r : ranks) {
        CHECK((r == 0 || r == 1));
        ones += r;
      }
      CHECK(ones == m.rank());
    }
    CHECK(total == fact);
  }
  const GInvariant g = g_invariant(make_uniform(2, 3));
  CHECK(GInvariant::from_json(g.to_json()) == g);
  CHECK(g.to_json().dump() == R"({"counts":{"1,1,0":6},"n":3})");
  ComputeOptions tight;
  tight.max_perms = 100;
  CHECK_THROWS_AS(g_invariant(make_uniform(2, 6), tight), Error);
  tight.max_top_tutte_ground = 3;
  CHECK_THROWS_AS(g_from_top_tutte(make_uniform(2, 4), tight), Error);
}

TEST_CASE("constant evaluations") {
  const ConstantEvaluations k4 = constant_evaluations(testing::complete_graph(4), 2);
  CHECK(k4.eval_2112.via_tutte == 523);
  CHECK(k4.num_bases.direct == 16);
  for (const auto& [name, m] : testing::corpus_up_to(7)) {
    INFO(name);
    for (int k = 1; k <= 4; ++k) {
      INFO(k);
      const ConstantEvaluations ev = constant_evaluations(m, k);
      CHECK(ev.num_bases.agree());
      CHECK(ev.num_independent.agree());
      CHECK(ev.independent_chain_count.agree());
      CHECK(ev.parity_1100.agree());
      CHECK(ev.euler.agree());
      CHECK(ev.eval_2112.agree());
      CHECK(ev.sum_2m_Im.agree());
      CHECK(ev.spanning_pair.agree());
    }
  }
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const LaurentPoly tk = chain_tutte(make_boolean(n), k).poly;
      CHECK(evaluate_chain(tk, std::vector<long>(k, 2), std::vector<long>(k, 1)) ==
            mpz_class(saturating_pow(k + 1, n)));
    }
}
