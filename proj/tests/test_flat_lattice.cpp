#include <doctest.h>

#include "chaintutte/error.hpp"
#include "chaintutte/flat_lattice.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chaintutte;

TEST_CASE("flats of small matroids") {
  const FlatLattice u23(make_uniform(2, 3));
  CHECK(u23.flats() == std::vector<Mask>{0b000, 0b001, 0b010, 0b100, 0b111});
  CHECK(FlatLattice(make_boolean(2)).size() == 4);
  const FlatLattice loop(make_uniform(0, 1));
  CHECK(loop.size() == 1);
  CHECK(loop.flat(0) == 0b1);
  CHECK(loop.index_of(0b1) == 0);
  CHECK(u23.index_of(0b011) == -1);
  CHECK(u23.join_of(0b011) == u23.top());
}

TEST_CASE("flats agree with brute force closure") {
  for (const auto& [name, m] : testing::corpus_up_to(7)) {
    INFO(name);
    std::vector<Mask> got = FlatLattice(m).flats();
    std::sort(got.begin(), got.end());
    CHECK(got == testing::brute_flats(m));
  }
}

TEST_CASE("Mobius values") {
  const FlatLattice u23(make_uniform(2, 3));
  CHECK(u23.mobius(u23.bottom(), u23.top()) == 2);
  for (int x = 0; x < u23.size(); ++x) CHECK(u23.mobius(x, x) == 1);
  const FlatLattice b2(make_boolean(2));
  CHECK(b2.mobius(b2.bottom(), b2.top()) == 1);
  CHECK_THROWS_AS(u23.mobius(u23.index_of(0b001), u23.index_of(0b010)), Error);
  CHECK_THROWS_AS(u23.mobius(u23.top(), u23.bottom()), Error);

  for (const auto& [name, m] : testing::corpus_up_to(6)) {
    INFO(name);
    const FlatLattice l(m);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        if (!l.leq(x, y)) continue;
        CHECK(l.mobius(x, y) == testing::brute_mobius(m, l.flat(x), l.flat(y)));
        long long interval = 0;
        for (int z = 0; z < l.size(); ++z)
          if (l.leq(x, z) && l.leq(z, y)) interval += l.mobius(x, z);
        CHECK(interval == (x == y ? 1 : 0));
      }
  }
}

TEST_CASE("polymatroids have no flat lattice") {
  CHECK_THROWS_AS(FlatLattice(make_from_rank_table(1, {0, 2})), Error);
}

TEST_CASE("J-function") {
  SUBCASE("two-element chain") {
    const FlatLattice c(make_uniform(1, 1));
    CHECK(c.j_function(0, 0, 0) == 1);
    CHECK(c.j_function(1, 1, 1) == 1);
    // δ(0,0,1) = 0 = J(0,0,1) + J(0,0,0)
    CHECK(c.j_function(0, 0, 1) == -1);
    // δ(0,1,1) = 0 = J(0,1,1) + J(1,1,1)
    CHECK(c.j_function(0, 1, 1) == -1);
  }
  SUBCASE("non-flags are rejected") {
    const FlatLattice c(make_uniform(1, 1));
    CHECK_THROWS_AS(c.j_function(1, 0, 1), Error);
  }
  SUBCASE("defining identity and linear solve") {
    for (const auto& [name, m] : testing::corpus_up_to(5)) {
      INFO(name);
      const FlatLattice l(m);
      const auto solved = testing::brute_j_solve(m);
      const int f = l.size();
      for (int x = 0; x < f; ++x)
        for (int y = 0; y < f; ++y)
          for (int z = 0; z < f; ++z) {
            if (!l.leq(x, y) || !l.leq(y, z)) continue;
            CHECK(mpq_class(static_cast<long>(l.j_function(x, y, z))) == solved.at({l.flat(x), l.flat(y), l.flat(z)}));
            long long sum = 0;
            for (int a = 0; a < f; ++a)
              for (int b = 0; b < f; ++b)
                if (l.leq(x, a) && l.leq(a, y) && l.leq(y, b) && l.leq(b, z)) sum += l.j_function(a, y, b);
            CHECK(sum == (x == y && y == z ? 1 : 0));
          }
    }
  }
}

TEST_CASE("Mobius lemma oracles on small matroids") {
  for (const auto& [name, m] : testing::corpus_up_to(4)) {
    INFO(name);
    const FlatLattice l(m);
    const long long mu = l.mobius(l.bottom(), l.top());
    if (is_simple(m)) CHECK(mu == testing::spanning_alternating_sum(m));
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y)
        if (l.leq(x, y)) CHECK(l.mobius(x, y) == testing::nested_closure_sum(m, l.flat(x), l.flat(y)));
    for (int k = 2; k <= 4; ++k) {
      if (k % 2 == 0)
        CHECK(testing::spanning_chain_sum(m, k) == 1);
      else if (!has_loop(m))
        CHECK(testing::spanning_chain_sum(m, k) == mu);
    }
  }
}
