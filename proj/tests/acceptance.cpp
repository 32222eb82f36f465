// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "chaintutte/chain_tutte.hpp"
#include "chaintutte/cli.hpp"
#include "chaintutte/error.hpp"
#include "chaintutte/flat_lattice.hpp"
#include "chaintutte/g_invariant.hpp"
#include "chaintutte/invariants.hpp"
#include "chaintutte/io.hpp"
#include "chaintutte/valuation.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chaintutte;
using testing::NamedMatroid;

namespace {

/// Collects failure notes for one criterion.
struct Log {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

LaurentPoly x(int i) { return LaurentPoly(X(i)); }
LaurentPoly y(int i) { return LaurentPoly(Y(i)); }

std::string graph_json(int v, bool cycle) {
  std::string edges;
  auto add = [&](int a, int b) { edges += (edges.empty() ? "" : ",") + ("[" + std::to_string(a) + "," + std::to_string(b) + "]"); };
  if (cycle)
    for (int i = 0; i < v; ++i) add(i, (i + 1) % v);
  else
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) add(i, j);
  return R"({"type":"graph","vertices":)" + std::to_string(v) + R"(,"edges":[)" + edges + "]}";
}

// 1 -------------------------------------------------------------------------

void table_reproduction(Log& log) {
  const long complete[] = {1, 2, 19, 523, 36478};
  const long cycles[] = {19, 47, 111, 255, 575};
  auto check = [&](const std::string& name, const Matroid& m, long expected) {
    const LaurentPoly t2 = chain_tutte(m, 2).poly;
    const mpz_class got = evaluate_chain(t2, {2, 1}, {1, 2});
    log.expect(got == expected, name + ": T^2(2,1;1,2) = " + got.get_str() + ", expected " + std::to_string(expected));
  };
  for (int n = 1; n <= 5; ++n) check("K" + std::to_string(n), testing::complete_graph(n), complete[n - 1]);
  for (int n = 3; n <= 7; ++n) check("C" + std::to_string(n), testing::cycle_graph(n), cycles[n - 3]);
}

// 2 -------------------------------------------------------------------------

void boolean_closed_form(Log& log) {
  for (int k = 1; k <= 3; ++k) {
    LaurentPoly one(1L), prod(1L);
    for (int i = 1; i <= k; ++i) {
      prod *= x(i) - 1;
      one += prod;
    }
    for (int n = 0; n <= 4; ++n)
      log.expect(chain_tutte(make_boolean(n), k).poly == one.pow(static_cast<unsigned>(n)),
                 "B" + std::to_string(n) + ", k=" + std::to_string(k));
  }
}

// 3 -------------------------------------------------------------------------

void golden_polynomials(Log& log) {
  const LaurentPoly u23 = x(1) * x(1) * x(2) * x(2) + x(1) * x(1) * x(2) - 2 * x(1) * x(2) * x(2) +
                          x(1) * x(1) * y(2) + x(1) * x(2) + x(2) * x(2) + x(1) * y(2) + y(1) * y(2) -
                          2 * x(2) - y(1) + 1;
  const LaurentPoly d = (x(1) - 1) * (x(2) - 1) + 2 * (x(1) - 1) + (x(1) - 1) * (y(2) - 1) +
                        2 * (y(2) - 1) + (y(1) - 1) * (y(2) - 1) + 2;
  const LaurentPoly got_u23 = chain_tutte(make_uniform(2, 3), 2).poly;
  log.expect(got_u23 == u23 && got_u23.num_terms() == 11, "U(2,3): got " + got_u23.to_string());
  const LaurentPoly got_d = chain_tutte(make_uniform(1, 2), 2).poly;
  log.expect(got_d == d, "U(1,2): got " + got_d.to_string());
}

// 4 -------------------------------------------------------------------------

void identity_suite(Log& log) {
  const auto& all = testing::corpus();
  for (const auto& [name, m] : all) {
    const int n = m.size();
    const ChainTuttePoly top = chain_tutte(m, n <= 6 ? n : 3);
    for (int k = 0; k <= 3; ++k) {
      const std::string tag = name + ", k=" + std::to_string(k);
      const LaurentPoly t = chain_tutte(m, k).poly;
      log.expect(chain_tutte(dual(m), k).poly == reverse_swap_xy(t, k), tag + ": duality");
      log.expect(chain_tutte_recursive(m, k).poly == t, tag + ": recursion");
      if (k <= top.k) log.expect(specialize_down(top, k).poly == t, tag + ": specialisation");
      std::map<Variable, mpq_class> twos;
      for (int i = 1; i <= k; ++i) {
        twos[X(i)] = 2;
        twos[Y(i)] = 2;
      }
      log.expect(t.evaluate(twos) == mpq_class(saturating_pow(k + 1, n)), tag + ": all-2s count");
      log.expect(universal_to_whitney_check(m, k), tag + ": universal coordinates");
    }
  }
  // Products over pairs of small corpus members, and the corpus direct sums.
  const auto small = testing::corpus_up_to(3);
  for (const auto& a : small)
    for (const auto& b : small)
      for (int k = 1; k <= 3; ++k)
        log.expect(chain_tutte(direct_sum(a.m, b.m), k).poly == chain_tutte(a.m, k).poly * chain_tutte(b.m, k).poly,
                   a.name + " + " + b.name + ", k=" + std::to_string(k) + ": product");
  const std::vector<std::pair<Matroid, Matroid>> sums = {
      {make_uniform(0, 1), make_uniform(1, 1)},
      {make_uniform(1, 2), make_uniform(2, 3)},
      {testing::cycle_graph(3), make_uniform(0, 1)},
      {testing::k4_minus_edge(), make_uniform(1, 1)},
      {testing::cycle_graph(4), testing::complete_graph(4)}};
  for (const auto& [a, b] : sums)
    for (int k = 1; k <= 3; ++k)
      log.expect(chain_tutte(direct_sum(a, b), k).poly == chain_tutte(a, k).poly * chain_tutte(b, k).poly,
                 "sum on " + std::to_string(a.size() + b.size()) + " elements, k=" + std::to_string(k) + ": product");
}

// 5 -------------------------------------------------------------------------

void evaluation_suite(Log& log) {
  for (const auto& [name, m] : testing::corpus()) {
    const LaurentPoly mob = mobius_poly(m);
    log.expect(mob == mobius_poly_via_tutte(m), name + ": Mobius polynomial via T^2");
    log.expect(mob == mobius_poly_recursive(m), name + ": Mobius polynomial recursion");
    const LaurentPoly op = opposite_char_poly(m);
    log.expect(op == opposite_char_poly_via_tutte(m), name + ": opposite characteristic via T^2");
    log.expect(op == opposite_char_poly_recursive(m), name + ": opposite characteristic recursion");
    const LaurentPoly s = ford_s_poly(m);
    log.expect(s == ford_s_poly_via_tutte(m), name + ": S-polynomial substitution");
    log.expect(s == ford_s_poly_recursive(m), name + ": S-polynomial recursion");
    const long long ec = expected_codim(m);
    log.expect(ec == expected_codim_via_tutte(m), name + ": ec via derivatives");
    log.expect(ec == expected_codim_recursive(m), name + ": ec recursion");
    log.expect(characteristic_poly(m) == characteristic_poly_mobius(FlatLattice(m)), name + ": characteristic polynomial");
    for (int k = 1; k <= 4; ++k) {
      const ConstantEvaluations ev = constant_evaluations(m, k);
      const std::string tag = name + ", k=" + std::to_string(k) + ": ";
      log.expect(ev.num_bases.agree(), tag + "bases");
      log.expect(ev.num_independent.agree(), tag + "independent sets");
      log.expect(ev.independent_chain_count.agree(), tag + "independent chain count");
      log.expect(ev.parity_1100.agree(), tag + "(1..1;0..0)");
      log.expect(ev.euler.agree(), tag + "(0..0;1..1)");
      log.expect(ev.eval_2112.agree(), tag + "(2,1;1,2)");
      log.expect(ev.sum_2m_Im.agree(), tag + "(2,2;1,1)");
      log.expect(ev.spanning_pair.agree(), tag + "(1,1;2,2)");
    }
  }
}

// 6 -------------------------------------------------------------------------

void g_equivalence(Log& log) {
  for (const auto& [name, m] : testing::corpus_up_to(5))
    log.expect(g_from_top_tutte(m) == g_invariant(m), name);
}

// 7 -------------------------------------------------------------------------

void mobius_lemmas(Log& log) {
  for (const auto& [name, m] : testing::corpus_up_to(5)) {
    const FlatLattice l(m);
    const long long mu = l.mobius(l.bottom(), l.top());
    if (is_simple(m)) log.expect(mu == testing::spanning_alternating_sum(m), name + ": spanning-set sum");
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b)
        if (l.leq(a, b))
          log.expect(l.mobius(a, b) == testing::nested_closure_sum(m, l.flat(a), l.flat(b)),
                     name + ": nested closure sum");
    for (int k = 2; k <= 5; ++k) {
      const long long sum = testing::spanning_chain_sum(m, k);
      if (k % 2 == 0)
        log.expect(sum == 1, name + ": even chain sum, k=" + std::to_string(k));
      else if (!has_loop(m))
        log.expect(sum == mu, name + ": odd chain sum, k=" + std::to_string(k));
    }
  }
}

// 8 -------------------------------------------------------------------------

void non_tutte_grothendieck(Log& log) {
  const LaurentPoly tl = chain_tutte(make_uniform(0, 1), 2).poly;
  const LaurentPoly tc = chain_tutte(make_uniform(1, 1), 2).poly;
  const LaurentPoly td = chain_tutte(make_uniform(1, 2), 2).poly;
  const LaurentPoly t13 = chain_tutte(make_uniform(1, 3), 2).poly;
  const LaurentPoly t23 = chain_tutte(make_uniform(2, 3), 2).poly;
  const LaurentPoly t24 = chain_tutte(make_uniform(2, 4), 2).poly;
  log.expect(tl == 1 + (y(2) - 1) + (y(1) - 1) * (y(2) - 1), "loop polynomial differs from the definition");
  const LaurentPoly lhs = (td * tc - tc) * tc * t24;
  const LaurentPoly rhs = td * t23 - (t23 * tc - td) * tl * t23 + (t23 * tc - td) * t13;
  log.expect(lhs != rhs, "the two sides coincide");
}

// 9 -------------------------------------------------------------------------

void valuation(Log& log) {
  const NerveInput in = nerve_from_json(nlohmann::json::parse(R"({
    "big": {"type": "uniform", "r": 2, "n": 4},
    "cells": [
      {"type": "bases", "n": 4, "bases": [[0,2],[0,3],[1,2],[1,3],[2,3]]},
      {"type": "bases", "n": 4, "bases": [[0,1],[0,2],[0,3],[1,2],[1,3]]}],
    "intersections": {"1,2": {"type": "bases", "n": 4, "bases": [[0,2],[0,3],[1,2],[1,3]]}}})"));
  for (int k = 0; k <= 2; ++k)
    log.expect(check_valuation("chain-tutte", in.big, in.nerve, k).equal, "chain-tutte k=" + std::to_string(k));
  for (const char* id : {"chain-whitney", "mobius-poly", "opp-char-poly", "ford-s", "g-invariant"})
    log.expect(check_valuation(id, in.big, in.nerve, 2).equal, id);

  SubdivisionNerve corrupted = in.nerve;
  corrupted.cells[0] = in.big;
  for (const char* id : {"chain-tutte", "mobius-poly", "g-invariant"})
    log.expect(!check_valuation(id, in.big, corrupted, 2).equal, std::string("negative control passed for ") + id);
}

// 10 ------------------------------------------------------------------------

void determinism(Log& log) {
  std::vector<std::vector<std::string>> commands;
  const std::string point = R"({"x1":2,"x2":1,"y1":1,"y2":2})";
  for (int n = 1; n <= 5; ++n) commands.push_back({"evaluate", "-k", "2", "--point", point, "--matroid", graph_json(n, false)});
  for (int n = 3; n <= 7; ++n) commands.push_back({"evaluate", "-k", "2", "--point", point, "--matroid", graph_json(n, true)});
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      commands.push_back({"chain-tutte", "-k", std::to_string(k), "--matroid",
                          R"({"type":"uniform","r":)" + std::to_string(n) + R"(,"n":)" + std::to_string(n) + "}"});
  commands.push_back({"chain-tutte", "-k", "2", "--matroid", R"({"type":"uniform","r":2,"n":3})"});
  commands.push_back({"chain-tutte", "-k", "2", "--matroid", R"({"type":"uniform","r":1,"n":2})"});
  commands.push_back({"chain-tutte", "-k", "2", "--matroid", graph_json(5, false)});
  for (const auto& cmd : commands) {
    std::string reference;
    for (const char* threads : {"1", "2", "8"}) {
      std::vector<std::string> args{"chaintutte"};
      args.insert(args.end(), cmd.begin(), cmd.end());
      args.push_back("--threads");
      args.push_back(threads);
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      log.expect(code == 0, cmd[0] + " failed: " + err.str());
      if (std::string(threads) == "1")
        reference = out.str();
      else
        log.expect(out.str() == reference, cmd[0] + " output differs with " + threads + " threads");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Log&)>>> criteria = {
      {"table reproduction (K1..K5, C3..C7)", table_reproduction},
      {"Boolean closed form", boolean_closed_form},
      {"golden polynomials", golden_polynomials},
      {"chain polynomial identity suite", identity_suite},
      {"evaluation identity suite", evaluation_suite},
      {"G-invariant from the top chain polynomial", g_equivalence},
      {"Mobius lemma oracles", mobius_lemmas},
      {"non Tutte-Grothendieck witness", non_tutte_grothendieck},
      {"valuation check on the hypersimplex split", valuation},
      {"determinism across thread counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = log.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s (%.2fs)\n", i + 1, pass ? "PASS" : "FAIL", criteria[i].first, secs);
    for (std::size_t f = 0; f < log.failures.size() && f < 10; ++f)
      std::printf("    %s\n", log.failures[f].c_str());
    if (log.failures.size() > 10) std::printf("    ... %zu more\n", log.failures.size() - 10);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
