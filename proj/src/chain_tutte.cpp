#include "chaintutte/chain_tutte.hpp"

#include <bit>
#include <map>
#include <tuple>
#include <unordered_map>

#include "chaintutte/error.hpp"

namespace chaintutte {

namespace {

// Below this many chains thread start-up costs more than it saves.
constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

unsigned workers_for(std::uint64_t total, const ComputeOptions& opts) {
  return total < kParallelThreshold ? 1U : opts.worker_count();
}

/// Counts exponent vectors of a fixed length. Vectors are bit-packed into a
/// 64-bit key when they fit, which covers every practical chain size.
class MonomialCounter {
 public:
  MonomialCounter(int length, int offset, int span)
      : length_(length), offset_(offset), bits_(std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(span))))) {
    packed_ = length_ * bits_ <= 64;
  }

  void add(const int* exps, std::uint64_t count = 1) {
    if (packed_) {
      std::uint64_t key = 0;
      for (int i = 0; i < length_; ++i)
        key |= static_cast<std::uint64_t>(exps[i] + offset_) << (i * bits_);
      packed_counts_[key] += count;
    } else {
      wide_counts_[std::vector<int>(exps, exps + length_)] += count;
    }
  }

  void merge(const MonomialCounter& other) {
    for (const auto& [key, c] : other.packed_counts_) packed_counts_[key] += c;
    for (const auto& [key, c] : other.wide_counts_) wide_counts_[key] += c;
  }

  template <class F>
  void for_each(F&& f) const {
    std::vector<int> exps(static_cast<std::size_t>(length_));
    const std::uint64_t mask = bits_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits_) - 1);
    for (const auto& [key, c] : packed_counts_) {
      for (int i = 0; i < length_; ++i)
        exps[i] = static_cast<int>((key >> (i * bits_)) & mask) - offset_;
      f(exps, c);
    }
    for (const auto& [key, c] : wide_counts_) f(key, c);
  }

  LaurentPoly to_poly(const std::vector<Variable>& vars) const {
    std::vector<LaurentPoly::Term> terms;
    for_each([&](const std::vector<int>& exps, std::uint64_t c) {
      std::vector<Monomial::Factor> fs;
      for (int i = 0; i < length_; ++i)
        if (exps[i] != 0) fs.emplace_back(vars[i].code(), exps[i]);
      mpz_class coeff;
      mpz_import(coeff.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
      terms.emplace_back(Monomial::from_factors(std::move(fs)), std::move(coeff));
    });
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  int length_;
  int offset_;
  int bits_;
  bool packed_;
  std::unordered_map<std::uint64_t, std::uint64_t> packed_counts_;
  std::map<std::vector<int>, std::uint64_t> wide_counts_;
};

std::vector<Variable> level_variables(Family first, Family second, int k, int shift = 0) {
  std::vector<Variable> vars;
  for (int i = 1; i <= k; ++i) {
    vars.emplace_back(first, static_cast<std::uint32_t>(i + shift));
    vars.emplace_back(second, static_cast<std::uint32_t>(i + shift));
  }
  return vars;
}

/// Σ over chains of the monomial whose exponents `exps` writes, 2k per chain.
template <class Exps>
LaurentPoly chain_sum(int n, int k, int min_level, const std::vector<Variable>& vars, int offset,
                      int span, const ComputeOptions& opts, Exps exps) {
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(k - min_level + 1), n);
  check_budget(total, opts.max_chains, "chain enumeration");
  const unsigned workers = workers_for(total, opts);
  const int length = static_cast<int>(vars.size());
  std::vector<MonomialCounter> partial(workers, MonomialCounter(length, offset, span));
  enumerate_chains(n, k, min_level, workers, [&](unsigned w, const Mask* sets) {
    int buf[128];
    exps(sets, buf);
    partial[w].add(buf);
  });
  for (unsigned w = 1; w < workers; ++w) partial[0].merge(partial[w]);
  return partial[0].to_poly(vars);
}

void require_k(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidParameters, "k must be non-negative");
  if (k > 60) throw Error(ErrorKind::InvalidParameters, "k is limited to 60");
}

LaurentPoly whitney_poly(const Matroid& m, int k, const ComputeOptions& opts) {
  require_k(k);
  if (k == 0) return LaurentPoly(1L);
  const int n = m.size();
  const int r = m.rank();
  return chain_sum(n, k, 0, level_variables(Family::a, Family::b, k), r, n + 2 * r + 1, opts,
                   [&m, k, r](const Mask* sets, int* out) {
                     for (int i = 0; i < k; ++i) {
                       const int rs = m.rank(sets[i]);
                       out[2 * i] = r - rs;
                       out[2 * i + 1] = popcount(sets[i]) - rs;
                     }
                   });
}

LaurentPoly coloop_whitney(int k) {
  LaurentPoly sum(1L), prod(1L);
  for (int i = 1; i <= k; ++i) {
    prod *= LaurentPoly(A(i));
    sum += prod;
  }
  return sum;
}

LaurentPoly loop_whitney(int k) {
  LaurentPoly sum(1L), prod(1L);
  for (int l = 1; l <= k; ++l) {
    prod *= LaurentPoly(B(k - l + 1));
    sum += prod;
  }
  return sum;
}

/// Rank oracle of the minor (M/contract)∖remove, queried with subsets in the
/// original labels.
struct MinorView {
  const Matroid& base;
  Mask contract;
  Mask remove;

  Mask ground() const { return base.ground() & ~(contract | remove); }
  int rank(Mask s) const { return base.rank(s | contract) - base.rank(contract); }
  int rank() const { return rank(ground()); }
};

/// The middle split terms in Whitney coordinates:
///   Σ_{chains S_1 ⊆ .. ⊆ S_{k-j} in ground - a}  W^j(M|S_1) Π_{i<=j} a_i^{rk M - rk S_1}
///     Π_{i<=k-j} a_{i+j}^{rk(M/a) - rk_{M/a} S_i} b_{i+j}^{|S_i| - rk_{M/a} S_i}
/// `restriction_whitney(S, j)` supplies W^j of the restriction to S.
template <class SubWhitney>
LaurentPoly split_whitney(const MinorView& view, int a, int k, int j, const ComputeOptions& opts,
                          SubWhitney&& restriction_whitney) {
  const Mask rest_ground = view.ground() & ~bit(a);
  const std::vector<int> keep = elements_of(rest_ground);
  const int n_rest = static_cast<int>(keep.size());
  const int levels = k - j;
  const int r = view.rank();
  const Mask with_a = view.contract | bit(a);
  const int base_a = view.base.rank(with_a);
  const int r_con = view.base.rank(rest_ground | with_a) - base_a;

  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(levels + 1), n_rest);
  check_budget(total, opts.max_chains, "split chain enumeration");
  const unsigned workers = workers_for(total, opts);

  const auto vars = level_variables(Family::a, Family::b, levels, j);
  const int offset = r;
  const int span = n_rest + 2 * r + 2;
  using Buckets = std::unordered_map<Mask, MonomialCounter>;
  std::vector<Buckets> partial(workers);
  enumerate_chains(n_rest, levels, 0, workers, [&](unsigned w, const Mask* sets) {
    int buf[128];
    for (int i = 0; i < levels; ++i) {
      const Mask s = spread_bits(sets[i], keep);
      const int rs = view.base.rank(s | with_a) - base_a;
      buf[2 * i] = r_con - rs;
      buf[2 * i + 1] = popcount(s) - rs;
    }
    auto it = partial[w].try_emplace(sets[0], 2 * levels, offset, span).first;
    it->second.add(buf);
  });
  for (unsigned w = 1; w < workers; ++w)
    for (auto& [s1, counter] : partial[w])
      partial[0].try_emplace(s1, 2 * levels, offset, span).first->second.merge(counter);

  // Deterministic summation order over S_1.
  std::map<Mask, const MonomialCounter*> ordered;
  for (const auto& [s1, counter] : partial[0]) ordered.emplace(s1, &counter);
  LaurentPoly total_poly;
  for (const auto& [s1_packed, counter] : ordered) {
    const Mask s1 = spread_bits(s1_packed, keep);
    const int corank = r - view.rank(s1);
    std::vector<Monomial::Factor> fs;
    if (corank != 0)
      for (int i = 1; i <= j; ++i) fs.emplace_back(A(i).code(), corank);
    const LaurentPoly lower = restriction_whitney(s1, j) *
                              LaurentPoly(Monomial::from_factors(std::move(fs)), mpz_class(1));
    total_poly += lower * counter->to_poly(vars);
  }
  return total_poly;
}

class RecursiveWhitney {
 public:
  RecursiveWhitney(const Matroid& m, const ComputeOptions& opts) : m_(m), opts_(opts) {}

  LaurentPoly compute(Mask contract, Mask remove, int k) {
    if (k == 0) return LaurentPoly(1L);
    const auto key = std::make_tuple(contract, remove, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const MinorView view{m_, contract, remove};
    const Mask ground = view.ground();
    const int r = view.rank();
    int pivot = -1, loops = 0, coloops = 0;
    for (int e : elements_of(ground)) {
      if (view.rank(bit(e)) == 0) {
        ++loops;
      } else if (view.rank(ground & ~bit(e)) == r - 1) {
        ++coloops;
      } else {
        pivot = e;
        break;
      }
    }

    LaurentPoly result;
    if (pivot < 0) {
      result = loop_whitney(k).pow(static_cast<unsigned>(loops)) *
               coloop_whitney(k).pow(static_cast<unsigned>(coloops));
    } else {
      result = compute(contract | bit(pivot), remove, k) + compute(contract, remove | bit(pivot), k);
      for (int j = 1; j < k; ++j)
        result += split_whitney(view, pivot, k, j, opts_, [&](Mask s, int jj) {
          return compute(contract, remove | (ground & ~s), jj);
        });
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const Matroid& m_;
  const ComputeOptions& opts_;
  std::map<std::tuple<Mask, Mask, int>, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly whitney_to_tutte(const LaurentPoly& w, int k) {
  std::map<Variable, LaurentPoly> bind;
  for (int i = 1; i <= k; ++i) {
    bind.emplace(A(i), LaurentPoly(X(i)) - 1);
    bind.emplace(B(i), LaurentPoly(Y(i)) - 1);
  }
  return w.substitute(bind);
}

LaurentPoly tutte_to_whitney(const LaurentPoly& t, int k) {
  std::map<Variable, LaurentPoly> bind;
  for (int i = 1; i <= k; ++i) {
    bind.emplace(X(i), LaurentPoly(A(i)) + 1);
    bind.emplace(Y(i), LaurentPoly(B(i)) + 1);
  }
  return t.substitute(bind);
}

ChainTuttePoly chain_whitney(const Matroid& m, int k, const ComputeOptions& opts) {
  return {k, m.size(), m.rank(), Coordinates::Whitney, whitney_poly(m, k, opts)};
}

ChainTuttePoly chain_tutte(const Matroid& m, int k, const ComputeOptions& opts) {
  return {k, m.size(), m.rank(), Coordinates::Tutte, whitney_to_tutte(whitney_poly(m, k, opts), k)};
}

LaurentPoly split_chain_tutte(const Matroid& m, int a, int k, int j, const ComputeOptions& opts) {
  require_k(k);
  if (a < 0 || a >= m.size()) throw Error(ErrorKind::OutOfRange, "split element out of range");
  if (j < 0 || j > k) throw Error(ErrorKind::InvalidParameters, "split index j must lie in [0, k]");
  if (j == 0) return chain_tutte(contract_set(m, bit(a)), k, opts).poly;
  if (j == k) return chain_tutte(delete_set(m, bit(a)), k, opts).poly;
  const MinorView view{m, 0, 0};
  const LaurentPoly w = split_whitney(view, a, k, j, opts, [&](Mask s, int jj) {
    return whitney_poly(restrict_to(m, s), jj, opts);
  });
  return whitney_to_tutte(w, k);
}

ChainTuttePoly chain_tutte_recursive(const Matroid& m, int k, const ComputeOptions& opts) {
  require_k(k);
  if (!m.is_matroid())
    throw Error(ErrorKind::Unsupported, "the deletion/contraction recursion needs a matroid");
  RecursiveWhitney rec(m, opts);
  return {k, m.size(), m.rank(), Coordinates::Tutte, whitney_to_tutte(rec.compute(0, 0, k), k)};
}

ChainTuttePoly specialize_down(const ChainTuttePoly& top, int k) {
  if (top.coords != Coordinates::Tutte)
    throw Error(ErrorKind::InvalidParameters, "specialize_down expects x/y coordinates");
  if (k < 0) throw Error(ErrorKind::InvalidParameters, "k must be non-negative");
  if (k > top.k)
    throw Error(ErrorKind::Unsupported, "specialize_down only lowers k (requested " +
                                            std::to_string(k) + " from " + std::to_string(top.k) + ")");
  if (k == top.k) return top;
  std::map<Variable, int> pattern;
  for (int i = k + 1; i <= top.k; ++i) {
    pattern.emplace(A(i), 0);
    pattern.emplace(B(i), top.n - top.matroid_rank);
  }
  const LaurentPoly lower = tutte_to_whitney(top.poly, top.k).extract(pattern);
  return {k, top.n, top.matroid_rank, Coordinates::Tutte, whitney_to_tutte(lower, k)};
}

ChainTuttePoly universal_chain_tutte(const Matroid& m, int k, const ComputeOptions& opts) {
  require_k(k);
  if (k == 0) throw Error(ErrorKind::InvalidParameters, "the universal chain polynomial needs k >= 1");
  const int n = m.size();
  const int r = m.rank();
  LaurentPoly poly = chain_sum(n, k, 1, level_variables(Family::u, Family::v, k), r, n + 2 * r + 1,
                               opts, [&m, k](const Mask* sets, int* out) {
                                 Mask prev = 0;
                                 int prev_rank = 0;
                                 for (int i = 0; i < k; ++i) {
                                   const int rs = m.rank(sets[i]);
                                   out[2 * i] = popcount(sets[i]) - popcount(prev);
                                   out[2 * i + 1] = rs - prev_rank;
                                   prev = sets[i];
                                   prev_rank = rs;
                                 }
                               });
  return {k, n, r, Coordinates::Universal, std::move(poly)};
}

LaurentPoly universal_to_whitney(const LaurentPoly& universal, int k_plus_one) {
  const int k = k_plus_one - 1;
  if (k < 0) throw Error(ErrorKind::InvalidParameters, "universal polynomial needs k >= 1");
  std::map<Variable, LaurentPoly> bind;
  for (int i = 1; i <= k + 1; ++i) {
    std::vector<Monomial::Factor> u_fs, v_fs;
    for (int j = i; j <= k; ++j) {
      u_fs.emplace_back(B(j).code(), 1);
      v_fs.emplace_back(B(j).code(), -1);
    }
    for (int j = 1; j < i; ++j) v_fs.emplace_back(A(j).code(), 1);
    bind.emplace(U(i), LaurentPoly(Monomial::from_factors(std::move(u_fs)), mpz_class(1)));
    bind.emplace(V(i), LaurentPoly(Monomial::from_factors(std::move(v_fs)), mpz_class(1)));
  }
  LaurentPoly w = universal.substitute(bind);
  w.require_polynomial("universal-to-Whitney coordinate change");
  return w;
}

bool universal_to_whitney_check(const Matroid& m, int k, const ComputeOptions& opts) {
  const LaurentPoly lhs = universal_to_whitney(universal_chain_tutte(m, k + 1, opts).poly, k + 1);
  return lhs == chain_whitney(m, k, opts).poly;
}

LaurentPoly coloop_chain_tutte(int k) { return whitney_to_tutte(coloop_whitney(k), k); }
LaurentPoly loop_chain_tutte(int k) { return whitney_to_tutte(loop_whitney(k), k); }

LaurentPoly reverse_swap_xy(const LaurentPoly& p, int k) {
  std::map<Variable, LaurentPoly> bind;
  for (int i = 1; i <= k; ++i) {
    bind.emplace(X(i), LaurentPoly(Y(k + 1 - i)));
    bind.emplace(Y(i), LaurentPoly(X(k + 1 - i)));
  }
  return p.substitute(bind);
}

}  // namespace chaintutte
