#include "chaintutte/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "chaintutte/error.hpp"

namespace chaintutte {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::NotAMatroid: return "not-a-matroid";
    case ErrorKind::NotAPolymatroid: return "not-a-polymatroid";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Domain: return "domain-error";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::InconsistentNerve: return "inconsistent-nerve";
    case ErrorKind::UnknownInvariant: return "unknown-invariant";
    case ErrorKind::Internal: return "internal-error";
  }
  return "error";
}

namespace {

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<int> parent;
};

}  // namespace

struct Matroid::Impl {
  int n = 0;
  MatroidKind kind = MatroidKind::Matroid;
  std::vector<int> dense;
  RankFn oracle;
  mutable std::mutex mutex;
  mutable std::unordered_map<Mask, int> cache;
};

Matroid::Matroid() : Matroid(from_oracle(0, [](Mask) { return 0; }, MatroidKind::Matroid)) {}

Matroid::Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Matroid Matroid::from_oracle(int n, RankFn rank, MatroidKind kind) {
  if (n < 0 || n > kMaxGround)
    throw Error(ErrorKind::InvalidParameters,
                "ground set size must lie in [0, " + std::to_string(kMaxGround) + "]");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->kind = kind;
  if (n <= kDenseRankLimit) {
    impl->dense.resize(std::size_t{1} << n);
    for (Mask s = 0; s < impl->dense.size(); ++s) impl->dense[s] = rank(s);
  } else {
    impl->oracle = std::move(rank);
  }
  return Matroid(std::move(impl));
}

int Matroid::size() const { return impl_->n; }
MatroidKind Matroid::kind() const { return impl_->kind; }

int Matroid::rank(Mask s) const {
  if (!is_subset(s, ground()))
    throw Error(ErrorKind::OutOfRange, "subset " + mask_to_string(s) + " is not in the ground set");
  if (!impl_->dense.empty()) return impl_->dense[s];
  std::lock_guard lock(impl_->mutex);
  auto it = impl_->cache.find(s);
  if (it != impl_->cache.end()) return it->second;
  int r = impl_->oracle(s);
  impl_->cache.emplace(s, r);
  return r;
}

int Matroid::rank() const { return rank(ground()); }

std::vector<int> Matroid::rank_table() const {
  if (size() > kDenseRankLimit)
    throw Error(ErrorKind::BudgetExceeded, "rank table too large");
  return impl_->dense;
}

bool Matroid::same_rank_function(const Matroid& other) const {
  return size() == other.size() && rank_table() == other.rank_table();
}

// Construction -----------------------------------------------------------------

Matroid make_uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n)
    throw Error(ErrorKind::InvalidParameters,
                "uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                    " n=" + std::to_string(n));
  return Matroid::from_oracle(
      n, [r](Mask s) { return std::min(popcount(s), r); }, MatroidKind::Matroid);
}

Matroid make_boolean(int n) { return make_uniform(n, n); }

Matroid make_graphic(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices < 0) throw Error(ErrorKind::InvalidParameters, "negative vertex count");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw Error(ErrorKind::OutOfRange, "edge endpoint out of range: (" + std::to_string(u) +
                                             "," + std::to_string(v) + ")");
  auto rank = [n_vertices, edges](Mask s) {
    UnionFind uf(n_vertices);
    int r = 0;
    for (int e : elements_of(s))
      if (uf.merge(edges[e].first, edges[e].second)) ++r;
    return r;
  };
  return Matroid::from_oracle(static_cast<int>(edges.size()), rank, MatroidKind::Matroid);
}

Matroid make_from_bases(int n, const std::vector<Mask>& basis_list) {
  if (n < 0 || n > kMaxGround) throw Error(ErrorKind::InvalidParameters, "bad ground set size");
  if (basis_list.empty()) throw Error(ErrorKind::InvalidParameters, "empty basis list");
  std::vector<Mask> bs = basis_list;
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  const int r = popcount(bs.front());
  for (Mask b : bs) {
    if (!is_subset(b, full_mask(n)))
      throw Error(ErrorKind::OutOfRange, "basis " + mask_to_string(b) + " leaves the ground set");
    if (popcount(b) != r)
      throw Error(ErrorKind::InvalidParameters, "bases are not equicardinal");
  }
  std::unordered_set<Mask> lookup(bs.begin(), bs.end());
  for (Mask b1 : bs)
    for (Mask b2 : bs)
      for (int x : elements_of(b1 & ~b2)) {
        bool ok = false;
        for (int y : elements_of(b2 & ~b1))
          if (lookup.count((b1 & ~bit(x)) | bit(y))) {
            ok = true;
            break;
          }
        if (!ok)
          throw Error(ErrorKind::NotAMatroid, "basis exchange fails for " + mask_to_string(b1) +
                                                  ", " + mask_to_string(b2) + " at element " +
                                                  std::to_string(x));
      }

  if (n > Matroid::kDenseRankLimit) {
    return Matroid::from_oracle(
        n,
        [bs](Mask s) {
          int best = 0;
          for (Mask b : bs) best = std::max(best, popcount(s & b));
          return best;
        },
        MatroidKind::Matroid);
  }
  // Independent sets are the subsets of bases; rank(S) = max over S - e.
  const std::size_t size = std::size_t{1} << n;
  std::vector<char> indep(size, 0);
  for (Mask b : bs) indep[b] = 1;
  for (Mask s = size; s-- > 0;)
    if (indep[s])
      for (int e : elements_of(s)) indep[s & ~bit(e)] = 1;
  auto table = std::make_shared<std::vector<int>>(size, 0);
  for (Mask s = 1; s < size; ++s) {
    if (indep[s]) {
      (*table)[s] = popcount(s);
      continue;
    }
    int best = 0;
    for (int e : elements_of(s)) best = std::max(best, (*table)[s & ~bit(e)]);
    (*table)[s] = best;
  }
  return Matroid::from_oracle(
      n, [table](Mask s) { return (*table)[s]; }, MatroidKind::Matroid);
}

Matroid make_from_rank_table(int n, const std::vector<int>& table) {
  if (n < 0 || n > Matroid::kDenseRankLimit)
    throw Error(ErrorKind::InvalidParameters, "rank tables are limited to n <= 24");
  const std::size_t size = std::size_t{1} << n;
  if (table.size() != size)
    throw Error(ErrorKind::InvalidParameters, "rank table must have 2^n entries");
  auto fail = [](const std::string& what) { throw Error(ErrorKind::NotAPolymatroid, what); };
  if (table[0] != 0) fail("rk(emptyset) = " + std::to_string(table[0]) + " != 0");
  bool poly = false;
  for (Mask s = 0; s < size; ++s) {
    if (table[s] < 0) fail("negative rank at " + mask_to_string(s));
    for (int a = 0; a < n; ++a) {
      if (contains(s, a)) continue;
      const Mask sa = s | bit(a);
      if (table[s] > table[sa])
        fail("monotonicity fails for pair " + mask_to_string(s) + " <= " + mask_to_string(sa));
      for (int b = a + 1; b < n; ++b) {
        if (contains(s, b)) continue;
        const Mask sb = s | bit(b);
        if (table[sa] + table[sb] < table[sa | sb] + table[s])
          fail("submodularity fails for pair " + mask_to_string(sa) + ", " + mask_to_string(sb));
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (table[bit(a)] > 1) poly = true;
  auto shared = std::make_shared<std::vector<int>>(table);
  return Matroid::from_oracle(
      n, [shared](Mask s) { return (*shared)[s]; },
      poly ? MatroidKind::Polymatroid : MatroidKind::Matroid);
}

// Operations -------------------------------------------------------------------

namespace {

void require_subset(const Matroid& m, Mask s) {
  if (!is_subset(s, m.ground()))
    throw Error(ErrorKind::OutOfRange, "subset " + mask_to_string(s) + " is not in the ground set");
}

}  // namespace

Matroid dual(const Matroid& m) {
  if (!m.is_matroid()) throw Error(ErrorKind::Unsupported, "dual of a polymatroid");
  const Mask g = m.ground();
  const int r = m.rank();
  return Matroid::from_oracle(
      m.size(), [m, g, r](Mask x) { return popcount(x) - r + m.rank(g & ~x); },
      MatroidKind::Matroid);
}

Matroid minor(const Matroid& m, Mask contract, Mask remove) {
  require_subset(m, contract);
  require_subset(m, remove);
  if (contract & remove)
    throw Error(ErrorKind::InvalidParameters, "contract and delete sets overlap");
  const std::vector<int> keep = elements_of(m.ground() & ~(contract | remove));
  const int base = m.rank(contract);
  return Matroid::from_oracle(
      static_cast<int>(keep.size()),
      [m, keep, contract, base](Mask s) { return m.rank(spread_bits(s, keep) | contract) - base; },
      m.kind());
}

Matroid delete_set(const Matroid& m, Mask s) { return minor(m, 0, s); }
Matroid contract_set(const Matroid& m, Mask s) { return minor(m, s, 0); }

Matroid restrict_to(const Matroid& m, Mask s) {
  require_subset(m, s);
  return minor(m, 0, m.ground() & ~s);
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const int n1 = m1.size();
  const Mask g1 = m1.ground();
  const MatroidKind kind = (m1.is_matroid() && m2.is_matroid()) ? MatroidKind::Matroid
                                                                 : MatroidKind::Polymatroid;
  return Matroid::from_oracle(
      n1 + m2.size(), [m1, m2, n1, g1](Mask s) { return m1.rank(s & g1) + m2.rank(s >> n1); },
      kind);
}

bool is_loop(const Matroid& m, int a) {
  require_subset(m, bit(a));
  return m.rank(bit(a)) == 0;
}

bool is_coloop(const Matroid& m, int a) {
  require_subset(m, bit(a));
  return m.rank(m.ground() & ~bit(a)) == m.rank() - 1;
}

bool has_loop(const Matroid& m) {
  for (int a = 0; a < m.size(); ++a)
    if (m.rank(bit(a)) == 0) return true;
  return false;
}

bool is_simple(const Matroid& m) {
  if (has_loop(m)) return false;
  for (int a = 0; a < m.size(); ++a)
    for (int b = a + 1; b < m.size(); ++b)
      if (m.rank(bit(a) | bit(b)) == 1) return false;
  return true;
}

Mask closure(const Matroid& m, Mask s) {
  const int r = m.rank(s);
  Mask out = s;
  for (int a = 0; a < m.size(); ++a)
    if (!contains(s, a) && m.rank(s | bit(a)) == r) out |= bit(a);
  return out;
}

bool is_independent(const Matroid& m, Mask s) { return m.rank(s) == popcount(s); }

std::vector<Mask> bases(const Matroid& m) {
  if (!m.is_matroid()) throw Error(ErrorKind::Unsupported, "bases of a polymatroid");
  const int r = m.rank();
  std::vector<Mask> out;
  for (Mask s = 0; s <= m.ground(); ++s) {
    if (popcount(s) == r && m.rank(s) == r) out.push_back(s);
    if (s == m.ground()) break;
  }
  return out;
}

}  // namespace chaintutte
