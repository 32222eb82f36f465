#include "chaintutte/flat_lattice.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "chaintutte/error.hpp"

namespace chaintutte {

struct FlatLattice::JTable {
  std::once_flag once;
  // Keyed by x * F^2 + y * F + z; only 3-flags are stored.
  std::unordered_map<long long, long long> values;
};

FlatLattice::FlatLattice(const Matroid& m) : matroid_(m), j_(std::make_shared<JTable>()) {
  if (!m.is_matroid()) throw Error(ErrorKind::Unsupported, "lattice of flats of a polymatroid");

  // Every flat is the closure of a smaller flat plus one element.
  std::set<Mask> seen;
  std::vector<Mask> frontier{closure(m, 0)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask f : frontier)
      for (int a = 0; a < m.size(); ++a) {
        if (contains(f, a)) continue;
        const Mask g = closure(m, f | bit(a));
        if (seen.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  flats_.assign(seen.begin(), seen.end());
  std::sort(flats_.begin(), flats_.end(), [&m](Mask a, Mask b) {
    const int ra = m.rank(a), rb = m.rank(b);
    return ra != rb ? ra < rb : a < b;
  });
  ranks_.reserve(flats_.size());
  for (Mask f : flats_) ranks_.push_back(m.rank(f));

  // μ(x, y) = -Σ_{x <= z < y} μ(x, z); indices are a linear extension.
  const int n = size();
  mobius_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    mobius_[x * n + x] = 1;
    for (int y = x + 1; y < n; ++y) {
      if (!leq(x, y)) continue;
      long long sum = 0;
      for (int z = x; z < y; ++z)
        if (leq(x, z) && leq(z, y)) sum += mobius_[x * n + z];
      mobius_[x * n + y] = -sum;
    }
  }
}

int FlatLattice::index_of(Mask s) const {
  auto it = std::find(flats_.begin(), flats_.end(), s);
  return it == flats_.end() ? -1 : static_cast<int>(it - flats_.begin());
}

int FlatLattice::join_of(Mask s) const { return index_of(closure(matroid_, s)); }

long long FlatLattice::mobius(int x, int y) const {
  if (x < 0 || y < 0 || x >= size() || y >= size())
    throw Error(ErrorKind::OutOfRange, "flat index out of range");
  if (!leq(x, y)) throw Error(ErrorKind::Domain, "mobius called on a pair with X not below Y");
  return mobius_[static_cast<std::size_t>(x) * size() + y];
}

long long FlatLattice::j_function(int x, int y, int z) const {
  if (x < 0 || y < 0 || z < 0 || x >= size() || y >= size() || z >= size())
    throw Error(ErrorKind::OutOfRange, "flat index out of range");
  if (!leq(x, y) || !leq(y, z)) throw Error(ErrorKind::Domain, "J needs a 3-flag x <= y <= z");

  const long long n = size();
  std::call_once(j_->once, [this, n] {
    // Σ_{x<=a<=y<=b<=z} J(a,y,b) = δ(x,y,z). Solving for the (a,b) = (x,z)
    // term only needs J on strictly smaller intervals [a,b], so process
    // flags by increasing rank(z) - rank(x).
    struct Flag {
      int x, y, z;
    };
    std::vector<Flag> flags;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (leq(a, b))
          for (int c = b; c < n; ++c)
            if (leq(b, c)) flags.push_back({a, b, c});
    std::stable_sort(flags.begin(), flags.end(), [this](const Flag& p, const Flag& q) {
      return ranks_[p.z] - ranks_[p.x] < ranks_[q.z] - ranks_[q.x];
    });
    auto& table = j_->values;
    table.reserve(flags.size());
    for (const Flag& f : flags) {
      long long value = (f.x == f.y && f.y == f.z) ? 1 : 0;
      for (int a = f.x; a <= f.y; ++a) {
        if (!leq(f.x, a) || !leq(a, f.y)) continue;
        for (int b = f.y; b <= f.z; ++b) {
          if (!leq(f.y, b) || !leq(b, f.z)) continue;
          if (a == f.x && b == f.z) continue;
          value -= table.at((a * n + f.y) * n + b);
        }
      }
      table.emplace((f.x * n + f.y) * n + f.z, value);
    }
  });
  return j_->values.at((x * n + y) * n + z);
}

}  // namespace chaintutte
