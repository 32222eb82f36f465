#include "chaintutte/g_invariant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chaintutte/chain_tutte.hpp"
#include "chaintutte/error.hpp"

namespace chaintutte {

namespace {

std::string key_string(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_key(const std::string& s, int n) {
  std::vector<int> out;
  if (!s.empty()) {
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad rank vector key \"" + s + "\"");
      }
    }
  }
  if (static_cast<int>(out.size()) != n)
    throw Error(ErrorKind::Parse, "rank vector \"" + s + "\" does not have length " + std::to_string(n));
  return out;
}

/// Permutation number `index` of {0..n-1} in lexicographic order.
std::vector<int> unrank_permutation(std::uint64_t index, int n) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> out;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t q = index / fact[i - 1];
    index %= fact[i - 1];
    out.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<long>(q));
  }
  return out;
}

}  // namespace

void GInvariant::add_scaled(const GInvariant& other, long coeff) {
  if (other.n != n) throw Error(ErrorKind::InvalidParameters, "G-invariants on different ground sizes");
  for (const auto& [key, c] : other.counts) {
    mpz_class& slot = counts[key];
    slot += coeff * c;
    if (slot == 0) counts.erase(key);
  }
}

nlohmann::json GInvariant::to_json() const {
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [key, v] : counts) {
    if (v.fits_slong_p())
      c[key_string(key)] = v.get_si();
    else
      c[key_string(key)] = v.get_str();
  }
  return {{"n", n}, {"counts", c}};
}

GInvariant GInvariant::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("counts") || !j["n"].is_number_integer() ||
      !j["counts"].is_object())
    throw Error(ErrorKind::Parse, "G-invariant JSON needs integer \"n\" and object \"counts\"");
  GInvariant g;
  g.n = j["n"].get<int>();
  for (const auto& [key, v] : j["counts"].items()) {
    mpz_class c;
    if (v.is_number_integer())
      c = v.get<long>();
    else if (v.is_string() && c.set_str(v.get<std::string>(), 10) == 0)
      ;
    else
      throw Error(ErrorKind::Parse, "bad G-invariant count for \"" + key + "\"");
    if (c != 0) g.counts[parse_key(key, g.n)] = c;
  }
  return g;
}

GInvariant g_invariant(const Matroid& m, const ComputeOptions& opts) {
  const int n = m.size();
  std::uint64_t total = 1;
  for (int i = 2; i <= n; ++i)
    total = total > ~std::uint64_t{0} / static_cast<std::uint64_t>(i) ? ~std::uint64_t{0}
                                                                      : total * static_cast<std::uint64_t>(i);
  check_budget(total, opts.max_perms, "permutation enumeration");
  const unsigned workers = total < 5040 ? 1U : opts.worker_count();
  std::vector<std::map<std::vector<int>, std::uint64_t>> partial(workers);
  parallel_ranges(total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    if (begin == end) return;
    std::vector<int> perm = unrank_permutation(begin, n);
    std::vector<int> inc(static_cast<std::size_t>(n));
    for (std::uint64_t i = begin; i < end; ++i) {
      Mask prefix = 0;
      int prev = 0;
      for (int p = 0; p < n; ++p) {
        prefix |= bit(perm[p]);
        const int rk = m.rank(prefix);
        inc[p] = rk - prev;
        prev = rk;
      }
      ++partial[w][inc];
      std::next_permutation(perm.begin(), perm.end());
    }
  });
  GInvariant g;
  g.n = n;
  for (const auto& part : partial)
    for (const auto& [key, c] : part) g.counts[key] += static_cast<unsigned long>(c);
  return g;
}

GInvariant g_from_top_tutte(const Matroid& m, const ComputeOptions& opts) {
  const int n = m.size();
  if (n > opts.max_top_tutte_ground)
    throw Error(ErrorKind::BudgetExceeded, "W^n needs n <= " + std::to_string(opts.max_top_tutte_ground) +
                                               " (ground set has " + std::to_string(n) + ")");
  const int r = m.rank();
  const LaurentPoly w = chain_whitney(m, n, opts).poly;
  GInvariant g;
  g.n = n;
  for (const auto& [mono, coeff] : w.terms()) {
    std::vector<int> a(static_cast<std::size_t>(n));
    bool complete = true;
    for (int i = 1; i <= n && complete; ++i) {
      a[i - 1] = mono.exponent(A(i));
      complete = a[i - 1] - mono.exponent(B(i)) == r - i;
    }
    if (!complete) continue;
    std::vector<int> ranks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ranks[i] = (i == 0 ? r : a[i - 1]) - a[i];
    g.counts[ranks] += coeff;
  }
  return g;
}

}  // namespace chaintutte
