#include "chaintutte/valuation.hpp"

#include <algorithm>

#include "chaintutte/chain_tutte.hpp"
#include "chaintutte/error.hpp"
#include "chaintutte/invariants.hpp"

namespace chaintutte {

namespace {

constexpr int kMaxCells = 16;

std::string index_set_name(const std::vector<int>& j) {
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(j[i] + 1);
  }
  return out + "}";
}

std::vector<int> indices_of(Mask j) { return elements_of(j); }

void inconsistent(const std::string& msg) { throw Error(ErrorKind::InconsistentNerve, msg); }

/// Face matroid for J, filling in singletons from the cells.
std::optional<Matroid> face(const SubdivisionNerve& nerve, const std::vector<int>& j) {
  if (auto it = nerve.intersections.find(j); it != nerve.intersections.end()) return it->second;
  if (j.size() == 1) return nerve.cells[j[0]];
  inconsistent("intersection " + index_set_name(j) + " is missing");
  return std::nullopt;
}

bool bases_contained(const Matroid& inner, const Matroid& outer) {
  const std::vector<Mask> outer_bases = bases(outer);
  for (Mask b : bases(inner))
    if (!std::binary_search(outer_bases.begin(), outer_bases.end(), b)) return false;
  return true;
}

void add_scaled(InvariantValue& acc, const InvariantValue& v, long coeff) {
  if (const auto* p = std::get_if<LaurentPoly>(&v)) {
    std::get<LaurentPoly>(acc) += LaurentPoly(coeff) * *p;
  } else {
    std::get<GInvariant>(acc).add_scaled(std::get<GInvariant>(v), coeff);
  }
}

}  // namespace

void validate_nerve(const SubdivisionNerve& nerve, const Matroid& big) {
  const int s = static_cast<int>(nerve.cells.size());
  if (s == 0) inconsistent("the subdivision has no cells");
  if (s > kMaxCells) inconsistent("at most " + std::to_string(kMaxCells) + " cells are supported");
  if (!big.is_matroid()) inconsistent("the subdivided matroid must be a matroid");
  for (const auto& [j, m] : nerve.intersections) {
    if (j.empty() || !std::is_sorted(j.begin(), j.end()) ||
        std::adjacent_find(j.begin(), j.end()) != j.end() || j.front() < 0 || j.back() >= s)
      inconsistent("bad intersection index set " + index_set_name(j));
    if (m && (m->size() != big.size() || !m->is_matroid()))
      inconsistent("face " + index_set_name(j) + " is not a matroid on the same ground set");
  }
  for (int i = 0; i < s; ++i) {
    const Matroid& cell = nerve.cells[i];
    if (cell.size() != big.size() || !cell.is_matroid())
      inconsistent("cell " + std::to_string(i + 1) + " is not a matroid on the same ground set");
    if (auto it = nerve.intersections.find({i}); it != nerve.intersections.end() &&
                                                 (!it->second || !it->second->same_rank_function(cell)))
      inconsistent("intersection {" + std::to_string(i + 1) + "} differs from cell " + std::to_string(i + 1));
    if (!bases_contained(cell, big))
      inconsistent("cell " + std::to_string(i + 1) + " has a basis outside the subdivided matroid");
  }
  for (Mask jm = 1; jm < bit(s); ++jm) {
    const std::vector<int> j = indices_of(jm);
    const std::optional<Matroid> fj = face(nerve, j);
    if (!fj || j.size() == 1) continue;
    for (int drop : j) {
      std::vector<int> parent;
      for (int i : j)
        if (i != drop) parent.push_back(i);
      const std::optional<Matroid> fp = face(nerve, parent);
      if (!fp || !bases_contained(*fj, *fp))
        inconsistent("face " + index_set_name(j) + " is not contained in face " + index_set_name(parent));
    }
  }
}

std::string canonical_invariant_id(const std::string& id) {
  std::string s = id;
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "opposite-char-poly") return "opp-char-poly";
  if (s == "j-mobius-poly") return "j-mobius";
  if (s == "ford-s-poly") return "ford-s";
  return s;
}

std::vector<std::string> registered_invariants() {
  return {"chain-tutte", "chain-whitney", "mobius-poly", "opp-char-poly",
          "j-mobius",    "ford-s",        "g-invariant"};
}

InvariantValue evaluate_invariant(const std::string& id, const Matroid& m, int k,
                                  const ComputeOptions& opts) {
  const std::string name = canonical_invariant_id(id);
  if (name == "chain-tutte" || name == "chain-whitney") {
    if (k < 0) throw Error(ErrorKind::InvalidParameters, name + " needs k");
    return name == "chain-tutte" ? chain_tutte(m, k, opts).poly : chain_whitney(m, k, opts).poly;
  }
  if (name == "mobius-poly") return mobius_poly(m);
  if (name == "opp-char-poly") return opposite_char_poly(m);
  if (name == "j-mobius") return j_mobius_poly(m);
  if (name == "ford-s") return ford_s_poly(m);
  if (name == "g-invariant") return g_invariant(m, opts);
  throw Error(ErrorKind::UnknownInvariant, "unknown invariant \"" + id + "\"");
}

nlohmann::json invariant_value_to_json(const InvariantValue& v) {
  if (const auto* p = std::get_if<LaurentPoly>(&v)) return p->to_json();
  return std::get<GInvariant>(v).to_json();
}

nlohmann::json ValuationReport::to_json() const {
  return {{"invariant", invariant},
          {"equal", equal},
          {"lhs", invariant_value_to_json(lhs)},
          {"rhs", invariant_value_to_json(rhs)}};
}

ValuationReport check_valuation(const std::string& id, const Matroid& big,
                                const SubdivisionNerve& nerve, int k, const ComputeOptions& opts) {
  const std::string name = canonical_invariant_id(id);
  const auto known = registered_invariants();
  if (std::find(known.begin(), known.end(), name) == known.end())
    throw Error(ErrorKind::UnknownInvariant, "unknown invariant \"" + id + "\"");
  validate_nerve(nerve, big);

  ValuationReport report;
  report.invariant = name;
  report.lhs = evaluate_invariant(name, big, k, opts);
  if (std::holds_alternative<GInvariant>(report.lhs))
    report.rhs = GInvariant{big.size(), {}};
  else
    report.rhs = LaurentPoly();
  const int s = static_cast<int>(nerve.cells.size());
  for (Mask jm = 1; jm < bit(s); ++jm) {
    const std::optional<Matroid> f = face(nerve, indices_of(jm));
    if (!f) continue;
    add_scaled(report.rhs, evaluate_invariant(name, *f, k, opts), popcount(jm) % 2 == 1 ? 1 : -1);
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace chaintutte
