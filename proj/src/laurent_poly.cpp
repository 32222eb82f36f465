#include "chaintutte/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "chaintutte/error.hpp"

namespace chaintutte {

namespace {

constexpr std::string_view kFamilyLetters = "xyuvabstz";

bool single_index_family(Family f) { return f == Family::s || f == Family::t || f == Family::z; }

using Accumulator = std::unordered_map<Monomial, mpz_class, MonomialHash>;

std::vector<LaurentPoly::Term> drain_sorted(Accumulator& acc) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return canonical_before(p.first, q.first); });
  return out;
}

}  // namespace

// Variable ----------------------------------------------------------------------

Variable Variable::parse(std::string_view name) {
  if (name.empty()) throw Error(ErrorKind::Parse, "empty variable name");
  const auto pos = kFamilyLetters.find(name.front());
  if (pos == std::string_view::npos)
    throw Error(ErrorKind::Parse, "unknown variable family in '" + std::string(name) + "'");
  const auto family = static_cast<Family>(pos);
  const std::string_view digits = name.substr(1);
  if (single_index_family(family)) {
    if (digits.empty() || digits == "1") return Variable(family, 1);
    throw Error(ErrorKind::Parse, "variable '" + std::string(name) + "' takes no index");
  }
  if (digits.empty() || digits.size() > 7 || digits.front() == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::Parse, "bad variable index in '" + std::string(name) + "'");
  return Variable(family, static_cast<std::uint32_t>(std::stoul(std::string(digits))));
}

std::string Variable::name() const {
  if (family() == Family::internal) return "_w" + std::to_string(index());
  std::string out(1, kFamilyLetters[static_cast<std::size_t>(family())]);
  if (!single_index_family(family())) out += std::to_string(index());
  return out;
}

// Monomial ----------------------------------------------------------------------

Monomial::Monomial(std::initializer_list<std::pair<Variable, int>> factors) {
  std::vector<Factor> fs;
  for (const auto& [v, e] : factors) fs.emplace_back(v.code(), e);
  *this = from_factors(std::move(fs));
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [code, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == code)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(code, e);
    if (m.factors_.back().second == 0) m.factors_.pop_back();
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(Variable v) const {
  for (const auto& [code, e] : factors_)
    if (code == v.code()) return e;
  return 0;
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::without(Variable v) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& f : factors_)
    if (f.first != v.code()) out.factors_.push_back(f);
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9E3779B97F4A7C15ULL;
  for (const auto& [code, e] : factors_) {
    h ^= (static_cast<std::size_t>(code) << 20) ^ static_cast<std::size_t>(static_cast<unsigned>(e));
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 31;
  }
  return h;
}

bool canonical_before(const Monomial& lhs, const Monomial& rhs) {
  const int dl = lhs.degree(), dr = rhs.degree();
  if (dl != dr) return dl > dr;
  // Graded reverse lexicographic: the last variable where the exponents
  // differ decides, and the smaller exponent comes first.
  const auto& a = lhs.factors();
  const auto& b = rhs.factors();
  std::size_t i = a.size(), j = b.size();
  while (i > 0 || j > 0) {
    std::uint32_t code;
    if (j == 0 || (i > 0 && a[i - 1].first > b[j - 1].first))
      code = a[i - 1].first;
    else
      code = b[j - 1].first;
    const int ea = (i > 0 && a[i - 1].first == code) ? a[--i].second : 0;
    const int eb = (j > 0 && b[j - 1].first == code) ? b[--j].second : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

// LaurentPoly -------------------------------------------------------------------

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_.emplace_back(Monomial{}, mpz_class(value));
}

LaurentPoly::LaurentPoly(const mpz_class& value) {
  if (value != 0) terms_.emplace_back(Monomial{}, value);
}

LaurentPoly::LaurentPoly(Variable v) { terms_.emplace_back(Monomial{{v, 1}}, mpz_class(1)); }

LaurentPoly::LaurentPoly(const Monomial& m, const mpz_class& coeff) {
  if (coeff != 0) terms_.emplace_back(m, coeff);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  acc.reserve(terms.size());
  for (auto& [m, c] : terms) acc[m] += c;
  return LaurentPoly(drain_sorted(acc), 0);
}

LaurentPoly monomial(std::initializer_list<std::pair<Variable, int>> factors, long coeff) {
  return LaurentPoly(Monomial(factors), mpz_class(coeff));
}

LaurentPoly LaurentPoly::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.second = -t.second;
  return LaurentPoly(std::move(terms), 0);
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.terms_.size() + q.terms_.size());
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end() || (i != p.terms_.end() && canonical_before(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == p.terms_.end() || canonical_before(j->first, i->first)) {
      out.push_back(*j++);
    } else {
      mpz_class c = i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return LaurentPoly(std::move(out), 0);
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  Accumulator acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) acc[mp * mq] += cp * cq;
  return LaurentPoly(drain_sorted(acc), 0);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const std::map<Variable, LaurentPoly>& bindings) const {
  if (bindings.empty() || is_zero()) return *this;

  // Rename bound variables to internal temporaries first so that values
  // mentioning other bound variables are not substituted twice.
  std::unordered_map<std::uint32_t, std::uint32_t> rename;
  std::vector<std::pair<Variable, const LaurentPoly*>> steps;
  std::uint32_t next = 1;
  for (const auto& [v, value] : bindings) {
    const Variable tmp(Family::internal, next++);
    rename.emplace(v.code(), tmp.code());
    steps.emplace_back(tmp, &value);
  }
  std::vector<Term> current;
  current.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> fs = m.factors();
    for (auto& f : fs)
      if (auto it = rename.find(f.first); it != rename.end()) f.first = it->second;
    current.emplace_back(Monomial::from_factors(std::move(fs)), c);
  }

  for (const auto& [tmp, value] : steps) {
    std::map<int, LaurentPoly> powers;
    auto power = [&](int e) -> const LaurentPoly& {
      auto it = powers.find(e);
      if (it != powers.end()) return it->second;
      LaurentPoly p;
      if (e >= 0) {
        p = value->pow(static_cast<unsigned>(e));
      } else {
        const auto& vt = value->terms();
        if (vt.size() != 1 || (vt[0].second != 1 && vt[0].second != -1))
          throw Error(ErrorKind::Domain, "negative power of a non-unit in substitution");
        p = LaurentPoly(vt[0].first.inverse(), vt[0].second).pow(static_cast<unsigned>(-e));
      }
      return powers.emplace(e, std::move(p)).first->second;
    };
    Accumulator acc;
    acc.reserve(current.size());
    for (auto& [m, c] : current) {
      const int e = m.exponent(tmp);
      if (e == 0) {
        acc[m] += c;
        continue;
      }
      const Monomial rest = m.without(tmp);
      for (const auto& [mv, cv] : power(e).terms()) acc[rest * mv] += c * cv;
    }
    current.clear();
    for (auto& [m, c] : acc)
      if (c != 0) current.emplace_back(m, std::move(c));
  }
  return from_terms(std::move(current));
}

mpq_class LaurentPoly::evaluate(const std::map<Variable, mpq_class>& point) const {
  std::map<std::pair<std::uint32_t, int>, mpq_class> cache;
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class term(c);
    for (const auto& [code, e] : m.factors()) {
      auto key = std::make_pair(code, e);
      auto it = cache.find(key);
      if (it == cache.end()) {
        const Variable v = Variable::from_code(code);
        auto pv = point.find(v);
        if (pv == point.end())
          throw Error(ErrorKind::Domain, "unbound variable " + v.name() + " in evaluation");
        if (pv->second == 0 && e < 0)
          throw Error(ErrorKind::Domain, "zero raised to a negative power at " + v.name());
        mpq_class base = e < 0 ? mpq_class(1 / pv->second) : pv->second;
        mpq_class value = 1;
        for (int i = 0; i < std::abs(e); ++i) value *= base;
        it = cache.emplace(key, value).first;
      }
      term *= it->second;
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

LaurentPoly LaurentPoly::partial_derivative(Variable v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out.emplace_back(m * Monomial{{v, -1}}, c * e);
  }
  return from_terms(std::move(out));
}

mpz_class LaurentPoly::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return 0;
}

std::vector<Monomial> LaurentPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

LaurentPoly LaurentPoly::extract(const std::map<Variable, int>& pattern) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    bool match = true;
    for (const auto& [v, e] : pattern)
      if (m.exponent(v) != e) {
        match = false;
        break;
      }
    if (!match) continue;
    Monomial rest = m;
    for (const auto& [v, e] : pattern) rest = rest.without(v);
    out.emplace_back(std::move(rest), c);
  }
  return from_terms(std::move(out));
}

bool LaurentPoly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.has_negative_exponent(); });
}

const LaurentPoly& LaurentPoly::require_polynomial(std::string_view context) const {
  if (has_negative_exponents())
    throw Error(ErrorKind::Internal,
                "negative exponent survived in " + std::string(context) + ": " + to_string());
  return *this;
}

std::vector<Variable> LaurentPoly::variables() const {
  std::vector<std::uint32_t> codes;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) codes.push_back(f.first);
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Variable> out;
  for (auto c : codes) out.push_back(Variable::from_code(c));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || m.is_one()) os << mag.get_str();
    bool first_factor = true;
    for (const auto& [code, e] : m.factors()) {
      if (!(unit && first_factor)) os << '*';
      first_factor = false;
      os << Variable::from_code(code).name();
      if (e != 1) os << '^' << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exp = nlohmann::json::object();
    for (const auto& [code, e] : m.factors()) exp[Variable::from_code(code).name()] = e;
    terms.push_back({{"exp", exp}, {"coeff", c.get_str()}});
  }
  return {{"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
      throw Error(ErrorKind::Parse, "polynomial JSON needs a \"terms\" array");
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      std::vector<Monomial::Factor> fs;
      for (const auto& [name, e] : t.at("exp").items())
        fs.emplace_back(Variable::parse(name).code(), e.get<int>());
      const auto& cj = t.at("coeff");
      mpz_class c;
      if (cj.is_string()) {
        if (c.set_str(cj.get<std::string>(), 10) != 0)
          throw Error(ErrorKind::Parse, "bad coefficient " + cj.get<std::string>());
      } else {
        c = cj.get<long>();
      }
      terms.emplace_back(Monomial::from_factors(std::move(fs)), c);
    }
    return from_terms(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace chaintutte
