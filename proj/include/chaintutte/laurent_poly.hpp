#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chaintutte {

/// Variable families in their total order. `internal` is reserved for
/// temporaries used during substitution and never serialised.
enum class Family : std::uint8_t { x, y, u, v, a, b, s, t, z, internal };

/// x1, y3, t, ... Ordered by (family, index).
class Variable {
 public:
  constexpr Variable(Family family, std::uint32_t index) : code_((static_cast<std::uint32_t>(family) << 24) | index) {}

  static constexpr Variable from_code(std::uint32_t code) {
    return Variable(static_cast<Family>(code >> 24), code & 0xFFFFFFU);
  }

  /// Parses "x1", "y12", "s", "t", "z". Throws Parse on anything else.
  static Variable parse(std::string_view name);

  constexpr Family family() const { return static_cast<Family>(code_ >> 24); }
  constexpr std::uint32_t index() const { return code_ & 0xFFFFFFU; }
  constexpr std::uint32_t code() const { return code_; }

  std::string name() const;

  constexpr auto operator<=>(const Variable&) const = default;

 private:
  std::uint32_t code_;
};

inline Variable X(std::uint32_t i) { return {Family::x, i}; }
inline Variable Y(std::uint32_t i) { return {Family::y, i}; }
inline Variable U(std::uint32_t i) { return {Family::u, i}; }
inline Variable V(std::uint32_t i) { return {Family::v, i}; }
inline Variable A(std::uint32_t i) { return {Family::a, i}; }
inline Variable B(std::uint32_t i) { return {Family::b, i}; }
inline const Variable kS{Family::s, 1};
inline const Variable kT{Family::t, 1};
inline const Variable kZ{Family::z, 1};

/// Sparse exponent vector; exponents may be negative, zeros are never stored.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, int>;  // (variable code, exponent)

  Monomial() = default;
  /// Builds from (variable, exponent) pairs in any order; merges repeats.
  Monomial(std::initializer_list<std::pair<Variable, int>> factors);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(Variable v) const;
  bool has_negative_exponent() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  /// Same monomial with `v` removed.
  Monomial without(Variable v) const;

  bool operator==(const Monomial&) const = default;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;  // sorted by variable code
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical term order: total degree descending, ties broken graded
/// reverse lexicographically (x1 > x2 > ... > y1 > ... > z): the term with
/// the smaller exponent on the last variable where they differ comes first.
bool canonical_before(const Monomial& lhs, const Monomial& rhs);

/// Exact sparse Laurent polynomial with arbitrary-precision integer
/// coefficients. Values are immutable; every operation returns a new
/// polynomial with its terms in canonical order.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT: integer constants promote implicitly
  explicit LaurentPoly(const mpz_class& value);
  explicit LaurentPoly(Variable v);
  LaurentPoly(const Monomial& m, const mpz_class& coeff);

  /// Collects arbitrary (monomial, coefficient) pairs, summing repeats.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }
  LaurentPoly pow(unsigned e) const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

  /// Simultaneous substitution. A variable appearing with a negative
  /// exponent must be bound to a unit (one term, coefficient ±1).
  LaurentPoly substitute(const std::map<Variable, LaurentPoly>& bindings) const;

  /// Exact value at a rational point; every variable must be bound.
  mpq_class evaluate(const std::map<Variable, mpq_class>& point) const;

  LaurentPoly partial_derivative(Variable v) const;

  mpz_class coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;

  /// Terms whose exponents on the variables in `pattern` equal the given
  /// values, with those variables removed.
  LaurentPoly extract(const std::map<Variable, int>& pattern) const;

  bool has_negative_exponents() const;
  /// Throws Internal if any negative exponent is present.
  const LaurentPoly& require_polynomial(std::string_view context) const;

  std::vector<Variable> variables() const;

  /// e.g. "x1^2*x2 - 2*y1 + 1"; "0" for the zero polynomial.
  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms, int)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

/// Product Π v^e over an exponent map; convenience for building monomials.
LaurentPoly monomial(std::initializer_list<std::pair<Variable, int>> factors, long coeff = 1);

}  // namespace chaintutte
