#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace ctube {

using Integer = mpz_class;

/// Exponent vector x_1^{e_1} ... x_m^{e_m}; negative exponents allowed.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t var_count() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  std::span<const int> exps() const { return exps_; }

  long degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Graded-lex comparison: `before(a, b)` is true when a precedes b in the
/// canonical (descending) term order.
bool grlex_before(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Integer coeff;
};

/// Sparse Laurent polynomial in x_1..x_m with integer coefficients.
///
/// Terms are kept in canonical order (graded-lex descending), with no zero
/// coefficients and no repeated monomials, so structural equality is
/// polynomial equality.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t var_count = 1);

  static LaurentPoly constant(std::size_t var_count, const Integer& c);
  static LaurentPoly variable(std::size_t var_count, std::size_t index);
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
  /// Builds from arbitrary terms: merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::size_t var_count, std::vector<Term> terms);

  std::size_t var_count() const { return var_count_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_positive_coefficients() const;

  /// Leading term under the canonical order. Precondition: nonzero.
  const Term& leading() const { return terms_.front(); }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly scaled(const Monomial& m) const;

  bool operator==(const LaurentPoly& other) const;
  /// Total order: term-by-term in canonical order, monomial then coefficient.
  std::strong_ordering operator<=>(const LaurentPoly& other) const;

 private:
  std::size_t var_count_;
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Returns r with r * q == p.
/// Throws DivisionByZero when q == 0 and NotDivisible when r would not be a
/// Laurent polynomial over the integers.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Deterministic rendering, e.g. "x1*x2^-2 + x1^-1 + 2*x2^-2"; zero is "0".
std::string canonical_text(const LaurentPoly& p);

/// Inverse of canonical_text; also accepts extra whitespace, reordered
/// terms, "+ -c" and repeated factors.
LaurentPoly parse_laurent(std::string_view text, std::size_t var_count);

/// {"vars": m, "terms": [{"coeff": "<decimal>", "exps": [...]}, ...]}
nlohmann::ordered_json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::ordered_json& j);

struct LaurentHash {
  std::size_t operator()(const LaurentPoly& p) const;
};

}  // namespace ctube
