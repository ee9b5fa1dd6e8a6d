#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncfactor/rational.hpp"

namespace ncfactor {

/// Exponent vector over a fixed, ordered variable list.
class CommMonomial {
 public:
  CommMonomial() = default;
  explicit CommMonomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit CommMonomial(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) {}
  static CommMonomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exp_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exp_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exp_; }

  std::uint32_t total_degree() const;
  bool is_one() const;
  bool divides(const CommMonomial& o) const;

  friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b);
  /// a / b; requires b | a.
  friend CommMonomial operator/(const CommMonomial& a, const CommMonomial& b);
  friend CommMonomial lcm(const CommMonomial& a, const CommMonomial& b);
  friend bool coprime(const CommMonomial& a, const CommMonomial& b);

  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
  /// Pure lex: the first variable dominates.
  friend std::strong_ordering operator<=>(const CommMonomial& a, const CommMonomial& b) {
    return a.exp_ <=> b.exp_;
  }

 private:
  std::vector<std::uint32_t> exp_;
};

/// Commutative polynomial over Q in nvars variables, kept in lex order with the
/// leading term first. No zero coefficients are stored.
class CommPolynomial {
 public:
  using TermMap = std::map<CommMonomial, Rational, std::greater<>>;

  explicit CommPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static CommPolynomial constant(std::size_t nvars, const Rational& c);
  static CommPolynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant.
  bool is_unit() const { return is_constant() && !is_zero(); }

  const CommMonomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  Rational coefficient(const CommMonomial& m) const;

  void add_term(const CommMonomial& m, const Rational& c);

  CommPolynomial& operator+=(const CommPolynomial& o);
  CommPolynomial& operator-=(const CommPolynomial& o);
  friend CommPolynomial operator+(CommPolynomial a, const CommPolynomial& b) { return a += b; }
  friend CommPolynomial operator-(CommPolynomial a, const CommPolynomial& b) { return a -= b; }
  friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b);
  friend CommPolynomial operator*(const Rational& c, const CommPolynomial& p);
  friend CommPolynomial operator-(const CommPolynomial& p) { return Rational(-1) * p; }
  /// p * c * m
  CommPolynomial times_term(const Rational& c, const CommMonomial& m) const;

  CommPolynomial monic() const;

  /// Variables with a positive exponent somewhere.
  std::vector<std::size_t> variables() const;
  /// The variable if exactly one occurs.
  std::optional<std::size_t> sole_variable() const;
  std::uint32_t degree_in(std::size_t var) const;

  /// Substitute var := value (the variable stays in the ring with exponent 0).
  CommPolynomial substitute(std::size_t var, const Rational& value) const;
  /// Value at a full point.
  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const CommPolynomial&, const CommPolynomial&) = default;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// "b4_6^2 - 4/3*b4_6 + 1/3"
std::string format_comm(const CommPolynomial& p, const std::vector<std::string>& names);

}  // namespace ncfactor
