#pragma once

#include <climits>
#include <map>
#include <vector>

#include "ncfactor/rational.hpp"
#include "ncfactor/word.hpp"

namespace ncfactor {

/// Element of the free associative algebra Q<X>: a finite map word -> coefficient.
/// Zero coefficients are never stored, so structural and mathematical equality agree.
class NcPolynomial {
 public:
  using TermMap = std::map<Word, Rational>;
  static constexpr int kZeroDegree = INT_MIN;

  explicit NcPolynomial(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  static NcPolynomial constant(const Alphabet& alphabet, const Rational& c);
  static NcPolynomial letter(const Alphabet& alphabet, LetterIndex i);
  static NcPolynomial monomial(const Alphabet& alphabet, Word w, const Rational& c = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// kZeroDegree for the zero polynomial.
  int degree() const;
  Rational coefficient(const Word& w) const;
  /// Constant term.
  Rational constant_term() const { return coefficient(Word{}); }

  /// Adds c*w in place.
  void add_term(const Word& w, const Rational& c);

  NcPolynomial& operator+=(const NcPolynomial& o);
  NcPolynomial& operator-=(const NcPolynomial& o);

  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b);

 private:
  Alphabet alphabet_;
  TermMap terms_;
};

// Throw AlphabetMismatch if the alphabets differ.
NcPolynomial poly_add(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial poly_sub(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial poly_mul(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial poly_scale(const Rational& mu, const NcPolynomial& p);
bool poly_equal(const NcPolynomial& p, const NcPolynomial& q);

/// Product of a non-empty list in order.
NcPolynomial poly_product(const std::vector<NcPolynomial>& factors);

inline NcPolynomial operator+(const NcPolynomial& p, const NcPolynomial& q) { return poly_add(p, q); }
inline NcPolynomial operator-(const NcPolynomial& p, const NcPolynomial& q) { return poly_sub(p, q); }
inline NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q) { return poly_mul(p, q); }
inline NcPolynomial operator*(const Rational& mu, const NcPolynomial& p) { return poly_scale(mu, p); }
inline NcPolynomial operator-(const NcPolynomial& p) { return poly_scale(-1, p); }

}  // namespace ncfactor
