#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncfactor/matrix.hpp"
#include "ncfactor/nc_polynomial.hpp"

namespace ncfactor {

/// Entry of a linear pencil: [constant, coefficient of x_1, ..., coefficient of x_d].
using LinearForm = std::vector<Rational>;

/// Admissible linear system (u, A, v) with u = e_1 fixed, A = A_0 + sum_l A_l x_l.
/// coefficient(0) is A_0, coefficient(l) for l = 1..d belongs to letter l-1 of the
/// alphabet. Dimension 0 represents the zero element.
///
/// Matrix and vector indices are 0-based. Mutators are provided for building and
/// transforming working copies.
class Als {
 public:
  Als(Alphabet alphabet, std::size_t dim);
  /// Throws InvalidAls on size mismatches.
  Als(Alphabet alphabet, std::vector<RationalMatrix> coefficients, RationalVector v);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return v_.size(); }
  /// d + 1
  std::size_t pencil_size() const { return coefficients_.size(); }

  const RationalMatrix& coefficient(std::size_t l) const { return coefficients_[l]; }
  RationalMatrix& coefficient(std::size_t l) { return coefficients_[l]; }
  const std::vector<RationalMatrix>& coefficients() const { return coefficients_; }
  const RationalVector& v() const { return v_; }
  RationalVector& v() { return v_; }

  LinearForm entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const LinearForm& f);
  /// p must have degree <= 1.
  void set_entry(std::size_t i, std::size_t j, const NcPolynomial& p);
  NcPolynomial entry_poly(std::size_t i, std::size_t j) const;
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  bool entry_is_constant(std::size_t i, std::size_t j) const;

  /// Unit upper triangular pencil: a_ii = 1, nothing below the diagonal, letters
  /// strictly above it.
  bool is_unit_upper_triangular() const;
  /// Unit upper triangular and v = [0, ..., 0, lambda] with lambda != 0.
  bool is_pre_standard() const;

  // Elementary operations on every coefficient matrix.
  /// row dst += c * row src (v included).
  void add_row_multiple(std::size_t dst, std::size_t src, const Rational& c);
  /// col dst += c * col src.
  void add_col_multiple(std::size_t dst, std::size_t src, const Rational& c);
  void scale_row(std::size_t i, const Rational& c);
  void scale_col(std::size_t j, const Rational& c);
  /// Drop row k and column k.
  void remove(std::size_t k);

  friend bool operator==(const Als&, const Als&) = default;

 private:
  Alphabet alphabet_;
  std::vector<RationalMatrix> coefficients_;
  RationalVector v_;
};

/// A validated pre-standard system. Dimension 0 encodes zero.
class PreStandardAls {
 public:
  /// Throws InvalidAls unless s is pre-standard (or has dimension 0).
  explicit PreStandardAls(Als s);
  static PreStandardAls zero(const Alphabet& alphabet);

  const Als& als() const { return als_; }
  std::size_t dim() const { return als_.dim(); }
  const Alphabet& alphabet() const { return als_.alphabet(); }
  /// Last entry of v; 0 for the zero system.
  Rational lambda() const;

  friend bool operator==(const PreStandardAls&, const PreStandardAls&) = default;

 private:
  Als als_;
};

struct AdmissibleTransformation {
  RationalMatrix p;
  RationalMatrix q;

  static AdmissibleTransformation identity(std::size_t n);
};

// -- semantics ----------------------------------------------------------------

/// First component of the solution, by back substitution.
NcPolynomial als_solve(const PreStandardAls& s);

/// Left family s (the full solution vector) of a unit upper triangular system with
/// arbitrary v. Throws InvalidAls otherwise.
std::vector<NcPolynomial> left_family(const Als& s);
/// Right family t with t A = e_1, for a unit upper triangular system.
std::vector<NcPolynomial> right_family(const Als& s);

/// Solution of any system whose constant part A_0 is invertible and whose remaining
/// pencil A_0^{-1} A_l is jointly nilpotent; computed by the terminating Neumann
/// series. Independent of the triangular machinery, used as a cross-check.
/// Throws InvalidAls when A_0 is singular or the series does not terminate.
NcPolynomial als_evaluate(const Als& s);

/// Ranks of the coordinate matrices of the left and right families.
struct FamilyRanks {
  std::size_t left;
  std::size_t right;
};
FamilyRanks family_ranks(const Als& s);
/// Both families linearly independent.
bool is_minimal(const Als& s);

// -- rational operations --------------------------------------------------------

/// (1, [1], c); the zero system when c = 0.
Als als_constant(const Alphabet& alphabet, const Rational& c);
/// Chain system of c*w, dimension |w| + 1.
Als als_monomial(const Alphabet& alphabet, const Word& w, const Rational& c);

Als als_scale(const Als& s, const Rational& mu);
/// Zero-dimensional operands act as zero.
Als als_add(const Als& f, const Als& g);
Als als_mul(const Als& f, const Als& g);
/// System for f^{-1}. Constructed only; it is not a polynomial system.
Als als_inverse_constructor(const Als& f);

/// Minimal product of two minimal pre-standard systems, dimension n_p + n_q - 1.
/// Throws InvalidAls for dimensions below 2. Debug builds verify minimality of the
/// operands against the Hankel rank.
PreStandardAls als_minimal_mul(const PreStandardAls& p, const PreStandardAls& q);

/// Admissible transformation to pre-standard form. Zero elements give dimension 0.
/// Throws InvalidAls when no triangularization exists (singular A_0 or a pencil that
/// does not represent a polynomial).
PreStandardAls pre_standardize(const Als& s);

/// (P A Q, P v). Throws InvalidAls if P or Q is singular, sizes differ or the first
/// row of Q is not e_1.
Als apply_transformation(const Als& s, const AdmissibleTransformation& t);

/// Left and right companion systems. Each q_i must have rank 2 and a holds
/// a_0..a_{m-1}. Left represents q_m...q_1 + a_{m-1} q_{m-1}...q_1 + ... + a_0,
/// right represents a_0 + a_1 q_1 + ... + a_{m-1} q_1...q_{m-1} + q_1...q_m.
PreStandardAls companion_left(const std::vector<NcPolynomial>& q, const std::vector<Rational>& a);
PreStandardAls companion_right(const std::vector<NcPolynomial>& q, const std::vector<Rational>& a);

/// Minimal pre-standard system for p; dimension 0 for p = 0.
PreStandardAls als_from_poly(const NcPolynomial& p);

}  // namespace ncfactor
