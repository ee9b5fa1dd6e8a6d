#pragma once

#include <cstddef>
#include <vector>

#include "ncfactor/groebner.hpp"

namespace ncfactor {

/// Rational roots of a univariate polynomial (any single variable), each listed
/// once, ordered by height, then magnitude, positive first.
std::vector<Rational> univariate_rational_roots(const CommPolynomial& p);

enum class PointStatus {
  Found,           // at least one rational point
  TrivialIdeal,    // basis {1}: no points over any extension
  NoRationalPoint, // nontrivial ideal, search exhausted without a rational point
  Blocked,         // search budget exceeded before a decision
};

const char* to_string(PointStatus s);

struct FreeVariablePolicy {
  /// Values tried for a variable that no univariate generator pins down, in order.
  /// The first value is the default specialization.
  std::vector<Rational> ladder{0, 1, -1, Rational(1, 2), Rational(-1, 2), 2, -2, 3, -3};
  /// Stop after this many points (0 = all branches of the univariate generators).
  std::size_t max_points = 1;
  /// Upper bound on the number of Groebner basis recomputations.
  std::size_t budget = 4000;
};

struct RationalPointsResult {
  PointStatus status = PointStatus::NoRationalPoint;
  /// Complete assignments, one value per variable.
  std::vector<std::vector<Rational>> points;
  std::size_t basis_computations = 0;
};

/// Back-solve a reduced lex basis from the last variable upwards. A variable with a
/// univariate generator branches over its rational roots; any other variable takes
/// values from the ladder. The basis is recomputed after each substitution, so no
/// triangular shape is assumed. Every returned point annihilates every element of
/// `check` (the basis itself when empty).
RationalPointsResult rational_points(const IdealBasis& basis, const FreeVariablePolicy& policy = {},
                                     const std::vector<CommPolynomial>& check = {});

}  // namespace ncfactor
