#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncfactor/comm_polynomial.hpp"

namespace ncfactor {

struct IdealBasis {
  std::size_t nvars = 0;
  /// Sorted by leading monomial, largest first.
  std::vector<CommPolynomial> generators;
  bool reduced = false;

  bool is_trivial() const { return generators.size() == 1 && generators.front().is_unit(); }
};

/// Normal form of f modulo g (full reduction, every term).
CommPolynomial reduce(const CommPolynomial& f, const std::vector<CommPolynomial>& g);

CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced lex Groebner basis, monic, sorted. The zero ideal gives an empty basis,
/// an inconsistent one gives {1}. All gens must share nvars.
IdealBasis buchberger(const std::vector<CommPolynomial>& gens, std::size_t nvars,
                      BuchbergerStats* stats = nullptr);

struct BasisCheck {
  bool inputs_reduce_to_zero = false;
  bool s_polynomials_reduce_to_zero = false;
  bool ok() const { return inputs_reduce_to_zero && s_polynomials_reduce_to_zero; }
};

/// Independent postcondition check: every input reduces to 0 and every
/// S-polynomial of a basis pair reduces to 0.
BasisCheck verify_groebner_basis(const std::vector<CommPolynomial>& gens, const IdealBasis& basis);

}  // namespace ncfactor
