#include <optional>

#include "ncfactor/als.hpp"
#include "ncfactor/minimizer.hpp"

namespace ncfactor {

namespace {

// The single letter occurring in p, if p is a polynomial in one letter.
std::optional<LetterIndex> sole_letter(const NcPolynomial& p) {
  std::optional<LetterIndex> letter;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (letter && *letter != w[i]) return std::nullopt;
      letter = w[i];
    }
  }
  return letter;
}

}  // namespace

PreStandardAls als_from_poly(const NcPolynomial& p) {
  const Alphabet& alphabet = p.alphabet();
  if (p.is_zero()) return PreStandardAls::zero(alphabet);
  if (p.is_constant()) return PreStandardAls(als_constant(alphabet, p.constant_term()));

  if (const auto letter = sole_letter(p)) {
    // Univariate: the left companion system of the monic polynomial, scaled.
    const std::size_t m = static_cast<std::size_t>(p.degree());
    const Word top(std::vector<LetterIndex>(m, *letter));
    const Rational lead = p.coefficient(top);
    std::vector<NcPolynomial> q(m, NcPolynomial::letter(alphabet, *letter));
    std::vector<Rational> a(m);
    for (std::size_t i = 0; i < m; ++i)
      a[i] = p.coefficient(Word(std::vector<LetterIndex>(i, *letter))) / lead;
    return minimize(als_scale(companion_left(q, a).als(), lead));
  }

  // Monomial systems summed one at a time, minimizing as we go.
  Als acc(alphabet, 0);
  for (const auto& [w, c] : p.terms()) {
    acc = minimize(pre_standardize(als_add(acc, als_monomial(alphabet, w, c)))).als();
  }
  return minimize(PreStandardAls(acc));
}

}  // namespace ncfactor
