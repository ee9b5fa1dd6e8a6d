#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncfactor/matrix.hpp"
#include "ncfactor/nc_polynomial.hpp"

namespace ncfactor {

/// Finite Hankel matrix h(w1, w2) = coefficient of w1*w2. Only prefixes (rows) and
/// suffixes (columns) of support words are indexed; every other row or column is zero.
struct HankelMatrix {
  Alphabet alphabet;
  std::vector<Word> row_words;  // deglex
  std::vector<Word> col_words;  // deglex
  RationalMatrix entries;
};

HankelMatrix hankel_matrix(const NcPolynomial& p);

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t hankel_rank(const NcPolynomial& p);

/// Word-labelled table, zeros shown as '.'.
std::string format_hankel(const HankelMatrix& h);

}  // namespace ncfactor
