#include "ncfactor/hankel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ncfactor {

HankelMatrix hankel_matrix(const NcPolynomial& p) {
  std::set<Word> prefixes;
  std::set<Word> suffixes;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i <= w.length(); ++i) {
      prefixes.insert(w.prefix(i));
      suffixes.insert(w.suffix_from(i));
    }
  }
  HankelMatrix h{p.alphabet(), {prefixes.begin(), prefixes.end()},
                 {suffixes.begin(), suffixes.end()}, {}};
  h.entries = RationalMatrix(h.row_words.size(), h.col_words.size());
  for (std::size_t i = 0; i < h.row_words.size(); ++i)
    for (std::size_t j = 0; j < h.col_words.size(); ++j)
      h.entries(i, j) = p.coefficient(h.row_words[i] * h.col_words[j]);
  return h;
}

std::size_t hankel_rank(const NcPolynomial& p) {
  if (p.is_zero()) return 0;
  const HankelMatrix h = hankel_matrix(p);
  const std::size_t rows = h.entries.rows();
  const std::size_t cols = h.entries.cols();

  // Scale each row to integers.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class d = h.entries(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& e = h.entries(i, j);
      m[i][j] = e.numerator() * (l / e.denominator());
    }
  }

  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pr = r;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

std::string format_hankel(const HankelMatrix& h) {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  for (const auto& w : h.row_words) row_labels.push_back(format_word(w, h.alphabet));
  for (const auto& w : h.col_words) col_labels.push_back(format_word(w, h.alphabet));

  std::size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(col_labels.size());
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    width[j] = col_labels[j].size();
    for (std::size_t i = 0; i < h.row_words.size(); ++i) {
      const Rational& e = h.entries(i, j);
      width[j] = std::max(width[j], e.is_zero() ? std::size_t{1} : e.str().size());
    }
  }

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream os;
  os << std::string(label_width, ' ');
  for (std::size_t j = 0; j < col_labels.size(); ++j) os << "  " << pad(col_labels[j], width[j]);
  os << '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    os << pad(row_labels[i], label_width);
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
      const Rational& e = h.entries(i, j);
      os << "  " << pad(e.is_zero() ? "." : e.str(), width[j]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ncfactor
