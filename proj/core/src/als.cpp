#include "ncfactor/als.hpp"

#include <map>
#include <set>
#include <string>

#include "ncfactor/errors.hpp"
#include "ncfactor/hankel.hpp"

namespace ncfactor {

namespace {

void require_same_alphabet(const Als& f, const Als& g) {
  if (!(f.alphabet() == g.alphabet())) throw AlphabetMismatch();
}

// x_l * p
NcPolynomial letter_times(LetterIndex l, const NcPolynomial& p) {
  NcPolynomial r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add_term(Word::letter(l) * w, c);
  return r;
}

// p * x_l
NcPolynomial times_letter(const NcPolynomial& p, LetterIndex l) {
  NcPolynomial r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add_term(w * Word::letter(l), c);
  return r;
}

// Coordinate matrix of a family of polynomials; one row per element.
RationalMatrix coordinates(const std::vector<NcPolynomial>& family) {
  std::set<Word> support;
  for (const auto& f : family)
    for (const auto& [w, c] : f.terms()) support.insert(w);
  const std::vector<Word> words(support.begin(), support.end());
  RationalMatrix m(family.size(), words.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) m(i, j) = family[i].coefficient(words[j]);
  return m;
}

// Strip trailing components with v_last = 0, then clear v above the last entry.
PreStandardAls normalize_triangular(Als a) {
  while (a.dim() > 0 && a.v().back().is_zero()) a.remove(a.dim() - 1);
  if (a.dim() == 0) return PreStandardAls::zero(a.alphabet());
  const std::size_t last = a.dim() - 1;
  const Rational lambda = a.v()[last];
  for (std::size_t i = 0; i < last; ++i) {
    if (!a.v()[i].is_zero()) a.add_row_multiple(i, last, -(a.v()[i] / lambda));
  }
  return PreStandardAls(std::move(a));
}

Als transform_unchecked(const Als& s, const RationalMatrix& p, const RationalMatrix& q) {
  std::vector<RationalMatrix> coeffs;
  coeffs.reserve(s.pencil_size());
  for (const auto& c : s.coefficients()) coeffs.push_back(p * c * q);
  return Als(s.alphabet(), std::move(coeffs), p * s.v());
}

// Matrix with the given columns.
RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t n) {
  RationalMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

PreStandardAls pre_standardize_general(const Als& s, int depth) {
  const std::size_t n = s.dim();
  const auto m = inverse(s.coefficient(0));
  if (!m) throw InvalidAls("constant part of the pencil is singular");

  // After multiplying by A_0^{-1} the pencil is I + sum N_l x_l.
  std::vector<RationalMatrix> nl;
  for (std::size_t l = 1; l < s.pencil_size(); ++l) nl.push_back(*m * s.coefficient(l));

  // Flag V_1 < V_2 < ... with N_l V_i inside V_{i-1}; an adapted basis makes every
  // N_l strictly upper triangular.
  std::vector<RationalVector> basis;
  bool first_level = true;
  while (basis.size() < n) {
    RationalMatrix annihilator;
    if (basis.empty()) {
      annihilator = RationalMatrix::identity(n);
    } else {
      const auto rows = null_space(transpose(from_columns(basis, n)));
      annihilator = transpose(from_columns(rows, n));
    }
    RationalMatrix stacked(annihilator.rows() * std::max<std::size_t>(nl.size(), 1), n);
    for (std::size_t l = 0; l < nl.size(); ++l)
      stacked.set_block(l * annihilator.rows(), 0, annihilator * nl[l]);
    const auto level = null_space(stacked);
    const std::size_t before = basis.size();

    if (first_level) {
      first_level = false;
      std::size_t pick = level.size();
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (!level[i][0].is_zero()) {
          pick = i;
          break;
        }
      }
      if (pick == level.size()) {
        // No admissible first basis vector: border with a copy of s_1 and retry.
        if (depth > 0) throw InvalidAls("cannot triangularize admissibly");
        Als b(s.alphabet(), n + 1);
        b.coefficient(0)(0, 0) = 1;
        b.coefficient(0)(0, 1) = -1;
        for (std::size_t l = 0; l < s.pencil_size(); ++l)
          b.coefficient(l).set_block(1, 1, s.coefficient(l));
        for (std::size_t i = 0; i < n; ++i) b.v()[i + 1] = s.v()[i];
        return pre_standardize_general(b, depth + 1);
      }
      RationalVector q1 = level[pick];
      const Rational lead = q1[0].inverse();
      for (auto& e : q1) e *= lead;
      basis.push_back(q1);
    }

    for (const auto& w : level) {
      RationalVector c = w;
      const Rational f = c[0];
      if (!f.is_zero())
        for (std::size_t i = 0; i < n; ++i) c[i] -= f * basis[0][i];
      auto trial = basis;
      trial.push_back(c);
      if (rank(from_columns(trial, n)) == trial.size()) basis = std::move(trial);
    }
    if (basis.size() == before && before < n) throw InvalidAls("pencil is not nilpotent");
  }

  const RationalMatrix q = from_columns(basis, n);
  const auto q_inv = inverse(q);
  if (!q_inv) throw std::logic_error("flag basis is singular");
  Als t = transform_unchecked(s, *q_inv * *m, q);
  if (!t.is_unit_upper_triangular()) throw std::logic_error("flag basis did not triangularize");
  return normalize_triangular(std::move(t));
}

}  // namespace

// -- Als ------------------------------------------------------------------------

Als::Als(Alphabet alphabet, std::size_t dim)
    : alphabet_(std::move(alphabet)),
      coefficients_(alphabet_.size() + 1, RationalMatrix(dim, dim)),
      v_(dim) {}

Als::Als(Alphabet alphabet, std::vector<RationalMatrix> coefficients, RationalVector v)
    : alphabet_(std::move(alphabet)), coefficients_(std::move(coefficients)), v_(std::move(v)) {
  if (coefficients_.size() != alphabet_.size() + 1)
    throw InvalidAls("need one coefficient matrix per letter plus the constant part");
  for (const auto& c : coefficients_) {
    if (c.rows() != v_.size() || c.cols() != v_.size())
      throw InvalidAls("coefficient matrix size does not match v");
  }
}

LinearForm Als::entry(std::size_t i, std::size_t j) const {
  LinearForm f(coefficients_.size());
  for (std::size_t l = 0; l < coefficients_.size(); ++l) f[l] = coefficients_[l](i, j);
  return f;
}

void Als::set_entry(std::size_t i, std::size_t j, const LinearForm& f) {
  if (f.size() != coefficients_.size()) throw InvalidAls("linear form has wrong length");
  for (std::size_t l = 0; l < coefficients_.size(); ++l) coefficients_[l](i, j) = f[l];
}

void Als::set_entry(std::size_t i, std::size_t j, const NcPolynomial& p) {
  if (!(p.alphabet() == alphabet_)) throw AlphabetMismatch();
  if (p.degree() > 1) throw InvalidAls("pencil entries must be of degree at most 1");
  LinearForm f(coefficients_.size());
  for (const auto& [w, c] : p.terms()) f[w.empty() ? 0 : w[0] + 1] = c;
  set_entry(i, j, f);
}

NcPolynomial Als::entry_poly(std::size_t i, std::size_t j) const {
  NcPolynomial p(alphabet_);
  p.add_term(Word{}, coefficients_[0](i, j));
  for (std::size_t l = 1; l < coefficients_.size(); ++l)
    p.add_term(Word::letter(static_cast<LetterIndex>(l - 1)), coefficients_[l](i, j));
  return p;
}

bool Als::entry_is_zero(std::size_t i, std::size_t j) const {
  for (const auto& c : coefficients_)
    if (!c(i, j).is_zero()) return false;
  return true;
}

bool Als::entry_is_constant(std::size_t i, std::size_t j) const {
  for (std::size_t l = 1; l < coefficients_.size(); ++l)
    if (!coefficients_[l](i, j).is_zero()) return false;
  return true;
}

bool Als::is_unit_upper_triangular() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (i == j) {
        if (!coefficients_[0](i, i).is_one() || !entry_is_constant(i, i)) return false;
      } else if (!entry_is_zero(i, j)) {
        return false;
      }
    }
  }
  return true;
}

bool Als::is_pre_standard() const {
  if (dim() == 0) return true;
  if (!is_unit_upper_triangular()) return false;
  for (std::size_t i = 0; i + 1 < dim(); ++i)
    if (!v_[i].is_zero()) return false;
  return !v_.back().is_zero();
}

void Als::add_row_multiple(std::size_t dst, std::size_t src, const Rational& c) {
  if (c.is_zero()) return;
  for (auto& m : coefficients_)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!m(src, j).is_zero()) m(dst, j) += c * m(src, j);
  v_[dst] += c * v_[src];
}

void Als::add_col_multiple(std::size_t dst, std::size_t src, const Rational& c) {
  if (c.is_zero()) return;
  for (auto& m : coefficients_)
    for (std::size_t i = 0; i < dim(); ++i)
      if (!m(i, src).is_zero()) m(i, dst) += c * m(i, src);
}

void Als::scale_row(std::size_t i, const Rational& c) {
  for (auto& m : coefficients_)
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) *= c;
  v_[i] *= c;
}

void Als::scale_col(std::size_t j, const Rational& c) {
  for (auto& m : coefficients_)
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) *= c;
}

void Als::remove(std::size_t k) {
  for (auto& m : coefficients_) m = m.without(k, k);
  v_.erase(v_.begin() + static_cast<std::ptrdiff_t>(k));
}

PreStandardAls::PreStandardAls(Als s) : als_(std::move(s)) {
  if (!als_.is_pre_standard()) throw InvalidAls("system is not pre-standard");
}

PreStandardAls PreStandardAls::zero(const Alphabet& alphabet) { return PreStandardAls(Als(alphabet, 0)); }

Rational PreStandardAls::lambda() const { return dim() == 0 ? Rational(0) : als_.v().back(); }

AdmissibleTransformation AdmissibleTransformation::identity(std::size_t n) {
  return {RationalMatrix::identity(n), RationalMatrix::identity(n)};
}

// -- semantics ------------------------------------------------------------------

std::vector<NcPolynomial> left_family(const Als& s) {
  if (!s.is_unit_upper_triangular()) throw InvalidAls("left family needs a unit upper triangular pencil");
  const std::size_t n = s.dim();
  std::vector<NcPolynomial> f(n, NcPolynomial(s.alphabet()));
  for (std::size_t ii = n; ii-- > 0;) {
    NcPolynomial acc = NcPolynomial::constant(s.alphabet(), s.v()[ii]);
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (f[j].is_zero() || s.entry_is_zero(ii, j)) continue;
      acc -= poly_scale(s.coefficient(0)(ii, j), f[j]);
      for (std::size_t l = 1; l < s.pencil_size(); ++l) {
        const Rational& c = s.coefficient(l)(ii, j);
        if (!c.is_zero()) acc -= poly_scale(c, letter_times(static_cast<LetterIndex>(l - 1), f[j]));
      }
    }
    f[ii] = std::move(acc);
  }
  return f;
}

std::vector<NcPolynomial> right_family(const Als& s) {
  if (!s.is_unit_upper_triangular()) throw InvalidAls("right family needs a unit upper triangular pencil");
  const std::size_t n = s.dim();
  std::vector<NcPolynomial> t(n, NcPolynomial(s.alphabet()));
  for (std::size_t j = 0; j < n; ++j) {
    NcPolynomial acc = NcPolynomial::constant(s.alphabet(), j == 0 ? 1 : 0);
    for (std::size_t i = 0; i < j; ++i) {
      if (t[i].is_zero() || s.entry_is_zero(i, j)) continue;
      acc -= poly_scale(s.coefficient(0)(i, j), t[i]);
      for (std::size_t l = 1; l < s.pencil_size(); ++l) {
        const Rational& c = s.coefficient(l)(i, j);
        if (!c.is_zero()) acc -= poly_scale(c, times_letter(t[i], static_cast<LetterIndex>(l - 1)));
      }
    }
    t[j] = std::move(acc);
  }
  return t;
}

NcPolynomial als_solve(const PreStandardAls& s) {
  if (s.dim() == 0) return NcPolynomial(s.alphabet());
  return left_family(s.als()).front();
}

NcPolynomial als_evaluate(const Als& s) {
  const std::size_t n = s.dim();
  if (n == 0) return NcPolynomial(s.alphabet());
  const auto m = inverse(s.coefficient(0));
  if (!m) throw InvalidAls("constant part of the pencil is singular");
  std::vector<RationalMatrix> nl;
  for (std::size_t l = 1; l < s.pencil_size(); ++l) nl.push_back(*m * s.coefficient(l));

  const RationalVector start = *m * s.v();
  std::vector<NcPolynomial> term(n, NcPolynomial(s.alphabet()));
  for (std::size_t i = 0; i < n; ++i) term[i] = NcPolynomial::constant(s.alphabet(), start[i]);
  NcPolynomial result = term[0];
  // A nilpotent pencil of size n kills every product of n factors.
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<NcPolynomial> next(n, NcPolynomial(s.alphabet()));
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < nl.size(); ++l)
        for (std::size_t j = 0; j < n; ++j) {
          const Rational& c = nl[l](i, j);
          if (c.is_zero() || term[j].is_zero()) continue;
          next[i] -= poly_scale(c, letter_times(static_cast<LetterIndex>(l), term[j]));
        }
      nonzero = nonzero || !next[i].is_zero();
    }
    if (!nonzero) return result;
    if (round == n) break;
    result += next[0];
    term = std::move(next);
  }
  throw InvalidAls("pencil is not nilpotent; the system does not represent a polynomial");
}

FamilyRanks family_ranks(const Als& s) {
  return {rank(coordinates(left_family(s))), rank(coordinates(right_family(s)))};
}

bool is_minimal(const Als& s) {
  const auto r = family_ranks(s);
  return r.left == s.dim() && r.right == s.dim();
}

// -- rational operations ----------------------------------------------------------

Als als_constant(const Alphabet& alphabet, const Rational& c) {
  if (c.is_zero()) return Als(alphabet, 0);
  Als a(alphabet, 1);
  a.coefficient(0)(0, 0) = 1;
  a.v()[0] = c;
  return a;
}

Als als_monomial(const Alphabet& alphabet, const Word& w, const Rational& c) {
  if (c.is_zero()) return Als(alphabet, 0);
  const std::size_t n = w.length() + 1;
  Als a(alphabet, n);
  for (std::size_t i = 0; i < n; ++i) a.coefficient(0)(i, i) = 1;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i] >= alphabet.size()) throw std::out_of_range("word uses a letter outside the alphabet");
    a.coefficient(w[i] + 1)(i, i + 1) = -1;
  }
  a.v()[n - 1] = c;
  return a;
}

Als als_scale(const Als& s, const Rational& mu) {
  if (mu.is_zero()) return Als(s.alphabet(), 0);
  Als r = s;
  for (auto& e : r.v()) e *= mu;
  return r;
}

Als als_add(const Als& f, const Als& g) {
  require_same_alphabet(f, g);
  if (f.dim() == 0) return g;
  if (g.dim() == 0) return f;
  const std::size_t nf = f.dim();
  Als r(f.alphabet(), nf + g.dim());
  for (std::size_t l = 0; l < r.pencil_size(); ++l) {
    r.coefficient(l).set_block(0, 0, f.coefficient(l));
    r.coefficient(l).set_block(nf, nf, g.coefficient(l));
    // -A_f u_f^T u_g: minus the first column of A_f, placed in column nf.
    for (std::size_t i = 0; i < nf; ++i) r.coefficient(l)(i, nf) = -f.coefficient(l)(i, 0);
  }
  for (std::size_t i = 0; i < nf; ++i) r.v()[i] = f.v()[i];
  for (std::size_t i = 0; i < g.dim(); ++i) r.v()[nf + i] = g.v()[i];
  return r;
}

Als als_mul(const Als& f, const Als& g) {
  require_same_alphabet(f, g);
  if (f.dim() == 0 || g.dim() == 0) return Als(f.alphabet(), 0);
  const std::size_t nf = f.dim();
  Als r(f.alphabet(), nf + g.dim());
  for (std::size_t l = 0; l < r.pencil_size(); ++l) {
    r.coefficient(l).set_block(0, 0, f.coefficient(l));
    r.coefficient(l).set_block(nf, nf, g.coefficient(l));
  }
  for (std::size_t i = 0; i < nf; ++i) r.coefficient(0)(i, nf) = -f.v()[i];
  for (std::size_t i = 0; i < g.dim(); ++i) r.v()[nf + i] = g.v()[i];
  return r;
}

Als als_inverse_constructor(const Als& f) {
  if (f.dim() == 0) throw InvalidAls("zero has no inverse");
  const std::size_t n = f.dim();
  Als r(f.alphabet(), n + 1);
  for (std::size_t i = 0; i < n; ++i) r.coefficient(0)(i, 0) = -f.v()[i];
  for (std::size_t l = 0; l < r.pencil_size(); ++l) r.coefficient(l).set_block(0, 1, f.coefficient(l));
  r.coefficient(0)(n, 1) = 1;
  r.v()[n] = 1;
  return r;
}

PreStandardAls als_minimal_mul(const PreStandardAls& p, const PreStandardAls& q) {
  if (p.dim() < 2 || q.dim() < 2) throw InvalidAls("minimal multiplication needs dimensions of at least 2");
#ifndef NDEBUG
  if (hankel_rank(als_solve(p)) != p.dim() || hankel_rank(als_solve(q)) != q.dim())
    throw InvalidAls("minimal multiplication needs minimal operands");
#endif
  const std::size_t np = p.dim();
  Als r = als_mul(p.als(), q.als());
  r.add_col_multiple(np, np - 1, p.lambda());
  r.remove(np - 1);
  return PreStandardAls(std::move(r));
}

PreStandardAls pre_standardize(const Als& s) {
  if (s.dim() == 0) return PreStandardAls::zero(s.alphabet());
  if (s.is_unit_upper_triangular()) return normalize_triangular(s);
  return pre_standardize_general(s, 0);
}

Als apply_transformation(const Als& s, const AdmissibleTransformation& t) {
  const std::size_t n = s.dim();
  if (t.p.rows() != n || t.p.cols() != n || t.q.rows() != n || t.q.cols() != n)
    throw InvalidAls("transformation size does not match the system");
  if (n > 0) {
    if (!t.q(0, 0).is_one()) throw InvalidAls("first row of Q must be e_1");
    for (std::size_t j = 1; j < n; ++j)
      if (!t.q(0, j).is_zero()) throw InvalidAls("first row of Q must be e_1");
  }
  if (rank(t.p) != n || rank(t.q) != n) throw InvalidAls("transformation is not invertible");
  return transform_unchecked(s, t.p, t.q);
}

namespace {

void require_rank_two(const std::vector<NcPolynomial>& q, const std::vector<Rational>& a) {
  if (q.empty()) throw InvalidAls("companion system needs at least one factor");
  if (a.size() != q.size()) throw InvalidAls("companion system needs one coefficient per factor");
  for (const auto& qi : q) {
    if (!(qi.alphabet() == q.front().alphabet())) throw AlphabetMismatch();
    if (hankel_rank(qi) != 2) throw InvalidAls("companion factors must have rank 2");
  }
}

Als unit_diagonal(const Alphabet& alphabet, std::size_t n) {
  Als s(alphabet, n);
  for (std::size_t i = 0; i < n; ++i) s.coefficient(0)(i, i) = 1;
  s.v()[n - 1] = 1;
  return s;
}

}  // namespace

PreStandardAls companion_left(const std::vector<NcPolynomial>& q, const std::vector<Rational>& a) {
  require_rank_two(q, a);
  const std::size_t m = q.size();
  const Alphabet& alphabet = q.front().alphabet();
  Als s = unit_diagonal(alphabet, m + 1);
  s.set_entry(0, 1, -(q[m - 1] + NcPolynomial::constant(alphabet, a[m - 1])));
  for (std::size_t j = 2; j <= m; ++j) s.coefficient(0)(0, j) = -a[m - j];
  for (std::size_t i = 1; i < m; ++i) s.set_entry(i, i + 1, -q[m - 1 - i]);
  return PreStandardAls(std::move(s));
}

PreStandardAls companion_right(const std::vector<NcPolynomial>& q, const std::vector<Rational>& a) {
  require_rank_two(q, a);
  const std::size_t m = q.size();
  const Alphabet& alphabet = q.front().alphabet();
  Als s = unit_diagonal(alphabet, m + 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    s.set_entry(i, i + 1, -q[i]);
    s.coefficient(0)(i, m) = -a[i];
  }
  s.set_entry(m - 1, m, -(q[m - 1] + NcPolynomial::constant(alphabet, a[m - 1])));
  return PreStandardAls(std::move(s));
}

}  // namespace ncfactor
