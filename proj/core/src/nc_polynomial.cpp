#include "ncfactor/nc_polynomial.hpp"

#include <stdexcept>

#include "ncfactor/errors.hpp"

namespace ncfactor {

namespace {

void require_same_alphabet(const NcPolynomial& p, const NcPolynomial& q) {
  if (!(p.alphabet() == q.alphabet())) throw AlphabetMismatch();
}

}  // namespace

NcPolynomial NcPolynomial::constant(const Alphabet& alphabet, const Rational& c) {
  return monomial(alphabet, Word{}, c);
}

NcPolynomial NcPolynomial::letter(const Alphabet& alphabet, LetterIndex i) {
  if (i >= alphabet.size()) throw std::out_of_range("letter index outside alphabet");
  return monomial(alphabet, Word::letter(i), 1);
}

NcPolynomial NcPolynomial::monomial(const Alphabet& alphabet, Word w, const Rational& c) {
  NcPolynomial p(alphabet);
  p.add_term(w, c);
  return p;
}

bool NcPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int NcPolynomial::degree() const {
  if (terms_.empty()) return kZeroDegree;
  // Deglex order: the last key has maximal length.
  return static_cast<int>(terms_.rbegin()->first.length());
}

Rational NcPolynomial::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i] >= alphabet_.size()) throw std::out_of_range("word uses a letter outside the alphabet");
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
  require_same_alphabet(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
  require_same_alphabet(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
  return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

NcPolynomial poly_add(const NcPolynomial& p, const NcPolynomial& q) {
  NcPolynomial r = p;
  r += q;
  return r;
}

NcPolynomial poly_sub(const NcPolynomial& p, const NcPolynomial& q) {
  NcPolynomial r = p;
  r -= q;
  return r;
}

NcPolynomial poly_mul(const NcPolynomial& p, const NcPolynomial& q) {
  require_same_alphabet(p, q);
  NcPolynomial r(p.alphabet());
  for (const auto& [w1, c1] : p.terms()) {
    for (const auto& [w2, c2] : q.terms()) r.add_term(w1 * w2, c1 * c2);
  }
  return r;
}

NcPolynomial poly_scale(const Rational& mu, const NcPolynomial& p) {
  NcPolynomial r(p.alphabet());
  if (mu.is_zero()) return r;
  for (const auto& [w, c] : p.terms()) r.add_term(w, mu * c);
  return r;
}

bool poly_equal(const NcPolynomial& p, const NcPolynomial& q) {
  require_same_alphabet(p, q);
  return p.terms() == q.terms();
}

NcPolynomial poly_product(const std::vector<NcPolynomial>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product needs an alphabet");
  NcPolynomial r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = poly_mul(r, factors[i]);
  return r;
}

}  // namespace ncfactor
