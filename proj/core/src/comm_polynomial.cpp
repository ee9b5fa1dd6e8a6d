#include "ncfactor/comm_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncfactor {

CommMonomial CommMonomial::variable(std::size_t nvars, std::size_t i) {
  CommMonomial m(nvars);
  m.exp_[i] = 1;
  return m;
}

std::uint32_t CommMonomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool CommMonomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
}

bool CommMonomial::divides(const CommMonomial& o) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial r = a;
  for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] += b.exp_[i];
  return r;
}

CommMonomial operator/(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial r = a;
  for (std::size_t i = 0; i < r.exp_.size(); ++i) {
    if (b.exp_[i] > r.exp_[i]) throw std::logic_error("monomial does not divide");
    r.exp_[i] -= b.exp_[i];
  }
  return r;
}

CommMonomial lcm(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial r = a;
  for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return r;
}

bool coprime(const CommMonomial& a, const CommMonomial& b) {
  for (std::size_t i = 0; i < a.exp_.size(); ++i)
    if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
  return true;
}

CommPolynomial CommPolynomial::constant(std::size_t nvars, const Rational& c) {
  CommPolynomial p(nvars);
  p.add_term(CommMonomial(nvars), c);
  return p;
}

CommPolynomial CommPolynomial::variable(std::size_t nvars, std::size_t i) {
  CommPolynomial p(nvars);
  p.add_term(CommMonomial::variable(nvars, i), 1);
  return p;
}

bool CommPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CommPolynomial::coefficient(const CommMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommPolynomial::add_term(const CommMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPolynomial& CommPolynomial::operator+=(const CommPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPolynomial& CommPolynomial::operator-=(const CommPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
  CommPolynomial r(a.nvars_);
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

CommPolynomial operator*(const Rational& c, const CommPolynomial& p) {
  CommPolynomial r(p.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : p.terms_) r.terms_.emplace(m, c * k);
  return r;
}

CommPolynomial CommPolynomial::times_term(const Rational& c, const CommMonomial& m) const {
  CommPolynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, c * k);
  return r;
}

CommPolynomial CommPolynomial::monic() const {
  if (is_zero()) return *this;
  return leading_coefficient().inverse() * *this;
}

std::vector<std::size_t> CommPolynomial::variables() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) used[i] = used[i] || m[i] > 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

std::optional<std::size_t> CommPolynomial::sole_variable() const {
  const auto vars = variables();
  if (vars.size() != 1) return std::nullopt;
  return vars.front();
}

std::uint32_t CommPolynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

CommPolynomial CommPolynomial::substitute(std::size_t var, const Rational& value) const {
  CommPolynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    CommMonomial mm = m;
    Rational k = c;
    for (std::uint32_t e = 0; e < m[var]; ++e) k *= value;
    mm[var] = 0;
    r.add_term(mm, k);
  }
  return r;
}

Rational CommPolynomial::evaluate(const std::vector<Rational>& point) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string format_comm(const CommPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const Rational mag = c.abs();
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace ncfactor
