#include "ncfactor/parser.hpp"

#include <cctype>
#include <limits>

#include "ncfactor/errors.hpp"

namespace ncfactor {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

constexpr unsigned long kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<ExprAst> parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    auto e = sum();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  using Node = std::unique_ptr<ExprAst>;

  static Node make(ExprAst::Kind kind, std::size_t offset) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    n->offset = offset;
    return n;
  }

  static Node binary(ExprAst::Kind kind, Node a, Node b) {
    auto n = make(kind, a->offset);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Node sum() {
    auto lhs = signed_term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      auto rhs = signed_term();
      lhs = binary(c == '+' ? ExprAst::Kind::Sum : ExprAst::Kind::Difference, std::move(lhs),
                   std::move(rhs));
    }
  }

  Node signed_term() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-') {
      ++pos_;
      auto n = make(ExprAst::Kind::Negate, start);
      n->children.push_back(signed_term());
      return n;
    }
    if (peek() == '+') {
      ++pos_;
      return signed_term();
    }
    return product();
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '(' || is_digit(c) || is_ident_start(c);
  }

  Node product() {
    auto lhs = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
      } else if (!starts_factor()) {
        return lhs;
      }
      lhs = binary(ExprAst::Kind::Product, std::move(lhs), power());
    }
  }

  Node power() {
    auto base = atom();
    for (;;) {
      skip_ws();
      if (peek() != '^') return base;
      ++pos_;
      skip_ws();
      if (peek() == '-') throw ParseError("negative exponent", pos_);
      if (peek() == '+') ++pos_;
      if (!is_digit(peek())) throw ParseError("expected a nonnegative integer exponent", pos_);
      const std::size_t at = pos_;
      const std::string digits = read_digits();
      unsigned long e = 0;
      for (char d : digits) {
        e = e * 10 + static_cast<unsigned long>(d - '0');
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
      }
      auto n = make(ExprAst::Kind::Power, base->offset);
      n->exponent = e;
      n->children.push_back(std::move(base));
      base = std::move(n);
    }
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Node atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto n = make(ExprAst::Kind::Group, start);
      n->children.push_back(sum());
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return n;
    }
    if (is_digit(c)) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!is_digit(peek())) throw ParseError("expected an integer denominator", pos_);
        const std::size_t at = pos_;
        den = mpz_class(read_digits());
        if (den == 0) throw ParseError("zero denominator", at);
      } else {
        pos_ = save;
      }
      auto n = make(ExprAst::Kind::Literal, start);
      n->value = Rational(num, den);
      return n;
    }
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) ++pos_;
      auto n = make(ExprAst::Kind::Letter, start);
      n->name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

NcPolynomial power_of(const NcPolynomial& base, unsigned long e) {
  NcPolynomial result = NcPolynomial::constant(base.alphabet(), 1);
  NcPolynomial sq = base;
  while (e > 0) {
    if (e & 1UL) result = result * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return result;
}

}  // namespace

std::unique_ptr<ExprAst> parse_expr(std::string_view text) { return Parser(text).parse(); }

NcPolynomial expand(const ExprAst& ast, const Alphabet& alphabet) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::Literal:
      return NcPolynomial::constant(alphabet, ast.value);
    case K::Letter: {
      const auto idx = alphabet.index_of(ast.name);
      if (!idx) throw ParseError("unknown letter '" + ast.name + "'", ast.offset);
      return NcPolynomial::letter(alphabet, *idx);
    }
    case K::Negate:
      return -expand(*ast.children[0], alphabet);
    case K::Group:
      return expand(*ast.children[0], alphabet);
    case K::Sum:
      return expand(*ast.children[0], alphabet) + expand(*ast.children[1], alphabet);
    case K::Difference:
      return expand(*ast.children[0], alphabet) - expand(*ast.children[1], alphabet);
    case K::Product:
      return expand(*ast.children[0], alphabet) * expand(*ast.children[1], alphabet);
    case K::Power:
      return power_of(expand(*ast.children[0], alphabet), ast.exponent);
  }
  throw std::logic_error("unhandled expression node");
}

NcPolynomial parse_poly(std::string_view text, const Alphabet& alphabet) {
  return expand(*parse_expr(text), alphabet);
}

Alphabet infer_alphabet(std::string_view text) {
  std::vector<std::string> letters{"x", "y", "z"};
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ident_start(text[i])) {
      const std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      bool seen = false;
      for (const auto& l : letters) seen = seen || l == name;
      if (!seen) letters.push_back(std::move(name));
    } else if (is_digit(text[i])) {
      // Skip the whole numeral so "2x" still yields x but digits never start a name.
      while (i < text.size() && is_digit(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return Alphabet(std::move(letters));
}

std::string print_poly(const NcPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = c.abs();
    if (w.empty()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += format_word(w, p.alphabet());
    }
  }
  return out;
}

}  // namespace ncfactor
