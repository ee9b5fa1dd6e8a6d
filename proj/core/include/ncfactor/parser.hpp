#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncfactor/nc_polynomial.hpp"

namespace ncfactor {

struct ExprAst {
  enum class Kind { Literal, Letter, Negate, Sum, Difference, Product, Power, Group };

  Kind kind;
  std::size_t offset = 0;  // byte offset of the node's first token
  Rational value;          // Literal
  std::string name;        // Letter
  unsigned long exponent = 0;  // Power
  std::vector<std::unique_ptr<ExprAst>> children;
};

/// Syntax only; letters are not resolved. Throws ParseError.
std::unique_ptr<ExprAst> parse_expr(std::string_view text);

/// Throws ParseError for unknown letters (offset of the letter).
NcPolynomial expand(const ExprAst& ast, const Alphabet& alphabet);

/// Grammar, loosest binding first:
///   sum     := signed (('+' | '-') signed)*
///   signed  := '-' signed | '+' signed | product
///   product := power (['*'] power)*
///   power   := atom ('^' INT)*
///   atom    := INT ['/' INT] | IDENT | '(' sum ')'
/// Two identifiers must be separated by '*' or whitespace ("xy" is one identifier).
NcPolynomial parse_poly(std::string_view text, const Alphabet& alphabet);

/// {x, y, z} followed by any further identifiers in order of first appearance.
Alphabet infer_alphabet(std::string_view text);

/// Deglex term order, e.g. "3*x - 4*x*y*x", "1/3 + x", "0".
std::string print_poly(const NcPolynomial& p);

}  // namespace ncfactor
