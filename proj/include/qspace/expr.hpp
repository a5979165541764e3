#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qspace/ncalg.hpp"
#include "qspace/phasespace.hpp"

namespace qspace {

/// Expression tree. Constant subtrees are folded into scalar nodes while parsing.
struct Expr {
  enum class Kind { scalar, symbol, sum, product, conj, star, deriv };

  Kind kind = Kind::scalar;
  QScalar value;               // scalar
  std::string name;            // symbol, or the derivative label
  std::vector<Expr> args;      // sum terms, product factors, or operands
  std::vector<bool> negated;   // per sum term
  DerivKind deriv;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
};

/// Coordinates, momenta ("P" + label) and Grassmann generators ("theta" + label) of a space.
std::vector<std::string> expr_symbols(const SpaceSpec& space);

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*        division only by invertible scalars
///   factor := '-' factor | atom ['^' exponent]     powers only of scalars
///   atom   := number | 'q' | 'i' | symbol | 'conj(' expr ')' | 'star(' expr ',' expr ')'
///           | 'd' ['h'] ('L' | 'R') '[' label ']' '(' expr ')' | '(' expr ')'
Expr parse_expr(std::string_view src, const SpaceSpec& space);
std::string render(const Expr& e);

/// Normal-ordered value in the coordinate algebra. Momentum and Grassmann symbols are unsupported here.
NCPoly evaluate(const Expr& e, const SpaceSpec& space);
/// Value as a commutative coefficient function; products of plain factors commute.
CommPoly evaluate_commutative(const Expr& e, const SpaceSpec& space);

std::string format_comm(const SpaceSpec& space, const CommPoly& f);

}  // namespace qspace
