#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "divpoly/centralpoly.hpp"
#include "divpoly/freepoly.hpp"

namespace divpoly {

// Syntax tree for
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := rational | symbol | '(' expr ')'
// Symbols are resolved when lowering: algebra labels, x<i>, y<i>_<j>.
struct Expr {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Pow, Neg };

  Kind kind = Kind::Number;
  Rational value;        // Number
  std::string name;      // Symbol
  unsigned exponent = 0; // Pow
  std::vector<Expr> args;
  std::size_t offset = 0;
};

// Throws SyntaxError("... at offset N: expected ...").
Expr parse_expr(std::string_view text);

// Largest i with x<i> in the tree (0 if none); labels of `spec` are skipped.
std::size_t max_variable(const Expr& e, const AlgebraSpec& spec);
// Largest i with y<i>_<j> in the tree (0 if none).
std::size_t max_central_variable(const Expr& e, const AlgebraSpec& spec);

FreePoly lower_free(const Expr& e, const AlgebraPtr& spec, std::size_t nvars);
CentralPoly lower_central(const Expr& e, const AlgebraPtr& spec, std::size_t nvars);

FreePoly parse(std::string_view text, const AlgebraPtr& spec, std::size_t nvars);
CentralPoly parse_central(std::string_view text, const AlgebraPtr& spec, std::size_t nvars);

// Deterministic text forms; parse(to_string(p)) == p.
std::string to_string(const FreePoly& p);
std::string to_string(const CentralPoly& p);
// Central variables named y<i>_<j> with j running over m.
std::string to_string(const ScalarPoly& p, std::size_t m);
std::string to_string(const AlgebraElement& a, const AlgebraSpec& spec);

}  // namespace divpoly
