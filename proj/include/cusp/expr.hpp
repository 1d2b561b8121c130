#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cusp/mpoly.hpp"

namespace cusp {

// expr    := '-'? term (('+'|'-') term)*
// term    := factor ('*' factor)*
// factor  := base ('^' uint)?
// base    := variable | literal | 'w' | '(' expr ')'
// literal := uint ('/' uint)?
// No implicit multiplication. Exponents are bare unsigned integers capped
// at 64. 'w' is the extension generator and only parses under a field
// context. Errors carry the source position.

struct ExprNode {
  enum class Kind { Sum, Sub, Mul, Pow, Neg, Literal, Var, Gen };
  Kind kind;
  std::vector<std::unique_ptr<ExprNode>> kids;
  Rational lit{0};
  std::string name;
  unsigned exponent = 0;
  size_t pos = 0;
};

using ExprPtr = std::unique_ptr<ExprNode>;

ExprPtr parse_expr_text(const std::string& text);

// Empty allowed_vars means "no variables at all" (scalar literals); pass
// the variable universe otherwise.
MPoly to_mpoly(const ExprNode& ast, const std::optional<MinPoly>& field,
               const std::vector<std::string>& allowed_vars);

MPoly parse_poly(const std::string& text, const std::optional<MinPoly>& field,
                 const std::vector<std::string>& allowed_vars);

Scalar parse_scalar(const std::string& text, const std::optional<MinPoly>& field);

}  // namespace cusp
