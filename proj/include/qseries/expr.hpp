#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "qseries/qfunctions.hpp"
#include "qseries/series.hpp"

namespace qs::expr {

// AST over the surface grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := atom ("^" INT)?
//   atom   := INT | MONO | CALL | "(" expr ")"
//   CALL   := NAME "(" args ")"
//   MONO   := "-"? "q" ("^" INT)?
//   NAME   in {E, phi, psi, f, G, H, QF}
// Precedence: ^ over * and / over + and -; all left associative. Unary minus
// exists only inside monomials; otherwise write "0 - expr".
enum class Kind { Sum, Product, Quotient, Power, Scalar, MonomialNode, Call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  NodePtr lhs, rhs;              // Sum/Product/Quotient/Power(lhs only)
  bool subtract = false;         // Sum: lhs - rhs instead of lhs + rhs
  long exponent = 0;             // Power
  Rat scalar;                    // Scalar
  Monomial mono;                 // MonomialNode
  std::string name;              // Call
  std::vector<Monomial> args;    // Call arguments for E/phi/psi/f/G/H
  std::array<long, 3> form{};    // Call arguments for QF
};

// Throws std::runtime_error with one of the messages
//   "syntax error at offset k: TOKEN", "arity error", "invalid monomial".
NodePtr parse_expr(const std::string& text);

std::string pretty(const NodePtr& ast);

Series eval_expr(const NodePtr& ast, long N);

}  // namespace qs::expr
