#pragma once

// Element expressions:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] atom ['^' integer]
//   atom   := number ['/' number] | identifier | '(' expr ')'
// Identifiers are [A-Za-z_][A-Za-z0-9_]*, optionally followed directly by
// '+' or '-' when that spelling is a declared signed name (X+, X-).

#include <gmpxx.h>

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "abhk/algebra.hpp"

namespace abhk {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

enum class AstKind { Number, Name, Power, Product, Sum, Negate };

struct Ast {
  AstKind kind;
  mpq_class number;             // Number
  std::string name;             // Name
  long exponent = 0;            // Power
  std::vector<AstPtr> children;  // Power: {base}; Product, Sum: operands; Negate: {operand}
  std::vector<bool> minus;      // Sum: true where the operand is subtracted

  static AstPtr make_number(mpq_class v);
  static AstPtr make_name(std::string n);
  static AstPtr make_power(AstPtr base, long e);
  static AstPtr make_product(std::vector<AstPtr> f);
  static AstPtr make_sum(std::vector<AstPtr> terms, std::vector<bool> minus);
  static AstPtr make_negate(AstPtr a);
};

bool ast_equal(const Ast& a, const Ast& b);

/// Parses src; InputError "line L, column C: ..." on malformed input.
AstPtr parse_expr(const std::string& src, const std::set<std::string>& signed_names = {"X+", "X-"});

/// Canonical text that parses back to an equal tree.
std::string print_ast(const Ast& a);

/// Evaluates in an algebra. Names resolve against the algebra's named
/// generators, then "q" and "zeta" as scalars of its field. Negative powers
/// need an invertible monomial; InputError "<name> not invertible" otherwise.
Element eval_expr(const Ast& a, const Algebra& A);

/// parse + eval, with the algebra's signed generator names.
Element parse_element(const std::string& src, const Algebra& A);

/// Evaluates and requires a scalar multiple of 1.
Scalar parse_scalar(const std::string& src, const Algebra& A);

/// Names ending in '+' or '-' among the algebra's named generators.
std::set<std::string> signed_names(const Algebra& A);

}  // namespace abhk
