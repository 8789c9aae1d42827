#pragma once
// Expression parser for polynomials, rational functions, and surd constants.
//
// Grammar (explicit '*' required, '^' for powers with integer exponents):
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('-'|'+')* power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | sqrt '(' expr ')' | '(' expr ')'
#include "ectcert/ratfunc.hpp"
#include "ectcert/surd.hpp"
#include <memory>
#include <stdexcept>
#include <string>

namespace ect {

struct ParseError : std::runtime_error {
    std::size_t pos;
    std::string expected;
    std::string found;
    ParseError(std::size_t p, std::string exp, std::string got)
        : std::runtime_error("parse error at position " + std::to_string(p) + ": expected " + exp +
                             ", found " + got),
          pos(p),
          expected(std::move(exp)),
          found(std::move(got)) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Pow, Neg, Sqrt };
    Kind kind{};
    std::size_t pos = 0;   // byte offset in the source text
    Int value;             // Number
    std::string name;      // Variable
    ExprPtr lhs, rhs;      // binary nodes; unary uses lhs
    long exponent = 0;     // Pow
};

ExprPtr parse_expression(const std::string& text);

// Lowering. Unknown variables and (for poly/ratfunc lowering) sqrt raise ParseError
// carrying the position of the offending node.
RatFunc lower_ratfunc(const ExprPtr& e, const std::string& var);
BiRat lower_birat(const ExprPtr& e, const std::string& var1, const std::string& var2);
Surd lower_surd(const ExprPtr& e);
PolyQ lower_poly(const ExprPtr& e, const std::string& var); // requires trivial denominator

// convenience: parse + lower in one step
RatFunc parse_ratfunc(const std::string& text, const std::string& var);
BiRat parse_birat(const std::string& text, const std::string& var1, const std::string& var2);
Surd parse_surd(const std::string& text);
PolyQ parse_poly(const std::string& text, const std::string& var);

} // namespace ect
