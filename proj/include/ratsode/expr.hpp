#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ratsode/ratfunc.hpp"

namespace ratsode {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    int line, col;
};

// Expression AST. Powers always carry integer exponents.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Lit {
        Rational value;
    };
    struct Sym {
        Var var;
    };
    struct Unary {
        ExprPtr operand;  // negation
    };
    struct Binary {
        char op;  // '+', '-', '*', '/'
        ExprPtr lhs, rhs;
    };
    struct Pow {
        ExprPtr base;
        long exponent;
    };
    std::variant<Lit, Sym, Unary, Binary, Pow> node;
};

// Recursive descent parser; precedence ^ > unary- > * / > + -, with
// left-associative * / + - and right-associative ^. Whitespace-insensitive.
// Identifiers must be one of z, w, wp, t, lambda ("wp" is the derivative
// symbol; prime notation is rejected).
ExprPtr parse_expr(const std::string& text);

// Evaluate the AST into a normalized rational function.
RatFunc expr_to_ratfunc(const ExprPtr& e);

// Convenience: parse directly to a RatFunc.
RatFunc parse_ratfunc(const std::string& text);

// Canonical printers. Output re-parses to an equal canonical value.
std::string render_expr(const MultiPoly& p);
std::string render_expr(const RatFunc& r);

}  // namespace ratsode
