#pragma once

#include <wallcross/torus_model.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wallcross {

struct SumExpr;

// A generator power or a parenthesized sum raised to a power.
struct FactorExpr {
    std::optional<Generator> generator;
    std::shared_ptr<const SumExpr> group;
    unsigned exponent = 1;
};

struct TermExpr {
    bool negative = false;
    std::optional<Rational> scalar; // nonnegative when present
    std::vector<FactorExpr> factors;
};

struct SumExpr {
    std::vector<TermExpr> terms;
};

/// Parsed class expression. `weyl` marks an outermost weyl(...) wrapper.
///
/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
///   factor := gen ['^' uint] | '(' expr ')' ['^' uint]
///   gen    := 'L' | 'v' uint | 'line(' int (',' int)* ')'
///   rational := uint ['/' uint]
/// with weyl(expr) allowed only around the whole input.
struct ClassExpr {
    SumExpr body;
    bool weyl = false;
};

// Throws SyntaxError with 1-based line/column.
ClassExpr parse_class_expr(std::string_view text);

// Canonical text; parse_class_expr(to_string(e)) prints back identically.
std::string to_string(const ClassExpr &e);

// Restrictions of the expression at every fixed point; applies
// weyl_correct for weyl(...).
EquivariantClass evaluate_class_expr(const ClassExpr &e, const TorusModel &model);

} // namespace wallcross
