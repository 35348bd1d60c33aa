#ifndef DBGEN_RENDER_HPP
#define DBGEN_RENDER_HPP

#include <string>

#include "dbgen/ast.hpp"

namespace dbgen {

// Renders a grammar back to concrete source syntax such that
// parse_source(render_source(g)) == g. Count literals of 1 render as the
// shorthand shift form.
std::string render_source(const SourceGrammar& g);

// Renders a count expression with minimal parentheses preserving the parse.
std::string render_count_expr(const CountExpr& e);

std::string render_param(const Param& p);

}  // namespace dbgen

#endif
