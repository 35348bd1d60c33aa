#ifndef DBGEN_PARSER_HPP
#define DBGEN_PARSER_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dbgen/ast.hpp"
#include "dbgen/lexer.hpp"

namespace dbgen {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message,
             std::vector<std::string> expected = {})
      : std::runtime_error(to_string(pos) + ": " + message),
        pos_(pos),
        expected_(std::move(expected)) {}

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

// Parses a complete module. Count expressions use the usual precedence
// (`*` over `+`/`-`, all left associative, parentheses for grouping) and
// the shorthand shift `CatName` is normalized to `[ 1 CatName ]`.
SourceGrammar parse_module(std::span<const Token> tokens);

// Convenience for whole files.
SourceGrammar parse_source(std::string_view text);

// Parses a standalone count expression (the `exp` sublanguage).
CountExpr parse_count_expr(std::string_view text);

}  // namespace dbgen

#endif
