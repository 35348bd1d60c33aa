#ifndef DBGEN_LEXER_HPP
#define DBGEN_LEXER_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dbgen/ast.hpp"

namespace dbgen {

enum class TokenKind {
  KwModule,
  KwEnd,
  KwInductive,
  KwType,
  KwWith,
  KwIn,
  KwBind,
  KwIndex,
  Identifier,
  Natural,
  LParen,
  RParen,
  Colon,
  ColonEq,
  Bar,
  Dot,
  Comma,
  LBracket,
  RBracket,
  Plus,
  Minus,
  Star,
  CommentOpen,   // "(*" opening an annotation run
  CommentClose,  // "*)" closing an annotation run
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourcePos pos;
};

std::string to_string(const Token& token);

class LexError : public std::runtime_error {
 public:
  LexError(SourcePos pos, const std::string& message)
      : std::runtime_error(to_string(pos) + ": " + message), pos_(pos) {}

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

// Turns source text into tokens. The annotations `(* index *)` and
// `(* bind <shifts> in *)` become structured token runs delimited by
// CommentOpen/CommentClose; every other comment (nesting allowed) is
// skipped as whitespace. Throws LexError on an unterminated comment or an
// illegal character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace dbgen

#endif
