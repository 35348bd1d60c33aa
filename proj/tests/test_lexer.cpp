#include <vector>

#include "dbgen/lexer.hpp"
#include "doctest.h"

using namespace dbgen;

namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const Token& t : tokens) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST_CASE("keywords and punctuation") {
  auto tokens = tokenize("Module M.");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == TokenKind::KwModule);
  CHECK(tokens[1].kind == TokenKind::Identifier);
  CHECK(tokens[1].lexeme == "M");
  CHECK(tokens[2].kind == TokenKind::Dot);
  CHECK(tokens[0].pos == SourcePos{1, 1});
  CHECK(tokens[1].pos == SourcePos{1, 8});
  CHECK(tokens[2].pos == SourcePos{1, 9});
}

TEST_CASE("index annotation becomes a token run") {
  auto tokens = tokenize("((* index *) x : nat)");
  auto ks = kinds(tokens);
  CHECK(ks == std::vector<TokenKind>{
                  TokenKind::LParen, TokenKind::CommentOpen, TokenKind::KwIndex,
                  TokenKind::CommentClose, TokenKind::Identifier, TokenKind::Colon,
                  TokenKind::Identifier, TokenKind::RParen});
}

TEST_CASE("plain comments are skipped") {
  auto tokens = tokenize("(* just a note *) Inductive");
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].kind == TokenKind::KwInductive);
}

TEST_CASE("nested plain comments") {
  auto tokens = tokenize("(* outer (* inner *) still outer *) End");
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].kind == TokenKind::KwEnd);
}

TEST_CASE("bind annotation with expression") {
  auto tokens = tokenize("(* bind [2*n - 1 term] in *)");
  auto ks = kinds(tokens);
  CHECK(ks == std::vector<TokenKind>{
                  TokenKind::CommentOpen, TokenKind::KwBind, TokenKind::LBracket,
                  TokenKind::Natural, TokenKind::Star, TokenKind::Identifier,
                  TokenKind::Minus, TokenKind::Natural, TokenKind::Identifier,
                  TokenKind::RBracket, TokenKind::KwIn, TokenKind::CommentClose});
}

TEST_CASE("annotations tolerate free-form whitespace") {
  auto compact = tokenize("(*bind term in*)");
  CHECK(kinds(compact) == std::vector<TokenKind>{
                              TokenKind::CommentOpen, TokenKind::KwBind,
                              TokenKind::Identifier, TokenKind::KwIn,
                              TokenKind::CommentClose});
  auto spread = tokenize("(*  index\n*)");
  CHECK(kinds(spread) ==
        std::vector<TokenKind>{TokenKind::CommentOpen, TokenKind::KwIndex,
                               TokenKind::CommentClose});
}

TEST_CASE("comments that merely start like annotations stay comments") {
  CHECK(tokenize("(* indexes are fun *)").empty());
  CHECK(tokenize("(* index of the var *)").empty());
  CHECK(tokenize("(* bind early, bind often *)").empty());
  CHECK(tokenize("(* bind in spirit *) Type").size() == 1);
}

TEST_CASE("in, bind and index are plain identifiers outside annotations") {
  auto tokens = tokenize("(index : nat)");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[1].kind == TokenKind::Identifier);
  CHECK(tokens[1].lexeme == "index");
}

TEST_CASE("positions are strictly increasing") {
  std::string src = "Module M.\nInductive t : Type :=\n| c ((* bind t in *) a : t).\nEnd M.\n";
  auto tokens = tokenize(src);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const SourcePos& a = tokens[i - 1].pos;
    const SourcePos& b = tokens[i].pos;
    bool increasing = a.line < b.line || (a.line == b.line && a.column < b.column);
    CHECK(increasing);
  }
}

TEST_CASE("lex errors carry in-bounds positions") {
  SUBCASE("unterminated comment") {
    try {
      tokenize("Module M. (* oops");
      FAIL("expected LexError");
    } catch (const LexError& e) {
      CHECK(e.pos() == SourcePos{1, 11});
    }
  }
  SUBCASE("unterminated bind annotation") {
    try {
      tokenize("(* bind term in");
      FAIL("expected LexError");
    } catch (const LexError& e) {
      CHECK(e.pos().line == 1);
    }
  }
  SUBCASE("illegal character") {
    try {
      tokenize("Module M;");
      FAIL("expected LexError");
    } catch (const LexError& e) {
      CHECK(e.pos() == SourcePos{1, 9});
    }
  }
}

TEST_CASE("natural literals contain only digits") {
  auto tokens = tokenize("42 7");
  REQUIRE(tokens.size() == 2);
  for (const Token& t : tokens) {
    CHECK(t.kind == TokenKind::Natural);
    for (char c : t.lexeme) CHECK((c >= '0' && c <= '9'));
  }
}
