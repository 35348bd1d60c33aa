#include "dbgen/parser.hpp"

#include <cstdlib>

namespace dbgen {

namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  SourceGrammar module() {
    SourceGrammar g;
    expect(TokenKind::KwModule, "Module");
    g.module_name = expect(TokenKind::Identifier, "module name").lexeme;
    expect(TokenKind::Dot, ".");
    while (check(TokenKind::KwInductive)) {
      g.groups.push_back(inductive_group());
    }
    if (g.groups.empty()) {
      fail("expected at least one Inductive block", {"Inductive"});
    }
    expect(TokenKind::KwEnd, "End");
    const Token& closing = expect(TokenKind::Identifier, "module name");
    if (closing.lexeme != g.module_name) {
      throw ParseError(closing.pos,
                       "module name mismatch: opened '" + g.module_name +
                           "', closed '" + closing.lexeme + "'");
    }
    expect(TokenKind::Dot, ".");
    if (!at_end()) {
      fail("expected end of input after module", {"end of input"});
    }
    return g;
  }

  CountExpr count_expr_only() {
    CountExpr e = count_expr();
    if (!at_end()) fail("expected end of expression", {"end of input"});
    return e;
  }

 private:
  bool at_end() const { return index_ >= tokens_.size(); }

  const Token& peek() const { return tokens_[index_]; }

  SourcePos here() const {
    if (!at_end()) return peek().pos;
    if (!tokens_.empty()) return tokens_.back().pos;
    return {1, 1};
  }

  bool check(TokenKind kind) const { return !at_end() && peek().kind == kind; }

  const Token& advance() { return tokens_[index_++]; }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) {
    std::string msg = message;
    if (!at_end()) {
      msg += " (found ";
      msg += token_kind_name(peek().kind);
      if (peek().kind == TokenKind::Identifier ||
          peek().kind == TokenKind::Natural) {
        msg += " '" + peek().lexeme + "'";
      }
      msg += ")";
    } else {
      msg += " (found end of input)";
    }
    throw ParseError(here(), msg, std::move(expected));
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (!check(kind)) {
      fail("expected " + what, {what});
    }
    return advance();
  }

  InductiveGroup inductive_group() {
    InductiveGroup group;
    group.pos = peek().pos;
    expect(TokenKind::KwInductive, "Inductive");
    group.categories.push_back(category());
    while (check(TokenKind::KwWith)) {
      advance();
      group.categories.push_back(category());
    }
    expect(TokenKind::Dot, ".");
    return group;
  }

  Category category() {
    Category cat;
    const Token& name = expect(TokenKind::Identifier, "category name");
    cat.name = name.lexeme;
    cat.pos = name.pos;
    expect(TokenKind::Colon, ":");
    expect(TokenKind::KwType, "Type");
    expect(TokenKind::ColonEq, ":=");
    while (check(TokenKind::Bar)) {
      cat.constructors.push_back(constructor());
    }
    return cat;
  }

  Constructor constructor() {
    Constructor ctor;
    expect(TokenKind::Bar, "|");
    const Token& name = expect(TokenKind::Identifier, "constructor name");
    ctor.name = name.lexeme;
    ctor.pos = name.pos;
    while (check(TokenKind::LParen)) {
      ctor.params.push_back(param());
    }
    return ctor;
  }

  Param param() {
    Param p;
    p.pos = peek().pos;
    expect(TokenKind::LParen, "(");
    if (check(TokenKind::CommentOpen)) {
      advance();
      if (check(TokenKind::KwIndex)) {
        advance();
        expect(TokenKind::CommentClose, "*)");
        p.kind = ParamKind::Index;
        p.name = expect(TokenKind::Identifier, "parameter name").lexeme;
        expect(TokenKind::Colon, ":");
        const Token& ty = expect(TokenKind::Identifier, "type name");
        if (ty.lexeme != "nat") {
          throw ParseError(ty.pos, "index parameter must have type nat");
        }
      } else if (check(TokenKind::KwBind)) {
        advance();
        BindingSpec spec;
        spec.shifts.push_back(shift());
        while (check(TokenKind::Comma)) {
          advance();
          spec.shifts.push_back(shift());
        }
        expect(TokenKind::KwIn, "in");
        expect(TokenKind::CommentClose, "*)");
        p.kind = ParamKind::Subterm;
        p.binding = std::move(spec);
        p.name = expect(TokenKind::Identifier, "parameter name").lexeme;
        expect(TokenKind::Colon, ":");
        const Token& ty = expect(TokenKind::Identifier, "category name");
        if (ty.lexeme == "nat") {
          throw ParseError(ty.pos,
                           "a bound parameter must have a category type");
        }
        p.category = ty.lexeme;
      } else {
        fail("expected index or bind annotation", {"index", "bind"});
      }
    } else {
      p.name = expect(TokenKind::Identifier, "parameter name").lexeme;
      expect(TokenKind::Colon, ":");
      const Token& ty = expect(TokenKind::Identifier, "type name");
      if (ty.lexeme == "nat") {
        p.kind = ParamKind::Nat;
      } else {
        p.kind = ParamKind::Subterm;
        p.category = ty.lexeme;
      }
    }
    expect(TokenKind::RParen, ")");
    return p;
  }

  Shift shift() {
    Shift s;
    s.pos = here();
    if (check(TokenKind::LBracket)) {
      advance();
      s.count = count_expr();
      s.sort = expect(TokenKind::Identifier, "category name").lexeme;
      expect(TokenKind::RBracket, "]");
    } else {
      // Shorthand: a bare category name binds one variable.
      const Token& name = expect(TokenKind::Identifier, "category name");
      s.sort = name.lexeme;
      s.count = CountExpr::literal(1);
      s.count.pos = name.pos;
    }
    return s;
  }

  CountExpr count_expr() {
    CountExpr lhs = mul_expr();
    while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
      CountExpr::Op op = peek().kind == TokenKind::Plus ? CountExpr::Op::Add
                                                        : CountExpr::Op::Sub;
      SourcePos pos = advance().pos;
      CountExpr rhs = mul_expr();
      lhs = CountExpr::binary(op, std::move(lhs), std::move(rhs));
      lhs.pos = pos;
    }
    return lhs;
  }

  CountExpr mul_expr() {
    CountExpr lhs = atom_expr();
    while (check(TokenKind::Star)) {
      SourcePos pos = advance().pos;
      CountExpr rhs = atom_expr();
      lhs = CountExpr::binary(CountExpr::Op::Mul, std::move(lhs), std::move(rhs));
      lhs.pos = pos;
    }
    return lhs;
  }

  CountExpr atom_expr() {
    if (check(TokenKind::Natural)) {
      const Token& t = advance();
      CountExpr e = CountExpr::literal(std::strtoull(t.lexeme.c_str(), nullptr, 10));
      e.pos = t.pos;
      return e;
    }
    if (check(TokenKind::Identifier)) {
      const Token& t = advance();
      CountExpr e = CountExpr::variable(t.lexeme);
      e.pos = t.pos;
      return e;
    }
    if (check(TokenKind::LParen)) {
      advance();
      CountExpr e = count_expr();
      expect(TokenKind::RParen, ")");
      return e;
    }
    fail("expected count expression", {"natural", "identifier", "("});
  }

  std::span<const Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

SourceGrammar parse_module(std::span<const Token> tokens) {
  return Parser(tokens).module();
}

SourceGrammar parse_source(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  return parse_module(tokens);
}

CountExpr parse_count_expr(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  return Parser(tokens).count_expr_only();
}

}  // namespace dbgen
