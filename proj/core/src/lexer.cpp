#include "dbgen/lexer.hpp"

#include <cctype>

namespace dbgen {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwModule: return "keyword Module";
    case TokenKind::KwEnd: return "keyword End";
    case TokenKind::KwInductive: return "keyword Inductive";
    case TokenKind::KwType: return "keyword Type";
    case TokenKind::KwWith: return "keyword with";
    case TokenKind::KwIn: return "keyword in";
    case TokenKind::KwBind: return "keyword bind";
    case TokenKind::KwIndex: return "keyword index";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Natural: return "natural";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Colon: return "':'";
    case TokenKind::ColonEq: return "':='";
    case TokenKind::Bar: return "'|'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Comma: return "','";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::CommentOpen: return "'(*'";
    case TokenKind::CommentClose: return "'*)'";
  }
  return "token";
}

std::string to_string(const Token& token) {
  std::string out = to_string(token.pos);
  out += " ";
  out += token_kind_name(token.kind);
  if (token.kind == TokenKind::Identifier || token.kind == TokenKind::Natural) {
    out += " ";
    out += token.lexeme;
  }
  return out;
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      if (c == '(' && peek(1) == '*') {
        comment_or_annotation();
        continue;
      }
      if (is_ident_start(c)) {
        word(/*in_annotation=*/false);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        natural();
        continue;
      }
      symbol();
    }
    return std::move(tokens_);
  }

 private:
  struct State {
    std::size_t index;
    SourcePos pos;
    std::size_t token_count;
  };

  bool at_end() const { return index_ >= src_.size(); }

  char peek(std::size_t off = 0) const {
    return index_ + off < src_.size() ? src_[index_ + off] : '\0';
  }

  void advance() {
    if (src_[index_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++index_;
  }

  State save() const { return {index_, pos_, tokens_.size()}; }

  void restore(const State& s) {
    index_ = s.index;
    pos_ = s.pos;
    tokens_.resize(s.token_count);
  }

  void push(TokenKind kind, std::string lexeme, SourcePos pos) {
    tokens_.push_back({kind, std::move(lexeme), pos});
  }

  void word(bool in_annotation) {
    SourcePos start = pos_;
    std::string text;
    while (!at_end() && is_ident_char(peek())) {
      text.push_back(peek());
      advance();
    }
    TokenKind kind = TokenKind::Identifier;
    if (text == "Module") kind = TokenKind::KwModule;
    else if (text == "End") kind = TokenKind::KwEnd;
    else if (text == "Inductive") kind = TokenKind::KwInductive;
    else if (text == "Type") kind = TokenKind::KwType;
    else if (text == "with") kind = TokenKind::KwWith;
    // `in`, `bind` and `index` are keywords only inside annotations, so a
    // plain parameter may still be called e.g. `index`.
    else if (in_annotation && text == "in") kind = TokenKind::KwIn;
    else if (in_annotation && text == "bind") kind = TokenKind::KwBind;
    else if (in_annotation && text == "index") kind = TokenKind::KwIndex;
    push(kind, std::move(text), start);
  }

  void natural() {
    SourcePos start = pos_;
    std::string text;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      text.push_back(peek());
      advance();
    }
    push(TokenKind::Natural, std::move(text), start);
  }

  void symbol() {
    SourcePos start = pos_;
    char c = peek();
    switch (c) {
      case '(': advance(); push(TokenKind::LParen, "(", start); return;
      case ')': advance(); push(TokenKind::RParen, ")", start); return;
      case ':':
        advance();
        if (peek() == '=') {
          advance();
          push(TokenKind::ColonEq, ":=", start);
        } else {
          push(TokenKind::Colon, ":", start);
        }
        return;
      case '|': advance(); push(TokenKind::Bar, "|", start); return;
      case '.': advance(); push(TokenKind::Dot, ".", start); return;
      case ',': advance(); push(TokenKind::Comma, ",", start); return;
      case '[': advance(); push(TokenKind::LBracket, "[", start); return;
      case ']': advance(); push(TokenKind::RBracket, "]", start); return;
      case '+': advance(); push(TokenKind::Plus, "+", start); return;
      case '-': advance(); push(TokenKind::Minus, "-", start); return;
      case '*':
        advance();
        if (peek() == ')') {
          advance();
          push(TokenKind::CommentClose, "*)", start);
        } else {
          push(TokenKind::Star, "*", start);
        }
        return;
      default:
        throw LexError(start, std::string("illegal character '") + c + "'");
    }
  }

  // At "(*". Tries to lex an annotation run; anything that does not match
  // the two annotation shapes is skipped as an ordinary comment.
  void comment_or_annotation() {
    State start = save();
    SourcePos open_pos = pos_;
    advance();  // (
    advance();  // *
    skip_space();
    if (!at_end() && is_ident_start(peek())) {
      State word_state = save();
      SourcePos word_pos = pos_;
      std::string first = read_word();
      if (first == "index") {
        skip_space();
        if (peek() == '*' && peek(1) == ')') {
          SourcePos close_pos = pos_;
          advance();
          advance();
          push(TokenKind::CommentOpen, "(*", open_pos);
          push(TokenKind::KwIndex, "index", word_pos);
          push(TokenKind::CommentClose, "*)", close_pos);
          return;
        }
      } else if (first == "bind") {
        if (lex_bind_annotation(open_pos, word_pos)) return;
      }
      restore(word_state);
    }
    restore(start);
    skip_plain_comment();
  }

  // After the word `bind`. Returns true when the rest of the comment lexes
  // as a token run ending in `in *)`; otherwise leaves the stream for the
  // plain-comment fallback.
  bool lex_bind_annotation(SourcePos open_pos, SourcePos word_pos) {
    State start = save();
    std::vector<Token> inner;
    while (true) {
      skip_space();
      if (at_end()) {
        restore(start);
        return false;
      }
      char c = peek();
      if (c == '*' && peek(1) == ')') {
        if (inner.empty() || inner.back().kind != TokenKind::KwIn) {
          restore(start);
          return false;
        }
        SourcePos close_pos = pos_;
        advance();
        advance();
        push(TokenKind::CommentOpen, "(*", open_pos);
        push(TokenKind::KwBind, "bind", word_pos);
        for (auto& t : inner) tokens_.push_back(std::move(t));
        push(TokenKind::CommentClose, "*)", close_pos);
        return true;
      }
      if (c == '(' && peek(1) == '*') {
        restore(start);
        return false;
      }
      SourcePos tok_pos = pos_;
      if (is_ident_start(c)) {
        std::string text = read_word();
        TokenKind kind = text == "in" ? TokenKind::KwIn : TokenKind::Identifier;
        inner.push_back({kind, std::move(text), tok_pos});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string text;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          text.push_back(peek());
          advance();
        }
        inner.push_back({TokenKind::Natural, std::move(text), tok_pos});
        continue;
      }
      TokenKind kind;
      switch (c) {
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '[': kind = TokenKind::LBracket; break;
        case ']': kind = TokenKind::RBracket; break;
        case ',': kind = TokenKind::Comma; break;
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        default:
          restore(start);
          return false;
      }
      inner.push_back({kind, std::string(1, c), tok_pos});
      advance();
    }
  }

  std::string read_word() {
    std::string text;
    while (!at_end() && is_ident_char(peek())) {
      text.push_back(peek());
      advance();
    }
    return text;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' ||
                         peek() == '\n')) {
      advance();
    }
  }

  // At "(*" of a comment that is not an annotation. Comments nest.
  void skip_plain_comment() {
    SourcePos open_pos = pos_;
    advance();
    advance();
    int depth = 1;
    while (depth > 0) {
      if (at_end()) throw LexError(open_pos, "unterminated comment");
      if (peek() == '(' && peek(1) == '*') {
        advance();
        advance();
        ++depth;
      } else if (peek() == '*' && peek(1) == ')') {
        advance();
        advance();
        --depth;
      } else {
        advance();
      }
    }
  }

  std::string_view src_;
  std::size_t index_ = 0;
  SourcePos pos_{1, 1};
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace dbgen
