/*
 * Copyright 2026 the webcheck authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "webcheck/evl_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "webcheck/errors.hpp"

namespace webcheck {

namespace {

enum class Tok {
  Ident,
  String,
  KwContext,
  KwConstraint,
  KwGuard,
  KwCheck,
  KwMessage,
  KwFix,
  KwAnd,
  KwOr,
  KwNot,
  KwSelf,
  KwTrue,
  KwFalse,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Colon,
  Dot,
  Comma,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier name or decoded string value
  int line = 1;
  int column = 1;
};

constexpr std::array<std::pair<std::string_view, Tok>, 12> kKeywords = {{
    {"context", Tok::KwContext},
    {"constraint", Tok::KwConstraint},
    {"guard", Tok::KwGuard},
    {"check", Tok::KwCheck},
    {"message", Tok::KwMessage},
    {"fix", Tok::KwFix},
    {"and", Tok::KwAnd},
    {"or", Tok::KwOr},
    {"not", Tok::KwNot},
    {"self", Tok::KwSelf},
    {"true", Tok::KwTrue},
    {"false", Tok::KwFalse},
}};

bool is_ident_start(char c) {
  return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::String: return "string literal";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
    default: return "keyword '" + t.text + "'";
  }
}

class Lexer {
public:
  Lexer(std::string_view text, std::string source_name)
      : text_(text), source_(std::move(source_name)) {}

  const std::string& source() const { return source_; }

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;  // End
    char c = text_[pos_];
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) t.text += take();
      t.kind = Tok::Ident;
      for (const auto& [word, kind] : kKeywords) {
        if (t.text == word) {
          t.kind = kind;
          break;
        }
      }
      return t;
    }
    if (c == '"') return lex_string(t);
    take();
    switch (c) {
      case '{': t.kind = Tok::LBrace; return t;
      case '}': t.kind = Tok::RBrace; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      case ':': t.kind = Tok::Colon; return t;
      case '.': t.kind = Tok::Dot; return t;
      case ',': t.kind = Tok::Comma; return t;
      default:
        fail(t.line, t.column, std::string("unexpected character '") + c + "'");
    }
    return t;  // unreachable
  }

  /// Captures raw text up to the brace matching an already-consumed '{'.
  /// Used for fix blocks, which are stored without interpretation.
  std::string capture_balanced(int open_line, int open_column) {
    std::string body;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = take();
      if (c == '{') ++depth;
      if (c == '}' && --depth == 0) return body;
      body += c;
    }
    fail(open_line, open_column, "unterminated fix block");
    return body;  // unreachable
  }

  [[noreturn]] void fail(int line, int column, const std::string& message) const {
    throw SyntaxError(source_, line, column, message);
  }

private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        return;
      }
    }
  }

  Token lex_string(Token& t) {
    t.kind = Tok::String;
    take();  // opening quote
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '"') {
        take();
        return t;
      }
      if (c == '\n') break;
      if (c == '\\') {
        take();
        if (pos_ >= text_.size()) break;
        char esc = take();
        if (esc != '"' && esc != '\\') {
          fail(line_, column_ - 2, std::string("unsupported escape '\\") + esc + "'");
        }
        t.text += esc;
        continue;
      }
      t.text += take();
    }
    fail(t.line, t.column, "unterminated string literal");
    return t;  // unreachable
  }

  std::string_view text_;
  std::string source_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
public:
  Parser(std::string_view text, std::string source_name)
      : lexer_(text, std::move(source_name)) {
    advance();
  }

  RuleFile parse_file() {
    RuleFile file;
    file.source_name = lexer_.source();
    if (cur_.kind == Tok::End) {
      lexer_.fail(cur_.line, cur_.column, "rule file declares no contexts");
    }
    while (cur_.kind != Tok::End) {
      file.contexts.push_back(parse_context());
    }
    return file;
  }

  ExprPtr parse_single_expression() {
    ExprPtr e = parse_expr();
    expect(Tok::End, "end of input");
    return e;
  }

private:
  void advance() { cur_ = lexer_.next(); }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      lexer_.fail(cur_.line, cur_.column,
                  std::string("expected ") + what + ", found " + describe(cur_));
    }
    Token t = cur_;
    advance();
    return t;
  }

  ContextDecl parse_context() {
    Token kw = expect(Tok::KwContext, "'context'");
    ContextDecl ctx;
    ctx.line = kw.line;
    Token name = expect(Tok::Ident, "context name");
    if (name.text.rfind("t_", 0) != 0 || name.text.size() == 2) {
      lexer_.fail(name.line, name.column,
                  "context name must start with t_ followed by a tag name");
    }
    ctx.tag = name.text.substr(2);
    std::transform(ctx.tag.begin(), ctx.tag.end(), ctx.tag.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    expect(Tok::LBrace, "'{'");
    while (cur_.kind != Tok::RBrace) {
      ctx.constraints.push_back(parse_constraint(ctx.constraints));
    }
    if (ctx.constraints.empty()) {
      lexer_.fail(cur_.line, cur_.column, "context declares no constraints");
    }
    expect(Tok::RBrace, "'}'");
    return ctx;
  }

  ConstraintDecl parse_constraint(const std::vector<ConstraintDecl>& siblings) {
    Token kw = expect(Tok::KwConstraint, "'constraint'");
    ConstraintDecl decl;
    decl.line = kw.line;
    Token name = expect(Tok::Ident, "constraint name");
    for (const ConstraintDecl& prev : siblings) {
      if (prev.name == name.text) {
        lexer_.fail(name.line, name.column,
                    "duplicate constraint name '" + name.text + "'");
      }
    }
    decl.name = name.text;
    expect(Tok::LBrace, "'{'");
    if (cur_.kind == Tok::KwGuard) {
      advance();
      expect(Tok::Colon, "':'");
      decl.guard = parse_expr();
    }
    expect(Tok::KwCheck, "'check'");
    expect(Tok::Colon, "':'");
    decl.check = parse_expr();
    expect(Tok::KwMessage, "'message'");
    expect(Tok::Colon, "':'");
    decl.message = parse_expr();
    if (cur_.kind == Tok::KwFix) {
      Token fix = cur_;
      advance();
      if (cur_.kind != Tok::LBrace) {
        lexer_.fail(cur_.line, cur_.column,
                    "expected '{', found " + describe(cur_));
      }
      // The body is raw text; taking it straight from the lexer keeps the
      // one-token lookahead from swallowing part of it.
      decl.fix_body = lexer_.capture_balanced(fix.line, fix.column);
      decl.has_fix = true;
      advance();
    }
    expect(Tok::RBrace, "'}'");
    return decl;
  }

  ExprPtr make_node(Expr::Kind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr left = parse_and();
    while (cur_.kind == Tok::KwOr) {
      Token op = cur_;
      advance();
      ExprPtr node = make_node(Expr::Kind::Or, op);
      node->lhs = std::move(left);
      node->rhs = parse_and();
      left = std::move(node);
    }
    return left;
  }

  ExprPtr parse_and() {
    ExprPtr left = parse_unary();
    while (cur_.kind == Tok::KwAnd) {
      Token op = cur_;
      advance();
      ExprPtr node = make_node(Expr::Kind::And, op);
      node->lhs = std::move(left);
      node->rhs = parse_unary();
      left = std::move(node);
    }
    return left;
  }

  ExprPtr parse_unary() {
    if (cur_.kind == Tok::KwNot) {
      Token op = cur_;
      advance();
      ExprPtr node = make_node(Expr::Kind::Not, op);
      node->lhs = parse_unary();
      return node;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (cur_.kind == Tok::Dot) {
      advance();
      Token name = expect(Tok::Ident, "property or method name");
      if (cur_.kind == Tok::LParen) {
        advance();
        ExprPtr call = make_node(Expr::Kind::Call, name);
        call->text = name.text;
        call->lhs = std::move(e);
        if (cur_.kind != Tok::RParen) {
          call->args.push_back(parse_expr());
          while (cur_.kind == Tok::Comma) {
            advance();
            call->args.push_back(parse_expr());
          }
        }
        expect(Tok::RParen, "')'");
        e = std::move(call);
      } else {
        ExprPtr prop = make_node(Expr::Kind::Property, name);
        prop->text = name.text;
        prop->lhs = std::move(e);
        e = std::move(prop);
      }
    }
    return e;
  }

  ExprPtr parse_primary() {
    switch (cur_.kind) {
      case Tok::KwSelf: {
        ExprPtr e = make_node(Expr::Kind::Self, cur_);
        advance();
        return e;
      }
      case Tok::KwTrue:
      case Tok::KwFalse: {
        ExprPtr e = make_node(Expr::Kind::BoolLit, cur_);
        e->bool_value = cur_.kind == Tok::KwTrue;
        advance();
        return e;
      }
      case Tok::String: {
        ExprPtr e = make_node(Expr::Kind::StringLit, cur_);
        e->text = cur_.text;
        advance();
        return e;
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        lexer_.fail(cur_.line, cur_.column,
                    "expected expression, found " + describe(cur_));
    }
    return nullptr;  // unreachable
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

RuleFile parse_rules(std::string_view text, std::string source_name) {
  Parser parser(text, std::move(source_name));
  return parser.parse_file();
}

ExprPtr parse_expression(std::string_view text, std::string source_name) {
  Parser parser(text, std::move(source_name));
  return parser.parse_single_expression();
}

}  // namespace webcheck
