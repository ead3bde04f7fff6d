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

#include "webcheck/evl_ast.hpp"

namespace webcheck {

namespace {

// Binding strength used to decide where parentheses are required.
int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And: return 2;
    case Expr::Kind::Not: return 3;
    case Expr::Kind::Property:
    case Expr::Kind::Call: return 4;
    default: return 5;  // atoms never need parens
  }
}

void quote_string(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void render(const Expr& e, std::string& out);

// Wraps the child in parens when its binding is too weak for the slot.
void render_child(const Expr& child, int min_prec, std::string& out) {
  if (precedence(child.kind) < min_prec) {
    out += '(';
    render(child, out);
    out += ')';
  } else {
    render(child, out);
  }
}

void render(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Self:
      out += "self";
      return;
    case Expr::Kind::BoolLit:
      out += e.bool_value ? "true" : "false";
      return;
    case Expr::Kind::StringLit:
      quote_string(e.text, out);
      return;
    case Expr::Kind::Not:
      out += "not ";
      render_child(*e.lhs, precedence(Expr::Kind::Not), out);
      return;
    case Expr::Kind::And:
    case Expr::Kind::Or: {
      int prec = precedence(e.kind);
      render_child(*e.lhs, prec, out);  // left-associative chains stay flat
      out += e.kind == Expr::Kind::And ? " and " : " or ";
      render_child(*e.rhs, prec + 1, out);
      return;
    }
    case Expr::Kind::Property:
    case Expr::Kind::Call: {
      // The grammar only allows a primary before '.', so weaker receivers
      // must be parenthesized.
      render_child(*e.lhs, precedence(Expr::Kind::Call), out);
      out += '.';
      out += e.text;
      if (e.kind == Expr::Kind::Call) {
        out += '(';
        for (size_t i = 0; i < e.args.size(); ++i) {
          if (i > 0) out += ", ";
          render(*e.args[i], out);
        }
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Self:
      return true;
    case Expr::Kind::BoolLit:
      return a.bool_value == b.bool_value;
    case Expr::Kind::StringLit:
      return a.text == b.text;
    case Expr::Kind::Not:
      return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::And:
    case Expr::Kind::Or:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    case Expr::Kind::Property:
      return a.text == b.text && structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Call: {
      if (a.text != b.text || a.args.size() != b.args.size()) return false;
      if (!structurally_equal(*a.lhs, *b.lhs)) return false;
      for (size_t i = 0; i < a.args.size(); ++i) {
        if (!structurally_equal(*a.args[i], *b.args[i])) return false;
      }
      return true;
    }
  }
  return false;
}

std::string expr_to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

}  // namespace webcheck
