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

#ifndef WEBCHECK_EVL_AST_HPP
#define WEBCHECK_EVL_AST_HPP

#include <memory>
#include <string>
#include <vector>

namespace webcheck {

/// Expression node of the rule language. Immutable after parsing.
struct Expr {
  enum class Kind {
    Self,       // the element under evaluation
    StringLit,  // text
    BoolLit,    // bool_value
    Not,        // lhs
    And,        // lhs, rhs
    Or,         // lhs, rhs
    Property,   // lhs.text          (no argument list)
    Call,       // lhs.text(args...)
  };

  Kind kind = Kind::Self;
  std::string text;         // literal value or member name
  bool bool_value = false;  // BoolLit only
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
  std::vector<std::unique_ptr<Expr>> args;
  int line = 0;
  int column = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

/// One constraint declaration. `guard` may be null (always-true). A fix
/// block, when present, is kept as raw text and never executed.
struct ConstraintDecl {
  std::string name;
  ExprPtr guard;
  ExprPtr check;
  ExprPtr message;
  bool has_fix = false;
  std::string fix_body;
  int line = 0;
};

/// All constraints declared for one tag context.
struct ContextDecl {
  std::string tag;  // lowercased, without the "t_" prefix
  std::vector<ConstraintDecl> constraints;
  int line = 0;
};

/// A parsed rule file.
struct RuleFile {
  std::string source_name;
  std::vector<ContextDecl> contexts;
};

/// Structural equality; source positions are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

/// Canonical rendering with minimal parentheses. Parsing the result yields a
/// structurally equal tree.
std::string expr_to_string(const Expr& e);

}  // namespace webcheck

#endif  // WEBCHECK_EVL_AST_HPP
