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

#ifndef WEBCHECK_EVL_PARSER_HPP
#define WEBCHECK_EVL_PARSER_HPP

#include <string_view>

#include "webcheck/evl_ast.hpp"

namespace webcheck {

/// Parses a rule file. Grammar sketch:
///
///   file       := context+
///   context    := "context" IDENT "{" constraint+ "}"     (IDENT starts "t_")
///   constraint := "constraint" IDENT "{"
///                     ["guard" ":" expr]
///                     "check" ":" expr
///                     "message" ":" expr
///                     ["fix" "{" balanced-text "}"]
///                 "}"
///   expr       := or-chain of and-chains of ("not"* postfix)
///   postfix    := primary ("." IDENT ["(" [expr ("," expr)*] ")"])*
///   primary    := "self" | STRING | "true" | "false" | "(" expr ")"
///
/// "//" starts a line comment. Strings are double-quoted; the only escapes
/// are \" and \\. Keywords are reserved and case-sensitive. Throws
/// SyntaxError on any malformed input.
RuleFile parse_rules(std::string_view text, std::string source_name = "<rules>");

/// Parses a single expression (diagnostics and tests).
ExprPtr parse_expression(std::string_view text, std::string source_name = "<expr>");

}  // namespace webcheck

#endif  // WEBCHECK_EVL_PARSER_HPP
