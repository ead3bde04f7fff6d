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

#ifndef WEBCHECK_ENGINE_HPP
#define WEBCHECK_ENGINE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "webcheck/dom.hpp"
#include "webcheck/evl_ast.hpp"
#include "webcheck/sources.hpp"

namespace webcheck {

/// The "no value" result of navigating past an edge of the tree (parent of
/// the root, missing attribute, missing sibling). Absorbing: value-returning
/// members of Undefined yield Undefined, boolean-returning members yield
/// false, and boolean contexts coerce it to false.
struct Undefined {
  bool operator==(const Undefined&) const = default;
};

/// Runtime value of a rule expression.
using Value =
    std::variant<Undefined, bool, std::string, std::vector<std::string>, const Element*>;

/// Human-readable type name for diagnostics: "undefined", "boolean",
/// "string", "string list", "element".
std::string value_type_name(const Value& v);

/// Evaluates an expression with `self` bound to the given element.
/// Throws EvaluationError for unknown members, arity mismatches, and type
/// errors on defined receivers.
Value eval_expr(const Expr& e, const Element& self_el);

/// One unsatisfied constraint on one element. Line and column locate the
/// element's start tag in the source (0 when unknown).
struct Violation {
  std::string constraint_name;
  std::string context_tag;
  std::string message;
  std::string element_path;
  int line = 0;
  int column = 0;
};

/// One evaluation failure (bad member name, wrong arity, type error). Kept
/// apart from violations: a broken rule is not a page defect.
struct EvaluationIssue {
  std::string constraint_name;
  std::string context_tag;
  std::string message;
  std::string element_path;
  int line = 0;
  int column = 0;
};

/// Outcome of evaluating a rule file against one document.
/// Violations are ordered by document order of the element, then by rule
/// file order within one element. Issues keep evaluation (context-major)
/// order. elements_checked counts per-context selections (an element
/// selected by two contexts counts twice); constraints_evaluated counts
/// (element, constraint) visits including guard-skipped ones.
struct Report {
  std::string source_name;
  std::vector<Violation> violations;
  std::vector<EvaluationIssue> errors;
  int elements_checked = 0;
  int constraints_evaluated = 0;
};

/// Runs every context of the rule file over the document. Evaluation errors
/// are recorded in the report's error channel; they never abort the run.
Report evaluate(const RuleFile& rules, const Document& doc);

/// Four-step facade: set a source, set the validation rules, check, then
/// read the violation messages. One instance per thread of use.
class Checker {
public:
  /// The HTML to validate.
  void set_source(SourceSpec spec);
  /// Convenience: a file path ("-" for stdin).
  void set_source(const std::string& path);

  /// Rules from a .evl file.
  void set_validation(const std::string& rules_path);
  /// Rules from text already in memory.
  void set_validation_text(std::string rules_text, std::string name = "<rules>");

  void set_fetch_policy(FetchPolicy policy);

  /// Resolves the source, parses the rules, evaluates, and stores the
  /// report. Throws SourceError / SyntaxError / MissingSourceError /
  /// MissingValidationError.
  const Report& check();

  /// Violation messages of the last check, in report order. Throws if
  /// check() has not produced a report yet.
  std::vector<std::string> errors() const;

  /// Last report, if any.
  const std::optional<Report>& last_report() const { return last_report_; }

private:
  std::optional<SourceSpec> source_;
  bool validation_is_path_ = false;
  std::optional<std::string> validation_;  // path or text
  std::string validation_name_;
  FetchPolicy policy_;
  std::optional<Report> last_report_;
};

}  // namespace webcheck

#endif  // WEBCHECK_ENGINE_HPP
