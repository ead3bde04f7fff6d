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

#include <string>
#include <vector>

#include "doctest.h"
#include "webcheck/engine.hpp"
#include "webcheck/errors.hpp"
#include "webcheck/evl_parser.hpp"
#include "webcheck/html_parser.hpp"

using namespace webcheck;

namespace {

Value ev(const std::string& expr, const Element& el) {
  return eval_expr(*parse_expression(expr), el);
}

bool ev_bool(const std::string& expr, const Element& el) {
  return std::get<bool>(ev(expr, el));
}

std::string ev_error(const std::string& expr, const Element& el) {
  try {
    ev(expr, el);
  } catch (const EvaluationError& e) {
    return e.what();
  }
  return "";
}

Report run(const std::string& rules, const std::string& html, bool fragment = false) {
  Document doc = parse_document(html, "<test>", fragment);
  return evaluate(parse_rules(rules, "<rules>"), doc);
}

}  // namespace

TEST_CASE("value type names cover every alternative") {
  CHECK(value_type_name(Value{Undefined{}}) == "undefined");
  CHECK(value_type_name(Value{true}) == "boolean");
  CHECK(value_type_name(Value{std::string("x")}) == "string");
  CHECK(value_type_name(Value{std::vector<std::string>{}}) == "string list");
  CHECK(value_type_name(Value{static_cast<const Element*>(nullptr)}) == "element");
}

TEST_CASE("atoms evaluate to themselves") {
  Document doc = parse_document("<div></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(std::get<const Element*>(ev("self", *div)) == div);
  CHECK(std::get<std::string>(ev("\"row\"", *div)) == "row");
  CHECK(std::get<bool>(ev("true", *div)) == true);
  CHECK(std::get<bool>(ev("false", *div)) == false);
}

TEST_CASE("class yields the token list in order") {
  Document doc = parse_document("<div class=\"  col-md-4  row col-md-4 \"></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  auto tokens = std::get<std::vector<std::string>>(ev("self.class", *div));
  CHECK(tokens == std::vector<std::string>{"col-md-4", "row", "col-md-4"});
}

TEST_CASE("parent navigates up and is undefined at the root") {
  Document doc = parse_document("<div><span></span></div>");
  const Element* span = doc.elements_by_tag("span")[0];
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(std::get<const Element*>(ev("self.parent", *span)) == div);
  CHECK(std::holds_alternative<Undefined>(ev("self.parent", doc.root())));
}

TEST_CASE("sibling navigation skips text and is undefined at the ends") {
  Document doc = parse_document("<div><a></a>middle<b></b></div>");
  const Element* a = doc.elements_by_tag("a")[0];
  const Element* b = doc.elements_by_tag("b")[0];
  CHECK(std::get<const Element*>(ev("self.nextSibling", *a)) == b);
  CHECK(std::get<const Element*>(ev("self.previousSibling", *b)) == a);
  CHECK(std::holds_alternative<Undefined>(ev("self.previousSibling", *a)));
  CHECK(std::holds_alternative<Undefined>(ev("self.nextSibling", *b)));
}

TEST_CASE("hasClass matches whole tokens, wildcards included") {
  Document doc = parse_document("<div class=\"col-md-4 row\"></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(ev_bool("self.hasClass(\"row\")", *div));
  CHECK(ev_bool("self.hasClass(\"col-*\")", *div));
  CHECK_FALSE(ev_bool("self.hasClass(\"col\")", *div));
  CHECK_FALSE(ev_bool("self.hasClass(\"ROW\")", *div));
}

TEST_CASE("is compares the tag case-insensitively") {
  Document doc = parse_document("<div></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(ev_bool("self.is(\"div\")", *div));
  CHECK(ev_bool("self.is(\"DIV\")", *div));
  CHECK_FALSE(ev_bool("self.is(\"span\")", *div));
}

TEST_CASE("attribute distinguishes absent from empty") {
  Document doc = parse_document("<div data-a=\"x\" data-b=\"\" data-c></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(std::get<std::string>(ev("self.attribute(\"data-a\")", *div)) == "x");
  CHECK(std::get<std::string>(ev("self.attribute(\"data-b\")", *div)).empty());
  CHECK(std::get<std::string>(ev("self.attribute(\"data-c\")", *div)).empty());
  CHECK(std::holds_alternative<Undefined>(ev("self.attribute(\"data-d\")", *div)));
  CHECK(ev_bool("self.hasAttribute(\"data-b\")", *div));
  CHECK_FALSE(ev_bool("self.hasAttribute(\"data-d\")", *div));
}

TEST_CASE("isDefined reports presence through navigation") {
  Document doc = parse_document("<div data-x=\"1\"><span></span></div>");
  const Element* span = doc.elements_by_tag("span")[0];
  CHECK(ev_bool("self.isDefined()", *span));
  CHECK(ev_bool("self.parent.isDefined()", *span));
  CHECK(ev_bool("self.parent.attribute(\"data-x\").isDefined()", *span));
  CHECK_FALSE(ev_bool("self.parent.parent.parent.isDefined()", *span));
  CHECK_FALSE(ev_bool("self.attribute(\"nope\").isDefined()", *span));
}

TEST_CASE("includes works on class lists with wildcards") {
  Document doc = parse_document("<div class=\"badge badge-pill\"></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(ev_bool("self.class.includes(\"badge\")", *div));
  CHECK(ev_bool("self.class.includes(\"badge-*\")", *div));
  CHECK_FALSE(ev_bool("self.class.includes(\"pill\")", *div));
}

TEST_CASE("equals compares strings case-sensitively") {
  Document doc = parse_document("<div data-toggle=\"buttons\"></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(ev_bool("self.attribute(\"data-toggle\").equals(\"buttons\")", *div));
  CHECK_FALSE(ev_bool("self.attribute(\"data-toggle\").equals(\"Buttons\")", *div));
  CHECK(ev_bool("\"a\".equals(\"a\")", *div));
}

TEST_CASE("value members absorb an undefined receiver") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(std::holds_alternative<Undefined>(ev("self.parent.class", root)));
  CHECK(std::holds_alternative<Undefined>(ev("self.parent.parent", root)));
  CHECK(std::holds_alternative<Undefined>(ev("self.parent.attribute(\"x\")", root)));
  CHECK(std::holds_alternative<Undefined>(ev("self.parent.nextSibling.previousSibling", root)));
}

TEST_CASE("boolean members of an undefined receiver are false") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK_FALSE(ev_bool("self.parent.hasClass(\"row\")", root));
  CHECK_FALSE(ev_bool("self.parent.is(\"div\")", root));
  CHECK_FALSE(ev_bool("self.parent.hasAttribute(\"x\")", root));
  CHECK_FALSE(ev_bool("self.parent.class.includes(\"row\")", root));
  CHECK_FALSE(ev_bool("self.attribute(\"nope\").equals(\"x\")", root));
}

TEST_CASE("unknown members are errors even behind an undefined receiver") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(ev_error("self.parent.bogus", root).find("unknown property or method 'bogus'") !=
        std::string::npos);
  CHECK(ev_error("self.bogusMethod(\"x\")", root)
            .find("unknown property or method 'bogusMethod'") != std::string::npos);
}

TEST_CASE("property versus method form is enforced") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(ev_error("self.class()", root).find("'class' is a property") != std::string::npos);
  CHECK(ev_error("self.hasClass", root).find("'hasClass' is a method") != std::string::npos);
}

TEST_CASE("arity is enforced") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(ev_error("self.hasClass()", root).find("'hasClass' expects 1 argument(s), got 0") !=
        std::string::npos);
  CHECK(ev_error("self.isDefined(\"x\")", root)
            .find("'isDefined' expects 0 argument(s), got 1") != std::string::npos);
}

TEST_CASE("arguments must be strings on a defined receiver") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(ev_error("self.hasClass(self)", root)
            .find("argument 1 of 'hasClass' must be a string, got element") !=
        std::string::npos);
  CHECK(ev_error("self.is(true)", root)
            .find("argument 1 of 'is' must be a string, got boolean") != std::string::npos);
}

TEST_CASE("an undefined receiver absorbs before argument types are checked") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK_FALSE(ev_bool("self.parent.hasClass(self)", root));
}

TEST_CASE("argument expressions are evaluated even when the receiver is undefined") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(ev_error("self.parent.hasClass(self.bogus)", root)
            .find("unknown property or method 'bogus'") != std::string::npos);
}

TEST_CASE("members are dispatched by receiver type") {
  Document doc = parse_document("<div class=\"a\"></div>");
  const Element* div = doc.elements_by_tag("div")[0];
  CHECK(ev_error("self.includes(\"a\")", *div)
            .find("'includes' is not defined on an element value") != std::string::npos);
  CHECK(ev_error("self.class.hasClass(\"a\")", *div)
            .find("'hasClass' is not defined on a string list value") != std::string::npos);
  CHECK(ev_error("self.class.isDefined()", *div)
            .find("'isDefined' is not defined on a string list value") != std::string::npos);
  CHECK(ev_error("\"x\".parent", *div).find("'parent' is not defined on a string value") !=
        std::string::npos);
  CHECK(ev_error("true.isDefined()", *div)
            .find("'isDefined' is not defined on a boolean value") != std::string::npos);
}

TEST_CASE("not negates booleans and treats undefined as false") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK_FALSE(ev_bool("not true", root));
  CHECK(ev_bool("not false", root));
  CHECK(ev_bool("not self.parent", root));
  CHECK(ev_error("not \"x\"", root).find("operand of 'not' must be boolean, got string") !=
        std::string::npos);
}

TEST_CASE("and/or short-circuit") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK_FALSE(ev_bool("false and self.bogus", root));
  CHECK(ev_bool("true or self.bogus", root));
  CHECK(ev_error("true and self.bogus", root).find("unknown property or method") !=
        std::string::npos);
}

TEST_CASE("connectives coerce undefined operands to false") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK_FALSE(ev_bool("self.parent and true", root));
  CHECK(ev_bool("self.parent or true", root));
  CHECK_FALSE(ev_bool("true and self.parent", root));
}

TEST_CASE("connectives reject non-boolean operands") {
  Document doc = parse_document("<div></div>");
  const Element& root = doc.root();
  CHECK(ev_error("\"x\" and true", root)
            .find("operand of 'and' must be boolean, got string") != std::string::npos);
  CHECK(ev_error("false or self.class", root)
            .find("operand of 'or' must be boolean, got string list") != std::string::npos);
}

TEST_CASE("a failing check produces a violation with the message") {
  Report r = run(
      "context t_div { constraint NeedsRow {"
      " check : self.parent.hasClass(\"row\")"
      " message : \"put it in a row\" } }",
      "<div class=\"x\"></div>");
  REQUIRE(r.violations.size() == 1);
  const Violation& v = r.violations[0];
  CHECK(v.constraint_name == "NeedsRow");
  CHECK(v.context_tag == "div");
  CHECK(v.message == "put it in a row");
  CHECK(v.element_path == "html/div");
  CHECK(v.line == 1);
  CHECK(v.column == 1);
  CHECK(r.errors.empty());
  CHECK(r.elements_checked == 1);
  CHECK(r.constraints_evaluated == 1);
}

TEST_CASE("a satisfied check produces nothing") {
  Report r = run(
      "context t_div { constraint C { check : self.is(\"div\") message : \"m\" } }",
      "<div></div>");
  CHECK(r.violations.empty());
  CHECK(r.errors.empty());
}

TEST_CASE("a false guard skips the check entirely") {
  // The check would throw; an empty error channel proves it never ran.
  Report r = run(
      "context t_div { constraint C {"
      " guard : self.is(\"span\")"
      " check : self.bogus"
      " message : \"m\" } }",
      "<div></div>");
  CHECK(r.violations.empty());
  CHECK(r.errors.empty());
  CHECK(r.constraints_evaluated == 1);
}

TEST_CASE("an undefined guard counts as false") {
  // t_html selects only the root, whose parent is undefined; the guard
  // expression itself evaluates to undefined, which must mean "skip".
  Report r = run(
      "context t_html { constraint C {"
      " guard : self.parent"
      " check : self.bogus"
      " message : \"m\" } }",
      "<div></div>");
  CHECK(r.violations.empty());
  CHECK(r.errors.empty());
}

TEST_CASE("a guard error is reported and skips the element") {
  Report r = run(
      "context t_div { constraint C {"
      " guard : self.class.equals(\"x\")"
      " check : false"
      " message : \"m\" } }",
      "<div></div>");
  CHECK(r.violations.empty());
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].constraint_name == "C");
  CHECK(r.errors[0].context_tag == "div");
  CHECK(r.errors[0].element_path == "html/div");
  CHECK(r.errors[0].message.find("'equals' is not defined on a string list value") !=
        std::string::npos);
}

TEST_CASE("a check error is reported and produces no violation") {
  Report r = run(
      "context t_div { constraint C { check : self.nope message : \"m\" } }",
      "<div></div>");
  CHECK(r.violations.empty());
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].message.find("unknown property or method 'nope'") != std::string::npos);
}

TEST_CASE("a non-boolean check is a reported error") {
  Report r = run(
      "context t_div { constraint C { check : self.class message : \"m\" } }",
      "<div></div>");
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].message.find("check must evaluate to a boolean, got string list") !=
        std::string::npos);
}

TEST_CASE("a failing message still yields a violation with fallback text") {
  Report r = run(
      "context t_div { constraint Named { check : false message : self.class } }",
      "<div></div>");
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].message ==
        "constraint Named unsatisfied (message expression failed)");
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].message.find("message must evaluate to a string, got string list") !=
        std::string::npos);
}

TEST_CASE("violations are ordered by document position across contexts") {
  Report r = run(
      "context t_span { constraint S { check : false message : \"s\" } }"
      "context t_div { constraint D { check : false message : \"d\" } }",
      "<div class=\"a\"></div><span class=\"b\"></span><div class=\"c\"></div>");
  REQUIRE(r.violations.size() == 3);
  CHECK(r.violations[0].constraint_name == "D");
  CHECK(r.violations[0].element_path == "html/div[0]");
  CHECK(r.violations[1].constraint_name == "S");
  CHECK(r.violations[1].element_path == "html/span");
  CHECK(r.violations[2].constraint_name == "D");
  CHECK(r.violations[2].element_path == "html/div[1]");
}

TEST_CASE("within one element, violations keep rule file order") {
  Report r = run(
      "context t_div {"
      " constraint First { check : false message : \"1\" }"
      " constraint Second { check : false message : \"2\" } }",
      "<div></div>");
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].constraint_name == "First");
  CHECK(r.violations[1].constraint_name == "Second");
}

TEST_CASE("the error channel keeps evaluation order, not document order") {
  Report r = run(
      "context t_span { constraint S { check : self.nope message : \"s\" } }"
      "context t_div { constraint D { check : self.nope message : \"d\" } }",
      "<div></div><span></span>");
  REQUIRE(r.errors.size() == 2);
  CHECK(r.errors[0].constraint_name == "S");
  CHECK(r.errors[1].constraint_name == "D");
}

TEST_CASE("counters track selections and visits, guard-skipped included") {
  Report r = run(
      "context t_div {"
      " constraint A { guard : false check : true message : \"m\" }"
      " constraint B { check : true message : \"m\" } }"
      "context t_span { constraint C { check : true message : \"m\" } }",
      "<div></div><div></div><span></span>");
  CHECK(r.elements_checked == 3);      // two divs + one span
  CHECK(r.constraints_evaluated == 5); // 2 divs x 2 constraints + 1 span x 1
  CHECK(r.violations.empty());
}

TEST_CASE("a context with no matching elements contributes nothing") {
  Report r = run(
      "context t_table { constraint C { check : false message : \"m\" } }",
      "<div></div>");
  CHECK(r.violations.empty());
  CHECK(r.elements_checked == 0);
  CHECK(r.constraints_evaluated == 0);
}

TEST_CASE("fragment documents evaluate with top-level parents undefined") {
  Report r = run(
      "context t_div { constraint C {"
      " check : self.parent.isDefined()"
      " message : \"top level\" } }",
      "<div class=\"col\"></div>", /*fragment=*/true);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].element_path == "div");
}

TEST_CASE("evaluation is deterministic") {
  const char* rules =
      "context t_div { constraint C { check : self.parent.hasClass(\"row\") message : \"m\" } }";
  const char* html =
      "<div class=\"row\"><div>a</div><div>b</div></div><div>c</div>";
  Report a = run(rules, html);
  Report b = run(rules, html);
  REQUIRE(a.violations.size() == b.violations.size());
  for (size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].element_path == b.violations[i].element_path);
    CHECK(a.violations[i].constraint_name == b.violations[i].constraint_name);
  }
}

TEST_CASE("repairing the offending element removes exactly its violation") {
  const char* rules =
      "context t_div { constraint NeedsRow {"
      " guard : self.class.includes(\"col-*\")"
      " check : self.parent.hasClass(\"row\")"
      " message : \"m\" } }";
  Report broken = run(rules,
                      "<div class=\"rowx\"><div class=\"col-md-4\"></div></div>"
                      "<div class=\"row\"><div class=\"col-md-8\"></div></div>");
  REQUIRE(broken.violations.size() == 1);
  CHECK(broken.violations[0].element_path == "html/div[0]/div");
  Report fixed = run(rules,
                     "<div class=\"row\"><div class=\"col-md-4\"></div></div>"
                     "<div class=\"row\"><div class=\"col-md-8\"></div></div>");
  CHECK(fixed.violations.empty());
}

TEST_CASE("checker runs the four-step flow") {
  Checker checker;
  checker.set_source(SourceSpec::inline_text("<div class=\"col-md-4\"></div>"));
  checker.set_validation_text(
      "context t_div { constraint NeedsRow {"
      " guard : self.class.includes(\"col-*\")"
      " check : self.parent.hasClass(\"row\")"
      " message : \"col needs a row parent\" } }");
  const Report& report = checker.check();
  CHECK(report.source_name == "<inline>");
  REQUIRE(report.violations.size() == 1);
  CHECK(checker.errors() == std::vector<std::string>{"col needs a row parent"});
  REQUIRE(checker.last_report().has_value());
}

TEST_CASE("checker demands a source and rules before use") {
  Checker c1;
  CHECK_THROWS_AS(c1.check(), MissingSourceError);
  CHECK_THROWS_AS(c1.errors(), MissingSourceError);
  c1.set_source(SourceSpec::inline_text("<div></div>"));
  CHECK_THROWS_AS(c1.check(), MissingValidationError);
  CHECK_THROWS_AS(c1.errors(), MissingValidationError);
  c1.set_validation_text("context t_div { constraint C { check : true message : \"m\" } }");
  CHECK_THROWS_WITH_AS(c1.errors(), "check() has not been run yet", Error);
  c1.check();
  CHECK(c1.errors().empty());
}

TEST_CASE("checker surfaces rule syntax errors and missing files") {
  Checker c;
  c.set_source(SourceSpec::inline_text("<div></div>"));
  c.set_validation_text("context t_div { }");
  CHECK_THROWS_AS(c.check(), SyntaxError);
  c.set_validation("/nonexistent/rules.evl");
  CHECK_THROWS_AS(c.check(), SourceError);
}

TEST_CASE("checker reports are reproducible across runs") {
  Checker c;
  c.set_source(SourceSpec::inline_text(
      "<div class=\"col-a\"></div><div class=\"col-b\"></div>"));
  c.set_validation_text(
      "context t_div { constraint C {"
      " guard : self.class.includes(\"col-*\")"
      " check : self.parent.hasClass(\"row\")"
      " message : \"m\" } }");
  Report first = c.check();
  Report second = c.check();
  REQUIRE(first.violations.size() == 2);
  REQUIRE(second.violations.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(first.violations[i].element_path == second.violations[i].element_path);
  }
}
