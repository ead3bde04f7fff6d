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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "webcheck/dom.hpp"
#include "webcheck/engine.hpp"
#include "webcheck/errors.hpp"
#include "webcheck/evl_parser.hpp"
#include "webcheck/html_parser.hpp"
#include "webcheck/report_render.hpp"
#include "webcheck/rulepacks.hpp"
#include "webcheck/sources.hpp"
#include "webcheck/version.hpp"

namespace py = pybind11;
using namespace webcheck;

namespace {

Report check_html(const std::string& html, const std::string& rules_text, bool fragment,
                  const std::string& source_name, const std::string& rules_name) {
  RuleFile rules = parse_rules(rules_text, rules_name);
  Document doc = parse_document(sanitize_utf8(html), source_name, fragment);
  return evaluate(rules, doc);
}

Report check_path(const std::string& source, const std::string& rules_path, bool fragment) {
  Checker checker;
  SourceSpec spec = (source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0)
                        ? SourceSpec::url(source, fragment)
                        : SourceSpec::file(source, fragment);
  checker.set_source(spec);
  checker.set_validation(rules_path);
  return checker.check();
}

std::string render(const Report& report, const std::string& format) {
  if (format == "text") return render_report(report, ReportFormat::Text);
  if (format == "json") return render_report(report, ReportFormat::Json);
  throw py::value_error("format must be \"text\" or \"json\"");
}

}  // namespace

PYBIND11_MODULE(_webcheck, m) {
  m.doc() = "HTML constraint validator: declarative rules over parsed documents";
  m.attr("__version__") = std::string(kVersion);

  // Base first; later registrations take precedence in translation, so the
  // specific errors below win over the catch-all.
  auto& base_error = py::register_exception<Error>(m, "WebcheckError", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "RuleSyntaxError", base_error.ptr());
  py::register_exception<SourceError>(m, "SourceResolutionError", base_error.ptr());
  py::register_exception<EvaluationError>(m, "RuleEvaluationError", base_error.ptr());

  py::class_<Violation>(m, "Violation")
      .def_readonly("constraint", &Violation::constraint_name)
      .def_readonly("context", &Violation::context_tag)
      .def_readonly("message", &Violation::message)
      .def_readonly("path", &Violation::element_path)
      .def_readonly("line", &Violation::line)
      .def_readonly("column", &Violation::column)
      .def("__repr__", [](const Violation& v) {
        return "<Violation [" + v.constraint_name + "] at " + v.element_path + ">";
      });

  py::class_<EvaluationIssue>(m, "EvaluationIssue")
      .def_readonly("constraint", &EvaluationIssue::constraint_name)
      .def_readonly("context", &EvaluationIssue::context_tag)
      .def_readonly("message", &EvaluationIssue::message)
      .def_readonly("path", &EvaluationIssue::element_path)
      .def_readonly("line", &EvaluationIssue::line)
      .def_readonly("column", &EvaluationIssue::column);

  py::class_<Report>(m, "Report")
      .def_readonly("source", &Report::source_name)
      .def_readonly("violations", &Report::violations)
      .def_readonly("errors", &Report::errors)
      .def_readonly("elements_checked", &Report::elements_checked)
      .def_readonly("constraints_evaluated", &Report::constraints_evaluated)
      .def("__repr__", [](const Report& r) {
        return "<Report " + std::to_string(r.violations.size()) + " violation(s) on " +
               r.source_name + ">";
      });

  py::class_<Checker>(m, "Checker")
      .def(py::init<>())
      .def("set_source", py::overload_cast<const std::string&>(&Checker::set_source),
           py::arg("path"), "HTML file path ('-' reads standard input)")
      .def(
          "set_source_url",
          [](Checker& c, const std::string& url, bool fragment) {
            c.set_source(SourceSpec::url(url, fragment));
          },
          py::arg("url"), py::arg("fragment") = false)
      .def(
          "set_source_text",
          [](Checker& c, const std::string& html, bool fragment) {
            c.set_source(SourceSpec::inline_text(html, fragment));
          },
          py::arg("html"), py::arg("fragment") = false)
      .def("set_validation", &Checker::set_validation, py::arg("rules_path"),
           "Rules from a .evl file")
      .def("set_validation_text", &Checker::set_validation_text, py::arg("rules_text"),
           py::arg("name") = std::string("<rules>"), "Rules from text already in memory")
      .def("check", &Checker::check, py::return_value_policy::copy,
           "Resolve the source, evaluate the rules, and return the report")
      .def("errors", &Checker::errors,
           "Violation messages of the last check, in report order");

  m.def("check_html", &check_html, py::arg("html"), py::arg("rules"),
        py::arg("fragment") = false, py::arg("source_name") = std::string("<inline>"),
        py::arg("rules_name") = std::string("<rules>"),
        "Evaluate rule text against HTML text and return the report");
  m.def("check_path", &check_path, py::arg("source"), py::arg("rules_path"),
        py::arg("fragment") = false,
        "Evaluate a rule file against an HTML file path or http(s) URL");
  m.def("render_report", &render, py::arg("report"), py::arg("format") = std::string("text"),
        "Render a report as 'text' or 'json'");

  m.def("rulepack_names", &rulepack_names, "Names of the embedded rule packs");
  m.def(
      "rulepack_text",
      [](const std::string& name) { return get_rulepack(name).rules_text; },
      py::arg("name"), "Rule-file text of an embedded pack");
  m.def(
      "rulepack_rules",
      [](const std::string& name) { return get_rulepack(name).rule_names; },
      py::arg("name"), "Constraint names of an embedded pack, in file order");

  m.def("token_matches_pattern", &token_matches_pattern, py::arg("token"),
        py::arg("pattern"),
        "Anchored wildcard match: '*' spans any run of characters");
  m.def(
      "validate_rules",
      [](const std::string& text, const std::string& name) {
        parse_rules(text, name);  // raises RuleSyntaxError when malformed
      },
      py::arg("text"), py::arg("name") = std::string("<rules>"),
      "Parse rule text, raising RuleSyntaxError on malformed input");
}
