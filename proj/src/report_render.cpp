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

#include "webcheck/report_render.hpp"

#include "json.hpp"

namespace webcheck {

namespace {

std::string text_line(const std::string& source, const std::string& constraint,
                      const std::string& message, const std::string& path, int line,
                      int column) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + " [" +
         constraint + "] " + message + " (at " + path + ")";
}

std::string render_text(const Report& report) {
  std::string out;
  for (const Violation& v : report.violations) {
    out += text_line(report.source_name, v.constraint_name, v.message, v.element_path,
                     v.line, v.column);
    out += '\n';
  }
  out += std::to_string(report.violations.size()) + " violation(s), " +
         std::to_string(report.elements_checked) + " element(s) checked\n";
  return out;
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["source"] = report.source_name;
  doc["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    doc["violations"].push_back({
        {"constraint", v.constraint_name},
        {"context", v.context_tag},
        {"path", v.element_path},
        {"line", v.line},
        {"column", v.column},
        {"message", v.message},
    });
  }
  doc["elements_checked"] = report.elements_checked;
  doc["constraints_evaluated"] = report.constraints_evaluated;
  doc["errors"] = nlohmann::ordered_json::array();
  for (const EvaluationIssue& e : report.errors) {
    doc["errors"].push_back({
        {"constraint", e.constraint_name},
        {"context", e.context_tag},
        {"path", e.element_path},
        {"line", e.line},
        {"column", e.column},
        {"message", e.message},
    });
  }
  return doc.dump() + "\n";
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Text ? render_text(report) : render_json(report);
}

std::string render_issues_text(const Report& report) {
  std::string out;
  for (const EvaluationIssue& e : report.errors) {
    out += text_line(report.source_name, e.constraint_name,
                     "evaluation error: " + e.message, e.element_path, e.line, e.column);
    out += '\n';
  }
  return out;
}

}  // namespace webcheck
