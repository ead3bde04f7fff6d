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

#ifndef WEBCHECK_REPORT_RENDER_HPP
#define WEBCHECK_REPORT_RENDER_HPP

#include <string>

#include "webcheck/engine.hpp"

namespace webcheck {

enum class ReportFormat { Text, Json };

/// Renders a report deterministically.
///
/// Text: one line per violation,
///   <source>:<line>:<col> [<constraint>] <message> (at <path>)
/// then a summary line "N violation(s), M element(s) checked".
///
/// Json: one newline-terminated object,
///   {"source", "violations": [{"constraint", "context", "path", "line",
///    "column", "message"}...], "elements_checked", "constraints_evaluated",
///    "errors": [same shape...]}
/// with exactly that key order.
std::string render_report(const Report& report, ReportFormat format);

/// Evaluation issues as text diagnostics (one line each); empty string when
/// the report has none. Meant for the error stream.
std::string render_issues_text(const Report& report);

}  // namespace webcheck

#endif  // WEBCHECK_REPORT_RENDER_HPP
