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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "webcheck/engine.hpp"
#include "webcheck/errors.hpp"
#include "webcheck/evl_parser.hpp"
#include "webcheck/html_parser.hpp"
#include "webcheck/report_render.hpp"
#include "webcheck/rulepacks.hpp"
#include "webcheck/sources.hpp"
#include "webcheck/version.hpp"

namespace {

// Exit codes; see README. 0 is implicit success.
constexpr int kExitViolations = 1;
constexpr int kExitUsageOrSyntax = 2;
constexpr int kExitSourceError = 3;
constexpr int kExitEvalErrors = 4;
constexpr int kExitInternal = 70;

bool looks_like_url(const std::string& value) {
  return value.rfind("http://", 0) == 0 || value.rfind("https://", 0) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"webcheck validates HTML documents against declarative rule files"};
  app.name("webcheck");

  std::string source;
  std::string inline_html;
  std::string rules_path;
  std::string pack_name;
  std::string format = "text";
  bool fragment = false;
  bool quiet = false;
  bool no_fail_on_error = false;

  CLI::Option* source_opt =
      app.add_option("--source", source, "HTML file path, http(s) URL, or '-' for stdin");
  CLI::Option* inline_opt = app.add_option("--inline", inline_html, "Inline HTML text");
  source_opt->excludes(inline_opt);
  inline_opt->excludes(source_opt);

  CLI::Option* rules_opt = app.add_option("--rules", rules_path, "Rule file (.evl)");
  CLI::Option* pack_opt =
      app.add_option("--rulepack", pack_name, "Embedded rule pack name (e.g. bootstrap)");
  rules_opt->excludes(pack_opt);
  pack_opt->excludes(rules_opt);

  app.add_flag("--fragment", fragment, "Treat the source as an HTML fragment");
  app.add_option("--format", format, "Report format (default: text)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", quiet, "Suppress the report; the exit code carries the verdict");
  app.add_flag("--no-fail-on-error", no_fail_on_error,
               "Do not map rule evaluation errors to exit code 4");
  app.set_version_flag("--version", "webcheck " + std::string(webcheck::kVersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageOrSyntax;
  }

  if (source_opt->count() + inline_opt->count() != 1) {
    std::cerr << "webcheck: exactly one of --source or --inline is required\n";
    return kExitUsageOrSyntax;
  }
  if (rules_opt->count() + pack_opt->count() != 1) {
    std::cerr << "webcheck: exactly one of --rules or --rulepack is required\n";
    return kExitUsageOrSyntax;
  }

  try {
    std::string rules_text;
    std::string rules_name;
    if (rules_opt->count() == 1) {
      try {
        rules_text = webcheck::read_text_file(rules_path);
      } catch (const webcheck::SourceError& e) {
        std::cerr << "webcheck: cannot read rules: " << e.what() << "\n";
        return kExitSourceError;
      }
      rules_name = rules_path;
    } else {
      try {
        const webcheck::RulePack& pack = webcheck::get_rulepack(pack_name);
        rules_text = pack.rules_text;
        rules_name = "<pack:" + pack.name + ">";
      } catch (const webcheck::UnknownPackError& e) {
        std::cerr << "webcheck: " << e.what() << "\n";
        return kExitUsageOrSyntax;
      }
    }

    webcheck::RuleFile rules;
    try {
      rules = webcheck::parse_rules(rules_text, rules_name);
    } catch (const webcheck::SyntaxError& e) {
      std::cerr << "webcheck: " << e.what() << "\n";
      return kExitUsageOrSyntax;
    }

    webcheck::SourceSpec spec =
        inline_opt->count() == 1 ? webcheck::SourceSpec::inline_text(inline_html, fragment)
        : looks_like_url(source) ? webcheck::SourceSpec::url(source, fragment)
                                 : webcheck::SourceSpec::file(source, fragment);

    webcheck::ResolvedSource resolved;
    try {
      resolved = webcheck::resolve_source(spec);
    } catch (const webcheck::SourceError& e) {
      std::cerr << "webcheck: " << e.what() << "\n";
      return kExitSourceError;
    }

    webcheck::Document doc =
        webcheck::parse_document(resolved.html_text, resolved.source_name, fragment);
    webcheck::Report report = webcheck::evaluate(rules, doc);

    webcheck::ReportFormat fmt = format == "json" ? webcheck::ReportFormat::Json
                                                  : webcheck::ReportFormat::Text;
    if (!quiet) {
      std::cout << webcheck::render_report(report, fmt);
    }
    if (fmt == webcheck::ReportFormat::Text) {
      std::cerr << webcheck::render_issues_text(report);
    }

    if (!report.errors.empty() && !no_fail_on_error) return kExitEvalErrors;
    if (!report.violations.empty()) return kExitViolations;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "webcheck: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
