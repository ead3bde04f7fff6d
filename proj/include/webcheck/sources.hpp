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

#ifndef WEBCHECK_SOURCES_HPP
#define WEBCHECK_SOURCES_HPP

#include <cstddef>
#include <string>

#include "webcheck/dom.hpp"
#include "webcheck/version.hpp"

namespace webcheck {

/// Limits applied when fetching a URL source.
struct FetchPolicy {
  int timeout_ms = 10000;
  int max_redirects = 5;
  std::size_t max_body_bytes = 10 * 1024 * 1024;
  std::string user_agent = default_user_agent();
};

/// HTML text plus the name reports refer to it by.
struct ResolvedSource {
  std::string html_text;
  std::string source_name;
};

/// Turns a SourceSpec into HTML text:
///  - File: reads the path ("-" reads standard input, named "<stdin>").
///  - Url: HTTP(S) GET honoring the policy; any 2xx is accepted and the body
///    is decoded per the charset response header, falling back to UTF-8.
///  - Inline: passed through, named "<inline>".
/// All text is returned as UTF-8 with a leading BOM stripped and invalid
/// byte sequences replaced by U+FFFD. Throws SourceError on failure.
ResolvedSource resolve_source(const SourceSpec& spec, const FetchPolicy& policy = {});

/// Reads a whole file as text (no "-" handling). Throws SourceError.
std::string read_text_file(const std::string& path);

/// Strips a UTF-8 BOM and replaces invalid byte sequences with U+FFFD.
std::string sanitize_utf8(std::string text);

}  // namespace webcheck

#endif  // WEBCHECK_SOURCES_HPP
