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

#ifndef WEBCHECK_HTML_PARSER_HPP
#define WEBCHECK_HTML_PARSER_HPP

#include <string>
#include <string_view>

#include "webcheck/dom.hpp"

namespace webcheck {

/// Parse HTML text into a document tree. Parsing is lenient and never
/// fails: unclosed tags are auto-closed, stray end tags are dropped,
/// unknown tags are kept as ordinary elements, void elements never
/// receive children.
///
/// With fragment=false the root is the markup's html element, or a
/// synthesized empty one when the markup has none. With fragment=true the
/// text is parsed as body content under a synthetic wrapper that parent
/// navigation never exposes.
Document parse_document(std::string_view html_text,
                        std::string source_name = "<inline>",
                        bool fragment = false);

}  // namespace webcheck

#endif
