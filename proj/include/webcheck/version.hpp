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

#ifndef WEBCHECK_VERSION_HPP
#define WEBCHECK_VERSION_HPP

#include <string>
#include <string_view>

namespace webcheck {

// Keep in sync with the version in CMakeLists.txt and pyproject.toml.
inline constexpr std::string_view kVersion = "0.1.0";

inline std::string default_user_agent() {
  return "webcheck/" + std::string(kVersion);
}

}  // namespace webcheck

#endif  // WEBCHECK_VERSION_HPP
