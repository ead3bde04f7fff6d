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

#ifndef WEBCHECK_RULEPACKS_HPP
#define WEBCHECK_RULEPACKS_HPP

#include <string>
#include <vector>

namespace webcheck {

/// A named, embedded collection of rules shipped with the tool.
struct RulePack {
  std::string name;
  std::string rules_text;              // plain .evl source
  std::vector<std::string> rule_names; // constraint names in declaration order
};

/// Looks up an embedded pack by name. Throws UnknownPackError.
const RulePack& get_rulepack(const std::string& name);

/// Names of all embedded packs.
std::vector<std::string> rulepack_names();

}  // namespace webcheck

#endif  // WEBCHECK_RULEPACKS_HPP
