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

#include "webcheck/rulepacks.hpp"

#include "webcheck/errors.hpp"
#include "webcheck/evl_parser.hpp"

namespace webcheck {

namespace {

// Generated from rulepacks/bootstrap.evl; edit that file, not the .inc.
constexpr const char* kBootstrapRules =
#include "bootstrap_evl.inc"
    ;

RulePack build_pack(std::string name, const char* text) {
  RulePack pack;
  pack.name = std::move(name);
  pack.rules_text = text;
  // Deriving the names from a parse keeps them correct by construction.
  RuleFile parsed = parse_rules(pack.rules_text, "<pack:" + pack.name + ">");
  for (const ContextDecl& ctx : parsed.contexts) {
    for (const ConstraintDecl& c : ctx.constraints) {
      pack.rule_names.push_back(c.name);
    }
  }
  return pack;
}

}  // namespace

const RulePack& get_rulepack(const std::string& name) {
  static const RulePack bootstrap = build_pack("bootstrap", kBootstrapRules);
  if (name == bootstrap.name) return bootstrap;
  throw UnknownPackError(name);
}

std::vector<std::string> rulepack_names() { return {"bootstrap"}; }

}  // namespace webcheck
