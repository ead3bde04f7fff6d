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

#include "webcheck/engine.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <utility>

#include "webcheck/errors.hpp"
#include "webcheck/evl_parser.hpp"
#include "webcheck/html_parser.hpp"

namespace webcheck {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

struct MemberInfo {
  bool is_method;     // needs an argument list
  int arity;          // methods only
  bool returns_bool;  // drives absorption on an Undefined receiver
};

// Every member name the language knows, whatever the receiver. Lookups by
// name first so a typo is an error even behind an Undefined receiver.
const std::unordered_map<std::string_view, MemberInfo>& members() {
  static const std::unordered_map<std::string_view, MemberInfo> table = {
      {"class", {false, 0, false}},
      {"parent", {false, 0, false}},
      {"previousSibling", {false, 0, false}},
      {"nextSibling", {false, 0, false}},
      {"hasClass", {true, 1, true}},
      {"is", {true, 1, true}},
      {"attribute", {true, 1, false}},
      {"hasAttribute", {true, 1, true}},
      {"isDefined", {true, 0, true}},
      {"includes", {true, 1, true}},
      {"equals", {true, 1, true}},
  };
  return table;
}

Value elem_or_undefined(const Element* el) {
  if (el == nullptr) return Undefined{};
  return el;
}

[[noreturn]] void wrong_receiver(const std::string& name, const Value& receiver) {
  std::string type = value_type_name(receiver);
  const char* article = (type == "element" || type == "undefined") ? "an " : "a ";
  throw EvaluationError("'" + name + "' is not defined on " + article + type + " value");
}

const std::string& string_arg(const std::string& member, const std::vector<Value>& args,
                              size_t index) {
  if (const std::string* s = std::get_if<std::string>(&args[index])) return *s;
  throw EvaluationError("argument " + std::to_string(index + 1) + " of '" + member +
                        "' must be a string, got " + value_type_name(args[index]));
}

Value eval_member(const Expr& e, const Element& self_el);

Value eval(const Expr& e, const Element& self_el) {
  switch (e.kind) {
    case Expr::Kind::Self:
      return &self_el;
    case Expr::Kind::StringLit:
      return e.text;
    case Expr::Kind::BoolLit:
      return e.bool_value;
    case Expr::Kind::Not: {
      Value v = eval(*e.lhs, self_el);
      if (std::holds_alternative<Undefined>(v)) return true;
      if (const bool* b = std::get_if<bool>(&v)) return !*b;
      throw EvaluationError("operand of 'not' must be boolean, got " + value_type_name(v));
    }
    case Expr::Kind::And:
    case Expr::Kind::Or: {
      const char* op = e.kind == Expr::Kind::And ? "and" : "or";
      auto as_bool = [&](Value v) {
        if (std::holds_alternative<Undefined>(v)) return false;
        if (const bool* b = std::get_if<bool>(&v)) return *b;
        throw EvaluationError(std::string("operand of '") + op +
                              "' must be boolean, got " + value_type_name(v));
      };
      bool left = as_bool(eval(*e.lhs, self_el));
      if (e.kind == Expr::Kind::And && !left) return false;
      if (e.kind == Expr::Kind::Or && left) return true;
      return as_bool(eval(*e.rhs, self_el));
    }
    case Expr::Kind::Property:
    case Expr::Kind::Call:
      return eval_member(e, self_el);
  }
  throw EvaluationError("malformed expression node");
}

Value eval_member(const Expr& e, const Element& self_el) {
  auto it = members().find(e.text);
  if (it == members().end()) {
    throw EvaluationError("unknown property or method '" + e.text + "'");
  }
  const MemberInfo& info = it->second;
  if (e.kind == Expr::Kind::Call && !info.is_method) {
    throw EvaluationError("'" + e.text + "' is a property; it takes no argument list");
  }
  if (e.kind == Expr::Kind::Property && info.is_method) {
    throw EvaluationError("'" + e.text + "' is a method; write '" + e.text + "(...)'");
  }
  if (info.is_method && static_cast<int>(e.args.size()) != info.arity) {
    throw EvaluationError("'" + e.text + "' expects " + std::to_string(info.arity) +
                          " argument(s), got " + std::to_string(e.args.size()));
  }

  Value receiver = eval(*e.lhs, self_el);
  std::vector<Value> args;
  args.reserve(e.args.size());
  for (const auto& arg : e.args) args.push_back(eval(*arg, self_el));

  // Absorption: navigating or querying past a missing value never throws.
  if (std::holds_alternative<Undefined>(receiver)) {
    if (info.returns_bool) return false;
    return Undefined{};
  }

  const std::string& name = e.text;
  if (const Element* const* elp = std::get_if<const Element*>(&receiver)) {
    const Element& el = **elp;
    if (name == "class") return el.class_tokens();
    if (name == "parent") return elem_or_undefined(el.parent());
    if (name == "previousSibling") return elem_or_undefined(el.prev_element_sibling());
    if (name == "nextSibling") return elem_or_undefined(el.next_element_sibling());
    if (name == "hasClass") return match_class_pattern(el.class_tokens(), string_arg(name, args, 0));
    if (name == "is") return iequals(el.tag(), string_arg(name, args, 0));
    if (name == "attribute") {
      std::optional<std::string> v = el.attribute(string_arg(name, args, 0));
      if (!v) return Undefined{};
      return std::move(*v);
    }
    if (name == "hasAttribute") return el.has_attribute(string_arg(name, args, 0));
    if (name == "isDefined") return true;
    wrong_receiver(name, receiver);
  }
  if (const auto* list = std::get_if<std::vector<std::string>>(&receiver)) {
    if (name == "includes") return match_class_pattern(*list, string_arg(name, args, 0));
    wrong_receiver(name, receiver);
  }
  if (const std::string* s = std::get_if<std::string>(&receiver)) {
    if (name == "equals") return *s == string_arg(name, args, 0);
    if (name == "isDefined") return true;
    wrong_receiver(name, receiver);
  }
  wrong_receiver(name, receiver);  // bool receiver has no members
}

// Guard/check results must be boolean; Undefined coerces to false.
bool block_boolean(const Expr& e, const Element& self_el, const char* block) {
  Value v = eval(e, self_el);
  if (std::holds_alternative<Undefined>(v)) return false;
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw EvaluationError(std::string(block) + " must evaluate to a boolean, got " +
                        value_type_name(v));
}

}  // namespace

std::string value_type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "undefined";
    case 1: return "boolean";
    case 2: return "string";
    case 3: return "string list";
    case 4: return "element";
  }
  return "unknown";
}

Value eval_expr(const Expr& e, const Element& self_el) { return eval(e, self_el); }

Report evaluate(const RuleFile& rules, const Document& doc) {
  Report report;
  report.source_name = doc.source_name();

  // Document-order rank; used to sort violations across contexts.
  std::unordered_map<const Element*, size_t> rank;
  {
    std::vector<const Element*> all = doc.all_elements();
    for (size_t i = 0; i < all.size(); ++i) rank.emplace(all[i], i);
  }

  struct Pending {
    size_t rank;
    Violation violation;
  };
  std::vector<Pending> pending;

  auto record_issue = [&](const ContextDecl& ctx, const ConstraintDecl& c,
                          const Element& el, const std::string& what) {
    report.errors.push_back({c.name, ctx.tag, what, element_path(el), el.source_line(),
                             el.source_column()});
  };

  for (const ContextDecl& ctx : rules.contexts) {
    std::vector<const Element*> selected = doc.elements_by_tag(ctx.tag);
    report.elements_checked += static_cast<int>(selected.size());
    for (const Element* el : selected) {
      for (const ConstraintDecl& c : ctx.constraints) {
        ++report.constraints_evaluated;

        bool applies = true;
        if (c.guard) {
          try {
            applies = block_boolean(*c.guard, *el, "guard");
          } catch (const EvaluationError& err) {
            record_issue(ctx, c, *el, err.what());
            continue;
          }
        }
        if (!applies) continue;

        bool satisfied;
        try {
          satisfied = block_boolean(*c.check, *el, "check");
        } catch (const EvaluationError& err) {
          record_issue(ctx, c, *el, err.what());
          continue;
        }
        if (satisfied) continue;

        std::string message;
        try {
          Value v = eval(*c.message, *el);
          if (const std::string* s = std::get_if<std::string>(&v)) {
            message = *s;
          } else {
            throw EvaluationError("message must evaluate to a string, got " +
                                  value_type_name(v));
          }
        } catch (const EvaluationError& err) {
          record_issue(ctx, c, *el, err.what());
          message = "constraint " + c.name + " unsatisfied (message expression failed)";
        }

        Violation v{c.name, ctx.tag, std::move(message), element_path(*el),
                    el->source_line(), el->source_column()};
        pending.push_back({rank.at(el), std::move(v)});
      }
    }
  }

  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) { return a.rank < b.rank; });
  report.violations.reserve(pending.size());
  for (Pending& p : pending) report.violations.push_back(std::move(p.violation));
  return report;
}

void Checker::set_source(SourceSpec spec) { source_ = std::move(spec); }

void Checker::set_source(const std::string& path) { source_ = SourceSpec::file(path); }

void Checker::set_validation(const std::string& rules_path) {
  validation_ = rules_path;
  validation_is_path_ = true;
  validation_name_ = rules_path;
}

void Checker::set_validation_text(std::string rules_text, std::string name) {
  validation_ = std::move(rules_text);
  validation_is_path_ = false;
  validation_name_ = std::move(name);
}

void Checker::set_fetch_policy(FetchPolicy policy) { policy_ = std::move(policy); }

const Report& Checker::check() {
  if (!source_) throw MissingSourceError();
  if (!validation_) throw MissingValidationError();

  std::string rules_text =
      validation_is_path_ ? read_text_file(*validation_) : *validation_;
  RuleFile rules = parse_rules(rules_text, validation_name_);

  ResolvedSource resolved = resolve_source(*source_, policy_);
  Document doc =
      parse_document(resolved.html_text, resolved.source_name, source_->fragment);

  last_report_ = evaluate(rules, doc);
  return *last_report_;
}

std::vector<std::string> Checker::errors() const {
  if (!last_report_) {
    if (!source_) throw MissingSourceError();
    if (!validation_) throw MissingValidationError();
    throw Error("check() has not been run yet");
  }
  std::vector<std::string> messages;
  messages.reserve(last_report_->violations.size());
  for (const Violation& v : last_report_->violations) messages.push_back(v.message);
  return messages;
}

}  // namespace webcheck
