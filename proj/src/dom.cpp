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

#include "webcheck/dom.hpp"

#include <algorithm>
#include <cctype>

namespace webcheck {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r';
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const Element* Element::parent() const {
  if (parent_ == nullptr || parent_->synthetic_root_) return nullptr;
  return parent_;
}

const Element* Element::prev_element_sibling() const {
  if (parent_ == nullptr) return nullptr;
  const Element* prev = nullptr;
  for (const Node& n : parent_->children_) {
    if (!n.is_element()) continue;
    if (n.element() == this) return prev;
    prev = n.element();
  }
  return nullptr;
}

const Element* Element::next_element_sibling() const {
  if (parent_ == nullptr) return nullptr;
  bool seen_self = false;
  for (const Node& n : parent_->children_) {
    if (!n.is_element()) continue;
    if (seen_self) return n.element();
    if (n.element() == this) seen_self = true;
  }
  return nullptr;
}

std::vector<const Element*> Element::child_elements() const {
  std::vector<const Element*> out;
  for (const Node& n : children_) {
    if (n.is_element()) out.push_back(n.element());
  }
  return out;
}

std::vector<std::string> Element::class_tokens() const {
  std::vector<std::string> tokens;
  auto value = attribute("class");
  if (!value) return tokens;
  const std::string& s = *value;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) tokens.emplace_back(s.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::string> Element::attribute(std::string_view name) const {
  std::string wanted = to_lower(name);
  for (const Attribute& a : attributes_) {
    if (a.name == wanted) return a.value;
  }
  return std::nullopt;
}

bool Element::has_attribute(std::string_view name) const {
  return attribute(name).has_value();
}

namespace {

void collect_preorder(const Element& el, std::vector<const Element*>& out) {
  out.push_back(&el);
  for (const Node& n : el.children()) {
    if (n.is_element()) collect_preorder(*n.element(), out);
  }
}

}  // namespace

std::vector<const Element*> Document::all_elements() const {
  std::vector<const Element*> out;
  if (root_ == nullptr) return out;
  if (is_fragment_) {
    for (const Node& n : root_->children()) {
      if (n.is_element()) collect_preorder(*n.element(), out);
    }
  } else {
    collect_preorder(*root_, out);
  }
  return out;
}

std::vector<const Element*> Document::elements_by_tag(std::string_view tag) const {
  std::string wanted = to_lower(tag);
  std::vector<const Element*> out;
  for (const Element* el : all_elements()) {
    if (el->tag() == wanted) out.push_back(el);
  }
  return out;
}

bool token_matches_pattern(std::string_view token, std::string_view pattern) {
  // Linear-time anchored glob with '*' as the only wildcard.
  size_t p = 0, t = 0;
  size_t star_p = std::string_view::npos, star_t = 0;
  while (t < token.size()) {
    if (p < pattern.size() && pattern[p] == '*') {
      star_p = p++;
      star_t = t;
    } else if (p < pattern.size() && pattern[p] == token[t]) {
      ++p;
      ++t;
    } else if (star_p != std::string_view::npos) {
      p = star_p + 1;
      t = ++star_t;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool match_class_pattern(const std::vector<std::string>& tokens, std::string_view pattern) {
  return std::any_of(tokens.begin(), tokens.end(), [&](const std::string& tok) {
    return token_matches_pattern(tok, pattern);
  });
}

std::string element_path(const Element& el) {
  std::vector<const Element*> chain;
  // Walk the internal parent chain so fragment top-level elements still get
  // positioned among their siblings, but stop before the synthetic wrapper.
  for (const Element* cur = &el; cur != nullptr; cur = cur->parent()) {
    chain.push_back(cur);
  }
  std::string path;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Element* cur = *it;
    if (!path.empty()) path += '/';
    path += cur->tag();
    // Index among same-tag siblings, shown only when there is a tie.
    const Element* prev = cur->prev_element_sibling();
    const Element* next = cur->next_element_sibling();
    int index = 0;
    bool has_same_tag_sibling = false;
    for (const Element* p = prev; p != nullptr; p = p->prev_element_sibling()) {
      if (p->tag() == cur->tag()) {
        ++index;
        has_same_tag_sibling = true;
      }
    }
    for (const Element* n = next; n != nullptr && !has_same_tag_sibling;
         n = n->next_element_sibling()) {
      if (n->tag() == cur->tag()) has_same_tag_sibling = true;
    }
    if (has_same_tag_sibling) {
      path += '[';
      path += std::to_string(index);
      path += ']';
    }
  }
  return path;
}

}  // namespace webcheck
