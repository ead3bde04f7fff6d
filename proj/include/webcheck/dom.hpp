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

#ifndef WEBCHECK_DOM_HPP
#define WEBCHECK_DOM_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace webcheck {

class Element;

/// Where HTML text comes from.
struct SourceSpec {
  enum class Kind { File, Url, Inline };

  Kind kind = Kind::Inline;
  /// File path (or "-" for stdin), absolute http(s) URL, or raw HTML text.
  std::string value;
  /// Parse the text as body content rather than a full document.
  bool fragment = false;

  static SourceSpec file(std::string path, bool fragment = false) {
    return {Kind::File, std::move(path), fragment};
  }
  static SourceSpec url(std::string url, bool fragment = false) {
    return {Kind::Url, std::move(url), fragment};
  }
  static SourceSpec inline_text(std::string html, bool fragment = false) {
    return {Kind::Inline, std::move(html), fragment};
  }
};

struct Attribute {
  std::string name;   // lowercased
  std::string value;  // verbatim (entities decoded)
};

/// One slot in an element's child list: either a child element or a text run.
class Node {
public:
  static Node make_element(const Element* el) {
    Node n;
    n.element_ = el;
    return n;
  }
  static Node make_text(std::string text) {
    Node n;
    n.text_ = std::move(text);
    return n;
  }

  bool is_element() const { return element_ != nullptr; }
  bool is_text() const { return element_ == nullptr; }
  const Element* element() const { return element_; }
  const std::string& text() const { return text_; }

private:
  const Element* element_ = nullptr;
  std::string text_;
};

/// An element of the parsed tree. Immutable once parsing has finished; safe
/// to share across threads. Lifetime is owned by the Document.
class Element {
public:
  const std::string& tag() const { return tag_; }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  const std::vector<Node>& children() const { return children_; }

  /// 1-based position of the start tag in the source text; 0 when unknown.
  int source_line() const { return source_line_; }
  int source_column() const { return source_column_; }

  /// Parent element, or nullptr for the document root and for top-level
  /// elements of a fragment (the synthetic fragment root is never exposed).
  const Element* parent() const;

  /// Nearest element sibling in the given direction, skipping text runs;
  /// nullptr at the ends of the child list.
  const Element* prev_element_sibling() const;
  const Element* next_element_sibling() const;

  /// Child elements in order, text runs skipped.
  std::vector<const Element*> child_elements() const;

  /// Whitespace-split tokens of the class attribute, order and duplicates
  /// preserved; empty when the attribute is absent.
  std::vector<std::string> class_tokens() const;

  /// Case-insensitive attribute lookup; the value is returned verbatim.
  /// A bare (boolean) attribute yields an empty string.
  std::optional<std::string> attribute(std::string_view name) const;
  bool has_attribute(std::string_view name) const;

private:
  friend class TreeBuilder;

  std::string tag_;
  std::vector<Attribute> attributes_;
  std::vector<Node> children_;
  Element* parent_ = nullptr;
  bool synthetic_root_ = false;  // fragment wrapper, hidden from parent()
  int source_line_ = 0;
  int source_column_ = 0;
};

/// An immutable parsed HTML document (or fragment).
class Document {
public:
  Document(Document&&) = default;
  Document& operator=(Document&&) = default;
  Document(const Document&) = delete;
  Document& operator=(const Document&) = delete;

  /// The root element: the html element for full documents. For fragments
  /// this is a synthetic wrapper that navigation never exposes.
  const Element& root() const { return *root_; }
  const std::string& source_name() const { return source_name_; }
  bool is_fragment() const { return is_fragment_; }

  /// All elements with a matching tag (case-insensitive), in document
  /// order. The fragment wrapper is never matched.
  std::vector<const Element*> elements_by_tag(std::string_view tag) const;

  /// Every element in document pre-order, fragment wrapper excluded.
  std::vector<const Element*> all_elements() const;

private:
  friend class TreeBuilder;
  Document() = default;

  std::vector<std::unique_ptr<Element>> arena_;  // owns every element
  Element* root_ = nullptr;
  std::string source_name_;
  bool is_fragment_ = false;
};

/// True iff `token` matches `pattern`, where `*` matches zero or more
/// characters and everything else matches literally. Anchored at both ends,
/// case-sensitive.
bool token_matches_pattern(std::string_view token, std::string_view pattern);

/// True iff some token in the list matches the pattern.
bool match_class_pattern(const std::vector<std::string>& tokens, std::string_view pattern);

/// Root-to-element locator such as "html/body/div[1]/div[0]". The index is
/// the zero-based position among same-tag siblings and only appears when the
/// element actually has same-tag siblings.
std::string element_path(const Element& el);

}  // namespace webcheck

#endif
