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

#include "webcheck/html_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace webcheck {

namespace {

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r';
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

const std::unordered_set<std::string>& void_elements() {
  static const std::unordered_set<std::string> set = {
      "area",  "base", "br",   "col",   "embed",  "hr",   "img", "input",
      "link",  "meta", "param", "source", "track", "wbr", "command", "keygen",
  };
  return set;
}

// Content of these elements is raw text up to the matching end tag.
const std::unordered_set<std::string>& rawtext_elements() {
  static const std::unordered_set<std::string> set = {
      "script", "style", "textarea", "title", "xmp",
  };
  return set;
}

// Start tags that close an open <p>.
const std::unordered_set<std::string>& closes_p() {
  static const std::unordered_set<std::string> set = {
      "address", "article", "aside",  "blockquote", "details", "dialog",
      "dir",     "div",     "dl",     "fieldset",   "figcaption", "figure",
      "footer",  "form",    "h1",     "h2",         "h3",      "h4",
      "h5",      "h6",      "header", "hgroup",     "hr",      "main",
      "menu",    "nav",     "ol",     "p",          "pre",     "section",
      "table",   "ul",
  };
  return set;
}

// tag -> set of open tags it implicitly ends when it starts.
const std::unordered_map<std::string, std::unordered_set<std::string>>& auto_close_map() {
  static const std::unordered_map<std::string, std::unordered_set<std::string>> map = {
      {"li", {"li"}},
      {"dt", {"dt", "dd"}},
      {"dd", {"dt", "dd"}},
      {"tr", {"tr", "td", "th"}},
      {"td", {"td", "th"}},
      {"th", {"td", "th"}},
      {"thead", {"td", "th", "tr", "tbody", "tfoot", "thead", "caption", "colgroup"}},
      {"tbody", {"td", "th", "tr", "tbody", "tfoot", "thead", "caption", "colgroup"}},
      {"tfoot", {"td", "th", "tr", "tbody", "tfoot", "thead", "caption", "colgroup"}},
      {"option", {"option"}},
      {"optgroup", {"option", "optgroup"}},
  };
  return map;
}

// A deliberately small table; unknown names are kept verbatim.
const std::unordered_map<std::string, std::string>& named_entities() {
  static const std::unordered_map<std::string, std::string> map = {
      {"amp", "&"},          {"lt", "<"},           {"gt", ">"},
      {"quot", "\""},        {"apos", "'"},         {"nbsp", "\xC2\xA0"},
      {"copy", "\xC2\xA9"},  {"reg", "\xC2\xAE"},   {"trade", "\xE2\x84\xA2"},
      {"laquo", "\xC2\xAB"}, {"raquo", "\xC2\xBB"}, {"mdash", "\xE2\x80\x94"},
      {"ndash", "\xE2\x80\x93"}, {"hellip", "\xE2\x80\xA6"}, {"bull", "\xE2\x80\xA2"},
      {"lsquo", "\xE2\x80\x98"}, {"rsquo", "\xE2\x80\x99"}, {"ldquo", "\xE2\x80\x9C"},
      {"rdquo", "\xE2\x80\x9D"}, {"times", "\xC3\x97"}, {"divide", "\xC3\xB7"},
      {"deg", "\xC2\xB0"},   {"middot", "\xC2\xB7"}, {"sect", "\xC2\xA7"},
      {"para", "\xC2\xB6"},  {"plusmn", "\xC2\xB1"}, {"euro", "\xE2\x82\xAC"},
      {"pound", "\xC2\xA3"}, {"yen", "\xC2\xA5"},    {"cent", "\xC2\xA2"},
  };
  return map;
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decode &name;, &#NN; and &#xNN; references; unknown names stay verbatim.
std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out += text[i++];
      continue;
    }
    size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi == i + 1 || semi - i > 12) {
      out += text[i++];
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    if (name[0] == '#') {
      uint32_t cp = 0;
      bool ok = name.size() > 1;
      if (name.size() > 2 && (name[1] == 'x' || name[1] == 'X')) {
        for (size_t k = 2; k < name.size() && ok; ++k) {
          char c = ascii_lower(name[k]);
          if (c >= '0' && c <= '9') cp = cp * 16 + static_cast<uint32_t>(c - '0');
          else if (c >= 'a' && c <= 'f') cp = cp * 16 + static_cast<uint32_t>(c - 'a' + 10);
          else ok = false;
        }
      } else {
        for (size_t k = 1; k < name.size() && ok; ++k) {
          if (name[k] >= '0' && name[k] <= '9') cp = cp * 10 + static_cast<uint32_t>(name[k] - '0');
          else ok = false;
        }
      }
      if (ok) {
        append_utf8(out, cp);
        i = semi + 1;
        continue;
      }
    } else {
      auto it = named_entities().find(std::string(name));
      if (it != named_entities().end()) {
        out += it->second;
        i = semi + 1;
        continue;
      }
    }
    out += text[i++];
  }
  return out;
}

struct Token {
  enum class Kind { StartTag, EndTag, Text, Eof };
  Kind kind = Kind::Eof;
  std::string name;                       // tag name, lowercased
  std::vector<Attribute> attributes;      // start tags only
  bool self_closing = false;
  std::string text;                       // text tokens (entities decoded)
  int line = 0;
  int column = 0;
};

class Tokenizer {
public:
  explicit Tokenizer(std::string_view input) : input_(input) {}

  Token next() {
    if (!pending_rawtext_.empty()) return take_rawtext();
    if (!pending_end_.empty()) {
      Token t;
      t.kind = Token::Kind::EndTag;
      t.name = std::move(pending_end_);
      t.line = line_;
      t.column = column_;
      pending_end_.clear();
      return t;
    }
    std::string text;
    int text_line = line_, text_col = column_;
    while (pos_ < input_.size()) {
      if (input_[pos_] != '<') {
        text += advance();
        continue;
      }
      // '<' only opens markup before alpha, '/', '!' or '?'.
      if (pos_ + 1 >= input_.size()) {
        text += advance();
        continue;
      }
      char next_c = input_[pos_ + 1];
      if (!is_ascii_alpha(next_c) && next_c != '/' && next_c != '!' && next_c != '?') {
        text += advance();
        continue;
      }
      if (next_c == '/' && (pos_ + 2 >= input_.size() || !is_ascii_alpha(input_[pos_ + 2]))) {
        text += advance();
        continue;
      }
      if (!text.empty()) return make_text(std::move(text), text_line, text_col);
      if (next_c == '!' || next_c == '?') {
        skip_markup_declaration();
        text_line = line_;
        text_col = column_;
        continue;
      }
      return read_tag();
    }
    if (!text.empty()) return make_text(std::move(text), text_line, text_col);
    Token t;
    t.kind = Token::Kind::Eof;
    return t;
  }

  // Arm raw-text mode: everything up to </name is one text run.
  void start_rawtext(const std::string& name) { rawtext_for_ = name; collect_rawtext(); }

private:
  char advance() {
    char c = input_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  Token make_text(std::string raw, int line, int col) {
    Token t;
    t.kind = Token::Kind::Text;
    t.text = decode_entities(raw);
    t.line = line;
    t.column = col;
    return t;
  }

  // Comments, doctype, CDATA and <? ... > are dropped from the model.
  void skip_markup_declaration() {
    if (input_.compare(pos_, 4, "<!--") == 0) {
      advance(); advance(); advance(); advance();
      while (pos_ < input_.size()) {
        if (input_.compare(pos_, 3, "-->") == 0) {
          advance(); advance(); advance();
          return;
        }
        advance();
      }
      return;
    }
    while (pos_ < input_.size()) {
      if (advance() == '>') return;
    }
  }

  Token read_tag() {
    Token t;
    t.line = line_;
    t.column = column_;
    advance();  // '<'
    if (input_[pos_] == '/') {
      advance();
      t.kind = Token::Kind::EndTag;
    } else {
      t.kind = Token::Kind::StartTag;
    }
    while (pos_ < input_.size() && !is_ascii_space(input_[pos_]) && input_[pos_] != '>' &&
           input_[pos_] != '/') {
      t.name += ascii_lower(advance());
    }
    if (t.kind == Token::Kind::EndTag) {
      // Attributes on end tags are ignored.
      while (pos_ < input_.size() && input_[pos_] != '>') advance();
      if (pos_ < input_.size()) advance();
      return t;
    }
    read_attributes(t);
    return t;
  }

  void read_attributes(Token& t) {
    while (pos_ < input_.size()) {
      while (pos_ < input_.size() && (is_ascii_space(input_[pos_]) || input_[pos_] == '/')) {
        if (input_[pos_] == '/' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
          t.self_closing = true;
        }
        advance();
      }
      if (pos_ >= input_.size()) return;
      if (input_[pos_] == '>') {
        advance();
        return;
      }
      std::string name;
      while (pos_ < input_.size() && !is_ascii_space(input_[pos_]) && input_[pos_] != '=' &&
             input_[pos_] != '>' && input_[pos_] != '/') {
        name += ascii_lower(advance());
      }
      while (pos_ < input_.size() && is_ascii_space(input_[pos_])) advance();
      std::string value;
      if (pos_ < input_.size() && input_[pos_] == '=') {
        advance();
        while (pos_ < input_.size() && is_ascii_space(input_[pos_])) advance();
        if (pos_ < input_.size() && (input_[pos_] == '"' || input_[pos_] == '\'')) {
          char quote = advance();
          while (pos_ < input_.size() && input_[pos_] != quote) value += advance();
          if (pos_ < input_.size()) advance();
        } else {
          while (pos_ < input_.size() && !is_ascii_space(input_[pos_]) && input_[pos_] != '>') {
            value += advance();
          }
        }
      }
      if (!name.empty()) {
        // First occurrence wins on duplicates.
        bool seen = std::any_of(t.attributes.begin(), t.attributes.end(),
                                [&](const Attribute& a) { return a.name == name; });
        if (!seen) t.attributes.push_back({name, decode_entities(value)});
      }
    }
  }

  void collect_rawtext() {
    std::string close = "</" + rawtext_for_;
    int start_line = line_, start_col = column_;
    std::string text;
    while (pos_ < input_.size()) {
      if (input_[pos_] == '<' && input_.size() - pos_ >= close.size()) {
        std::string candidate = ascii_lower(input_.substr(pos_, close.size()));
        if (candidate == close) {
          size_t after = pos_ + close.size();
          if (after >= input_.size() || is_ascii_space(input_[after]) ||
              input_[after] == '>' || input_[after] == '/') {
            // Consume through the end of the close tag.
            for (size_t k = 0; k < close.size(); ++k) advance();
            while (pos_ < input_.size() && input_[pos_] != '>') advance();
            if (pos_ < input_.size()) advance();
            break;
          }
        }
      }
      text += advance();
    }
    // A synthetic end tag closes the element even when the input lacks one.
    pending_end_ = rawtext_for_;
    rawtext_for_.clear();
    if (!text.empty()) {
      pending_rawtext_ = std::move(text);
      pending_line_ = start_line;
      pending_col_ = start_col;
    }
  }

  Token take_rawtext() {
    Token t;
    t.kind = Token::Kind::Text;
    t.text = std::move(pending_rawtext_);  // raw: entities stay undecoded in scripts
    t.line = pending_line_;
    t.column = pending_col_;
    pending_rawtext_.clear();
    return t;
  }

  std::string_view input_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::string rawtext_for_;
  std::string pending_rawtext_;
  std::string pending_end_;
  int pending_line_ = 0, pending_col_ = 0;
};

}  // namespace

// Builds the immutable Document; the only code allowed to mutate elements.
class TreeBuilder {
public:
  Document build(std::string_view html, std::string source_name, bool fragment) {
    Document doc;
    doc.source_name_ = std::move(source_name);
    doc.is_fragment_ = fragment;
    doc_ = &doc;

    Element* top = new_element(fragment ? "#fragment" : "html", {}, 0, 0);
    top->synthetic_root_ = fragment;
    stack_.push_back(top);

    Tokenizer tok(html);
    for (Token t = tok.next(); t.kind != Token::Kind::Eof; t = tok.next()) {
      switch (t.kind) {
        case Token::Kind::Text:
          append_text(std::move(t.text));
          break;
        case Token::Kind::StartTag:
          handle_start_tag(t, tok);
          break;
        case Token::Kind::EndTag:
          handle_end_tag(t);
          break;
        case Token::Kind::Eof:
          break;
      }
    }

    doc.root_ = finish_root(top, fragment);
    return doc;
  }

private:
  Element* new_element(std::string tag, std::vector<Attribute> attrs, int line, int col) {
    auto el = std::make_unique<Element>();
    el->tag_ = std::move(tag);
    el->attributes_ = std::move(attrs);
    el->source_line_ = line;
    el->source_column_ = col;
    Element* raw = el.get();
    doc_->arena_.push_back(std::move(el));
    return raw;
  }

  Element* current() { return stack_.back(); }

  void append_child(Element* parent, Element* child) {
    child->parent_ = parent;
    parent->children_.push_back(Node::make_element(child));
  }

  void append_text(std::string text) {
    if (text.empty()) return;
    Element* parent = current();
    // Merge adjacent runs so "a</span>b" style recovery yields one run.
    if (!parent->children_.empty() && parent->children_.back().is_text()) {
      Node merged = Node::make_text(parent->children_.back().text() + text);
      parent->children_.back() = std::move(merged);
      return;
    }
    parent->children_.push_back(Node::make_text(std::move(text)));
  }

  void handle_start_tag(Token& t, Tokenizer& tok) {
    if (t.name.empty()) return;
    apply_auto_close(t.name);

    if (!doc_->is_fragment_ && t.name == "html" && stack_.size() == 1 &&
        !saw_explicit_html_ && !root_has_content_) {
      // Adopt the markup's own html element as the root.
      Element* root = stack_[0];
      root->attributes_ = std::move(t.attributes);
      root->source_line_ = t.line;
      root->source_column_ = t.column;
      saw_explicit_html_ = true;
      return;
    }

    Element* el = new_element(t.name, std::move(t.attributes), t.line, t.column);
    append_child(current(), el);
    root_has_content_ = true;

    bool is_void = void_elements().count(t.name) > 0;
    if (is_void) return;
    // Per HTML5, the self-closing slash has no effect on HTML elements.
    stack_.push_back(el);
    if (rawtext_elements().count(t.name) > 0) tok.start_rawtext(t.name);
  }

  void apply_auto_close(const std::string& name) {
    if (closes_p().count(name) > 0) {
      while (stack_.size() > 1 && current()->tag_ == "p") stack_.pop_back();
    }
    auto it = auto_close_map().find(name);
    if (it != auto_close_map().end()) {
      while (stack_.size() > 1 && it->second.count(current()->tag_) > 0) stack_.pop_back();
    }
  }

  void handle_end_tag(const Token& t) {
    if (t.name.empty()) return;
    // Find a matching open element; stray end tags are dropped.
    for (size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag_ == t.name) {
        stack_.resize(i);  // auto-closes anything opened inside
        return;
      }
    }
  }

  Element* finish_root(Element* top, bool /*fragment*/) {
    stack_.clear();  // EOF closes every open element
    return top;
  }

  Document* doc_ = nullptr;
  std::vector<Element*> stack_;
  bool saw_explicit_html_ = false;
  bool root_has_content_ = false;
};

Document parse_document(std::string_view html_text, std::string source_name, bool fragment) {
  TreeBuilder builder;
  return builder.build(html_text, std::move(source_name), fragment);
}

}  // namespace webcheck
