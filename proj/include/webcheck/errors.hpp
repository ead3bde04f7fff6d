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

#ifndef WEBCHECK_ERRORS_HPP
#define WEBCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace webcheck {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Rule-file syntax error with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(std::string source_name, int line, int column, const std::string& message)
      : Error(source_name + ":" + std::to_string(line) + ":" + std::to_string(column) +
              ": " + message),
        source_name_(std::move(source_name)),
        line_(line),
        column_(column),
        detail_(message) {}

  const std::string& source_name() const { return source_name_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the source-position prefix.
  const std::string& detail() const { return detail_; }

private:
  std::string source_name_;
  int line_;
  int column_;
  std::string detail_;
};

enum class SourceErrorKind {
  FileNotFound,
  FileUnreadable,
  UrlInvalid,
  HttpStatus,
  Timeout,
  BodyTooLarge,
  TooManyRedirects,
  ConnectionFailed,
};

/// Failure while turning a SourceSpec into HTML text (I/O or network).
class SourceError : public Error {
public:
  SourceError(SourceErrorKind kind, const std::string& message, int http_status = 0)
      : Error(message), kind_(kind), http_status_(http_status) {}

  SourceErrorKind kind() const { return kind_; }
  /// Status code for kind HttpStatus, otherwise 0.
  int http_status() const { return http_status_; }

private:
  SourceErrorKind kind_;
  int http_status_;
};

/// Expression evaluation failure: unknown member, wrong arity, or a value of
/// the wrong type where a specific type is required. Surfaced per constraint
/// in the report's error channel rather than aborting a run.
class EvaluationError : public Error {
public:
  explicit EvaluationError(const std::string& message) : Error(message) {}
};

/// check() / errors() called before a source was set.
class MissingSourceError : public Error {
public:
  MissingSourceError() : Error("no HTML source set; call set_source() first") {}
};

/// check() / errors() called before a validation was set.
class MissingValidationError : public Error {
public:
  MissingValidationError() : Error("no validation set; call set_validation() first") {}
};

/// get_rulepack() with a name that is not registered.
class UnknownPackError : public Error {
public:
  explicit UnknownPackError(const std::string& name)
      : Error("unknown rule pack \"" + name + "\"") {}
};

}  // namespace webcheck

#endif
