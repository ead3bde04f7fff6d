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

#include "webcheck/sources.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "httplib.h"
#include "webcheck/errors.hpp"

namespace webcheck {

namespace {

std::string ascii_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// 0x80..0x9F of Windows-1252; 0 marks the few unassigned slots.
constexpr std::array<uint16_t, 32> kCp1252High = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178,
};

void append_utf8(std::string& out, uint32_t cp) {
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

// Single-byte charsets used as declared: Latin-1 maps bytes to code points
// directly; Windows-1252 additionally remaps the 0x80..0x9F block.
std::string transcode_single_byte(const std::string& body, bool cp1252) {
  std::string out;
  out.reserve(body.size());
  for (unsigned char b : body) {
    uint32_t cp = b;
    if (cp1252 && b >= 0x80 && b <= 0x9F) {
      uint16_t mapped = kCp1252High[b - 0x80];
      cp = mapped != 0 ? mapped : 0xFFFD;
    }
    append_utf8(out, cp);
  }
  return out;
}

std::string decode_body(const std::string& body, const std::string& content_type) {
  std::string lowered = ascii_lower(content_type);
  size_t pos = lowered.find("charset=");
  std::string charset;
  if (pos != std::string::npos) {
    pos += 8;
    size_t end = lowered.find_first_of("; \t", pos);
    charset = lowered.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (charset.size() >= 2 && charset.front() == '"' && charset.back() == '"') {
      charset = charset.substr(1, charset.size() - 2);
    }
  }
  if (charset == "iso-8859-1" || charset == "latin-1" || charset == "latin1") {
    return sanitize_utf8(transcode_single_byte(body, /*cp1252=*/false));
  }
  if (charset == "windows-1252" || charset == "cp1252") {
    return sanitize_utf8(transcode_single_byte(body, /*cp1252=*/true));
  }
  // utf-8, us-ascii, anything unrecognized: treat as UTF-8.
  return sanitize_utf8(body);
}

struct ParsedUrl {
  bool https = false;
  std::string host;  // includes :port when given
  std::string target;  // path + query, "/" minimum
};

ParsedUrl parse_url(const std::string& url) {
  ParsedUrl out;
  std::string rest;
  if (url.rfind("http://", 0) == 0) {
    rest = url.substr(7);
  } else if (url.rfind("https://", 0) == 0) {
    out.https = true;
    rest = url.substr(8);
  } else {
    throw SourceError(SourceErrorKind::UrlInvalid,
                      "URL must start with http:// or https://: \"" + url + "\"");
  }
  size_t slash = rest.find_first_of("/?");
  out.host = slash == std::string::npos ? rest : rest.substr(0, slash);
  if (out.host.empty()) {
    throw SourceError(SourceErrorKind::UrlInvalid, "URL has no host: \"" + url + "\"");
  }
  if (slash == std::string::npos) {
    out.target = "/";
  } else {
    out.target = rest.substr(slash);
    if (out.target[0] == '?') out.target = "/" + out.target;
  }
  return out;
}

// Resolves a Location header value against the request URL.
std::string resolve_location(const ParsedUrl& base, const std::string& location) {
  if (location.rfind("http://", 0) == 0 || location.rfind("https://", 0) == 0) {
    return location;
  }
  std::string scheme = base.https ? "https://" : "http://";
  if (!location.empty() && location[0] == '/') {
    return scheme + base.host + location;
  }
  std::string dir = base.target;
  size_t q = dir.find('?');
  if (q != std::string::npos) dir = dir.substr(0, q);
  size_t last = dir.rfind('/');
  dir = last == std::string::npos ? "/" : dir.substr(0, last + 1);
  return scheme + base.host + dir + location;
}

ResolvedSource fetch_url(const std::string& url, const FetchPolicy& policy) {
  std::string current = url;
  for (int hop = 0; hop <= policy.max_redirects; ++hop) {
    ParsedUrl parsed = parse_url(current);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (parsed.https) {
      throw SourceError(SourceErrorKind::ConnectionFailed,
                        "https URLs are not supported in this build: \"" + current + "\"");
    }
#endif
    httplib::Client client((parsed.https ? "https://" : "http://") + parsed.host);
    client.set_follow_location(false);  // redirects are counted here
    client.set_connection_timeout(0, policy.timeout_ms * 1000LL);
    client.set_read_timeout(0, policy.timeout_ms * 1000LL);
    client.set_write_timeout(0, policy.timeout_ms * 1000LL);

    httplib::Headers headers = {
        {"User-Agent", policy.user_agent},
        {"Accept", "text/html"},
    };

    std::string body;
    bool too_large = false;
    httplib::Result res = client.Get(
        parsed.target, headers,
        [&](const char* data, size_t len) {
          if (body.size() + len > policy.max_body_bytes) {
            too_large = true;
            return false;  // aborts the transfer; never truncate silently
          }
          body.append(data, len);
          return true;
        });

    if (too_large) {
      throw SourceError(SourceErrorKind::BodyTooLarge,
                        "response body exceeds " + std::to_string(policy.max_body_bytes) +
                            " bytes: \"" + current + "\"");
    }
    if (!res) {
      switch (res.error()) {
        case httplib::Error::ConnectionTimeout:
          throw SourceError(SourceErrorKind::Timeout,
                            "connection timed out: \"" + current + "\"");
        case httplib::Error::Read:
        case httplib::Error::Write:
          throw SourceError(SourceErrorKind::Timeout,
                            "transfer timed out or was interrupted: \"" + current + "\"");
        default:
          throw SourceError(SourceErrorKind::ConnectionFailed,
                            "connection failed (" + httplib::to_string(res.error()) +
                                "): \"" + current + "\"");
      }
    }

    int status = res->status;
    if (status >= 300 && status < 400) {
      std::string location = res->get_header_value("Location");
      if (location.empty()) {
        throw SourceError(SourceErrorKind::HttpStatus,
                          "redirect without Location header from \"" + current + "\"",
                          status);
      }
      if (hop == policy.max_redirects) {
        throw SourceError(SourceErrorKind::TooManyRedirects,
                          "more than " + std::to_string(policy.max_redirects) +
                              " redirects from \"" + url + "\"");
      }
      current = resolve_location(parsed, location);
      continue;
    }
    if (status < 200 || status >= 300) {
      throw SourceError(SourceErrorKind::HttpStatus,
                        "HTTP " + std::to_string(status) + " from \"" + current + "\"",
                        status);
    }
    return {decode_body(body, res->get_header_value("Content-Type")), url};
  }
  throw SourceError(SourceErrorKind::TooManyRedirects,
                    "more than " + std::to_string(policy.max_redirects) +
                        " redirects from \"" + url + "\"");
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw SourceError(SourceErrorKind::FileNotFound, "no such file: \"" + path + "\"");
  }
  if (std::filesystem::is_directory(path, ec)) {
    throw SourceError(SourceErrorKind::FileUnreadable, "is a directory: \"" + path + "\"");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SourceError(SourceErrorKind::FileUnreadable, "cannot open: \"" + path + "\"");
  }
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) {
    throw SourceError(SourceErrorKind::FileUnreadable, "read failed: \"" + path + "\"");
  }
  return content;
}

std::string sanitize_utf8(std::string text) {
  std::string_view in = text;
  if (in.size() >= 3 && static_cast<unsigned char>(in[0]) == 0xEF &&
      static_cast<unsigned char>(in[1]) == 0xBB && static_cast<unsigned char>(in[2]) == 0xBF) {
    in.remove_prefix(3);
  }
  std::string out;
  out.reserve(in.size());
  size_t i = 0;
  auto cont = [&](size_t k) {
    return i + k < in.size() && (static_cast<unsigned char>(in[i + k]) & 0xC0) == 0x80;
  };
  while (i < in.size()) {
    unsigned char b = static_cast<unsigned char>(in[i]);
    if (b < 0x80) {
      out += static_cast<char>(b);
      i += 1;
    } else if (b >= 0xC2 && b <= 0xDF && cont(1)) {
      out.append(in.substr(i, 2));
      i += 2;
    } else if (b == 0xE0 && i + 1 < in.size() &&
               static_cast<unsigned char>(in[i + 1]) >= 0xA0 &&
               static_cast<unsigned char>(in[i + 1]) <= 0xBF && cont(2)) {
      out.append(in.substr(i, 3));
      i += 3;
    } else if (((b >= 0xE1 && b <= 0xEC) || b == 0xEE || b == 0xEF) && cont(1) && cont(2)) {
      out.append(in.substr(i, 3));
      i += 3;
    } else if (b == 0xED && i + 1 < in.size() &&
               static_cast<unsigned char>(in[i + 1]) >= 0x80 &&
               static_cast<unsigned char>(in[i + 1]) <= 0x9F && cont(2)) {
      out.append(in.substr(i, 3));  // excludes surrogates
      i += 3;
    } else if (b == 0xF0 && i + 1 < in.size() &&
               static_cast<unsigned char>(in[i + 1]) >= 0x90 &&
               static_cast<unsigned char>(in[i + 1]) <= 0xBF && cont(2) && cont(3)) {
      out.append(in.substr(i, 4));
      i += 4;
    } else if (b >= 0xF1 && b <= 0xF3 && cont(1) && cont(2) && cont(3)) {
      out.append(in.substr(i, 4));
      i += 4;
    } else if (b == 0xF4 && i + 1 < in.size() &&
               static_cast<unsigned char>(in[i + 1]) >= 0x80 &&
               static_cast<unsigned char>(in[i + 1]) <= 0x8F && cont(2) && cont(3)) {
      out.append(in.substr(i, 4));
      i += 4;
    } else {
      out += "\xEF\xBF\xBD";  // one replacement per invalid byte
      i += 1;
    }
  }
  return out;
}

ResolvedSource resolve_source(const SourceSpec& spec, const FetchPolicy& policy) {
  switch (spec.kind) {
    case SourceSpec::Kind::File:
      if (spec.value == "-") {
        return {sanitize_utf8(read_stdin()), "<stdin>"};
      }
      return {sanitize_utf8(read_text_file(spec.value)), spec.value};
    case SourceSpec::Kind::Url:
      return fetch_url(spec.value, policy);
    case SourceSpec::Kind::Inline:
      return {sanitize_utf8(spec.value), "<inline>"};
  }
  throw SourceError(SourceErrorKind::UrlInvalid, "unsupported source kind");
}

}  // namespace webcheck
