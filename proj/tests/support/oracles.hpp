// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles. These scan raw source text at the token level and are
// deliberately independent of the library's lexer/parser/analysis code paths
// they are used to cross-check.

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace testsupport {

// Strips // and /* */ comments and the contents of string literals, keeping
// byte offsets stable (replaced with spaces) so later scans can report
// positions in the original text.
inline std::string blank_comments_and_strings(std::string_view src) {
  std::string out(src);
  enum class St { Code, Line, Block, Str1, Str2 } st = St::Code;
  for (std::size_t i = 0; i < src.size(); ++i) {
    char c = src[i];
    char n = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (st) {
      case St::Code:
        if (c == '/' && n == '/') {
          st = St::Line;
          out[i] = out[i + 1] = ' ';
          ++i;
        } else if (c == '/' && n == '*') {
          st = St::Block;
          out[i] = out[i + 1] = ' ';
          ++i;
        } else if (c == '"') {
          st = St::Str2;
        } else if (c == '\'') {
          st = St::Str1;
        }
        break;
      case St::Line:
        if (c == '\n')
          st = St::Code;
        else
          out[i] = ' ';
        break;
      case St::Block:
        if (c == '*' && n == '/') {
          st = St::Code;
          out[i] = out[i + 1] = ' ';
          ++i;
        } else if (c != '\n') {
          out[i] = ' ';
        }
        break;
      case St::Str1:
      case St::Str2: {
        char quote = st == St::Str1 ? '\'' : '"';
        if (c == '\\') {
          out[i] = ' ';
          if (i + 1 < src.size()) out[i + 1] = ' ';
          ++i;
        } else if (c == quote) {
          st = St::Code;
        } else {
          out[i] = ' ';
        }
        break;
      }
    }
  }
  return out;
}

inline bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

/// Count whole-word occurrences of `word` outside comments/strings.
inline std::size_t count_keyword(std::string_view src, std::string_view word) {
  std::string code = blank_comments_and_strings(src);
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = code.find(word, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(code[pos - 1]);
    std::size_t after = pos + word.size();
    bool right_ok = after >= code.size() || !is_word_char(code[after]);
    if (left_ok && right_ok) ++count;
    pos = after;
  }
  return count;
}

/// Independent oracle for parser function/event counts: `function` keywords
/// introduce function definitions; `event` keywords introduce event
/// declarations (emit statements use `emit`, not `event`).
inline std::size_t scan_function_count(std::string_view src) {
  return count_keyword(src, "function");
}
inline std::size_t scan_event_count(std::string_view src) {
  return count_keyword(src, "event");
}

struct ScanHit {
  std::size_t offset;  // byte offset of the statement keyword
  std::string text;    // statement text through the closing parenthesis
};

// Finds `keyword (...)` occurrences and returns the parenthesized text.
inline std::vector<ScanHit> find_call_statements(std::string_view src, std::string_view keyword) {
  std::string code = blank_comments_and_strings(src);
  std::vector<ScanHit> hits;
  std::size_t pos = 0;
  while ((pos = code.find(keyword, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(code[pos - 1]);
    std::size_t after = pos + keyword.size();
    bool right_ok = after < code.size() && !is_word_char(code[after]);
    if (!left_ok || !right_ok) {
      pos = after;
      continue;
    }
    std::size_t p = after;
    while (p < code.size() && std::isspace(static_cast<unsigned char>(code[p]))) ++p;
    if (p >= code.size() || code[p] != '(') {
      pos = after;
      continue;
    }
    int depth = 0;
    std::size_t q = p;
    for (; q < code.size(); ++q) {
      if (code[q] == '(') ++depth;
      if (code[q] == ')' && --depth == 0) break;
    }
    hits.push_back({pos, code.substr(pos, q + 1 - pos)});
    pos = q;
  }
  return hits;
}

inline bool mentions_word(std::string_view text, std::string_view word) {
  std::size_t pos = 0;
  while ((pos = text.find(word, pos)) != std::string_view::npos) {
    bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
    std::size_t after = pos + word.size();
    bool right_ok = after >= text.size() || !is_word_char(text[after]);
    if (left_ok && right_ok) return true;
    pos = after;
  }
  return false;
}

/// require statements whose condition text mentions `param` as a whole word.
/// `param` must be uniquely named across the scanned region for this to be a
/// faithful guard count; fixtures using it are authored that way.
inline std::vector<ScanHit> scan_requires_mentioning(std::string_view src, std::string_view param) {
  std::vector<ScanHit> out;
  for (auto& hit : find_call_statements(src, "require")) {
    if (mentions_word(hit.text, param)) out.push_back(hit);
  }
  return out;
}

/// emit statements for a given event name.
inline std::size_t scan_emits_of(std::string_view src, std::string_view event_name) {
  std::string code = blank_comments_and_strings(src);
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = code.find("emit", pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(code[pos - 1]);
    std::size_t after = pos + 4;
    if (!left_ok || after >= code.size() || is_word_char(code[after])) {
      pos = after;
      continue;
    }
    std::size_t p = after;
    while (p < code.size() && std::isspace(static_cast<unsigned char>(code[p]))) ++p;
    if (code.compare(p, event_name.size(), event_name) == 0) {
      std::size_t q = p + event_name.size();
      if (q < code.size() && !is_word_char(code[q])) ++count;
    }
    pos = after;
  }
  return count;
}

/// Assignment statements whose left-hand side starts with `var` (index and
/// member paths included; compound operators included).
inline std::size_t scan_writes_to(std::string_view src, std::string_view var) {
  std::string code = blank_comments_and_strings(src);
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = code.find(var, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(code[pos - 1]);
    std::size_t after = pos + var.size();
    bool right_ok = after >= code.size() || !is_word_char(code[after]);
    if (!left_ok || !right_ok) {
      pos = after;
      continue;
    }
    // Walk past [..] and .member chains.
    std::size_t p = after;
    while (p < code.size()) {
      while (p < code.size() && std::isspace(static_cast<unsigned char>(code[p]))) ++p;
      if (p < code.size() && code[p] == '[') {
        int depth = 0;
        while (p < code.size()) {
          if (code[p] == '[') ++depth;
          if (code[p] == ']' && --depth == 0) {
            ++p;
            break;
          }
          ++p;
        }
      } else if (p < code.size() && code[p] == '.') {
        ++p;
        while (p < code.size() && is_word_char(code[p])) ++p;
      } else {
        break;
      }
    }
    while (p < code.size() && std::isspace(static_cast<unsigned char>(code[p]))) ++p;
    // Assignment operator but not == / => / >= / <=.
    static const char* ops[] = {"+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<=", ">>="};
    bool assigned = false;
    for (const char* op : ops) {
      if (code.compare(p, std::string_view(op).size(), op) == 0) assigned = true;
    }
    if (!assigned && p < code.size() && code[p] == '=' &&
        (p + 1 >= code.size() || (code[p + 1] != '=' && code[p + 1] != '>'))) {
      assigned = true;
    }
    if (assigned) ++count;
    pos = after;
  }
  return count;
}

}  // namespace testsupport
