// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ercbench/errors.hpp"

namespace ercbench {

struct Token {
  enum class Kind { Identifier, Keyword, Number, StringLit, HexStringLit, Punct, End };
  Kind kind = Kind::End;
  std::string_view text;
  std::size_t start = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;

  bool is(Kind k) const { return kind == k; }
  bool is(Kind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return kind == Kind::Punct && text == t; }
  bool is_keyword(std::string_view t) const { return kind == Kind::Keyword && text == t; }
};

namespace detail {

inline const std::unordered_set<std::string_view>& solidity_keywords() {
  static const std::unordered_set<std::string_view> kw = {
      "pragma",      "import",    "contract",  "interface", "library",  "abstract",
      "is",          "function",  "modifier",  "event",     "error",    "struct",
      "enum",        "mapping",   "using",     "for",       "public",   "private",
      "internal",    "external",  "pure",      "view",      "payable",  "constant",
      "immutable",   "virtual",   "override",  "returns",   "return",   "if",
      "else",        "while",     "do",        "break",     "continue", "throw",
      "emit",        "require",   "revert",    "assert",    "new",      "delete",
      "true",        "false",     "constructor", "fallback", "receive", "memory",
      "storage",     "calldata",  "indexed",   "anonymous", "unchecked", "try",
      "catch",       "assembly",  "type",      "address",   "bool",     "string",
      "bytes",       "byte",      "int",       "uint",      "fixed",    "ufixed",
      "wei",         "gwei",      "ether",     "seconds",   "minutes",  "hours",
      "days",        "weeks",     "super",     "this",
  };
  return kw;
}

inline bool is_elementary_type_name(std::string_view t) {
  if (t == "address" || t == "bool" || t == "string" || t == "bytes" || t == "byte") return true;
  auto sized = [&](std::string_view prefix) {
    if (t.size() <= prefix.size() || t.substr(0, prefix.size()) != prefix) return false;
    for (char c : t.substr(prefix.size()))
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  return t == "uint" || t == "int" || sized("uint") || sized("int") || sized("bytes");
}

}  // namespace detail

/// Tokenize Solidity source. Comments are skipped; inline assembly and other
/// unsupported constructs are detected later by the parser from keywords.
inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  std::size_t line_start = 0;

  auto column = [&](std::size_t pos) { return static_cast<int>(pos - line_start) + 1; };
  auto push = [&](Token::Kind kind, std::size_t start, std::size_t end) {
    out.push_back(
        {kind, src.substr(start, end - start), start, end, line, column(start)});
  };

  while (i < src.size()) {
    char c = src[i];
    char n = i + 1 < src.size() ? src[i + 1] : '\0';

    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && n == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && n == '*') {
      std::size_t start_line_no = static_cast<std::size_t>(line);
      i += 2;
      while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) {
        if (src[i] == '\n') {
          ++line;
          line_start = i + 1;
        }
        ++i;
      }
      if (i + 1 >= src.size())
        throw ParseError("unterminated block comment", static_cast<int>(start_line_no), 1);
      i += 2;
      continue;
    }
    if (c == '"' || c == '\'') {
      std::size_t start = i;
      char quote = c;
      ++i;
      while (i < src.size() && src[i] != quote) {
        if (src[i] == '\\') ++i;
        if (src[i] == '\n') throw ParseError("unterminated string literal", line, column(start));
        ++i;
      }
      if (i >= src.size()) throw ParseError("unterminated string literal", line, column(start));
      ++i;
      push(Token::Kind::StringLit, start, i);
      continue;
    }
    if ((c == 'h' && src.substr(i, 4) == "hex\"") || (c == 'h' && src.substr(i, 4) == "hex'")) {
      std::size_t start = i;
      char quote = src[i + 3];
      i += 4;
      while (i < src.size() && src[i] != quote) ++i;
      if (i >= src.size()) throw ParseError("unterminated hex string", line, column(start));
      ++i;
      push(Token::Kind::HexStringLit, start, i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      if (c == '0' && (n == 'x' || n == 'X')) {
        i += 2;
        while (i < src.size() &&
               (std::isxdigit(static_cast<unsigned char>(src[i])) || src[i] == '_'))
          ++i;
      } else {
        while (i < src.size() &&
               (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '_'))
          ++i;
        if (i < src.size() && src[i] == '.') {
          ++i;
          while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        }
        if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
          ++i;
          if (i < src.size() && (src[i] == '+' || src[i] == '-')) ++i;
          while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        }
      }
      push(Token::Kind::Number, start, i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_' || src[i] == '$'))
        ++i;
      std::string_view word = src.substr(start, i - start);
      bool kw = detail::solidity_keywords().count(word) > 0 ||
                detail::is_elementary_type_name(word);
      push(kw ? Token::Kind::Keyword : Token::Kind::Identifier, start, i);
      continue;
    }

    // Punctuation, longest match first.
    static const std::string_view three[] = {"<<=", ">>=", "**="};
    static const std::string_view two[] = {"=>", "==", "!=", "<=", ">=", "&&", "||", "+=",
                                           "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<",
                                           ">>", "++", "--", "**", "->"};
    std::string_view rest = src.substr(i);
    std::size_t len = 1;
    for (auto t : three)
      if (rest.substr(0, 3) == t) len = 3;
    if (len == 1)
      for (auto t : two)
        if (rest.substr(0, 2) == t) len = 2;
    static const std::string_view singles = "{}()[];,.?:=+-*/%<>!&|^~";
    if (len == 1 && singles.find(c) == std::string_view::npos)
      throw ParseError(std::string("unexpected character '") + c + "'", line, column(i));
    push(Token::Kind::Punct, i, i + len);
    i += len;
  }
  out.push_back({Token::Kind::End, {}, src.size(), src.size(), line, column(src.size())});
  return out;
}

}  // namespace ercbench
