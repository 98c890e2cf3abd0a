// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ercbench {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input that the grammar rejects. Carries position info.
class ParseError : public Error {
 public:
  ParseError(std::string msg, int line, int column, std::string expected = {})
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              msg + (expected.empty() ? "" : " (expected " + expected + ")")),
        line(line),
        column(column),
        expected(std::move(expected)) {}
  int line;
  int column;
  std::string expected;
};

/// Input uses a construct outside the supported language subset.
class UnsupportedConstructError : public Error {
 public:
  UnsupportedConstructError(std::string construct, int line)
      : Error("unsupported construct at line " + std::to_string(line) + ": " + construct),
        construct(std::move(construct)),
        line(line) {}
  std::string construct;
  int line;
};

class UnknownContractError : public Error {
 public:
  explicit UnknownContractError(const std::string& name) : Error("unknown contract: " + name) {}
};

class UnresolvedBaseError : public Error {
 public:
  explicit UnresolvedBaseError(const std::string& name) : Error("unresolved base: " + name) {}
};

class UnknownFunctionError : public Error {
 public:
  explicit UnknownFunctionError(const std::string& sig) : Error("unknown function: " + sig) {}
};

class UnknownParamError : public Error {
 public:
  UnknownParamError(const std::string& fn, const std::string& param)
      : Error("function " + fn + " has no parameter " + param) {}
};

class UnresolvableGetterError : public Error {
 public:
  explicit UnresolvableGetterError(const std::string& why) : Error("unresolvable getter: " + why) {}
};

class NotAnErcContractError : public Error {
 public:
  explicit NotAnErcContractError(const std::string& name)
      : Error("contract " + name + " is not recognized as an ERC contract") {}
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& why)
      : Error("catalog schema error at '" + field + "': " + why) {}
};

class CountMismatchError : public Error {
 public:
  explicit CountMismatchError(const std::string& why) : Error("catalog count mismatch: " + why) {}
};

class NotApplicableError : public Error {
 public:
  explicit NotApplicableError(const std::string& why) : Error("rule not applicable: " + why) {}
};

class HookUnavailableError : public Error {
 public:
  explicit HookUnavailableError(const std::string& why) : Error("compiler hook unavailable: " + why) {}
};

class NotVerifiedError : public Error {
 public:
  explicit NotVerifiedError(const std::string& address)
      : Error("no verified source for address " + address) {}
};

class RateLimitedError : public Error {
 public:
  explicit RateLimitedError(const std::string& why) : Error("rate limited: " + why) {}
};

class MultiFileError : public Error {
 public:
  explicit MultiFileError(const std::string& address)
      : Error("address " + address + " resolves to a multi-file source bundle") {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& why) : Error(why) {}
};

class UnknownErcError : public Error {
 public:
  explicit UnknownErcError(const std::string& why) : Error("unknown ERC: " + why) {}
};

class AuthError : public Error {
 public:
  explicit AuthError(const std::string& why) : Error("authentication failed: " + why) {}
};

class ServiceError : public Error {
 public:
  explicit ServiceError(const std::string& why) : Error("service error: " + why) {}
};

class SizeError : public Error {
 public:
  explicit SizeError(const std::string& why) : Error("prompt size error: " + why) {}
};

class TemplateError : public Error {
 public:
  explicit TemplateError(const std::string& why) : Error("template error: " + why) {}
};

}  // namespace ercbench
