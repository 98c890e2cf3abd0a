// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ercbench/source.hpp"

namespace ercbench {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

struct TypeName {
  enum class Kind { Elementary, Named, Mapping, Array };
  Kind kind = Kind::Elementary;
  // Elementary/Named: the type text ("uint256", "IERC20").
  // Array: element type in `key`/`value` unused; uses `elem` + `length_text`.
  std::string text;
  std::unique_ptr<TypeName> key;    // mapping key
  std::unique_ptr<TypeName> value;  // mapping value
  std::unique_ptr<TypeName> elem;   // array element
  std::string length_text;          // array length expression, verbatim ("" if dynamic)
  SourceSpan span;

  TypeName() = default;
  TypeName(Kind k, std::string t) : kind(k), text(std::move(t)) {}
  TypeName(const TypeName& other) { *this = other; }
  TypeName& operator=(const TypeName& other) {
    kind = other.kind;
    text = other.text;
    length_text = other.length_text;
    span = other.span;
    key = other.key ? std::make_unique<TypeName>(*other.key) : nullptr;
    value = other.value ? std::make_unique<TypeName>(*other.value) : nullptr;
    elem = other.elem ? std::make_unique<TypeName>(*other.elem) : nullptr;
    return *this;
  }
  TypeName(TypeName&&) = default;
  TypeName& operator=(TypeName&&) = default;

  /// Canonical form used for signature comparison: uint -> uint256,
  /// int -> int256, byte -> bytes1; mappings/arrays recurse.
  std::string normalized() const {
    switch (kind) {
      case Kind::Elementary: {
        if (text == "uint") return "uint256";
        if (text == "int") return "int256";
        if (text == "byte") return "bytes1";
        if (text == "address payable") return "address";
        return text;
      }
      case Kind::Named:
        return text;
      case Kind::Mapping:
        return "mapping(" + key->normalized() + "=>" + value->normalized() + ")";
      case Kind::Array:
        return elem->normalized() + "[" + length_text + "]";
    }
    return text;
  }

  /// Source form (mapping/array reassembled; used by the pretty printer).
  std::string source_text() const {
    switch (kind) {
      case Kind::Elementary:
      case Kind::Named:
        return text;
      case Kind::Mapping:
        return "mapping(" + key->source_text() + " => " + value->source_text() + ")";
      case Kind::Array:
        return elem->source_text() + "[" + length_text + "]";
    }
    return text;
  }
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Identifier {
  std::string name;
};

struct Literal {
  enum class Kind { Number, Bool, Address, String, HexString };
  Kind kind = Kind::Number;
  std::string text;  // verbatim, including quotes for strings
};

/// An elementary type used in expression position: address(0), uint160(x),
/// payable(a), type(uint256).
struct ElementaryTypeExpr {
  std::string name;
};

struct MemberAccess {
  ExprPtr object;
  std::string member;
};

struct IndexAccess {
  ExprPtr object;
  ExprPtr index;  // null for empty index in type contexts
};

struct CallExpr {
  ExprPtr callee;
  std::vector<Expr> args;
};

struct BinaryExpr {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct UnaryExpr {
  std::string op;
  bool prefix = true;
  ExprPtr operand;
};

struct AssignExpr {
  std::string op;  // "=", "+=", ...
  ExprPtr lhs;
  ExprPtr rhs;
};

struct ConditionalExpr {
  ExprPtr cond;
  ExprPtr then_value;
  ExprPtr else_value;
};

/// Parenthesized expression or tuple; empty slots allowed on assignment LHS.
struct TupleExpr {
  std::vector<std::optional<Expr>> elems;
  bool is_parens_only = false;  // single element, plain parentheses
};

struct NewExpr {
  TypeName type;
};

struct Expr {
  SourceSpan span;
  std::variant<Identifier, Literal, ElementaryTypeExpr, MemberAccess, IndexAccess, CallExpr,
               BinaryExpr, UnaryExpr, AssignExpr, ConditionalExpr, TupleExpr, NewExpr>
      node;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
  template <typename T>
  T& as() {
    return std::get<T>(node);
  }
};

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
  std::vector<Stmt> statements;
  bool unchecked = false;
};

struct IfStmt {
  Expr condition;
  StmtPtr then_branch;
  StmtPtr else_branch;  // may be null
};

struct ForStmt {
  StmtPtr init;              // VarDeclStmt, ExprStmt, or null
  std::optional<Expr> cond;  // may be absent
  std::optional<Expr> post;  // may be absent
  StmtPtr body;
};

struct WhileStmt {
  Expr condition;
  StmtPtr body;
};

struct ReturnStmt {
  std::optional<Expr> value;
};

/// emit EventName(args);
struct EmitStmt {
  Expr event_call;  // a CallExpr; event name is the callee path tail

  std::string event_name() const;
};

/// require(condition) / require(condition, message) in either surface form.
struct RequireStmt {
  Expr condition;
  std::optional<Expr> message;
};

/// revert(), revert("why"), revert CustomError(args).
struct RevertStmt {
  std::optional<std::string> error_name;  // custom-error form
  std::vector<Expr> args;
};

struct VarDeclStmt {
  struct Decl {
    TypeName type;
    std::string name;
    std::string location;  // "", memory, storage, calldata
  };
  std::vector<std::optional<Decl>> decls;  // >1 or empty slots only in tuple form
  bool tuple_form = false;
  std::optional<Expr> init;
};

struct ExprStmt {
  Expr expr;
};

struct BreakStmt {};
struct ContinueStmt {};

/// The `_;` placeholder inside a modifier body.
struct PlaceholderStmt {};

struct Stmt {
  SourceSpan span;
  std::variant<Block, IfStmt, ForStmt, WhileStmt, ReturnStmt, EmitStmt, RequireStmt, RevertStmt,
               VarDeclStmt, ExprStmt, BreakStmt, ContinueStmt, PlaceholderStmt>
      node;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
  template <typename T>
  T& as() {
    return std::get<T>(node);
  }
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct ParamDecl {
  TypeName type;
  std::string name;      // may be empty (unnamed returns, event params)
  std::string location;  // "", memory, storage, calldata
  bool indexed = false;  // event params
  SourceSpan span;
};

struct ModifierInvocation {
  std::string name;
  std::vector<Expr> args;
  bool has_parens = false;
  SourceSpan span;
};

struct FunctionDef {
  enum class Kind { Function, Constructor, Fallback, Receive };
  Kind kind = Kind::Function;
  std::string name;  // empty for constructor/fallback/receive
  std::vector<ParamDecl> params;
  std::vector<ParamDecl> returns;
  std::string visibility;  // public|external|internal|private|"" (default)
  std::string mutability;  // view|pure|payable|"" (nonpayable)
  bool is_virtual = false;
  bool has_override = false;
  std::vector<std::string> override_bases;
  std::vector<ModifierInvocation> modifiers;
  std::optional<Stmt> body;  // Block; absent for abstract/interface declarations
  SourceSpan span;           // declaration through closing brace or semicolon
  SourceSpan header_span;    // declaration up to (not including) the body block

  bool is_public_or_external() const {
    return visibility == "public" || visibility == "external" || visibility.empty();
  }
};

struct StateVarDecl {
  TypeName type;
  std::string name;
  std::string visibility;  // public|internal|private|""
  bool is_constant = false;
  bool is_immutable = false;
  std::optional<Expr> initializer;
  SourceSpan span;
};

struct EventDef {
  std::string name;
  std::vector<ParamDecl> params;
  bool anonymous = false;
  SourceSpan span;
};

struct ErrorDef {
  std::string name;
  std::vector<ParamDecl> params;
  SourceSpan span;
};

struct ModifierDef {
  std::string name;
  std::vector<ParamDecl> params;
  bool is_virtual = false;
  bool has_override = false;
  std::optional<Stmt> body;  // Block containing PlaceholderStmt
  SourceSpan span;
};

struct StructDef {
  std::string name;
  std::vector<ParamDecl> members;
  SourceSpan span;
};

struct EnumDef {
  std::string name;
  std::vector<std::string> values;
  SourceSpan span;
};

struct UsingDirective {
  std::string library;
  std::string target;  // type text or "*"
  SourceSpan span;
};

struct BaseSpec {
  std::string name;
  std::string args_text;  // verbatim constructor arguments, "" if none
  SourceSpan span;
};

struct ContractDef {
  enum class Flavor { Contract, Interface, Library };
  Flavor flavor = Flavor::Contract;
  bool is_abstract = false;
  std::string name;
  std::vector<BaseSpec> bases;
  std::vector<StateVarDecl> state_vars;
  std::vector<FunctionDef> functions;
  std::vector<EventDef> events;
  std::vector<ErrorDef> errors;
  std::vector<ModifierDef> modifiers;
  std::vector<StructDef> structs;
  std::vector<EnumDef> enums;
  std::vector<UsingDirective> usings;
  SourceSpan span;
};

/// pragma or import line, kept verbatim.
struct Directive {
  std::string text;
  SourceSpan span;
};

struct SourceUnit {
  std::string file_id;
  std::vector<Directive> directives;
  std::vector<ContractDef> contracts;
  std::vector<StateVarDecl> constants;  // file-level constants
  /// Original text; spans index into it. Shared so views stay valid cheaply.
  std::shared_ptr<const std::string> source;

  std::string_view text() const { return source ? std::string_view(*source) : std::string_view(); }
};

inline std::string EmitStmt::event_name() const {
  const Expr* callee = nullptr;
  if (event_call.is<CallExpr>()) callee = event_call.as<CallExpr>().callee.get();
  while (callee != nullptr) {
    if (callee->is<Identifier>()) return callee->as<Identifier>().name;
    if (callee->is<MemberAccess>()) return callee->as<MemberAccess>().member;
    break;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Traversal helpers
// ---------------------------------------------------------------------------

/// Invoke fn on every expression in the tree rooted at e (including e).
template <typename F>
void walk_expr(const Expr& e, F&& fn) {
  fn(e);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, MemberAccess>) {
          if (n.object) walk_expr(*n.object, fn);
        } else if constexpr (std::is_same_v<T, IndexAccess>) {
          if (n.object) walk_expr(*n.object, fn);
          if (n.index) walk_expr(*n.index, fn);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (n.callee) walk_expr(*n.callee, fn);
          for (const auto& a : n.args) walk_expr(a, fn);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          walk_expr(*n.lhs, fn);
          walk_expr(*n.rhs, fn);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          walk_expr(*n.operand, fn);
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          walk_expr(*n.lhs, fn);
          walk_expr(*n.rhs, fn);
        } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
          walk_expr(*n.cond, fn);
          walk_expr(*n.then_value, fn);
          walk_expr(*n.else_value, fn);
        } else if constexpr (std::is_same_v<T, TupleExpr>) {
          for (const auto& el : n.elems)
            if (el) walk_expr(*el, fn);
        }
      },
      e.node);
}

/// Invoke fn on every statement in the tree rooted at s (including s),
/// outermost first.
template <typename F>
void walk_stmt(const Stmt& s, F&& fn) {
  fn(s);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Block>) {
          for (const auto& st : n.statements) walk_stmt(st, fn);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          if (n.then_branch) walk_stmt(*n.then_branch, fn);
          if (n.else_branch) walk_stmt(*n.else_branch, fn);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          if (n.init) walk_stmt(*n.init, fn);
          if (n.body) walk_stmt(*n.body, fn);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          if (n.body) walk_stmt(*n.body, fn);
        }
      },
      s.node);
}

/// Invoke fn on every expression appearing anywhere under statement s.
template <typename F>
void walk_stmt_exprs(const Stmt& s, F&& fn) {
  walk_stmt(s, [&](const Stmt& st) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IfStmt> || std::is_same_v<T, WhileStmt>) {
            walk_expr(n.condition, fn);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (n.cond) walk_expr(*n.cond, fn);
            if (n.post) walk_expr(*n.post, fn);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (n.value) walk_expr(*n.value, fn);
          } else if constexpr (std::is_same_v<T, EmitStmt>) {
            walk_expr(n.event_call, fn);
          } else if constexpr (std::is_same_v<T, RequireStmt>) {
            walk_expr(n.condition, fn);
            if (n.message) walk_expr(*n.message, fn);
          } else if constexpr (std::is_same_v<T, RevertStmt>) {
            for (const auto& a : n.args) walk_expr(a, fn);
          } else if constexpr (std::is_same_v<T, VarDeclStmt>) {
            if (n.init) walk_expr(*n.init, fn);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            walk_expr(n.expr, fn);
          }
        },
        st.node);
  });
}

}  // namespace ercbench
