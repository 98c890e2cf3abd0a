// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ercbench/ast.hpp"
#include "ercbench/errors.hpp"
#include "ercbench/lexer.hpp"

namespace ercbench {

// Recursive-descent parser for the token-contract subset of Solidity.
// Out-of-subset constructs (inline assembly, try/catch, user-defined value
// types, do-while, function-typed values) raise UnsupportedConstructError
// rather than being guessed at.
class Parser {
 public:
  Parser(std::string_view src, std::string file_id)
      : src_(src), file_id_(std::move(file_id)), tokens_(lex(src)) {}

  SourceUnit parse_unit() {
    SourceUnit unit;
    unit.file_id = file_id_;
    unit.source = std::make_shared<const std::string>(src_);
    while (!at_end()) {
      const Token& t = peek();
      if (t.is_keyword("pragma") || t.is_keyword("import")) {
        unit.directives.push_back(parse_directive());
      } else if (t.is_keyword("contract") || t.is_keyword("interface") ||
                 t.is_keyword("library") || t.is_keyword("abstract")) {
        unit.contracts.push_back(parse_contract());
      } else if (t.is_keyword("type")) {
        throw UnsupportedConstructError("user-defined value type", t.line);
      } else if (t.is_keyword("using") || t.is_keyword("function") || t.is_keyword("error") ||
                 t.is_keyword("struct") || t.is_keyword("enum") || t.is_keyword("event")) {
        throw UnsupportedConstructError("file-level " + std::string(t.text), t.line);
      } else {
        unit.constants.push_back(parse_state_var());
      }
    }
    return unit;
  }

 private:
  std::string_view src_;
  std::string file_id_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  // --- token plumbing -----------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  bool match_punct(std::string_view p) {
    if (peek().is_punct(p)) {
      advance();
      return true;
    }
    return false;
  }
  bool match_keyword(std::string_view k) {
    if (peek().is_keyword(k)) {
      advance();
      return true;
    }
    return false;
  }
  const Token& expect_punct(std::string_view p) {
    if (!peek().is_punct(p))
      fail("unexpected token '" + std::string(peek().text) + "'", std::string(p));
    return advance();
  }
  const Token& expect_keyword(std::string_view k) {
    if (!peek().is_keyword(k))
      fail("unexpected token '" + std::string(peek().text) + "'", std::string(k));
    return advance();
  }
  std::string expect_identifier() {
    if (peek().kind != Token::Kind::Identifier)
      fail("expected identifier, got '" + std::string(peek().text) + "'", "identifier");
    return std::string(advance().text);
  }

  [[noreturn]] void fail(const std::string& msg, std::string expected = {}) const {
    const Token& t = peek();
    throw ParseError(msg, t.line, t.column, std::move(expected));
  }

  SourceSpan span_from(std::size_t first_tok) const {
    const Token& a = tokens_[first_tok];
    const Token& b = tokens_[pos_ == 0 ? 0 : pos_ - 1];
    SourceSpan s;
    s.file_id = file_id_;
    s.start = a.start;
    s.end = b.end;
    s.start_line = a.line;
    s.end_line = b.line;
    return s;
  }

  // --- directives and contracts --------------------------------------------

  Directive parse_directive() {
    std::size_t first = pos_;
    advance();  // pragma | import
    while (!at_end() && !peek().is_punct(";")) advance();
    expect_punct(";");
    SourceSpan s = span_from(first);
    return {std::string(slice(src_, s)), s};
  }

  ContractDef parse_contract() {
    std::size_t first = pos_;
    ContractDef c;
    c.is_abstract = match_keyword("abstract");
    if (match_keyword("contract")) {
      c.flavor = ContractDef::Flavor::Contract;
    } else if (match_keyword("interface")) {
      c.flavor = ContractDef::Flavor::Interface;
    } else if (match_keyword("library")) {
      c.flavor = ContractDef::Flavor::Library;
    } else {
      fail("expected contract, interface, or library");
    }
    c.name = expect_identifier();
    if (match_keyword("is")) {
      do {
        c.bases.push_back(parse_base_spec());
      } while (match_punct(","));
    }
    expect_punct("{");
    while (!peek().is_punct("}")) {
      if (at_end()) fail("unterminated contract body", "}");
      parse_member(c);
    }
    expect_punct("}");
    c.span = span_from(first);
    return c;
  }

  BaseSpec parse_base_spec() {
    std::size_t first = pos_;
    BaseSpec b;
    b.name = expect_identifier();
    while (match_punct(".")) b.name += "." + expect_identifier();
    if (peek().is_punct("(")) {
      std::size_t args_first = pos_;
      skip_balanced("(", ")");
      SourceSpan args = span_from(args_first);
      b.args_text = std::string(slice(src_, args));
    }
    b.span = span_from(first);
    return b;
  }

  void skip_balanced(std::string_view open, std::string_view close) {
    expect_punct(open);
    int depth = 1;
    while (depth > 0) {
      if (at_end()) fail("unterminated " + std::string(open));
      if (peek().is_punct(open)) ++depth;
      if (peek().is_punct(close)) --depth;
      advance();
    }
  }

  void parse_member(ContractDef& c) {
    const Token& t = peek();
    if (t.is_keyword("function") || t.is_keyword("constructor") || t.is_keyword("fallback") ||
        t.is_keyword("receive")) {
      c.functions.push_back(parse_function());
    } else if (t.is_keyword("modifier")) {
      c.modifiers.push_back(parse_modifier());
    } else if (t.is_keyword("event")) {
      c.events.push_back(parse_event());
    } else if (t.is_keyword("error")) {
      c.errors.push_back(parse_error_def());
    } else if (t.is_keyword("struct")) {
      c.structs.push_back(parse_struct());
    } else if (t.is_keyword("enum")) {
      c.enums.push_back(parse_enum());
    } else if (t.is_keyword("using")) {
      c.usings.push_back(parse_using());
    } else if (t.is_keyword("type")) {
      throw UnsupportedConstructError("user-defined value type", t.line);
    } else if (t.is_keyword("assembly")) {
      throw UnsupportedConstructError("inline assembly", t.line);
    } else {
      c.state_vars.push_back(parse_state_var());
    }
  }

  // --- declarations ---------------------------------------------------------

  bool peek_starts_type() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Keyword &&
        (detail::is_elementary_type_name(t.text) || t.text == "mapping")) {
      return true;
    }
    return t.kind == Token::Kind::Identifier;
  }

  TypeName parse_type() {
    std::size_t first = pos_;
    TypeName t;
    const Token& tok = peek();
    if (tok.is_keyword("mapping")) {
      advance();
      expect_punct("(");
      t.kind = TypeName::Kind::Mapping;
      t.key = std::make_unique<TypeName>(parse_type());
      expect_punct("=>");
      t.value = std::make_unique<TypeName>(parse_type());
      expect_punct(")");
    } else if (tok.is_keyword("function")) {
      throw UnsupportedConstructError("function type", tok.line);
    } else if (tok.kind == Token::Kind::Keyword && detail::is_elementary_type_name(tok.text)) {
      t.kind = TypeName::Kind::Elementary;
      t.text = std::string(advance().text);
      if (t.text == "address" && peek().is_keyword("payable")) {
        advance();
        t.text = "address payable";
      }
    } else if (tok.kind == Token::Kind::Identifier) {
      t.kind = TypeName::Kind::Named;
      t.text = std::string(advance().text);
      while (peek().is_punct(".") && peek(1).kind == Token::Kind::Identifier) {
        advance();
        t.text += "." + expect_identifier();
      }
    } else {
      fail("expected type name", "type");
    }
    // Array suffixes.
    while (peek().is_punct("[")) {
      advance();
      TypeName arr;
      arr.kind = TypeName::Kind::Array;
      arr.elem = std::make_unique<TypeName>(std::move(t));
      if (!peek().is_punct("]")) {
        std::size_t len_first = pos_;
        int depth = 1;
        while (depth > 0) {
          if (at_end()) fail("unterminated array length", "]");
          if (peek().is_punct("[")) ++depth;
          if (peek().is_punct("]")) --depth;
          if (depth > 0) advance();
        }
        arr.length_text = std::string(slice(src_, span_from(len_first)));
      }
      expect_punct("]");
      t = std::move(arr);
    }
    t.span = span_from(first);
    return t;
  }

  static bool is_location_keyword(const Token& t) {
    return t.is_keyword("memory") || t.is_keyword("storage") || t.is_keyword("calldata");
  }

  ParamDecl parse_param(bool allow_indexed) {
    std::size_t first = pos_;
    ParamDecl p;
    p.type = parse_type();
    for (;;) {
      if (allow_indexed && peek().is_keyword("indexed")) {
        advance();
        p.indexed = true;
      } else if (is_location_keyword(peek())) {
        p.location = std::string(advance().text);
      } else {
        break;
      }
    }
    if (peek().kind == Token::Kind::Identifier) p.name = expect_identifier();
    p.span = span_from(first);
    return p;
  }

  std::vector<ParamDecl> parse_param_list(bool allow_indexed = false) {
    std::vector<ParamDecl> params;
    expect_punct("(");
    if (!peek().is_punct(")")) {
      do {
        params.push_back(parse_param(allow_indexed));
      } while (match_punct(","));
    }
    expect_punct(")");
    return params;
  }

  FunctionDef parse_function() {
    std::size_t first = pos_;
    FunctionDef f;
    if (match_keyword("constructor")) {
      f.kind = FunctionDef::Kind::Constructor;
    } else if (match_keyword("fallback")) {
      f.kind = FunctionDef::Kind::Fallback;
    } else if (match_keyword("receive")) {
      f.kind = FunctionDef::Kind::Receive;
    } else {
      expect_keyword("function");
      f.kind = FunctionDef::Kind::Function;
      f.name = expect_identifier();
    }
    f.params = parse_param_list();

    // Attributes in any order: visibility, mutability, virtual, override,
    // modifier invocations, returns.
    for (;;) {
      const Token& t = peek();
      if (t.is_keyword("public") || t.is_keyword("external") || t.is_keyword("internal") ||
          t.is_keyword("private")) {
        f.visibility = std::string(advance().text);
      } else if (t.is_keyword("view") || t.is_keyword("pure") || t.is_keyword("payable")) {
        f.mutability = std::string(advance().text);
      } else if (t.is_keyword("constant")) {
        advance();
        f.mutability = "view";  // pre-0.5 spelling
      } else if (t.is_keyword("virtual")) {
        advance();
        f.is_virtual = true;
      } else if (t.is_keyword("override")) {
        advance();
        f.has_override = true;
        if (peek().is_punct("(")) {
          advance();
          if (!peek().is_punct(")")) {
            do {
              f.override_bases.push_back(expect_identifier());
            } while (match_punct(","));
          }
          expect_punct(")");
        }
      } else if (t.is_keyword("returns")) {
        advance();
        f.returns = parse_param_list();
      } else if (t.kind == Token::Kind::Identifier) {
        ModifierInvocation mi;
        std::size_t mi_first = pos_;
        mi.name = expect_identifier();
        if (peek().is_punct("(")) {
          mi.has_parens = true;
          advance();
          if (!peek().is_punct(")")) {
            do {
              mi.args.push_back(parse_expression());
            } while (match_punct(","));
          }
          expect_punct(")");
        }
        mi.span = span_from(mi_first);
        f.modifiers.push_back(std::move(mi));
      } else {
        break;
      }
    }

    f.header_span = span_from(first);
    if (match_punct(";")) {
      f.span = span_from(first);
      return f;
    }
    f.body = parse_block();
    f.span = span_from(first);
    return f;
  }

  ModifierDef parse_modifier() {
    std::size_t first = pos_;
    ModifierDef m;
    expect_keyword("modifier");
    m.name = expect_identifier();
    if (peek().is_punct("(")) m.params = parse_param_list();
    for (;;) {
      if (match_keyword("virtual")) {
        m.is_virtual = true;
      } else if (match_keyword("override")) {
        m.has_override = true;
      } else {
        break;
      }
    }
    if (!match_punct(";")) m.body = parse_block();
    m.span = span_from(first);
    return m;
  }

  EventDef parse_event() {
    std::size_t first = pos_;
    EventDef e;
    expect_keyword("event");
    e.name = expect_identifier();
    e.params = parse_param_list(/*allow_indexed=*/true);
    e.anonymous = match_keyword("anonymous");
    expect_punct(";");
    e.span = span_from(first);
    return e;
  }

  ErrorDef parse_error_def() {
    std::size_t first = pos_;
    ErrorDef e;
    expect_keyword("error");
    e.name = expect_identifier();
    e.params = parse_param_list();
    expect_punct(";");
    e.span = span_from(first);
    return e;
  }

  StructDef parse_struct() {
    std::size_t first = pos_;
    StructDef s;
    expect_keyword("struct");
    s.name = expect_identifier();
    expect_punct("{");
    while (!peek().is_punct("}")) {
      ParamDecl m;
      std::size_t m_first = pos_;
      m.type = parse_type();
      m.name = expect_identifier();
      expect_punct(";");
      m.span = span_from(m_first);
      s.members.push_back(std::move(m));
    }
    expect_punct("}");
    s.span = span_from(first);
    return s;
  }

  EnumDef parse_enum() {
    std::size_t first = pos_;
    EnumDef e;
    expect_keyword("enum");
    e.name = expect_identifier();
    expect_punct("{");
    if (!peek().is_punct("}")) {
      do {
        e.values.push_back(expect_identifier());
      } while (match_punct(","));
    }
    expect_punct("}");
    e.span = span_from(first);
    return e;
  }

  UsingDirective parse_using() {
    std::size_t first = pos_;
    UsingDirective u;
    expect_keyword("using");
    u.library = expect_identifier();
    while (match_punct(".")) u.library += "." + expect_identifier();
    expect_keyword("for");
    if (match_punct("*")) {
      u.target = "*";
    } else {
      u.target = parse_type().source_text();
    }
    expect_punct(";");
    u.span = span_from(first);
    return u;
  }

  StateVarDecl parse_state_var() {
    std::size_t first = pos_;
    StateVarDecl v;
    v.type = parse_type();
    for (;;) {
      const Token& t = peek();
      if (t.is_keyword("public") || t.is_keyword("internal") || t.is_keyword("private")) {
        v.visibility = std::string(advance().text);
      } else if (t.is_keyword("constant")) {
        advance();
        v.is_constant = true;
      } else if (t.is_keyword("immutable")) {
        advance();
        v.is_immutable = true;
      } else if (t.is_keyword("override")) {
        advance();
      } else {
        break;
      }
    }
    v.name = expect_identifier();
    if (match_punct("=")) v.initializer = parse_expression();
    expect_punct(";");
    v.span = span_from(first);
    return v;
  }

  // --- statements -----------------------------------------------------------

  Stmt parse_block() {
    std::size_t first = pos_;
    expect_punct("{");
    Block b;
    while (!peek().is_punct("}")) {
      if (at_end()) fail("unterminated block", "}");
      b.statements.push_back(parse_statement());
    }
    expect_punct("}");
    Stmt s;
    s.node = std::move(b);
    s.span = span_from(first);
    return s;
  }

  Stmt parse_statement() {
    const Token& t = peek();
    std::size_t first = pos_;

    if (t.is_keyword("assembly")) throw UnsupportedConstructError("inline assembly", t.line);
    if (t.is_keyword("try") || t.is_keyword("catch"))
      throw UnsupportedConstructError("try/catch", t.line);
    if (t.is_keyword("do")) throw UnsupportedConstructError("do-while loop", t.line);
    if (t.is_keyword("throw")) {
      // pre-0.5 `throw;` — surface as a revert with no arguments
      advance();
      expect_punct(";");
      Stmt s;
      s.node = RevertStmt{};
      s.span = span_from(first);
      return s;
    }

    if (t.is_punct("{")) return parse_block();

    if (t.is_keyword("unchecked")) {
      advance();
      Stmt s = parse_block();
      s.as<Block>().unchecked = true;
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("if")) {
      advance();
      expect_punct("(");
      IfStmt node;
      node.condition = parse_expression();
      expect_punct(")");
      node.then_branch = std::make_unique<Stmt>(parse_statement());
      if (match_keyword("else")) node.else_branch = std::make_unique<Stmt>(parse_statement());
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("for")) {
      advance();
      expect_punct("(");
      ForStmt node;
      if (!peek().is_punct(";")) {
        node.init = std::make_unique<Stmt>(parse_simple_statement());
      } else {
        expect_punct(";");
      }
      if (!peek().is_punct(";")) node.cond = parse_expression();
      expect_punct(";");
      if (!peek().is_punct(")")) node.post = parse_expression();
      expect_punct(")");
      node.body = std::make_unique<Stmt>(parse_statement());
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("while")) {
      advance();
      expect_punct("(");
      WhileStmt node;
      node.condition = parse_expression();
      expect_punct(")");
      node.body = std::make_unique<Stmt>(parse_statement());
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("return")) {
      advance();
      ReturnStmt node;
      if (!peek().is_punct(";")) node.value = parse_expression();
      expect_punct(";");
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("break") || t.is_keyword("continue")) {
      bool is_break = t.is_keyword("break");
      advance();
      expect_punct(";");
      Stmt s;
      if (is_break)
        s.node = BreakStmt{};
      else
        s.node = ContinueStmt{};
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("emit")) {
      advance();
      EmitStmt node;
      node.event_call = parse_expression();
      if (!node.event_call.is<CallExpr>()) fail("emit requires an event call");
      expect_punct(";");
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("require")) {
      advance();
      expect_punct("(");
      RequireStmt node;
      node.condition = parse_expression();
      if (match_punct(",")) node.message = parse_expression();
      expect_punct(")");
      expect_punct(";");
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    if (t.is_keyword("revert")) {
      advance();
      RevertStmt node;
      if (peek().kind == Token::Kind::Identifier) {
        node.error_name = expect_identifier();
        while (match_punct(".")) *node.error_name += "." + expect_identifier();
      }
      if (peek().is_punct("(")) {
        advance();
        if (!peek().is_punct(")")) {
          do {
            node.args.push_back(parse_expression());
          } while (match_punct(","));
        }
        expect_punct(")");
      }
      expect_punct(";");
      Stmt s;
      s.node = std::move(node);
      s.span = span_from(first);
      return s;
    }

    // `_;` modifier placeholder.
    if (t.kind == Token::Kind::Identifier && t.text == "_" && peek(1).is_punct(";")) {
      advance();
      advance();
      Stmt s;
      s.node = PlaceholderStmt{};
      s.span = span_from(first);
      return s;
    }

    Stmt s = parse_simple_statement();
    return s;
  }

  /// Variable declaration or expression statement (consumes the semicolon).
  Stmt parse_simple_statement() {
    std::size_t first = pos_;

    if (auto decl = try_parse_var_decl()) {
      Stmt s;
      s.node = std::move(*decl);
      s.span = span_from(first);
      return s;
    }

    ExprStmt node;
    node.expr = parse_expression();
    expect_punct(";");
    Stmt s;
    s.node = std::move(node);
    s.span = span_from(first);
    return s;
  }

  std::optional<VarDeclStmt> try_parse_var_decl() {
    std::size_t saved = pos_;
    const Token& t = peek();

    // Tuple declaration: `(uint a, , address b) = expr;`
    if (t.is_punct("(")) {
      advance();
      VarDeclStmt v;
      v.tuple_form = true;
      bool ok = true;
      if (!peek().is_punct(")")) {
        do {
          if (peek().is_punct(",") || peek().is_punct(")")) {
            v.decls.push_back(std::nullopt);
            continue;
          }
          auto d = try_parse_single_decl();
          if (!d) {
            ok = false;
            break;
          }
          v.decls.push_back(std::move(*d));
        } while (match_punct(","));
      }
      if (ok && match_punct(")") && match_punct("=")) {
        v.init = parse_expression();
        expect_punct(";");
        return v;
      }
      pos_ = saved;
      return std::nullopt;
    }

    bool definitely_type = t.kind == Token::Kind::Keyword &&
                           (detail::is_elementary_type_name(t.text) || t.text == "mapping");
    if (!definitely_type && t.kind != Token::Kind::Identifier) return std::nullopt;

    auto d = try_parse_single_decl();
    if (!d) {
      pos_ = saved;
      return std::nullopt;
    }
    VarDeclStmt v;
    v.decls.push_back(std::move(*d));
    if (match_punct("=")) v.init = parse_expression();
    if (!match_punct(";")) {
      pos_ = saved;
      return std::nullopt;
    }
    return v;
  }

  std::optional<VarDeclStmt::Decl> try_parse_single_decl() {
    std::size_t saved = pos_;
    try {
      if (!peek_starts_type()) return std::nullopt;
      VarDeclStmt::Decl d;
      d.type = parse_type();
      if (is_location_keyword(peek())) d.location = std::string(advance().text);
      if (peek().kind != Token::Kind::Identifier) {
        pos_ = saved;
        return std::nullopt;
      }
      d.name = expect_identifier();
      return d;
    } catch (const ParseError&) {
      pos_ = saved;
      return std::nullopt;
    }
  }

  // --- expressions -----------------------------------------------------------

  Expr parse_expression() { return parse_assignment(); }

  Expr parse_assignment() {
    std::size_t first = pos_;
    Expr lhs = parse_conditional();
    const Token& t = peek();
    static const std::string_view ops[] = {"=",  "+=", "-=", "*=",  "/=",  "%=",
                                           "|=", "&=", "^=", "<<=", ">>="};
    for (auto op : ops) {
      if (t.is_punct(op)) {
        advance();
        AssignExpr node;
        node.op = std::string(op);
        node.lhs = std::make_unique<Expr>(std::move(lhs));
        node.rhs = std::make_unique<Expr>(parse_assignment());
        Expr e;
        e.node = std::move(node);
        e.span = span_from(first);
        return e;
      }
    }
    return lhs;
  }

  Expr parse_conditional() {
    std::size_t first = pos_;
    Expr cond = parse_binary(0);
    if (!peek().is_punct("?")) return cond;
    advance();
    ConditionalExpr node;
    node.cond = std::make_unique<Expr>(std::move(cond));
    node.then_value = std::make_unique<Expr>(parse_expression());
    expect_punct(":");
    node.else_value = std::make_unique<Expr>(parse_conditional());
    Expr e;
    e.node = std::move(node);
    e.span = span_from(first);
    return e;
  }

  // Binary precedence table, loosest first.
  static int binary_precedence(const Token& t) {
    if (t.kind != Token::Kind::Punct) return -1;
    std::string_view p = t.text;
    if (p == "||") return 0;
    if (p == "&&") return 1;
    if (p == "==" || p == "!=") return 2;
    if (p == "<" || p == ">" || p == "<=" || p == ">=") return 3;
    if (p == "|") return 4;
    if (p == "^") return 5;
    if (p == "&") return 6;
    if (p == "<<" || p == ">>") return 7;
    if (p == "+" || p == "-") return 8;
    if (p == "*" || p == "/" || p == "%") return 9;
    return -1;
  }

  Expr parse_binary(int min_prec) {
    std::size_t first = pos_;
    Expr lhs = parse_unary();
    for (;;) {
      int prec = binary_precedence(peek());
      if (prec < min_prec) break;
      std::string op(advance().text);
      Expr rhs = parse_binary(prec + 1);
      BinaryExpr node;
      node.op = std::move(op);
      node.lhs = std::make_unique<Expr>(std::move(lhs));
      node.rhs = std::make_unique<Expr>(std::move(rhs));
      Expr e;
      e.node = std::move(node);
      e.span = span_from(first);
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr parse_unary() {
    std::size_t first = pos_;
    const Token& t = peek();
    if (t.is_punct("!") || t.is_punct("~") || t.is_punct("-") || t.is_punct("+") ||
        t.is_punct("++") || t.is_punct("--") || t.is_keyword("delete")) {
      UnaryExpr node;
      node.op = std::string(advance().text);
      node.prefix = true;
      node.operand = std::make_unique<Expr>(parse_unary());
      Expr e;
      e.node = std::move(node);
      e.span = span_from(first);
      return e;
    }
    return parse_power();
  }

  Expr parse_power() {
    std::size_t first = pos_;
    Expr base = parse_postfix();
    if (peek().is_punct("**")) {
      advance();
      BinaryExpr node;
      node.op = "**";
      node.lhs = std::make_unique<Expr>(std::move(base));
      node.rhs = std::make_unique<Expr>(parse_unary());  // right-associative
      Expr e;
      e.node = std::move(node);
      e.span = span_from(first);
      return e;
    }
    return base;
  }

  Expr parse_postfix() {
    std::size_t first = pos_;
    Expr e = parse_primary();
    for (;;) {
      const Token& t = peek();
      if (t.is_punct(".")) {
        advance();
        MemberAccess node;
        node.object = std::make_unique<Expr>(std::move(e));
        // member names may collide with keywords (balance, transfer, ...)
        if (peek().kind == Token::Kind::Identifier || peek().kind == Token::Kind::Keyword) {
          node.member = std::string(advance().text);
        } else {
          fail("expected member name");
        }
        Expr next;
        next.node = std::move(node);
        next.span = span_from(first);
        e = std::move(next);
      } else if (t.is_punct("[")) {
        advance();
        IndexAccess node;
        node.object = std::make_unique<Expr>(std::move(e));
        if (!peek().is_punct("]")) node.index = std::make_unique<Expr>(parse_expression());
        expect_punct("]");
        Expr next;
        next.node = std::move(node);
        next.span = span_from(first);
        e = std::move(next);
      } else if (t.is_punct("(")) {
        advance();
        CallExpr node;
        node.callee = std::make_unique<Expr>(std::move(e));
        if (!peek().is_punct(")")) {
          if (peek().is_punct("{"))
            throw UnsupportedConstructError("call options block", peek().line);
          do {
            node.args.push_back(parse_expression());
          } while (match_punct(","));
        }
        expect_punct(")");
        Expr next;
        next.node = std::move(node);
        next.span = span_from(first);
        e = std::move(next);
      } else if (t.is_punct("{")) {
        // f{value: ...}(...) call options
        throw UnsupportedConstructError("call options block", t.line);
      } else if (t.is_punct("++") || t.is_punct("--")) {
        UnaryExpr node;
        node.op = std::string(advance().text);
        node.prefix = false;
        node.operand = std::make_unique<Expr>(std::move(e));
        Expr next;
        next.node = std::move(node);
        next.span = span_from(first);
        e = std::move(next);
      } else {
        break;
      }
    }
    return e;
  }

  static bool is_unit_keyword(const Token& t) {
    return t.is_keyword("wei") || t.is_keyword("gwei") || t.is_keyword("ether") ||
           t.is_keyword("seconds") || t.is_keyword("minutes") || t.is_keyword("hours") ||
           t.is_keyword("days") || t.is_keyword("weeks");
  }

  static bool is_address_literal(std::string_view text) {
    if (text.size() != 42 || text.substr(0, 2) != "0x") return false;
    for (char c : text.substr(2))
      if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  Expr parse_primary() {
    std::size_t first = pos_;
    const Token& t = peek();
    Expr e;

    if (t.kind == Token::Kind::Number) {
      Literal lit;
      lit.kind = is_address_literal(t.text) ? Literal::Kind::Address : Literal::Kind::Number;
      lit.text = std::string(advance().text);
      if (is_unit_keyword(peek())) lit.text += " " + std::string(advance().text);
      e.node = std::move(lit);
    } else if (t.kind == Token::Kind::StringLit) {
      Literal lit;
      lit.kind = Literal::Kind::String;
      lit.text = std::string(advance().text);
      e.node = std::move(lit);
    } else if (t.kind == Token::Kind::HexStringLit) {
      Literal lit;
      lit.kind = Literal::Kind::HexString;
      lit.text = std::string(advance().text);
      e.node = std::move(lit);
    } else if (t.is_keyword("true") || t.is_keyword("false")) {
      Literal lit;
      lit.kind = Literal::Kind::Bool;
      lit.text = std::string(advance().text);
      e.node = std::move(lit);
    } else if (t.is_keyword("new")) {
      advance();
      NewExpr node;
      node.type = parse_type();
      e.node = std::move(node);
    } else if (t.is_keyword("type")) {
      advance();
      e.node = ElementaryTypeExpr{"type"};
    } else if (t.kind == Token::Kind::Keyword &&
               (detail::is_elementary_type_name(t.text) || t.text == "payable")) {
      // Elementary-type conversions: address(0), uint160(x), payable(a).
      ElementaryTypeExpr node;
      node.name = std::string(advance().text);
      e.node = std::move(node);
    } else if (t.is_keyword("this") || t.is_keyword("super") || t.is_keyword("require") ||
               t.is_keyword("assert") || t.is_keyword("revert")) {
      // These act as identifiers in expression position (assert(...) calls
      // and similar are kept as plain calls).
      e.node = Identifier{std::string(advance().text)};
    } else if (t.kind == Token::Kind::Identifier) {
      e.node = Identifier{expect_identifier()};
    } else if (t.is_punct("(")) {
      advance();
      TupleExpr node;
      if (!peek().is_punct(")")) {
        do {
          if (peek().is_punct(",") || peek().is_punct(")")) {
            node.elems.push_back(std::nullopt);
          } else {
            node.elems.push_back(parse_expression());
          }
        } while (match_punct(","));
      }
      expect_punct(")");
      node.is_parens_only = node.elems.size() == 1 && node.elems[0].has_value();
      e.node = std::move(node);
    } else if (t.is_punct("[")) {
      throw UnsupportedConstructError("inline array expression", t.line);
    } else {
      fail("unexpected token '" + std::string(t.text) + "' in expression", "expression");
    }
    e.span = span_from(first);
    return e;
  }
};

/// Parse one Solidity source file into a span-annotated AST.
inline SourceUnit parse(std::string_view source, std::string file_id) {
  Parser p(source, std::move(file_id));
  return p.parse_unit();
}

}  // namespace ercbench
