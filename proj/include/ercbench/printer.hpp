// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ercbench/ast.hpp"

namespace ercbench {

// Pretty printer producing compilable Solidity from an AST: 4-space indent,
// one statement per line. Mutants are made by span splicing on the original
// text, not by this printer; it exists for synthesized code and for the
// parse/emit round-trip checks.
class SourcePrinter {
 public:
  std::string print(const SourceUnit& unit) {
    out_.str({});
    indent_ = 0;
    // Members were parsed into per-kind vectors; original layout is restored
    // by span order. Synthesized nodes (span 0,0) keep insertion order.
    std::vector<const Directive*> dirs;
    for (const auto& d : unit.directives) dirs.push_back(&d);
    for (const auto* d : dirs) line(d->text);
    for (const auto& c : unit.constants) print_state_var(c);
    for (const auto& c : unit.contracts) {
      print_contract(c);
    }
    return out_.str();
  }

  std::string print_expr_text(const Expr& e) {
    std::ostringstream save;
    save.swap(out_);
    expr(e);
    std::string r = out_.str();
    save.swap(out_);
    return r;
  }

  std::string print_stmt_text(const Stmt& s) {
    std::ostringstream save;
    save.swap(out_);
    indent_ = 0;
    stmt(s);
    std::string r = out_.str();
    save.swap(out_);
    return r;
  }

 private:
  std::ostringstream out_;
  int indent_ = 0;

  void pad() {
    for (int i = 0; i < indent_; ++i) out_ << "    ";
  }
  void line(const std::string& s) {
    pad();
    out_ << s << "\n";
  }

  static std::string flavor_word(ContractDef::Flavor f) {
    switch (f) {
      case ContractDef::Flavor::Contract:
        return "contract";
      case ContractDef::Flavor::Interface:
        return "interface";
      case ContractDef::Flavor::Library:
        return "library";
    }
    return "contract";
  }

  struct MemberRef {
    std::size_t order;
    const void* ptr;
    int kind;  // 0 var, 1 fn, 2 event, 3 error, 4 modifier, 5 struct, 6 enum, 7 using
  };

  void print_contract(const ContractDef& c) {
    pad();
    if (c.is_abstract) out_ << "abstract ";
    out_ << flavor_word(c.flavor) << " " << c.name;
    if (!c.bases.empty()) {
      out_ << " is ";
      for (std::size_t i = 0; i < c.bases.size(); ++i) {
        if (i) out_ << ", ";
        out_ << c.bases[i].name << c.bases[i].args_text;
      }
    }
    out_ << " {\n";
    ++indent_;

    std::vector<MemberRef> members;
    auto add = [&](const auto& vec, int kind) {
      for (const auto& m : vec) members.push_back({m.span.start, &m, kind});
    };
    add(c.state_vars, 0);
    add(c.functions, 1);
    add(c.events, 2);
    add(c.errors, 3);
    add(c.modifiers, 4);
    add(c.structs, 5);
    add(c.enums, 6);
    add(c.usings, 7);
    std::stable_sort(members.begin(), members.end(),
                     [](const MemberRef& a, const MemberRef& b) { return a.order < b.order; });
    for (const auto& m : members) {
      switch (m.kind) {
        case 0:
          print_state_var(*static_cast<const StateVarDecl*>(m.ptr));
          break;
        case 1:
          print_function(*static_cast<const FunctionDef*>(m.ptr));
          break;
        case 2:
          print_event(*static_cast<const EventDef*>(m.ptr));
          break;
        case 3:
          print_error(*static_cast<const ErrorDef*>(m.ptr));
          break;
        case 4:
          print_modifier(*static_cast<const ModifierDef*>(m.ptr));
          break;
        case 5:
          print_struct(*static_cast<const StructDef*>(m.ptr));
          break;
        case 6:
          print_enum(*static_cast<const EnumDef*>(m.ptr));
          break;
        case 7: {
          const auto& u = *static_cast<const UsingDirective*>(m.ptr);
          line("using " + u.library + " for " + u.target + ";");
          break;
        }
      }
    }
    --indent_;
    line("}");
  }

  void print_state_var(const StateVarDecl& v) {
    pad();
    out_ << v.type.source_text();
    if (!v.visibility.empty()) out_ << " " << v.visibility;
    if (v.is_constant) out_ << " constant";
    if (v.is_immutable) out_ << " immutable";
    out_ << " " << v.name;
    if (v.initializer) {
      out_ << " = ";
      expr(*v.initializer);
    }
    out_ << ";\n";
  }

  void param(const ParamDecl& p) {
    out_ << p.type.source_text();
    if (p.indexed) out_ << " indexed";
    if (!p.location.empty()) out_ << " " << p.location;
    if (!p.name.empty()) out_ << " " << p.name;
  }

  void param_list(const std::vector<ParamDecl>& ps) {
    out_ << "(";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) out_ << ", ";
      param(ps[i]);
    }
    out_ << ")";
  }

  void print_function(const FunctionDef& f) {
    pad();
    switch (f.kind) {
      case FunctionDef::Kind::Constructor:
        out_ << "constructor";
        break;
      case FunctionDef::Kind::Fallback:
        out_ << "fallback";
        break;
      case FunctionDef::Kind::Receive:
        out_ << "receive";
        break;
      case FunctionDef::Kind::Function:
        out_ << "function " << f.name;
        break;
    }
    param_list(f.params);
    if (!f.visibility.empty()) out_ << " " << f.visibility;
    if (!f.mutability.empty()) out_ << " " << f.mutability;
    if (f.is_virtual) out_ << " virtual";
    if (f.has_override) {
      out_ << " override";
      if (!f.override_bases.empty()) {
        out_ << "(";
        for (std::size_t i = 0; i < f.override_bases.size(); ++i) {
          if (i) out_ << ", ";
          out_ << f.override_bases[i];
        }
        out_ << ")";
      }
    }
    for (const auto& m : f.modifiers) {
      out_ << " " << m.name;
      if (m.has_parens) {
        out_ << "(";
        for (std::size_t i = 0; i < m.args.size(); ++i) {
          if (i) out_ << ", ";
          expr(m.args[i]);
        }
        out_ << ")";
      }
    }
    if (!f.returns.empty()) {
      out_ << " returns ";
      param_list(f.returns);
    }
    if (!f.body) {
      out_ << ";\n";
      return;
    }
    out_ << " ";
    block_body(*f.body);
  }

  void print_modifier(const ModifierDef& m) {
    pad();
    out_ << "modifier " << m.name;
    if (!m.params.empty()) param_list(m.params);
    if (m.is_virtual) out_ << " virtual";
    if (m.has_override) out_ << " override";
    if (!m.body) {
      out_ << ";\n";
      return;
    }
    out_ << " ";
    block_body(*m.body);
  }

  void print_event(const EventDef& e) {
    pad();
    out_ << "event " << e.name;
    param_list(e.params);
    if (e.anonymous) out_ << " anonymous";
    out_ << ";\n";
  }

  void print_error(const ErrorDef& e) {
    pad();
    out_ << "error " << e.name;
    param_list(e.params);
    out_ << ";\n";
  }

  void print_struct(const StructDef& s) {
    line("struct " + s.name + " {");
    ++indent_;
    for (const auto& m : s.members) {
      pad();
      out_ << m.type.source_text() << " " << m.name << ";\n";
    }
    --indent_;
    line("}");
  }

  void print_enum(const EnumDef& e) {
    pad();
    out_ << "enum " << e.name << " { ";
    for (std::size_t i = 0; i < e.values.size(); ++i) {
      if (i) out_ << ", ";
      out_ << e.values[i];
    }
    out_ << " }\n";
  }

  // --- statements ---

  void block_body(const Stmt& s) {
    const auto& b = s.as<Block>();
    if (b.unchecked) out_ << "unchecked ";
    out_ << "{\n";
    ++indent_;
    for (const auto& st : b.statements) stmt(st);
    --indent_;
    line("}");
  }

  void stmt(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Block>) {
            pad();
            block_body(s);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            pad();
            out_ << "if (";
            expr(n.condition);
            out_ << ") ";
            nested(*n.then_branch);
            if (n.else_branch) {
              pad();
              out_ << "else ";
              nested(*n.else_branch);
            }
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            pad();
            out_ << "for (";
            if (n.init) {
              inline_simple(*n.init);
            } else {
              out_ << ";";
            }
            out_ << " ";
            if (n.cond) expr(*n.cond);
            out_ << "; ";
            if (n.post) expr(*n.post);
            out_ << ") ";
            nested(*n.body);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            pad();
            out_ << "while (";
            expr(n.condition);
            out_ << ") ";
            nested(*n.body);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            pad();
            out_ << "return";
            if (n.value) {
              out_ << " ";
              expr(*n.value);
            }
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, EmitStmt>) {
            pad();
            out_ << "emit ";
            expr(n.event_call);
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, RequireStmt>) {
            pad();
            out_ << "require(";
            expr(n.condition);
            if (n.message) {
              out_ << ", ";
              expr(*n.message);
            }
            out_ << ");\n";
          } else if constexpr (std::is_same_v<T, RevertStmt>) {
            pad();
            out_ << "revert";
            if (n.error_name) out_ << " " << *n.error_name;
            if (n.error_name || !n.args.empty()) {
              out_ << "(";
              for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out_ << ", ";
                expr(n.args[i]);
              }
              out_ << ")";
            } else {
              out_ << "()";
            }
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, VarDeclStmt>) {
            pad();
            var_decl(n);
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            pad();
            expr(n.expr);
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            line("break;");
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            line("continue;");
          } else if constexpr (std::is_same_v<T, PlaceholderStmt>) {
            line("_;");
          }
        },
        s.node);
  }

  // Nested statement after if/for/while headers.
  void nested(const Stmt& s) {
    if (s.is<Block>()) {
      block_body(s);
    } else {
      out_ << "\n";
      ++indent_;
      stmt(s);
      --indent_;
    }
  }

  // for-init without trailing newline
  void inline_simple(const Stmt& s) {
    if (s.is<VarDeclStmt>()) {
      var_decl(s.as<VarDeclStmt>());
      out_ << ";";
    } else if (s.is<ExprStmt>()) {
      expr(s.as<ExprStmt>().expr);
      out_ << ";";
    }
  }

  void var_decl(const VarDeclStmt& v) {
    if (v.tuple_form) {
      out_ << "(";
      for (std::size_t i = 0; i < v.decls.size(); ++i) {
        if (i) out_ << ", ";
        if (!v.decls[i]) continue;
        single_decl(*v.decls[i]);
      }
      out_ << ")";
    } else {
      single_decl(*v.decls[0]);
    }
    if (v.init) {
      out_ << " = ";
      expr(*v.init);
    }
  }

  void single_decl(const VarDeclStmt::Decl& d) {
    out_ << d.type.source_text();
    if (!d.location.empty()) out_ << " " << d.location;
    out_ << " " << d.name;
  }

  // --- expressions ---

  void expr(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Identifier>) {
            out_ << n.name;
          } else if constexpr (std::is_same_v<T, Literal>) {
            out_ << n.text;
          } else if constexpr (std::is_same_v<T, ElementaryTypeExpr>) {
            out_ << n.name;
          } else if constexpr (std::is_same_v<T, MemberAccess>) {
            expr(*n.object);
            out_ << "." << n.member;
          } else if constexpr (std::is_same_v<T, IndexAccess>) {
            expr(*n.object);
            out_ << "[";
            if (n.index) expr(*n.index);
            out_ << "]";
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            expr(*n.callee);
            out_ << "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (i) out_ << ", ";
              expr(n.args[i]);
            }
            out_ << ")";
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            expr(*n.lhs);
            out_ << " " << n.op << " ";
            expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            if (n.prefix) {
              out_ << n.op;
              if (n.op == "delete") out_ << " ";
              expr(*n.operand);
            } else {
              expr(*n.operand);
              out_ << n.op;
            }
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            expr(*n.lhs);
            out_ << " " << n.op << " ";
            expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
            expr(*n.cond);
            out_ << " ? ";
            expr(*n.then_value);
            out_ << " : ";
            expr(*n.else_value);
          } else if constexpr (std::is_same_v<T, TupleExpr>) {
            out_ << "(";
            for (std::size_t i = 0; i < n.elems.size(); ++i) {
              if (i) out_ << ", ";
              if (n.elems[i]) expr(*n.elems[i]);
            }
            out_ << ")";
          } else if constexpr (std::is_same_v<T, NewExpr>) {
            out_ << "new " << n.type.source_text();
          }
        },
        e.node);
  }
};

/// Convert an AST back to Solidity source text.
inline std::string emit_source(const SourceUnit& unit) {
  SourcePrinter p;
  return p.print(unit);
}

// ---------------------------------------------------------------------------
// Structural signature: span-free canonical dump used for tree equality.
// ---------------------------------------------------------------------------

class AstDumper {
 public:
  std::string dump(const SourceUnit& u) {
    out_.str({});
    out_ << "(unit";
    for (const auto& d : u.directives) out_ << " (directive " << quote(d.text) << ")";
    for (const auto& c : u.constants) state_var(c);
    for (const auto& c : u.contracts) contract(c);
    out_ << ")";
    return out_.str();
  }

 private:
  std::ostringstream out_;

  static std::string quote(const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r + "\"";
  }

  void contract(const ContractDef& c) {
    out_ << " (contract " << static_cast<int>(c.flavor) << " " << c.name;
    if (c.is_abstract) out_ << " abstract";
    for (const auto& b : c.bases) out_ << " (base " << b.name << " " << quote(b.args_text) << ")";
    for (const auto& v : c.state_vars) state_var(v);
    for (const auto& f : c.functions) function(f);
    for (const auto& e : c.events) {
      out_ << " (event " << e.name;
      params(e.params);
      if (e.anonymous) out_ << " anonymous";
      out_ << ")";
    }
    for (const auto& e : c.errors) {
      out_ << " (error " << e.name;
      params(e.params);
      out_ << ")";
    }
    for (const auto& m : c.modifiers) {
      out_ << " (modifier " << m.name;
      params(m.params);
      if (m.body) stmt(*m.body);
      out_ << ")";
    }
    for (const auto& s : c.structs) {
      out_ << " (struct " << s.name;
      params(s.members);
      out_ << ")";
    }
    for (const auto& e : c.enums) {
      out_ << " (enum " << e.name;
      for (const auto& v : e.values) out_ << " " << v;
      out_ << ")";
    }
    for (const auto& u : c.usings) out_ << " (using " << u.library << " " << u.target << ")";
    out_ << ")";
  }

  void state_var(const StateVarDecl& v) {
    out_ << " (var " << v.type.normalized() << " " << v.name << " " << v.visibility;
    if (v.is_constant) out_ << " constant";
    if (v.is_immutable) out_ << " immutable";
    if (v.initializer) expr(*v.initializer);
    out_ << ")";
  }

  void params(const std::vector<ParamDecl>& ps) {
    out_ << " (params";
    for (const auto& p : ps) {
      out_ << " (" << p.type.normalized();
      if (p.indexed) out_ << " indexed";
      if (!p.name.empty()) out_ << " " << p.name;
      out_ << ")";
    }
    out_ << ")";
  }

  void function(const FunctionDef& f) {
    out_ << " (function " << static_cast<int>(f.kind) << " " << f.name;
    params(f.params);
    out_ << " (returns";
    for (const auto& r : f.returns) out_ << " " << r.type.normalized();
    out_ << ") vis=" << f.visibility << " mut=" << f.mutability;
    if (f.is_virtual) out_ << " virtual";
    if (f.has_override) out_ << " override";
    for (const auto& m : f.modifiers) {
      out_ << " (mod " << m.name;
      for (const auto& a : m.args) expr(a);
      out_ << ")";
    }
    if (f.body) stmt(*f.body);
    out_ << ")";
  }

  void stmt(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Block>) {
            out_ << " (block";
            if (n.unchecked) out_ << " unchecked";
            for (const auto& st : n.statements) stmt(st);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            out_ << " (if";
            expr(n.condition);
            stmt(*n.then_branch);
            if (n.else_branch) {
              out_ << " (else";
              stmt(*n.else_branch);
              out_ << ")";
            }
            out_ << ")";
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            out_ << " (for";
            if (n.init) stmt(*n.init);
            if (n.cond) expr(*n.cond);
            if (n.post) expr(*n.post);
            stmt(*n.body);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            out_ << " (while";
            expr(n.condition);
            stmt(*n.body);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            out_ << " (return";
            if (n.value) expr(*n.value);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, EmitStmt>) {
            out_ << " (emit";
            expr(n.event_call);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, RequireStmt>) {
            out_ << " (require";
            expr(n.condition);
            if (n.message) expr(*n.message);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, RevertStmt>) {
            out_ << " (revert";
            if (n.error_name) out_ << " " << *n.error_name;
            for (const auto& a : n.args) expr(a);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, VarDeclStmt>) {
            out_ << " (decl";
            if (n.tuple_form) out_ << " tuple";
            for (const auto& d : n.decls) {
              if (d)
                out_ << " (" << d->type.normalized() << " " << d->name << ")";
              else
                out_ << " ()";
            }
            if (n.init) expr(*n.init);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            out_ << " (expr";
            expr(n.expr);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            out_ << " (break)";
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            out_ << " (continue)";
          } else if constexpr (std::is_same_v<T, PlaceholderStmt>) {
            out_ << " (_)";
          }
        },
        s.node);
  }

  void expr(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Identifier>) {
            out_ << " (id " << n.name << ")";
          } else if constexpr (std::is_same_v<T, Literal>) {
            out_ << " (lit " << static_cast<int>(n.kind) << " " << quote(n.text) << ")";
          } else if constexpr (std::is_same_v<T, ElementaryTypeExpr>) {
            out_ << " (etype " << n.name << ")";
          } else if constexpr (std::is_same_v<T, MemberAccess>) {
            out_ << " (member";
            expr(*n.object);
            out_ << " " << n.member << ")";
          } else if constexpr (std::is_same_v<T, IndexAccess>) {
            out_ << " (index";
            expr(*n.object);
            if (n.index) expr(*n.index);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            out_ << " (call";
            expr(*n.callee);
            for (const auto& a : n.args) expr(a);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            out_ << " (bin " << n.op;
            expr(*n.lhs);
            expr(*n.rhs);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            out_ << " (un " << n.op << (n.prefix ? " pre" : " post");
            expr(*n.operand);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            out_ << " (assign " << n.op;
            expr(*n.lhs);
            expr(*n.rhs);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
            out_ << " (cond";
            expr(*n.cond);
            expr(*n.then_value);
            expr(*n.else_value);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, TupleExpr>) {
            if (n.is_parens_only) {
              // plain parentheses are grouping only; structurally transparent
              expr(*n.elems[0]);
            } else {
              out_ << " (tuple";
              for (const auto& el : n.elems) {
                if (el)
                  expr(*el);
                else
                  out_ << " ()";
              }
              out_ << ")";
            }
          } else if constexpr (std::is_same_v<T, NewExpr>) {
            out_ << " (new " << n.type.normalized() << ")";
          }
        },
        e.node);
  }
};

/// Span-free canonical form; two trees are structurally equal iff their
/// dumps match. Parenthesized groupings are transparent, so a printed and
/// re-parsed tree compares equal to its source tree.
inline std::string dump_ast(const SourceUnit& u) {
  AstDumper d;
  return d.dump(u);
}

inline bool structurally_equal(const SourceUnit& a, const SourceUnit& b) {
  return dump_ast(a) == dump_ast(b);
}

}  // namespace ercbench
