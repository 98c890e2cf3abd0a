// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ercbench/ast.hpp"
#include "ercbench/errors.hpp"

namespace ercbench {

enum class Erc { Erc20, Erc721, Erc1155, Unknown };

inline std::string to_string(Erc e) {
  switch (e) {
    case Erc::Erc20:
      return "erc20";
    case Erc::Erc721:
      return "erc721";
    case Erc::Erc1155:
      return "erc1155";
    case Erc::Unknown:
      return "unknown";
  }
  return "unknown";
}

inline Erc erc_from_string(const std::string& s) {
  if (s == "erc20" || s == "ERC20") return Erc::Erc20;
  if (s == "erc721" || s == "ERC721") return Erc::Erc721;
  if (s == "erc1155" || s == "ERC1155") return Erc::Erc1155;
  return Erc::Unknown;
}

/// Function signature: name plus normalized parameter types.
struct FnSig {
  std::string name;
  std::vector<std::string> param_types;

  std::string to_string() const {
    std::string s = name + "(";
    for (std::size_t i = 0; i < param_types.size(); ++i) {
      if (i) s += ",";
      s += param_types[i];
    }
    return s + ")";
  }
  bool operator==(const FnSig& o) const {
    return name == o.name && param_types == o.param_types;
  }
};

inline FnSig signature_of(const FunctionDef& f) {
  FnSig s;
  switch (f.kind) {
    case FunctionDef::Kind::Constructor:
      s.name = "constructor";
      break;
    case FunctionDef::Kind::Fallback:
      s.name = "fallback";
      break;
    case FunctionDef::Kind::Receive:
      s.name = "receive";
      break;
    case FunctionDef::Kind::Function:
      s.name = f.name;
      break;
  }
  for (const auto& p : f.params) s.param_types.push_back(p.type.normalized());
  return s;
}

/// Parse "transfer(address,uint256)" into a signature; no parens means
/// name-only (matches any parameter list).
struct SigPattern {
  std::string name;
  std::optional<std::vector<std::string>> param_types;

  static SigPattern from_string(const std::string& text) {
    SigPattern p;
    auto paren = text.find('(');
    if (paren == std::string::npos) {
      p.name = text;
      return p;
    }
    p.name = text.substr(0, paren);
    std::vector<std::string> types;
    std::string inner = text.substr(paren + 1, text.rfind(')') - paren - 1);
    std::string cur;
    int depth = 0;
    for (char c : inner) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        types.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty()) types.push_back(cur);
    for (auto& t : types) {
      if (t == "uint") t = "uint256";
      if (t == "int") t = "int256";
      if (t == "byte") t = "bytes1";
    }
    p.param_types = std::move(types);
    return p;
  }

  bool matches(const FnSig& sig) const {
    if (name != sig.name) return false;
    return !param_types || *param_types == sig.param_types;
  }

  std::string to_string() const {
    if (!param_types) return name;
    FnSig s{name, *param_types};
    return s.to_string();
  }
};

struct ErcDetection {
  Erc tag = Erc::Unknown;
  bool by_heuristic = false;  // detected from function signatures, not names
};

/// Inheritance-flattened, override-resolved view of one contract.
struct ContractView {
  std::shared_ptr<const SourceUnit> unit;
  const ContractDef* origin = nullptr;
  std::string name;
  ErcDetection erc;

  struct Function {
    FnSig sig;
    const FunctionDef* def;
    const ContractDef* from;
  };
  struct StateVar {
    std::string name;
    const StateVarDecl* decl;
    const ContractDef* from;
  };
  struct Event {
    std::string name;
    const EventDef* decl;
    const ContractDef* from;
  };
  struct Modifier {
    std::string name;
    const ModifierDef* decl;
    const ContractDef* from;
  };

  std::vector<Function> functions;
  std::vector<StateVar> state_vars;
  std::vector<Event> events;
  std::vector<Modifier> modifiers;
  std::vector<std::string> base_names;  // transitive, linearization order

  const Function* find_function(const FnSig& sig) const {
    for (const auto& f : functions)
      if (f.sig == sig) return &f;
    return nullptr;
  }
  const Function* find_function(const SigPattern& pat) const {
    for (const auto& f : functions)
      if (pat.matches(f.sig)) return &f;
    return nullptr;
  }
  std::vector<const Function*> find_functions_named(const std::string& fn_name) const {
    std::vector<const Function*> out;
    for (const auto& f : functions)
      if (f.sig.name == fn_name) out.push_back(&f);
    return out;
  }
  const StateVar* find_state_var(const std::string& var_name) const {
    for (const auto& v : state_vars)
      if (v.name == var_name) return &v;
    return nullptr;
  }
  const Event* find_event(const std::string& event_name) const {
    for (const auto& e : events)
      if (e.name == event_name) return &e;
    return nullptr;
  }
  const Modifier* find_modifier(const std::string& mod_name) const {
    for (const auto& m : modifiers)
      if (m.name == mod_name) return &m;
    return nullptr;
  }

  std::string_view text() const { return unit->text(); }
};

namespace detail {

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline const ContractDef* find_contract(const SourceUnit& unit, const std::string& name) {
  for (const auto& c : unit.contracts)
    if (c.name == name) return &c;
  return nullptr;
}

// Derived-most-wins member merge. The derived contract is visited first,
// then bases right to left (the rightmost base is the most derived one),
// recursively; the first definition of a signature is kept.
inline void linearize(const SourceUnit& unit, const ContractDef* c, ContractView& view,
                      std::set<const ContractDef*>& seen) {
  if (!seen.insert(c).second) return;
  for (const auto& f : c->functions) {
    FnSig sig = signature_of(f);
    if (!view.find_function(sig)) view.functions.push_back({std::move(sig), &f, c});
  }
  for (const auto& v : c->state_vars)
    if (!view.find_state_var(v.name)) view.state_vars.push_back({v.name, &v, c});
  for (const auto& e : c->events)
    if (!view.find_event(e.name)) view.events.push_back({e.name, &e, c});
  for (const auto& m : c->modifiers)
    if (!view.find_modifier(m.name)) view.modifiers.push_back({m.name, &m, c});
  for (auto it = c->bases.rbegin(); it != c->bases.rend(); ++it) {
    const ContractDef* base = find_contract(unit, it->name);
    if (!base) throw UnresolvedBaseError(it->name);
    view.base_names.push_back(it->name);
    linearize(unit, base, view, seen);
  }
}

inline const std::map<Erc, std::vector<std::string>>& required_function_names() {
  static const std::map<Erc, std::vector<std::string>> names = {
      {Erc::Erc20,
       {"totalSupply", "balanceOf", "transfer", "transferFrom", "approve", "allowance"}},
      {Erc::Erc721,
       {"balanceOf", "ownerOf", "safeTransferFrom", "transferFrom", "approve",
        "setApprovalForAll", "getApproved", "isApprovedForAll"}},
      {Erc::Erc1155,
       {"safeTransferFrom", "safeBatchTransferFrom", "balanceOf", "balanceOfBatch",
        "setApprovalForAll", "isApprovedForAll"}},
  };
  return names;
}

}  // namespace detail

/// Name-based ERC detection with a signature-heuristic fallback: first a
/// case-insensitive substring scan of the contract name then base names; if
/// that yields nothing, a contract defining at least three of exactly one
/// ERC's required functions is tagged with a heuristic-confidence flag.
inline ErcDetection detect_erc(const ContractView& view) {
  static const std::pair<std::string, Erc> tags[] = {
      {"erc20", Erc::Erc20}, {"erc721", Erc::Erc721}, {"erc1155", Erc::Erc1155}};
  std::string lname = detail::lowercase(view.name);
  for (const auto& [needle, tag] : tags)
    if (lname.find(needle) != std::string::npos) return {tag, false};
  for (const auto& base : view.base_names) {
    std::string lbase = detail::lowercase(base);
    for (const auto& [needle, tag] : tags)
      if (lbase.find(needle) != std::string::npos) return {tag, false};
  }
  // Signature heuristic.
  Erc candidate = Erc::Unknown;
  int qualifying = 0;
  for (const auto& [erc, names] : detail::required_function_names()) {
    int defined = 0;
    for (const auto& n : names)
      if (!view.find_functions_named(n).empty()) ++defined;
    if (defined >= 3) {
      ++qualifying;
      candidate = erc;
    }
  }
  if (qualifying == 1) return {candidate, true};
  return {Erc::Unknown, false};
}

/// Flatten `contract_name` within `unit` into a single member list.
inline ContractView build_view(std::shared_ptr<const SourceUnit> unit,
                               const std::string& contract_name) {
  const ContractDef* c = detail::find_contract(*unit, contract_name);
  if (!c) throw UnknownContractError(contract_name);
  ContractView view;
  view.unit = std::move(unit);
  view.origin = c;
  view.name = contract_name;
  std::set<const ContractDef*> seen;
  detail::linearize(*view.unit, c, view, seen);
  view.erc = detect_erc(view);
  return view;
}

// ---------------------------------------------------------------------------
// Call graph
// ---------------------------------------------------------------------------

struct CallEdge {
  std::string caller;  // FnSig::to_string keys
  std::string callee;
  const FunctionDef* callee_def = nullptr;
  /// Root identifier of each argument expression, "" when the argument is
  /// not a plain identifier. Parameter flow is only tracked through
  /// verbatim identifier arguments.
  std::vector<std::string> arg_idents;
};

struct CallGraph {
  std::map<std::string, std::vector<CallEdge>> edges;

  const std::vector<CallEdge>* out_edges(const std::string& caller_key) const {
    auto it = edges.find(caller_key);
    return it == edges.end() ? nullptr : &it->second;
  }
};

namespace detail {

/// Callee name for intra-contract resolution: bare identifiers, plus
/// this./super. qualified calls. External member calls yield "".
inline std::string internal_callee_name(const Expr& callee) {
  if (callee.is<Identifier>()) return callee.as<Identifier>().name;
  if (callee.is<MemberAccess>()) {
    const auto& m = callee.as<MemberAccess>();
    if (m.object && m.object->is<Identifier>()) {
      const std::string& base = m.object->as<Identifier>().name;
      if (base == "this" || base == "super") return m.member;
    }
  }
  return {};
}

}  // namespace detail

/// Name+arity call graph over the flattened view. External calls (member
/// calls on addresses or other contract values) are not traversed.
inline CallGraph build_call_graph(const ContractView& view) {
  CallGraph g;
  for (const auto& fn : view.functions) {
    if (!fn.def->body) continue;
    std::string caller_key = fn.sig.to_string();
    auto& out = g.edges[caller_key];
    walk_stmt_exprs(*fn.def->body, [&](const Expr& e) {
      if (!e.is<CallExpr>()) return;
      const auto& call = e.as<CallExpr>();
      if (!call.callee) return;
      std::string name = detail::internal_callee_name(*call.callee);
      if (name.empty()) return;
      // Resolve by name + arity inside the view.
      const ContractView::Function* target = nullptr;
      for (const auto& cand : view.functions) {
        if (cand.sig.name == name && cand.def->params.size() == call.args.size()) {
          target = &cand;
          break;
        }
      }
      if (!target) return;
      CallEdge edge;
      edge.caller = caller_key;
      edge.callee = target->sig.to_string();
      edge.callee_def = target->def;
      for (const auto& arg : call.args) {
        edge.arg_idents.push_back(arg.is<Identifier>() ? arg.as<Identifier>().name
                                                       : std::string{});
      }
      out.push_back(std::move(edge));
    });
  }
  return g;
}

// ---------------------------------------------------------------------------
// Guard search
// ---------------------------------------------------------------------------

struct GuardSite {
  std::string function_sig;             // where the require lives
  SourceSpan stmt_span;                 // whole require statement incl. ';'
  std::set<std::string> guarded_params;  // root-function parameter names
  int depth = 0;                        // call-chain depth from the root
  bool via_modifier = false;
};

inline constexpr int kTraversalDepthLimit = 5;

namespace detail {

inline bool expr_mentions(const Expr& e, const std::map<std::string, std::string>& tracked,
                          std::set<std::string>& hit_roots) {
  bool any = false;
  walk_expr(e, [&](const Expr& sub) {
    if (sub.is<Identifier>()) {
      auto it = tracked.find(sub.as<Identifier>().name);
      if (it != tracked.end()) {
        hit_roots.insert(it->second);
        any = true;
      }
    }
  });
  return any;
}

inline std::string mapping_key(const std::string& sig,
                               const std::map<std::string, std::string>& tracked) {
  std::string k = sig;
  for (const auto& [local, root] : tracked) k += "|" + local + ">" + root;
  return k;
}

}  // namespace detail

/// Every require statement reachable from `root` whose condition mentions the
/// given root parameter — directly, or in a callee/modifier that received the
/// parameter as a verbatim identifier argument. Requires not referencing the
/// tracked parameter are excluded.
inline std::vector<GuardSite> find_param_checks(const ContractView& view, const FnSig& root,
                                                const std::string& param,
                                                const CallGraph& graph) {
  const ContractView::Function* root_fn = view.find_function(root);
  if (!root_fn) throw UnknownFunctionError(root.to_string());
  bool param_found = false;
  for (const auto& p : root_fn->def->params)
    if (p.name == param) param_found = true;
  if (!param_found) throw UnknownParamError(root.to_string(), param);

  std::vector<GuardSite> sites;
  struct WorkItem {
    const FunctionDef* fn;
    std::string sig;
    std::map<std::string, std::string> tracked;  // local param name -> root param name
    int depth;
  };
  std::deque<WorkItem> queue;
  std::set<std::string> visited;
  queue.push_back({root_fn->def, root.to_string(), {{param, param}}, 0});

  auto scan_body = [&](const Stmt& body, const WorkItem& item, bool in_modifier) {
    walk_stmt(body, [&](const Stmt& s) {
      if (!s.is<RequireStmt>()) return;
      std::set<std::string> roots;
      if (detail::expr_mentions(s.as<RequireStmt>().condition, item.tracked, roots)) {
        sites.push_back({item.sig, s.span, std::move(roots), item.depth, in_modifier});
      }
    });
  };

  while (!queue.empty()) {
    WorkItem item = std::move(queue.front());
    queue.pop_front();
    std::string key = detail::mapping_key(item.sig, item.tracked);
    if (!visited.insert(key).second) continue;

    if (item.fn->body) scan_body(*item.fn->body, item, false);

    // Modifier bodies are searched as inlined callees.
    for (const auto& mi : item.fn->modifiers) {
      const ContractView::Modifier* mod = view.find_modifier(mi.name);
      if (!mod || !mod->decl->body) continue;
      std::map<std::string, std::string> mod_tracked;
      for (std::size_t i = 0; i < mi.args.size() && i < mod->decl->params.size(); ++i) {
        if (!mi.args[i].is<Identifier>()) continue;
        auto it = item.tracked.find(mi.args[i].as<Identifier>().name);
        if (it != item.tracked.end() && !mod->decl->params[i].name.empty())
          mod_tracked[mod->decl->params[i].name] = it->second;
      }
      if (mod_tracked.empty()) continue;
      WorkItem mod_item{nullptr, item.sig + ":" + mod->name, mod_tracked, item.depth + 1};
      scan_body(*mod->decl->body, mod_item, true);
    }

    if (item.depth >= kTraversalDepthLimit) continue;
    const auto* out = graph.out_edges(item.sig);
    if (!out) continue;
    for (const auto& edge : *out) {
      if (!edge.callee_def || !edge.callee_def->body) continue;
      std::map<std::string, std::string> callee_tracked;
      for (std::size_t i = 0; i < edge.arg_idents.size(); ++i) {
        if (edge.arg_idents[i].empty()) continue;
        auto it = item.tracked.find(edge.arg_idents[i]);
        if (it == item.tracked.end()) continue;
        if (i < edge.callee_def->params.size() && !edge.callee_def->params[i].name.empty())
          callee_tracked[edge.callee_def->params[i].name] = it->second;
      }
      if (callee_tracked.empty()) continue;
      queue.push_back({edge.callee_def, edge.callee, std::move(callee_tracked), item.depth + 1});
    }
  }

  // Deterministic order; drop duplicate spans found via different paths.
  std::sort(sites.begin(), sites.end(), [](const GuardSite& a, const GuardSite& b) {
    return a.stmt_span.start < b.stmt_span.start;
  });
  sites.erase(std::unique(sites.begin(), sites.end(),
                          [](const GuardSite& a, const GuardSite& b) {
                            return a.stmt_span.start == b.stmt_span.start;
                          }),
              sites.end());
  return sites;
}

// ---------------------------------------------------------------------------
// Getter-based state variable resolution
// ---------------------------------------------------------------------------

struct StateVarRef {
  std::string name;
  std::string declaring_contract;
  const StateVarDecl* decl = nullptr;
};

/// Resolve the state variable behind a standard getter: either a function
/// whose body is a single `return <var>[...]...;` or a public state variable
/// whose auto-getter carries the name.
inline StateVarRef resolve_state_var(const ContractView& view, const SigPattern& getter) {
  const ContractView::Function* fn = view.find_function(getter);
  if (!fn) {
    for (const auto& v : view.state_vars) {
      if (v.name == getter.name && v.decl->visibility == "public")
        return {v.name, v.from->name, v.decl};
    }
    throw UnknownFunctionError(getter.to_string());
  }
  if (!fn->def->body) throw UnresolvableGetterError(getter.to_string() + " has no body");
  const auto& block = fn->def->body->as<Block>();
  if (block.statements.size() != 1 || !block.statements[0].is<ReturnStmt>())
    throw UnresolvableGetterError(getter.to_string() + " body is not a single return");
  const auto& ret = block.statements[0].as<ReturnStmt>();
  if (!ret.value) throw UnresolvableGetterError(getter.to_string() + " returns nothing");
  const Expr* e = &*ret.value;
  while (e->is<IndexAccess>()) e = e->as<IndexAccess>().object.get();
  if (e->is<TupleExpr>() && e->as<TupleExpr>().is_parens_only)
    e = &*e->as<TupleExpr>().elems[0];
  if (!e->is<Identifier>())
    throw UnresolvableGetterError(getter.to_string() + " returns a computed value");
  const std::string& var = e->as<Identifier>().name;
  const ContractView::StateVar* sv = view.find_state_var(var);
  if (!sv)
    throw UnresolvableGetterError(getter.to_string() + " returns non-state value " + var);
  return {sv->name, sv->from->name, sv->decl};
}

// ---------------------------------------------------------------------------
// Call / emit site search
// ---------------------------------------------------------------------------

struct CodeSite {
  enum class Kind { Call, Emit };
  Kind kind;
  std::string function_sig;  // function whose body holds the statement
  SourceSpan stmt_span;      // smallest removable statement containing the site
};

namespace detail {

/// arity < 0 matches any argument count.
inline bool expr_calls(const Expr& e, const std::string& target, int arity = -1) {
  bool found = false;
  walk_expr(e, [&](const Expr& sub) {
    if (!sub.is<CallExpr>()) return;
    const auto& call = sub.as<CallExpr>();
    if (!call.callee) return;
    if (arity >= 0 && call.args.size() != static_cast<std::size_t>(arity)) return;
    if (call.callee->is<Identifier>() && call.callee->as<Identifier>().name == target) {
      found = true;
    } else if (call.callee->is<MemberAccess>() &&
               call.callee->as<MemberAccess>().member == target) {
      found = true;
    }
  });
  return found;
}

// Smallest removable statements mentioning the target; a loop or branch whose
// header consumes the call is reported whole.
inline void collect_sites(const Stmt& s, const std::string& target, const std::string& fn_sig,
                          bool want_event, int arity, std::vector<CodeSite>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Block>) {
          for (const auto& st : n.statements)
            collect_sites(st, target, fn_sig, want_event, arity, out);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          if (!want_event && expr_calls(n.condition, target, arity)) {
            out.push_back({CodeSite::Kind::Call, fn_sig, s.span});
            return;
          }
          if (n.then_branch) collect_sites(*n.then_branch, target, fn_sig, want_event, arity, out);
          if (n.else_branch) collect_sites(*n.else_branch, target, fn_sig, want_event, arity, out);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          bool header = false;
          if (!want_event) {
            if (n.init) {
              walk_stmt_exprs(*n.init, [&](const Expr& e) {
                if (expr_calls(e, target, arity)) header = true;
              });
            }
            if (n.cond && expr_calls(*n.cond, target, arity)) header = true;
            if (n.post && expr_calls(*n.post, target, arity)) header = true;
          }
          if (header) {
            out.push_back({CodeSite::Kind::Call, fn_sig, s.span});
            return;
          }
          if (n.body) collect_sites(*n.body, target, fn_sig, want_event, arity, out);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          if (!want_event && expr_calls(n.condition, target, arity)) {
            out.push_back({CodeSite::Kind::Call, fn_sig, s.span});
            return;
          }
          if (n.body) collect_sites(*n.body, target, fn_sig, want_event, arity, out);
        } else if constexpr (std::is_same_v<T, EmitStmt>) {
          if (want_event && n.event_name() == target) {
            out.push_back({CodeSite::Kind::Emit, fn_sig, s.span});
          } else if (!want_event && expr_calls(n.event_call, target, arity)) {
            out.push_back({CodeSite::Kind::Call, fn_sig, s.span});
          }
        } else {
          if (want_event) return;
          bool found = false;
          walk_stmt_exprs(s, [&](const Expr& e) {
            if (expr_calls(e, target, arity)) found = true;
          });
          if (found) out.push_back({CodeSite::Kind::Call, fn_sig, s.span});
        }
      },
      s.node);
}

}  // namespace detail

/// Spans of every call to `target` (want_event=false) or emit of event
/// `target` (want_event=true) reachable from the root through the call graph.
inline std::vector<CodeSite> find_sites(const ContractView& view, const FnSig& root,
                                        const std::string& target, const CallGraph& graph,
                                        bool want_event) {
  const ContractView::Function* root_fn = view.find_function(root);
  if (!root_fn) throw UnknownFunctionError(root.to_string());

  std::vector<CodeSite> sites;
  std::set<std::string> visited;
  std::deque<std::pair<const FunctionDef*, std::pair<std::string, int>>> queue;
  queue.push_back({root_fn->def, {root.to_string(), 0}});
  while (!queue.empty()) {
    auto [fn, sig_depth] = queue.front();
    auto [sig, depth] = sig_depth;
    queue.pop_front();
    if (!visited.insert(sig).second) continue;
    if (fn->body) detail::collect_sites(*fn->body, target, sig, want_event, -1, sites);
    if (depth >= kTraversalDepthLimit) continue;
    if (const auto* out = graph.out_edges(sig)) {
      for (const auto& edge : *out) {
        if (edge.callee_def && edge.callee_def->body)
          queue.push_back({edge.callee_def, {edge.callee, depth + 1}});
      }
    }
  }
  std::sort(sites.begin(), sites.end(),
            [](const CodeSite& a, const CodeSite& b) { return a.stmt_span.start < b.stmt_span.start; });
  sites.erase(std::unique(sites.begin(), sites.end(),
                          [](const CodeSite& a, const CodeSite& b) {
                            return a.stmt_span.start == b.stmt_span.start;
                          }),
              sites.end());
  return sites;
}

/// Assignment statements (including compound assignments) to `var` reachable
/// from root; `delete var[...]` statements count as assignments.
inline std::vector<CodeSite> find_assignments(const ContractView& view, const FnSig& root,
                                              const std::string& var, const CallGraph& graph) {
  const ContractView::Function* root_fn = view.find_function(root);
  if (!root_fn) throw UnknownFunctionError(root.to_string());

  auto lhs_base_is = [&](const Expr& lhs) {
    const Expr* e = &lhs;
    for (;;) {
      if (e->is<IndexAccess>()) {
        e = e->as<IndexAccess>().object.get();
      } else if (e->is<MemberAccess>()) {
        e = e->as<MemberAccess>().object.get();
      } else {
        break;
      }
    }
    return e->is<Identifier>() && e->as<Identifier>().name == var;
  };

  std::vector<CodeSite> sites;
  std::set<std::string> visited;
  std::deque<std::pair<const FunctionDef*, std::pair<std::string, int>>> queue;
  queue.push_back({root_fn->def, {root.to_string(), 0}});
  while (!queue.empty()) {
    auto [fn, sig_depth] = queue.front();
    auto [sig, depth] = sig_depth;
    queue.pop_front();
    if (!visited.insert(sig).second) continue;
    if (fn->body) {
      walk_stmt(*fn->body, [&](const Stmt& s) {
        if (!s.is<ExprStmt>()) return;
        const Expr& e = s.as<ExprStmt>().expr;
        bool writes = false;
        if (e.is<AssignExpr>() && lhs_base_is(*e.as<AssignExpr>().lhs)) writes = true;
        if (e.is<UnaryExpr>()) {
          const auto& u = e.as<UnaryExpr>();
          if ((u.op == "delete" || u.op == "++" || u.op == "--") && lhs_base_is(*u.operand))
            writes = true;
        }
        if (writes) sites.push_back({CodeSite::Kind::Call, sig, s.span});
      });
    }
    if (depth >= kTraversalDepthLimit) continue;
    if (const auto* out = graph.out_edges(sig)) {
      for (const auto& edge : *out) {
        if (edge.callee_def && edge.callee_def->body)
          queue.push_back({edge.callee_def, {edge.callee, depth + 1}});
      }
    }
  }
  std::sort(sites.begin(), sites.end(),
            [](const CodeSite& a, const CodeSite& b) { return a.stmt_span.start < b.stmt_span.start; });
  return sites;
}

/// Internal call sites of `fn_name` anywhere in the view (all functions),
/// used when a function definition is removed outright. `arity` restricts the
/// match to one overload; pass -1 for any.
inline std::vector<CodeSite> find_all_call_sites(const ContractView& view,
                                                 const std::string& fn_name, int arity = -1) {
  std::vector<CodeSite> sites;
  for (const auto& fn : view.functions) {
    if (!fn.def->body) continue;
    detail::collect_sites(*fn.def->body, fn_name, fn.sig.to_string(), false, arity, sites);
  }
  std::sort(sites.begin(), sites.end(),
            [](const CodeSite& a, const CodeSite& b) { return a.stmt_span.start < b.stmt_span.start; });
  return sites;
}

}  // namespace ercbench
