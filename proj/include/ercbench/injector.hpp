// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ercbench/analysis.hpp"
#include "ercbench/catalog.hpp"
#include "ercbench/keccak.hpp"
#include "ercbench/rng.hpp"

namespace ercbench {

/// One edit against the ORIGINAL text of a contract. Mutants are produced by
/// splicing these into the unmodified source so untouched regions (layout,
/// comments) survive byte for byte.
struct MutationEdit {
  enum class Kind { Delete, Replace };
  Kind kind = Kind::Delete;
  SourceSpan span;
  std::string replacement;  // empty for deletes
};

struct ViolationRecord {
  std::string contract_id;
  std::string rule_id;
  RuleCategory category = RuleCategory::Uncovered;
  std::string function_sig;  // the violating function reported to scorers
  std::vector<MutationEdit> edits;
  Impact impact = Impact::Medium;
  enum class Origin { Injected, Human };
  Origin origin = Origin::Injected;
  bool via_modifier = false;              // guard was found inside a modifier body
  std::vector<std::string> also_violated;  // sibling rules satisfied by the same edits
};

/// Splice edits into the original text. Edits must be non-overlapping.
inline std::string apply_edits(std::string_view original, std::vector<MutationEdit> edits) {
  std::sort(edits.begin(), edits.end(), [](const MutationEdit& a, const MutationEdit& b) {
    return a.span.start < b.span.start;
  });
  for (std::size_t i = 1; i < edits.size(); ++i) {
    if (edits[i - 1].span.end > edits[i].span.start)
      throw InputError("overlapping edits at byte " + std::to_string(edits[i].span.start));
  }
  std::string out(original);
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    out.replace(it->span.start, it->span.length(), it->replacement);
  }
  return out;
}

namespace detail {

/// True when the pragma pins the file to checked-arithmetic Solidity (0.8+).
inline bool uses_checked_arithmetic(const SourceUnit& unit) {
  for (const auto& d : unit.directives) {
    if (d.text.find("solidity") == std::string::npos) continue;
    // First "major.minor" pair in the version expression.
    for (std::size_t i = 0; i + 2 < d.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(d.text[i]))) continue;
      std::size_t j = i;
      while (j < d.text.size() && std::isdigit(static_cast<unsigned char>(d.text[j]))) ++j;
      if (j >= d.text.size() || d.text[j] != '.') continue;
      int major = std::stoi(d.text.substr(i, j - i));
      std::size_t k = j + 1;
      while (k < d.text.size() && std::isdigit(static_cast<unsigned char>(d.text[k]))) ++k;
      int minor = std::stoi(d.text.substr(j + 1, k - j - 1));
      return major > 0 || minor >= 8;
    }
  }
  return true;  // no pragma: assume a current compiler
}

inline MutationEdit delete_span(const SourceSpan& span) {
  return {MutationEdit::Kind::Delete, span, {}};
}

inline std::string random_address_literal(Rng& rng) {
  std::array<uint8_t, 20> addr{};
  for (auto& b : addr) b = static_cast<uint8_t>(rng.next() & 0xff);
  return checksum_address(addr);
}

inline std::string random_string_literal(Rng& rng) {
  static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  std::size_t len = 6 + rng.bounded(10);
  std::string s = "\"";
  for (std::size_t i = 0; i < len; ++i)
    s.push_back(alphabet[rng.bounded(sizeof(alphabet) - 1)]);
  return s + "\"";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The six error-injection operators
// ---------------------------------------------------------------------------

/// Condition-check rule: delete every require statement guarding the rule's
/// parameter, in the target function and its callees/modifiers.
inline std::vector<MutationEdit> inject_check(const ContractView& view, const Rule& rule,
                                              const CallGraph& graph,
                                              bool* via_modifier = nullptr) {
  const ContractView::Function* fn = view.find_function(*rule.target);
  if (!fn) throw NotApplicableError(rule.id + ": target function not defined");
  auto param = resolve_rule_param(rule, *fn->def);
  if (!param) throw NotApplicableError(rule.id + ": parameter not found on target");
  auto sites = find_param_checks(view, fn->sig, *param, graph);
  if (sites.empty()) throw NotApplicableError(rule.id + ": no guard to remove");
  std::vector<MutationEdit> edits;
  for (const auto& g : sites) {
    edits.push_back(detail::delete_span(g.stmt_span));
    if (via_modifier && g.via_modifier) *via_modifier = true;
  }
  return edits;
}

/// API rule: delete the full function definition plus every internal call
/// site of it (matching the removed overload's arity).
inline std::vector<MutationEdit> inject_api(const ContractView& view, const Rule& rule) {
  const ContractView::Function* fn = view.find_function(*rule.target);
  if (!fn) throw NotApplicableError(rule.id + ": target function not defined");
  std::vector<MutationEdit> edits;
  edits.push_back(detail::delete_span(fn->def->span));
  for (const auto& site :
       detail::call_sites_with_arity(view, fn->sig.name, fn->def->params.size())) {
    if (fn->def->span.contains(site.stmt_span)) continue;  // recursion: goes with the body
    edits.push_back(detail::delete_span(site.stmt_span));
  }
  return edits;
}

/// Return rule: mutate each returned value per the rule's declared type —
/// add a random integer, flip a boolean, substitute a random checksummed
/// address, swap empty and non-empty strings.
inline std::vector<MutationEdit> inject_return(const ContractView& view, const Rule& rule,
                                               Rng& rng) {
  const ContractView::Function* fn = view.find_function(*rule.target);
  if (!fn || !fn->def->body) throw NotApplicableError(rule.id + ": target function not defined");
  if (count_typed_returns(*fn->def, *rule.return_type) == 0)
    throw NotApplicableError(rule.id + ": no typed return statement");

  bool checked = detail::uses_checked_arithmetic(*view.unit);
  std::string_view src = view.text();
  std::vector<MutationEdit> edits;
  walk_stmt(*fn->def->body, [&](const Stmt& s) {
    if (!s.is<ReturnStmt>() || !s.as<ReturnStmt>().value) return;
    const Expr& value = *s.as<ReturnStmt>().value;
    std::string expr_text(slice(src, value.span));
    std::string stmt_text;
    const std::string& cls = *rule.return_type;
    if (cls == "int") {
      uint64_t k = rng.range(1, uint64_t{1} << 31);
      stmt_text = "return (" + expr_text + ") + " + std::to_string(k) + ";";
      if (checked) stmt_text = "unchecked { " + stmt_text + " }";
    } else if (cls == "bool") {
      stmt_text = "return !(" + expr_text + ");";
    } else if (cls == "address") {
      stmt_text = "return " + detail::random_address_literal(rng) + ";";
    } else if (cls == "string") {
      bool is_empty_literal = value.is<Literal>() &&
                              value.as<Literal>().kind == Literal::Kind::String &&
                              (value.as<Literal>().text == "\"\"" || value.as<Literal>().text == "''");
      stmt_text = is_empty_literal ? "return " + detail::random_string_literal(rng) + ";"
                                   : "return \"\";";
    } else {
      throw NotApplicableError(rule.id + ": unsupported return type class " + cls);
    }
    edits.push_back({MutationEdit::Kind::Replace, s.span, std::move(stmt_text)});
  });
  if (edits.empty()) throw NotApplicableError(rule.id + ": no return statement found");
  return edits;
}

/// Value-update rule: delete every assignment to the getter-resolved state
/// variable within the target function and its callees.
inline std::vector<MutationEdit> inject_value(const ContractView& view, const Rule& rule,
                                              const CallGraph& graph) {
  const ContractView::Function* fn = view.find_function(*rule.target);
  if (!fn || !fn->def->body) throw NotApplicableError(rule.id + ": target function not defined");
  StateVarRef var;
  try {
    var = resolve_state_var(view, *rule.getter);
  } catch (const Error& e) {
    throw NotApplicableError(rule.id + ": " + e.what());
  }
  auto sites = find_assignments(view, fn->sig, var.name, graph);
  if (sites.empty()) throw NotApplicableError(rule.id + ": no assignment to " + var.name);
  std::vector<MutationEdit> edits;
  for (const auto& s : sites) edits.push_back(detail::delete_span(s.stmt_span));
  return edits;
}

/// Function-call rule: delete every call site of the callee reachable from
/// the target function; a consumed call value takes its whole consuming
/// statement with it so the mutant still compiles.
inline std::vector<MutationEdit> inject_call(const ContractView& view, const Rule& rule,
                                             const CallGraph& graph) {
  const ContractView::Function* fn = view.find_function(*rule.target);
  if (!fn || !fn->def->body) throw NotApplicableError(rule.id + ": target function not defined");
  auto sites = find_sites(view, fn->sig, *rule.callee, graph, /*want_event=*/false);
  if (sites.empty()) throw NotApplicableError(rule.id + ": no call site of " + *rule.callee);
  std::vector<MutationEdit> edits;
  for (const auto& s : sites) edits.push_back(detail::delete_span(s.stmt_span));
  return edits;
}

/// Logging rule: delete every statement emitting the event, reachable from
/// the target function.
inline std::vector<MutationEdit> inject_logging(const ContractView& view, const Rule& rule,
                                                const CallGraph& graph) {
  const ContractView::Function* fn = view.find_function(*rule.target);
  if (!fn || !fn->def->body) throw NotApplicableError(rule.id + ": target function not defined");
  auto sites = find_sites(view, fn->sig, *rule.event, graph, /*want_event=*/true);
  if (sites.empty()) throw NotApplicableError(rule.id + ": no emit of " + *rule.event);
  std::vector<MutationEdit> edits;
  for (const auto& s : sites) edits.push_back(detail::delete_span(s.stmt_span));
  return edits;
}

/// Dispatch on rule category. Return rules draw from `rng`; the campaign
/// derives a per-(contract, rule) stream so results are order-independent.
inline std::vector<MutationEdit> inject(const ContractView& view, const Rule& rule,
                                        const CallGraph& graph, Rng& rng,
                                        bool* via_modifier = nullptr) {
  switch (rule.category) {
    case RuleCategory::Check:
      return inject_check(view, rule, graph, via_modifier);
    case RuleCategory::Api:
      return inject_api(view, rule);
    case RuleCategory::Return:
      return inject_return(view, rule, rng);
    case RuleCategory::Value:
      return inject_value(view, rule, graph);
    case RuleCategory::Call:
      return inject_call(view, rule, graph);
    case RuleCategory::Logging:
      return inject_logging(view, rule, graph);
    case RuleCategory::Uncovered:
      break;
  }
  throw NotApplicableError(rule.id + ": category is not injectable");
}

}  // namespace ercbench
