// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ercbench/analysis.hpp"
#include "ercbench/errors.hpp"

namespace ercbench {

enum class RuleCategory { Check, Api, Value, Call, Return, Logging, Uncovered };
enum class Impact { High, Medium, Low };

inline std::string to_string(RuleCategory c) {
  switch (c) {
    case RuleCategory::Check:
      return "check";
    case RuleCategory::Api:
      return "api";
    case RuleCategory::Value:
      return "value";
    case RuleCategory::Call:
      return "call";
    case RuleCategory::Return:
      return "return";
    case RuleCategory::Logging:
      return "logging";
    case RuleCategory::Uncovered:
      return "uncovered";
  }
  return "?";
}

inline std::optional<RuleCategory> category_from_string(const std::string& s) {
  static const std::map<std::string, RuleCategory> m = {
      {"check", RuleCategory::Check},     {"api", RuleCategory::Api},
      {"value", RuleCategory::Value},     {"call", RuleCategory::Call},
      {"return", RuleCategory::Return},   {"logging", RuleCategory::Logging},
      {"uncovered", RuleCategory::Uncovered}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

inline std::string to_string(Impact i) {
  switch (i) {
    case Impact::High:
      return "high";
    case Impact::Medium:
      return "medium";
    case Impact::Low:
      return "low";
  }
  return "?";
}

inline std::optional<Impact> impact_from_string(const std::string& s) {
  if (s == "high") return Impact::High;
  if (s == "medium") return Impact::Medium;
  if (s == "low") return Impact::Low;
  return std::nullopt;
}

inline Impact default_impact(RuleCategory c) {
  switch (c) {
    case RuleCategory::Check:
    case RuleCategory::Value:
    case RuleCategory::Call:
      return Impact::High;
    case RuleCategory::Logging:
      return Impact::Low;
    default:
      return Impact::Medium;
  }
}

/// One machine-readable ERC requirement.
struct Rule {
  std::string id;
  Erc erc = Erc::Unknown;
  RuleCategory category = RuleCategory::Uncovered;
  std::optional<SigPattern> target;      // absent only for uncovered rules
  std::optional<std::string> param;      // check rules: document's parameter name
  std::optional<int> param_index;        // check rules: positional fallback
  std::optional<std::string> event;      // logging rules
  std::optional<std::string> callee;     // call rules
  std::optional<SigPattern> getter;      // value rules
  std::optional<std::string> return_type;  // return rules: int|bool|address|string
  std::string text;                      // verbatim prose from the ERC document
  Impact impact = Impact::Medium;

  bool injectable() const { return category != RuleCategory::Uncovered; }
};

struct ErcRuleSet {
  Erc erc = Erc::Unknown;
  std::string doc;  // full ERC document text, used for full-rule prompting
  std::vector<Rule> rules;
  std::map<RuleCategory, int> expected_counts;  // present for bundled catalogs

  int count(RuleCategory c) const {
    int n = 0;
    for (const auto& r : rules)
      if (r.category == c) ++n;
    return n;
  }
};

struct Catalog {
  std::string version;
  std::vector<ErcRuleSet> sets;

  const ErcRuleSet* set_for(Erc erc) const {
    for (const auto& s : sets)
      if (s.erc == erc) return &s;
    return nullptr;
  }
  const Rule* rule_by_id(const std::string& id) const {
    for (const auto& s : sets)
      for (const auto& r : s.rules)
        if (r.id == id) return &r;
    return nullptr;
  }
  std::size_t rule_count() const {
    std::size_t n = 0;
    for (const auto& s : sets) n += s.rules.size();
    return n;
  }
};

namespace detail {

inline ErcRuleSet parse_rule_set(const nlohmann::json& j, const std::string& where) {
  ErcRuleSet set;
  if (!j.is_object()) throw SchemaError(where, "document is not a JSON object");
  if (!j.contains("erc") || !j["erc"].is_string()) throw SchemaError(where + ".erc", "missing");
  set.erc = erc_from_string(j["erc"].get<std::string>());
  if (set.erc == Erc::Unknown) throw SchemaError(where + ".erc", "must be erc20|erc721|erc1155");
  set.doc = j.value("doc", std::string{});
  if (j.contains("expected_counts")) {
    for (const auto& [key, val] : j["expected_counts"].items()) {
      auto cat = category_from_string(key);
      if (!cat) throw SchemaError(where + ".expected_counts." + key, "unknown category");
      set.expected_counts[*cat] = val.get<int>();
    }
  }
  if (!j.contains("rules") || !j["rules"].is_array())
    throw SchemaError(where + ".rules", "missing rule array");

  for (std::size_t i = 0; i < j["rules"].size(); ++i) {
    const auto& rj = j["rules"][i];
    std::string rwhere = where + ".rules[" + std::to_string(i) + "]";
    Rule r;
    r.erc = set.erc;
    if (!rj.contains("id") || !rj["id"].is_string()) throw SchemaError(rwhere + ".id", "missing");
    r.id = rj["id"].get<std::string>();
    auto cat = category_from_string(rj.value("category", std::string{}));
    if (!cat) throw SchemaError(rwhere + ".category", "missing or unknown");
    r.category = *cat;
    if (!rj.contains("text") || !rj["text"].is_string() || rj["text"].get<std::string>().empty())
      throw SchemaError(rwhere + ".text", "missing rule text");
    r.text = rj["text"].get<std::string>();
    if (rj.contains("target")) r.target = SigPattern::from_string(rj["target"].get<std::string>());
    if (rj.contains("param")) r.param = rj["param"].get<std::string>();
    if (rj.contains("paramIndex")) r.param_index = rj["paramIndex"].get<int>();
    if (rj.contains("event")) r.event = rj["event"].get<std::string>();
    if (rj.contains("callee")) r.callee = rj["callee"].get<std::string>();
    if (rj.contains("getter")) r.getter = SigPattern::from_string(rj["getter"].get<std::string>());
    if (rj.contains("returnType")) r.return_type = rj["returnType"].get<std::string>();
    if (rj.contains("impact")) {
      auto imp = impact_from_string(rj["impact"].get<std::string>());
      if (!imp) throw SchemaError(rwhere + ".impact", "must be high|medium|low");
      r.impact = *imp;
    } else {
      r.impact = default_impact(r.category);
    }

    // Category-specific field requirements.
    auto need = [&](bool ok, const std::string& field) {
      if (!ok) throw SchemaError(rwhere + "." + field, "required for " + to_string(r.category));
    };
    auto forbid = [&](bool absent, const std::string& field) {
      if (!absent) throw SchemaError(rwhere + "." + field, "not allowed for " + to_string(r.category));
    };
    switch (r.category) {
      case RuleCategory::Check:
        need(r.target.has_value(), "target");
        need(r.param.has_value(), "param");
        break;
      case RuleCategory::Api:
        need(r.target.has_value() && r.target->param_types.has_value(), "target");
        break;
      case RuleCategory::Value:
        need(r.target.has_value(), "target");
        need(r.getter.has_value(), "getter");
        break;
      case RuleCategory::Call:
        need(r.target.has_value(), "target");
        need(r.callee.has_value(), "callee");
        break;
      case RuleCategory::Return:
        need(r.target.has_value(), "target");
        need(r.return_type.has_value(), "returnType");
        if (*r.return_type != "int" && *r.return_type != "bool" && *r.return_type != "address" &&
            *r.return_type != "string")
          throw SchemaError(rwhere + ".returnType", "must be int|bool|address|string");
        break;
      case RuleCategory::Logging:
        need(r.target.has_value(), "target");
        need(r.event.has_value(), "event");
        break;
      case RuleCategory::Uncovered:
        forbid(!r.param && !r.event && !r.callee && !r.getter && !r.return_type,
               "injection fields");
        break;
    }
    set.rules.push_back(std::move(r));
  }

  // Count invariants are enforced whenever the document declares them
  // (the bundled catalogs do).
  for (const auto& [cat, want] : set.expected_counts) {
    int got = set.count(cat);
    if (got != want)
      throw CountMismatchError(to_string(set.erc) + " " + to_string(cat) + ": declared " +
                               std::to_string(want) + ", found " + std::to_string(got));
  }
  return set;
}

}  // namespace detail

/// Load a catalog from one JSON file or from a directory of per-ERC JSON
/// files (the bundled layout).
inline Catalog load_catalog(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  Catalog cat;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else if (fs::exists(path)) {
    files.push_back(path);
  } else {
    throw SchemaError(path.string(), "no such file or directory");
  }

  std::set<std::string> ids;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw SchemaError(file.string(), "cannot open");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(file.string(), std::string("invalid JSON: ") + e.what());
    }
    std::string version = j.value("version", std::string{});
    if (cat.version.empty()) {
      cat.version = version;
    } else if (!version.empty() && version != cat.version) {
      throw SchemaError(file.string() + ".version",
                        "catalog files disagree: " + version + " vs " + cat.version);
    }
    // An empty rule file (no erc) is a valid zero-rule catalog.
    if (j.is_object() && !j.contains("erc") && j.value("rules", nlohmann::json::array()).empty()) {
      continue;
    }
    ErcRuleSet set = detail::parse_rule_set(j, file.filename().string());
    for (const auto& r : set.rules) {
      if (!ids.insert(r.id).second) throw SchemaError(r.id, "duplicate rule id");
    }
    if (cat.set_for(set.erc)) throw SchemaError(file.string(), "duplicate ERC document");
    cat.sets.push_back(std::move(set));
  }
  return cat;
}

// ---------------------------------------------------------------------------
// Rule applicability
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip_underscores_lower(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

inline bool return_type_matches(const std::string& cls, const std::string& normalized) {
  if (cls == "int") return normalized.rfind("uint", 0) == 0 || normalized.rfind("int", 0) == 0;
  if (cls == "bool") return normalized == "bool";
  if (cls == "address") return normalized == "address" || normalized == "address payable";
  if (cls == "string") return normalized == "string";
  return false;
}

}  // namespace detail

/// Map the document's parameter name (e.g. "_to") onto the contract
/// function's actual parameter: exact name first, then an underscore- and
/// case-insensitive match, then the declared positional index.
inline std::optional<std::string> resolve_rule_param(const Rule& rule, const FunctionDef& fn) {
  if (!rule.param) return std::nullopt;
  for (const auto& p : fn.params)
    if (p.name == *rule.param) return p.name;
  std::string want = detail::strip_underscores_lower(*rule.param);
  for (const auto& p : fn.params)
    if (detail::strip_underscores_lower(p.name) == want) return p.name;
  if (rule.param_index && *rule.param_index >= 0 &&
      static_cast<std::size_t>(*rule.param_index) < fn.params.size())
    return fn.params[static_cast<std::size_t>(*rule.param_index)].name;
  return std::nullopt;
}

/// Count return statements in the function body whose declared return type
/// falls in the rule's class. The declaration carries the type; the body must
/// actually return an expression for the mutation to have a site.
inline int count_typed_returns(const FunctionDef& fn, const std::string& type_class) {
  if (!fn.body || fn.returns.size() != 1) return 0;
  if (!detail::return_type_matches(type_class, fn.returns[0].type.normalized())) return 0;
  int n = 0;
  walk_stmt(*fn.body, [&](const Stmt& s) {
    if (s.is<ReturnStmt>() && s.as<ReturnStmt>().value) ++n;
  });
  return n;
}

/// The rules of the view's ERC whose preconditions hold against the view;
/// every returned rule's injection operator succeeds on the view.
inline std::vector<Rule> applicable_rules(const ContractView& view, const Catalog& catalog,
                                          const CallGraph& graph) {
  if (view.erc.tag == Erc::Unknown) throw NotAnErcContractError(view.name);
  const ErcRuleSet* set = catalog.set_for(view.erc.tag);
  std::vector<Rule> out;
  if (!set) return out;

  for (const auto& rule : set->rules) {
    if (!rule.injectable()) continue;
    const ContractView::Function* fn =
        rule.target ? view.find_function(*rule.target) : nullptr;
    switch (rule.category) {
      case RuleCategory::Api:
        if (fn) out.push_back(rule);
        break;
      case RuleCategory::Check: {
        if (!fn || !fn->def->body) break;
        auto actual = resolve_rule_param(rule, *fn->def);
        if (!actual) break;
        if (!find_param_checks(view, fn->sig, *actual, graph).empty()) out.push_back(rule);
        break;
      }
      case RuleCategory::Return:
        if (fn && count_typed_returns(*fn->def, *rule.return_type) > 0) out.push_back(rule);
        break;
      case RuleCategory::Value: {
        if (!fn || !fn->def->body) break;
        try {
          StateVarRef var = resolve_state_var(view, *rule.getter);
          if (!find_assignments(view, fn->sig, var.name, graph).empty()) out.push_back(rule);
        } catch (const Error&) {
          // unresolvable getter: the rule does not fit this contract
        }
        break;
      }
      case RuleCategory::Call:
        if (fn && fn->def->body &&
            !find_sites(view, fn->sig, *rule.callee, graph, /*want_event=*/false).empty())
          out.push_back(rule);
        break;
      case RuleCategory::Logging:
        if (fn && fn->def->body &&
            !find_sites(view, fn->sig, *rule.event, graph, /*want_event=*/true).empty())
          out.push_back(rule);
        break;
      case RuleCategory::Uncovered:
        break;
    }
  }
  return out;
}

}  // namespace ercbench
