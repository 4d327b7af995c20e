// Copyright 2026 The rtlscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CWE-1245: improper finite state machines. Recovers FSMs from the
// syntax (state registers, labels, transitions), then reports states
// that are never entered, states that are never left, and case
// statements over a state register that cover only part of the value
// space without a default arm.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rtlscan/scanners/cwe1245.h"
#include "rtlscan/scanners/scanners.h"
#include "rtlscan/visitor.h"
#include "scan_util.h"

namespace rtlscan {
namespace {

// ---------------------------------------------------------------------------
// Group discovery: union-find over eligible variables
// ---------------------------------------------------------------------------

// Eligible state registers: variables at least two bits wide.
bool eligible(const Scope& scope, const std::string& name) {
  const DeclaredId* id = scope.lookup(name);
  return id && id->is_variable() && id->width_bits && *id->width_bits >= 2;
}

class UnionFind {
 public:
  void add(const std::string& x) { parent_.try_emplace(x, x); }
  bool contains(const std::string& x) const { return parent_.count(x) > 0; }

  std::string find(const std::string& x) {
    std::string root = x;
    while (parent_.at(root) != root) root = parent_.at(root);
    std::string cur = x;
    while (parent_.at(cur) != root) {
      std::string next = parent_.at(cur);
      parent_.at(cur) = root;
      cur = next;
    }
    return root;
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // Smaller root name wins, keeping group identity deterministic.
    if (rb < ra) std::swap(ra, rb);
    parent_.at(rb) = ra;
  }

  std::map<std::string, std::vector<std::string>> groups() {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [name, _] : parent_) out[find(name)].push_back(name);
    return out;
  }

 private:
  std::map<std::string, std::string> parent_;
};

// First pass: links variables assigned to one another and collects the
// two kinds of FSM evidence, pooled per group. A group is an FSM when
// some member is equality-compared with a label (or switched on by a
// case) and some member is assigned a label.
class GroupDiscovery final : public Visitor {
 public:
  GroupDiscovery(const Module& m) : scope_(m.scope) {
    for (const auto& [name, id] : scope_.ids()) {
      if (eligible(scope_, name)) uf_.add(name);
    }
  }

  UnionFind& uf() { return uf_; }
  const std::set<std::string>& compared() const { return compared_; }
  const std::set<std::string>& assigned_label() const {
    return assigned_label_;
  }

 protected:
  bool on_any_assign(const SourceLoc&, const Expr& lhs, const Expr& rhs,
                     bool) override {
    const IdRef* l = as_plain_id(lhs);
    if (!l || !uf_.contains(l->name)) return false;
    if (const IdRef* r = as_plain_id(rhs); r && uf_.contains(r->name)) {
      uf_.unite(l->name, r->name);
      return false;
    }
    LabelValue label = classify_label(rhs, scope_);
    if (label.kind == LabelValue::Kind::kValue ||
        label.kind == LabelValue::Kind::kName) {
      assigned_label_.insert(l->name);
    }
    return false;
  }

  bool on_binary(const Binary& n) override {
    if (n.op != "==") return false;
    note_compare(*n.lhs, *n.rhs);
    note_compare(*n.rhs, *n.lhs);
    return false;
  }

  bool on_case(const CaseStatement& n) override {
    if (const IdRef* id = as_plain_id(*n.cond); id && uf_.contains(id->name)) {
      compared_.insert(id->name);
    }
    return false;
  }

 private:
  void note_compare(const Expr& side, const Expr& other) {
    const IdRef* id = as_plain_id(side);
    if (!id || !uf_.contains(id->name)) return;
    LabelValue label = classify_label(other, scope_);
    if (label.kind == LabelValue::Kind::kValue ||
        label.kind == LabelValue::Kind::kName) {
      compared_.insert(id->name);
    }
  }

  const Scope& scope_;
  UnionFind uf_;
  std::set<std::string> compared_;
  std::set<std::string> assigned_label_;
};

// ---------------------------------------------------------------------------
// Transition extraction
// ---------------------------------------------------------------------------

struct RawTransition {
  std::string var, from, to;
  SourceLoc loc;
  std::vector<std::string> conditions;
};
struct RawReset {
  std::string var, to;
  SourceLoc loc;
};

// Second pass. Tracks the present state established by `if (var ==
// LABEL)` and by case arms over a state register; records a transition
// for every label assignment to a state register reached with a present
// state, and a reset for label assignments reached without one.
// Assignments inside default arms or under case statements not keyed by
// a state register are excluded entirely.
class TransitionExtraction final : public Visitor {
 public:
  TransitionExtraction(const Module& m, const std::set<std::string>& fsm_vars,
                       DiagnosticList* diags)
      : scope_(m.scope), fsm_vars_(fsm_vars), diags_(diags) {
    mark_relevant(NodeKind::kConditional);
    mark_relevant(NodeKind::kCase);
    mark_relevant(NodeKind::kBlockingAssign);
    mark_relevant(NodeKind::kNonBlockingAssign);
  }

  std::vector<RawTransition> transitions;
  std::vector<RawReset> resets;
  std::vector<std::pair<const CaseStatement*, std::string>> cases;

 protected:
  bool on_conditional(const Conditional& n) override {
    note_gated();
    // `if (var == LABEL)`: the then branch runs in state LABEL; in the
    // else branch the state is unknown.
    if (auto state = match_state_compare(*n.if_expr)) {
      auto saved = present_;
      present_ = {{*state}};
      if (n.then_stmt) walk(*n.then_stmt);
      present_.clear();
      if (n.else_stmt) walk(*n.else_stmt);
      present_ = saved;
      return true;
    }
    conditions_.push_back(render_expr(*n.if_expr));
    if (n.then_stmt) walk(*n.then_stmt);
    conditions_.pop_back();
    if (n.else_stmt) {
      conditions_.push_back("!(" + render_expr(*n.if_expr) + ")");
      walk(*n.else_stmt);
      conditions_.pop_back();
    }
    return true;
  }

  bool on_case(const CaseStatement& n) override {
    note_gated();
    const IdRef* sel = as_plain_id(*n.cond);
    if (!sel || !fsm_vars_.count(sel->name)) {
      // Not a state switch: contents are walked but its label
      // assignments never count as transitions or resets.
      conditions_.push_back(render_expr(*n.cond));
      bool saved = stateless_arm_;
      stateless_arm_ = true;
      for (const auto& item : n.items) walk(*item);
      stateless_arm_ = saved;
      conditions_.pop_back();
      return true;
    }

    cases.emplace_back(&n, sel->name);
    for (const auto& item : n.items) {
      if (!item->stmt) continue;
      if (item->is_default) {
        conditions_.push_back(sel->name + " in default arm");
        bool saved = stateless_arm_;
        stateless_arm_ = true;
        walk(*item->stmt);
        stateless_arm_ = saved;
        conditions_.pop_back();
        continue;
      }
      std::vector<std::string> labels;
      for (const auto& label_expr : item->labels) {
        LabelValue label = classify_label(*label_expr, scope_);
        if (label.kind == LabelValue::Kind::kValue ||
            label.kind == LabelValue::Kind::kName) {
          labels.push_back(label.text);
        } else if (label.kind == LabelValue::Kind::kBad && diags_) {
          diags_->push_back({label_expr->loc,
                             "case label with x/z bits on state register '" +
                                 sel->name + "' ignored"});
        }
      }
      if (labels.empty()) {
        // Unusable labels: walk without a present state, excluded.
        conditions_.push_back(render_expr(*n.cond));
        bool saved = stateless_arm_;
        stateless_arm_ = true;
        walk(*item->stmt);
        stateless_arm_ = saved;
        conditions_.pop_back();
        continue;
      }
      if (!present_.empty()) {
        // A state is already established; the arm only refines it.
        conditions_.push_back(sel->name + " == " + labels.front());
        walk(*item->stmt);
        conditions_.pop_back();
        continue;
      }
      present_ = labels;
      walk(*item->stmt);
      present_.clear();
    }
    return true;
  }

  bool on_any_assign(const SourceLoc& loc, const Expr& lhs, const Expr& rhs,
                     bool) override {
    note_gated();
    const IdRef* l = as_plain_id(lhs);
    if (!l || !fsm_vars_.count(l->name)) return true;
    if (const IdRef* r = as_plain_id(rhs); r && fsm_vars_.count(r->name)) {
      return true;  // state-to-state copy, not a labeled transition
    }
    LabelValue label = classify_label(rhs, scope_);
    if (label.kind == LabelValue::Kind::kBad) {
      if (diags_) {
        diags_->push_back({rhs.loc, "state register '" + l->name +
                                        "' assigned a label with x/z bits; "
                                        "assignment ignored"});
      }
      return true;
    }
    if (label.kind != LabelValue::Kind::kValue &&
        label.kind != LabelValue::Kind::kName) {
      return true;  // computed value, not a literal state
    }
    if (stateless_arm_) return true;
    if (present_.empty()) {
      resets.push_back({l->name, label.text, loc});
    } else {
      for (const auto& from : present_) {
        transitions.push_back({l->name, from, label.text, loc, conditions_});
      }
    }
    return true;
  }

 private:
  // Matches a top-level `var == LABEL` over a state register.
  std::optional<std::string> match_state_compare(const Expr& e) {
    if (e.kind != NodeKind::kBinary) return std::nullopt;
    const auto& b = static_cast<const Binary&>(e);
    if (b.op != "==") return std::nullopt;
    auto side = [&](const Expr& var_side,
                    const Expr& label_side) -> std::optional<std::string> {
      const IdRef* id = as_plain_id(var_side);
      if (!id || !fsm_vars_.count(id->name)) return std::nullopt;
      LabelValue label = classify_label(label_side, scope_);
      if (label.kind == LabelValue::Kind::kValue ||
          label.kind == LabelValue::Kind::kName) {
        return label.text;
      }
      return std::nullopt;
    };
    if (auto s = side(*b.lhs, *b.rhs)) return s;
    return side(*b.rhs, *b.lhs);
  }

  const Scope& scope_;
  const std::set<std::string>& fsm_vars_;
  DiagnosticList* diags_;
  std::vector<std::string> present_;  // labels active for the current arm
  std::vector<std::string> conditions_;
  bool stateless_arm_ = false;
};

// ---------------------------------------------------------------------------
// Case completeness
// ---------------------------------------------------------------------------

// Expands one label into selector values of `width` bits, appending to
// `covered`. Returns false when the label cannot be enumerated.
bool expand_label(const Expr& e, CaseKind kind, int width,
                  std::set<std::uint64_t>* covered) {
  if (e.kind != NodeKind::kConst) return false;
  const auto& c = static_cast<const Const&>(e);
  if (!c.is_number) return false;
  std::uint64_t mask =
      width >= 64 ? ~0ULL : ((1ULL << width) - 1);
  if (c.value) {
    covered->insert(*c.value & mask);
    return true;
  }
  if (!c.has_xz) return false;  // malformed literal
  if (kind == CaseKind::kCase) return false;  // x/z match only x/z
  int bits_per_digit = c.base == 'b'   ? 1
                       : c.base == 'o' ? 3
                       : c.base == 'h' ? 4
                                       : 0;
  if (bits_per_digit == 0) return false;  // decimal x/z: opaque
  // Bit string, most significant first. '-' marks a wildcard bit.
  std::string bits;
  for (char d : c.digits) {
    bool wild = (d == 'z' || d == '?') || (kind == CaseKind::kCasex && d == 'x');
    if (d == 'x' && kind == CaseKind::kCasez) return false;  // literal x
    if (d == 'z' || d == 'x' || d == '?') {
      bits.append(static_cast<std::size_t>(bits_per_digit), wild ? '-' : 'x');
    } else {
      std::uint64_t v = (d >= '0' && d <= '9')
                            ? static_cast<std::uint64_t>(d - '0')
                            : static_cast<std::uint64_t>(d - 'a' + 10);
      for (int i = bits_per_digit - 1; i >= 0; --i) {
        bits.push_back((v >> i) & 1 ? '1' : '0');
      }
    }
  }
  // Truncate or zero-extend to the selector width.
  if (static_cast<int>(bits.size()) > width) {
    bits = bits.substr(bits.size() - static_cast<std::size_t>(width));
  } else {
    bits.insert(0, static_cast<std::size_t>(width) - bits.size(), '0');
  }
  std::vector<int> wild_positions;
  std::uint64_t base_value = 0;
  for (int i = 0; i < width; ++i) {
    char b = bits[static_cast<std::size_t>(i)];
    int bit_index = width - 1 - i;
    if (b == '-') {
      wild_positions.push_back(bit_index);
    } else if (b == '1') {
      base_value |= 1ULL << bit_index;
    }
  }
  std::uint64_t combos = 1ULL << wild_positions.size();
  for (std::uint64_t w = 0; w < combos; ++w) {
    std::uint64_t value = base_value;
    for (std::size_t i = 0; i < wild_positions.size(); ++i) {
      if ((w >> i) & 1) value |= 1ULL << wild_positions[i];
    }
    covered->insert(value & mask);
  }
  return true;
}

}  // namespace

std::optional<std::uint64_t> case_cover_count(const CaseStatement& cs,
                                              int width_bits) {
  if (width_bits < 1 || width_bits > 20) return std::nullopt;
  std::set<std::uint64_t> covered;
  std::set<std::string> opaque;
  for (const auto& item : cs.items) {
    if (item->is_default) continue;
    for (const auto& label : item->labels) {
      if (expand_label(*label, cs.case_kind, width_bits, &covered)) continue;
      // Parameters, macros and other opaque labels: each distinct text
      // covers at most one value.
      opaque.insert(render_expr(*label));
    }
  }
  std::uint64_t space = 1ULL << width_bits;
  std::uint64_t count = covered.size() + opaque.size();
  return count > space ? space : count;
}

std::optional<bool> case_is_complete(const CaseStatement& cs, int width_bits) {
  if (cs.has_default) return true;
  auto count = case_cover_count(cs, width_bits);
  if (!count) return std::nullopt;
  return *count >= (1ULL << width_bits);
}

FsmExtractionResult extract_fsms(const Module& m, DiagnosticList* diags) {
  FsmExtractionResult result;

  GroupDiscovery discovery(m);
  accept(m, discovery);

  std::set<std::string> fsm_vars;
  std::map<std::string, std::vector<std::string>> qualified;
  for (auto& [root, members] : discovery.uf().groups()) {
    bool any_compared = false, any_assigned = false;
    for (const auto& v : members) {
      any_compared |= discovery.compared().count(v) > 0;
      any_assigned |= discovery.assigned_label().count(v) > 0;
    }
    if (!any_compared || !any_assigned) continue;
    for (const auto& v : members) fsm_vars.insert(v);
    std::sort(members.begin(), members.end());
    qualified.emplace(root, members);
  }

  TransitionExtraction extraction(m, fsm_vars, diags);
  accept(m, extraction);

  // Distribute extracted transitions to their groups.
  std::map<std::string, std::size_t> group_index;
  for (auto& [root, members] : qualified) {
    FsmExtraction group;
    group.vars = members;
    for (const auto& v : members) group_index[v] = result.groups.size();
    result.groups.push_back(std::move(group));
  }
  for (auto& t : extraction.transitions) {
    result.groups[group_index.at(t.var)].transitions.push_back(
        {t.var, t.from, t.to, t.loc, t.conditions});
  }
  for (auto& r : extraction.resets) {
    result.groups[group_index.at(r.var)].resets.push_back({r.var, r.to, r.loc});
  }
  for (auto& [cs, var] : extraction.cases) {
    result.groups[group_index.at(var)].cases.emplace_back(cs, var);
  }

  result.stats.relevant_nodes = extraction.relevant_visited();
  result.stats.keyword_gated_nodes = extraction.keyword_gated();
  return result;
}

ScannerStats scan_cwe1245(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags) {
  (void)rules;
  std::size_t before = findings->size();
  FsmExtractionResult extraction = extract_fsms(m, diags);

  for (const FsmExtraction& group : extraction.groups) {
    // Set-membership liveness: a state is unreachable when nothing
    // transitions or resets into it, and a deadlock when it is entered
    // but never left.
    std::set<std::string> from, to, reset_to;
    for (const auto& t : group.transitions) {
      from.insert(t.from);
      to.insert(t.to);
    }
    for (const auto& r : group.resets) reset_to.insert(r.to);

    for (const auto& state : from) {
      if (to.count(state) || reset_to.count(state)) continue;
      const FsmTransition* first = nullptr;
      for (const auto& t : group.transitions) {
        if (t.from == state) {
          first = &t;
          break;
        }
      }
      Finding f;
      f.cwe = 1245;
      f.kind = "fsm-unreachable";
      f.module = m.name;
      f.loc = first->loc;
      // The state joins the variable so findings about different states
      // of one FSM keep distinct fingerprints.
      f.signals = {first->var, state};
      f.severity = Severity::kWarning;
      f.message = "FSM state " + state + " of '" + first->var +
                  "' is never entered: no transition or reset targets it";
      findings->push_back(std::move(f));
    }
    for (const auto& state : to) {
      if (from.count(state)) continue;
      const FsmTransition* first = nullptr;
      for (const auto& t : group.transitions) {
        if (t.to == state) {
          first = &t;
          break;
        }
      }
      Finding f;
      f.cwe = 1245;
      f.kind = "fsm-deadlock";
      f.module = m.name;
      f.loc = first->loc;
      f.signals = {first->var, state};
      f.severity = Severity::kWarning;
      f.message = "FSM state " + state + " of '" + first->var +
                  "' is never left: no outgoing transition";
      findings->push_back(std::move(f));
    }

    for (const auto& [cs, var] : group.cases) {
      const DeclaredId* id = m.scope.lookup(var);
      if (!id || !id->width_bits) continue;
      int width = *id->width_bits;
      auto complete = case_is_complete(*cs, width);
      if (!complete) {
        if (diags) {
          diags->push_back({cs->loc, "completeness of case on '" + var +
                                         "' is indeterminate (selector width " +
                                         std::to_string(width) + ")"});
        }
        continue;
      }
      if (*complete) continue;
      auto covered = case_cover_count(*cs, width);
      Finding f;
      f.cwe = 1245;
      f.kind = "incomplete-case";
      f.module = m.name;
      f.loc = cs->loc;
      f.signals = {var};
      f.severity = Severity::kWarning;
      f.message = "case on state register '" + var + "' covers " +
                  std::to_string(covered ? *covered : 0) + " of " +
                  std::to_string(1ULL << width) +
                  " values and has no default arm";
      findings->push_back(std::move(f));
    }
  }

  ScannerStats stats = extraction.stats;
  stats.hits = findings->size() - before;
  return stats;
}

}  // namespace rtlscan
