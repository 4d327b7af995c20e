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

// CWE-1234: hardware internal or debug modes allowing override of locks.
// Flags if-conditions that disjoin a lock/protection signal with a debug
// signal: when the disjunction guards a write, the debug path bypasses
// the lock. The check is syntactic; any condition containing a lock
// name, a debug name and an OR operator is reported.

#include <algorithm>
#include <string>
#include <vector>

#include "rtlscan/scanners/scanners.h"
#include "rtlscan/visitor.h"
#include "scan_util.h"

namespace rtlscan {
namespace {

// Evidence gathered from one if-condition tree.
struct CondEvidence {
  std::vector<std::string> lock_ids;
  std::vector<std::string> debug_ids;
  std::vector<std::string> keywords;
  std::string or_op;  // first || or | found, in syntactic order
};

void search_condition(const Expr& e, const Rulebook& rules, CondEvidence* ev) {
  if (e.kind == NodeKind::kBinary) {
    const auto& b = static_cast<const Binary&>(e);
    if (ev->or_op.empty() && (b.op == "||" || b.op == "|")) ev->or_op = b.op;
    search_condition(*b.lhs, rules, ev);
    search_condition(*b.rhs, rules, ev);
    return;
  }
  if (e.kind == NodeKind::kUnary) {
    search_condition(*static_cast<const Unary&>(e).operand, rules, ev);
    return;
  }
  if (e.kind == NodeKind::kTernary) {
    const auto& t = static_cast<const Ternary&>(e);
    search_condition(*t.cond, rules, ev);
    search_condition(*t.then_e, rules, ev);
    search_condition(*t.else_e, rules, ev);
    return;
  }
  if (e.kind == NodeKind::kConcat) {
    for (const auto& part : static_cast<const Concat&>(e).parts) {
      search_condition(*part, rules, ev);
    }
    return;
  }
  std::string name;
  if (e.kind == NodeKind::kIdRef) {
    name = static_cast<const IdRef&>(e).name;
  } else if (e.kind == NodeKind::kIndexedRef) {
    name = static_cast<const IndexedRef&>(e).base;
  } else {
    return;
  }
  if (std::string kw = rules.lock.matched_keyword(name); !kw.empty()) {
    ev->lock_ids.push_back(name);
    ev->keywords.push_back(std::move(kw));
  }
  if (std::string kw = rules.debug.matched_keyword(name); !kw.empty()) {
    ev->debug_ids.push_back(name);
    ev->keywords.push_back(std::move(kw));
  }
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

class DebugOverrideScan final : public Visitor {
 public:
  DebugOverrideScan(const Module& m, const Rulebook& rules,
                    std::vector<Finding>* findings)
      : module_(m), rules_(rules), findings_(findings) {
    mark_relevant(NodeKind::kConditional);
  }

 protected:
  bool on_conditional(const Conditional& n) override {
    CondEvidence ev;
    search_condition(*n.if_expr, rules_, &ev);
    // Keyword gate: only conditions naming a lock or debug signal are
    // analyzed further. A finding needs both plus a disjunction.
    if (!ev.lock_ids.empty() || !ev.debug_ids.empty()) {
      note_gated();
      if (!ev.lock_ids.empty() && !ev.debug_ids.empty() && !ev.or_op.empty()) {
        emit(n, ev);
      }
    }
    if (n.else_stmt) walk(*n.else_stmt);
    if (n.then_stmt) walk(*n.then_stmt);
    return true;
  }

 private:
  void emit(const Conditional& n, CondEvidence& ev) {
    sort_unique(ev.lock_ids);
    sort_unique(ev.debug_ids);
    sort_unique(ev.keywords);

    Finding f;
    f.cwe = 1234;
    f.kind = "debug-override";
    f.module = module_.name;
    f.loc = n.loc;
    f.signals = ev.lock_ids;
    for (const auto& d : ev.debug_ids) {
      if (!std::ranges::count(f.signals, d)) f.signals.push_back(d);
    }
    f.keywords = ev.keywords;
    f.severity = Severity::kWarning;
    f.message = "if-condition combines lock signal '" + ev.lock_ids.front() +
                "' with debug signal '" + ev.debug_ids.front() + "' using '" +
                ev.or_op + "'; the debug path can bypass the lock";
    findings_->push_back(std::move(f));
  }

  const Module& module_;
  const Rulebook& rules_;
  std::vector<Finding>* findings_;
};

}  // namespace

ScannerStats scan_cwe1234(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags) {
  (void)diags;
  std::size_t before = findings->size();
  DebugOverrideScan scan(m, rules, findings);
  accept(m, scan);
  ScannerStats stats;
  stats.relevant_nodes = scan.relevant_visited();
  stats.keyword_gated_nodes = scan.keyword_gated();
  stats.hits = findings->size() - before;
  return stats;
}

}  // namespace rtlscan
