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

// CWE-1271: uninitialized value on reset for registers holding security
// state. Finds registers whose names mark them security-relevant and
// checks that each is assigned somewhere under a reset condition (or
// initialized at its declaration).

#include <map>
#include <string>
#include <vector>

#include "rtlscan/scanners/scanners.h"
#include "rtlscan/visitor.h"
#include "scan_util.h"

namespace rtlscan {
namespace {

struct SecurityReg {
  SourceLoc decl_loc;
  std::string keyword;
  bool initialized = false;
};

class MissingResetScan final : public Visitor {
 public:
  MissingResetScan(const Rulebook& rules) : rules_(rules) {
    mark_relevant(NodeKind::kDataDecl);
    mark_relevant(NodeKind::kConditional);
    mark_relevant(NodeKind::kBlockingAssign);
    mark_relevant(NodeKind::kNonBlockingAssign);
    mark_relevant(NodeKind::kIdRef);
    mark_relevant(NodeKind::kIndexedRef);
  }

  // Registration order of security registers is declaration order.
  std::vector<std::string> order;
  std::map<std::string, SecurityReg> regs;

 protected:
  bool on_data_decl(const DataDecl& n) override {
    if (n.storage != StorageKind::kRegister) return false;
    for (const auto& id : n.ids) {
      std::string kw = rules_.security_register.matched_keyword(id.name);
      if (kw.empty()) continue;
      note_gated();
      auto [it, inserted] = regs.try_emplace(id.name);
      if (inserted) {
        order.push_back(id.name);
        it->second.decl_loc = id.loc;
        it->second.keyword = std::move(kw);
      }
      if (id.has_init) it->second.initialized = true;
    }
    return false;
  }

  bool on_conditional(const Conditional& n) override {
    bool reset_cond = false;
    for_each_id(*n.if_expr, [&](const Expr&, const std::string& name) {
      if (rules_.reset.matches(name)) reset_cond = true;
    });
    if (!reset_cond) return false;
    note_gated();
    bool saved = in_reset_;
    in_reset_ = true;
    if (n.then_stmt) walk(*n.then_stmt);
    in_reset_ = saved;
    if (n.else_stmt) walk(*n.else_stmt);
    return true;
  }

  bool on_any_assign(const SourceLoc&, const Expr& lhs, const Expr&,
                     bool) override {
    if (!in_reset_) return true;  // assignment can't initialize on reset
    note_gated();
    in_reset_lhs_ = true;
    walk(lhs);
    in_reset_lhs_ = false;
    return true;
  }

  bool on_id_ref(const IdRef& n) override {
    mark_initialized(n.name);
    return false;
  }

  bool on_indexed_ref(const IndexedRef& n) override {
    mark_initialized(n.base);
    return false;
  }

 private:
  void mark_initialized(const std::string& name) {
    if (!in_reset_lhs_) return;
    auto it = regs.find(name);
    if (it == regs.end()) return;
    note_gated();
    it->second.initialized = true;
  }

  const Rulebook& rules_;
  bool in_reset_ = false;
  bool in_reset_lhs_ = false;
};

}  // namespace

ScannerStats scan_cwe1271(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags) {
  (void)diags;
  std::size_t before = findings->size();
  MissingResetScan scan(rules);
  accept(m, scan);

  for (const auto& name : scan.order) {
    const SecurityReg& reg = scan.regs.at(name);
    if (reg.initialized) continue;
    Finding f;
    f.cwe = 1271;
    f.kind = "missing-reset";
    f.module = m.name;
    f.loc = reg.decl_loc;
    f.signals = {name};
    f.keywords = {reg.keyword};
    f.severity = Severity::kWarning;
    f.message = "security register '" + name +
                "' is never initialized under a reset condition";
    findings->push_back(std::move(f));
  }

  ScannerStats stats;
  stats.relevant_nodes = scan.relevant_visited();
  stats.keyword_gated_nodes = scan.keyword_gated();
  stats.hits = findings->size() - before;
  return stats;
}

}  // namespace rtlscan
