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

// CWE-1262: improper access control for register interface. For every
// register written from a write-data bus, collects the control signals
// guarding the write (enclosing if-conditions and the selector of a
// ternary feeding the register). Registers with no guards beyond clocks
// and resets are unprotected; entries of one register array guarded by
// fewer or different controls than their peers are called out.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rtlscan/scanners/scanners.h"
#include "rtlscan/visitor.h"

namespace rtlscan {
namespace {

struct RegWrite {
  SourceLoc loc;
  std::vector<std::string> controls;  // raw capture, duplicates possible
  std::string keyword;                // wdata keyword that matched
};

class WriteProtectionScan final : public Visitor {
 public:
  explicit WriteProtectionScan(const Rulebook& rules) : rules_(rules) {
    mark_relevant(NodeKind::kAlwaysConstruct);
    mark_relevant(NodeKind::kConditional);
    mark_relevant(NodeKind::kTernary);
    mark_relevant(NodeKind::kNonBlockingAssign);
    mark_relevant(NodeKind::kIdRef);
    mark_relevant(NodeKind::kIndexedRef);
  }

  std::vector<std::string> order;  // first-seen register keys
  std::map<std::string, RegWrite> writes;

 protected:
  bool on_always(const AlwaysConstruct& n) override {
    controls_.clear();
    if (n.body) walk(*n.body);
    controls_.clear();
    return true;
  }

  bool on_conditional(const Conditional& n) override {
    std::size_t mark = controls_.size();
    is_control_ = true;
    walk(*n.if_expr);
    is_control_ = false;
    if (n.then_stmt) walk(*n.then_stmt);
    // The else branch stays under the if-condition's controls: the
    // signal still decides what is written there.
    if (n.else_stmt) walk(*n.else_stmt);
    controls_.resize(mark);
    return true;
  }

  bool on_ternary(const Ternary& n) override {
    if (!is_rhs_ && !is_control_) return false;
    walk(*n.then_e);
    walk(*n.else_e);
    bool saved = is_control_;
    is_control_ = true;
    walk(*n.cond);
    is_control_ = saved;
    return true;
  }

  bool on_nonblocking_assign(const NonBlockingAssign& n) override {
    std::size_t mark = controls_.size();
    is_wdata_ = false;
    is_rhs_ = true;
    walk(*n.rhs);
    is_rhs_ = false;
    if (is_wdata_) {
      note_gated();
      is_lhs_ = true;
      walk(*n.lhs);
      is_lhs_ = false;
    }
    // Controls pushed by ternaries in this right-hand side are scoped
    // to this assignment.
    controls_.resize(mark);
    return true;
  }

  bool on_blocking_assign(const BlockingAssign&) override {
    return true;  // net-style data paths are out of scope here
  }

  bool on_id_ref(const IdRef& n) override {
    handle_ref(n.name, n.name, n.loc);
    return false;
  }

  bool on_indexed_ref(const IndexedRef& n) override {
    handle_ref(n.full_text(), n.full_text(), n.loc);
    return false;
  }

 private:
  void handle_ref(const std::string& text, const std::string& key,
                  const SourceLoc& loc) {
    if (is_rhs_) {
      if (std::string kw = rules_.wdata.matched_keyword(text); !kw.empty()) {
        is_wdata_ = true;
        keyword_ = std::move(kw);
        return;
      }
    }
    if (is_control_) {
      controls_.push_back(text);
      return;
    }
    if (is_lhs_) {
      auto [it, inserted] = writes.try_emplace(key);
      if (!inserted) return;  // first write wins
      note_gated();
      order.push_back(key);
      it->second.loc = loc;
      it->second.controls = controls_;
      it->second.keyword = keyword_;
    }
  }

  const Rulebook& rules_;
  std::vector<std::string> controls_;
  bool is_control_ = false;
  bool is_rhs_ = false;
  bool is_lhs_ = false;
  bool is_wdata_ = false;
  std::string keyword_;
};

// Sorted unique controls with clock/reset infrastructure removed.
std::vector<std::string> prune_controls(const std::vector<std::string>& raw,
                                        const Rulebook& rules) {
  std::vector<std::string> out;
  for (const auto& c : raw) {
    if (rules.control_prune.matches(c)) continue;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

// Array-entry ordering: numeric index order, then lexicographic for
// indices that are not plain numbers.
struct EntryOrder {
  bool numeric = false;
  std::uint64_t number = 0;
  std::string text;

  bool operator<(const EntryOrder& o) const {
    if (numeric != o.numeric) return numeric;
    if (numeric && number != o.number) return number < o.number;
    return text < o.text;
  }
};

EntryOrder index_order(const std::string& index_text) {
  EntryOrder ord;
  ord.text = index_text;
  if (!index_text.empty() &&
      std::all_of(index_text.begin(), index_text.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    ord.numeric = true;
    ord.number = std::stoull(index_text);
  }
  return ord;
}

struct Entry {
  std::string key;
  std::string index;
  EntryOrder ord;
  SourceLoc loc;
  std::vector<std::string> controls;  // pruned, sorted, unique
  std::string keyword;
};

}  // namespace

ScannerStats scan_cwe1262(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags) {
  (void)diags;
  std::size_t before = findings->size();
  WriteProtectionScan scan(rules);
  accept(m, scan);

  std::map<std::string, std::vector<Entry>> groups;  // base -> array entries

  for (const auto& key : scan.order) {
    const RegWrite& w = scan.writes.at(key);
    std::vector<std::string> pruned = prune_controls(w.controls, rules);

    if (pruned.empty()) {
      Finding f;
      f.cwe = 1262;
      f.kind = "unprotected-register";
      f.module = m.name;
      f.loc = w.loc;
      f.signals = {key};
      if (!w.keyword.empty()) f.keywords = {w.keyword};
      f.severity = Severity::kWarning;
      f.message = "register '" + key +
                  "' takes write data without any guarding control signal";
      findings->push_back(std::move(f));
    }

    // Indexed writes group by base name for peer comparison.
    std::size_t bracket = key.find('[');
    if (bracket != std::string::npos && key.back() == ']') {
      Entry e;
      e.key = key;
      e.index = key.substr(bracket + 1, key.size() - bracket - 2);
      e.ord = index_order(e.index);
      e.loc = w.loc;
      e.controls = std::move(pruned);
      e.keyword = w.keyword;
      groups[key.substr(0, bracket)].push_back(std::move(e));
    }
  }

  for (auto& [base, entries] : groups) {
    if (entries.size() < 2) continue;
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.ord < b.ord; });

    std::size_t max_controls = 0;
    for (const auto& e : entries) {
      max_controls = std::max(max_controls, e.controls.size());
    }
    for (const auto& e : entries) {
      if (e.controls.size() >= max_controls) continue;
      Finding f;
      f.cwe = 1262;
      f.kind = "less-protected";
      f.module = m.name;
      f.loc = e.loc;
      f.signals = {e.key};
      if (!e.keyword.empty()) f.keywords = {e.keyword};
      f.severity = Severity::kWarning;
      f.message = "register '" + e.key + "' is guarded by " +
                  std::to_string(e.controls.size()) + " control(s) while '" +
                  base + "' peers use up to " + std::to_string(max_controls);
      findings->push_back(std::move(f));
    }

    // Modal control set: the most common one; ties go to the set of
    // the lowest-indexed entry among the tied sets.
    std::map<std::vector<std::string>, std::pair<std::size_t, std::size_t>>
        freq;  // set -> (count, first entry position)
    for (std::size_t i = 0; i < entries.size(); ++i) {
      auto [it, inserted] = freq.try_emplace(entries[i].controls,
                                             std::make_pair(0u, i));
      it->second.first++;
    }
    const std::vector<std::string>* modal = nullptr;
    std::size_t best_count = 0, best_pos = 0;
    for (const auto& [set, info] : freq) {
      if (info.first > best_count ||
          (info.first == best_count && info.second < best_pos)) {
        best_count = info.first;
        best_pos = info.second;
        modal = &set;
      }
    }
    if (freq.size() > 1 && modal) {
      std::vector<const Entry*> odd;
      for (const auto& e : entries) {
        if (e.controls != *modal) odd.push_back(&e);
      }
      Finding f;
      f.cwe = 1262;
      f.kind = "non-identical-controls";
      f.module = m.name;
      f.loc = odd.front()->loc;
      for (const auto* e : odd) f.signals.push_back(e->key);
      if (!odd.front()->keyword.empty()) f.keywords = {odd.front()->keyword};
      f.severity = Severity::kWarning;
      std::string names = join(f.signals);
      f.message = "entries of '" + base +
                  "' are guarded by differing control sets: " + names +
                  (odd.size() == 1 ? " differs" : " differ") +
                  " from the common set {" + join(*modal) + "}";
      findings->push_back(std::move(f));
    }
  }

  ScannerStats stats;
  stats.relevant_nodes = scan.relevant_visited();
  stats.keyword_gated_nodes = scan.keyword_gated();
  stats.hits = findings->size() - before;
  return stats;
}

}  // namespace rtlscan
