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

// CWE-1280: access control check implemented after the asset is
// accessed. In RTL this surfaces as blocking-assignment ordering: a
// value read on an earlier line and overwritten by a blocking write on
// a later line of the same block means the earlier consumer saw the
// stale value. Reported as informational ordering hazards.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rtlscan/scanners/scanners.h"
#include "rtlscan/visitor.h"

namespace rtlscan {
namespace {

struct Access {
  const Node* block;  // innermost begin/end, or the always construct
  SourceLoc loc;
};

class ReadBeforeWriteScan final : public Visitor {
 public:
  ReadBeforeWriteScan() {
    mark_relevant(NodeKind::kAlwaysConstruct);
    mark_relevant(NodeKind::kSeqBlock);
    mark_relevant(NodeKind::kBlockingAssign);
    mark_relevant(NodeKind::kIdRef);
    mark_relevant(NodeKind::kIndexedRef);
  }

  std::map<std::string, std::vector<Access>> reads;
  std::map<std::string, std::vector<Access>> writes;

 protected:
  bool on_always(const AlwaysConstruct& n) override {
    note_gated();
    sens_.clear();
    for (const auto& item : n.sens) sens_.insert(item.signal);
    // The always body is the outermost block context, so blockless
    // statements of different always constructs never pair up.
    block_ = &n;
    if (n.body) walk(*n.body);
    sens_.clear();
    block_ = nullptr;
    return true;
  }

  bool on_seq_block(const SeqBlock& n) override {
    note_gated();
    const Node* saved = block_;
    block_ = &n;
    for (const auto& s : n.stmts) walk(*s);
    block_ = saved;
    return true;
  }

  bool on_blocking_assign(const BlockingAssign& n) override {
    note_gated();
    in_blocking_ = true;
    is_lhs_ = true;
    walk(*n.lhs);
    is_lhs_ = false;
    walk(*n.rhs);
    in_blocking_ = false;
    return true;
  }

  bool on_id_ref(const IdRef& n) override {
    note_gated();
    record(n.name, n.loc);
    return false;
  }

  bool on_indexed_ref(const IndexedRef& n) override {
    note_gated();
    record(n.base, n.loc);
    return false;
  }

 private:
  void record(const std::string& name, const SourceLoc& loc) {
    if (!in_blocking_ || sens_.count(name)) return;
    auto& list = is_lhs_ ? writes[name] : reads[name];
    list.push_back({block_, loc});
  }

  std::set<std::string> sens_;
  const Node* block_ = nullptr;
  bool in_blocking_ = false;
  bool is_lhs_ = false;
};

}  // namespace

ScannerStats scan_cwe1280(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags) {
  (void)rules;
  (void)diags;
  std::size_t before = findings->size();
  ReadBeforeWriteScan scan;
  accept(m, scan);

  // Every (read, later write) pair of the same identifier inside the
  // same block, deduplicated by line pair.
  for (const auto& [name, read_list] : scan.reads) {
    auto writes_it = scan.writes.find(name);
    if (writes_it == scan.writes.end()) continue;
    std::set<std::pair<int, int>> seen;
    for (const Access& r : read_list) {
      for (const Access& w : writes_it->second) {
        if (r.block != w.block) continue;
        if (r.loc.line >= w.loc.line) continue;
        if (!seen.insert({r.loc.line, w.loc.line}).second) continue;
        Finding f;
        f.cwe = 1280;
        f.kind = "read-before-write";
        f.module = m.name;
        f.loc = r.loc;
        f.line2 = w.loc.line;
        f.signals = {name};
        f.severity = Severity::kInfo;
        f.message = "'" + name + "' is read at line " +
                    std::to_string(r.loc.line) +
                    " and then overwritten by a blocking assignment at line " +
                    std::to_string(w.loc.line) +
                    " in the same block; the read sees the old value";
        findings->push_back(std::move(f));
      }
    }
  }

  ScannerStats stats;
  stats.relevant_nodes = scan.relevant_visited();
  stats.keyword_gated_nodes = scan.keyword_gated();
  stats.hits = findings->size() - before;
  return stats;
}

}  // namespace rtlscan
