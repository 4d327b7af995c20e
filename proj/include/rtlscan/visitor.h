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

#ifndef RTLSCAN_VISITOR_H_
#define RTLSCAN_VISITOR_H_

#include <bitset>
#include <cstdint>

#include "rtlscan/ast.h"

namespace rtlscan {

// Depth-first tree walker. For every node the matching on_* handler runs
// first; a handler returning true has taken over descent (it may walk any
// subset of the children, in any order, via walk()). A handler returning
// false gets default descent in syntactic order. Counters:
//   nodes_visited    every walk() entry
//   relevant_visited visits to kinds the subclass declared via mark_relevant
//   keyword_gated    incremented by subclasses when work proceeds past a
//                    keyword gate
class Visitor {
 public:
  virtual ~Visitor() = default;

  void walk(const Node& n);

  std::uint64_t nodes_visited() const { return visited_; }
  std::uint64_t relevant_visited() const { return relevant_; }
  std::uint64_t keyword_gated() const { return gated_; }

 protected:
  virtual bool on_module(const Module&) { return false; }
  virtual bool on_data_decl(const DataDecl&) { return false; }
  virtual bool on_param_decl(const ParamDecl&) { return false; }
  virtual bool on_always(const AlwaysConstruct&) { return false; }
  virtual bool on_event_control(const EventControl&) { return false; }
  virtual bool on_seq_block(const SeqBlock&) { return false; }
  virtual bool on_conditional(const Conditional&) { return false; }
  virtual bool on_case(const CaseStatement&) { return false; }
  virtual bool on_case_item(const CaseItem&) { return false; }
  // Blocking and non-blocking assignments are distinct variants; their
  // default handlers funnel into on_any_assign for scanners that treat
  // them alike.
  virtual bool on_blocking_assign(const BlockingAssign& n) {
    return on_any_assign(n.loc, *n.lhs, *n.rhs, /*blocking=*/true);
  }
  virtual bool on_nonblocking_assign(const NonBlockingAssign& n) {
    return on_any_assign(n.loc, *n.lhs, *n.rhs, /*blocking=*/false);
  }
  virtual bool on_any_assign(const SourceLoc&, const Expr&, const Expr&,
                             bool /*blocking*/) {
    return false;
  }
  virtual bool on_continuous_assign(const ContinuousAssign&) { return false; }
  virtual bool on_instance(const ModuleInstance&) { return false; }
  virtual bool on_id_ref(const IdRef&) { return false; }
  virtual bool on_indexed_ref(const IndexedRef&) { return false; }
  virtual bool on_const(const Const&) { return false; }
  virtual bool on_unary(const Unary&) { return false; }
  virtual bool on_binary(const Binary&) { return false; }
  virtual bool on_ternary(const Ternary&) { return false; }
  virtual bool on_concat(const Concat&) { return false; }

  // Default child traversal in syntactic order.
  void descend(const Node& n);

  void mark_relevant(NodeKind k) {
    relevant_mask_.set(static_cast<std::size_t>(k));
  }
  void note_gated(std::uint64_t n = 1) { gated_ += n; }

 private:
  bool dispatch(const Node& n);

  std::bitset<kNodeKindCount> relevant_mask_;
  std::uint64_t visited_ = 0;
  std::uint64_t relevant_ = 0;
  std::uint64_t gated_ = 0;
};

// Entry point for a traversal; equivalent to v.walk(root).
void accept(const Node& root, Visitor& v);

// Number of nodes in a tree (a traversal with no handlers).
std::uint64_t count_nodes(const Node& root);

}  // namespace rtlscan

#endif  // RTLSCAN_VISITOR_H_
