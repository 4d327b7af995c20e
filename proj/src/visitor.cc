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

#include "rtlscan/visitor.h"

namespace rtlscan {

void Visitor::walk(const Node& n) {
  ++visited_;
  if (relevant_mask_.test(static_cast<std::size_t>(n.kind))) ++relevant_;
  if (!dispatch(n)) descend(n);
}

bool Visitor::dispatch(const Node& n) {
  switch (n.kind) {
    case NodeKind::kModule:
      return on_module(static_cast<const Module&>(n));
    case NodeKind::kDataDecl:
      return on_data_decl(static_cast<const DataDecl&>(n));
    case NodeKind::kParamDecl:
      return on_param_decl(static_cast<const ParamDecl&>(n));
    case NodeKind::kAlwaysConstruct:
      return on_always(static_cast<const AlwaysConstruct&>(n));
    case NodeKind::kEventControl:
      return on_event_control(static_cast<const EventControl&>(n));
    case NodeKind::kSeqBlock:
      return on_seq_block(static_cast<const SeqBlock&>(n));
    case NodeKind::kConditional:
      return on_conditional(static_cast<const Conditional&>(n));
    case NodeKind::kCase:
      return on_case(static_cast<const CaseStatement&>(n));
    case NodeKind::kCaseItem:
      return on_case_item(static_cast<const CaseItem&>(n));
    case NodeKind::kBlockingAssign:
      return on_blocking_assign(static_cast<const BlockingAssign&>(n));
    case NodeKind::kNonBlockingAssign:
      return on_nonblocking_assign(static_cast<const NonBlockingAssign&>(n));
    case NodeKind::kContinuousAssign:
      return on_continuous_assign(static_cast<const ContinuousAssign&>(n));
    case NodeKind::kModuleInstance:
      return on_instance(static_cast<const ModuleInstance&>(n));
    case NodeKind::kIdRef:
      return on_id_ref(static_cast<const IdRef&>(n));
    case NodeKind::kIndexedRef:
      return on_indexed_ref(static_cast<const IndexedRef&>(n));
    case NodeKind::kConst:
      return on_const(static_cast<const Const&>(n));
    case NodeKind::kUnary:
      return on_unary(static_cast<const Unary&>(n));
    case NodeKind::kBinary:
      return on_binary(static_cast<const Binary&>(n));
    case NodeKind::kTernary:
      return on_ternary(static_cast<const Ternary&>(n));
    case NodeKind::kConcat:
      return on_concat(static_cast<const Concat&>(n));
  }
  return false;
}

void Visitor::descend(const Node& n) {
  switch (n.kind) {
    case NodeKind::kModule: {
      const auto& m = static_cast<const Module&>(n);
      for (const auto& item : m.items) walk(*item);
      break;
    }
    case NodeKind::kDataDecl: {
      const auto& d = static_cast<const DataDecl&>(n);
      for (const auto& init : d.inits) {
        if (init) walk(*init);
      }
      break;
    }
    case NodeKind::kParamDecl: {
      const auto& p = static_cast<const ParamDecl&>(n);
      for (const auto& v : p.values) {
        if (v) walk(*v);
      }
      break;
    }
    case NodeKind::kAlwaysConstruct: {
      const auto& a = static_cast<const AlwaysConstruct&>(n);
      if (a.body) walk(*a.body);
      break;
    }
    case NodeKind::kEventControl: {
      const auto& e = static_cast<const EventControl&>(n);
      if (e.body) walk(*e.body);
      break;
    }
    case NodeKind::kSeqBlock: {
      const auto& b = static_cast<const SeqBlock&>(n);
      for (const auto& s : b.stmts) walk(*s);
      break;
    }
    case NodeKind::kConditional: {
      const auto& c = static_cast<const Conditional&>(n);
      walk(*c.if_expr);
      if (c.then_stmt) walk(*c.then_stmt);
      if (c.else_stmt) walk(*c.else_stmt);
      break;
    }
    case NodeKind::kCase: {
      const auto& c = static_cast<const CaseStatement&>(n);
      walk(*c.cond);
      for (const auto& item : c.items) walk(*item);
      break;
    }
    case NodeKind::kCaseItem: {
      const auto& item = static_cast<const CaseItem&>(n);
      for (const auto& label : item.labels) walk(*label);
      if (item.stmt) walk(*item.stmt);
      break;
    }
    case NodeKind::kBlockingAssign: {
      const auto& a = static_cast<const BlockingAssign&>(n);
      walk(*a.lhs);
      walk(*a.rhs);
      break;
    }
    case NodeKind::kNonBlockingAssign: {
      const auto& a = static_cast<const NonBlockingAssign&>(n);
      walk(*a.lhs);
      walk(*a.rhs);
      break;
    }
    case NodeKind::kContinuousAssign: {
      const auto& a = static_cast<const ContinuousAssign&>(n);
      walk(*a.lhs);
      walk(*a.rhs);
      break;
    }
    case NodeKind::kModuleInstance: {
      const auto& inst = static_cast<const ModuleInstance&>(n);
      for (const auto& conn : inst.connections) {
        if (conn.expr) walk(*conn.expr);
      }
      break;
    }
    case NodeKind::kUnary:
      walk(*static_cast<const Unary&>(n).operand);
      break;
    case NodeKind::kBinary: {
      const auto& b = static_cast<const Binary&>(n);
      walk(*b.lhs);
      walk(*b.rhs);
      break;
    }
    case NodeKind::kTernary: {
      const auto& t = static_cast<const Ternary&>(n);
      walk(*t.cond);
      walk(*t.then_e);
      walk(*t.else_e);
      break;
    }
    case NodeKind::kConcat: {
      const auto& c = static_cast<const Concat&>(n);
      for (const auto& part : c.parts) walk(*part);
      break;
    }
    case NodeKind::kIdRef:
    case NodeKind::kIndexedRef:
    case NodeKind::kConst:
      break;  // leaves
  }
}

void accept(const Node& root, Visitor& v) { v.walk(root); }

std::uint64_t count_nodes(const Node& root) {
  Visitor v;
  v.walk(root);
  return v.nodes_visited();
}

}  // namespace rtlscan
