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

#include "rtlscan/ast.h"

#include <array>

namespace rtlscan {

const char* node_kind_name(NodeKind k) {
  static constexpr std::array<const char*, kNodeKindCount> kNames = {
      "Module",        "DataDecl",       "ParamDecl",
      "AlwaysConstruct", "EventControl", "SeqBlock",
      "Conditional",   "Case",           "CaseItem",
      "BlockingAssign", "NonBlockingAssign", "ContinuousAssign",
      "ModuleInstance", "IdRef",         "IndexedRef",
      "Const",         "Unary",          "Binary",
      "Ternary",       "Concat",
  };
  return kNames[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Scope
// ---------------------------------------------------------------------------

void Scope::insert(DeclaredId id, DiagnosticList* diags) {
  auto it = ids_.find(id.name);
  if (it == ids_.end()) {
    ids_.emplace(id.name, std::move(id));
    return;
  }
  DeclaredId& existing = it->second;
  // Classic non-ANSI style declares a name twice: once with a direction
  // ("output q;") and once with storage ("reg q;"). Such pairs merge;
  // two explicit-storage declarations of one name keep the first and
  // record a diagnostic.
  if (!existing.storage_explicit && id.storage_explicit) {
    PortDir dir = existing.dir != PortDir::kNone ? existing.dir : id.dir;
    bool port = existing.is_port || id.is_port;
    existing.storage = id.storage;
    existing.storage_explicit = true;
    if (id.width_bits) existing.width_bits = id.width_bits;
    existing.has_init = existing.has_init || id.has_init;
    existing.is_array = existing.is_array || id.is_array;
    if (!id.array_dims_text.empty()) existing.array_dims_text = id.array_dims_text;
    existing.dir = dir;
    existing.is_port = port;
    return;
  }
  if (existing.storage_explicit && !id.storage_explicit) {
    if (existing.dir == PortDir::kNone) existing.dir = id.dir;
    existing.is_port = existing.is_port || id.is_port;
    return;
  }
  if (!existing.storage_explicit && !id.storage_explicit) {
    if (existing.dir == PortDir::kNone) existing.dir = id.dir;
    if (!existing.width_bits) existing.width_bits = id.width_bits;
    existing.is_port = existing.is_port || id.is_port;
    return;
  }
  if (diags) {
    diags->push_back(
        {id.loc, "duplicate declaration of '" + id.name + "'; first one kept"});
  }
}

const DeclaredId* Scope::lookup(std::string_view name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? nullptr : &it->second;
}

bool Scope::is_parameter(std::string_view name) const {
  const DeclaredId* id = lookup(name);
  return id != nullptr && id->storage == StorageKind::kParameter;
}

Scope build_scope(const Module& m, DiagnosticList* diags) {
  Scope scope;
  // Port names first, as placeholders; full declarations merge into them.
  for (const std::string& port : m.port_names) {
    DeclaredId id;
    id.name = port;
    id.loc = m.loc;
    id.is_port = true;
    scope.insert(std::move(id), diags);
  }
  for (const auto& item : m.items) {
    if (item->kind == NodeKind::kDataDecl) {
      const auto& decl = static_cast<const DataDecl&>(*item);
      for (const DeclaredId& id : decl.ids) scope.insert(id, diags);
    } else if (item->kind == NodeKind::kParamDecl) {
      const auto& decl = static_cast<const ParamDecl&>(*item);
      for (const DeclaredId& id : decl.ids) scope.insert(id, diags);
    }
  }
  return scope;
}

// ---------------------------------------------------------------------------
// Expression rendering
// ---------------------------------------------------------------------------

namespace {

// Binding strength; larger binds tighter. Mirrors the parser's table.
int binary_prec(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|" || op == "~|") return 3;
  if (op == "^" || op == "~^" || op == "^~") return 4;
  if (op == "&" || op == "~&") return 5;
  if (op == "==" || op == "!=" || op == "===" || op == "!==") return 6;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 7;
  if (op == "<<" || op == ">>" || op == "<<<" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  if (op == "**") return 11;
  return 12;
}

void render(const Expr& e, int parent_prec, std::string& out) {
  switch (e.kind) {
    case NodeKind::kIdRef:
      out += static_cast<const IdRef&>(e).name;
      return;
    case NodeKind::kIndexedRef:
      out += static_cast<const IndexedRef&>(e).full_text();
      return;
    case NodeKind::kConst:
      out += static_cast<const Const&>(e).raw;
      return;
    case NodeKind::kUnary: {
      const auto& u = static_cast<const Unary&>(e);
      out += u.op;
      const bool atom = u.operand->kind == NodeKind::kIdRef ||
                        u.operand->kind == NodeKind::kIndexedRef ||
                        u.operand->kind == NodeKind::kConst ||
                        u.operand->kind == NodeKind::kConcat;
      // The explicit parens make the operand a fresh context, so it
      // must not add a precedence pair of its own.
      if (!atom) out += '(';
      render(*u.operand, 0, out);
      if (!atom) out += ')';
      return;
    }
    case NodeKind::kBinary: {
      const auto& b = static_cast<const Binary&>(e);
      const int prec = binary_prec(b.op);
      const bool parens = prec < parent_prec;
      if (parens) out += '(';
      render(*b.lhs, prec, out);
      out += ' ';
      out += b.op;
      out += ' ';
      render(*b.rhs, prec + 1, out);
      if (parens) out += ')';
      return;
    }
    case NodeKind::kTernary: {
      const auto& t = static_cast<const Ternary&>(e);
      const bool parens = parent_prec > 0;
      if (parens) out += '(';
      render(*t.cond, 1, out);
      out += " ? ";
      render(*t.then_e, 0, out);
      out += " : ";
      render(*t.else_e, 0, out);
      if (parens) out += ')';
      return;
    }
    case NodeKind::kConcat: {
      const auto& c = static_cast<const Concat&>(e);
      out += '{';
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) out += ", ";
        render(*c.parts[i], 0, out);
      }
      out += '}';
      return;
    }
    default:
      out += "<expr>";
      return;
  }
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::string out;
  render(e, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// State-label classification
// ---------------------------------------------------------------------------

LabelValue classify_label(const Expr& e, const Scope& scope) {
  if (e.kind == NodeKind::kConst) {
    const auto& c = static_cast<const Const&>(e);
    if (!c.is_number) return {LabelValue::Kind::kNotLabel, {}};
    if (c.has_xz || !c.value) return {LabelValue::Kind::kBad, c.raw};
    return {LabelValue::Kind::kValue, std::to_string(*c.value)};
  }
  if (e.kind == NodeKind::kIdRef) {
    const auto& id = static_cast<const IdRef&>(e);
    const DeclaredId* decl = scope.lookup(id.name);
    // Unresolved names are macro-derived labels; parameters are named
    // constants. Declared signals are not labels.
    if (decl == nullptr || decl->storage == StorageKind::kParameter) {
      return {LabelValue::Kind::kName, id.name};
    }
    return {LabelValue::Kind::kNotLabel, {}};
  }
  return {LabelValue::Kind::kNotLabel, {}};
}

}  // namespace rtlscan
