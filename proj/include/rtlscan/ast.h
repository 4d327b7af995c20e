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

#ifndef RTLSCAN_AST_H_
#define RTLSCAN_AST_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtlscan/source_loc.h"

namespace rtlscan {

enum class NodeKind {
  kModule,
  kDataDecl,
  kParamDecl,
  kAlwaysConstruct,
  kEventControl,
  kSeqBlock,
  kConditional,
  kCase,
  kCaseItem,
  kBlockingAssign,
  kNonBlockingAssign,
  kContinuousAssign,
  kModuleInstance,
  kIdRef,
  kIndexedRef,
  kConst,
  kUnary,
  kBinary,
  kTernary,
  kConcat,
};
constexpr std::size_t kNodeKindCount = 20;

const char* node_kind_name(NodeKind k);

// Base of all syntax nodes. Trees are immutable after parsing; scanners
// share them read-only, which keeps concurrent per-module scans safe.
struct Node {
  NodeKind kind;
  SourceLoc loc;
  virtual ~Node() = default;

 protected:
  Node(NodeKind k, SourceLoc l) : kind(k), loc(std::move(l)) {}
};
using NodePtr = std::unique_ptr<Node>;

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr : Node {
 protected:
  using Node::Node;
};
using ExprPtr = std::unique_ptr<Expr>;

struct IdRef final : Expr {
  std::string name;
  IdRef(std::string n, SourceLoc l)
      : Expr(NodeKind::kIdRef, std::move(l)), name(std::move(n)) {}
};

// A select such as data[3], mem[0] or addr[7:3]. The index is kept as
// raw text; identifiers inside an index are not tracked individually.
struct IndexedRef final : Expr {
  std::string base;
  std::string index_text;
  IndexedRef(std::string b, std::string idx, SourceLoc l)
      : Expr(NodeKind::kIndexedRef, std::move(l)),
        base(std::move(b)),
        index_text(std::move(idx)) {}
  std::string full_text() const { return base + "[" + index_text + "]"; }
};

// Numeric literals, plus opaque leaves (strings; call-shaped expressions
// such as $signed(x), which are kept as text and not descended into).
struct Const final : Expr {
  std::string raw;
  bool is_number = false;
  std::optional<std::uint64_t> value;  // set for plain two-state constants
  std::optional<int> width_bits;       // explicit size prefix when given
  bool has_xz = false;                 // literal contains x, z or ?
  char base = 'd';
  std::string digits;  // cleaned digit string of a based literal
  Const(std::string r, SourceLoc l)
      : Expr(NodeKind::kConst, std::move(l)), raw(std::move(r)) {}
};

struct Unary final : Expr {
  std::string op;
  ExprPtr operand;
  Unary(std::string o, ExprPtr e, SourceLoc l)
      : Expr(NodeKind::kUnary, std::move(l)),
        op(std::move(o)),
        operand(std::move(e)) {}
};

struct Binary final : Expr {
  std::string op;
  ExprPtr lhs, rhs;
  Binary(std::string o, ExprPtr a, ExprPtr b, SourceLoc l)
      : Expr(NodeKind::kBinary, std::move(l)),
        op(std::move(o)),
        lhs(std::move(a)),
        rhs(std::move(b)) {}
};

struct Ternary final : Expr {
  ExprPtr cond, then_e, else_e;
  Ternary(ExprPtr c, ExprPtr t, ExprPtr e, SourceLoc l)
      : Expr(NodeKind::kTernary, std::move(l)),
        cond(std::move(c)),
        then_e(std::move(t)),
        else_e(std::move(e)) {}
};

struct Concat final : Expr {
  std::vector<ExprPtr> parts;
  explicit Concat(SourceLoc l) : Expr(NodeKind::kConcat, std::move(l)) {}
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

enum class StorageKind { kNet, kRegister, kInteger, kParameter };
enum class PortDir { kNone, kInput, kOutput, kInout };

// One declared name, as recorded in a module scope. width_bits is
// |msb - lsb| + 1 when both bounds are literal; integers are 32 bits;
// a declaration without a range is 1 bit wide.
struct DeclaredId {
  std::string name;
  SourceLoc loc;
  StorageKind storage = StorageKind::kNet;
  bool storage_explicit = false;  // reg/wire/logic/integer spelled out
  std::optional<int> width_bits;
  bool has_init = false;
  bool is_port = false;
  PortDir dir = PortDir::kNone;
  bool is_array = false;
  std::string array_dims_text;

  bool is_variable() const {
    return storage == StorageKind::kRegister ||
           storage == StorageKind::kInteger;
  }
};

struct DataDecl final : Node {
  StorageKind storage = StorageKind::kNet;
  bool storage_explicit = false;
  bool is_port_decl = false;
  bool has_range = false;  // a [msb:lsb] was written, literal or not
  std::optional<std::pair<long long, long long>> range;  // literal msb, lsb
  std::vector<DeclaredId> ids;
  std::vector<ExprPtr> inits;  // parallel to ids; null when absent
  explicit DataDecl(SourceLoc l) : Node(NodeKind::kDataDecl, std::move(l)) {}
};

struct ParamDecl final : Node {
  bool local = false;
  std::vector<DeclaredId> ids;
  std::vector<ExprPtr> values;  // parallel to ids; kept unevaluated
  explicit ParamDecl(SourceLoc l) : Node(NodeKind::kParamDecl, std::move(l)) {}
};

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt : Node {
 protected:
  using Node::Node;
};
using StmtPtr = std::unique_ptr<Stmt>;

enum class Edge { kNone, kPosedge, kNegedge };

struct SensItem {
  Edge edge = Edge::kNone;
  std::string signal;  // base name of the sensitivity expression
};

struct EventControl final : Stmt {
  std::vector<SensItem> sens;
  StmtPtr body;
  explicit EventControl(SourceLoc l)
      : Stmt(NodeKind::kEventControl, std::move(l)) {}
};

struct SeqBlock final : Stmt {
  std::string label;
  std::vector<StmtPtr> stmts;
  explicit SeqBlock(SourceLoc l) : Stmt(NodeKind::kSeqBlock, std::move(l)) {}
};

struct Conditional final : Stmt {
  ExprPtr if_expr;
  StmtPtr then_stmt;  // may be null (bare semicolon)
  StmtPtr else_stmt;  // null when absent
  explicit Conditional(SourceLoc l)
      : Stmt(NodeKind::kConditional, std::move(l)) {}
};

struct CaseItem final : Node {
  std::vector<ExprPtr> labels;  // empty iff is_default
  StmtPtr stmt;                 // may be null (bare semicolon)
  bool is_default = false;
  explicit CaseItem(SourceLoc l) : Node(NodeKind::kCaseItem, std::move(l)) {}
};

enum class CaseKind { kCase, kCasez, kCasex };

struct CaseStatement final : Stmt {
  CaseKind case_kind = CaseKind::kCase;
  ExprPtr cond;
  std::vector<std::unique_ptr<CaseItem>> items;
  bool has_default = false;
  explicit CaseStatement(SourceLoc l) : Stmt(NodeKind::kCase, std::move(l)) {}
};

struct BlockingAssign final : Stmt {
  ExprPtr lhs, rhs;
  explicit BlockingAssign(SourceLoc l)
      : Stmt(NodeKind::kBlockingAssign, std::move(l)) {}
};

struct NonBlockingAssign final : Stmt {
  ExprPtr lhs, rhs;
  explicit NonBlockingAssign(SourceLoc l)
      : Stmt(NodeKind::kNonBlockingAssign, std::move(l)) {}
};

// ---------------------------------------------------------------------------
// Module items
// ---------------------------------------------------------------------------

enum class AlwaysKind { kAlways, kComb, kFf };

// always / always_comb / always_ff. `sens` mirrors the event control's
// items (empty for combinational and wildcard lists).
struct AlwaysConstruct final : Node {
  AlwaysKind always_kind = AlwaysKind::kAlways;
  std::vector<SensItem> sens;
  StmtPtr body;
  explicit AlwaysConstruct(SourceLoc l)
      : Node(NodeKind::kAlwaysConstruct, std::move(l)) {}
};

struct ContinuousAssign final : Node {
  ExprPtr lhs, rhs;
  explicit ContinuousAssign(SourceLoc l)
      : Node(NodeKind::kContinuousAssign, std::move(l)) {}
};

struct Connection {
  std::string port;  // empty for positional connections
  ExprPtr expr;      // null for unconnected ports
};

struct ModuleInstance final : Node {
  std::string module_name;
  std::string instance_name;
  std::string param_text;  // raw #(...) override text, if any
  std::vector<Connection> connections;
  explicit ModuleInstance(SourceLoc l)
      : Node(NodeKind::kModuleInstance, std::move(l)) {}
};

// Name table of one module. Duplicate declarations keep the first entry
// and record a diagnostic; port directions merge into later full
// declarations of the same name.
class Scope {
 public:
  void insert(DeclaredId id, DiagnosticList* diags);
  const DeclaredId* lookup(std::string_view name) const;
  bool is_parameter(std::string_view name) const;
  std::size_t size() const { return ids_.size(); }
  const std::map<std::string, DeclaredId, std::less<>>& ids() const {
    return ids_;
  }

 private:
  std::map<std::string, DeclaredId, std::less<>> ids_;
};

struct Module final : Node {
  std::string name;
  std::vector<std::string> port_names;
  std::vector<NodePtr> items;
  Scope scope;  // populated by build_scope
  explicit Module(SourceLoc l) : Node(NodeKind::kModule, std::move(l)) {}
};

// Collects ports, data declarations and parameters into a Scope.
Scope build_scope(const Module& m, DiagnosticList* diags = nullptr);

// Renders an expression back to source-like text (used for condition
// evidence strings and messages).
std::string render_expr(const Expr& e);

// ---------------------------------------------------------------------------
// State-label classification (used by the FSM scanner)
// ---------------------------------------------------------------------------

struct LabelValue {
  enum class Kind {
    kNotLabel,  // not usable as a state label
    kValue,     // constant; text is the normalized unsigned value
    kName,      // parameter or unresolved identifier; text is the name
    kBad,       // constant with x/z digits or unrepresentable value
  };
  Kind kind = Kind::kNotLabel;
  std::string text;
};

LabelValue classify_label(const Expr& e, const Scope& scope);

}  // namespace rtlscan

#endif  // RTLSCAN_AST_H_
