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

// Recursive-descent parser for the supported Verilog subset: module
// headers (ANSI and non-ANSI), data/parameter declarations, always
// blocks, begin/end, if/else, case/casez/casex, assignments, continuous
// assigns, module instantiations and plain expressions. Anything else
// aborts the file with a diagnostic naming the construct; the file is
// then reported as skipped rather than half-analyzed.

#include "rtlscan/parser.h"

#include <cctype>
#include <cstdlib>

#include "rtlscan/lexer.h"

namespace rtlscan {
namespace {

constexpr int kMaxNesting = 200;

// Internal unwinding for the skip-file policy. Caught in parse().
struct ParseBail {
  Diagnostic diagnostic;
};

[[noreturn]] void bail(const SourceLoc& loc, std::string message) {
  throw ParseBail{{loc, std::move(message)}};
}

[[noreturn]] void bail_unsupported(const Token& t) {
  bail(t.loc, "unsupported construct '" + t.lexeme + "'");
}

std::uint64_t digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint64_t>(c - '0');
  return static_cast<std::uint64_t>(std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
}

// Fills in the numeric fields of a Const from its lexeme
// ([size]'[s]base digits or plain decimal).
void analyze_number(Const& c) {
  c.is_number = true;
  const std::string& raw = c.raw;
  std::size_t tick = raw.find('\'');
  if (tick == std::string::npos) {
    std::uint64_t value = 0;
    bool overflow = false;
    for (char ch : raw) {
      if (ch == '_') continue;
      if (value > (UINT64_MAX - 9) / 10) {
        overflow = true;
        break;
      }
      value = value * 10 + digit_value(ch);
    }
    if (!overflow) c.value = value;
    c.base = 'd';
    return;
  }
  if (tick > 0) {
    c.width_bits = std::atoi(raw.substr(0, tick).c_str());
    if (*c.width_bits <= 0) c.width_bits.reset();
  }
  std::size_t pos = tick + 1;
  if (pos < raw.size() && (raw[pos] == 's' || raw[pos] == 'S')) ++pos;
  if (pos >= raw.size()) {
    c.value.reset();
    return;
  }
  c.base = static_cast<char>(std::tolower(static_cast<unsigned char>(raw[pos])));
  ++pos;
  for (; pos < raw.size(); ++pos) {
    char ch = raw[pos];
    if (ch == '_') continue;
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (low == 'x' || low == 'z' || ch == '?') c.has_xz = true;
    c.digits.push_back(low == '?' ? '?' : low);
  }
  if (c.has_xz || c.digits.empty()) return;
  std::uint64_t radix = 10;
  if (c.base == 'b') radix = 2;
  if (c.base == 'o') radix = 8;
  if (c.base == 'h') radix = 16;
  std::uint64_t value = 0;
  for (char ch : c.digits) {
    std::uint64_t d = digit_value(ch);
    if (d >= radix) return;  // digit outside base: not a usable constant
    if (value > (UINT64_MAX - d) / radix) return;  // overflow
    value = value * radix + d;
  }
  c.value = value;
}

// Folds constant arithmetic in range bounds so that macro-expanded
// widths like [8-1:0] resolve. Parameters are not folded.
std::optional<long long> fold_const(const Expr& e) {
  switch (e.kind) {
    case NodeKind::kConst: {
      const auto& c = static_cast<const Const&>(e);
      if (!c.value) return std::nullopt;
      return static_cast<long long>(*c.value);
    }
    case NodeKind::kUnary: {
      const auto& u = static_cast<const Unary&>(e);
      auto v = fold_const(*u.operand);
      if (!v) return std::nullopt;
      if (u.op == "-") return -*v;
      if (u.op == "+") return *v;
      return std::nullopt;
    }
    case NodeKind::kBinary: {
      const auto& b = static_cast<const Binary&>(e);
      auto l = fold_const(*b.lhs);
      auto r = fold_const(*b.rhs);
      if (!l || !r) return std::nullopt;
      if (b.op == "+") return *l + *r;
      if (b.op == "-") return *l - *r;
      if (b.op == "*") return *l * *r;
      if (b.op == "/" && *r != 0) return *l / *r;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(const TokenList& tokens) : toks_(tokens) {}

  std::vector<std::unique_ptr<Module>> run() {
    std::vector<std::unique_ptr<Module>> modules;
    while (!at_end()) {
      if (peek().is_keyword("module")) {
        modules.push_back(parse_module());
      } else {
        bail_unsupported(peek());
      }
    }
    return modules;
  }

 private:
  // --- token plumbing -----------------------------------------------------

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    static const Token eof{TokenKind::kPunctuation, "<eof>", {}};
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof;
  }
  const Token& get() {
    if (at_end()) bail(last_loc(), "unexpected end of input");
    return toks_[pos_++];
  }
  SourceLoc last_loc() const {
    return toks_.empty() ? SourceLoc{} : toks_.back().loc;
  }
  bool accept_punct(std::string_view p) {
    if (peek().kind == TokenKind::kPunctuation && peek().lexeme == p) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_op(std::string_view op) {
    if (peek().kind == TokenKind::kOperator && peek().lexeme == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_kw(std::string_view kw) {
    if (peek().is_keyword(kw)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) {
      bail(peek().loc, "expected '" + std::string(p) + "' before '" +
                           peek().lexeme + "'");
    }
  }
  std::string expect_ident() {
    if (peek().kind != TokenKind::kIdentifier || peek().is_directive()) {
      bail(peek().loc, "expected identifier, found '" + peek().lexeme + "'");
    }
    return get().lexeme;
  }

  struct NestingGuard {
    explicit NestingGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        bail(parser.peek().loc, "nesting too deep");
      }
    }
    ~NestingGuard() { --parser.depth_; }
    Parser& parser;
  };

  // --- module structure ---------------------------------------------------

  std::unique_ptr<Module> parse_module() {
    const Token& mod_kw = get();  // 'module'
    auto module = std::make_unique<Module>(mod_kw.loc);
    module->name = expect_ident();

    if (accept_punct("#")) {
      expect_punct("(");
      parse_header_params(*module);
      expect_punct(")");
    }
    if (accept_punct("(")) {
      if (!accept_punct(")")) {
        parse_port_list(*module);
        expect_punct(")");
      }
    }
    expect_punct(";");

    while (true) {
      const Token& t = peek();
      if (t.is_keyword("endmodule")) {
        get();
        break;
      }
      if (at_end()) bail(last_loc(), "missing 'endmodule'");
      parse_module_item(*module);
    }
    return module;
  }

  void parse_header_params(Module& module) {
    // #(parameter [range] NAME = expr, ...)
    while (true) {
      if (!accept_kw("parameter")) {
        bail(peek().loc, "expected 'parameter' in module header");
      }
      auto decl = parse_param_tail(/*local=*/false, /*in_header=*/true);
      module.items.push_back(std::move(decl));
      if (!accept_punct(",")) break;
    }
  }

  void parse_port_list(Module& module) {
    if (peek().is_keyword("input") || peek().is_keyword("output") ||
        peek().is_keyword("inout")) {
      parse_ansi_ports(module);
      return;
    }
    // Non-ANSI: plain identifier list; directions come from body items.
    while (true) {
      module.port_names.push_back(expect_ident());
      if (!accept_punct(",")) break;
    }
  }

  void parse_ansi_ports(Module& module) {
    PortDir dir = PortDir::kNone;
    StorageKind storage = StorageKind::kNet;
    bool storage_explicit = false;
    bool has_range = false;
    std::optional<std::pair<long long, long long>> range;

    while (true) {
      bool fresh_dir = false;
      if (accept_kw("input")) {
        dir = PortDir::kInput;
        fresh_dir = true;
      } else if (accept_kw("output")) {
        dir = PortDir::kOutput;
        fresh_dir = true;
      } else if (accept_kw("inout")) {
        dir = PortDir::kInout;
        fresh_dir = true;
      }
      if (fresh_dir) {
        storage = StorageKind::kNet;
        storage_explicit = false;
        if (accept_kw("wire")) {
          storage = StorageKind::kNet;
          storage_explicit = true;
        } else if (accept_kw("reg") || accept_kw("logic")) {
          storage = StorageKind::kRegister;
          storage_explicit = true;
        }
        range.reset();
        has_range = peek().is_lexeme("[");
        if (has_range) range = parse_literal_range();
      }
      SourceLoc loc = peek().loc;
      std::string name = expect_ident();

      auto decl = std::make_unique<DataDecl>(loc);
      decl->storage = storage;
      decl->storage_explicit = storage_explicit;
      decl->is_port_decl = true;
      decl->has_range = has_range;
      decl->range = range;

      DeclaredId id;
      id.name = name;
      id.loc = loc;
      id.storage = storage;
      id.storage_explicit = storage_explicit;
      id.width_bits = width_from_range(has_range, range);
      id.is_port = true;
      id.dir = dir;
      decl->ids.push_back(id);
      decl->inits.push_back(nullptr);

      module.port_names.push_back(name);
      module.items.push_back(std::move(decl));

      if (!accept_punct(",")) break;
    }
  }

  // No range at all means a 1-bit scalar; a range that did not fold to
  // literals leaves the width unknown.
  static std::optional<int> width_from_range(
      bool has_range,
      const std::optional<std::pair<long long, long long>>& range) {
    if (!has_range) return 1;
    if (!range) return std::nullopt;
    long long diff = range->first - range->second;
    if (diff < 0) diff = -diff;
    return static_cast<int>(diff + 1);
  }

  // Parses [msb:lsb]. Bounds are recorded only when both are plain
  // literals; parameterized bounds leave the width unknown.
  std::optional<std::pair<long long, long long>> parse_literal_range() {
    expect_punct("[");
    ExprPtr msb = parse_expr();
    expect_punct(":");
    ExprPtr lsb = parse_expr();
    expect_punct("]");
    auto m = fold_const(*msb);
    auto l = fold_const(*lsb);
    if (m && l) return std::make_pair(*m, *l);
    return std::nullopt;
  }

  void parse_module_item(Module& module) {
    const Token& t = peek();
    if (t.is_keyword("input") || t.is_keyword("output") || t.is_keyword("inout")) {
      module.items.push_back(parse_port_direction_decl());
      return;
    }
    if (t.is_keyword("reg") || t.is_keyword("wire") || t.is_keyword("logic") ||
        t.is_keyword("integer")) {
      module.items.push_back(parse_data_decl());
      return;
    }
    if (t.is_keyword("parameter") || t.is_keyword("localparam")) {
      bool local = t.lexeme == "localparam";
      get();
      module.items.push_back(parse_param_tail(local, /*in_header=*/false));
      expect_punct(";");
      return;
    }
    if (t.is_keyword("assign")) {
      get();
      auto assign = std::make_unique<ContinuousAssign>(t.loc);
      assign->lhs = parse_lvalue();
      if (!accept_op("=")) bail(peek().loc, "expected '=' in continuous assign");
      assign->rhs = parse_expr();
      expect_punct(";");
      module.items.push_back(std::move(assign));
      return;
    }
    if (t.is_keyword("always") || t.is_keyword("always_comb") ||
        t.is_keyword("always_ff")) {
      module.items.push_back(parse_always());
      return;
    }
    if (t.kind == TokenKind::kIdentifier && !t.is_directive()) {
      module.items.push_back(parse_instance());
      return;
    }
    bail_unsupported(t);
  }

  NodePtr parse_port_direction_decl() {
    const Token& t = get();
    PortDir dir = t.lexeme == "input"    ? PortDir::kInput
                  : t.lexeme == "output" ? PortDir::kOutput
                                         : PortDir::kInout;
    StorageKind storage = StorageKind::kNet;
    bool storage_explicit = false;
    if (accept_kw("wire")) {
      storage = StorageKind::kNet;
      storage_explicit = true;
    } else if (accept_kw("reg") || accept_kw("logic")) {
      storage = StorageKind::kRegister;
      storage_explicit = true;
    }
    return parse_decl_ids(t.loc, storage, storage_explicit, dir,
                          /*is_port_decl=*/true);
  }

  NodePtr parse_data_decl() {
    const Token& t = get();
    StorageKind storage = StorageKind::kNet;
    bool is_integer = false;
    if (t.lexeme == "reg" || t.lexeme == "logic") {
      storage = StorageKind::kRegister;
    } else if (t.lexeme == "integer") {
      storage = StorageKind::kInteger;
      is_integer = true;
    }
    (void)is_integer;
    return parse_decl_ids(t.loc, storage, /*storage_explicit=*/true,
                          PortDir::kNone, /*is_port_decl=*/false);
  }

  NodePtr parse_decl_ids(const SourceLoc& loc, StorageKind storage,
                         bool storage_explicit, PortDir dir, bool is_port_decl) {
    auto decl = std::make_unique<DataDecl>(loc);
    decl->storage = storage;
    decl->storage_explicit = storage_explicit;
    decl->is_port_decl = is_port_decl;
    if (peek().is_lexeme("[")) {
      decl->has_range = true;
      decl->range = parse_literal_range();
    }

    while (true) {
      SourceLoc id_loc = peek().loc;
      std::string name = expect_ident();

      DeclaredId id;
      id.name = name;
      id.loc = id_loc;
      id.storage = storage;
      id.storage_explicit = storage_explicit;
      id.width_bits = storage == StorageKind::kInteger
                          ? std::optional<int>(32)
                          : width_from_range(decl->has_range, decl->range);
      id.is_port = is_port_decl;
      id.dir = dir;

      // Unpacked array dimensions, e.g. reg [7:0] mem [0:5];
      std::string dims;
      while (peek().is_lexeme("[")) {
        if (!dims.empty()) dims += "][";
        dims += capture_bracket_text();
      }
      if (!dims.empty()) {
        id.is_array = true;
        id.array_dims_text = dims;
      }

      ExprPtr init;
      if (accept_op("=")) {
        init = parse_expr();
        id.has_init = true;
      }
      decl->ids.push_back(std::move(id));
      decl->inits.push_back(std::move(init));

      if (accept_punct(",")) continue;
      break;
    }
    expect_punct(";");
    return decl;
  }

  NodePtr parse_param_tail(bool local, bool in_header) {
    SourceLoc loc = peek().loc;
    auto decl = std::make_unique<ParamDecl>(loc);
    decl->local = local;
    bool is_integer = accept_kw("integer");
    bool has_range = false;
    std::optional<std::pair<long long, long long>> range;
    if (peek().is_lexeme("[")) {
      has_range = true;
      range = parse_literal_range();
    }

    while (true) {
      SourceLoc id_loc = peek().loc;
      std::string name = expect_ident();
      if (!accept_op("=")) bail(peek().loc, "expected '=' in parameter");
      ExprPtr value = parse_expr();

      DeclaredId id;
      id.name = name;
      id.loc = id_loc;
      id.storage = StorageKind::kParameter;
      id.storage_explicit = true;
      if (has_range) {
        id.width_bits = width_from_range(has_range, range);
      } else if (is_integer) {
        id.width_bits = 32;
      } else if (value->kind == NodeKind::kConst) {
        const auto& c = static_cast<const Const&>(*value);
        if (c.width_bits) id.width_bits = c.width_bits;
      }
      id.has_init = true;
      decl->ids.push_back(std::move(id));
      decl->values.push_back(std::move(value));

      // In a header the comma belongs to the #(...) list when followed
      // by 'parameter'; in the body it continues this declaration.
      if (in_header) break;
      if (accept_punct(",")) continue;
      break;
    }
    return decl;
  }

  NodePtr parse_always() {
    const Token& t = get();
    auto always = std::make_unique<AlwaysConstruct>(t.loc);
    always->always_kind = t.lexeme == "always_comb" ? AlwaysKind::kComb
                          : t.lexeme == "always_ff" ? AlwaysKind::kFf
                                                    : AlwaysKind::kAlways;
    if (always->always_kind == AlwaysKind::kComb) {
      always->body = parse_statement();
      return always;
    }
    if (!peek().is_lexeme("@")) {
      bail(peek().loc, "expected '@' after '" + t.lexeme + "'");
    }
    const Token& at = get();
    auto ev = std::make_unique<EventControl>(at.loc);
    if (accept_op("*")) {
      // @* : wildcard, empty sensitivity list
    } else {
      expect_punct("(");
      if (accept_op("*")) {
        expect_punct(")");
      } else {
        while (true) {
          SensItem item;
          if (accept_kw("posedge")) {
            item.edge = Edge::kPosedge;
          } else if (accept_kw("negedge")) {
            item.edge = Edge::kNegedge;
          }
          item.signal = expect_ident();
          while (peek().is_lexeme("[")) capture_bracket_text();
          ev->sens.push_back(std::move(item));
          if (accept_kw("or") || accept_punct(",")) continue;
          break;
        }
        expect_punct(")");
      }
    }
    always->sens = ev->sens;
    ev->body = parse_statement();
    always->body = std::move(ev);
    return always;
  }

  NodePtr parse_instance() {
    const Token& t = get();
    auto inst = std::make_unique<ModuleInstance>(t.loc);
    inst->module_name = t.lexeme;
    if (accept_punct("#")) {
      inst->param_text = capture_paren_text();
    }
    inst->instance_name = expect_ident();
    expect_punct("(");
    if (!accept_punct(")")) {
      while (true) {
        Connection conn;
        if (accept_punct(".")) {
          conn.port = expect_ident();
          expect_punct("(");
          if (!peek().is_lexeme(")")) conn.expr = parse_expr();
          expect_punct(")");
        } else {
          conn.expr = parse_expr();
        }
        inst->connections.push_back(std::move(conn));
        if (accept_punct(",")) continue;
        break;
      }
      expect_punct(")");
    }
    expect_punct(";");
    return inst;
  }

  // --- statements -----------------------------------------------------------

  // Returns null for a bare ';'.
  StmtPtr parse_statement() {
    NestingGuard guard(*this);
    const Token& t = peek();

    if (accept_punct(";")) return nullptr;

    if (t.is_keyword("begin")) {
      get();
      auto block = std::make_unique<SeqBlock>(t.loc);
      if (accept_punct(":")) block->label = expect_ident();
      while (!peek().is_keyword("end")) {
        if (at_end()) bail(last_loc(), "missing 'end'");
        StmtPtr s = parse_statement();
        if (s) block->stmts.push_back(std::move(s));
      }
      get();  // 'end'
      return block;
    }

    if (t.is_keyword("if")) {
      get();
      auto cond = std::make_unique<Conditional>(t.loc);
      expect_punct("(");
      cond->if_expr = parse_expr();
      expect_punct(")");
      cond->then_stmt = parse_statement();
      if (accept_kw("else")) cond->else_stmt = parse_statement();
      return cond;
    }

    if (t.is_keyword("case") || t.is_keyword("casez") || t.is_keyword("casex")) {
      get();
      auto cs = std::make_unique<CaseStatement>(t.loc);
      cs->case_kind = t.lexeme == "casez"   ? CaseKind::kCasez
                      : t.lexeme == "casex" ? CaseKind::kCasex
                                            : CaseKind::kCase;
      expect_punct("(");
      cs->cond = parse_expr();
      expect_punct(")");
      while (!peek().is_keyword("endcase")) {
        if (at_end()) bail(last_loc(), "missing 'endcase'");
        auto item = std::make_unique<CaseItem>(peek().loc);
        if (accept_kw("default")) {
          item->is_default = true;
          accept_punct(":");
        } else {
          while (true) {
            item->labels.push_back(parse_expr());
            if (!accept_punct(",")) break;
          }
          expect_punct(":");
        }
        item->stmt = parse_statement();
        if (item->is_default) cs->has_default = true;
        cs->items.push_back(std::move(item));
      }
      get();  // 'endcase'
      if (cs->items.empty()) bail(t.loc, "case statement with no items");
      return cs;
    }

    if ((t.kind == TokenKind::kIdentifier && !t.is_directive()) ||
        t.is_lexeme("{")) {
      ExprPtr lhs = parse_lvalue();
      SourceLoc loc = lhs->loc;
      if (accept_op("=")) {
        auto assign = std::make_unique<BlockingAssign>(loc);
        assign->lhs = std::move(lhs);
        assign->rhs = parse_expr();
        expect_punct(";");
        return assign;
      }
      if (accept_op("<=")) {
        auto assign = std::make_unique<NonBlockingAssign>(loc);
        assign->lhs = std::move(lhs);
        assign->rhs = parse_expr();
        expect_punct(";");
        return assign;
      }
      bail(peek().loc, "expected assignment operator after lvalue");
    }

    bail_unsupported(t);
  }

  ExprPtr parse_lvalue() {
    const Token& t = peek();
    if (t.is_lexeme("{")) {
      get();
      auto concat = std::make_unique<Concat>(t.loc);
      while (true) {
        concat->parts.push_back(parse_lvalue());
        if (!accept_punct(",")) break;
      }
      expect_punct("}");
      return concat;
    }
    SourceLoc loc = t.loc;
    std::string name = expect_ident();
    if (peek().is_lexeme("[")) {
      std::string idx;
      while (peek().is_lexeme("[")) {
        if (!idx.empty()) idx += "][";
        idx += capture_bracket_text();
      }
      return std::make_unique<IndexedRef>(std::move(name), std::move(idx), loc);
    }
    return std::make_unique<IdRef>(std::move(name), loc);
  }

  // --- expressions ----------------------------------------------------------

  // Binding strength for binary operators; 0 means not binary.
  static int binary_prec(const Token& t) {
    if (t.kind != TokenKind::kOperator) return 0;
    const std::string& op = t.lexeme;
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
    return 0;
  }

  ExprPtr parse_expr() { return parse_ternary(); }

  ExprPtr parse_ternary() {
    NestingGuard guard(*this);
    ExprPtr cond = parse_binary(1);
    if (!accept_op("?")) return cond;
    SourceLoc loc = cond->loc;
    ExprPtr then_e = parse_ternary();
    expect_punct(":");
    ExprPtr else_e = parse_ternary();
    return std::make_unique<Ternary>(std::move(cond), std::move(then_e),
                                     std::move(else_e), loc);
  }

  ExprPtr parse_binary(int min_prec) {
    ExprPtr lhs = parse_unary();
    while (true) {
      int prec = binary_prec(peek());
      if (prec == 0 || prec < min_prec) return lhs;
      Token op = get();
      ExprPtr rhs = parse_binary(prec + 1);
      lhs = std::make_unique<Binary>(op.lexeme, std::move(lhs), std::move(rhs),
                                     op.loc);
    }
  }

  ExprPtr parse_unary() {
    NestingGuard guard(*this);
    const Token& t = peek();
    if (t.kind == TokenKind::kOperator &&
        (t.lexeme == "!" || t.lexeme == "~" || t.lexeme == "-" ||
         t.lexeme == "+" || t.lexeme == "&" || t.lexeme == "|" ||
         t.lexeme == "^" || t.lexeme == "~&" || t.lexeme == "~|" ||
         t.lexeme == "~^")) {
      Token op = get();
      ExprPtr operand = parse_unary();
      return std::make_unique<Unary>(op.lexeme, std::move(operand), op.loc);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token& t = peek();

    if (t.kind == TokenKind::kNumber) {
      get();
      auto c = std::make_unique<Const>(t.lexeme, t.loc);
      analyze_number(*c);
      return c;
    }
    if (t.kind == TokenKind::kStringLiteral) {
      get();
      auto c = std::make_unique<Const>(t.lexeme, t.loc);
      c->is_number = false;
      return c;
    }
    if (t.is_lexeme("(")) {
      get();
      ExprPtr inner = parse_expr();
      expect_punct(")");
      return inner;
    }
    if (t.is_lexeme("{")) {
      get();
      auto concat = std::make_unique<Concat>(t.loc);
      while (true) {
        ExprPtr part = parse_expr();
        if (peek().is_lexeme("{")) bail(peek().loc, "unsupported construct 'replication'");
        concat->parts.push_back(std::move(part));
        if (!accept_punct(",")) break;
      }
      expect_punct("}");
      return concat;
    }
    if (t.kind == TokenKind::kIdentifier && !t.is_directive()) {
      SourceLoc loc = t.loc;
      std::string name = get().lexeme;
      if (peek().is_lexeme("(")) {
        // Call-shaped expression: kept opaque.
        std::string text = name + "(" + capture_paren_text() + ")";
        auto c = std::make_unique<Const>(std::move(text), loc);
        c->is_number = false;
        return c;
      }
      if (peek().is_lexeme("[")) {
        std::string idx;
        while (peek().is_lexeme("[")) {
          if (!idx.empty()) idx += "][";
          idx += capture_bracket_text();
        }
        return std::make_unique<IndexedRef>(std::move(name), std::move(idx), loc);
      }
      return std::make_unique<IdRef>(std::move(name), loc);
    }
    bail(t.loc, "expected expression, found '" + t.lexeme + "'");
  }

  // Consumes a balanced [...] group, returning the joined inner text.
  std::string capture_bracket_text() {
    expect_punct("[");
    std::string text;
    int depth = 1;
    while (depth > 0) {
      if (at_end()) bail(last_loc(), "missing ']'");
      const Token& t = get();
      if (t.is_lexeme("[")) ++depth;
      if (t.is_lexeme("]")) {
        --depth;
        if (depth == 0) break;
      }
      text += t.lexeme;
    }
    return text;
  }

  // Consumes a balanced (...) group after '(' has been peeked, returning
  // the joined inner text. Assumes the opening paren is next.
  std::string capture_paren_text() {
    expect_punct("(");
    std::string text;
    int depth = 1;
    while (depth > 0) {
      if (at_end()) bail(last_loc(), "missing ')'");
      const Token& t = get();
      if (t.is_lexeme("(")) ++depth;
      if (t.is_lexeme(")")) {
        --depth;
        if (depth == 0) break;
      }
      if (!text.empty()) text += ' ';
      text += t.lexeme;
    }
    return text;
  }

  const TokenList& toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

ParseOutcome parse(const TokenList& tokens) {
  ParseOutcome out;
  try {
    Parser parser(tokens);
    out.modules = parser.run();
  } catch (const ParseBail& b) {
    out.modules.clear();
    out.diagnostics.push_back(b.diagnostic);
    out.skipped = true;
  }
  return out;
}

ParseOutcome parse_verilog_source(std::string_view text, std::string_view file,
                                  MacroTable& macros, const FileReader& reader) {
  LexResult lexed = tokenize(text, file);
  PreprocessResult pre = preprocess(lexed.tokens, macros, reader);
  ParseOutcome out = parse(pre.tokens);
  DiagnosticList merged;
  merged.reserve(lexed.diagnostics.size() + pre.diagnostics.size() +
                 out.diagnostics.size());
  for (auto& d : lexed.diagnostics) merged.push_back(std::move(d));
  for (auto& d : pre.diagnostics) merged.push_back(std::move(d));
  for (auto& d : out.diagnostics) merged.push_back(std::move(d));
  out.diagnostics = std::move(merged);
  return out;
}

}  // namespace rtlscan
