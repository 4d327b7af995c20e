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

// End-to-end acceptance checks. Each criterion prints one [PASS] or
// [FAIL] line; the exit code is the number of failures. Reference
// results come from independent oracles in this file (brute-force set
// membership for FSM liveness, exhaustive value enumeration for case
// completeness, flat pair enumeration for read-before-write), never
// from the scanners under test.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rtlscan/ast.h"
#include "rtlscan/driver.h"
#include "rtlscan/parser.h"
#include "rtlscan/rulebook.h"
#include "rtlscan/scanners/cwe1245.h"
#include "rtlscan/scanners/scanners.h"
#include "rtlscan/visitor.h"

namespace fs = std::filesystem;
using namespace rtlscan;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> list_corpus_files() {
  std::vector<std::string> out;
  for (const auto& entry :
       fs::recursive_directory_iterator(RTLSCAN_CORPUS_DIR)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".v" || ext == ".sv") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParseOutcome parse_hermetic(const std::string& text) {
  MacroTable macros;
  FileReader no_files = [](const std::string&) {
    return std::optional<std::string>();
  };
  return parse_verilog_source(text, "gen.v", macros, no_files);
}

// ---------------------------------------------------------------------------
// Criterion 1: known-weakness corpus, weak and clean twins
// ---------------------------------------------------------------------------

void criterion_corpus() {
  auto t0 = std::chrono::steady_clock::now();

  ScanConfig weak_cfg;
  weak_cfg.paths = {std::string(RTLSCAN_CORPUS_DIR) + "/table1/weak"};
  ScanResult weak = run_scan(weak_cfg);

  ScanConfig clean_cfg;
  clean_cfg.paths = {std::string(RTLSCAN_CORPUS_DIR) + "/table1/clean"};
  ScanResult clean = run_scan(clean_cfg);

  double elapsed = ms_since(t0);

  const std::map<std::string, std::pair<int, std::string>> expected = {
      {"locked_register.v", {1234, "debug-override"}},
      {"jtag_lock.v", {1271, "missing-reset"}},
      {"fsm_incomplete_case.v", {1245, "incomplete-case"}},
      {"fsm_unreachable.v", {1245, "fsm-unreachable"}},
      {"fsm_deadlock.v", {1245, "fsm-deadlock"}},
      {"access_control.v", {1280, "read-before-write"}},
      {"sensor_regs.v", {1262, "unprotected-register"}},
  };

  std::string detail;
  bool ok = !weak.config_error && !clean.config_error;
  if (weak.report.findings.size() != expected.size()) {
    ok = false;
    detail = "weak corpus produced " +
             std::to_string(weak.report.findings.size()) + " findings, want " +
             std::to_string(expected.size());
  }
  std::set<std::string> seen;
  for (const Finding& f : weak.report.findings) {
    std::string base = fs::path(f.loc.file).filename().string();
    auto it = expected.find(base);
    if (it == expected.end() || f.cwe != it->second.first ||
        f.kind != it->second.second || !seen.insert(base).second) {
      ok = false;
      detail = "unexpected finding CWE-" + std::to_string(f.cwe) + " [" +
               f.kind + "] in " + base;
      break;
    }
  }
  if (ok && !clean.report.findings.empty()) {
    ok = false;
    detail = "clean corpus produced " +
             std::to_string(clean.report.findings.size()) + " findings";
  }
  if (ok && elapsed >= 1000.0) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " ms";
  }
  if (ok) {
    detail = std::to_string(weak.report.findings.size()) +
             " weak findings, 0 clean findings, " +
             std::to_string(static_cast<int>(elapsed)) + " ms";
  }
  report("corpus weak/clean twins", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 2: randomized FSMs against a brute-force liveness oracle
// ---------------------------------------------------------------------------

struct GenFsm {
  int nstates = 0;
  std::vector<std::pair<int, int>> trans;  // (from, to)
  std::vector<int> resets;
};

GenFsm random_fsm(std::mt19937& rng) {
  GenFsm g;
  g.nstates = 2 + static_cast<int>(rng() % 5);  // 2..6
  int ntrans = static_cast<int>(rng() % 13);    // 0..12
  for (int i = 0; i < ntrans; ++i) {
    g.trans.emplace_back(static_cast<int>(rng() % g.nstates),
                         static_cast<int>(rng() % g.nstates));
  }
  int nresets = static_cast<int>(rng() % 3);  // 0..2
  for (int i = 0; i < nresets; ++i) {
    g.resets.push_back(static_cast<int>(rng() % g.nstates));
  }
  return g;
}

std::string render_fsm(const GenFsm& g) {
  std::ostringstream v;
  v << "module f (\n  input wire clk,\n  input wire rst,\n"
       "  input wire [11:0] go\n);\n  reg [2:0] st;\n\n"
       "  always @(posedge clk) begin\n    if (rst) begin\n";
  for (int r : g.resets) v << "      st <= 3'd" << r << ";\n";
  v << "    end else begin\n      case (st)\n";
  std::map<int, std::vector<std::pair<int, int>>> by_from;  // from -> (go bit, to)
  for (std::size_t i = 0; i < g.trans.size(); ++i) {
    by_from[g.trans[i].first].emplace_back(static_cast<int>(i),
                                           g.trans[i].second);
  }
  for (const auto& [from, arcs] : by_from) {
    v << "        3'd" << from << ": begin\n";
    for (const auto& [bit, to] : arcs) {
      v << "          if (go[" << bit << "]) st <= 3'd" << to << ";\n";
    }
    v << "        end\n";
  }
  v << "        default: st <= st;\n      endcase\n    end\n  end\n"
       "endmodule\n";
  return v.str();
}

// Oracle: pure set membership over the generated edge list.
std::set<std::pair<std::string, std::string>> fsm_oracle(const GenFsm& g) {
  std::set<int> from, to, rst;
  for (const auto& [f, t] : g.trans) {
    from.insert(f);
    to.insert(t);
  }
  for (int r : g.resets) rst.insert(r);

  std::set<std::pair<std::string, std::string>> expect;
  for (int s : from) {
    if (!to.count(s) && !rst.count(s)) {
      expect.insert({"fsm-unreachable", std::to_string(s)});
    }
  }
  for (int s : to) {
    if (!from.count(s)) expect.insert({"fsm-deadlock", std::to_string(s)});
  }
  return expect;
}

void criterion_fsm_oracle() {
  std::mt19937 rng(20260816u);
  Rulebook rules = Rulebook::defaults();
  auto t0 = std::chrono::steady_clock::now();

  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 1000 && ok; ++i) {
    GenFsm g = random_fsm(rng);
    auto expect = fsm_oracle(g);

    ParseOutcome outcome = parse_hermetic(render_fsm(g));
    if (outcome.skipped || outcome.modules.size() != 1) {
      ok = false;
      detail = "iteration " + std::to_string(i) + ": generated FSM failed to parse";
      break;
    }
    Module& m = *outcome.modules[0];
    m.scope = build_scope(m, nullptr);

    std::vector<Finding> findings;
    DiagnosticList diags;
    scan_cwe1245(m, rules, &findings, &diags);

    std::set<std::pair<std::string, std::string>> got;
    for (const Finding& f : findings) {
      if (f.kind == "fsm-unreachable" || f.kind == "fsm-deadlock") {
        got.insert({f.kind, f.signals.at(1)});
      } else {
        ok = false;
        detail = "iteration " + std::to_string(i) + ": unexpected kind " + f.kind;
      }
    }
    if (ok && got != expect) {
      ok = false;
      detail = "iteration " + std::to_string(i) + ": scanner/oracle mismatch (" +
               std::to_string(got.size()) + " vs " +
               std::to_string(expect.size()) + " findings)";
    }
    ++checked;
  }

  double elapsed = ms_since(t0);
  if (ok && elapsed >= 5000.0) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " ms";
  }
  if (ok) {
    detail = std::to_string(checked) + " FSMs, " +
             std::to_string(static_cast<int>(elapsed)) + " ms";
  }
  report("randomized FSM liveness vs oracle", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 3: case completeness against exhaustive enumeration
// ---------------------------------------------------------------------------

std::unique_ptr<CaseStatement> make_case(int width, int nlabels,
                                         bool with_default) {
  SourceLoc loc{"gen.v", 1, 1};
  auto cs = std::make_unique<CaseStatement>(loc);
  cs->cond = std::make_unique<IdRef>("s", loc);
  for (int i = 0; i < nlabels; ++i) {
    auto item = std::make_unique<CaseItem>(loc);
    auto c = std::make_unique<Const>(
        std::to_string(width) + "'d" + std::to_string(i), loc);
    c->is_number = true;
    c->value = static_cast<std::uint64_t>(i);
    c->width_bits = width;
    item->labels.push_back(std::move(c));
    cs->items.push_back(std::move(item));
  }
  if (with_default) {
    auto item = std::make_unique<CaseItem>(loc);
    item->is_default = true;
    cs->items.push_back(std::move(item));
    cs->has_default = true;
  }
  return cs;
}

void criterion_case_completeness() {
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int width = 1; width <= 4 && ok; ++width) {
    std::uint64_t full = 1ULL << width;
    for (int nlabels = 0; nlabels <= static_cast<int>(full) && ok; ++nlabels) {
      for (bool with_default : {false, true}) {
        auto cs = make_case(width, nlabels, with_default);
        // Oracle: distinct label values enumerated by construction.
        bool expect_complete =
            with_default || static_cast<std::uint64_t>(nlabels) == full;
        auto got = case_is_complete(*cs, width);
        auto cover = case_cover_count(*cs, width);
        if (!got || *got != expect_complete) {
          ok = false;
          detail = "w=" + std::to_string(width) + " labels=" +
                   std::to_string(nlabels) + " default=" +
                   std::to_string(with_default);
          break;
        }
        if (!cover || *cover != static_cast<std::uint64_t>(nlabels)) {
          ok = false;
          detail = "cover count w=" + std::to_string(width) + " labels=" +
                   std::to_string(nlabels);
          break;
        }
        ++checked;
      }
    }
  }
  if (ok) detail = std::to_string(checked) + " case shapes";
  report("case completeness vs enumeration", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 4: read-before-write against flat pair enumeration
// ---------------------------------------------------------------------------

// Oracle: collect blocking reads/writes per (name, enclosing block) with
// plain recursion, then enumerate pairs. Independent of the Visitor.
struct OracleAccess {
  const void* block;
  int line;
};

void oracle_expr_ids(const Expr& e, std::vector<std::string>* out) {
  switch (e.kind) {
    case NodeKind::kIdRef:
      out->push_back(static_cast<const IdRef&>(e).name);
      return;
    case NodeKind::kIndexedRef:
      out->push_back(static_cast<const IndexedRef&>(e).base);
      return;
    case NodeKind::kUnary:
      oracle_expr_ids(*static_cast<const Unary&>(e).operand, out);
      return;
    case NodeKind::kBinary: {
      const auto& b = static_cast<const Binary&>(e);
      oracle_expr_ids(*b.lhs, out);
      oracle_expr_ids(*b.rhs, out);
      return;
    }
    case NodeKind::kTernary: {
      const auto& t = static_cast<const Ternary&>(e);
      oracle_expr_ids(*t.cond, out);
      oracle_expr_ids(*t.then_e, out);
      oracle_expr_ids(*t.else_e, out);
      return;
    }
    case NodeKind::kConcat:
      for (const auto& p : static_cast<const Concat&>(e).parts) {
        oracle_expr_ids(*p, out);
      }
      return;
    default:
      return;
  }
}

void oracle_collect(const Node& stmt, const void* block,
                    const std::set<std::string>& sens,
                    std::map<std::string, std::vector<OracleAccess>>* reads,
                    std::map<std::string, std::vector<OracleAccess>>* writes) {
  switch (stmt.kind) {
    case NodeKind::kSeqBlock: {
      const auto& b = static_cast<const SeqBlock&>(stmt);
      for (const auto& s : b.stmts) {
        if (s) oracle_collect(*s, &b, sens, reads, writes);
      }
      return;
    }
    case NodeKind::kEventControl: {
      const auto& ec = static_cast<const EventControl&>(stmt);
      if (ec.body) oracle_collect(*ec.body, block, sens, reads, writes);
      return;
    }
    case NodeKind::kConditional: {
      const auto& c = static_cast<const Conditional&>(stmt);
      if (c.then_stmt) oracle_collect(*c.then_stmt, block, sens, reads, writes);
      if (c.else_stmt) oracle_collect(*c.else_stmt, block, sens, reads, writes);
      return;
    }
    case NodeKind::kCase: {
      const auto& cs = static_cast<const CaseStatement&>(stmt);
      for (const auto& item : cs.items) {
        if (item->stmt) oracle_collect(*item->stmt, block, sens, reads, writes);
      }
      return;
    }
    case NodeKind::kBlockingAssign: {
      const auto& a = static_cast<const BlockingAssign&>(stmt);
      std::vector<std::string> rhs_ids;
      oracle_expr_ids(*a.rhs, &rhs_ids);
      for (const auto& id : rhs_ids) {
        if (!sens.count(id)) (*reads)[id].push_back({block, stmt.loc.line});
      }
      std::vector<std::string> lhs_ids;
      oracle_expr_ids(*a.lhs, &lhs_ids);
      for (const auto& id : lhs_ids) {
        if (!sens.count(id)) (*writes)[id].push_back({block, stmt.loc.line});
      }
      return;
    }
    default:
      return;
  }
}

std::set<std::tuple<std::string, int, int>> rbw_oracle(const Module& m) {
  std::set<std::tuple<std::string, int, int>> expect;
  for (const auto& item : m.items) {
    if (item->kind != NodeKind::kAlwaysConstruct) continue;
    const auto& always = static_cast<const AlwaysConstruct&>(*item);
    std::set<std::string> sens;
    for (const auto& s : always.sens) sens.insert(s.signal);
    std::map<std::string, std::vector<OracleAccess>> reads, writes;
    if (always.body) {
      oracle_collect(*always.body, &always, sens, &reads, &writes);
    }
    for (const auto& [name, rlist] : reads) {
      auto wit = writes.find(name);
      if (wit == writes.end()) continue;
      for (const auto& r : rlist) {
        for (const auto& w : wit->second) {
          if (r.block == w.block && r.line < w.line) {
            expect.insert({name, r.line, w.line});
          }
        }
      }
    }
  }
  return expect;
}

void criterion_rbw_oracle() {
  Rulebook rules = Rulebook::defaults();
  bool ok = true;
  std::string detail;
  int modules_checked = 0;
  for (const std::string& path : list_corpus_files()) {
    MacroTable macros;
    ParseOutcome outcome =
        parse_verilog_source(read_file(path), path, macros);
    if (outcome.skipped) continue;
    for (auto& mp : outcome.modules) {
      Module& m = *mp;
      m.scope = build_scope(m, nullptr);
      auto expect = rbw_oracle(m);

      std::vector<Finding> findings;
      DiagnosticList diags;
      scan_cwe1280(m, rules, &findings, &diags);
      std::set<std::tuple<std::string, int, int>> got;
      for (const Finding& f : findings) {
        got.insert({f.signals.at(0), f.loc.line, f.line2.value_or(-1)});
      }
      if (got != expect) {
        ok = false;
        detail = fs::path(path).filename().string() + " module " + m.name +
                 ": " + std::to_string(got.size()) + " vs " +
                 std::to_string(expect.size());
        break;
      }
      ++modules_checked;
    }
    if (!ok) break;
  }
  if (ok) detail = std::to_string(modules_checked) + " modules";
  report("read-before-write vs pair enumeration", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 5: keyword rule monotonicity
// ---------------------------------------------------------------------------

std::uint64_t count_1271(const std::vector<std::unique_ptr<Module>>& modules,
                         const Rulebook& rules) {
  std::uint64_t hits = 0;
  for (const auto& m : modules) {
    std::vector<Finding> findings;
    DiagnosticList diags;
    scan_cwe1271(*m, rules, &findings, &diags);
    hits += findings.size();
  }
  return hits;
}

void criterion_rule_monotonicity() {
  // Parse the 20-module keyword corpus once.
  std::vector<std::unique_ptr<Module>> modules;
  for (const std::string& path : list_corpus_files()) {
    if (path.find("/keyword20/") == std::string::npos) continue;
    MacroTable macros;
    ParseOutcome outcome = parse_verilog_source(read_file(path), path, macros);
    for (auto& m : outcome.modules) {
      m->scope = build_scope(*m, nullptr);
      modules.push_back(std::move(m));
    }
  }

  bool ok = modules.size() == 20;
  std::string detail =
      ok ? "" : "corpus has " + std::to_string(modules.size()) + " modules";

  Rulebook base = Rulebook::defaults();
  std::uint64_t base_count = count_1271(modules, base);

  if (ok) {
    Rulebook wider = base;
    wider.security_register.match.push_back("access");
    std::uint64_t wider_count = count_1271(modules, wider);
    if (wider_count <= base_count) {
      ok = false;
      detail = "adding match 'access' did not increase candidates (" +
               std::to_string(base_count) + " -> " +
               std::to_string(wider_count) + ")";
    }
  }
  for (const char* kw : {"block", "ar", "aw"}) {
    if (!ok) break;
    Rulebook narrower = base;
    narrower.security_register.exclude.push_back(kw);
    std::uint64_t count = count_1271(modules, narrower);
    if (count >= base_count) {
      ok = false;
      detail = std::string("adding exclude '") + kw +
               "' did not decrease candidates (" + std::to_string(base_count) +
               " -> " + std::to_string(count) + ")";
    }
  }

  // Random perturbations: growing the match list never removes
  // candidates, growing the exclude list never adds them.
  std::mt19937 rng(97u);
  const std::vector<std::string> pool = {
      "lock", "prot",  "access", "state", "cfg", "key",  "dbg",  "mask",
      "q",    "en",    "ar",     "aw",    "mem", "dma",  "pmp",  "jtag",
      "ptr",  "count", "data",   "head",  "div", "duty", "load", "sts"};
  for (int trial = 0; trial < 200 && ok; ++trial) {
    Rulebook rb = base;
    const std::string& kw = pool[rng() % pool.size()];
    bool grow_match = rng() % 2 == 0;
    if (grow_match) {
      rb.security_register.match.push_back(kw);
    } else {
      rb.security_register.exclude.push_back(kw);
    }
    std::uint64_t count = count_1271(modules, rb);
    if (grow_match ? count < base_count : count > base_count) {
      ok = false;
      detail = "trial " + std::to_string(trial) + " keyword '" + kw +
               "' violated monotonicity";
    }
  }
  if (ok) {
    detail = "baseline " + std::to_string(base_count) +
             " candidates, 200 perturbations monotone";
  }
  report("keyword rule monotonicity", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 6: gating statistics invariants
// ---------------------------------------------------------------------------

void criterion_stats_invariants() {
  Rulebook rules = Rulebook::defaults();
  bool ok = true;
  std::string detail;
  std::uint64_t relevant_1234 = 0, gated_1234 = 0;

  for (const std::string& path : list_corpus_files()) {
    MacroTable macros;
    ParseOutcome outcome = parse_verilog_source(read_file(path), path, macros);
    if (outcome.skipped) continue;
    for (auto& mp : outcome.modules) {
      Module& m = *mp;
      m.scope = build_scope(m, nullptr);
      std::uint64_t total = count_nodes(m);
      for (const ScannerInfo& info : all_scanners()) {
        std::vector<Finding> findings;
        DiagnosticList diags;
        ScannerStats stats = info.fn(m, rules, &findings, &diags);
        if (stats.keyword_gated_nodes > stats.relevant_nodes ||
            stats.relevant_nodes > total) {
          ok = false;
          detail = "CWE-" + std::to_string(info.cwe) + " in " + m.name +
                   ": gated=" + std::to_string(stats.keyword_gated_nodes) +
                   " relevant=" + std::to_string(stats.relevant_nodes) +
                   " total=" + std::to_string(total);
        }
        if (info.cwe == 1234) {
          relevant_1234 += stats.relevant_nodes;
          gated_1234 += stats.keyword_gated_nodes;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }

  if (ok && relevant_1234 < 2 * gated_1234) {
    ok = false;
    detail = "debug-override gating reduced " +
             std::to_string(relevant_1234) + " relevant nodes only to " +
             std::to_string(gated_1234);
  }
  if (ok) {
    detail = "gated <= relevant <= total everywhere; 1234 gating " +
             std::to_string(relevant_1234) + " -> " +
             std::to_string(gated_1234) + " nodes";
  }
  report("gating statistics invariants", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 7: synthetic 10 kLoC corpus under one second
// ---------------------------------------------------------------------------

std::string synthetic_module(int index) {
  std::ostringstream v;
  std::string n = std::to_string(index);
  v << "module gen_" << n << " (\n"
    << "  input  wire       clk,\n"
    << "  input  wire       rst_n,\n"
    << "  input  wire       sel_" << n << ",\n"
    << "  input  wire [7:0] din_" << n << ",\n"
    << "  output reg  [7:0] dout_" << n << "\n"
    << ");\n"
    << "  reg [1:0] st_" << n << ";\n"
    << "  reg [7:0] hold_" << n << ";\n\n"
    << "  always @(posedge clk or negedge rst_n) begin\n"
    << "    if (!rst_n) begin\n"
    << "      st_" << n << " <= 2'd0;\n"
    << "      hold_" << n << " <= 8'h00;\n"
    << "    end else begin\n"
    << "      case (st_" << n << ")\n"
    << "        2'd0: if (sel_" << n << ") st_" << n << " <= 2'd1;\n"
    << "        2'd1: st_" << n << " <= 2'd2;\n"
    << "        2'd2: st_" << n << " <= 2'd0;\n"
    << "        default: st_" << n << " <= 2'd0;\n"
    << "      endcase\n"
    << "      if (sel_" << n << ") hold_" << n << " <= din_" << n << ";\n"
    << "    end\n"
    << "  end\n\n"
    << "  always @(posedge clk) begin\n"
    << "    dout_" << n << " <= hold_" << n << " ^ din_" << n << ";\n"
    << "  end\n"
    << "endmodule\n\n";
  return v.str();
}

void criterion_throughput() {
  fs::path dir = fs::temp_directory_path() / "rtlscan_throughput";
  fs::remove_all(dir);
  fs::create_directories(dir);
  int loc_per_module = 30;
  // A margin over the 10 kLoC floor absorbs template line-count drift.
  int modules_needed = (10500 + loc_per_module - 1) / loc_per_module;
  int per_file = 10;
  int written = 0;
  for (int file_idx = 0; written < modules_needed; ++file_idx) {
    std::ostringstream text;
    for (int j = 0; j < per_file && written < modules_needed; ++j) {
      text << synthetic_module(written++);
    }
    std::ofstream out(dir / ("gen_" + std::to_string(file_idx) + ".v"));
    out << text.str();
  }

  ScanConfig cfg;
  cfg.paths = {dir.string()};
  auto t0 = std::chrono::steady_clock::now();
  ScanResult result = run_scan(cfg);
  double elapsed = ms_since(t0);
  fs::remove_all(dir);

  bool ok = !result.config_error && result.report.stats.loc >= 10000 &&
            elapsed < 1000.0;
  std::string detail = std::to_string(result.report.stats.loc) + " lines in " +
                       std::to_string(static_cast<int>(elapsed)) + " ms";
  report("10 kLoC scan under one second", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 8: deterministic output
// ---------------------------------------------------------------------------

void criterion_determinism() {
  ScanConfig cfg;
  cfg.paths = {std::string(RTLSCAN_CORPUS_DIR)};
  cfg.stable_output = true;

  ScanResult first = run_scan(cfg);
  ScanResult second = run_scan(cfg);
  std::string json_a = render_json(first.report);
  std::string json_b = render_json(second.report);

  bool ok = json_a == json_b;
  std::string detail = ok ? "" : "repeated runs differ";

  if (ok) {
    // Same files handed over in a shuffled explicit order.
    std::vector<std::string> files = list_corpus_files();
    std::mt19937 rng(7u);
    std::shuffle(files.begin(), files.end(), rng);
    ScanConfig shuffled;
    shuffled.paths = files;
    shuffled.stable_output = true;
    ScanResult third = run_scan(shuffled);
    if (render_json(third.report) != json_a) {
      ok = false;
      detail = "shuffled file order changed the report";
    }
  }
  if (ok) {
    detail = std::to_string(first.report.findings.size()) +
             " findings, byte-identical across runs and orderings";
  }
  report("deterministic output", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 9: mutation fuzzing of parser and scanners
// ---------------------------------------------------------------------------

void mutate(std::string* text, std::mt19937& rng) {
  if (text->empty()) {
    text->push_back(static_cast<char>(rng() % 256));
    return;
  }
  switch (rng() % 4) {
    case 0: {  // replace a byte
      (*text)[rng() % text->size()] = static_cast<char>(rng() % 256);
      break;
    }
    case 1: {  // delete a span
      std::size_t at = rng() % text->size();
      std::size_t len = 1 + rng() % 32;
      text->erase(at, len);
      break;
    }
    case 2: {  // duplicate a span
      std::size_t at = rng() % text->size();
      std::size_t len = std::min<std::size_t>(1 + rng() % 32,
                                              text->size() - at);
      text->insert(at, text->substr(at, len));
      break;
    }
    default: {  // insert structural bytes
      static const char kBits[] = "(){}[];:=<@`\"'dbh09xz?*/|&^~ \n";
      std::size_t at = rng() % (text->size() + 1);
      std::string ins;
      for (std::size_t i = 0, n = 1 + rng() % 8; i < n; ++i) {
        ins.push_back(kBits[rng() % (sizeof(kBits) - 1)]);
      }
      text->insert(at, ins);
      break;
    }
  }
  if (text->size() > 65536) text->resize(65536);
}

void criterion_fuzz() {
  std::vector<std::string> seeds;
  for (const std::string& path : list_corpus_files()) {
    seeds.push_back(read_file(path));
  }
  Rulebook rules = Rulebook::defaults();
  std::mt19937 rng(1234567u);

  bool ok = !seeds.empty();
  std::string detail = ok ? "" : "no corpus seeds";
  int iterations = 0;
  std::uint64_t skipped_files = 0, findings_total = 0;

  for (int i = 0; i < 10000 && ok; ++i) {
    std::string text = seeds[rng() % seeds.size()];
    int edits = 1 + static_cast<int>(rng() % 8);
    for (int e = 0; e < edits; ++e) mutate(&text, rng);

    try {
      ParseOutcome outcome = parse_hermetic(text);
      if (outcome.skipped) {
        ++skipped_files;
        if (outcome.diagnostics.empty() || !outcome.modules.empty()) {
          ok = false;
          detail = "iteration " + std::to_string(i) +
                   ": skipped file lacks diagnostics or kept modules";
          break;
        }
      }
      for (auto& mp : outcome.modules) {
        Module& m = *mp;
        m.scope = build_scope(m, &outcome.diagnostics);
        for (const ScannerInfo& info : all_scanners()) {
          std::vector<Finding> findings;
          DiagnosticList diags;
          info.fn(m, rules, &findings, &diags);
          findings_total += findings.size();
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = "iteration " + std::to_string(i) + ": exception " + e.what();
      break;
    }
    ++iterations;
  }
  if (ok) {
    detail = std::to_string(iterations) + " inputs, " +
             std::to_string(skipped_files) + " skipped, " +
             std::to_string(findings_total) + " findings, no crash";
  }
  report("mutation fuzzing", ok, detail);
}

}  // namespace

int main() {
  criterion_corpus();
  criterion_fsm_oracle();
  criterion_case_completeness();
  criterion_rbw_oracle();
  criterion_rule_monotonicity();
  criterion_stats_invariants();
  criterion_throughput();
  criterion_determinism();
  criterion_fuzz();
  return g_failures;
}
