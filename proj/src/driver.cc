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

#include "rtlscan/driver.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "rtlscan/findings.h"
#include "rtlscan/lexer.h"
#include "rtlscan/parser.h"
#include "rtlscan/scanners/scanners.h"
#include "rtlscan/suppress.h"
#include "rtlscan/visitor.h"

namespace rtlscan {
namespace {

namespace fs = std::filesystem;

bool has_verilog_ext(const fs::path& p) {
  return p.extension() == ".v" || p.extension() == ".sv";
}

// Report path: normalized, relative to the working directory when the
// file lives under it, with forward slashes.
std::string report_path(const fs::path& p, const fs::path& cwd) {
  fs::path abs = p.is_absolute() ? p.lexically_normal()
                                 : (cwd / p).lexically_normal();
  fs::path rel = abs.lexically_relative(cwd);
  if (!rel.empty() && rel.native()[0] != '.') return rel.generic_string();
  return abs.generic_string();
}

std::string absolute_key(const fs::path& p, const fs::path& cwd) {
  fs::path abs = p.is_absolute() ? p : cwd / p;
  return abs.lexically_normal().generic_string();
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

std::uint64_t count_lines(const std::string& text) {
  std::uint64_t lines =
      static_cast<std::uint64_t>(std::count(text.begin(), text.end(), '\n'));
  if (!text.empty() && text.back() != '\n') ++lines;
  return lines;
}

// Macro and include references of one file, for scan ordering.
struct FileDeps {
  std::set<std::string> defines;
  std::set<std::string> uses;
  std::set<std::string> includes;  // absolute keys
};

FileDeps pre_scan(const std::string& text, const std::string& path,
                  const fs::path& cwd) {
  FileDeps deps;
  LexResult lexed = tokenize(text, path);
  const TokenList& toks = lexed.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (!t.is_directive()) continue;
    if (t.lexeme == "`define") {
      if (i + 1 < toks.size() && toks[i + 1].kind == TokenKind::kIdentifier) {
        deps.defines.insert(toks[i + 1].lexeme);
      }
      continue;
    }
    if (t.lexeme == "`include") {
      if (i + 1 < toks.size() &&
          toks[i + 1].kind == TokenKind::kStringLiteral) {
        fs::path target =
            fs::path(path).parent_path() / toks[i + 1].lexeme;
        deps.includes.insert(absolute_key(target, cwd));
      }
      continue;
    }
    deps.uses.insert(t.lexeme.substr(1));
  }
  // A file satisfying its own reference needs no ordering edge.
  for (const auto& d : deps.defines) deps.uses.erase(d);
  return deps;
}

}  // namespace

bool discover_files(const std::vector<std::string>& paths,
                    std::vector<std::string>* out, std::string* error) {
  fs::path cwd = fs::current_path();
  std::set<std::string> seen;       // absolute keys
  std::vector<fs::path> collected;  // original paths

  for (const std::string& raw : paths) {
    fs::path p(raw);
    std::error_code ec;
    fs::file_status st = fs::status(p, ec);
    if (ec || st.type() == fs::file_type::not_found) {
      if (error) *error = "path not found: " + raw;
      return false;
    }
    if (fs::is_directory(st)) {
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (!entry.is_regular_file()) continue;
        if (!has_verilog_ext(entry.path())) continue;
        if (seen.insert(absolute_key(entry.path(), cwd)).second) {
          collected.push_back(entry.path());
        }
      }
    } else if (fs::is_regular_file(st)) {
      if (seen.insert(absolute_key(p, cwd)).second) collected.push_back(p);
    } else {
      if (error) *error = "not a file or directory: " + raw;
      return false;
    }
  }

  // Lexicographic base order over report paths.
  struct Entry {
    std::string key;     // absolute
    std::string report;  // as shown in findings
  };
  std::vector<Entry> entries;
  for (const auto& p : collected) {
    entries.push_back({absolute_key(p, cwd), report_path(p, cwd)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.report < b.report; });

  // Dependency edges: macro definers and included files come first.
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    index_of[entries[i].key] = i;
  }
  std::vector<FileDeps> deps(entries.size());
  std::map<std::string, std::vector<std::size_t>> definers;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string text;
    if (!read_file(entries[i].key, &text)) continue;  // surfaces later
    deps[i] = pre_scan(text, entries[i].report, cwd);
    for (const auto& name : deps[i].defines) definers[name].push_back(i);
  }
  std::vector<std::set<std::size_t>> successors(entries.size());
  std::vector<std::size_t> indegree(entries.size(), 0);
  auto add_edge = [&](std::size_t from, std::size_t to) {
    if (from == to) return;
    if (successors[from].insert(to).second) ++indegree[to];
  };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& name : deps[i].uses) {
      auto it = definers.find(name);
      if (it == definers.end()) continue;
      for (std::size_t d : it->second) add_edge(d, i);
    }
    for (const auto& inc : deps[i].includes) {
      auto it = index_of.find(inc);
      if (it != index_of.end()) add_edge(it->second, i);
    }
  }

  // Kahn's algorithm; the smallest ready index (lexicographically
  // smallest path) goes first. Cycle members are appended in path order.
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  std::vector<bool> emitted(entries.size(), false);
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    emitted[i] = true;
    for (std::size_t s : successors[i]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!emitted[i]) order.push_back(i);
  }

  out->clear();
  for (std::size_t i : order) out->push_back(entries[i].report);
  return true;
}

ScanResult run_scan(const ScanConfig& config) {
  using clock = std::chrono::steady_clock;
  ScanResult result;
  Report& report = result.report;

  Rulebook rules = Rulebook::defaults();
  if (!config.rules_file.empty()) {
    std::string text;
    if (!read_file(config.rules_file, &text)) {
      result.config_error = true;
      result.error = "cannot read rules file: " + config.rules_file;
      return result;
    }
    std::string err;
    if (!Rulebook::load(text, &rules, &err)) {
      result.config_error = true;
      result.error = err;
      return result;
    }
  }

  std::vector<int> cwes = config.cwes;
  if (cwes.empty()) {
    for (const ScannerInfo& s : all_scanners()) cwes.push_back(s.cwe);
  }
  std::sort(cwes.begin(), cwes.end());
  cwes.erase(std::unique(cwes.begin(), cwes.end()), cwes.end());
  std::vector<const ScannerInfo*> selected;
  for (int cwe : cwes) {
    const ScannerInfo* found = nullptr;
    for (const ScannerInfo& s : all_scanners()) {
      if (s.cwe == cwe) found = &s;
    }
    if (!found) {
      result.config_error = true;
      result.error = "unknown CWE: " + std::to_string(cwe);
      return result;
    }
    selected.push_back(found);
    report.stats.per_scanner.emplace(cwe, ScannerStats{});
  }

  SuppressionList suppressions;
  if (!config.suppressions_file.empty()) {
    std::string text;
    if (!read_file(config.suppressions_file, &text)) {
      result.config_error = true;
      result.error =
          "cannot read suppression file: " + config.suppressions_file;
      return result;
    }
    std::string err;
    if (!parse_suppressions(text, &suppressions, &err)) {
      result.config_error = true;
      result.error = err;
      return result;
    }
  }

  std::vector<std::string> files;
  {
    std::string err;
    if (!discover_files(config.paths, &files, &err)) {
      result.config_error = true;
      result.error = err;
      return result;
    }
  }

  MacroTable macros;
  for (const std::string& file : files) {
    std::string text;
    if (!read_file(file, &text)) {
      result.config_error = true;
      result.error = "cannot read file: " + file;
      return result;
    }

    auto parse_start = clock::now();
    ParseOutcome outcome = parse_verilog_source(text, file, macros);
    for (auto& d : outcome.diagnostics) {
      report.diagnostics.push_back(std::move(d));
    }
    if (outcome.skipped) {
      report.stats.files_skipped++;
      report.stats.parse_ms +=
          std::chrono::duration<double, std::milli>(clock::now() - parse_start)
              .count();
      continue;
    }
    for (auto& module : outcome.modules) {
      module->scope = build_scope(*module, &report.diagnostics);
    }
    report.stats.parse_ms +=
        std::chrono::duration<double, std::milli>(clock::now() - parse_start)
            .count();
    report.stats.files_analyzed++;
    report.stats.loc += count_lines(text);

    auto scan_start = clock::now();
    for (const auto& module : outcome.modules) {
      report.stats.total_nodes += count_nodes(*module);
      for (const ScannerInfo* scanner : selected) {
        ScannerStats stats = scanner->fn(*module, rules, &report.findings,
                                         &report.diagnostics);
        report.stats.per_scanner[scanner->cwe] += stats;
      }
    }
    report.stats.scan_ms +=
        std::chrono::duration<double, std::milli>(clock::now() - scan_start)
            .count();
  }

  for (Finding& f : report.findings) {
    f.fingerprint = finding_fingerprint(f, f.loc.file);
    auto severity = config.severity_overrides.find(f.cwe);
    if (severity != config.severity_overrides.end()) {
      f.severity = severity->second;
    }
  }
  report.suppressed_count = apply_suppressions(suppressions, &report.findings,
                                               &report.stale_suppressions);
  sort_findings(report.findings);

  if (config.stable_output) {
    report.stats.parse_ms = 0.0;
    report.stats.scan_ms = 0.0;
  }
  return result;
}

}  // namespace rtlscan
