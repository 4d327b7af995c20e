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

#include "rtlscan/report.h"

#include <sstream>

#include "json.hpp"

namespace rtlscan {
namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

// Fixed-precision milliseconds so text and JSON stay byte-stable.
std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

std::string render_text(const Report& report, bool with_stats) {
  std::ostringstream out;
  for (const Finding& f : report.findings) {
    out << "CWE-" << f.cwe << ' ' << severity_name(f.severity) << ' '
        << f.loc.file << ':' << f.loc.line << " [" << f.kind << "] "
        << f.message;
    if (!f.signals.empty()) out << " (signals: " << join(f.signals) << ')';
    out << '\n';
  }
  if (!report.diagnostics.empty()) {
    out << "-- diagnostics --\n";
    for (const Diagnostic& d : report.diagnostics) {
      out << d.loc.file << ':' << d.loc.line << ": " << d.message << '\n';
    }
  }
  if (with_stats) {
    const RunStats& s = report.stats;
    out << "-- stats --\n";
    out << "files_analyzed: " << s.files_analyzed << '\n';
    out << "files_skipped: " << s.files_skipped << '\n';
    out << "loc: " << s.loc << '\n';
    out << "parse_ms: " << format_ms(s.parse_ms) << '\n';
    out << "scan_ms: " << format_ms(s.scan_ms) << '\n';
    for (const auto& [cwe, sc] : s.per_scanner) {
      out << "scanner " << cwe << ": relevant=" << sc.relevant_nodes
          << " gated=" << sc.keyword_gated_nodes << " hits=" << sc.hits
          << '\n';
    }
  }
  if (!report.stale_suppressions.empty()) {
    out << "-- stale suppressions --\n";
    for (const auto& fp : report.stale_suppressions) out << fp << '\n';
  }
  out << report.findings.size() << " finding(s)";
  if (report.suppressed_count) {
    out << ", " << report.suppressed_count << " suppressed";
  }
  out << '\n';
  return out.str();
}

std::string render_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["version"] = 1;
  doc["findings"] = json::array();
  for (const Finding& f : report.findings) {
    json jf;
    jf["cwe"] = f.cwe;
    jf["kind"] = f.kind;
    jf["module"] = f.module;
    jf["file"] = f.loc.file;
    jf["line"] = f.loc.line;
    if (f.line2) jf["line2"] = *f.line2;
    jf["signals"] = f.signals;
    jf["keywords"] = f.keywords;
    jf["severity"] = severity_name(f.severity);
    jf["message"] = f.message;
    jf["fingerprint"] = f.fingerprint;
    doc["findings"].push_back(std::move(jf));
  }
  json stats;
  stats["files_analyzed"] = report.stats.files_analyzed;
  stats["files_skipped"] = report.stats.files_skipped;
  stats["loc"] = report.stats.loc;
  // Timings serialize as fixed-precision strings so that reruns with
  // --stable-output compare byte for byte.
  stats["parse_ms"] = format_ms(report.stats.parse_ms);
  stats["scan_ms"] = format_ms(report.stats.scan_ms);
  json per_scanner = json::object();
  for (const auto& [cwe, sc] : report.stats.per_scanner) {
    json js;
    js["relevant_nodes"] = sc.relevant_nodes;
    js["keyword_gated_nodes"] = sc.keyword_gated_nodes;
    js["hits"] = sc.hits;
    per_scanner[std::to_string(cwe)] = std::move(js);
  }
  stats["per_scanner"] = std::move(per_scanner);
  doc["stats"] = std::move(stats);
  return doc.dump(2) + "\n";
}

}  // namespace rtlscan
