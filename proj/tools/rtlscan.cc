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

// Command line interface. Exit codes: 0 clean, 1 findings kept while
// --fail-on-findings is set, 2 configuration or I/O error.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rtlscan/driver.h"
#include "rtlscan/report.h"
#include "rtlscan/scanners/scanners.h"

namespace {

constexpr const char* kVersion = "0.1.0";

bool parse_cwe_list(const std::string& arg, std::vector<int>* out,
                    std::string* error) {
  std::set<int> known;
  for (const auto& s : rtlscan::all_scanners()) known.insert(s.cwe);
  std::size_t start = 0;
  while (start <= arg.size()) {
    std::size_t comma = arg.find(',', start);
    std::string item = arg.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) {
      *error = "empty entry in --cwe list";
      return false;
    }
    // Accept both "1234" and "CWE-1234".
    if (item.rfind("CWE-", 0) == 0 || item.rfind("cwe-", 0) == 0) {
      item = item.substr(4);
    }
    try {
      int value = std::stoi(item);
      if (!known.count(value)) {
        *error = "unknown CWE '" + item + "' in --cwe list";
        return false;
      }
      out->push_back(value);
    } catch (const std::exception&) {
      *error = "bad CWE '" + item + "' in --cwe list";
      return false;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return true;
}

bool parse_severity_overrides(const std::vector<std::string>& args,
                              std::map<int, rtlscan::Severity>* out,
                              std::string* error) {
  for (const std::string& arg : args) {
    std::size_t eq = arg.find('=');
    if (eq == std::string::npos) {
      *error = "--severity expects CWE=LEVEL, got '" + arg + "'";
      return false;
    }
    std::vector<int> cwe;
    if (!parse_cwe_list(arg.substr(0, eq), &cwe, error)) return false;
    auto severity = rtlscan::severity_from_name(arg.substr(eq + 1));
    if (!severity) {
      *error = "unknown severity '" + arg.substr(eq + 1) +
               "' (expected info, warning or error)";
      return false;
    }
    for (int c : cwe) (*out)[c] = *severity;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security-focused static analysis for Verilog RTL"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CLI::App* scan = app.add_subcommand("scan", "Scan Verilog sources");
  std::vector<std::string> paths;
  std::string cwe_list, rules_file, suppressions_file;
  std::string format = "text";
  std::vector<std::string> severity_args;
  bool with_stats = false, fail_on_findings = false, stable_output = false;

  scan->add_option("paths", paths, "Verilog files or directories")
      ->required()
      ->expected(-1);
  scan->add_option("--cwe", cwe_list,
                   "Comma-separated CWE list (default: all checks)");
  scan->add_option("--rules", rules_file, "JSON keyword rule file");
  scan->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  scan->add_option("--suppressions", suppressions_file,
                   "Fingerprint suppression file");
  scan->add_option("--severity", severity_args,
                   "Override severity, e.g. --severity 1280=warning");
  scan->add_flag("--stats", with_stats, "Include statistics in text output");
  scan->add_flag("--fail-on-findings", fail_on_findings,
                 "Exit 1 when findings remain after suppressions");
  scan->add_flag("--stable-output", stable_output,
                 "Zero out timing fields for byte-stable reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  rtlscan::ScanConfig config;
  config.paths = paths;
  config.rules_file = rules_file;
  config.suppressions_file = suppressions_file;
  config.stable_output = stable_output;

  std::string error;
  if (!cwe_list.empty() && !parse_cwe_list(cwe_list, &config.cwes, &error)) {
    std::fprintf(stderr, "error: %s\n", error.c_str());
    return 2;
  }
  if (!parse_severity_overrides(severity_args, &config.severity_overrides,
                                &error)) {
    std::fprintf(stderr, "error: %s\n", error.c_str());
    return 2;
  }

  rtlscan::ScanResult result = rtlscan::run_scan(config);
  if (result.config_error) {
    std::fprintf(stderr, "error: %s\n", result.error.c_str());
    return 2;
  }

  if (format == "json") {
    std::fputs(rtlscan::render_json(result.report).c_str(), stdout);
    for (const auto& d : result.report.diagnostics) {
      std::fprintf(stderr, "%s:%d: %s\n", d.loc.file.c_str(), d.loc.line,
                   d.message.c_str());
    }
  } else {
    std::fputs(rtlscan::render_text(result.report, with_stats).c_str(),
               stdout);
  }

  if (fail_on_findings && !result.report.findings.empty()) return 1;
  return 0;
}
