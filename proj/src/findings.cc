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

#include "rtlscan/findings.h"

#include <algorithm>
#include <tuple>

namespace rtlscan {
namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// Field and list separators inside the hashed byte string; both are
// control characters that cannot appear in identifiers or paths.
constexpr char kFieldSep = '\x1f';
constexpr char kListSep = '\x1e';

void fnv_bytes(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
}

void fnv_byte(std::uint64_t& h, char c) {
  h ^= static_cast<unsigned char>(c);
  h *= kFnvPrime;
}

}  // namespace

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::kInfo:
      return "info";
    case Severity::kWarning:
      return "warning";
    case Severity::kError:
      return "error";
  }
  return "warning";
}

std::optional<Severity> severity_from_name(std::string_view name) {
  if (name == "info") return Severity::kInfo;
  if (name == "warning") return Severity::kWarning;
  if (name == "error") return Severity::kError;
  return std::nullopt;
}

std::string finding_fingerprint(const Finding& f,
                                const std::string& report_path) {
  std::uint64_t h = kFnvOffset;
  fnv_bytes(h, "CWE-" + std::to_string(f.cwe));
  fnv_byte(h, kFieldSep);
  fnv_bytes(h, f.kind);
  fnv_byte(h, kFieldSep);
  fnv_bytes(h, f.module);
  fnv_byte(h, kFieldSep);
  for (std::size_t i = 0; i < f.signals.size(); ++i) {
    if (i) fnv_byte(h, kListSep);
    fnv_bytes(h, f.signals[i]);
  }
  fnv_byte(h, kFieldSep);
  fnv_bytes(h, report_path);

  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

void sort_findings(std::vector<Finding>& findings) {
  std::ranges::sort(findings, [](const Finding& a, const Finding& b) {
    return std::tie(a.loc.file, a.loc.line, a.cwe, a.kind, a.message,
                    a.fingerprint) < std::tie(b.loc.file, b.loc.line, b.cwe,
                                              b.kind, b.message,
                                              b.fingerprint);
  });
}

}  // namespace rtlscan
