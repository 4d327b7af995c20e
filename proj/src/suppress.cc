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

#include "rtlscan/suppress.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace rtlscan {
namespace {

bool is_hex16(std::string_view s) {
  if (s.size() != 16) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

bool parse_suppressions(const std::string& text, SuppressionList* out,
                        std::string* error) {
  SuppressionList list;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view entry = line;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      entry = trim(line.substr(0, hash));
    }
    if (!is_hex16(entry)) {
      if (error) {
        *error = "suppression file line " + std::to_string(line_no) +
                 ": expected a 16-digit lowercase hex fingerprint, got '" +
                 std::string(entry) + "'";
      }
      return false;
    }
    list.fingerprints.emplace_back(entry);
  }
  *out = std::move(list);
  return true;
}

std::uint64_t apply_suppressions(const SuppressionList& list,
                                 std::vector<Finding>* findings,
                                 std::vector<std::string>* stale) {
  std::set<std::string> wanted(list.fingerprints.begin(),
                               list.fingerprints.end());
  std::set<std::string> used;
  std::uint64_t removed = 0;
  auto it = std::remove_if(findings->begin(), findings->end(),
                           [&](const Finding& f) {
                             if (!wanted.count(f.fingerprint)) return false;
                             used.insert(f.fingerprint);
                             return true;
                           });
  removed = static_cast<std::uint64_t>(findings->end() - it);
  findings->erase(it, findings->end());

  if (stale) {
    std::set<std::string> reported;
    for (const auto& fp : list.fingerprints) {
      if (!used.count(fp) && reported.insert(fp).second) {
        stale->push_back(fp);
      }
    }
  }
  return removed;
}

}  // namespace rtlscan
