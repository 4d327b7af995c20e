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

#ifndef RTLSCAN_RULEBOOK_H_
#define RTLSCAN_RULEBOOK_H_

#include <string>
#include <string_view>
#include <vector>

namespace rtlscan {

// Identifier-name matching for the scanners. Each category holds match
// substrings and exclusion substrings; a name matches the category when
// its lowercased text contains at least one match substring and no
// exclusion substring. Exclusion always dominates.
struct KeywordSet {
  std::vector<std::string> match;
  std::vector<std::string> exclude;

  bool matches(std::string_view name) const;

  // First match substring found in the name, for finding evidence.
  // Empty when the name does not match.
  std::string matched_keyword(std::string_view name) const;
};

// The named keyword categories the scanners consume. Defaults are
// conservative; a JSON rule file can replace any of them.
struct Rulebook {
  KeywordSet lock;               // lock/protection bits guarding writes
  KeywordSet debug;              // debug facility signals
  KeywordSet reset;              // reset condition signals
  KeywordSet security_register;  // registers that must see a reset
  KeywordSet wdata;              // write-data buses feeding registers
  KeywordSet control_prune;      // infrastructure signals never counted
                                 // as write protection

  static Rulebook defaults();

  // Parses a JSON rule file. Top-level keys must be category names;
  // each value is {"match": [...], "exclude": [...]}. Categories not
  // present keep their defaults. Returns false and sets *error on any
  // malformed input (unknown key, empty or whitespace entry, bad type).
  static bool load(const std::string& json_text, Rulebook* out,
                   std::string* error);
};

}  // namespace rtlscan

#endif  // RTLSCAN_RULEBOOK_H_
