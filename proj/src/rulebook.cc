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

#include "rtlscan/rulebook.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "json.hpp"

namespace rtlscan {
namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

// Line number of a byte offset in the original text, for load errors.
int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

bool KeywordSet::matches(std::string_view name) const {
  if (name.empty()) return false;
  std::string lower = to_lower(name);
  for (const auto& ex : exclude) {
    if (contains(lower, ex)) return false;
  }
  for (const auto& m : match) {
    if (contains(lower, m)) return true;
  }
  return false;
}

std::string KeywordSet::matched_keyword(std::string_view name) const {
  if (name.empty()) return {};
  std::string lower = to_lower(name);
  for (const auto& ex : exclude) {
    if (contains(lower, ex)) return {};
  }
  for (const auto& m : match) {
    if (contains(lower, m)) return m;
  }
  return {};
}

Rulebook Rulebook::defaults() {
  Rulebook rb;
  rb.lock.match = {"lock", "prot"};
  rb.lock.exclude = {"clock"};
  rb.debug.match = {"debug", "dbg"};
  rb.reset.match = {"rst", "reset"};
  rb.security_register.match = {"lock", "prot"};
  rb.security_register.exclude = {"clock"};
  rb.wdata.match = {"wdata"};
  rb.control_prune.match = {"clk", "clock", "rst", "reset"};
  return rb;
}

bool Rulebook::load(const std::string& json_text, Rulebook* out,
                    std::string* error) {
  using json = nlohmann::ordered_json;

  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    if (error) {
      *error = "rule file: parse error at line " +
               std::to_string(line_of_offset(json_text, e.byte)) + ": " +
               e.what();
    }
    return false;
  }
  if (!root.is_object()) {
    if (error) *error = "rule file: top level must be an object";
    return false;
  }

  Rulebook rb = defaults();
  std::map<std::string, KeywordSet*> categories = {
      {"lock", &rb.lock},
      {"debug", &rb.debug},
      {"reset", &rb.reset},
      {"security_register", &rb.security_register},
      {"wdata", &rb.wdata},
      {"control_prune", &rb.control_prune},
  };

  for (auto it = root.begin(); it != root.end(); ++it) {
    auto cat = categories.find(it.key());
    if (cat == categories.end()) {
      if (error) *error = "rule file: unknown category '" + it.key() + "'";
      return false;
    }
    const json& value = it.value();
    if (!value.is_object()) {
      if (error) {
        *error = "rule file: category '" + it.key() + "' must be an object";
      }
      return false;
    }
    KeywordSet set;
    for (auto f = value.begin(); f != value.end(); ++f) {
      std::vector<std::string>* target = nullptr;
      if (f.key() == "match") {
        target = &set.match;
      } else if (f.key() == "exclude") {
        target = &set.exclude;
      } else {
        if (error) {
          *error = "rule file: unknown key '" + f.key() + "' in category '" +
                   it.key() + "'";
        }
        return false;
      }
      if (!f.value().is_array()) {
        if (error) {
          *error = "rule file: '" + f.key() + "' of category '" + it.key() +
                   "' must be an array of strings";
        }
        return false;
      }
      for (const json& entry : f.value()) {
        if (!entry.is_string()) {
          if (error) {
            *error = "rule file: non-string entry in '" + f.key() +
                     "' of category '" + it.key() + "'";
          }
          return false;
        }
        std::string s = entry.get<std::string>();
        if (s.empty() ||
            std::any_of(s.begin(), s.end(), [](unsigned char c) {
              return std::isspace(c);
            })) {
          if (error) {
            *error = "rule file: invalid entry '" + s + "' in '" + f.key() +
                     "' of category '" + it.key() +
                     "' (must be non-empty, no whitespace)";
          }
          return false;
        }
        target->push_back(to_lower(s));
      }
    }
    *cat->second = std::move(set);
  }

  *out = std::move(rb);
  return true;
}

}  // namespace rtlscan
