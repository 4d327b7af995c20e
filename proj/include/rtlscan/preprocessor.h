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

#ifndef RTLSCAN_PREPROCESSOR_H_
#define RTLSCAN_PREPROCESSOR_H_

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "rtlscan/token.h"

namespace rtlscan {

// Macro name -> replacement token list. Shared across the files of one
// scan so that definition files feed their users.
using MacroTable = std::map<std::string, TokenList>;

// Returns the content of `path`, or nullopt when unreadable. Injectable
// so tests can preprocess includes without touching the filesystem.
using FileReader = std::function<std::optional<std::string>(const std::string&)>;

const FileReader& default_file_reader();

struct PreprocessResult {
  TokenList tokens;
  DiagnosticList diagnostics;
};

// Substitution-only preprocessing over a token stream:
//   `define NAME body...   records the rest of the line as replacement
//   `NAME                  splices the replacement, re-stamped at the
//                          reference site; an unknown macro becomes a
//                          synthetic identifier of the same name, with
//                          a diagnostic
//   `include "file"        resolved relative to the including file and
//                          preprocessed recursively (cycle-guarded)
// There is no conditional compilation and macros take no arguments.
PreprocessResult preprocess(const TokenList& tokens, MacroTable& macros,
                            const FileReader& reader = default_file_reader());

}  // namespace rtlscan

#endif  // RTLSCAN_PREPROCESSOR_H_
