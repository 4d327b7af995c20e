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

#ifndef RTLSCAN_LEXER_H_
#define RTLSCAN_LEXER_H_

#include <string_view>

#include "rtlscan/token.h"

namespace rtlscan {

struct LexResult {
  TokenList tokens;
  DiagnosticList diagnostics;
};

// Splits `source` into tokens. Comments and whitespace are dropped.
// Compiler directives starting with a backtick are emitted as
// identifier-like tokens so the preprocessing pass can handle them.
// The lexer is total: any byte sequence produces a token list, with
// diagnostics for unterminated comments/strings and stray characters.
LexResult tokenize(std::string_view source, std::string_view file);

bool is_reserved_word(std::string_view word);

}  // namespace rtlscan

#endif  // RTLSCAN_LEXER_H_
