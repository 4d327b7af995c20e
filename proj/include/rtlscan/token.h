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

#ifndef RTLSCAN_TOKEN_H_
#define RTLSCAN_TOKEN_H_

#include <string>
#include <vector>

#include "rtlscan/source_loc.h"

namespace rtlscan {

enum class TokenKind {
  kKeyword,
  kIdentifier,  // also carries `directives ("`define", "`FOO") for the preprocessor
  kNumber,
  kOperator,
  kPunctuation,
  kStringLiteral,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourceLoc loc;

  bool is(TokenKind k) const { return kind == k; }
  bool is_keyword(std::string_view kw) const {
    return kind == TokenKind::kKeyword && lexeme == kw;
  }
  bool is_lexeme(std::string_view s) const { return lexeme == s; }
  bool is_directive() const {
    return kind == TokenKind::kIdentifier && !lexeme.empty() && lexeme[0] == '`';
  }
};

using TokenList = std::vector<Token>;

}  // namespace rtlscan

#endif  // RTLSCAN_TOKEN_H_
