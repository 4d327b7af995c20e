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

#include "rtlscan/lexer.h"

#include <array>
#include <cctype>
#include <string>
#include <unordered_set>

namespace rtlscan {
namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_dec_digit(char c) { return c >= '0' && c <= '9'; }

bool is_base_letter(char c) {
  switch (c) {
    case 'd': case 'D': case 'b': case 'B':
    case 'o': case 'O': case 'h': case 'H':
      return true;
    default:
      return false;
  }
}

bool is_based_digit(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' ||
         c == 'z' || c == 'Z' || c == '?' || c == '_';
}

// Reserved words. Everything the parser supports plus the common words it
// must reject by name instead of misreading as identifiers.
const std::unordered_set<std::string_view>& reserved_words() {
  static const auto* words = new std::unordered_set<std::string_view>{
      "module", "endmodule", "input", "output", "inout", "reg", "wire",
      "logic", "integer", "parameter", "localparam", "assign", "always",
      "always_comb", "always_ff", "always_latch", "begin", "end", "if",
      "else", "case", "casez", "casex", "endcase", "default", "posedge",
      "negedge", "or", "initial", "function", "endfunction", "task",
      "endtask", "generate", "endgenerate", "genvar", "for", "while",
      "repeat", "forever", "interface", "endinterface", "modport",
      "typedef", "enum", "struct", "union", "packed", "package",
      "endpackage", "import", "export", "program", "endprogram", "class",
      "endclass", "signed", "unsigned", "real", "time", "realtime",
      "event", "wait", "fork", "join", "deassign", "force", "release",
      "disable", "primitive", "endprimitive", "specify", "endspecify",
      "table", "endtable", "tri", "tri0", "tri1", "supply0", "supply1",
      "wand", "wor", "trireg", "defparam", "scalared", "vectored",
      "automatic", "unique", "priority", "return", "void", "bit", "byte",
      "int", "longint", "shortint", "string", "assert", "property",
      "endproperty", "sequence", "endsequence", "cover", "assume",
  };
  return *words;
}

const std::array<std::string_view, 4> kOps3 = {"===", "!==", "<<<", ">>>"};
const std::array<std::string_view, 16> kOps2 = {
    "==", "!=", "<=", ">=", "&&", "||", "<<", ">>",
    "**", "~&", "~|", "~^", "^~", "+:", "-:", "->"};
constexpr std::string_view kOps1 = "+-*/%<>!~&|^=?";
constexpr std::string_view kPunct = "()[]{};,.:#@";

}  // namespace

bool is_reserved_word(std::string_view word) {
  return reserved_words().count(word) != 0;
}

LexResult tokenize(std::string_view src, std::string_view file) {
  LexResult out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  int line = 1, col = 1;

  auto here = [&]() { return SourceLoc{std::string(file), line, col}; };
  auto bump = [&](std::size_t count) {
    while (count-- && i < n) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end,
                  SourceLoc loc) {
    out.tokens.push_back(
        Token{kind, std::string(src.substr(begin, end - begin)), std::move(loc)});
  };
  auto skip_to_newline = [&]() {
    while (i < n && src[i] != '\n') bump(1);
  };

  while (i < n) {
    const char c = src[i];

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
        c == '\v') {
      bump(1);
      continue;
    }

    // Comments.
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      skip_to_newline();
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      SourceLoc open = here();
      bump(2);
      bool closed = false;
      while (i < n) {
        if (src[i] == '*' && i + 1 < n && src[i + 1] == '/') {
          bump(2);
          closed = true;
          break;
        }
        bump(1);
      }
      if (!closed) {
        out.diagnostics.push_back({open, "unterminated block comment"});
      }
      continue;
    }

    // String literals. An unterminated string ends the token at the next
    // newline (or end of input) with a diagnostic; lexing then resumes.
    if (c == '"') {
      SourceLoc loc = here();
      std::size_t begin = i;
      bump(1);
      bool closed = false;
      while (i < n && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n && src[i + 1] != '\n') {
          bump(2);
          continue;
        }
        if (src[i] == '"') {
          bump(1);
          closed = true;
          break;
        }
        bump(1);
      }
      if (!closed) {
        out.diagnostics.push_back({loc, "unterminated string literal"});
        continue;
      }
      emit(TokenKind::kStringLiteral, begin, i, loc);
      continue;
    }

    // Numbers: plain decimal, or [size]'[s]base digits in one token.
    if (is_dec_digit(c) ||
        (c == '\'' && i + 1 < n &&
         (is_base_letter(src[i + 1]) ||
          (i + 2 < n && (src[i + 1] == 's' || src[i + 1] == 'S') &&
           is_base_letter(src[i + 2]))))) {
      SourceLoc loc = here();
      std::size_t begin = i;
      while (i < n && (is_dec_digit(src[i]) || src[i] == '_')) bump(1);
      if (i < n && src[i] == '\'') {
        std::size_t probe = i + 1;
        if (probe < n && (src[probe] == 's' || src[probe] == 'S')) ++probe;
        if (probe < n && is_base_letter(src[probe])) {
          bump(probe + 1 - i);
          while (i < n && is_based_digit(src[i])) bump(1);
        }
      }
      emit(TokenKind::kNumber, begin, i, loc);
      continue;
    }
    if (c == '\'') {
      out.diagnostics.push_back({here(), "stray apostrophe"});
      bump(1);
      continue;
    }

    // Identifiers and reserved words.
    if (is_ident_start(c)) {
      SourceLoc loc = here();
      std::size_t begin = i;
      bump(1);
      while (i < n && is_ident_char(src[i])) bump(1);
      std::string_view word = src.substr(begin, i - begin);
      emit(is_reserved_word(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
           begin, i, loc);
      continue;
    }

    // Compiler directives pass through as identifier-like tokens; the
    // preprocessing pass interprets them.
    if (c == '`') {
      SourceLoc loc = here();
      std::size_t begin = i;
      bump(1);
      if (i < n && is_ident_start(src[i])) {
        while (i < n && is_ident_char(src[i])) bump(1);
        emit(TokenKind::kIdentifier, begin, i, loc);
      } else {
        out.diagnostics.push_back({loc, "stray backtick"});
      }
      continue;
    }

    // Operators, longest match first.
    if (i + 2 < n) {
      std::string_view three = src.substr(i, 3);
      bool matched = false;
      for (std::string_view op : kOps3) {
        if (three == op) {
          SourceLoc loc = here();
          std::size_t begin = i;
          bump(3);
          emit(TokenKind::kOperator, begin, i, loc);
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    if (i + 1 < n) {
      std::string_view two = src.substr(i, 2);
      bool matched = false;
      for (std::string_view op : kOps2) {
        if (two == op) {
          SourceLoc loc = here();
          std::size_t begin = i;
          bump(2);
          emit(TokenKind::kOperator, begin, i, loc);
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    if (kOps1.find(c) != std::string_view::npos) {
      SourceLoc loc = here();
      std::size_t begin = i;
      bump(1);
      emit(TokenKind::kOperator, begin, i, loc);
      continue;
    }
    if (kPunct.find(c) != std::string_view::npos) {
      SourceLoc loc = here();
      std::size_t begin = i;
      bump(1);
      emit(TokenKind::kPunctuation, begin, i, loc);
      continue;
    }

    out.diagnostics.push_back({here(), "unexpected character"});
    bump(1);
  }

  return out;
}

}  // namespace rtlscan
