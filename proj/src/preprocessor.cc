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

#include "rtlscan/preprocessor.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "rtlscan/lexer.h"

namespace rtlscan {
namespace {

constexpr int kMaxIncludeDepth = 16;
constexpr int kMaxExpandDepth = 32;
constexpr std::size_t kMaxOutputTokens = 1u << 20;

struct Expander {
  MacroTable& macros;
  const FileReader& reader;
  PreprocessResult out;
  std::set<std::string> include_stack;  // canonical-ish paths in flight
  bool overflowed = false;

  void diag(const SourceLoc& loc, std::string message) {
    out.diagnostics.push_back({loc, std::move(message)});
  }

  void append(Token t) {
    if (out.tokens.size() >= kMaxOutputTokens) {
      if (!overflowed) {
        diag(t.loc, "preprocessor output too large; truncated");
        overflowed = true;
      }
      return;
    }
    out.tokens.push_back(std::move(t));
  }

  // Splices a macro body, re-stamping every token at the reference site so
  // downstream syntax nodes point at the use, not the definition.
  void expand_macro(const std::string& name, const SourceLoc& ref,
                    std::set<std::string>& active, int depth) {
    if (depth > kMaxExpandDepth || active.count(name)) {
      diag(ref, "recursive expansion of `" + name + "; left as identifier");
      append(Token{TokenKind::kIdentifier, name, ref});
      return;
    }
    auto it = macros.find(name);
    if (it == macros.end()) {
      diag(ref, "undefined macro `" + name + "; treated as identifier");
      append(Token{TokenKind::kIdentifier, name, ref});
      return;
    }
    active.insert(name);
    for (const Token& body_tok : it->second) {
      if (body_tok.is_directive()) {
        std::string inner = body_tok.lexeme.substr(1);
        expand_macro(inner, ref, active, depth + 1);
      } else {
        Token t = body_tok;
        t.loc = ref;
        append(std::move(t));
      }
    }
    active.erase(name);
  }

  void handle_include(const TokenList& toks, std::size_t& idx, int depth) {
    const Token& directive = toks[idx];
    ++idx;
    if (idx >= toks.size() || toks[idx].kind != TokenKind::kStringLiteral ||
        toks[idx].loc.line != directive.loc.line) {
      diag(directive.loc, "`include expects a quoted path");
      return;
    }
    std::string quoted = toks[idx].lexeme;
    ++idx;
    std::string rel =
        quoted.size() >= 2 ? quoted.substr(1, quoted.size() - 2) : std::string();

    namespace fs = std::filesystem;
    fs::path base = fs::path(directive.loc.file).parent_path();
    fs::path target = base.empty() ? fs::path(rel) : base / rel;
    std::string key = target.lexically_normal().generic_string();

    if (depth >= kMaxIncludeDepth) {
      diag(directive.loc, "include nesting too deep: " + key);
      return;
    }
    if (include_stack.count(key)) {
      diag(directive.loc, "include cycle involving " + key);
      return;
    }
    std::optional<std::string> content = reader(key);
    if (!content) {
      diag(directive.loc, "cannot read include file " + key);
      return;
    }
    include_stack.insert(key);
    LexResult lexed = tokenize(*content, key);
    for (auto& d : lexed.diagnostics) out.diagnostics.push_back(std::move(d));
    run(lexed.tokens, depth + 1);
    include_stack.erase(key);
  }

  void run(const TokenList& toks, int include_depth) {
    std::size_t i = 0;
    while (i < toks.size()) {
      const Token& t = toks[i];
      if (!t.is_directive()) {
        append(t);
        ++i;
        continue;
      }
      std::string name = t.lexeme.substr(1);
      if (name == "define") {
        const int def_line = t.loc.line;
        const std::string& def_file = t.loc.file;
        ++i;
        if (i >= toks.size() || toks[i].kind != TokenKind::kIdentifier ||
            toks[i].is_directive() || toks[i].loc.line != def_line) {
          diag(t.loc, "`define expects a macro name");
          continue;
        }
        std::string macro_name = toks[i].lexeme;
        ++i;
        TokenList body;
        while (i < toks.size() && toks[i].loc.line == def_line &&
               toks[i].loc.file == def_file) {
          body.push_back(toks[i]);
          ++i;
        }
        macros[macro_name] = std::move(body);
        continue;
      }
      if (name == "include") {
        handle_include(toks, i, include_depth);
        continue;
      }
      // Any other directive is treated as a macro reference.
      std::set<std::string> active;
      expand_macro(name, t.loc, active, 0);
      ++i;
    }
  }
};

}  // namespace

const FileReader& default_file_reader() {
  static const FileReader* reader = new FileReader(
      [](const std::string& path) -> std::optional<std::string> {
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
      });
  return *reader;
}

PreprocessResult preprocess(const TokenList& tokens, MacroTable& macros,
                            const FileReader& reader) {
  Expander ex{macros, reader, {}, {}, false};
  if (!tokens.empty()) {
    ex.include_stack.insert(std::filesystem::path(tokens.front().loc.file)
                                .lexically_normal()
                                .generic_string());
  }
  ex.run(tokens, 0);
  return std::move(ex.out);
}

}  // namespace rtlscan
