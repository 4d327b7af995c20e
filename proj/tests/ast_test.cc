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

#include "rtlscan/ast.h"

#include <set>
#include <string>

#include "doctest.h"
#include "rtlscan/parser.h"
#include "test_util.h"

using namespace rtlscan;
using test::parse_text;
using test::scoped_module;

namespace {

// Parses `expr` as the right side of a continuous assign and renders it
// back to text.
std::string roundtrip(const std::string& expr) {
  auto o = parse_text("module m (output wire y);\n  assign y = " + expr +
                      ";\nendmodule\n");
  REQUIRE_FALSE(o.skipped);
  const auto& ca = static_cast<const ContinuousAssign&>(*o.modules[0]->items[1]);
  return render_expr(*ca.rhs);
}

LabelValue classify_in(const std::string& module_body,
                       const std::string& expr) {
  auto o = parse_text("module m (output wire y);\n" + module_body +
                      "\n  assign y = " + expr + ";\nendmodule\n");
  REQUIRE_FALSE(o.skipped);
  Module& m = scoped_module(o);
  const ContinuousAssign* ca = nullptr;
  for (const auto& item : m.items) {
    if (item->kind == NodeKind::kContinuousAssign) {
      ca = static_cast<const ContinuousAssign*>(item.get());
    }
  }
  REQUIRE(ca);
  return classify_label(*ca->rhs, m.scope);
}

}  // namespace

TEST_CASE("render_expr adds parens only when precedence requires them") {
  CHECK(roundtrip("a + b * c") == "a + b * c");
  CHECK(roundtrip("(a + b) * c") == "(a + b) * c");
  CHECK(roundtrip("a || b && c") == "a || b && c");
  CHECK(roundtrip("(a || b) && c") == "(a || b) && c");
  CHECK(roundtrip("!a") == "!a");
  CHECK(roundtrip("~(a | b)") == "~(a | b)");
  CHECK(roundtrip("a ? b : c") == "a ? b : c");
  CHECK(roundtrip("{a, b}") == "{a, b}");
  CHECK(roundtrip("mem[3]") == "mem[3]");
  CHECK(roundtrip("addr[7:3]") == "addr[7:3]");
  CHECK(roundtrip("8'hFF") == "8'hFF");
  CHECK(roundtrip("a == 2'd1") == "a == 2'd1");
}

TEST_CASE("classify_label normalizes constants to decimal text") {
  CHECK(classify_in("", "5").kind == LabelValue::Kind::kValue);
  CHECK(classify_in("", "5").text == "5");
  CHECK(classify_in("", "4'hA").text == "10");
  CHECK(classify_in("", "3'b101").text == "5");
  CHECK(classify_in("", "8'o17").text == "15");
}

TEST_CASE("classify_label treats parameters and unknown names as names") {
  auto param = classify_in("  localparam IDLE = 2'd0;", "IDLE");
  CHECK(param.kind == LabelValue::Kind::kName);
  CHECK(param.text == "IDLE");
  auto unresolved = classify_in("", "SOME_MACRO_NAME");
  CHECK(unresolved.kind == LabelValue::Kind::kName);
}

TEST_CASE("classify_label rejects variables and expressions") {
  CHECK(classify_in("  reg [1:0] st;", "st").kind ==
        LabelValue::Kind::kNotLabel);
  CHECK(classify_in("  wire w;", "w").kind == LabelValue::Kind::kNotLabel);
  CHECK(classify_in("", "1 + 2").kind == LabelValue::Kind::kNotLabel);
  CHECK(classify_in("", "mem[0]").kind == LabelValue::Kind::kNotLabel);
}

TEST_CASE("classify_label flags x and z digits as bad") {
  CHECK(classify_in("", "2'b1x").kind == LabelValue::Kind::kBad);
  CHECK(classify_in("", "2'bz0").kind == LabelValue::Kind::kBad);
  CHECK(classify_in("", "2'b0?").kind == LabelValue::Kind::kBad);
}

TEST_CASE("scope keeps the first duplicate and reports it") {
  auto o = parse_text(
      "module m;\n"
      "  reg [3:0] twice;\n"
      "  wire twice;\n"
      "endmodule\n");
  REQUIRE_FALSE(o.skipped);
  Module& m = *o.modules[0];
  DiagnosticList diags;
  m.scope = build_scope(m, &diags);
  REQUIRE(m.scope.lookup("twice"));
  CHECK(m.scope.lookup("twice")->storage == StorageKind::kRegister);
  bool mentioned = false;
  for (const auto& d : diags) {
    if (d.message.find("twice") != std::string::npos) mentioned = true;
  }
  CHECK(mentioned);
}

TEST_CASE("scope lookup misses return null") {
  auto o = parse_text("module m;\nendmodule\n");
  Module& m = scoped_module(o);
  CHECK(m.scope.lookup("ghost") == nullptr);
  CHECK(m.scope.size() == 0);
}

TEST_CASE("node_kind_name names every kind distinctly") {
  std::set<std::string> names;
  for (std::size_t i = 0; i < kNodeKindCount; ++i) {
    names.insert(node_kind_name(static_cast<NodeKind>(i)));
  }
  CHECK(names.size() == kNodeKindCount);
}
