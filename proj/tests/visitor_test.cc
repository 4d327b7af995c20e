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

#include "rtlscan/visitor.h"

#include <string>
#include <vector>

#include "doctest.h"
#include "rtlscan/parser.h"
#include "test_util.h"

using namespace rtlscan;
using test::parse_text;

namespace {

// module, 2 data decls, always, event control, seq block, blocking
// assign, lhs id, binary, rhs id, const = 11 nodes.
const char* kSumSource =
    "module sum (input wire a, output reg s);\n"
    "  always @* begin\n"
    "    s = a + 1;\n"
    "  end\n"
    "endmodule\n";

class IdCollector : public Visitor {
 public:
  IdCollector() { mark_relevant(NodeKind::kIdRef); }
  std::vector<std::string> names;

 protected:
  bool on_id_ref(const IdRef& n) override {
    names.push_back(n.name);
    return false;
  }
};

class AssignFunnel : public Visitor {
 public:
  int blocking = 0;
  int nonblocking = 0;

 protected:
  bool on_any_assign(const SourceLoc&, const Expr&, const Expr&,
                     bool is_blocking) override {
    ++(is_blocking ? blocking : nonblocking);
    note_gated();
    return false;
  }
};

class ConditionalPruner : public Visitor {
 public:
  int ids_seen = 0;

 protected:
  bool on_conditional(const Conditional&) override { return true; }
  bool on_id_ref(const IdRef&) override {
    ++ids_seen;
    return false;
  }
};

}  // namespace

TEST_CASE("count_nodes covers every node exactly once") {
  auto o = parse_text(kSumSource);
  REQUIRE(o.modules.size() == 1);
  CHECK(count_nodes(*o.modules[0]) == 11);
}

TEST_CASE("relevant_visited counts only marked kinds") {
  auto o = parse_text(kSumSource);
  IdCollector v;
  accept(*o.modules[0], v);
  CHECK(v.names == std::vector<std::string>{"s", "a"});
  CHECK(v.nodes_visited() == 11);
  CHECK(v.relevant_visited() == 2);
  CHECK(v.keyword_gated() == 0);
}

TEST_CASE("assign handlers funnel into on_any_assign") {
  auto o = parse_text(
      "module m (input wire d, output reg q);\n"
      "  always @* begin\n"
      "    q = d;\n"
      "    q <= d;\n"
      "  end\n"
      "endmodule\n");
  AssignFunnel v;
  accept(*o.modules[0], v);
  CHECK(v.blocking == 1);
  CHECK(v.nonblocking == 1);
  CHECK(v.keyword_gated() == 2);
}

TEST_CASE("a handler returning true suppresses default descent") {
  auto o = parse_text(
      "module m (input wire c, d, output reg q);\n"
      "  always @* begin\n"
      "    if (c) q = d;\n"
      "  end\n"
      "endmodule\n");
  ConditionalPruner v;
  accept(*o.modules[0], v);
  CHECK(v.ids_seen == 0);

  IdCollector all;
  accept(*o.modules[0], all);
  CHECK(all.names == std::vector<std::string>{"c", "q", "d"});
}
