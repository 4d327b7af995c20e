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

#include <string>
#include <vector>

#include "doctest.h"
#include "rtlscan/scanners/scanners.h"
#include "test_util.h"

using namespace rtlscan;
using test::parse_text;
using test::scoped_module;

namespace {

std::vector<Finding> run_1271(const std::string& src) {
  auto o = parse_text(src);
  REQUIRE_FALSE(o.skipped);
  Module& m = scoped_module(o);
  std::vector<Finding> findings;
  DiagnosticList diags;
  scan_cwe1271(m, Rulebook::defaults(), &findings, &diags);
  return findings;
}

}  // namespace

TEST_CASE("a security register with no reset-time write is flagged") {
  auto fs = run_1271(
      "module m (input wire clk, rst_n, d);\n"
      "  reg lock_state;\n"
      "  always @(posedge clk) lock_state <= d;\n"
      "endmodule\n");
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].cwe == 1271);
  CHECK(fs[0].kind == "missing-reset");
  CHECK(fs[0].loc.line == 2);
  CHECK(fs[0].signals == std::vector<std::string>{"lock_state"});
  CHECK(fs[0].message ==
        "security register 'lock_state' is never initialized under a reset "
        "condition");
}

TEST_CASE("a write in a reset branch clears the candidate") {
  auto fs = run_1271(
      "module m (input wire clk, rst_n, d);\n"
      "  reg lock_state;\n"
      "  always @(posedge clk) begin\n"
      "    if (!rst_n) lock_state <= 1'b0;\n"
      "    else lock_state <= d;\n"
      "  end\n"
      "endmodule\n");
  CHECK(fs.empty());
}

TEST_CASE("writes in the else arm of a reset conditional do not count") {
  auto fs = run_1271(
      "module m (input wire clk, rst_n, d);\n"
      "  reg prot_en;\n"
      "  always @(posedge clk) begin\n"
      "    if (!rst_n) ;\n"
      "    else prot_en <= d;\n"
      "  end\n"
      "endmodule\n");
  CHECK(fs.size() == 1);
}

TEST_CASE("a declaration initializer counts as initialization") {
  auto fs = run_1271(
      "module m (input wire clk, d);\n"
      "  reg lock_state = 1'b0;\n"
      "  always @(posedge clk) lock_state <= d;\n"
      "endmodule\n");
  CHECK(fs.empty());
}

TEST_CASE("nets and ports are not reset candidates") {
  auto fs = run_1271(
      "module m (input wire clk, input wire lock_in, output wire prot_out);\n"
      "  wire lock_net;\n"
      "  assign lock_net = lock_in;\n"
      "  assign prot_out = lock_net;\n"
      "endmodule\n");
  CHECK(fs.empty());
}

TEST_CASE("an indexed reset write initializes the array base") {
  auto fs = run_1271(
      "module m (input wire clk, rst, d);\n"
      "  reg [1:0] lock_mem [0:3];\n"
      "  always @(posedge clk) begin\n"
      "    if (rst) lock_mem[0] <= 2'd0;\n"
      "    else lock_mem[1] <= {d, d};\n"
      "  end\n"
      "endmodule\n");
  CHECK(fs.empty());
}

TEST_CASE("only reset-matched conditions open a reset region") {
  auto fs = run_1271(
      "module m (input wire clk, soft_clear, d);\n"
      "  reg lock_state;\n"
      "  always @(posedge clk) begin\n"
      "    if (soft_clear) lock_state <= 1'b0;\n"
      "    else lock_state <= d;\n"
      "  end\n"
      "endmodule\n");
  CHECK(fs.size() == 1);
}

TEST_CASE("reset coverage reaches through nested statements") {
  auto fs = run_1271(
      "module m (input wire clk, rst_n, sel, d);\n"
      "  reg lock_state;\n"
      "  always @(posedge clk) begin\n"
      "    if (!rst_n) begin\n"
      "      if (sel) lock_state <= 1'b0;\n"
      "      else lock_state <= 1'b1;\n"
      "    end\n"
      "  end\n"
      "endmodule\n");
  CHECK(fs.empty());
}

TEST_CASE("each uninitialized security register reports separately") {
  auto fs = run_1271(
      "module m (input wire clk, rst_n, d);\n"
      "  reg lock_a;\n"
      "  reg prot_b;\n"
      "  reg plain_q;\n"
      "  always @(posedge clk) begin\n"
      "    if (!rst_n) lock_a <= 1'b0;\n"
      "    else begin\n"
      "      lock_a <= d;\n"
      "      prot_b <= d;\n"
      "      plain_q <= d;\n"
      "    end\n"
      "  end\n"
      "endmodule\n");
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].signals == std::vector<std::string>{"prot_b"});
  CHECK(fs[0].keywords == std::vector<std::string>{"prot"});
}

TEST_CASE("the clock exclusion removes clock-named registers") {
  auto fs = run_1271(
      "module m (input wire clk, d);\n"
      "  reg clock_sel;\n"
      "  always @(posedge clk) clock_sel <= d;\n"
      "endmodule\n");
  CHECK(fs.empty());
}
