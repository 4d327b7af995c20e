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

// Prints the node shape of each module in a Verilog file; used to
// regenerate the golden files under tests/golden after intentional
// parser changes.

#include <cstdio>
#include <string>

#include "rtlscan/parser.h"
#include "test_util.h"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: shape_dump <file.v>\n");
    return 2;
  }
  std::string src = rtlscan::test::read_file(argv[1]);
  rtlscan::MacroTable macros;
  auto outcome = rtlscan::parse_verilog_source(src, argv[1], macros);
  if (outcome.skipped) {
    std::fprintf(stderr, "file skipped\n");
    return 1;
  }
  for (const auto& m : outcome.modules) {
    std::fputs(rtlscan::test::dump_shape(*m).c_str(), stdout);
  }
  return 0;
}
