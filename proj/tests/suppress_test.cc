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

#include "rtlscan/suppress.h"

#include <string>
#include <vector>

#include "doctest.h"

using namespace rtlscan;

namespace {

Finding with_fp(const std::string& fp) {
  Finding f;
  f.cwe = 1234;
  f.kind = "debug-override";
  f.fingerprint = fp;
  return f;
}

}  // namespace

TEST_CASE("suppression files accept fingerprints, comments and blanks") {
  SuppressionList list;
  std::string error;
  bool ok = parse_suppressions(
      "# header comment\n"
      "\n"
      "0123456789abcdef\n"
      "453dcb3f66ebeeaa  # reviewed, reset comes from the bus bridge\n"
      "  fad70d88e41b2d54\n",
      &list, &error);
  REQUIRE(ok);
  CHECK(error.empty());
  CHECK(list.fingerprints == std::vector<std::string>{
                                 "0123456789abcdef", "453dcb3f66ebeeaa",
                                 "fad70d88e41b2d54"});
}

TEST_CASE("malformed suppression lines name their line number") {
  SuppressionList list;
  std::string error;

  CHECK_FALSE(parse_suppressions("0123\n", &list, &error));
  CHECK(error.find("line 1") != std::string::npos);

  error.clear();
  CHECK_FALSE(parse_suppressions(
      "0123456789abcdef\nnot-a-fingerprint\n", &list, &error));
  CHECK(error.find("line 2") != std::string::npos);

  error.clear();
  CHECK_FALSE(parse_suppressions("0123456789ABCDEF\n", &list, &error));

  error.clear();
  CHECK_FALSE(parse_suppressions("0123456789abcdef extra\n", &list, &error));
}

TEST_CASE("apply removes matching findings and counts them") {
  std::vector<Finding> findings = {with_fp("aaaaaaaaaaaaaaaa"),
                                   with_fp("bbbbbbbbbbbbbbbb"),
                                   with_fp("aaaaaaaaaaaaaaaa")};
  SuppressionList list;
  list.fingerprints = {"aaaaaaaaaaaaaaaa"};
  std::vector<std::string> stale;
  std::uint64_t removed = apply_suppressions(list, &findings, &stale);
  CHECK(removed == 2);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].fingerprint == "bbbbbbbbbbbbbbbb");
  CHECK(stale.empty());
}

TEST_CASE("stale entries keep file order and deduplicate") {
  std::vector<Finding> findings = {with_fp("cccccccccccccccc")};
  SuppressionList list;
  list.fingerprints = {"ffffffffffffffff", "cccccccccccccccc",
                       "eeeeeeeeeeeeeeee", "ffffffffffffffff"};
  std::vector<std::string> stale;
  std::uint64_t removed = apply_suppressions(list, &findings, &stale);
  CHECK(removed == 1);
  CHECK(findings.empty());
  CHECK(stale == std::vector<std::string>{"ffffffffffffffff",
                                          "eeeeeeeeeeeeeeee"});
}

TEST_CASE("an empty list suppresses nothing") {
  std::vector<Finding> findings = {with_fp("aaaaaaaaaaaaaaaa")};
  SuppressionList list;
  std::vector<std::string> stale;
  CHECK(apply_suppressions(list, &findings, &stale) == 0);
  CHECK(findings.size() == 1);
}
