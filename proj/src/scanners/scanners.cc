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

#include "rtlscan/scanners/scanners.h"

namespace rtlscan {

namespace {
constexpr ScannerInfo kScanners[] = {
    {1234, "debug-override", &scan_cwe1234},
    {1245, "fsm-liveness", &scan_cwe1245},
    {1262, "register-write-protection", &scan_cwe1262},
    {1271, "missing-reset", &scan_cwe1271},
    {1280, "read-before-write", &scan_cwe1280},
};
}  // namespace

std::span<const ScannerInfo> all_scanners() { return kScanners; }

}  // namespace rtlscan
