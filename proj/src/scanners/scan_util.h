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

// Expression-tree helpers shared by the scanners. Internal to src/.

#ifndef RTLSCAN_SCANNERS_SCAN_UTIL_H_
#define RTLSCAN_SCANNERS_SCAN_UTIL_H_

#include <functional>

#include "rtlscan/ast.h"

namespace rtlscan {

// Calls fn for every identifier referenced in an expression tree, in
// left-to-right syntactic order. Indexed references report their base
// name; identifiers inside index text or opaque constants are not seen.
inline void for_each_id(const Expr& e,
                        const std::function<void(const Expr&,
                                                 const std::string&)>& fn) {
  switch (e.kind) {
    case NodeKind::kIdRef:
      fn(e, static_cast<const IdRef&>(e).name);
      return;
    case NodeKind::kIndexedRef:
      fn(e, static_cast<const IndexedRef&>(e).base);
      return;
    case NodeKind::kUnary:
      for_each_id(*static_cast<const Unary&>(e).operand, fn);
      return;
    case NodeKind::kBinary: {
      const auto& b = static_cast<const Binary&>(e);
      for_each_id(*b.lhs, fn);
      for_each_id(*b.rhs, fn);
      return;
    }
    case NodeKind::kTernary: {
      const auto& t = static_cast<const Ternary&>(e);
      for_each_id(*t.cond, fn);
      for_each_id(*t.then_e, fn);
      for_each_id(*t.else_e, fn);
      return;
    }
    case NodeKind::kConcat: {
      for (const auto& part : static_cast<const Concat&>(e).parts) {
        for_each_id(*part, fn);
      }
      return;
    }
    default:
      return;
  }
}

// The expression as a plain identifier reference, or nullptr.
inline const IdRef* as_plain_id(const Expr& e) {
  return e.kind == NodeKind::kIdRef ? static_cast<const IdRef*>(&e) : nullptr;
}

}  // namespace rtlscan

#endif  // RTLSCAN_SCANNERS_SCAN_UTIL_H_
