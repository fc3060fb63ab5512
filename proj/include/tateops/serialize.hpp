/*
   Copyright 2026 The tateops Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TATEOPS_SERIALIZE_HPP
#define TATEOPS_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "tateops/op.hpp"

namespace tateops {

using Json = nlohmann::ordered_json;

// Operator documents:
//
//   {"level": 1, "field": "Q" | {"prime": p},
//    "lines": [{"orientation": "diagonal" | "antidiagonal", "offset": d,
//               "left_limit": E, "right_limit": E, "window_start": j, "window": [E, ...]}, ...],
//    "correction": [{"row": i, "col": j, "value": E}, ...]}
//
// E is a scalar at level 1 ("a/b", an integer, or {"mod": p, "val": v}) and a nested operator
// document at higher levels. Windows must be minimal; anything else is a parse-error.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field f);

Json op_to_json(const Op& a);
Op op_from_json(const Json& j);

/// Compact single-line document; parse_op(dump_op(a)) == a and dump_op(parse_op(s)) == s for s = dump_op(a).
std::string dump_op(const Op& a, int indent = -1);
Op parse_op(std::string_view text);
Op load_op_file(const std::string& path);

}  // namespace tateops

#endif
