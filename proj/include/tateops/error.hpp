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

#ifndef TATEOPS_ERROR_HPP
#define TATEOPS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tateops {

enum class ErrorCode {
    field_mismatch,
    division_by_zero,
    malformed,
    level_mismatch,
    not_trace_class,
    insufficient_window,
    invalid_label,
    dimension_mismatch,
    index_out_of_range,
    parse_error,
    precondition,
    internal,
};

constexpr std::string_view error_code_name(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::field_mismatch: return "field-mismatch";
        case ErrorCode::division_by_zero: return "division-by-zero";
        case ErrorCode::malformed: return "malformed";
        case ErrorCode::level_mismatch: return "level-mismatch";
        case ErrorCode::not_trace_class: return "not-trace-class";
        case ErrorCode::insufficient_window: return "insufficient-window";
        case ErrorCode::invalid_label: return "invalid-label";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::index_out_of_range: return "index-out-of-range";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

/// All library failures are reported through this type; code() is stable and machine-readable.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tateops

#endif
