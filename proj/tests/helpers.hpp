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

#ifndef TATEOPS_TESTS_HELPERS_HPP
#define TATEOPS_TESTS_HELPERS_HPP

#include "tateops/error.hpp"
#include "tateops/laurent.hpp"

namespace testing {

/// Code of the tateops::Error thrown by fn; internal when nothing is thrown.
template <class F>
tateops::ErrorCode code_of(F&& fn) {
    try {
        fn();
    } catch (const tateops::Error& e) {
        return e.code();
    }
    return tateops::ErrorCode::internal;
}

inline tateops::LaurentPoly P(const char* s, tateops::Field f = tateops::Field{}) {
    return tateops::LaurentPoly::parse(s, f);
}

inline tateops::LaurentPoly T(std::int64_t n, tateops::Field f = tateops::Field{}) {
    return tateops::LaurentPoly::monomial(f, n);
}

}  // namespace testing

#endif
