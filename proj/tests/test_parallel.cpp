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

#include <doctest.h>

#include "tateops/grid.hpp"
#include "tateops/random.hpp"
#include "tateops/suites.hpp"

using namespace tateops;

TEST_CASE("residue grid: serial and parallel agree") {
    auto a = residue_grid(Field{}, 10, Exec::serial);
    auto b = residue_grid(Field{}, 10, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].m == b[k].m);
        CHECK(a[k].n == b[k].n);
        CHECK(a[k].value == b[k].value);
    }
}

TEST_CASE("Kac-Moody grid: serial and parallel agree") {
    auto lie = LieAlgebraData::sl2();
    auto a = kacmoody_grid(lie, 4, Exec::serial);
    auto b = kacmoody_grid(lie, 4, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].x == b[k].x);
        CHECK(a[k].m == b[k].m);
        CHECK(a[k].value == b[k].value);
    }
}

TEST_CASE("induced matrix: serial and parallel agree") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        SampleRng rng(71, k);
        Op a = random_op(rng, Field{}, OpClass::any, k % 2 ? 1 : 2);
        auto s = induced_matrix(a, -9, 9, -7, 8, Exec::serial);
        auto p = induced_matrix(a, -9, 9, -7, 8, Exec::parallel);
        CHECK(s.data == p.data);
    }
}

TEST_CASE("sample runner reports the same failures") {
    auto check = [](std::size_t k) {
        if (k == 13) throw Error(ErrorCode::internal, "boom");
        return k % 7 != 3;
    };
    auto s = run_samples(50, check, Exec::serial);
    auto p = run_samples(50, check, Exec::parallel);
    CHECK(s == p);
    CHECK(s == std::vector<std::size_t>{3, 10, 13, 17, 24, 31, 38, 45});
}

TEST_CASE("criteria results are independent of the executor") {
    SuiteOptions serial{.seed = 5, .quick = true, .exec = Exec::serial};
    SuiteOptions parallel{.seed = 5, .quick = true, .exec = Exec::parallel};
    auto a = criterion_strong_vanishing(serial);
    auto b = criterion_strong_vanishing(parallel);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.detail == b.detail);
}
