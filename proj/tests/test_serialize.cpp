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

#include "helpers.hpp"
#include "tateops/random.hpp"
#include "tateops/serialize.hpp"

using namespace tateops;
using testing::code_of;

namespace {

const Field Q;

}  // namespace

TEST_CASE("scalar documents") {
    CHECK(scalar_to_json(Scalar::rational(-3, 4)) == "-3/4");
    CHECK(scalar_to_json(Scalar(Q, 7)) == "7");
    Field f5 = Field::prime(5);
    CHECK(scalar_to_json(Scalar(f5, 3)) == Json{{"mod", 5}, {"val", 3}});
    CHECK(scalar_from_json(Json(-2), Q) == Scalar(Q, -2));
    CHECK(scalar_from_json(Json::parse(R"({"mod": 5, "val": 4})"), f5) == Scalar(f5, 4));
    CHECK(code_of([&] { (void)scalar_from_json(Json::parse(R"({"mod": 7, "val": 4})"), f5); }) == ErrorCode::parse_error);
    CHECK(code_of([&] { (void)scalar_from_json(Json::parse(R"({"mod": 5, "val": 5})"), f5); }) == ErrorCode::parse_error);
    CHECK(code_of([] { (void)scalar_from_json("1/0", Q); }) == ErrorCode::parse_error);
    CHECK(code_of([] { (void)scalar_from_json(Json(1.5), Q); }) == ErrorCode::parse_error);
}

TEST_CASE("operator document layout") {
    Json j = op_to_json(Op::proj_plus(Q, 0));
    CHECK(j["level"] == 1);
    CHECK(j["field"] == "Q");
    REQUIRE(j["lines"].size() == 1);
    auto& l = j["lines"][0];
    CHECK(l["orientation"] == "diagonal");
    CHECK(l["offset"] == 0);
    CHECK(l["left_limit"] == "0");
    CHECK(l["right_limit"] == "1");
    CHECK(l["window_start"] == 0);
    CHECK(l["window"].empty());
    CHECK(j["correction"].empty());
    CHECK(parse_op(R"({"level": 1, "lines": [], "correction": [{"row": 0, "col": 0, "value": "1"}]})") ==
          Op::finite(Q, {{{0, 0}, Scalar(Q, 1)}}));
}

TEST_CASE("malformed documents") {
    const char* bad[] = {
        "not json",
        R"({"lines": [], "correction": []})",
        R"({"level": 0, "lines": [], "correction": []})",
        R"({"level": 1, "lines": {}, "correction": []})",
        R"({"level": 1, "lines": [], "correction": [], "extra": 1})",
        R"({"level": 1, "field": "R", "lines": [], "correction": []})",
        R"({"level": 1, "field": {"prime": 4}, "lines": [], "correction": []})",
        R"({"level": 1, "lines": [{"orientation": "up", "offset": 0, "left_limit": "0", "right_limit": "1", "window_start": 0, "window": []}], "correction": []})",
        R"({"level": 1, "lines": [{"orientation": "diagonal", "offset": 0, "left_limit": "0", "right_limit": "1", "window_start": 0, "window": ["1"]}], "correction": []})",
        R"({"level": 1, "lines": [{"orientation": "antidiagonal", "offset": 0, "left_limit": "0", "right_limit": "1", "window_start": 0, "window": []}], "correction": []})",
        R"({"level": 2, "lines": [], "correction": [{"row": 0, "col": 0, "value": "1"}]})",
        R"({"level": 1, "lines": [], "correction": [{"row": 0.5, "col": 0, "value": "1"}]})",
    };
    for (auto text : bad) CHECK_MESSAGE(code_of([&] { (void)parse_op(text); }) == ErrorCode::parse_error, text);
}

TEST_CASE("round trip is bit-exact") {
    std::vector<Op> ops = {Op::zero(Q), Op::identity(Q), Op::ind_to_pro_flip(Q), Op::zero(Field::prime(3)),
                           Op::identity(Field::prime(5), 2), Op::proj_plus(Q, -2, 3)};
    for (Field f : {Q, Field::prime(2), Field::prime(11)})
        for (int level : {1, 2})
            for (OpClass cls : {OpClass::any, OpClass::bounded, OpClass::discrete, OpClass::trace_class})
                for (std::uint64_t k = 0; k < 25; ++k) {
                    SampleRng rng(61, k);
                    ops.push_back(random_op(rng, f, cls, level));
                }
    for (auto& a : ops) {
        std::string text = dump_op(a);
        Op b = parse_op(text);
        CHECK(b == a);
        CHECK(dump_op(b) == text);
        CHECK(dump_op(parse_op(dump_op(a, 2))) == text);
    }
}
