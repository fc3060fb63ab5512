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
#include "oracles.hpp"
#include "tateops/random.hpp"
#include "tateops/trace.hpp"

using namespace tateops;
using testing::code_of;
using testing::T;

namespace {

const Field Q;
const Scalar zero = Scalar::zero(Q);

Scalar S(long v) { return Scalar(Q, v); }

// AntiDiagonal(0) carrying 1 at every column j <= 0.
Op anti_witness() { return Op::line(Q, 1, LineKey::antidiagonal(0), EvSeq::step(1, S(1), zero)); }

// sum of a(i, i) for lo <= i < hi.
Scalar diag_range(const Op& a, std::int64_t lo, std::int64_t hi) {
    Scalar acc = zero;
    for (std::int64_t i = lo; i < hi; ++i) acc += a.entry(i, i).scalar();
    return acc;
}

}  // namespace

TEST_CASE("trace examples") {
    CHECK(trace(Op::zero(Q)).is_zero());
    CHECK(trace(Op::finite(Q, {{{0, 0}, S(1)}})) == S(1));
    CHECK(oracle::diagonal_sum(anti_witness(), 12) == S(1));
    CHECK(trace(anti_witness()) == S(1));
    CHECK(trace(Op::ind_to_pro_flip(Q)).is_zero());
}

TEST_CASE("trace oracle examples") {
    CHECK(trace_oracle(Op::zero(Q), 1).is_zero());
    CHECK(trace_oracle(Op::finite(Q, {{{0, 0}, S(1)}}), 0) == S(1));
    CHECK(trace_oracle(anti_witness(), oracle_half_width(anti_witness())) == S(1));

    Op h = commutator(Op::proj_plus(Q, 0), Op::mul(T(-1))) * Op::mul(T(1));
    CHECK(oracle::diagonal_sum(h) == S(-1));
    CHECK(trace_oracle(h, 4) == S(-1));
    CHECK(trace(h) == S(-1));
}

TEST_CASE("trace errors") {
    CHECK(code_of([] { (void)trace(Op::identity(Q)); }) == ErrorCode::not_trace_class);
    CHECK(code_of([] { (void)trace(Op::proj_plus(Q, 0)); }) == ErrorCode::not_trace_class);
    CHECK(code_of([] { (void)trace_oracle(Op::finite(Q, {{{3, 3}, S(1)}}), 2); }) == ErrorCode::insufficient_window);
    Op a = Op::finite(Q, {{{0, 0}, S(1)}, {{2, -1}, S(1)}});
    CHECK(code_of([&] { (void)trace_with_lattices(a, {1}, {4}); }) == ErrorCode::precondition);
    CHECK(code_of([&] { (void)trace_with_lattices(a, {-1}, {0}); }) == ErrorCode::precondition);
    CHECK(code_of([&] { (void)trace_with_lattices(a, {3}, {1}); }) == ErrorCode::precondition);
}

TEST_CASE("trace certificate") {
    Op a = Op::finite(Q, {{{2, -3}, S(5)}, {{-1, -1}, S(2)}}) + anti_witness();
    auto r = trace_with_certificate(a);
    CHECK(r.certificate.image.m <= r.certificate.killed.m);
    auto m = ideal_membership(a);
    REQUIRE(m.kill_column);
    CHECK(r.certificate.killed.m == *m.kill_column);
    CHECK(r.certificate.image.m <= *m.bounding_row);
    CHECK(r.certificate.window.rows == static_cast<std::size_t>(r.certificate.killed.m - r.certificate.image.m));
    CHECK(r.value == oracle::diagonal_sum(a));
}

TEST_CASE("restrict and quotient examples") {
    Op a = Op::finite(Q, {{{0, 0}, S(1)}, {{-1, -1}, S(2)}});
    auto rq = restrict_and_quotient(a, 0);
    CHECK(rq.sub_ok);
    CHECK(trace(rq.restricted) == S(1));
    CHECK(trace(rq.quotient) == S(2));
    CHECK(trace(a) == S(3));
    REQUIRE(rq.quotient_window);
    CHECK(matrix_trace(*rq.quotient_window) == S(2));

    Op b = Op::proj_plus(Q, 0) * Op::finite(Q, {{{-1, -1}, S(1)}, {{0, 0}, S(2)}, {{1, -1}, S(3)}, {{1, 1}, S(5)}, {{2, 0}, S(-4)}});
    auto rb = restrict_and_quotient(b, 1);
    CHECK(rb.sub_ok);
    CHECK(trace(rb.restricted) == diag_range(b, 1, 8));
    CHECK(trace(rb.quotient) == diag_range(b, -8, 1));
    CHECK(trace(b) == trace(rb.restricted) + trace(rb.quotient));

    CHECK(!restrict_and_quotient(Op::mul(T(-1)), 0).sub_ok);
    CHECK(restrict_and_quotient(Op::mul(T(1)), 0).sub_ok);
}

TEST_CASE("anti-diagonal lines meet the diagonal at most once") {
    for (std::int64_t c = -7; c <= 7; ++c) {
        Op a = Op::line(Q, 1, LineKey::antidiagonal(c), EvSeq::step(4, S(1), zero));
        int hits = 0;
        for (std::int64_t i = -oracle::wide; i <= oracle::wide; ++i) hits += !a.entry(i, i).is_zero();
        CHECK(hits == (c % 2 == 0 && c / 2 < 4 ? 1 : 0));
    }
}

TEST_CASE("trace agrees with both oracles and is independent of the lattices") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        SampleRng rng(31, k);
        Op a = random_op(rng, Q, OpClass::trace_class, 1);
        auto base = trace_with_certificate(a);
        CHECK(base.value == trace_oracle(a, oracle_half_width(a)));
        CHECK(base.value == oracle::diagonal_sum(a));
        for (int e = 0; e < 5; ++e) {
            StandardLattice n{base.certificate.image.m - rng.uniform(0, 9)};
            StandardLattice np{base.certificate.killed.m + rng.uniform(0, 9)};
            CHECK(trace_with_lattices(a, n, np).value == base.value);
        }
    }
}

TEST_CASE("trace is linear and vanishes on commutators") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        SampleRng rng(32, k);
        Op a = random_op(rng, Q, OpClass::trace_class, 1);
        Op b = random_op(rng, Q, OpClass::trace_class, 1);
        Op x = random_op(rng, Q, OpClass::any, 1);
        Scalar c = random_scalar(rng, Q);
        CHECK(trace(a + b.scaled(c)) == trace(a) + c * trace(b));
        CHECK(trace(a * b - b * a).is_zero());
        Op comm = a * x - x * a;
        REQUIRE(is_trace_class(comm));
        CHECK(trace(comm).is_zero());
    }
}

TEST_CASE("additivity along invariant lattices") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        SampleRng rng(33, k);
        const std::int64_t m = rng.uniform(-3, 3);
        Op raw = random_op(rng, Q, OpClass::trace_class, 1);
        Op a = raw - Op::proj_minus(Q, m) * raw * Op::proj_plus(Q, m);
        auto rq = restrict_and_quotient(a, m);
        REQUIRE(rq.sub_ok);
        CHECK(oracle::diagonal_sum(a) == oracle::diagonal_sum(rq.restricted) + oracle::diagonal_sum(rq.quotient));
        CHECK(trace(a) == trace(rq.restricted) + trace(rq.quotient));
    }
}
