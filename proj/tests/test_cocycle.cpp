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
#include "tateops/cocycle.hpp"
#include "tateops/lie.hpp"
#include "tateops/random.hpp"
#include "tateops/trace.hpp"

using namespace tateops;
using testing::code_of;
using testing::P;
using testing::T;

namespace {

const Field Q;

Scalar S(long v) { return Scalar(Q, v); }

std::vector<LaurentPoly> basis_vec(const LieAlgebraData& lie, const char* label, std::int64_t n) {
    std::vector<LaurentPoly> v(lie.dim(), LaurentPoly(lie.field()));
    v[lie.index_of(label)] = LaurentPoly::monomial(lie.field(), n);
    return v;
}

}  // namespace

TEST_CASE("sign constants") {
    // c(t^-1, t) by the corner-sum oracle; the residue of t^-1 dt is 1.
    Scalar v0 = oracle::corner_cocycle(Op::mul(T(-1)), Op::mul(T(1)));
    CHECK(v0 == S(-1));
    CHECK(tate_cocycle(Op::mul(T(-1)), Op::mul(T(1))) == v0);
    CHECK(residue_oracle(T(-1), T(1)) == S(1));
    CHECK(S(cocycle_residue_sign) * v0 == S(1));

    Scalar w0 = oracle::diagonal_sum(commutator(Op::proj_plus(Q, 0), Op::mul(T(-1))) * Op::mul(T(1)));
    CHECK(w0 == S(-1));
    CHECK(S(hochschild_residue_sign) * w0 == residue(T(-1), T(1)));
}

TEST_CASE("corner examples") {
    CHECK(corner(Op::identity(Q), Corner::pm).is_zero());
    CHECK(corner(Op::mul(T(-1)), Corner::mp) == Op::finite(Q, {{{-1, 0}, S(1)}}));
    for (std::uint64_t k = 0; k < 100; ++k) {
        SampleRng rng(41, k);
        Op a = random_op(rng, Q, OpClass::any, 1);
        CHECK(corner(a, Corner::pp) + corner(a, Corner::pm) + corner(a, Corner::mp) + corner(a, Corner::mm) == a);
        CHECK(is_trace_class(corner(a, Corner::pm)));
        CHECK(is_trace_class(corner(a, Corner::mp)));
    }
}

TEST_CASE("tate cocycle examples") {
    Op a = Op::mul(P("t^-2 + 3*t")) + Op::ind_to_pro_flip(Q);
    CHECK(tate_cocycle(a, a).is_zero());
    for (std::int64_t m = -12; m <= 12; ++m)
        for (std::int64_t n = -12; n <= 12; ++n) {
            Scalar c = tate_cocycle(Op::mul(T(m)), Op::mul(T(n)));
            CHECK(c == oracle::corner_cocycle(Op::mul(T(m)), Op::mul(T(n))));
            if (m + n != 0) CHECK(c.is_zero());
        }
    CHECK(code_of([] { (void)tate_cocycle(Op::identity(Q, 2), Op::identity(Q, 2)); }) == ErrorCode::level_mismatch);
}

TEST_CASE("tate cocycle matches the corner-sum oracle on generated operators") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        SampleRng rng(42, k);
        Op a = random_generated_op(rng, Q, 2);
        Op b = random_generated_op(rng, Q, 2);
        CHECK(tate_cocycle(a, b) == oracle::corner_cocycle(a, b));
        CHECK(tate_cocycle(a, b) == -tate_cocycle(b, a));
    }
}

TEST_CASE("Lie 2-cocycle identity") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        SampleRng rng(43, k);
        Op a = random_generated_op(rng, Q, 2);
        Op b = random_generated_op(rng, Q, 2);
        Op d = random_generated_op(rng, Q, 2);
        Scalar s = tate_cocycle(commutator(a, b), d) + tate_cocycle(commutator(b, d), a) + tate_cocycle(commutator(d, a), b);
        CHECK(s.is_zero());
    }
}

TEST_CASE("residue examples") {
    CHECK(residue(P("1"), P("t^3 - 2*t^-1")).is_zero());
    CHECK(residue(T(-1), T(1)) == S(1));
    CHECK(residue(T(-3), T(3)) == S(3));
    CHECK(residue_oracle(T(-1), T(1)) == S(1));
    CHECK(residue_oracle(T(2), T(5)).is_zero());
    // (t^-2 + t^-1) 2t = 2 t^-1 + 2
    auto f = P("t^-2") * P("1 + t");
    auto fg = f * derivative(T(2));
    CHECK(fg == P("2*t^-1 + 2"));
    CHECK(residue_oracle(f, T(2)) == S(2));
    CHECK(residue(f, T(2)) == S(2));
}

TEST_CASE("residue agrees with the oracle") {
    for (std::int64_t m = -12; m <= 12; ++m)
        for (std::int64_t n = -12; n <= 12; ++n) {
            CHECK(residue(T(m), T(n)) == residue_oracle(T(m), T(n)));
            CHECK(residue_oracle(T(m), T(n)) == (m + n == 0 ? S(static_cast<long>(n)) : S(0)));
        }
    for (std::uint64_t k = 0; k < 200; ++k) {
        SampleRng rng(44, k);
        auto f = random_laurent(rng, Q, -8, 8, 6);
        auto g = random_laurent(rng, Q, -8, 8, 6);
        CHECK(residue(f, g) == residue_oracle(f, g));
        CHECK((residue(f, g) + residue(g, f)).is_zero());
    }
}

TEST_CASE("residue over prime fields") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        Field f = Field::prime(p);
        for (std::int64_t m = -9; m <= 9; ++m)
            for (std::int64_t n = -9; n <= 9; ++n) {
                auto fm = LaurentPoly::monomial(f, m), gn = LaurentPoly::monomial(f, n);
                CHECK(residue(fm, gn) == residue_oracle(fm, gn));
                CHECK(residue(fm, gn) == (m + n == 0 ? Scalar(f, static_cast<long>(n)) : Scalar::zero(f)));
            }
    }
}

TEST_CASE("hochschild residue") {
    CHECK(hochschild_residue(Op::mul(T(-1)), Op::mul(T(1))) == S(1));
    CHECK(hochschild_residue(Op::identity(Q), Op::mul(P("t^-1 + t^3"))).is_zero());
    for (std::uint64_t k = 0; k < 50; ++k) {
        SampleRng rng(45, k);
        auto f = random_laurent(rng, Q, -6, 6);
        auto g = random_laurent(rng, Q, -6, 6);
        CHECK(hochschild_residue(Op::mul(f), Op::mul(g)) == residue(f, g));
        CHECK((hochschild_residue(Op::mul(f), Op::mul(g)) + hochschild_residue(Op::mul(g), Op::mul(f))).is_zero());
    }
}

TEST_CASE("Lie algebra data") {
    auto sl2 = LieAlgebraData::sl2(Q);
    CHECK(sl2.dim() == 3);
    auto e = sl2.basis_vector(0), h = sl2.basis_vector(1), f = sl2.basis_vector(2);
    CHECK(sl2.bracket(h, e) == std::vector<Scalar>{S(2), S(0), S(0)});
    CHECK(sl2.bracket(e, f) == h);
    CHECK(sl2.killing_form(e, f) == S(4));
    CHECK(sl2.killing_form(h, h) == S(8));
    CHECK(code_of([&] { (void)sl2.index_of("x"); }) == ErrorCode::invalid_label);

    using V = LieAlgebraData::Vector;
    // Antisymmetric but not Jacobi: [a, b] = c, [b, c] = c, [c, a] = b.
    std::vector<std::vector<V>> c(3, std::vector<V>(3, V(3, S(0))));
    c[0][1] = {S(0), S(0), S(1)};
    c[1][0] = {S(0), S(0), S(-1)};
    c[1][2] = {S(0), S(0), S(1)};
    c[2][1] = {S(0), S(0), S(-1)};
    c[2][0] = {S(0), S(1), S(0)};
    c[0][2] = {S(0), S(-1), S(0)};
    CHECK(code_of([&] { LieAlgebraData bad(Q, {"a", "b", "c"}, c); }) == ErrorCode::precondition);
    c[0][1][2] = S(2);
    CHECK(code_of([&] { LieAlgebraData bad(Q, {"a", "b", "c"}, c); }) == ErrorCode::precondition);
    CHECK(code_of([&] { LieAlgebraData bad(Q, {"a", "b"}, c); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("ad_block examples") {
    auto sl2 = LieAlgebraData::sl2(Q);
    auto img = ad_block("h", 0, sl2).apply(basis_vec(sl2, "e", 0));
    auto expect = basis_vec(sl2, "e", 0);
    expect[0] = expect[0].scaled(S(2));
    CHECK(img == expect);
    CHECK(ad_block("e", 1, sl2).apply(basis_vec(sl2, "f", -1)) == basis_vec(sl2, "h", 0));
    CHECK(code_of([&] { (void)ad_block("q", 0, sl2); }) == ErrorCode::invalid_label);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            for (std::int64_t m = -2; m <= 2; ++m)
                for (std::int64_t n = -2; n <= 2; ++n) {
                    auto bx = sl2.basis_vector(x), by = sl2.basis_vector(y);
                    BlockOp lhs = commutator(ad_block(bx, m, sl2), ad_block(by, n, sl2));
                    CHECK(lhs == ad_block(sl2.bracket(bx, by), m + n, sl2));
                }
}

TEST_CASE("block cocycle and the measured form K") {
    auto sl2 = LieAlgebraData::sl2(Q);
    // K(x, y) measured by the windowed corner sum at (m, n) = (1, -1).
    Scalar k[3][3];
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            k[x][y] = oracle::block_corner_cocycle(ad_block(sl2.basis_vector(x), 1, sl2), ad_block(sl2.basis_vector(y), -1, sl2));
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            CHECK(k[x][y] == k[y][x]);
            CHECK(k[x][y] == sl2.killing_form(sl2.basis_vector(x), sl2.basis_vector(y)));
        }
    CHECK(k[0][2] == S(4));
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            for (std::int64_t m = -6; m <= 6; ++m)
                for (std::int64_t n = -6; n <= 6; ++n) {
                    auto a = ad_block(sl2.basis_vector(x), m, sl2);
                    auto b = ad_block(sl2.basis_vector(y), n, sl2);
                    Scalar v = block_cocycle(a, b);
                    CHECK(v == (m + n == 0 ? k[x][y] * S(static_cast<long>(m)) : S(0)));
                    if (std::abs(m) <= 3 && std::abs(n) <= 3) CHECK(v == oracle::block_corner_cocycle(a, b));
                }
    auto a = ad_block("e", 2, sl2) + ad_block("f", -1, sl2);
    CHECK(block_cocycle(a, a).is_zero());
    for (std::int64_t n = -6; n <= 6; ++n) CHECK(block_cocycle(ad_block("h", 0, sl2), ad_block("e", n, sl2)).is_zero());
    CHECK(code_of([] { (void)block_cocycle(BlockOp(Q, 2), BlockOp(Q, 3)); }) == ErrorCode::dimension_mismatch);
}
