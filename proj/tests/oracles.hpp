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

// Brute-force reference computations for the tests. They see operators only through entry(i, j)
// and polynomials only through coeff(n), and sum over explicit windows chosen wide enough for the
// small supports the tests build.

#ifndef TATEOPS_TESTS_ORACLES_HPP
#define TATEOPS_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "tateops/lie.hpp"
#include "tateops/op.hpp"

namespace oracle {

using namespace tateops;

inline constexpr std::int64_t wide = 48;

/// sum_k a(i, k) b(k, j) over |k| <= w.
inline Entry compose_entry(const Op& a, const Op& b, std::int64_t i, std::int64_t j, std::int64_t w = wide) {
    Entry acc = a.zero_entry();
    for (std::int64_t k = -w; k <= w; ++k) {
        Entry x = a.entry(i, k);
        if (x.is_zero()) continue;
        Entry y = b.entry(k, j);
        if (!y.is_zero()) acc += x * y;
    }
    return acc;
}

/// Entries of a and b agree on [-half, half]^2.
inline bool same_window(const Op& a, const Op& b, std::int64_t half = 16) {
    for (std::int64_t i = -half; i <= half; ++i)
        for (std::int64_t j = -half; j <= half; ++j)
            if (!(a.entry(i, j) == b.entry(i, j))) return false;
    return true;
}

/// (a v)_i = sum_j a(i, j) v_j, rows over |i| <= w.
inline LaurentPoly apply(const Op& a, const LaurentPoly& v, std::int64_t w = wide) {
    LaurentPoly out(a.field());
    for (std::int64_t i = -w; i <= w; ++i)
        for (auto& [j, c] : v.terms()) {
            Entry e = a.entry(i, j);
            if (!e.is_zero()) out.add_term(i, e.scalar() * c);
        }
    return out;
}

/// sum_{|i| <= w} a(i, i), recursively at higher levels.
inline Scalar diagonal_sum(const Op& a, std::int64_t w = wide) {
    Scalar acc = Scalar::zero(a.field());
    for (std::int64_t i = -w; i <= w; ++i) {
        Entry e = a.entry(i, i);
        acc += e.is_scalar() ? e.scalar() : diagonal_sum(e.op(), w);
    }
    return acc;
}

/// sum over i >= 0 > j of a(i, j) b(j, i) - b(i, j) a(j, i), indices in [-w, w).
inline Scalar corner_cocycle(const Op& a, const Op& b, std::int64_t w = wide) {
    Scalar acc = Scalar::zero(a.field());
    for (std::int64_t i = 0; i < w; ++i)
        for (std::int64_t j = -w; j < 0; ++j) {
            Entry aij = a.entry(i, j), bji = b.entry(j, i);
            if (!aij.is_zero() && !bji.is_zero()) acc += aij.scalar() * bji.scalar();
            Entry bij = b.entry(i, j), aji = a.entry(j, i);
            if (!bij.is_zero() && !aji.is_zero()) acc -= bij.scalar() * aji.scalar();
        }
    return acc;
}

/// The same corner sum for block operators, with the block trace.
inline Scalar block_corner_cocycle(const BlockOp& a, const BlockOp& b, std::int64_t w = 16) {
    Scalar acc = Scalar::zero(a.field());
    const std::size_t r = a.dim();
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l)
            for (std::int64_t i = 0; i < w; ++i)
                for (std::int64_t j = -w; j < 0; ++j) {
                    Entry aij = a.block(k, l).entry(i, j), bji = b.block(l, k).entry(j, i);
                    if (!aij.is_zero() && !bji.is_zero()) acc += aij.scalar() * bji.scalar();
                    Entry bij = b.block(k, l).entry(i, j), aji = a.block(l, k).entry(j, i);
                    if (!bij.is_zero() && !aji.is_zero()) acc -= bij.scalar() * aji.scalar();
                }
    return acc;
}

/// coeff_n(f g) by convolution over the supports.
inline Scalar product_coeff(const LaurentPoly& f, const LaurentPoly& g, std::int64_t n) {
    Scalar acc = Scalar::zero(f.field());
    for (std::int64_t k = -64; k <= 64; ++k) acc += f.coeff(k) * g.coeff(n - k);
    return acc;
}

}  // namespace oracle

#endif
