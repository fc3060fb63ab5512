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

#include "tateops/random.hpp"

namespace tateops {

namespace {

Entry random_entry(SampleRng& rng, Field f, int level, OpClass cls, bool nonzero);

Op random_op_shaped(SampleRng& rng, Field f, OpClass cls, int level, int max_lines, int max_window, int max_corr) {
    const bool inner_trace = cls == OpClass::trace_class;
    const OpClass inner = inner_trace ? OpClass::trace_class : OpClass::any;
    // Tighter supports above level 1 keep products of several samples from vanishing outright.
    const std::int64_t spread = level == 1 ? 4 : 2;
    std::vector<std::pair<LineKey, EvSeq>> lines;
    const int nlines = static_cast<int>(rng.uniform(0, max_lines));
    for (int k = 0; k < nlines; ++k) {
        // Trace-class operators carry no diagonal lines.
        const bool anti = cls == OpClass::trace_class || rng.chance(0.4);
        LineKey key = anti ? LineKey::antidiagonal(rng.uniform(-spread, spread)) : LineKey::diagonal(rng.uniform(-3, 3));
        bool left_ok = true;
        bool right_ok = !anti;
        if (!anti && cls == OpClass::bounded) left_ok = false;
        if (cls == OpClass::discrete) right_ok = false;
        Entry zero = Entry::zero(f, level - 1);
        Entry left = left_ok ? random_entry(rng, f, level - 1, inner, rng.chance(0.8)) : zero;
        Entry right = right_ok ? random_entry(rng, f, level - 1, inner, rng.chance(0.8)) : zero;
        std::vector<Entry> window;
        const int w = static_cast<int>(rng.uniform(0, max_window));
        for (int i = 0; i < w; ++i) window.push_back(random_entry(rng, f, level - 1, inner, false));
        lines.emplace_back(key, EvSeq(left, right, rng.uniform(-spread + 1, 2), std::move(window)));
    }
    std::vector<std::pair<Cell, Entry>> corr;
    const int nc = static_cast<int>(rng.uniform(0, max_corr));
    for (int k = 0; k < nc; ++k)
        corr.emplace_back(Cell{rng.uniform(-spread, spread), rng.uniform(-spread, spread)}, random_entry(rng, f, level - 1, inner, false));
    return Op::from_parts(f, level, lines, corr);
}

Entry random_entry(SampleRng& rng, Field f, int level, OpClass cls, bool nonzero) {
    if (level == 0) return random_scalar(rng, f, nonzero);
    for (;;) {
        Op op = random_op_shaped(rng, f, cls, level, 2, 2, 2);
        if (!nonzero || !op.is_zero()) return op;
    }
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    eng_.seed(seq);
}

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
}

bool SampleRng::chance(double p) { return std::bernoulli_distribution(p)(eng_); }

Scalar random_scalar(SampleRng& rng, Field f, bool nonzero) {
    for (;;) {
        Scalar s(f, static_cast<long>(rng.uniform(-3, 3)));
        if (f.is_rational() && rng.chance(0.2)) s /= Scalar(f, static_cast<long>(rng.uniform(2, 4)));
        if (!nonzero || !s.is_zero()) return s;
    }
}

LaurentPoly random_laurent(SampleRng& rng, Field f, std::int64_t lo, std::int64_t hi, int max_terms) {
    LaurentPoly p(f);
    const int n = static_cast<int>(rng.uniform(0, max_terms));
    for (int k = 0; k < n; ++k) p.add_term(rng.uniform(lo, hi), random_scalar(rng, f, true));
    return p;
}

Op random_op(SampleRng& rng, Field f, OpClass cls, int level) {
    if (level < 1) throw Error(ErrorCode::precondition, "level must be at least 1");
    return level == 1 ? random_op_shaped(rng, f, cls, 1, 3, 3, 3) : random_op_shaped(rng, f, cls, level, 2, 2, 4);
}

Op random_generated_op(SampleRng& rng, Field f, int depth) {
    if (depth <= 0 || rng.chance(0.3)) {
        switch (rng.uniform(0, 5)) {
            case 0: return Op::mul(random_laurent(rng, f, -3, 3, 3));
            case 1: return Op::shift(f, rng.uniform(-3, 3));
            case 2: return Op::proj_plus(f, rng.uniform(-2, 2));
            case 3: return Op::proj_minus(f, rng.uniform(-2, 2));
            case 4: {
                std::map<Cell, Scalar> cells;
                for (int k = 0; k < 3; ++k) cells[{rng.uniform(-3, 3), rng.uniform(-3, 3)}] = random_scalar(rng, f);
                return Op::finite(f, cells);
            }
            default: {
                Entry left = random_scalar(rng, f, true);
                std::vector<Entry> w;
                for (int k = rng.uniform(0, 2); k > 0; --k) w.push_back(random_scalar(rng, f));
                return Op::line(f, 1, LineKey::antidiagonal(rng.uniform(-3, 3)),
                                EvSeq(left, Scalar::zero(f), rng.uniform(-3, 1), std::move(w)));
            }
        }
    }
    Op a = random_generated_op(rng, f, depth - 1);
    Op b = random_generated_op(rng, f, depth - 1);
    switch (rng.uniform(0, 2)) {
        case 0: return a + b;
        case 1: return a * b;
        default: return a.scaled(random_scalar(rng, f, true)) - b;
    }
}

}  // namespace tateops
