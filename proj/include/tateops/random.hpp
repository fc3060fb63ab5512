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

#ifndef TATEOPS_RANDOM_HPP
#define TATEOPS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "tateops/laurent.hpp"
#include "tateops/op.hpp"

namespace tateops {

/// Generator for sample k of a run seeded with s. Streams depend only on (s, k), so samples can be
/// drawn in any order or in parallel.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t index);

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
    bool chance(double p);
    std::mt19937_64& engine() noexcept { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Small integer or, over Q, an occasional fraction; never zero when nonzero is set.
Scalar random_scalar(SampleRng& rng, Field f, bool nonzero = false);

/// Random Laurent polynomial with exponents in [lo, hi] and at most max_terms terms.
LaurentPoly random_laurent(SampleRng& rng, Field f, std::int64_t lo, std::int64_t hi, int max_terms = 4);

enum class OpClass { any, bounded, discrete, trace_class };

/// Random operator of the given outer class. Entries of a level-n trace-class operator are
/// trace-class themselves; for the other classes entries are unconstrained.
Op random_op(SampleRng& rng, Field f, OpClass cls, int level = 1);

/// Level-1 operator built from mul, shift, proj_plus, proj_minus, finite and anti-diagonal
/// generators through sums, products and scalings, to the given depth.
Op random_generated_op(SampleRng& rng, Field f, int depth = 2);

}  // namespace tateops

#endif
