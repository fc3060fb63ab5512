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

#ifndef TATEOPS_GRID_HPP
#define TATEOPS_GRID_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "tateops/lie.hpp"
#include "tateops/tate_op.hpp"

namespace tateops {

struct ResidueCell {
    std::int64_t m = 0;
    std::int64_t n = 0;
    Scalar value;   // residue(t^m, t^n)
    Scalar oracle;  // residue_oracle(t^m, t^n)
};

/// All (m, n) with |m|, |n| <= bound, row-major in m then n.
std::vector<ResidueCell> residue_grid(Field f, std::int64_t bound, Exec exec = Exec::serial);

struct KacMoodyCell {
    std::size_t x = 0;
    std::size_t y = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    Scalar value;  // block_cocycle(ad(x t^m), ad(y t^n))
};

/// Ordered by (x, y, m, n) with |m|, |n| <= bound.
std::vector<KacMoodyCell> kacmoody_grid(const LieAlgebraData& lie, std::int64_t bound, Exec exec = Exec::serial);

/// Evaluates check(k) for k in [0, count) and returns the indices that failed, in increasing order.
/// check must be safe to call concurrently; exceptions count as failures.
std::vector<std::size_t> run_samples(std::size_t count, const std::function<bool(std::size_t)>& check,
                                     Exec exec = Exec::serial);

}  // namespace tateops

#endif
