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

#include "tateops/grid.hpp"

#include "tateops/cocycle.hpp"

namespace tateops {

std::vector<ResidueCell> residue_grid(Field f, std::int64_t bound, Exec exec) {
    if (bound < 0) throw Error(ErrorCode::precondition, "grid bound must be non-negative");
    const std::int64_t side = 2 * bound + 1;
    std::vector<ResidueCell> out(static_cast<std::size_t>(side * side));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::int64_t k = 0; k < side * side; ++k) {
        const std::int64_t m = k / side - bound;
        const std::int64_t n = k % side - bound;
        auto fm = LaurentPoly::monomial(f, m);
        auto gn = LaurentPoly::monomial(f, n);
        out[static_cast<std::size_t>(k)] = {m, n, residue(fm, gn), residue_oracle(fm, gn)};
    }
    return out;
}

std::vector<KacMoodyCell> kacmoody_grid(const LieAlgebraData& lie, std::int64_t bound, Exec exec) {
    if (bound < 0) throw Error(ErrorCode::precondition, "grid bound must be non-negative");
    const std::int64_t side = 2 * bound + 1;
    const auto r = static_cast<std::int64_t>(lie.dim());
    const std::int64_t total = r * r * side * side;
    std::vector<KacMoodyCell> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::int64_t k = 0; k < total; ++k) {
        const std::int64_t n = k % side - bound;
        const std::int64_t m = (k / side) % side - bound;
        const auto y = static_cast<std::size_t>((k / (side * side)) % r);
        const auto x = static_cast<std::size_t>(k / (side * side * r));
        Scalar v = block_cocycle(ad_block(lie.basis_vector(x), m, lie), ad_block(lie.basis_vector(y), n, lie));
        out[static_cast<std::size_t>(k)] = {x, y, m, n, std::move(v)};
    }
    return out;
}

std::vector<std::size_t> run_samples(std::size_t count, const std::function<bool(std::size_t)>& check, Exec exec) {
    std::vector<char> ok(count, 0);
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::int64_t k = 0; k < total; ++k) {
        try {
            ok[static_cast<std::size_t>(k)] = check(static_cast<std::size_t>(k)) ? 1 : 0;
        } catch (...) {
            ok[static_cast<std::size_t>(k)] = 0;
        }
    }
    std::vector<std::size_t> failed;
    for (std::size_t k = 0; k < count; ++k)
        if (!ok[k]) failed.push_back(k);
    return failed;
}

}  // namespace tateops
