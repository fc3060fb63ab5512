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

#ifndef TATEOPS_SUITES_HPP
#define TATEOPS_SUITES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tateops/lie.hpp"
#include "tateops/tate_op.hpp"

namespace tateops {

struct SuiteOptions {
    std::uint64_t seed = 20261014;
    /// Divides every sample count by 8 (at least 8 samples remain).
    bool quick = false;
    Exec exec = Exec::parallel;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double seconds = 0;
    double budget_seconds = 0;  // 0: no time limit
    std::string detail;

    bool within_budget() const noexcept { return budget_seconds <= 0 || seconds < budget_seconds; }
    bool passed() const noexcept { return failures == 0 && within_budget(); }
};

/// Bilinear form K(x, y) on basis indices.
using FormMeasure = std::function<Scalar(std::size_t, std::size_t)>;

/// K(x, y) = block_cocycle(ad(x t), ad(y t^-1)).
FormMeasure cocycle_form_measure(const LieAlgebraData& lie);

CriterionResult criterion_residue(const SuiteOptions& o);
CriterionResult criterion_lie_cocycle(const SuiteOptions& o);
CriterionResult criterion_trace_independence(const SuiteOptions& o);
CriterionResult criterion_trace_additivity(const SuiteOptions& o);
CriterionResult criterion_strong_vanishing(const SuiteOptions& o);
CriterionResult criterion_sliced(const SuiteOptions& o);
CriterionResult criterion_good_idempotents(const SuiteOptions& o);
CriterionResult criterion_word_factorization(const SuiteOptions& o);
CriterionResult criterion_counterexamples(const SuiteOptions& o);
CriterionResult criterion_kacmoody(const SuiteOptions& o, const LieAlgebraData& lie, const FormMeasure& measure);

/// The level-2 operator with one outer anti-diagonal line through (-1 - j, j), j <= -1, whose
/// entries are the level-1 flip.
Op level2_flip_witness(Field f = Field{});

/// Criterion id in 1..10; the Kac-Moody criterion runs on sl_2 with the given measure (the cocycle
/// measure when empty). Throws index_out_of_range for other ids.
CriterionResult run_criterion(int id, const SuiteOptions& o, const FormMeasure& sl2_measure);

/// Criteria 1..10 in order.
std::vector<CriterionResult> run_all_criteria(const SuiteOptions& o, const FormMeasure& sl2_measure);

}  // namespace tateops

#endif
