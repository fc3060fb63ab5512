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

#include "tateops/tate_op.hpp"

#include <algorithm>

namespace tateops {

namespace {

void keep_min(std::optional<std::int64_t>& acc, std::optional<std::int64_t> v) {
    if (v && (!acc || *v < *acc)) acc = v;
}

void keep_max(std::optional<std::int64_t>& acc, std::optional<std::int64_t> v) {
    if (v && (!acc || *v > *acc)) acc = v;
}

}  // namespace

bool EntryMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Entry& e) { return e.is_zero(); });
}

EntryMatrix induced_matrix(const Op& a, std::int64_t r0, std::int64_t r1, std::int64_t c0, std::int64_t c1, Exec exec) {
    EntryMatrix m;
    m.field = a.field();
    m.entry_level = a.level() - 1;
    m.row0 = r0;
    m.col0 = c0;
    m.rows = r1 > r0 ? static_cast<std::size_t>(r1 - r0) : 0;
    m.cols = c1 > c0 ? static_cast<std::size_t>(c1 - c0) : 0;
    m.data.assign(m.rows * m.cols, a.zero_entry());
    const auto n = static_cast<std::int64_t>(m.rows);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::int64_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            m.data[static_cast<std::size_t>(i) * m.cols + j] = a.entry(r0 + i, c0 + static_cast<std::int64_t>(j));
    return m;
}

bool is_bounded(const Op& a) {
    return std::all_of(a.lines().begin(), a.lines().end(), [](const auto& kv) {
        return kv.first.is_diagonal() ? !kv.second.has_left_tail() : !kv.second.has_right_tail();
    });
}

bool is_discrete(const Op& a) {
    return std::all_of(a.lines().begin(), a.lines().end(), [](const auto& kv) { return !kv.second.has_right_tail(); });
}

IdealReport ideal_membership(const Op& a) {
    IdealReport r;
    r.bounded = is_bounded(a);
    r.discrete = is_discrete(a);
    r.trace_class = r.bounded && r.discrete;
    if (r.bounded) {
        std::optional<std::int64_t> row;
        for (auto& [key, seq] : a.lines()) {
            if (key.is_diagonal()) {
                if (auto j = seq.first_nonzero()) keep_min(row, *j + key.offset);
            } else if (auto j = seq.last_nonzero()) {
                keep_min(row, key.offset - *j);
            }
        }
        for (auto& [cell, e] : a.correction()) keep_min(row, cell.first);
        r.bounding_row = row;
    }
    if (r.discrete) {
        std::optional<std::int64_t> col;
        for (auto& [key, seq] : a.lines()) keep_max(col, seq.last_nonzero());
        for (auto& [cell, e] : a.correction()) keep_max(col, cell.second);
        if (col) r.kill_column = *col + 1;
    }
    return r;
}

std::optional<std::int64_t> min_row_from_column(const Op& a, std::int64_t col) {
    std::optional<std::int64_t> row;
    for (auto& [key, seq] : a.lines()) {
        if (key.is_diagonal()) {
            if (auto j = seq.first_nonzero_from(col)) keep_min(row, *j + key.offset);
        } else if (auto j = seq.last_nonzero(); j && *j >= col) {
            keep_min(row, key.offset - *j);
        }
    }
    for (auto& [cell, e] : a.correction())
        if (cell.second >= col) keep_min(row, cell.first);
    return row;
}

std::optional<std::int64_t> max_column_below_row(const Op& a, std::int64_t row) {
    std::optional<std::int64_t> col;
    for (auto& [key, seq] : a.lines()) {
        if (key.is_diagonal()) {
            keep_max(col, seq.last_nonzero_below(row - key.offset));
        } else if (auto j = seq.last_nonzero(); j && key.offset - *j < row) {
            keep_max(col, j);
        }
    }
    for (auto& [cell, e] : a.correction())
        if (cell.first < row) keep_max(col, cell.second);
    return col;
}

std::pair<Op, Op> split_plus_minus(const Op& a, std::int64_t m) {
    return {Op::proj_plus(a.field(), m, a.level()) * a, Op::proj_minus(a.field(), m, a.level()) * a};
}

DoubleLatticeFactorization double_lattice_factorization(const Op& a, StandardLattice l1, StandardLattice l2) {
    DoubleLatticeFactorization f;
    f.source = l1;
    f.target = l2;
    f.target_outer = l2;
    if (auto r = min_row_from_column(a, l1.m); r && *r < l2.m) f.target_outer.m = *r;
    f.source_inner = l1;
    if (auto c = max_column_below_row(a, l2.m); c && *c + 1 > l1.m) f.source_inner.m = *c + 1;
    f.induced = induced_matrix(a, f.target_outer.m, l2.m, l1.m, f.source_inner.m);
    return f;
}

bool is_double_lattice_factorization(const Op& a, StandardLattice l1, StandardLattice l1_inner, StandardLattice l2,
                                     StandardLattice l2_outer) {
    if (!l1.contains(l1_inner) || !l2_outer.contains(l2)) return false;
    auto r1 = min_row_from_column(a, l1.m);
    auto r2 = min_row_from_column(a, l1_inner.m);
    return (!r1 || *r1 >= l2_outer.m) && (!r2 || *r2 >= l2.m);
}

}  // namespace tateops
