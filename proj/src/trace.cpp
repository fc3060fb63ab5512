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

#include "tateops/trace.hpp"

#include <algorithm>
#include <cstdlib>

namespace tateops {

namespace {

template <class F>
bool all_entries(const Op& a, F pred) {
    for (auto& [key, seq] : a.lines()) {
        if (!pred(seq.left()) || !pred(seq.right())) return false;
        for (auto& e : seq.window())
            if (!pred(e)) return false;
    }
    for (auto& [cell, e] : a.correction())
        if (!pred(e)) return false;
    return true;
}

Scalar entry_trace(const Entry& e) { return e.is_scalar() ? e.scalar() : trace(e.op()); }

}  // namespace

bool is_trace_class(const Op& a) {
    if (!is_bounded(a) || !is_discrete(a)) return false;
    if (a.level() == 1) return true;
    return all_entries(a, [](const Entry& e) { return is_trace_class(e.op()); });
}

Scalar matrix_trace(const EntryMatrix& m) {
    if (m.rows != m.cols || m.row0 != m.col0) throw Error(ErrorCode::dimension_mismatch, "trace of a non-square block");
    Scalar acc = Scalar::zero(m.field);
    for (std::size_t i = 0; i < m.rows; ++i) acc += entry_trace(m.data[i * m.cols + i]);
    return acc;
}

TraceResult trace_with_lattices(const Op& a, StandardLattice image, StandardLattice killed) {
    if (!is_trace_class(a)) throw Error(ErrorCode::not_trace_class, "operator is not trace-class");
    auto r = ideal_membership(a);
    if (image.m > killed.m) throw Error(ErrorCode::precondition, "N must contain N'");
    if (r.bounding_row && *r.bounding_row < image.m)
        throw Error(ErrorCode::precondition, "image is not contained in t^" + std::to_string(image.m) + " O");
    if (r.kill_column && *r.kill_column > killed.m)
        throw Error(ErrorCode::precondition, "t^" + std::to_string(killed.m) + " O is not annihilated");
    TraceResult out;
    out.certificate.image = image;
    out.certificate.killed = killed;
    out.certificate.window = induced_matrix(a, image.m, killed.m, image.m, killed.m);
    out.value = matrix_trace(out.certificate.window);
    return out;
}

TraceResult trace_with_certificate(const Op& a) {
    if (!is_trace_class(a)) throw Error(ErrorCode::not_trace_class, "operator is not trace-class");
    auto r = ideal_membership(a);
    if (!r.kill_column) return trace_with_lattices(a, {0}, {0});
    std::int64_t lo = std::min<std::int64_t>(*r.kill_column, 0);
    if (r.bounding_row) lo = std::min(lo, *r.bounding_row);
    return trace_with_lattices(a, {lo}, {*r.kill_column});
}

Scalar trace(const Op& a) { return trace_with_certificate(a).value; }

std::int64_t oracle_half_width(const Op& a) {
    std::int64_t w = 0;
    for (auto& [key, seq] : a.lines()) {
        if (key.is_diagonal()) {
            // Only reachable for non-trace-class input; cover the window.
            if (key.offset == 0) w = std::max({w, std::abs(seq.start()), std::abs(seq.end())});
        } else if ((key.offset & 1) == 0) {
            w = std::max(w, std::abs(key.offset / 2));
        }
    }
    for (auto& [cell, e] : a.correction())
        if (cell.first == cell.second) w = std::max(w, std::abs(cell.first));
    if (a.level() > 1)
        all_entries(a, [&](const Entry& e) {
            w = std::max(w, oracle_half_width(e.op()));
            return true;
        });
    return w;
}

Scalar trace_oracle(const Op& a, std::int64_t half_width) {
    if (!is_trace_class(a)) throw Error(ErrorCode::not_trace_class, "operator is not trace-class");
    std::int64_t need = oracle_half_width(a);
    if (half_width < need)
        throw Error(ErrorCode::insufficient_window, "oracle window " + std::to_string(half_width) +
                                                        " is smaller than the diagonal support width " + std::to_string(need));
    Scalar acc = Scalar::zero(a.field());
    for (std::int64_t i = -half_width; i <= half_width; ++i) {
        Entry e = a.entry(i, i);
        acc += e.is_scalar() ? e.scalar() : trace_oracle(e.op(), half_width);
    }
    return acc;
}

RestrictQuotient restrict_and_quotient(const Op& a, std::int64_t m) {
    const Field f = a.field();
    const int n = a.level();
    RestrictQuotient out;
    auto low = min_row_from_column(a, m);
    out.sub_ok = !low || *low >= m;
    Op plus = Op::proj_plus(f, m, n);
    Op minus = Op::proj_minus(f, m, n);
    out.restricted = Op::shift(f, -m, n) * plus * a * plus * Op::shift(f, m, n);
    out.quotient = minus * a * minus;
    if (out.quotient.is_outer_finite()) {
        std::int64_t lo = m;
        for (auto& [cell, e] : out.quotient.correction()) lo = std::min({lo, cell.first, cell.second});
        out.quotient_window = induced_matrix(out.quotient, lo, m, lo, m);
    }
    return out;
}

}  // namespace tateops
