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

#include "tateops/tate_n.hpp"

#include "tateops/tate_op.hpp"
#include "tateops/trace.hpp"

namespace tateops {

namespace {

template <class F>
bool every_entry(const Op& a, F pred) {
    for (auto& [key, seq] : a.lines()) {
        if (!pred(seq.left()) || !pred(seq.right())) return false;
        for (auto& e : seq.window())
            if (!pred(e)) return false;
    }
    for (auto& [cell, e] : a.correction())
        if (!pred(e)) return false;
    return true;
}

int to_ideal_index(int n, int index, IndexOrder order) {
    if (index < 1 || index > n)
        throw Error(ErrorCode::index_out_of_range, "ideal index " + std::to_string(index) + " outside 1.." + std::to_string(n));
    return order == IndexOrder::ideal ? index : ideal_index_of_variable(n, index);
}

}  // namespace

bool in_ideal(const Op& a, int ideal_index, Sign s) {
    if (ideal_index < 1 || ideal_index > a.level())
        throw Error(ErrorCode::index_out_of_range, "ideal index " + std::to_string(ideal_index) + " at level " +
                                                       std::to_string(a.level()));
    if (ideal_index == 1) return s == Sign::plus ? is_bounded(a) : is_discrete(a);
    // Every induced map on a double lattice factorization is a finite matrix of entries, and every
    // entry of the presentation occurs in one.
    return every_entry(a, [&](const Entry& e) { return in_ideal(e.op(), ideal_index - 1, s); });
}

bool CubicalReport::in_plus(int index, IndexOrder order) const {
    return plus[static_cast<std::size_t>(to_ideal_index(n, index, order) - 1)];
}

bool CubicalReport::in_minus(int index, IndexOrder order) const {
    return minus[static_cast<std::size_t>(to_ideal_index(n, index, order) - 1)];
}

CubicalReport cubical_membership(const Op& a) {
    CubicalReport r;
    r.n = a.level();
    r.trace_class = true;
    for (int i = 1; i <= r.n; ++i) {
        r.plus.push_back(in_ideal(a, i, Sign::plus));
        r.minus.push_back(in_ideal(a, i, Sign::minus));
        r.trace_class = r.trace_class && r.plus.back() && r.minus.back();
    }
    return r;
}

Op good_idempotent(Field f, int n, int variable) {
    if (variable < 1 || variable > n)
        throw Error(ErrorCode::index_out_of_range, "variable " + std::to_string(variable) + " outside 1.." + std::to_string(n));
    if (variable == n) return Op::proj_plus(f, 0, n);
    return Op::diagonal_constant(0, Entry(good_idempotent(f, n - 1, variable)));
}

std::vector<Op> good_idempotents(int n, Field f) {
    if (n < 1) throw Error(ErrorCode::precondition, "n must be at least 1");
    std::vector<Op> out;
    for (int v = 1; v <= n; ++v) out.push_back(good_idempotent(f, n, v));
    return out;
}

std::pair<Op, Op> split_i(const Op& a, int index, IndexOrder order) {
    const int n = a.level();
    const int i = to_ideal_index(n, index, order);
    Op plus = good_idempotent(a.field(), n, n + 1 - i);
    Op minus = Op::identity(a.field(), n) - plus;
    return {plus * a, minus * a};
}

Scalar trace_n(const Op& a) { return trace(a); }

bool is_finite_all_levels(const Op& a) {
    if (!a.is_outer_finite()) return false;
    if (a.level() == 1) return true;
    return every_entry(a, [](const Entry& e) { return is_finite_all_levels(e.op()); });
}

WordProduct word_factorization(const std::vector<Op>& ops) {
    if (ops.empty()) throw Error(ErrorCode::precondition, "empty word");
    for (auto& op : ops)
        if (!is_trace_class(op)) throw Error(ErrorCode::precondition, "word letter is not trace-class");
    WordProduct out;
    out.product = ops.front();
    for (std::size_t k = 1; k < ops.size(); ++k) out.product = out.product * ops[k];
    out.finite_at_all_levels = is_finite_all_levels(out.product);
    return out;
}

}  // namespace tateops
