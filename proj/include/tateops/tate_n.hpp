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

#ifndef TATEOPS_TATE_N_HPP
#define TATEOPS_TATE_N_HPP

#include <utility>
#include <vector>

#include "tateops/op.hpp"

namespace tateops {

// Two indexings of the n ideal pairs of a level-n operator on k((t_1))...((t_n)):
//
//   ideal order:    I_1 is the outermost variable t_n (the lattice direction of the operator's
//                   own rows and columns); I_i, i >= 2, asks every entry to lie in I_(i-1).
//   variable order: v = 1..n names t_v, innermost first, as in P_v^+ (sum a t_1^m_1...t_n^m_n)
//                   = sum over m_v >= 0.
//
// They are related by ideal index i = n + 1 - v.

enum class IndexOrder { ideal, variable };

inline int ideal_index_of_variable(int n, int v) { return n + 1 - v; }

enum class Sign { plus, minus };

/// Membership in I_i^s for ideal index 1 <= i <= level.
bool in_ideal(const Op& a, int ideal_index, Sign s);

struct CubicalReport {
    int n = 0;
    std::vector<bool> plus;   // ideal order: plus[i-1] is I_i^+
    std::vector<bool> minus;  // ideal order
    bool trace_class = false;

    bool in_plus(int index, IndexOrder order = IndexOrder::ideal) const;
    bool in_minus(int index, IndexOrder order = IndexOrder::ideal) const;
};

CubicalReport cubical_membership(const Op& a);

/// P_v^+ in variable order: proj_plus(0) in t_v and the identity in the other variables.
Op good_idempotent(Field f, int n, int variable);
/// [P_1^+, ..., P_n^+] in variable order.
std::vector<Op> good_idempotents(int n, Field f = Field{});

/// (P^+ a, P^- a) for the good idempotent attached to the given index; the first factor lies in
/// I^+ and the second in I^- of that index.
std::pair<Op, Op> split_i(const Op& a, int index, IndexOrder order = IndexOrder::ideal);

/// Iterated trace of an operator that is trace-class at every level.
Scalar trace_n(const Op& a);

/// No lines at any level: the operator factors through a finite-dimensional space.
bool is_finite_all_levels(const Op& a);

struct WordProduct {
    Op product;
    bool finite_at_all_levels = false;
};

/// Product ops[0] ∘ ops[1] ∘ ... of trace-class operators. Throws precondition otherwise.
WordProduct word_factorization(const std::vector<Op>& ops);

}  // namespace tateops

#endif
