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

#ifndef TATEOPS_TATE_OP_HPP
#define TATEOPS_TATE_OP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tateops/op.hpp"

namespace tateops {

/// The lattice t^m O inside k((t)), O = span{t^j : j >= 0}, in the outermost variable.
///
/// Only this cofinal chain is modeled: any two lattices of k((t)) have a common sub- and
/// over-lattice on the chain, so lattice-quantified statements can be checked on it.
struct StandardLattice {
    std::int64_t m = 0;

    /// t^m O contains t^m' O.
    bool contains(const StandardLattice& other) const noexcept { return m <= other.m; }
    friend auto operator<=>(const StandardLattice&, const StandardLattice&) = default;
};

/// Dense block of entries over rows [row0, row0 + rows) and columns [col0, col0 + cols).
struct EntryMatrix {
    Field field;
    int entry_level = 0;
    std::int64_t row0 = 0;
    std::int64_t col0 = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Entry> data;

    const Entry& at(std::int64_t row, std::int64_t col) const {
        return data[static_cast<std::size_t>(row - row0) * cols + static_cast<std::size_t>(col - col0)];
    }
    bool is_zero() const;
};

enum class Exec { serial, parallel };

/// The block of a's entries over rows [r0, r1) and columns [c0, c1).
EntryMatrix induced_matrix(const Op& a, std::int64_t r0, std::int64_t r1, std::int64_t c0, std::int64_t c1,
                           Exec exec = Exec::serial);

/// Membership in the ideals of the outermost variable.
struct IdealReport {
    bool bounded = false;   // image in some lattice (I+)
    bool discrete = false;  // kills some lattice (I-)
    bool trace_class = false;
    /// Least row with a nonzero entry; absent for zero or unbounded operators.
    std::optional<std::int64_t> bounding_row;
    /// Least J such that every column >= J is zero; absent for zero or non-discrete operators.
    std::optional<std::int64_t> kill_column;
};

bool is_bounded(const Op& a);
bool is_discrete(const Op& a);
IdealReport ideal_membership(const Op& a);

/// Least row carrying a nonzero entry in columns >= col (absent when those columns vanish).
std::optional<std::int64_t> min_row_from_column(const Op& a, std::int64_t col);
/// Greatest column with a nonzero entry in rows < row (absent when those rows vanish).
std::optional<std::int64_t> max_column_below_row(const Op& a, std::int64_t row);

/// (P+ a, P- a) with P+ = proj_plus(m); the first is bounded, the second discrete.
std::pair<Op, Op> split_plus_minus(const Op& a, std::int64_t m = 0);

struct DoubleLatticeFactorization {
    StandardLattice source;        // L1
    StandardLattice source_inner;  // L1' ⊆ L1, with a(L1') ⊆ L2
    StandardLattice target;        // L2
    StandardLattice target_outer;  // L2' ⊇ L2, with a(L1) ⊆ L2'
    /// The induced map L1/L1' -> L2'/L2: rows [L2'.m, L2.m), columns [L1.m, L1'.m).
    EntryMatrix induced;
};

/// The tightest factorization of a on the standard chain: L2' is the smallest lattice containing
/// a(L1) and L2, L1' the largest sublattice of L1 mapped into L2.
DoubleLatticeFactorization double_lattice_factorization(const Op& a, StandardLattice l1, StandardLattice l2);

/// Whether (L1, L1', L2, L2') satisfy the sandwich conditions for a.
bool is_double_lattice_factorization(const Op& a, StandardLattice l1, StandardLattice l1_inner, StandardLattice l2,
                                     StandardLattice l2_outer);

}  // namespace tateops

#endif
