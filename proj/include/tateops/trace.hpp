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

#ifndef TATEOPS_TRACE_HPP
#define TATEOPS_TRACE_HPP

#include <cstdint>
#include <optional>

#include "tateops/op.hpp"
#include "tateops/tate_op.hpp"

namespace tateops {

/// Lattices N ⊇ N' with a(k((t))) ⊆ N and a(N') = 0, and the induced map on N/N'.
struct TraceCertificate {
    StandardLattice image;   // N
    StandardLattice killed;  // N'
    EntryMatrix window;      // rows and columns [N.m, N'.m)
};

struct TraceResult {
    Scalar value;
    TraceCertificate certificate;
};

/// Trace-class at every level: outer bounded and discrete, and every entry trace-class recursively.
bool is_trace_class(const Op& a);

/// Trace through the canonical factorization N = t^min(bounding_row, kill_column, 0) O, N' = t^kill_column O.
/// Throws not_trace_class.
TraceResult trace_with_certificate(const Op& a);

/// Trace through a caller-chosen pair; throws precondition unless a(k((t))) ⊆ N ⊇ N' and a(N') = 0.
TraceResult trace_with_lattices(const Op& a, StandardLattice image, StandardLattice killed);

Scalar trace(const Op& a);

/// Classical trace of a square block; entries of level >= 1 contribute their own trace.
Scalar matrix_trace(const EntryMatrix& m);

/// Half-width needed so that [-w, w] holds every diagonal crossing of the presentation, at every level.
std::int64_t oracle_half_width(const Op& a);

/// Sum of diagonal entries over |i| <= half_width, recursively. Throws insufficient_window if the
/// window misses part of the diagonal support.
Scalar trace_oracle(const Op& a, std::int64_t half_width);

/// Data for additivity along t^m O ↪ k((t)) ↠ k((t))/t^m O.
struct RestrictQuotient {
    bool sub_ok = false;        // a(t^m O) ⊆ t^m O
    Op restricted;              // a on t^m O, reindexed so that t^m becomes t^0
    Op quotient;                // a on the quotient, indexed by outer exponents < m
    std::optional<EntryMatrix> quotient_window;  // dense form when the quotient map is finite
};

RestrictQuotient restrict_and_quotient(const Op& a, std::int64_t m);

}  // namespace tateops

#endif
