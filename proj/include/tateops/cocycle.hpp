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

#ifndef TATEOPS_COCYCLE_HPP
#define TATEOPS_COCYCLE_HPP

#include "tateops/laurent.hpp"
#include "tateops/op.hpp"

namespace tateops {

/// Sign constants that align the corner-trace constructions with the classical residue
/// res(f dg) = coeff_{-1}(f g'). Both are pinned by comparing against residue_oracle at
/// (t^-1, t); see tests/test_cocycle.cpp.
inline constexpr long cocycle_residue_sign = -1;
inline constexpr long hochschild_residue_sign = -1;

/// Quadrants of an operator with respect to k((t)) = t^0 O ⊕ t^-1 k[t^-1].
enum class Corner { pp, pm, mp, mm };

/// P^s ∘ a ∘ P^s' for the corner (s, s'), with P+ = proj_plus(0) and P- = proj_minus(0).
Op corner(const Op& a, Corner q);

/// c(a, b) = τ(a_{+-} b_{-+}) - τ(b_{+-} a_{-+}) on level-1 operators.
Scalar tate_cocycle(const Op& a, const Op& b);

/// The residue of f dg through the cocycle of multiplication operators.
Scalar residue(const LaurentPoly& f, const LaurentPoly& g);

/// coeff_{-1}(f g'), computed directly.
Scalar residue_oracle(const LaurentPoly& f, const LaurentPoly& g);

/// s' τ([P+, a] ∘ b); [P+, a] = a_{+-} - a_{-+} is always trace-class.
Scalar hochschild_residue(const Op& a, const Op& b);

}  // namespace tateops

#endif
