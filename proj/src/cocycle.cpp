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

#include "tateops/cocycle.hpp"

#include "tateops/trace.hpp"

namespace tateops {

namespace {

void require_level_one(const Op& a) {
    if (a.level() != 1) throw Error(ErrorCode::level_mismatch, "the Tate cocycle is defined for level-1 operators");
}

}  // namespace

Op corner(const Op& a, Corner q) {
    const Field f = a.field();
    const int n = a.level();
    const bool left_plus = q == Corner::pp || q == Corner::pm;
    const bool right_plus = q == Corner::pp || q == Corner::mp;
    Op left = left_plus ? Op::proj_plus(f, 0, n) : Op::proj_minus(f, 0, n);
    Op right = right_plus ? Op::proj_plus(f, 0, n) : Op::proj_minus(f, 0, n);
    Op out = left * a * right;
    if ((q == Corner::pm || q == Corner::mp) && !(is_bounded(out) && is_discrete(out)))
        throw Error(ErrorCode::internal, "off-diagonal corner is not trace-class");
    return out;
}

Scalar tate_cocycle(const Op& a, const Op& b) {
    require_level_one(a);
    require_level_one(b);
    Op first = corner(a, Corner::pm) * corner(b, Corner::mp);
    Op second = corner(b, Corner::pm) * corner(a, Corner::mp);
    return trace(first) - trace(second);
}

Scalar residue(const LaurentPoly& f, const LaurentPoly& g) {
    return Scalar(f.field(), cocycle_residue_sign) * tate_cocycle(Op::mul(f), Op::mul(g));
}

Scalar residue_oracle(const LaurentPoly& f, const LaurentPoly& g) { return (f * derivative(g)).coeff(-1); }

Scalar hochschild_residue(const Op& a, const Op& b) {
    require_level_one(a);
    Op bracket = commutator(Op::proj_plus(a.field(), 0, 1), a);
    return Scalar(a.field(), hochschild_residue_sign) * trace(bracket * b);
}

}  // namespace tateops
