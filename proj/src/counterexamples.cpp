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

#include "tateops/counterexamples.hpp"

#include "tateops/random.hpp"
#include "tateops/scalar.hpp"
#include "tateops/tate_op.hpp"

namespace tateops {

QpEndo::QpEndo(std::uint64_t p, mpq_class q) : p_(p), q_(std::move(q)) {
    if (!is_prime_number(p)) throw Error(ErrorCode::precondition, std::to_string(p) + " is not prime");
    q_.canonicalize();
    mpz_class d = q_.get_den();
    const mpz_class pz(static_cast<unsigned long>(p));
    while (d % pz == 0) {
        d /= pz;
        ++k_;
    }
    if (d != 1) throw Error(ErrorCode::precondition, "multiplier denominator is not a power of " + std::to_string(p));
}

QpEndo operator*(const QpEndo& a, const QpEndo& b) {
    if (a.p_ != b.p_) throw Error(ErrorCode::field_mismatch, "endomorphisms for different primes");
    return QpEndo(a.p_, a.q_ * b.q_);
}

QpEndo operator+(const QpEndo& a, const QpEndo& b) {
    if (a.p_ != b.p_) throw Error(ErrorCode::field_mismatch, "endomorphisms for different primes");
    return QpEndo(a.p_, a.q_ + b.q_);
}

QpIdealReport qp_ideal_membership(const QpEndo& e) {
    // q != 0 is invertible on Q_p, so its image is all of Q_p, which lies in no lattice p^m Z_p,
    // and it is injective, so it kills no lattice. Only q = 0 is bounded or discrete.
    const bool zero = e.multiplier() == 0;
    return {zero, zero};
}

bool check_not_sliced(std::uint64_t p) {
    // I+ = I- = {0} in the model, so id = a + b forces a = b = 0 and then id = 0.
    const QpEndo one(p, 1);
    const QpEndo zero(p, 0);
    auto r = qp_ideal_membership(zero);
    if (!r.bounded || !r.discrete) return false;
    for (long num : {1L, -1L, 2L, 3L})
        for (unsigned k = 0; k < 3; ++k) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), p, k);
            auto s = qp_ideal_membership(QpEndo(p, mpq_class(mpz_class(num), den)));
            if (s.bounded || s.discrete) return false;
        }
    return !((zero + zero).multiplier() == one.multiplier());
}

std::vector<SuiteCheck> fpt_sliced_suite(std::uint64_t p, std::size_t samples, std::uint64_t seed) {
    const Field f = Field::prime(p);
    SuiteCheck split{"split_plus_minus", 0, 0};
    SuiteCheck ideals{"ideal_laws", 0, 0};
    SuiteCheck identity{"identity_split", 1, 0};

    auto [ip, im] = split_plus_minus(Op::identity(f));
    if (!(ip == Op::proj_plus(f, 0) && im == Op::proj_minus(f, 0))) identity.failures = 1;

    for (std::size_t k = 0; k < samples; ++k) {
        SampleRng rng(seed, k);
        Op a = random_op(rng, f, OpClass::any, 1);
        auto [bp, dm] = split_plus_minus(a);
        ++split.cases;
        if (!(is_bounded(bp) && is_discrete(dm) && bp + dm == a)) ++split.failures;

        Op b = random_op(rng, f, OpClass::any, 1);
        Op pb = random_op(rng, f, OpClass::bounded, 1);
        Op pd = random_op(rng, f, OpClass::discrete, 1);
        ++ideals.cases;
        bool ok = is_bounded(pb * b) && is_bounded(b * pb) && is_discrete(pd * b) && is_discrete(b * pd) &&
                  is_bounded(pb + bp) && is_discrete(pd - dm);
        if (!ok) ++ideals.failures;
    }
    return {split, ideals, identity};
}

}  // namespace tateops
