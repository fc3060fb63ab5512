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

#ifndef TATEOPS_COUNTEREXAMPLES_HPP
#define TATEOPS_COUNTEREXAMPLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tateops {

/// Multiplication by q ∈ Z[1/p] on "Q_p" = colim_i lim_j p^-i Z / p^j, viewed as a Tate object
/// over finite abelian p-groups.
class QpEndo {
public:
    /// Throws precondition unless p is prime and the reduced denominator of q is a power of p.
    QpEndo(std::uint64_t p, mpq_class q);

    std::uint64_t prime() const noexcept { return p_; }
    const mpq_class& multiplier() const noexcept { return q_; }
    /// Exponent k with denominator p^k.
    unsigned denominator_exponent() const noexcept { return k_; }

    friend QpEndo operator*(const QpEndo& a, const QpEndo& b);
    friend QpEndo operator+(const QpEndo& a, const QpEndo& b);

private:
    std::uint64_t p_;
    mpq_class q_;
    unsigned k_ = 0;
};

struct QpIdealReport {
    bool bounded = false;
    bool discrete = false;
};

QpIdealReport qp_ideal_membership(const QpEndo& e);

/// Decides whether id = a + b with a bounded and b discrete is possible in the multiplier model;
/// returns true when no such splitting exists.
bool check_not_sliced(std::uint64_t p);

/// One named check of the F_p((t)) slicing suite.
struct SuiteCheck {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    bool passed() const noexcept { return failures == 0; }
};

/// split_plus_minus and the level-1 ideal laws over F_p on seeded samples.
std::vector<SuiteCheck> fpt_sliced_suite(std::uint64_t p, std::size_t samples, std::uint64_t seed);

}  // namespace tateops

#endif
