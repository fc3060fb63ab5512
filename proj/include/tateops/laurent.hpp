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

#ifndef TATEOPS_LAURENT_HPP
#define TATEOPS_LAURENT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "tateops/scalar.hpp"

namespace tateops {

/// Finite-support Laurent polynomial in t, an element of k[t, 1/t] inside k((t)).
///
/// Stored sparsely, exponent -> nonzero coefficient. All coefficients live in field().
class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, Scalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(Field f) : field_(f) {}
    LaurentPoly(Field f, Terms terms);

    static LaurentPoly monomial(const Scalar& c, std::int64_t n);
    static LaurentPoly monomial(Field f, std::int64_t n) { return monomial(Scalar::one(f), n); }
    static LaurentPoly constant(const Scalar& c) { return monomial(c, 0); }

    /// Parses "3*t^-2 + 1/2 - t^5". Whitespace is ignored; "*" and a unit coefficient are optional.
    static LaurentPoly parse(std::string_view text, Field f = Field{});

    Field field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coeff(std::int64_t n) const;
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly scaled(const Scalar& c) const;
    void add_term(std::int64_t n, const Scalar& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept;

    std::string to_string() const;

private:
    void check_same_field(const LaurentPoly& rhs) const;

    Field field_;
    Terms terms_;
};

/// Term-wise d/dt; in F_p the factor n is reduced mod p.
LaurentPoly derivative(const LaurentPoly& f);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace tateops

#endif
