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

#ifndef TATEOPS_SCALAR_HPP
#define TATEOPS_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tateops/error.hpp"

namespace tateops {

/// The base field k: either the rationals or a prime field F_p.
///
/// A default-constructed Field is Q. Prime fields are validated on construction and are
/// limited to p < 2^31 so that residue products fit in 64 bits.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    std::uint64_t modulus() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// An element of a Field. Rationals are kept in lowest terms (mpq canonical form); prime-field
/// residues lie in [0, p). Mixing fields in arithmetic throws ErrorCode::field_mismatch.
class Scalar {
public:
    Scalar() = default;  // rational zero
    Scalar(Field f, long v);
    Scalar(Field f, const mpz_class& v);
    explicit Scalar(const mpq_class& q);

    static Scalar zero(Field f) { return Scalar(f, 0L); }
    static Scalar one(Field f) { return Scalar(f, 1L); }
    static Scalar rational(long num, long den);
    /// Exact parse of "a", "-a", "a/b" in the given field (denominator inverted mod p).
    static Scalar parse(std::string_view text, Field f = Field{});

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    const mpq_class& rational_value() const;
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Values in different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b) noexcept;

    /// "a/b" with "/1" omitted for rationals, "v mod p" for residues.
    std::string to_string() const;
    /// Bare value without the " mod p" suffix ("a/b" or "v").
    std::string value_string() const;

private:
    void check_same_field(const Scalar& rhs) const;

    Field field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tateops

#endif
