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

#include "tateops/scalar.hpp"

#include <cctype>
#include <ostream>

namespace tateops {

namespace {

constexpr std::uint64_t max_prime = (std::uint64_t{1} << 31);

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= max_prime || !is_prime_number(p))
        throw Error(ErrorCode::precondition, "field modulus " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

std::string Field::to_string() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(Field f, long v) : Scalar(f, mpz_class(v)) {}

Scalar::Scalar(Field f, const mpz_class& v) : field_(f) {
    if (f.is_rational())
        q_ = v;
    else
        r_ = reduce(v, f.modulus());
}

Scalar::Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::parse(std::string_view text, Field f) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto parse_int = [&](std::string_view part) {
        std::size_t i = 0;
        if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
        if (i == part.size()) throw Error(ErrorCode::parse_error, "bad integer '" + std::string(part) + "'");
        for (std::size_t k = i; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw Error(ErrorCode::parse_error, "bad integer '" + std::string(part) + "'");
        std::string digits(part.front() == '+' ? part.substr(1) : part);
        return mpz_class(digits, 10);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Scalar(f, parse_int(s));
    mpz_class num = parse_int(std::string_view(s).substr(0, slash));
    mpz_class den = parse_int(std::string_view(s).substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in '" + s + "'");
    return Scalar(f, num) / Scalar(f, den);
}

bool Scalar::is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rational()) throw Error(ErrorCode::field_mismatch, "scalar is not rational");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw Error(ErrorCode::field_mismatch, "scalar is not a residue");
    return r_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw Error(ErrorCode::field_mismatch, "arithmetic between " + field_.to_string() + " and " + rhs.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (field_.is_rational())
        out.q_ = -q_;
    else
        out.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.is_rational())
        q_ += rhs.q_;
    else
        r_ = (r_ + rhs.r_) % field_.modulus();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.is_rational())
        q_ -= rhs.q_;
    else
        r_ = (r_ + field_.modulus() - rhs.r_) % field_.modulus();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.is_rational())
        q_ *= rhs.q_;
    else
        r_ = r_ * rhs.r_ % field_.modulus();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
    Scalar out = *this;
    if (field_.is_rational())
        out.q_ = 1 / q_;
    else
        out.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
    return out;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::value_string() const {
    if (field_.is_prime()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_str();
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(r_) + " mod " + std::to_string(field_.modulus());
    return value_string();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tateops
