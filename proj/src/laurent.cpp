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

#include "tateops/laurent.hpp"

#include <cctype>
#include <ostream>

namespace tateops {

LaurentPoly::LaurentPoly(Field f, Terms terms) : field_(f) {
    for (auto& [n, c] : terms) add_term(n, c);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, std::int64_t n) {
    LaurentPoly p(c.field());
    p.add_term(n, c);
    return p;
}

void LaurentPoly::add_term(std::int64_t n, const Scalar& c) {
    if (c.field() != field_)
        throw Error(ErrorCode::field_mismatch, "coefficient field " + c.field().to_string() + " in polynomial over " + field_.to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar LaurentPoly::coeff(std::int64_t n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw Error(ErrorCode::precondition, "zero polynomial has no exponents");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw Error(ErrorCode::precondition, "zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::check_same_field(const LaurentPoly& rhs) const {
    if (field_ != rhs.field_)
        throw Error(ErrorCode::field_mismatch, "polynomials over " + field_.to_string() + " and " + rhs.field_.to_string());
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(field_);
    for (auto& [n, c] : terms_) out.terms_.emplace(n, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_same_field(rhs);
    for (auto& [n, c] : rhs.terms_) add_term(n, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_same_field(rhs);
    for (auto& [n, c] : rhs.terms_) add_term(n, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_field(b);
    LaurentPoly out(a.field_);
    for (auto& [n, c] : a.terms_)
        for (auto& [m, d] : b.terms_) out.add_term(n + m, c * d);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly out(field_);
    for (auto& [n, d] : terms_) out.add_term(n, c * d);
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
}

LaurentPoly derivative(const LaurentPoly& f) {
    LaurentPoly out(f.field());
    for (auto& [n, c] : f.terms()) out.add_term(n - 1, Scalar(f.field(), static_cast<long>(n)) * c);
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string s, Field f) : s_(std::move(s)), f_(f) {}

    LaurentPoly run() {
        if (s_.empty()) fail("empty polynomial");
        LaurentPoly out(f_);
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [n, c] = term();
            out.add_term(n, negative ? -c : c);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::parse_error, "cannot parse Laurent polynomial '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::pair<std::int64_t, Scalar> term() {
        Scalar c = Scalar::one(f_);
        bool have_coeff = false;
        std::string num = digits();
        if (!num.empty()) {
            have_coeff = true;
            std::string text = num;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("missing denominator");
                text += "/" + den;
            }
            c = Scalar::parse(text, f_);
        }
        if (pos_ < s_.size() && s_[pos_] == '*') {
            if (!have_coeff) fail("'*' without coefficient");
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] != 't') fail("expected 't' after '*'");
        }
        if (pos_ < s_.size() && s_[pos_] == 't') {
            ++pos_;
            std::int64_t n = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                bool neg = false;
                if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
                std::string e = digits();
                if (e.empty()) fail("missing exponent");
                n = std::stoll(e);
                if (neg) n = -n;
            }
            return {n, c};
        }
        if (!have_coeff) fail("expected a coefficient or 't'");
        return {0, c};
    }

    std::string s_;
    Field f_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, Field f) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return TermParser(std::move(s), f).run();
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [n, c] : terms_) {
        std::string v = c.value_string();
        bool neg = field_.is_rational() && v.front() == '-';
        if (neg) v.erase(0, 1);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool unit = v == "1";
        if (n == 0) {
            out += v;
        } else {
            if (!unit) out += v + "*";
            out += "t";
            if (n != 1) out += "^" + std::to_string(n);
        }
    }
    if (field_.is_prime()) out = "(" + out + ") mod " + std::to_string(field_.modulus());
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

}  // namespace tateops
