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

#ifndef TATEOPS_OP_HPP
#define TATEOPS_OP_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tateops/laurent.hpp"
#include "tateops/scalar.hpp"

namespace tateops {

class Op;

/// A matrix entry of a level-n operator: a Scalar when n = 1, a level-(n-1) operator otherwise.
///
/// Entries form a (noncommutative for n > 1) ring; operator* is composition, left factor first.
class Entry {
public:
    Entry() = default;
    Entry(Scalar s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    Entry(Op op);                           // NOLINT(google-explicit-constructor)

    static Entry zero(Field f, int level);
    static Entry one(Field f, int level);

    /// 0 for scalars, otherwise the operator level.
    int level() const noexcept;
    Field field() const noexcept;
    bool is_scalar() const noexcept { return std::holds_alternative<Scalar>(v_); }
    const Scalar& scalar() const;
    const Op& op() const;
    bool is_zero() const noexcept;

    Entry operator-() const;
    Entry& operator+=(const Entry& rhs);
    Entry& operator-=(const Entry& rhs);
    Entry scaled(const Scalar& c) const;

    friend Entry operator+(Entry a, const Entry& b) { return a += b; }
    friend Entry operator-(Entry a, const Entry& b) { return a -= b; }
    friend Entry operator*(const Entry& a, const Entry& b);
    friend bool operator==(const Entry& a, const Entry& b) noexcept;

    std::string to_string() const;

private:
    std::variant<Scalar, std::shared_ptr<const Op>> v_;
};

/// A doubly infinite sequence of entries that is constant far to the left and far to the right.
///
/// s(j) = left for j < start, window[j - start] for start <= j < end, right for j >= end. The
/// window is kept minimal: it never begins with left nor ends with right. When the window is
/// empty and left == right, start is 0.
class EvSeq {
public:
    EvSeq() = default;
    /// Builds and trims to canonical form.
    EvSeq(Entry left, Entry right, std::int64_t start, std::vector<Entry> window);

    /// Rejects a non-canonical window with ErrorCode::malformed instead of trimming it.
    static EvSeq checked(Entry left, Entry right, std::int64_t start, std::vector<Entry> window);
    static EvSeq constant(const Entry& c) { return EvSeq(c, c, 0, {}); }
    /// before for j < at, after for j >= at.
    static EvSeq step(std::int64_t at, const Entry& before, const Entry& after) { return EvSeq(before, after, at, {}); }

    const Entry& left() const noexcept { return left_; }
    const Entry& right() const noexcept { return right_; }
    std::int64_t start() const noexcept { return start_; }
    std::int64_t end() const noexcept { return start_ + static_cast<std::int64_t>(window_.size()); }
    const std::vector<Entry>& window() const noexcept { return window_; }
    const Entry& at(std::int64_t j) const;

    bool is_zero() const noexcept { return window_.empty() && left_.is_zero() && right_.is_zero(); }
    bool is_constant() const noexcept { return window_.empty() && left_ == right_; }
    bool has_left_tail() const noexcept { return !left_.is_zero(); }
    bool has_right_tail() const noexcept { return !right_.is_zero(); }

    /// r(j) = s(j + k).
    EvSeq shifted(std::int64_t k) const;
    /// r(j) = s(c - j); the tails swap sides.
    EvSeq reflected(std::int64_t c) const;
    EvSeq with_value(std::int64_t j, const Entry& e) const;
    EvSeq with_added(const std::map<std::int64_t, Entry>& deltas) const;
    EvSeq scaled(const Scalar& c) const;

    friend EvSeq operator+(const EvSeq& a, const EvSeq& b);
    friend EvSeq operator-(const EvSeq& a, const EvSeq& b);
    /// Pointwise product a(j) * b(j).
    friend EvSeq pointwise_product(const EvSeq& a, const EvSeq& b);
    friend bool operator==(const EvSeq&, const EvSeq&) = default;

    /// Least j >= from with s(j) != 0.
    std::optional<std::int64_t> first_nonzero_from(std::int64_t from) const;
    /// Greatest j < below with s(j) != 0.
    std::optional<std::int64_t> last_nonzero_below(std::int64_t below) const;
    /// Least nonzero index; requires no left tail.
    std::optional<std::int64_t> first_nonzero() const;
    /// Greatest nonzero index; requires no right tail.
    std::optional<std::int64_t> last_nonzero() const;

private:
    void trim();

    Entry left_;
    Entry right_;
    std::int64_t start_ = 0;
    std::vector<Entry> window_;
};

enum class Orientation : std::uint8_t { diagonal, antidiagonal };

/// A Diagonal(d) line puts seq(j) at cell (j + d, j); an AntiDiagonal(c) line puts seq(j) at (c - j, j).
struct LineKey {
    Orientation orientation = Orientation::diagonal;
    std::int64_t offset = 0;

    static LineKey diagonal(std::int64_t d) { return {Orientation::diagonal, d}; }
    static LineKey antidiagonal(std::int64_t c) { return {Orientation::antidiagonal, c}; }
    bool is_diagonal() const noexcept { return orientation == Orientation::diagonal; }
    std::int64_t row_of(std::int64_t col) const noexcept { return is_diagonal() ? col + offset : offset - col; }

    friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

/// (row, col) of a matrix cell.
using Cell = std::pair<std::int64_t, std::int64_t>;

/// Level-n operator on k((t_1))...((t_n)), presented as finitely many lines plus a finite correction.
///
/// Rows and columns index the outermost variable. Entries are Scalars at level 1 and level-(n-1)
/// operators above. The presentation is canonical, so structural equality is equality of the
/// entry functions:
///   - a line is present iff at least one of its limits is nonzero;
///   - a correction cell never lies on a present line;
///   - an anti-diagonal line is zero where it crosses a present diagonal line (the value is kept
///     on the diagonal line);
///   - anti-diagonal lines have zero right limit, so every operator is continuous on k((t)).
class Op {
public:
    using Lines = std::map<LineKey, EvSeq>;
    using Correction = std::map<Cell, Entry>;

    /// The zero operator.
    explicit Op(Field f = Field{}, int level = 1);

    /// Normalizes arbitrary raw parts (duplicate keys and cells are summed).
    static Op from_parts(Field f, int level, const std::vector<std::pair<LineKey, EvSeq>>& lines,
                         const std::vector<std::pair<Cell, Entry>>& correction);

    static Op zero(Field f, int level = 1) { return Op(f, level); }
    static Op identity(Field f, int level = 1);
    /// Multiplication by f on k((t)); level 1.
    static Op mul(const LaurentPoly& f);
    /// t^j -> t^(j+k) in the outermost variable, identity inside.
    static Op shift(Field f, std::int64_t k, int level = 1);
    /// Keeps outer exponents >= m.
    static Op proj_plus(Field f, std::int64_t m = 0, int level = 1);
    /// Keeps outer exponents < m.
    static Op proj_minus(Field f, std::int64_t m = 0, int level = 1);
    static Op finite(Field f, int level, const Correction& cells);
    static Op finite(Field f, const std::map<Cell, Scalar>& cells);
    static Op line(Field f, int level, LineKey key, const EvSeq& seq);
    /// Diagonal(d) with constant entry c; the level is c.level() + 1.
    static Op diagonal_constant(std::int64_t d, const Entry& c);
    /// k[[t]] + t^-1 k[t^-1] -> itself, (a, b) -> (0, a) with a the polar part: t^j -> t^(-1-j) for j <= -1.
    static Op ind_to_pro_flip(Field f = Field{}, int level = 1);

    int level() const noexcept { return level_; }
    Field field() const noexcept { return field_; }
    const Lines& lines() const noexcept { return lines_; }
    const Correction& correction() const noexcept { return correction_; }
    bool is_zero() const noexcept { return lines_.empty() && correction_.empty(); }
    /// No lines at this level (finite support in the outer variable).
    bool is_outer_finite() const noexcept { return lines_.empty(); }

    Entry entry(std::int64_t row, std::int64_t col) const;
    Entry zero_entry() const { return Entry::zero(field_, level_ - 1); }

    Op operator-() const;
    Op& operator+=(const Op& rhs);
    Op& operator-=(const Op& rhs);
    Op scaled(const Scalar& c) const;

    friend Op operator+(Op a, const Op& b) { return a += b; }
    friend Op operator-(Op a, const Op& b) { return a -= b; }
    /// Composition a ∘ b (apply b first).
    friend Op operator*(const Op& a, const Op& b);
    friend bool operator==(const Op& a, const Op& b) noexcept;

    /// Image of a finite-support vector; level 1 only.
    LaurentPoly apply(const LaurentPoly& v) const;

    std::string to_string() const;

private:
    struct Raw;
    static Op normalize(Field f, int level, Raw raw);
    void check_compatible(const Op& rhs) const;

    Field field_;
    int level_ = 1;
    Lines lines_;
    Correction correction_;
};

Op commutator(const Op& a, const Op& b);

enum class ArithKind { add, sub, compose, commutator };
Op op_arith(const Op& a, const Op& b, ArithKind kind);

}  // namespace tateops

#endif
