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

#include "tateops/op.hpp"

#include <algorithm>
#include <sstream>

namespace tateops {

// ---------------------------------------------------------------------------------------------
// Entry

Entry::Entry(Op op) : v_(std::make_shared<const Op>(std::move(op))) {}

Entry Entry::zero(Field f, int level) {
    if (level == 0) return Scalar::zero(f);
    return Entry(Op::zero(f, level));
}

Entry Entry::one(Field f, int level) {
    if (level == 0) return Scalar::one(f);
    return Entry(Op::identity(f, level));
}

int Entry::level() const noexcept {
    if (auto* p = std::get_if<std::shared_ptr<const Op>>(&v_)) return (*p)->level();
    return 0;
}

Field Entry::field() const noexcept {
    if (auto* p = std::get_if<std::shared_ptr<const Op>>(&v_)) return (*p)->field();
    return std::get<Scalar>(v_).field();
}

const Scalar& Entry::scalar() const {
    if (!is_scalar()) throw Error(ErrorCode::level_mismatch, "entry is an operator, not a scalar");
    return std::get<Scalar>(v_);
}

const Op& Entry::op() const {
    if (is_scalar()) throw Error(ErrorCode::level_mismatch, "entry is a scalar, not an operator");
    return *std::get<std::shared_ptr<const Op>>(v_);
}

bool Entry::is_zero() const noexcept {
    if (auto* p = std::get_if<std::shared_ptr<const Op>>(&v_)) return (*p)->is_zero();
    return std::get<Scalar>(v_).is_zero();
}

namespace {

void check_entry_levels(const Entry& a, const Entry& b) {
    if (a.level() != b.level())
        throw Error(ErrorCode::level_mismatch,
                    "entries of levels " + std::to_string(a.level()) + " and " + std::to_string(b.level()));
}

}  // namespace

Entry Entry::operator-() const {
    if (is_scalar()) return -scalar();
    return Entry(-op());
}

Entry& Entry::operator+=(const Entry& rhs) {
    check_entry_levels(*this, rhs);
    if (is_scalar())
        v_ = scalar() + rhs.scalar();
    else if (rhs.is_zero())
        return *this;
    else if (is_zero())
        v_ = rhs.v_;
    else
        v_ = std::make_shared<const Op>(op() + rhs.op());
    return *this;
}

Entry& Entry::operator-=(const Entry& rhs) {
    check_entry_levels(*this, rhs);
    if (is_scalar())
        v_ = scalar() - rhs.scalar();
    else if (!rhs.is_zero())
        v_ = std::make_shared<const Op>(op() - rhs.op());
    return *this;
}

Entry Entry::scaled(const Scalar& c) const {
    if (is_scalar()) return c * scalar();
    return Entry(op().scaled(c));
}

Entry operator*(const Entry& a, const Entry& b) {
    check_entry_levels(a, b);
    if (a.is_scalar()) return a.scalar() * b.scalar();
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return Entry(a.op() * b.op());
}

bool operator==(const Entry& a, const Entry& b) noexcept {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_scalar()) return std::get<Scalar>(a.v_) == std::get<Scalar>(b.v_);
    auto& pa = std::get<std::shared_ptr<const Op>>(a.v_);
    auto& pb = std::get<std::shared_ptr<const Op>>(b.v_);
    return pa == pb || *pa == *pb;
}

std::string Entry::to_string() const {
    if (is_scalar()) return scalar().to_string();
    return op().to_string();
}

// ---------------------------------------------------------------------------------------------
// EvSeq

EvSeq::EvSeq(Entry left, Entry right, std::int64_t start, std::vector<Entry> window)
    : left_(std::move(left)), right_(std::move(right)), start_(start), window_(std::move(window)) {
    check_entry_levels(left_, right_);
    for (auto& e : window_) check_entry_levels(left_, e);
    trim();
}

EvSeq EvSeq::checked(Entry left, Entry right, std::int64_t start, std::vector<Entry> window) {
    if (!window.empty() && (window.front() == left || window.back() == right))
        throw Error(ErrorCode::malformed, "non-canonical window: it must not begin with the left limit nor end with the right limit");
    return EvSeq(std::move(left), std::move(right), start, std::move(window));
}

void EvSeq::trim() {
    std::size_t lead = 0;
    while (lead < window_.size() && window_[lead] == left_) ++lead;
    if (lead) {
        window_.erase(window_.begin(), window_.begin() + static_cast<std::ptrdiff_t>(lead));
        start_ += static_cast<std::int64_t>(lead);
    }
    while (!window_.empty() && window_.back() == right_) window_.pop_back();
    if (window_.empty() && left_ == right_) start_ = 0;
}

const Entry& EvSeq::at(std::int64_t j) const {
    if (j < start_) return left_;
    if (j >= end()) return right_;
    return window_[static_cast<std::size_t>(j - start_)];
}

EvSeq EvSeq::shifted(std::int64_t k) const {
    if (is_constant()) return *this;
    EvSeq out = *this;
    out.start_ = start_ - k;
    return out;
}

EvSeq EvSeq::reflected(std::int64_t c) const {
    if (is_constant()) return *this;
    std::vector<Entry> w(window_.rbegin(), window_.rend());
    return EvSeq(right_, left_, c - end() + 1, std::move(w));
}

namespace {

// Window [lo, hi) that covers every transition of the given non-constant sequences.
struct Range {
    bool any = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    void cover(std::int64_t a, std::int64_t b) {
        if (!any) {
            lo = a;
            hi = b;
            any = true;
        } else {
            lo = std::min(lo, a);
            hi = std::max(hi, b);
        }
    }
    void cover(const EvSeq& s) {
        if (!s.is_constant()) cover(s.start(), s.end());
    }
};

template <class F>
EvSeq combine(const EvSeq& a, const EvSeq& b, F f) {
    Range r;
    r.cover(a);
    r.cover(b);
    std::vector<Entry> w;
    if (r.any) {
        w.reserve(static_cast<std::size_t>(r.hi - r.lo));
        for (std::int64_t j = r.lo; j < r.hi; ++j) w.push_back(f(a.at(j), b.at(j)));
    }
    return EvSeq(f(a.left(), b.left()), f(a.right(), b.right()), r.any ? r.lo : 0, std::move(w));
}

}  // namespace

EvSeq operator+(const EvSeq& a, const EvSeq& b) {
    return combine(a, b, [](const Entry& x, const Entry& y) { return x + y; });
}

EvSeq operator-(const EvSeq& a, const EvSeq& b) {
    return combine(a, b, [](const Entry& x, const Entry& y) { return x - y; });
}

EvSeq pointwise_product(const EvSeq& a, const EvSeq& b) {
    return combine(a, b, [](const Entry& x, const Entry& y) { return x * y; });
}

EvSeq EvSeq::with_value(std::int64_t j, const Entry& e) const {
    Range r;
    r.cover(*this);
    r.cover(j, j + 1);
    std::vector<Entry> w;
    for (std::int64_t k = r.lo; k < r.hi; ++k) w.push_back(k == j ? e : at(k));
    return EvSeq(left_, right_, r.lo, std::move(w));
}

EvSeq EvSeq::with_added(const std::map<std::int64_t, Entry>& deltas) const {
    if (deltas.empty()) return *this;
    Range r;
    r.cover(*this);
    r.cover(deltas.begin()->first, deltas.rbegin()->first + 1);
    std::vector<Entry> w;
    w.reserve(static_cast<std::size_t>(r.hi - r.lo));
    for (std::int64_t k = r.lo; k < r.hi; ++k) {
        auto it = deltas.find(k);
        w.push_back(it == deltas.end() ? at(k) : at(k) + it->second);
    }
    return EvSeq(left_, right_, r.lo, std::move(w));
}

EvSeq EvSeq::scaled(const Scalar& c) const {
    std::vector<Entry> w;
    w.reserve(window_.size());
    for (auto& e : window_) w.push_back(e.scaled(c));
    return EvSeq(left_.scaled(c), right_.scaled(c), start_, std::move(w));
}

std::optional<std::int64_t> EvSeq::first_nonzero_from(std::int64_t from) const {
    if (from < start_ && has_left_tail()) return from;
    for (std::int64_t j = std::max(from, start_); j < end(); ++j)
        if (!at(j).is_zero()) return j;
    if (has_right_tail()) return std::max(from, end());
    return std::nullopt;
}

std::optional<std::int64_t> EvSeq::last_nonzero_below(std::int64_t below) const {
    if (below > end() && has_right_tail()) return below - 1;
    for (std::int64_t j = std::min(below, end()) - 1; j >= start_; --j)
        if (!at(j).is_zero()) return j;
    if (has_left_tail()) return std::min(below, start_) - 1;
    return std::nullopt;
}

std::optional<std::int64_t> EvSeq::first_nonzero() const {
    if (has_left_tail()) throw Error(ErrorCode::precondition, "sequence has a nonzero left tail");
    for (std::size_t k = 0; k < window_.size(); ++k)
        if (!window_[k].is_zero()) return start_ + static_cast<std::int64_t>(k);
    if (has_right_tail()) return end();
    return std::nullopt;
}

std::optional<std::int64_t> EvSeq::last_nonzero() const {
    if (has_right_tail()) throw Error(ErrorCode::precondition, "sequence has a nonzero right tail");
    for (std::size_t k = window_.size(); k-- > 0;)
        if (!window_[k].is_zero()) return start_ + static_cast<std::int64_t>(k);
    if (has_left_tail()) return start_ - 1;
    return std::nullopt;
}

// ---------------------------------------------------------------------------------------------
// Op

struct Op::Raw {
    std::map<LineKey, EvSeq> lines;
    std::vector<std::pair<Cell, Entry>> cells;

    void add_line(const LineKey& k, EvSeq s) {
        auto it = lines.find(k);
        if (it == lines.end())
            lines.emplace(k, std::move(s));
        else
            it->second = it->second + s;
    }
    void add_cell(const Cell& c, Entry e) {
        if (!e.is_zero()) cells.emplace_back(c, std::move(e));
    }
};

Op::Op(Field f, int level) : field_(f), level_(level) {
    if (level < 1) throw Error(ErrorCode::level_mismatch, "operator level must be at least 1");
}

Op Op::normalize(Field f, int level, Raw raw) {
    Op out(f, level);

    // Lines with two zero limits are finite: dissolve them into cells.
    for (auto& [key, seq] : raw.lines) {
        if (!seq.has_left_tail() && !seq.has_right_tail()) {
            for (std::size_t k = 0; k < seq.window().size(); ++k) {
                std::int64_t j = seq.start() + static_cast<std::int64_t>(k);
                raw.add_cell({key.row_of(j), j}, seq.window()[k]);
            }
            continue;
        }
        if (!key.is_diagonal() && seq.has_right_tail())
            throw Error(ErrorCode::malformed, "anti-diagonal line " + std::to_string(key.offset) +
                                                  " has a nonzero right limit; such an operator is not continuous on k((t))");
        out.lines_.emplace(key, std::move(seq));
    }

    // Fold cells into present lines, diagonal first.
    std::map<LineKey, std::map<std::int64_t, Entry>> adds;
    for (auto& [cell, e] : raw.cells) {
        auto [i, j] = cell;
        LineKey target = LineKey::diagonal(i - j);
        if (!out.lines_.count(target)) target = LineKey::antidiagonal(i + j);
        if (out.lines_.count(target)) {
            auto [it, ins] = adds[target].try_emplace(j, e);
            if (!ins) it->second += e;
            continue;
        }
        auto [it, ins] = out.correction_.try_emplace(cell, e);
        if (!ins) it->second += e;
    }
    for (auto& [key, delta] : adds) {
        auto& seq = out.lines_.at(key);
        seq = seq.with_added(delta);
    }

    // A crossing cell belongs to the diagonal line.
    for (auto& [akey, aseq] : out.lines_) {
        if (akey.is_diagonal()) continue;
        for (auto& [dkey, dseq] : out.lines_) {
            if (!dkey.is_diagonal()) continue;
            std::int64_t diff = akey.offset - dkey.offset;
            if (diff & 1) continue;
            std::int64_t j = diff / 2;
            const Entry v = aseq.at(j);
            if (v.is_zero()) continue;
            aseq = aseq.with_value(j, out.zero_entry());
            dseq = dseq.with_added({{j, v}});
        }
    }

    std::erase_if(out.correction_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Op Op::from_parts(Field f, int level, const std::vector<std::pair<LineKey, EvSeq>>& lines,
                  const std::vector<std::pair<Cell, Entry>>& correction) {
    auto check = [&](const Entry& e) {
        if (e.level() != level - 1)
            throw Error(ErrorCode::level_mismatch, "entry of level " + std::to_string(e.level()) + " in a level-" +
                                                       std::to_string(level) + " operator");
        if (e.field() != f)
            throw Error(ErrorCode::field_mismatch, "entry over " + e.field().to_string() + " in an operator over " + f.to_string());
    };
    Raw raw;
    for (auto& [key, seq] : lines) {
        check(seq.left());
        check(seq.right());
        for (auto& e : seq.window()) check(e);
        raw.add_line(key, seq);
    }
    for (auto& [cell, e] : correction) {
        check(e);
        raw.add_cell(cell, e);
    }
    return normalize(f, level, std::move(raw));
}

Op Op::line(Field f, int level, LineKey key, const EvSeq& seq) { return from_parts(f, level, {{key, seq}}, {}); }

Op Op::diagonal_constant(std::int64_t d, const Entry& c) {
    return line(c.field(), c.level() + 1, LineKey::diagonal(d), EvSeq::constant(c));
}

Op Op::identity(Field f, int level) { return diagonal_constant(0, Entry::one(f, level - 1)); }

Op Op::shift(Field f, std::int64_t k, int level) { return diagonal_constant(k, Entry::one(f, level - 1)); }

Op Op::mul(const LaurentPoly& p) {
    std::vector<std::pair<LineKey, EvSeq>> lines;
    for (auto& [n, c] : p.terms()) lines.emplace_back(LineKey::diagonal(n), EvSeq::constant(c));
    return from_parts(p.field(), 1, lines, {});
}

Op Op::proj_plus(Field f, std::int64_t m, int level) {
    return line(f, level, LineKey::diagonal(0), EvSeq::step(m, Entry::zero(f, level - 1), Entry::one(f, level - 1)));
}

Op Op::proj_minus(Field f, std::int64_t m, int level) {
    return line(f, level, LineKey::diagonal(0), EvSeq::step(m, Entry::one(f, level - 1), Entry::zero(f, level - 1)));
}

Op Op::finite(Field f, int level, const Correction& cells) {
    return from_parts(f, level, {}, {cells.begin(), cells.end()});
}

Op Op::finite(Field f, const std::map<Cell, Scalar>& cells) {
    std::vector<std::pair<Cell, Entry>> raw;
    for (auto& [c, v] : cells) raw.emplace_back(c, Entry(v));
    return from_parts(f, 1, {}, raw);
}

Op Op::ind_to_pro_flip(Field f, int level) {
    return line(f, level, LineKey::antidiagonal(-1), EvSeq::step(0, Entry::one(f, level - 1), Entry::zero(f, level - 1)));
}

Entry Op::entry(std::int64_t row, std::int64_t col) const {
    Entry e = zero_entry();
    if (auto it = lines_.find(LineKey::diagonal(row - col)); it != lines_.end()) e += it->second.at(col);
    if (auto it = lines_.find(LineKey::antidiagonal(row + col)); it != lines_.end()) e += it->second.at(col);
    if (auto it = correction_.find({row, col}); it != correction_.end()) e += it->second;
    return e;
}

void Op::check_compatible(const Op& rhs) const {
    if (level_ != rhs.level_)
        throw Error(ErrorCode::level_mismatch,
                    "operators of levels " + std::to_string(level_) + " and " + std::to_string(rhs.level_));
    if (field_ != rhs.field_)
        throw Error(ErrorCode::field_mismatch, "operators over " + field_.to_string() + " and " + rhs.field_.to_string());
}

Op Op::operator-() const {
    Op out(field_, level_);
    for (auto& [k, s] : lines_) out.lines_.emplace(k, s.scaled(Scalar(field_, -1L)));
    for (auto& [c, e] : correction_) out.correction_.emplace(c, -e);
    return out;
}

Op& Op::operator+=(const Op& rhs) {
    check_compatible(rhs);
    if (rhs.is_zero()) return *this;
    Raw raw;
    for (auto& [k, s] : lines_) raw.add_line(k, s);
    for (auto& [k, s] : rhs.lines_) raw.add_line(k, s);
    for (auto& [c, e] : correction_) raw.add_cell(c, e);
    for (auto& [c, e] : rhs.correction_) raw.add_cell(c, e);
    return *this = normalize(field_, level_, std::move(raw));
}

Op& Op::operator-=(const Op& rhs) { return *this += -rhs; }

Op Op::scaled(const Scalar& c) const {
    if (c.field() != field_) throw Error(ErrorCode::field_mismatch, "scaling by a scalar of another field");
    if (c.is_zero()) return Op(field_, level_);
    Op out(field_, level_);
    for (auto& [k, s] : lines_) out.lines_.emplace(k, s.scaled(c));
    for (auto& [cell, e] : correction_) out.correction_.emplace(cell, e.scaled(c));
    return out;
}

Op operator*(const Op& a, const Op& b) {
    a.check_compatible(b);
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    Op::Raw raw;

    for (auto& [ka, sa] : a.lines_) {
        for (auto& [kb, sb] : b.lines_) {
            if (ka.is_diagonal() && kb.is_diagonal())
                raw.add_line(LineKey::diagonal(ka.offset + kb.offset), pointwise_product(sa.shifted(kb.offset), sb));
            else if (ka.is_diagonal())
                raw.add_line(LineKey::antidiagonal(kb.offset + ka.offset), pointwise_product(sa.reflected(kb.offset), sb));
            else if (kb.is_diagonal())
                raw.add_line(LineKey::antidiagonal(ka.offset - kb.offset), pointwise_product(sa.shifted(kb.offset), sb));
            else
                raw.add_line(LineKey::diagonal(ka.offset - kb.offset), pointwise_product(sa.reflected(kb.offset), sb));
        }
        for (auto& [cell, v] : b.correction_) {
            auto [k, j] = cell;
            raw.add_cell({ka.row_of(k), j}, sa.at(k) * v);
        }
    }

    std::map<std::int64_t, std::vector<std::pair<std::int64_t, const Entry*>>> b_rows;
    for (auto& [cell, v] : b.correction_) b_rows[cell.first].emplace_back(cell.second, &v);

    for (auto& [cell, u] : a.correction_) {
        auto [i, k] = cell;
        for (auto& [kb, sb] : b.lines_) {
            std::int64_t j = kb.is_diagonal() ? k - kb.offset : kb.offset - k;
            raw.add_cell({i, j}, u * sb.at(j));
        }
        if (auto it = b_rows.find(k); it != b_rows.end())
            for (auto& [j, v] : it->second) raw.add_cell({i, j}, u * *v);
    }
    return Op::normalize(a.field_, a.level_, std::move(raw));
}

bool operator==(const Op& a, const Op& b) noexcept {
    return a.field_ == b.field_ && a.level_ == b.level_ && a.lines_ == b.lines_ && a.correction_ == b.correction_;
}

LaurentPoly Op::apply(const LaurentPoly& v) const {
    if (level_ != 1) throw Error(ErrorCode::level_mismatch, "apply is defined on level-1 operators");
    if (v.field() != field_) throw Error(ErrorCode::field_mismatch, "vector over " + v.field().to_string());
    LaurentPoly out(field_);
    for (auto& [j, x] : v.terms()) {
        for (auto& [key, seq] : lines_) out.add_term(key.row_of(j), seq.at(j).scalar() * x);
    }
    for (auto& [cell, e] : correction_) {
        auto x = v.terms().find(cell.second);
        if (x != v.terms().end()) out.add_term(cell.first, e.scalar() * x->second);
    }
    return out;
}

std::string Op::to_string() const {
    std::ostringstream os;
    os << "Op[L" << level_ << "]{";
    bool first = true;
    for (auto& [k, s] : lines_) {
        os << (first ? "" : ", ") << (k.is_diagonal() ? "D(" : "A(") << k.offset << "): " << s.left().to_string() << " | "
           << s.start() << ":[";
        for (std::size_t i = 0; i < s.window().size(); ++i) os << (i ? " " : "") << s.window()[i].to_string();
        os << "] | " << s.right().to_string();
        first = false;
    }
    for (auto& [c, e] : correction_) {
        os << (first ? "" : ", ") << "(" << c.first << "," << c.second << ")=" << e.to_string();
        first = false;
    }
    os << "}";
    return os.str();
}

Op commutator(const Op& a, const Op& b) { return a * b - b * a; }

Op op_arith(const Op& a, const Op& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::compose: return a * b;
        case ArithKind::commutator: return commutator(a, b);
    }
    throw Error(ErrorCode::precondition, "unknown arithmetic kind");
}

}  // namespace tateops
