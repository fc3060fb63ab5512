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

#include "tateops/lie.hpp"

#include "tateops/trace.hpp"

namespace tateops {

LieAlgebraData::LieAlgebraData(Field f, std::vector<std::string> labels, std::vector<std::vector<Vector>> constants)
    : field_(f), labels_(std::move(labels)), c_(std::move(constants)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw Error(ErrorCode::precondition, "Lie algebra of dimension 0");
    if (c_.size() != r) throw Error(ErrorCode::dimension_mismatch, "structure constants do not match the basis size");
    for (auto& row : c_) {
        if (row.size() != r) throw Error(ErrorCode::dimension_mismatch, "structure constants do not match the basis size");
        for (auto& v : row) {
            if (v.size() != r) throw Error(ErrorCode::dimension_mismatch, "structure constants do not match the basis size");
            for (auto& s : v)
                if (s.field() != f) throw Error(ErrorCode::field_mismatch, "structure constant over another field");
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (c_[i][j][k] != -c_[j][i][k])
                    throw Error(ErrorCode::precondition, "structure constants are not antisymmetric at [" + labels_[i] + ", " +
                                                             labels_[j] + "]");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                auto x = basis_vector(i), y = basis_vector(j), z = basis_vector(k);
                Vector sum = bracket(x, bracket(y, z));
                Vector b = bracket(y, bracket(z, x));
                Vector c = bracket(z, bracket(x, y));
                for (std::size_t q = 0; q < r; ++q)
                    if (!(sum[q] + b[q] + c[q]).is_zero())
                        throw Error(ErrorCode::precondition, "Jacobi identity fails for (" + labels_[i] + ", " + labels_[j] +
                                                                 ", " + labels_[k] + ")");
            }
}

LieAlgebraData LieAlgebraData::sl2(Field f) {
    auto s = [&](long v) { return Scalar(f, v); };
    // basis order e, h, f
    std::vector<std::vector<Vector>> c(3, std::vector<Vector>(3, Vector(3, s(0))));
    c[1][0] = {s(2), s(0), s(0)};   // [h, e] = 2e
    c[0][1] = {s(-2), s(0), s(0)};
    c[1][2] = {s(0), s(0), s(-2)};  // [h, f] = -2f
    c[2][1] = {s(0), s(0), s(2)};
    c[0][2] = {s(0), s(1), s(0)};   // [e, f] = h
    c[2][0] = {s(0), s(-1), s(0)};
    return LieAlgebraData(f, {"e", "h", "f"}, std::move(c));
}

std::size_t LieAlgebraData::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw Error(ErrorCode::invalid_label, "no basis element '" + std::string(label) + "'");
}

LieAlgebraData::Vector LieAlgebraData::basis_vector(std::size_t i) const {
    Vector v(dim(), Scalar::zero(field_));
    v.at(i) = Scalar::one(field_);
    return v;
}

LieAlgebraData::Vector LieAlgebraData::bracket(const Vector& x, const Vector& y) const {
    const std::size_t r = dim();
    if (x.size() != r || y.size() != r) throw Error(ErrorCode::dimension_mismatch, "coordinate vector of wrong size");
    Vector out(r, Scalar::zero(field_));
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < r; ++k) out[k] += w * c_[i][j][k];
        }
    }
    return out;
}

Scalar LieAlgebraData::killing_form(const Vector& x, const Vector& y) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t l = 0; l < dim(); ++l) {
        Vector img = bracket(x, bracket(y, basis_vector(l)));
        acc += img[l];
    }
    return acc;
}

BlockOp::BlockOp(Field f, std::size_t r) : field_(f), r_(r), blocks_(r * r, Op::zero(f, 1)) {}

BlockOp BlockOp::identity(Field f, std::size_t r) {
    BlockOp out(f, r);
    for (std::size_t k = 0; k < r; ++k) out.block(k, k) = Op::identity(f, 1);
    return out;
}

void BlockOp::check_compatible(const BlockOp& rhs) const {
    if (r_ != rhs.r_) throw Error(ErrorCode::dimension_mismatch, "block operators of different sizes");
    if (field_ != rhs.field_) throw Error(ErrorCode::field_mismatch, "block operators over different fields");
}

BlockOp& BlockOp::operator+=(const BlockOp& rhs) {
    check_compatible(rhs);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += rhs.blocks_[k];
    return *this;
}

BlockOp& BlockOp::operator-=(const BlockOp& rhs) {
    check_compatible(rhs);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= rhs.blocks_[k];
    return *this;
}

BlockOp BlockOp::scaled(const Scalar& c) const {
    BlockOp out = *this;
    for (auto& b : out.blocks_) b = b.scaled(c);
    return out;
}

BlockOp operator*(const BlockOp& a, const BlockOp& b) {
    a.check_compatible(b);
    BlockOp out(a.field_, a.r_);
    for (std::size_t k = 0; k < a.r_; ++k)
        for (std::size_t l = 0; l < a.r_; ++l)
            for (std::size_t q = 0; q < a.r_; ++q) {
                const Op& x = a.block(k, q);
                const Op& y = b.block(q, l);
                if (!x.is_zero() && !y.is_zero()) out.block(k, l) += x * y;
            }
    return out;
}

std::vector<LaurentPoly> BlockOp::apply(const std::vector<LaurentPoly>& v) const {
    if (v.size() != r_) throw Error(ErrorCode::dimension_mismatch, "vector of wrong size");
    std::vector<LaurentPoly> out(r_, LaurentPoly(field_));
    for (std::size_t k = 0; k < r_; ++k)
        for (std::size_t l = 0; l < r_; ++l) out[k] += block(k, l).apply(v[l]);
    return out;
}

BlockOp BlockOp::corner(Corner q) const {
    BlockOp out(field_, r_);
    for (std::size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] = tateops::corner(blocks_[k], q);
    return out;
}

Scalar BlockOp::trace() const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t k = 0; k < r_; ++k) acc += tateops::trace(block(k, k));
    return acc;
}

BlockOp commutator(const BlockOp& a, const BlockOp& b) { return a * b - b * a; }

BlockOp ad_block(const LieAlgebraData::Vector& x, std::int64_t m, const LieAlgebraData& lie) {
    const std::size_t r = lie.dim();
    if (x.size() != r) throw Error(ErrorCode::dimension_mismatch, "coordinate vector of wrong size");
    BlockOp out(lie.field(), r);
    Op shift = Op::shift(lie.field(), m, 1);
    for (std::size_t l = 0; l < r; ++l) {
        auto image = lie.bracket(x, lie.basis_vector(l));
        for (std::size_t k = 0; k < r; ++k)
            if (!image[k].is_zero()) out.block(k, l) = shift.scaled(image[k]);
    }
    return out;
}

BlockOp ad_block(std::string_view label, std::int64_t m, const LieAlgebraData& lie) {
    return ad_block(lie.basis_vector(lie.index_of(label)), m, lie);
}

Scalar block_cocycle(const BlockOp& a, const BlockOp& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "block operators of different sizes");
    BlockOp first = a.corner(Corner::pm) * b.corner(Corner::mp);
    BlockOp second = b.corner(Corner::pm) * a.corner(Corner::mp);
    return first.trace() - second.trace();
}

}  // namespace tateops
