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

#ifndef TATEOPS_LIE_HPP
#define TATEOPS_LIE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tateops/cocycle.hpp"
#include "tateops/laurent.hpp"
#include "tateops/op.hpp"

namespace tateops {

/// A finite-dimensional Lie algebra g given by structure constants [x_i, x_j] = sum_k c^k_ij x_k.
class LieAlgebraData {
public:
    using Vector = std::vector<Scalar>;

    /// constants[i][j] is the coordinate vector of [x_i, x_j]. Antisymmetry and the Jacobi identity
    /// are checked exactly; violations throw precondition.
    LieAlgebraData(Field f, std::vector<std::string> labels, std::vector<std::vector<Vector>> constants);

    /// sl_2 with basis (e, h, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h.
    static LieAlgebraData sl2(Field f = Field{});

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t index_of(std::string_view label) const;
    const Scalar& constant(std::size_t k, std::size_t i, std::size_t j) const { return c_[i][j][k]; }

    Vector basis_vector(std::size_t i) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    /// tr(ad x ad y).
    Scalar killing_form(const Vector& x, const Vector& y) const;

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> c_;
};

/// An r x r matrix of level-1 operators: an endomorphism of k((t))^r.
class BlockOp {
public:
    BlockOp(Field f, std::size_t r);

    static BlockOp identity(Field f, std::size_t r);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return r_; }
    const Op& block(std::size_t k, std::size_t l) const { return blocks_[k * r_ + l]; }
    Op& block(std::size_t k, std::size_t l) { return blocks_[k * r_ + l]; }

    BlockOp& operator+=(const BlockOp& rhs);
    BlockOp& operator-=(const BlockOp& rhs);
    BlockOp scaled(const Scalar& c) const;
    friend BlockOp operator+(BlockOp a, const BlockOp& b) { return a += b; }
    friend BlockOp operator-(BlockOp a, const BlockOp& b) { return a -= b; }
    friend BlockOp operator*(const BlockOp& a, const BlockOp& b);
    friend bool operator==(const BlockOp&, const BlockOp&) = default;

    std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& v) const;

    /// Blockwise corner with the diagonal projection P+ ⊗ 1.
    BlockOp corner(Corner q) const;
    /// Sum of traces of the diagonal blocks.
    Scalar trace() const;

private:
    void check_compatible(const BlockOp& rhs) const;

    Field field_;
    std::size_t r_;
    std::vector<Op> blocks_;
};

BlockOp commutator(const BlockOp& a, const BlockOp& b);

/// ad(x_label ⊗ t^m) on g((t)) = k((t))^r: block (k, l) is c^k_{x,l} shift(m).
BlockOp ad_block(std::string_view label, std::int64_t m, const LieAlgebraData& lie);
BlockOp ad_block(const LieAlgebraData::Vector& x, std::int64_t m, const LieAlgebraData& lie);

/// Tate cocycle of block operators, τ(A_{+-} B_{-+} - B_{+-} A_{-+}) with the block trace.
Scalar block_cocycle(const BlockOp& a, const BlockOp& b);

}  // namespace tateops

#endif
