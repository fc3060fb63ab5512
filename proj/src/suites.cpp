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

#include "tateops/suites.hpp"

#include <chrono>
#include <sstream>

#include "tateops/cocycle.hpp"
#include "tateops/counterexamples.hpp"
#include "tateops/grid.hpp"
#include "tateops/random.hpp"
#include "tateops/tate_n.hpp"
#include "tateops/trace.hpp"

namespace tateops {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t samples(const SuiteOptions& o, std::size_t full) { return o.quick ? std::max<std::size_t>(8, full / 8) : full; }

// Distinct sub-streams per criterion so that changing one suite leaves the others' samples alone.
std::uint64_t stream(const SuiteOptions& o, std::uint64_t tag) { return o.seed * 1000003ULL + tag; }

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

void tally(CriterionResult& r, std::size_t count, const std::vector<std::size_t>& failed, const char* what) {
    r.cases += count;
    r.failures += failed.size();
    if (!failed.empty()) {
        std::ostringstream s;
        if (!r.detail.empty()) s << "; ";
        s << what << ": " << failed.size() << " failed (first sample " << failed.front() << ")";
        r.detail += s.str();
    }
}

void tally_one(CriterionResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) {
        ++r.failures;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += what + " failed";
    }
}

}  // namespace

FormMeasure cocycle_form_measure(const LieAlgebraData& lie) {
    return [&lie](std::size_t x, std::size_t y) {
        return block_cocycle(ad_block(lie.basis_vector(x), 1, lie), ad_block(lie.basis_vector(y), -1, lie));
    };
}

CriterionResult criterion_residue(const SuiteOptions& o) {
    CriterionResult r{1, "residue suite", 0, 0, 0, 10, ""};
    Timer timer;
    const Field q;
    auto grid = residue_grid(q, 12, o.exec);
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        auto& c = grid[k];
        Scalar expect = c.m + c.n == 0 ? Scalar(q, static_cast<long>(c.n)) : Scalar::zero(q);
        if (!(c.value == c.oracle && c.oracle == expect)) bad.push_back(k);
    }
    tally(r, grid.size(), bad, "monomial grid");
    const std::size_t count = samples(o, 200);
    auto failed = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 1), k);
            auto f = random_laurent(rng, q, -8, 8, 6);
            auto g = random_laurent(rng, q, -8, 8, 6);
            return residue(f, g) == residue_oracle(f, g);
        },
        o.exec);
    tally(r, count, failed, "random pairs");
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_lie_cocycle(const SuiteOptions& o) {
    CriterionResult r{2, "Lie 2-cocycle identity", 0, 0, 0, 30, ""};
    Timer timer;
    const Field q;
    const std::size_t count = samples(o, 100);
    auto failed = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 2), k);
            Op a = random_generated_op(rng, q, 2);
            Op b = random_generated_op(rng, q, 2);
            Op d = random_generated_op(rng, q, 2);
            Scalar s = tate_cocycle(commutator(a, b), d) + tate_cocycle(commutator(b, d), a) +
                       tate_cocycle(commutator(d, a), b);
            return s.is_zero();
        },
        o.exec);
    tally(r, count, failed, "triples");
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_trace_independence(const SuiteOptions& o) {
    CriterionResult r{3, "trace independent of (N, N')", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    const std::size_t count = samples(o, 200);
    auto failed = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 3), k);
            Op a = random_op(rng, q, OpClass::trace_class, 1);
            auto base = trace_with_certificate(a);
            if (!(base.value == trace_oracle(a, oracle_half_width(a)))) return false;
            for (int e = 0; e < 5; ++e) {
                StandardLattice n{base.certificate.image.m - rng.uniform(0, 6)};
                StandardLattice np{base.certificate.killed.m + rng.uniform(0, 6)};
                if (!(trace_with_lattices(a, n, np).value == base.value)) return false;
            }
            return true;
        },
        o.exec);
    tally(r, count, failed, "trace-class samples");
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_trace_additivity(const SuiteOptions& o) {
    CriterionResult r{4, "trace additivity on t^m O", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    const std::size_t count = samples(o, 100);
    auto failed = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 4), k);
            const std::int64_t m = rng.uniform(-3, 3);
            Op raw = random_op(rng, q, OpClass::trace_class, 1);
            // Remove the block t^m O -> k((t))/t^m O so that t^m O is invariant.
            Op a = raw - Op::proj_minus(q, m) * raw * Op::proj_plus(q, m);
            auto rq = restrict_and_quotient(a, m);
            if (!rq.sub_ok) return false;
            Scalar total = trace(a);
            Scalar sub = trace(rq.restricted);
            Scalar quo = trace(rq.quotient);
            if (rq.quotient_window && !(matrix_trace(*rq.quotient_window) == quo)) return false;
            return total == sub + quo;
        },
        o.exec);
    tally(r, count, failed, "invariant-lattice samples");
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_strong_vanishing(const SuiteOptions& o) {
    CriterionResult r{5, "strong commutator vanishing", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    for (int level : {1, 2}) {
        const std::size_t count = samples(o, 200);
        auto failed = run_samples(
            count,
            [&](std::size_t k) {
                SampleRng rng(stream(o, 50 + static_cast<std::uint64_t>(level)), k);
                Op a = random_op(rng, q, OpClass::trace_class, level);
                Op b = random_op(rng, q, OpClass::any, level);
                return trace(a * b - b * a).is_zero();
            },
            o.exec);
        tally(r, count, failed, level == 1 ? "level 1" : "level 2");
    }
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_sliced(const SuiteOptions& o) {
    CriterionResult r{6, "sliced decomposition", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    const std::size_t count = samples(o, 200);
    auto level1 = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 61), k);
            Op a = random_op(rng, q, OpClass::any, 1);
            auto [p, m] = split_plus_minus(a);
            return is_bounded(p) && is_discrete(m) && p + m == a;
        },
        o.exec);
    tally(r, count, level1, "level 1");
    auto level2 = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 62), k);
            Op a = random_op(rng, q, OpClass::any, 2);
            for (int i = 1; i <= 2; ++i) {
                auto [p, m] = split_i(a, i);
                if (!(in_ideal(p, i, Sign::plus) && in_ideal(m, i, Sign::minus) && p + m == a)) return false;
            }
            return true;
        },
        o.exec);
    tally(r, count, level2, "level 2");
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_good_idempotents(const SuiteOptions& o) {
    CriterionResult r{7, "good idempotents at n = 2", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    auto p = good_idempotents(2, q);
    tally_one(r, p[0] * p[0] == p[0] && p[1] * p[1] == p[1], "idempotence");
    tally_one(r, p[0] * p[1] == p[1] * p[0], "commutation");
    const std::size_t count = samples(o, 100);
    const Op one = Op::identity(q, 2);
    auto failed = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 7), k);
            Op x = random_op(rng, q, OpClass::any, 2);
            for (int v = 1; v <= 2; ++v) {
                auto plus = cubical_membership(p[v - 1] * x);
                auto minus = cubical_membership((one - p[v - 1]) * x);
                if (!plus.in_plus(v, IndexOrder::variable) || !minus.in_minus(v, IndexOrder::variable)) return false;
            }
            return true;
        },
        o.exec);
    tally(r, count, failed, "sampled X");
    r.seconds = timer.seconds();
    return r;
}

Op level2_flip_witness(Field f) {
    Entry flip(Op::ind_to_pro_flip(f, 1));
    return Op::line(f, 2, LineKey::antidiagonal(-1), EvSeq::step(0, flip, Entry::zero(f, 1)));
}

CriterionResult criterion_word_factorization(const SuiteOptions& o) {
    CriterionResult r{8, "2^n word factorization", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    const std::size_t count = samples(o, 100);
    auto two = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 81), k);
            return word_factorization({random_op(rng, q, OpClass::trace_class, 1),
                                       random_op(rng, q, OpClass::trace_class, 1)})
                .finite_at_all_levels;
        },
        o.exec);
    tally(r, count, two, "two letters at level 1");
    auto four = run_samples(
        count,
        [&](std::size_t k) {
            SampleRng rng(stream(o, 82), k);
            std::vector<Op> word;
            for (int i = 0; i < 4; ++i) word.push_back(random_op(rng, q, OpClass::trace_class, 2));
            return word_factorization(word).finite_at_all_levels;
        },
        o.exec);
    tally(r, count, four, "four letters at level 2");

    Op w = level2_flip_witness(q);
    const bool letters_ok = is_trace_class(w) && !is_finite_all_levels(w);
    tally_one(r, letters_ok, "witness letters trace-class with infinite support");
    auto product = word_factorization({w, w});
    ++r.cases;
    if (product.finite_at_all_levels) {
        ++r.failures;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += "two-letter level-2 witness is finite at all levels (product " +
                    std::string(product.product.is_zero() ? "is zero" : "is nonzero") + ")";
    }
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_counterexamples(const SuiteOptions& o) {
    CriterionResult r{9, "counterexample suite", 0, 0, 0, 0, ""};
    Timer timer;
    const Field q;
    Op flip = Op::ind_to_pro_flip(q);
    auto m = ideal_membership(flip);
    tally_one(r, m.trace_class && !flip.is_outer_finite(), "flip trace-class with infinite support");
    tally_one(r, (flip * flip).is_zero(), "flip^2 = 0");
    for (std::uint64_t p : {2, 3, 5}) tally_one(r, check_not_sliced(p), "check_not_sliced(" + std::to_string(p) + ")");
    for (std::uint64_t p : {2, 5}) {
        for (auto& c : fpt_sliced_suite(p, samples(o, 100), stream(o, 90 + p))) {
            r.cases += c.cases;
            r.failures += c.failures;
            if (!c.passed()) r.detail += (r.detail.empty() ? "" : "; ") + c.name + " over F_" + std::to_string(p);
        }
    }
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_kacmoody(const SuiteOptions& o, const LieAlgebraData& lie, const FormMeasure& measure) {
    CriterionResult r{10, "Kac-Moody pattern", 0, 0, 0, 60, ""};
    Timer timer;
    const std::size_t dim = lie.dim();
    const Field f = lie.field();
    std::vector<Scalar> k(dim * dim);
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) k[x * dim + y] = measure(x, y);
    auto form = [&](const LieAlgebraData::Vector& u, const LieAlgebraData::Vector& v) {
        Scalar acc = Scalar::zero(f);
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y) acc += u[x] * v[y] * k[x * dim + y];
        return acc;
    };
    bool symmetric = true;
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) symmetric = symmetric && k[x * dim + y] == k[y * dim + x];
    tally_one(r, symmetric, "symmetry of K");
    bool invariant = true;
    for (std::size_t z = 0; z < dim; ++z)
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y) {
                auto bz = lie.basis_vector(z), bx = lie.basis_vector(x), by = lie.basis_vector(y);
                invariant = invariant && (form(lie.bracket(bz, bx), by) + form(bx, lie.bracket(bz, by))).is_zero();
            }
    tally_one(r, invariant, "invariance of K");
    if (lie.labels() == std::vector<std::string>{"e", "h", "f"})
        tally_one(r, !k[0 * dim + 2].is_zero(), "K(e, f) != 0");

    auto grid = kacmoody_grid(lie, o.quick ? 3 : 6, o.exec);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto& c = grid[i];
        Scalar expect = c.m + c.n == 0 ? k[c.x * dim + c.y] * Scalar(f, static_cast<long>(c.m)) : Scalar::zero(f);
        if (!(c.value == expect)) bad.push_back(i);
    }
    tally(r, grid.size(), bad, "(x, y, m, n) grid");
    std::ostringstream s;
    s << "K(e,f)=" << (dim == 3 ? k[2].to_string() : "-") << " K(h,h)=" << (dim == 3 ? k[4].to_string() : "-");
    r.detail += (r.detail.empty() ? "" : "; ") + s.str();
    r.seconds = timer.seconds();
    return r;
}

CriterionResult run_criterion(int id, const SuiteOptions& o, const FormMeasure& sl2_measure) {
    static const LieAlgebraData sl2 = LieAlgebraData::sl2();
    switch (id) {
        case 1: return criterion_residue(o);
        case 2: return criterion_lie_cocycle(o);
        case 3: return criterion_trace_independence(o);
        case 4: return criterion_trace_additivity(o);
        case 5: return criterion_strong_vanishing(o);
        case 6: return criterion_sliced(o);
        case 7: return criterion_good_idempotents(o);
        case 8: return criterion_word_factorization(o);
        case 9: return criterion_counterexamples(o);
        case 10: return criterion_kacmoody(o, sl2, sl2_measure ? sl2_measure : cocycle_form_measure(sl2));
        default: throw Error(ErrorCode::index_out_of_range, "no criterion " + std::to_string(id));
    }
}

std::vector<CriterionResult> run_all_criteria(const SuiteOptions& o, const FormMeasure& sl2_measure) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, o, sl2_measure));
    return out;
}

}  // namespace tateops
