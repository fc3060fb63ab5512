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

// tateops command-line front end.
//
// Exit status: 0 success, 1 a self-test or demo check failed, 2 parse error, 3 precondition
// failure, 4 internal invariant breach.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tateops/cocycle.hpp"
#include "tateops/counterexamples.hpp"
#include "tateops/grid.hpp"
#include "tateops/lie.hpp"
#include "tateops/serialize.hpp"
#include "tateops/suites.hpp"
#include "tateops/tate_n.hpp"
#include "tateops/trace.hpp"

using namespace tateops;

namespace {

enum class Format { human, tabular };

struct Options {
    Format format = Format::human;
    std::uint64_t prime = 0;
    // residue
    std::string f, g;
    // trace, ideals, cocycle
    std::string op_a, op_b;
    // kacmoody
    std::string lie = "sl2";
    std::int64_t grid = 3;
    // demo
    std::uint64_t demo_prime = 2;
    std::size_t demo_samples = 100;
    // selftest
    bool quick = false;
    std::uint64_t seed = SuiteOptions{}.seed;
    // make
    std::string kind;
    std::string arg;
    int level = 1;
};

Field field_of(std::uint64_t p) { return p == 0 ? Field{} : Field::prime(p); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

LieAlgebraData load_lie(const std::string& source, Field f) {
    if (source == "sl2") return LieAlgebraData::sl2(f);
    // {"labels": [...], "brackets": [{"x": "e", "y": "f", "value": {"h": "1"}}, ...]}; unlisted
    // brackets are zero, and [y, x] = -[x, y] is filled in.
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::parse_error, "cannot read " + source);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("labels") || !j["labels"].is_array() ||
        (j.contains("brackets") && !j["brackets"].is_array()))
        throw Error(ErrorCode::parse_error, source + ": expected {\"labels\": [...], \"brackets\": [...]}");
    std::vector<std::string> labels;
    for (auto& l : j["labels"]) {
        if (!l.is_string()) throw Error(ErrorCode::parse_error, "labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const std::size_t r = labels.size();
    auto index = [&](const Json& v) {
        if (!v.is_string()) throw Error(ErrorCode::parse_error, "bracket labels must be strings");
        for (std::size_t i = 0; i < r; ++i)
            if (labels[i] == v.get<std::string>()) return i;
        throw Error(ErrorCode::invalid_label, "unknown label '" + v.get<std::string>() + "'");
    };
    using V = LieAlgebraData::Vector;
    std::vector<std::vector<V>> c(r, std::vector<V>(r, V(r, Scalar::zero(f))));
    std::vector<std::vector<bool>> set(r, std::vector<bool>(r, false));
    for (auto& b : j.value("brackets", Json::array())) {
        if (!b.is_object() || !b.contains("x") || !b.contains("y") || !b.contains("value") || !b["value"].is_object())
            throw Error(ErrorCode::parse_error, "bracket entries need x, y and value");
        std::size_t x = index(b["x"]), y = index(b["y"]);
        V v(r, Scalar::zero(f));
        for (auto it = b["value"].begin(); it != b["value"].end(); ++it) {
            // constants are written over Q and reduced when --prime is given
            const Json& c = it.value();
            v[index(Json(it.key()))] = c.is_string() ? Scalar::parse(c.get<std::string>(), f) : scalar_from_json(c, f);
        }
        if (set[x][y] || set[y][x]) throw Error(ErrorCode::parse_error, "bracket given twice");
        set[x][y] = true;
        c[x][y] = v;
        for (auto& s : v) s = -s;
        c[y][x] = v;
    }
    return LieAlgebraData(f, std::move(labels), std::move(c));
}

int cmd_residue(const Options& o) {
    Field f = field_of(o.prime);
    auto a = LaurentPoly::parse(o.f, f);
    auto b = LaurentPoly::parse(o.g, f);
    std::cout << residue(a, b).to_string() << "\n";
    return 0;
}

int cmd_trace(const Options& o) {
    Op a = load_op_file(o.op_a);
    auto r = trace_with_certificate(a);
    std::cout << r.value.to_string() << "\n";
    if (o.format == Format::human)
        std::cout << "certificate N=t^" << r.certificate.image.m << "O N'=t^" << r.certificate.killed.m
                  << "O window=" << r.certificate.window.rows << "\n";
    else
        std::cout << r.certificate.image.m << " " << r.certificate.killed.m << " " << r.certificate.window.rows << "\n";
    return 0;
}

int cmd_ideals(const Options& o) {
    Op a = load_op_file(o.op_a);
    auto m = ideal_membership(a);
    auto c = cubical_membership(a);
    std::cout << "bounded=" << yes_no(m.bounded) << " discrete=" << yes_no(m.discrete) << "\n";
    std::cout << "trace_class=" << yes_no(c.trace_class) << "\n";
    std::cout << "bounding_row=" << opt_int(m.bounding_row) << " kill_column=" << opt_int(m.kill_column) << "\n";
    for (int i = 1; i <= c.n; ++i)
        std::cout << "I" << i << "+=" << yes_no(c.in_plus(i)) << " I" << i << "-=" << yes_no(c.in_minus(i))
                  << " variable=t" << (c.n + 1 - i) << "\n";
    return 0;
}

int cmd_cocycle(const Options& o) {
    std::cout << tate_cocycle(load_op_file(o.op_a), load_op_file(o.op_b)).to_string() << "\n";
    return 0;
}

int cmd_kacmoody(const Options& o) {
    if (o.grid < 0) throw Error(ErrorCode::precondition, "--grid must be non-negative");
    auto lie = load_lie(o.lie, field_of(o.prime));
    auto cells = kacmoody_grid(lie, o.grid, Exec::parallel);
    if (o.format == Format::human) {
        std::cout << "# block_cocycle(ad(x t^m), ad(y t^n)), |m|, |n| <= " << o.grid << "\n";
        std::cout << "# x y m n value\n";
    }
    for (auto& c : cells)
        std::cout << lie.labels()[c.x] << " " << lie.labels()[c.y] << " " << c.m << " " << c.n << " "
                  << c.value.to_string() << "\n";
    if (o.format == Format::human) {
        auto k = cocycle_form_measure(lie);
        std::cout << "# K(x, y) = block_cocycle(ad(x t), ad(y t^-1))\n";
        for (std::size_t x = 0; x < lie.dim(); ++x)
            for (std::size_t y = 0; y < lie.dim(); ++y)
                std::cout << "# K(" << lie.labels()[x] << "," << lie.labels()[y] << ")=" << k(x, y).to_string() << "\n";
    }
    return 0;
}

int cmd_demo_qp(const Options& o) {
    const std::uint64_t p = o.demo_prime;
    const std::string ps = std::to_string(p);
    std::vector<std::pair<std::string, mpq_class>> sample = {
        {"0", 0}, {"1", 1}, {"1/" + ps, mpq_class(1, static_cast<unsigned long>(p))}, {ps, static_cast<unsigned long>(p)}, {"-1", -1}};
    if (o.format == Format::human) std::cout << "# multiplier bounded discrete\n";
    for (auto& [name, q] : sample) {
        auto r = qp_ideal_membership(QpEndo(p, q));
        std::cout << name << " " << yes_no(r.bounded) << " " << yes_no(r.discrete) << "\n";
    }
    bool verdict = check_not_sliced(p);
    std::cout << "not_sliced=" << yes_no(verdict) << "\n";
    return verdict ? 0 : 1;
}

int cmd_demo_fpt(const Options& o) {
    bool ok = true;
    for (auto& c : fpt_sliced_suite(o.demo_prime, o.demo_samples, o.seed)) {
        std::cout << c.name << " cases=" << c.cases << " failures=" << c.failures << "\n";
        ok = ok && c.passed();
    }
    std::cout << "sliced=" << yes_no(ok) << "\n";
    return ok ? 0 : 1;
}

int cmd_selftest(const Options& o) {
    SuiteOptions s;
    s.seed = o.seed;
    s.quick = o.quick;
    int passed = 0;
    auto results = run_all_criteria(s, nullptr);
    for (auto& r : results) {
        std::cout << "criterion " << r.id << " " << (r.passed() ? "PASS" : "FAIL") << " cases=" << r.cases
                  << " failures=" << r.failures;
        if (o.format == Format::human) {
            std::cout << " " << r.name;
            if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
        }
        std::cout << "\n";
        passed += r.passed() ? 1 : 0;
    }
    std::cout << "selftest: " << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int cmd_make(const Options& o) {
    Field f = field_of(o.prime);
    auto integer = [&]() -> std::int64_t {
        try {
            std::size_t used = 0;
            long long v = std::stoll(o.arg, &used);
            if (used != o.arg.size()) throw std::invalid_argument(o.arg);
            return v;
        } catch (const std::exception&) {
            throw Error(ErrorCode::parse_error, "expected an integer argument, got '" + o.arg + "'");
        }
    };
    Op a;
    if (o.kind == "zero")
        a = Op::zero(f, o.level);
    else if (o.kind == "identity")
        a = Op::identity(f, o.level);
    else if (o.kind == "flip")
        a = Op::ind_to_pro_flip(f, o.level);
    else if (o.kind == "shift")
        a = Op::shift(f, integer(), o.level);
    else if (o.kind == "proj_plus")
        a = Op::proj_plus(f, o.arg.empty() ? 0 : integer(), o.level);
    else if (o.kind == "proj_minus")
        a = Op::proj_minus(f, o.arg.empty() ? 0 : integer(), o.level);
    else if (o.kind == "mul") {
        if (o.level != 1) throw Error(ErrorCode::precondition, "mul is a level-1 operator");
        a = Op::mul(LaurentPoly::parse(o.arg, f));
    } else
        throw Error(ErrorCode::parse_error, "unknown operator kind '" + o.kind + "'");
    std::cout << dump_op(a, o.format == Format::human ? 2 : -1) << "\n";
    return 0;
}

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::parse_error: return 2;
        case ErrorCode::internal: return 4;
        default: return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact operator algebra on Laurent series spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::map<std::string, Format> formats{{"human", Format::human}, {"tabular", Format::tabular}};
    app.add_option("--format", o.format, "Output mode")->transform(CLI::CheckedTransformer(formats))->capture_default_str();

    auto* residue = app.add_subcommand("residue", "Residue of f dg through the Tate cocycle");
    residue->add_option("f", o.f)->required();
    residue->add_option("g", o.g)->required();
    residue->add_option("--prime", o.prime, "Work over F_p instead of Q");

    auto* trace = app.add_subcommand("trace", "Trace of a trace-class operator with its certificate");
    trace->add_option("operator", o.op_a)->required();

    auto* ideals = app.add_subcommand("ideals", "Ideal membership report");
    ideals->add_option("operator", o.op_a)->required();

    auto* cocycle = app.add_subcommand("cocycle", "Tate cocycle of two level-1 operators");
    cocycle->add_option("a", o.op_a)->required();
    cocycle->add_option("b", o.op_b)->required();

    auto* kac = app.add_subcommand("kacmoody", "Cocycle table of ad(x t^m), ad(y t^n)");
    kac->add_option("--lie", o.lie, "sl2 or a structure-constants file")->capture_default_str();
    kac->add_option("--grid", o.grid, "Bound on |m| and |n|")->capture_default_str();
    kac->add_option("--prime", o.prime, "Work over F_p instead of Q");

    auto* demo = app.add_subcommand("demo", "Counterexample demonstrations");
    demo->require_subcommand(1);
    demo->fallthrough();
    auto* qp = demo->add_subcommand("qp", "Ideals of End(Q_p) and the non-sliced verdict");
    qp->add_option("--prime", o.demo_prime)->capture_default_str();
    auto* fpt = demo->add_subcommand("fpt", "Sliced suite over F_p((t))");
    fpt->add_option("--prime", o.demo_prime)->capture_default_str();
    fpt->add_option("--samples", o.demo_samples)->capture_default_str();
    fpt->add_option("--seed", o.seed)->capture_default_str();

    auto* self = app.add_subcommand("selftest", "Run the acceptance suites");
    self->add_flag("--quick", o.quick, "Reduced sample counts");
    self->add_option("--seed", o.seed)->capture_default_str();

    auto* make = app.add_subcommand("make", "Print the document of a named operator");
    make->add_option("kind", o.kind, "zero, identity, flip, shift, proj_plus, proj_minus, mul")->required();
    make->add_option("arg", o.arg, "Shift, lattice index or Laurent polynomial");
    make->add_option("--level", o.level)->capture_default_str();
    make->add_option("--prime", o.prime, "Work over F_p instead of Q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: parse-error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (residue->parsed()) return cmd_residue(o);
        if (trace->parsed()) return cmd_trace(o);
        if (ideals->parsed()) return cmd_ideals(o);
        if (cocycle->parsed()) return cmd_cocycle(o);
        if (kac->parsed()) return cmd_kacmoody(o);
        if (qp->parsed()) return cmd_demo_qp(o);
        if (fpt->parsed()) return cmd_demo_fpt(o);
        if (self->parsed()) return cmd_selftest(o);
        if (make->parsed()) return cmd_make(o);
    } catch (const Error& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
