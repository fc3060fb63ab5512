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

#include "tateops/serialize.hpp"

#include <fstream>
#include <sstream>

namespace tateops {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::parse_error, msg); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

std::int64_t integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (auto k : keys) known = known || it.key() == k;
        if (!known) fail("unexpected key '" + it.key() + "'");
    }
}

Json field_to_json(Field f) {
    if (f.is_rational()) return "Q";
    return Json{{"prime", f.modulus()}};
}

Field field_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "Q") fail("unknown field '" + j.get<std::string>() + "'");
        return Field{};
    }
    if (!j.is_object()) fail("field must be \"Q\" or {\"prime\": p}");
    only_keys(j, {"prime"});
    const Json& p = member(j, "prime");
    if (!p.is_number_unsigned()) fail("prime must be a positive integer");
    try {
        return Field::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
        fail(e.what());
    }
}

Json entry_to_json(const Entry& e) { return e.is_scalar() ? scalar_to_json(e.scalar()) : op_to_json(e.op()); }

Entry entry_from_json(const Json& j, Field f, int level) {
    if (level == 1) return scalar_from_json(j, f);
    Op op = op_from_json(j);
    if (op.level() != level - 1) fail("entry has level " + std::to_string(op.level()) + ", expected " + std::to_string(level - 1));
    if (op.field() != f) fail("entry over another field");
    return op;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.value_string();
    return Json{{"mod", s.field().modulus()}, {"val", s.residue()}};
}

Scalar scalar_from_json(const Json& j, Field f) {
    try {
        if (j.is_number_integer()) return Scalar(f, mpz_class(j.dump()));
        if (j.is_string()) {
            if (!f.is_rational()) fail("scalar over F_p must be {\"mod\": p, \"val\": v}");
            return Scalar::parse(j.get<std::string>(), f);
        }
        if (j.is_object()) {
            only_keys(j, {"mod", "val"});
            const Json& p = member(j, "mod");
            const Json& v = member(j, "val");
            if (!p.is_number_unsigned() || !v.is_number_unsigned()) fail("mod and val must be non-negative integers");
            if (!f.is_prime() || p.get<std::uint64_t>() != f.modulus()) fail("scalar modulus does not match the operator field");
            if (v.get<std::uint64_t>() >= f.modulus()) fail("residue out of range");
            return Scalar(f, static_cast<long>(v.get<std::uint64_t>()));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::parse_error) throw;
        fail(e.what());
    }
    fail("scalar must be a string, an integer or {\"mod\": p, \"val\": v}");
}

Json op_to_json(const Op& a) {
    Json out;
    out["level"] = a.level();
    out["field"] = field_to_json(a.field());
    Json lines = Json::array();
    for (auto& [key, seq] : a.lines()) {
        Json w = Json::array();
        for (auto& e : seq.window()) w.push_back(entry_to_json(e));
        lines.push_back(Json{{"orientation", key.is_diagonal() ? "diagonal" : "antidiagonal"},
                             {"offset", key.offset},
                             {"left_limit", entry_to_json(seq.left())},
                             {"right_limit", entry_to_json(seq.right())},
                             {"window_start", seq.start()},
                             {"window", std::move(w)}});
    }
    out["lines"] = std::move(lines);
    Json corr = Json::array();
    for (auto& [cell, e] : a.correction())
        corr.push_back(Json{{"row", cell.first}, {"col", cell.second}, {"value", entry_to_json(e)}});
    out["correction"] = std::move(corr);
    return out;
}

Op op_from_json(const Json& j) {
    if (!j.is_object()) fail("operator document must be an object");
    only_keys(j, {"level", "field", "lines", "correction"});
    const std::int64_t level = integer(member(j, "level"), "level");
    if (level < 1 || level > 16) fail("level must lie in 1..16");
    const int n = static_cast<int>(level);
    const Field f = j.contains("field") ? field_from_json(j["field"]) : Field{};

    std::vector<std::pair<LineKey, EvSeq>> lines;
    const Json& jl = member(j, "lines");
    if (!jl.is_array()) fail("lines must be an array");
    for (auto& l : jl) {
        only_keys(l, {"orientation", "offset", "left_limit", "right_limit", "window_start", "window"});
        const Json& o = member(l, "orientation");
        if (!o.is_string()) fail("orientation must be a string");
        LineKey key;
        if (o == "diagonal")
            key = LineKey::diagonal(integer(member(l, "offset"), "offset"));
        else if (o == "antidiagonal")
            key = LineKey::antidiagonal(integer(member(l, "offset"), "offset"));
        else
            fail("orientation must be diagonal or antidiagonal");
        const Json& jw = member(l, "window");
        if (!jw.is_array()) fail("window must be an array");
        std::vector<Entry> w;
        for (auto& e : jw) w.push_back(entry_from_json(e, f, n));
        try {
            lines.emplace_back(key, EvSeq::checked(entry_from_json(member(l, "left_limit"), f, n),
                                                   entry_from_json(member(l, "right_limit"), f, n),
                                                   integer(member(l, "window_start"), "window_start"), std::move(w)));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::parse_error) throw;
            fail(e.what());
        }
    }
    std::vector<std::pair<Cell, Entry>> corr;
    const Json& jc = member(j, "correction");
    if (!jc.is_array()) fail("correction must be an array");
    for (auto& c : jc) {
        only_keys(c, {"row", "col", "value"});
        corr.emplace_back(Cell{integer(member(c, "row"), "row"), integer(member(c, "col"), "col")},
                          entry_from_json(member(c, "value"), f, n));
    }
    try {
        return Op::from_parts(f, n, lines, corr);
    } catch (const Error& e) {
        fail(e.what());
    }
}

std::string dump_op(const Op& a, int indent) { return op_to_json(a).dump(indent); }

Op parse_op(std::string_view text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("invalid JSON");
    return op_from_json(j);
}

Op load_op_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_op(ss.str());
}

}  // namespace tateops
