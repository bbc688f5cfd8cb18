// Copyright 2026 The z4dc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "z4dc/io.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "z4dc/poly_io.hpp"

namespace z4dc {

namespace {

PolyZ4 poly_from_json(const json& j, const std::string& key) {
    if (j.is_string()) {
        try {
            return parse_poly(j.get<std::string>());
        } catch (const Error& e) {
            std::string msg = e.what();
            const std::string prefix = std::string(to_string(e.kind())) + ": ";
            if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
            throw Error(e.kind(), key + ": " + msg, e.detail());
        }
    }
    if (j.is_array()) {
        std::vector<std::uint8_t> c;
        for (const auto& v : j) {
            if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 3)
                throw Error(ErrorKind::ParseError, key + ": coefficients must be integers 0..3", "coefficient");
            c.push_back(static_cast<std::uint8_t>(v.get<int>()));
        }
        return PolyZ4(std::move(c));
    }
    throw Error(ErrorKind::ParseError, key + ": expected a string or a coefficient array", "poly-type");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

json opt_poly(const std::optional<PolyZ4>& p) { return p ? poly_to_json(*p) : json(nullptr); }
json opt_poly(const std::optional<PolyF2>& p) { return p ? json(format_poly(*p)) : json(nullptr); }

}  // namespace

CodeSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "code spec must be a JSON object", "spec-object");
    static const char* const known[] = {"r", "s", "f1", "g1", "l", "f2", "g2"};
    for (const auto& [k, v] : j.items()) {
        if (std::find(std::begin(known), std::end(known), k) == std::end(known))
            throw Error(ErrorKind::ParseError, "unknown key \"" + k + "\"", "spec-key");
    }
    CodeSpec sp;
    for (const char* k : {"r", "s"}) {
        if (!j.contains(k)) throw Error(ErrorKind::ParseError, std::string("missing \"") + k + "\"", k);
        const auto& v = j.at(k);
        if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1 << 20)
            throw Error(ErrorKind::ParseError, std::string(k) + " must be a positive integer", k);
    }
    sp.r = j.at("r").get<int>();
    sp.s = j.at("s").get<int>();
    auto take = [&](const char* k, std::optional<PolyZ4>& dst) {
        if (j.contains(k) && !j.at(k).is_null()) dst = poly_from_json(j.at(k), k);
    };
    take("f1", sp.f1);
    take("g1", sp.g1);
    take("l", sp.l);
    take("f2", sp.f2);
    take("g2", sp.g2);
    return sp;
}

CodeSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string(), path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what(), "json");
    }
    return spec_from_json(j);
}

json poly_to_json(const PolyZ4& p) { return format_poly(p); }

json spec_to_json(const CodeSpec& sp) {
    json j;
    j["r"] = sp.r;
    j["s"] = sp.s;
    auto put = [&](const char* k, const std::optional<PolyZ4>& p) {
        if (p) j[k] = poly_to_json(*p);
    };
    put("f1", sp.f1);
    put("g1", sp.g1);
    put("l", sp.l);
    put("f2", sp.f2);
    put("g2", sp.g2);
    return j;
}

json code_to_json(const DoubleCyclicCode& c) { return spec_to_json(c.spec()); }

json size_to_json(const CodeSize& s) {
    json j;
    j["quaternary"] = s.quaternary;
    j["binary"] = s.binary;
    j["log2"] = s.log2();
    if (s.log2() < 64) j["count"] = s.count();
    return j;
}

json vector_to_json(const CodeVector& v) {
    json j;
    j["left"] = json::array();
    for (auto a : v.left) j["left"].push_back(int{a});
    j["right"] = json::array();
    for (auto a : v.right) j["right"].push_back(int{a});
    return j;
}

json matrix_to_json(const MatZ4& m) {
    json rows = json::array();
    for (const auto& r : m.rows()) {
        json row = json::array();
        for (auto a : r) row.push_back(int{a});
        rows.push_back(std::move(row));
    }
    return rows;
}

json enumerator_to_json(const LeeEnumerator& e) {
    json j = json::object();
    for (const auto& [w, n] : e) j[std::to_string(w)] = n;
    return j;
}

std::string enumerator_csv(const LeeEnumerator& e) {
    std::ostringstream os;
    os << "lee_weight,count\n";
    for (const auto& [w, n] : e) os << w << ',' << n << '\n';
    return os.str();
}

AnalysisReport analyze(const CodeSpec& spec, const EnumOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport a;
    a.input = spec;
    a.code = validate(spec);
    if (a.code.l_was_reduced()) a.notes.push_back("l was reduced modulo F1 during validation");
    if (a.code.size().log2() >= 64 || a.code.size().count() > opt.cap)
        throw Error(ErrorKind::EnumerationCapExceeded,
                    "2^" + std::to_string(a.code.size().log2()) + " codewords exceed the enumeration cap of " +
                        std::to_string(opt.cap),
                    "max-enum");
    a.generator_matrix = generator_matrix(a.code);
    a.enumerator = lee_enumerator(a.code, opt);
    a.gray = gray_image_params(a.code, a.enumerator);
    if (!a.gray.d) a.notes.push_back("ZeroCode: the code has no nonzero codeword, so d is undefined");
    a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return a;
}

json to_json(const AnalysisReport& a, bool timing) {
    json j;
    j["input"] = spec_to_json(a.input);
    j["code"] = code_to_json(a.code);
    j["case"] = to_string(a.code.code_case());
    j["free"] = a.code.is_free();
    j["n"] = 2 * (a.code.r() + a.code.s());
    j["size"] = size_to_json(a.code.size());
    j["generator_matrix"] = matrix_to_json(a.generator_matrix);
    j["min_lee_distance"] = a.gray.d ? json(*a.gray.d) : json(nullptr);
    j["lee_enumerator"] = enumerator_to_json(a.enumerator);
    json g;
    g["n"] = a.gray.n;
    g["log2M"] = a.gray.M.log2();
    g["d"] = a.gray.d ? json(*a.gray.d) : json(nullptr);
    g["linear"] = a.gray.linear_image;
    if (a.gray.witness) {
        json w;
        w["u"] = vector_to_json(a.gray.witness->u);
        w["v"] = vector_to_json(a.gray.witness->v);
        w["xor_preimage"] = vector_to_json(a.gray.witness->preimage);
        g["nonlinearity_witness"] = std::move(w);
    } else {
        g["nonlinearity_witness"] = nullptr;
    }
    j["gray"] = std::move(g);
    j["notes"] = a.notes;
    if (timing) j["timing"] = {{"seconds", a.seconds}};
    return j;
}

json to_json(const ResidueDualCheck& r) {
    json j;
    j["F1_hat_bar"] = format_poly(r.F1_hat_bar);
    j["l_hat_bar"] = format_poly(r.l_hat_bar);
    j["F2_hat_bar"] = format_poly(r.F2_hat_bar);
    j["gcd_bar"] = format_poly(r.gcd_bar);
    j["nu_bar"] = opt_poly(r.nu_bar);
    j["nu_cofactor_bar"] = opt_poly(r.nu_cofactor_bar);
    json checks = json::object();
    for (const auto& c : r.checks) checks[c.name] = c.ok;
    j["checks"] = std::move(checks);
    j["all_ok"] = r.all_ok();
    return j;
}

json to_json(const DualReport& d) {
    json j;
    j["method"] = to_string(d.method);
    j["dual"] = code_to_json(d.dual);
    json gens;
    gens["F1_hat"] = d.F1_hat_absent ? json(nullptr) : poly_to_json(d.F1_hat);
    gens["l_hat"] = poly_to_json(d.l_hat);
    gens["F2_hat"] = poly_to_json(d.F2_hat);
    j["generators"] = std::move(gens);
    j["F1_hat_absent"] = d.F1_hat_absent;
    json mid;
    mid["gcd_F1_l"] = opt_poly(d.gcd_F1_l);
    mid["F1_hat_star"] = opt_poly(d.F1_hat_star);
    mid["F2_hat_star"] = opt_poly(d.F2_hat_star);
    mid["A"] = opt_poly(d.A);
    mid["nu_modulus"] = opt_poly(d.nu_modulus);
    mid["nu_congruence"] = opt_poly(d.nu_congruence);
    j["intermediates"] = std::move(mid);
    j["witnesses"] = {{"lambda", opt_poly(d.lambda)}, {"mu", opt_poly(d.mu)}, {"nu", opt_poly(d.nu)}};
    j["kernel_agrees"] = d.kernel_agrees ? json(*d.kernel_agrees) : json(nullptr);
    j["size"] = size_to_json(d.size);
    j["notes"] = d.notes;
    return j;
}

json to_json(const SearchResult& r) {
    json j;
    j["rank"] = r.rank;
    j["spec"] = code_to_json(r.code);
    j["n"] = r.n;
    j["log2M"] = r.M.log2();
    j["d"] = r.d;
    return j;
}

json search_to_json(const SearchReport& rep) {
    json a = json::array();
    for (const auto& r : rep.results) a.push_back(to_json(r));
    return a;
}

json to_json(const VerificationRow& row) {
    json j;
    j["example"] = row.example;
    j["claim"] = row.claim;
    j["expected"] = row.expected;
    j["actual"] = row.actual;
    j["pass"] = row.pass;
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

std::string verification_table(const std::vector<VerificationRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << (r.pass ? "PASS" : "FAIL") << "  example " << r.example << "  " << r.claim << "  expected "
           << r.expected;
        if (!r.pass) os << "  actual " << r.actual;
        if (!r.note.empty()) os << "  [" << r.note << ']';
        os << '\n';
    }
    return os.str();
}

std::string verification_csv(const std::vector<VerificationRow>& rows) {
    std::ostringstream os;
    os << "example,claim,expected,actual,pass,note\n";
    for (const auto& r : rows)
        os << r.example << ',' << csv_field(r.claim) << ',' << csv_field(r.expected) << ',' << csv_field(r.actual)
           << ',' << (r.pass ? "PASS" : "FAIL") << ',' << csv_field(r.note) << '\n';
    return os.str();
}

json error_to_json(const Error& e) {
    json j;
    j["kind"] = std::string(to_string(e.kind()));
    j["message"] = e.what();
    j["detail"] = e.detail();
    return j;
}

}  // namespace z4dc
