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

// z4dc command-line front end.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "z4dc/dual.hpp"
#include "z4dc/examples.hpp"
#include "z4dc/io.hpp"
#include "z4dc/poly_io.hpp"
#include "z4dc/search.hpp"

using namespace z4dc;

namespace {

enum Exit { ok = 0, io_failure = 1, invalid = 2, cap_exceeded = 3, verification_failed = 4, internal = 5 };

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::IoError: return io_failure;
        case ErrorKind::EnumerationCapExceeded:
        case ErrorKind::DimensionCapExceeded:
        case ErrorKind::LatticeTooLarge: return cap_exceeded;
        case ErrorKind::Internal:
        case ErrorKind::InternalLiftCheckFailed: return internal;
        default: return invalid;
    }
}

void print_error(const std::string& kind, const std::string& message, const std::string& detail) {
    json j;
    j["kind"] = kind;
    const std::string prefix = kind + ": ";
    j["message"] = message.rfind(prefix, 0) == 0 ? message.substr(prefix.size()) : message;
    j["detail"] = detail;
    std::cerr << j.dump() << '\n';
}

struct Common {
    std::string out;
    std::string format;
    std::optional<std::uint64_t> max_enum;
    bool force = false;
    unsigned jobs = 1;
    bool no_timing = false;

    std::uint64_t cap() const {
        if (force) return std::numeric_limits<std::uint64_t>::max();
        return max_enum.value_or(default_enum_cap());
    }
    EnumOptions enum_options() const {
        EnumOptions o;
        o.cap = cap();
        o.jobs = jobs;
        return o;
    }
    bool csv() const { return format == "csv"; }
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + c.out, c.out);
    f << text;
    if (!f) throw Error(ErrorKind::IoError, "write failed for " + c.out, c.out);
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

void no_csv(const Common& c, const char* cmd) {
    if (c.csv()) throw Error(ErrorKind::ParseError, std::string(cmd) + " has no CSV output", "format");
}

int cmd_analyze(const Common& c, const std::string& spec_file) {
    const auto report = analyze(load_spec(spec_file), c.enum_options());
    if (c.csv()) emit(c, enumerator_csv(report.enumerator));
    else emit(c, to_json(report, !c.no_timing));
    return ok;
}

int cmd_dual(const Common& c, const std::string& spec_file, const std::string& method) {
    no_csv(c, "dual");
    const auto t0 = std::chrono::steady_clock::now();
    const auto code = validate(load_spec(spec_file));
    DualReport rep;
    if (method == "free") rep = dual_free(code);
    else if (method == "brute") rep = dual_brute_force(code);
    else rep = dual_auto(code);
    json j;
    j["code"] = code_to_json(code);
    j["free"] = code.is_free();
    const auto body = to_json(rep);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    j["residue_check"] = to_json(residue_dual_check(code, generator_matrix(rep.dual)));
    if (!c.no_timing)
        j["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(c, j);
    return ok;
}

int cmd_verify(const Common& c, std::optional<int> only) {
    VerifyOptions vo;
    vo.enumeration = c.enum_options();
    const auto rows = verify_examples(only, vo);
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (c.format == "json") {
        json a = json::array();
        for (const auto& r : rows) a.push_back(to_json(r));
        emit(c, a);
    } else if (c.csv()) {
        emit(c, verification_csv(rows));
    } else {
        std::string text = verification_table(rows);
        text += all ? "all " + std::to_string(rows.size()) + " claims PASS\n" : "some claims FAIL\n";
        emit(c, text);
    }
    return all ? ok : verification_failed;
}

CodeCase parse_form(const std::string& s) {
    if (s == "i" || s == "1") return CodeCase::first_only;
    if (s == "ii" || s == "2") return CodeCase::second_only;
    if (s == "iii" || s == "3") return CodeCase::both;
    throw Error(ErrorKind::ParseError, "unknown form \"" + s + "\" (use i, ii, iii)", "forms");
}

struct SearchArgs {
    int r = 1, s = 1;
    std::vector<std::string> forms;
    std::optional<int> max_l_degree, f2_degree;
    int distance_floor = 0;
    bool retain_all = false;
    std::optional<std::uint64_t> max_candidates;
};

int cmd_search(const Common& c, const SearchArgs& a) {
    if (a.r % 2 == 0 || a.s % 2 == 0)
        throw Error(ErrorKind::EvenLength, "r and s must be odd", a.r % 2 == 0 ? "r" : "s");
    SearchOptions o;
    if (!a.forms.empty()) {
        o.forms.clear();
        for (const auto& f : a.forms) o.forms.insert(parse_form(f));
    }
    o.max_l_degree = a.max_l_degree;
    o.f2_degree = a.f2_degree;
    o.distance_floor = a.distance_floor;
    o.cap = c.cap();
    o.jobs = c.jobs;
    o.retain_all = a.retain_all;
    if (a.max_candidates) o.max_candidates = *a.max_candidates;
    const auto rep = search(a.r, a.s, o);
    for (const auto& n : rep.notices) std::cerr << "notice: " << n << '\n';
    std::cerr << "search (" << a.r << ',' << a.s << "): " << rep.candidates << " candidates, " << rep.evaluated
              << " evaluated, " << rep.skipped_cap << " skipped, " << rep.results.size() << " reported\n";
    if (c.csv()) emit(c, search_csv(rep));
    else emit(c, search_to_json(rep));
    return ok;
}

int cmd_gray_export(const Common& c, const std::string& spec_file, bool enumerator) {
    const auto code = validate(load_spec(spec_file));
    if (enumerator) {
        const auto e = lee_enumerator(code, c.enum_options());
        if (c.csv()) emit(c, enumerator_csv(e));
        else emit(c, enumerator_to_json(e));
        return ok;
    }
    std::ostringstream os;
    export_gray_image(code, os, c.cap());
    emit(c, os.str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double cyclic codes over Z4: analysis, duals, Gray images and search"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--out", common.out, "Write the primary output to this file");
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--max-enum", common.max_enum, "Enumeration cap (default 2^26 or $Z4DC_MAX_ENUM)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--force", common.force, "Lift the enumeration cap");
    app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_flag("--no-timing", common.no_timing, "Omit timing fields");

    std::string spec_file;
    auto* analyze_cmd = app.add_subcommand("analyze", "Size, generator matrix, Lee enumerator and Gray parameters");
    analyze_cmd->add_option("spec", spec_file, "Code spec JSON file")->required();

    std::string method = "auto";
    auto* dual_cmd = app.add_subcommand("dual", "Dual code with residue-level checks");
    dual_cmd->add_option("spec", spec_file, "Code spec JSON file")->required();
    dual_cmd->add_option("--method", method, "auto, free or brute")->check(CLI::IsMember({"auto", "free", "brute"}));

    std::optional<int> only;
    auto* verify_cmd = app.add_subcommand("verify-examples", "Check the five reference examples");
    verify_cmd->add_option("--only", only, "Run one example (1-5)");

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search over generator quintuples");
    search_cmd->add_option("r", sa.r, "Length of the first block")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("s", sa.s, "Length of the second block")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--forms", sa.forms, "Generator forms to search: i, ii, iii")->delimiter(',');
    search_cmd->add_option("--max-l-degree", sa.max_l_degree, "Bound on deg l");
    search_cmd->add_option("--f2-degree", sa.f2_degree, "Only second generators with this deg f2");
    search_cmd->add_option("--distance-floor", sa.distance_floor, "Drop results with smaller d");
    search_cmd->add_flag("--retain-all", sa.retain_all, "Report every evaluated code, not only the Pareto set");
    search_cmd->add_option("--max-candidates", sa.max_candidates, "Abort when more candidates are generated");

    bool enumerator = false;
    auto* gray_cmd = app.add_subcommand("gray-export", "Gray image words, one per line, or the Lee enumerator");
    gray_cmd->add_option("spec", spec_file, "Code spec JSON file")->required();
    gray_cmd->add_flag("--enumerator", enumerator, "Export the Lee weight enumerator instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("UsageError", e.what(), e.get_name());
        return invalid;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(common, spec_file);
        if (*dual_cmd) return cmd_dual(common, spec_file, method);
        if (*verify_cmd) return cmd_verify(common, only);
        if (*search_cmd) return cmd_search(common, sa);
        if (*gray_cmd) return cmd_gray_export(common, spec_file, enumerator);
    } catch (const Error& e) {
        print_error(std::string(to_string(e.kind())), e.what(), e.detail());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        print_error("Internal", e.what(), "");
        return internal;
    }
    return invalid;
}
