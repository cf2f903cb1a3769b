/*
   Copyright 2026 The qcodes Authors

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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcodes/code.hpp"
#include "qcodes/constructions.hpp"
#include "qcodes/poly.hpp"
#include "qcodes/report.hpp"
#include "qcodes/tables.hpp"

using namespace qcodes;

namespace {

// sysexits.h values
constexpr int kExitUsage = 64;
constexpr int kExitDataErr = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitCantCreate = 73;
constexpr int kExitInvalidSpec = 2;

#ifndef QCODES_DEFAULT_DATA_DIR
#define QCODES_DEFAULT_DATA_DIR "data"
#endif

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("QCODES_DATA_DIR"); env && *env) return env;
    return QCODES_DEFAULT_DATA_DIR;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

enum class Format { text, jsonl, csv };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"jsonl", Format::jsonl}, {"csv", Format::csv}};

void print_records(std::ostream& out, const std::vector<ReportRecord>& recs, Format fmt) {
    if (fmt == Format::jsonl) return write_jsonl(out, recs);
    if (fmt == Format::csv) return write_records_csv(out, recs);
    for (const auto& r : recs) {
        for (const auto& [k, v] : r.inputs) out << k << '=' << v << ' ';
        out << "[" << r.n << ", " << r.k << ", " << r.d << "] " << (r.optimal ? "optimal" : "not optimal") << '\n';
        if (r.witness) {
            const auto& w = *r.witness;
            out << "  weight-" << w.logs.size() << " codeword:";
            for (std::size_t i = 0; i < w.logs.size(); ++i) {
                out << (i ? " +" : " ") << w.coeffs[i] << "*alpha^" << w.logs[i] << " (";
                for (std::size_t j = 0; j < w.coords[i].size(); ++j) out << (j ? "," : "") << w.coords[i][j];
                out << ")";
            }
            out << '\n';
        }
    }
}

struct VerifyArgs {
    unsigned p = 5, m = 0;
    u64 e = 0;
    std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    CodeSpec spec;
    try {
        spec = CodeSpec::make(a.p, a.m, a.e);
    } catch (const InvalidSpec& ex) {
        std::cerr << "invalid code: " << ex.what() << '\n';
        return kExitInvalidSpec;
    }
    const FieldContext ctx = FieldContext::build(a.p, a.m);
    const CodeVerdict v = verify_code(ctx, spec);
    const auto rec = make_record(ctx, v, "verify",
                                 {{"p", std::to_string(a.p)}, {"m", std::to_string(a.m)}, {"e", std::to_string(a.e)}},
                                 ms_since(t0));
    print_records(std::cout, {rec}, kFormats.at(a.format));
    return v.optimal ? 0 : 1;
}

struct EnumerateArgs {
    unsigned p = 5, m = 0, jobs = 0;
    std::string out, format = "csv";
};

int run_enumerate(const EnumerateArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    OptimalCatalog cat;
    try {
        cat = enumerate_optimal(a.p, a.m, a.jobs);
    } catch (const std::length_error& ex) {
        std::cerr << ex.what() << '\n';
        return kExitInvalidSpec;
    }
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) {
            std::cerr << "cannot write " << a.out << '\n';
            return kExitCantCreate;
        }
    }
    std::ostream& out = a.out.empty() ? std::cout : file;
    if (a.format == "csv")
        write_catalog_csv(out, cat);
    else
        write_catalog_table_text(out, cat);
    std::cerr << cat.count() << " optimal cosets for p = " << a.p << ", m = " << a.m << " (" << ms_since(t0)
              << " ms)\n";
    return 0;
}

struct TheoremArgs {
    std::string name, format = "text";
    unsigned m = 0;
};

int run_theorem(const TheoremArgs& a) {
    std::vector<VerifiedCandidate> rows;
    const bool observational = a.name == "remark2" || a.name == "remark_p7";
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (a.name == "remark_p7")
            rows = gen_remark_p7(a.m);
        else
            rows = verify_candidates(generate(a.name, a.m));
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "; known families: ";
        for (const auto& n : family_names()) std::cerr << n << ' ';
        std::cerr << "remark_p7\n";
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        std::cerr << "precondition failed: " << ex.what() << '\n';
        return kExitInvalidSpec;
    } catch (const std::length_error& ex) {
        std::cerr << "precondition failed: " << ex.what() << '\n';
        return kExitInvalidSpec;
    }
    const double per_row = rows.empty() ? 0.0 : ms_since(t0) / static_cast<double>(rows.size());
    std::vector<ReportRecord> recs;
    bool all_optimal = true;
    for (const auto& r : rows) {
        std::string params;
        for (const auto& [k, v] : r.family.params) params += (params.empty() ? "" : ",") + k + "=" + std::to_string(v);
        std::vector<std::pair<std::string, std::string>> inputs{{"family", r.family.name},
                                                                {"p", std::to_string(r.family.p)},
                                                                {"m", std::to_string(r.family.m)},
                                                                {"e", std::to_string(r.family.e)}};
        if (!params.empty()) inputs.emplace_back("params", params);
        if (r.family.branch) inputs.emplace_back("branch", std::to_string(r.family.branch));
        if (!r.family.hypotheses_hold) inputs.emplace_back("hypotheses", "fail");
        ReportRecord rec;
        rec.command = "theorem";
        rec.inputs = std::move(inputs);
        rec.n = r.verdict.n;
        rec.k = r.verdict.k;
        rec.d = r.verdict.d;
        rec.optimal = r.verdict.optimal;
        rec.elapsed_ms = per_row;
        recs.push_back(std::move(rec));
        all_optimal = all_optimal && r.verdict.optimal;
    }
    print_records(std::cout, recs, kFormats.at(a.format));
    if (a.format == "text") std::cout << recs.size() << " exponent(s)\n";
    return observational || all_optimal ? 0 : 1;
}

struct FactorArgs {
    std::string poly;
    unsigned p = 5;
    std::optional<u64> seed;
};

int run_factor(const FactorArgs& a) {
    DensePolynomial f;
    try {
        f = parse_polynomial(a.poly, a.p);
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << '\n' << ex.caret_diagnostic() << '\n';
        return kExitDataErr;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << '\n';
        return kExitUsage;
    }
    if (f.is_zero()) {
        std::cerr << "cannot factor the zero polynomial\n";
        return kExitDataErr;
    }
    const Factorization fac = factor(f, a.seed);
    std::cout << "f = " << to_string(f) << '\n';
    std::cout << "unit: " << fac.unit << '\n';
    for (const auto& t : fac.factors) {
        std::cout << "  " << to_string(t.factor);
        if (t.multiplicity > 1) std::cout << "  ^" << t.multiplicity;
        std::cout << "  (degree " << t.factor.degree() << ")\n";
    }
    std::cout << to_string(fac) << '\n';
    return 0;
}

struct DiffArgs {
    unsigned m = 0, p = 5, jobs = 0;
    std::string ref, errata, jsonl;
    bool no_errata = false;
};

int run_tables_diff(const DiffArgs& a) {
    namespace fs = std::filesystem;
    fs::path ref = a.ref;
    if (ref.empty()) {
        if (a.p != 5 || (a.m != 4 && a.m != 5)) {
            std::cerr << "no bundled reference table for p = " << a.p << ", m = " << a.m << "; pass --ref\n";
            return kExitUsage;
        }
        ref = data_dir() / (a.m == 4 ? "table1.txt" : "table2.txt");
    }
    if (!fs::exists(ref)) {
        std::cerr << "reference table not found: " << ref.string() << '\n';
        return kExitNoInput;
    }
    fs::path errata_path = a.errata;
    if (errata_path.empty() && !a.no_errata) {
        const fs::path sibling = ref.parent_path() / (ref.stem().string() + "_errata.txt");
        if (fs::exists(sibling)) errata_path = sibling;
    }
    if (!errata_path.empty() && !fs::exists(errata_path)) {
        std::cerr << "errata file not found: " << errata_path.string() << '\n';
        return kExitNoInput;
    }
    try {
        std::optional<Errata> errata;
        if (!errata_path.empty()) errata = load_errata(errata_path.string());
        const auto table = load_reference_table(ref.string(), a.m, a.p, errata ? &*errata : nullptr);
        const auto cat = enumerate_optimal(a.p, a.m, a.jobs);
        const auto diff = diff_tables(cat, table);
        write_diff_text(std::cout, diff, cat, table);
        if (!a.jsonl.empty()) {
            std::ofstream out(a.jsonl);
            if (!out) {
                std::cerr << "cannot write " << a.jsonl << '\n';
                return kExitCantCreate;
            }
            write_diff_jsonl(out, diff, cat, table);
        }
        return diff.clean() ? 0 : 1;
    } catch (const TableFormatError& ex) {
        std::cerr << ex.what() << '\n';
        return kExitDataErr;
    } catch (const std::length_error& ex) {
        std::cerr << ex.what() << '\n';
        return kExitInvalidSpec;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quinary cyclic codes C(1,e,s): verification, enumeration, exponent families"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Decide the minimum distance of C(1,e,s)");
    verify->add_option("--m", va.m, "Extension degree")->required()->check(CLI::Range(1, 8));
    verify->add_option("--e", va.e, "Exponent e")->required();
    verify->add_option("--p", va.p, "Odd prime")->capture_default_str();
    verify->add_option("--format", va.format, "text, jsonl or csv")->check(CLI::IsMember({"text", "jsonl", "csv"}));

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "List every optimal coset for one m");
    enumerate->add_option("--m", ea.m, "Extension degree")->required()->check(CLI::Range(1, 8));
    enumerate->add_option("--p", ea.p, "Odd prime")->capture_default_str();
    enumerate->add_option("--out", ea.out, "Output file (default: standard output)");
    enumerate->add_option("--format", ea.format, "csv or table-text")->check(CLI::IsMember({"csv", "table-text"}));
    enumerate->add_option("--jobs", ea.jobs, "Worker threads (0 = all cores)");

    TheoremArgs ta;
    auto* theorem = app.add_subcommand("theorem", "Generate and verify one exponent family");
    theorem->add_option("--name", ta.name, "Family name, e.g. thm8 or remark_p7")->required();
    theorem->add_option("--m", ta.m, "Extension degree")->required();
    theorem->add_option("--format", ta.format, "text, jsonl or csv")->check(CLI::IsMember({"text", "jsonl", "csv"}));

    FactorArgs fa;
    auto* fac = app.add_subcommand("factor", "Factor a polynomial over Z_p");
    fac->add_option("--poly", fa.poly, "Expression such as (x+1)^8-1, or comma-separated coefficients")->required();
    fac->add_option("--p", fa.p, "Odd prime")->capture_default_str();
    fac->add_option("--seed", fa.seed, "Seed for equal-degree splitting");

    DiffArgs da;
    auto* tables = app.add_subcommand("tables", "Reference table tools");
    tables->require_subcommand(1);
    auto* diff = tables->add_subcommand("diff", "Compare the computed catalog with a reference table");
    diff->add_option("--m", da.m, "Extension degree")->required()->check(CLI::Range(1, 8));
    diff->add_option("--p", da.p, "Odd prime")->capture_default_str();
    diff->add_option("--ref", da.ref, "Reference table (default: bundled table for m = 4 or 5)");
    diff->add_option("--errata", da.errata, "Errata overlay (default: <ref stem>_errata.txt if present)");
    diff->add_flag("--no-errata", da.no_errata, "Ignore any errata overlay");
    diff->add_option("--jsonl", da.jsonl, "Also write the diff as JSON lines to this file");
    diff->add_option("--jobs", da.jobs, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(va);
        if (*enumerate) return run_enumerate(ea);
        if (*theorem) return run_theorem(ta);
        if (*fac) return run_factor(fa);
        if (*diff) return run_tables_diff(da);
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 70;
    }
    return kExitUsage;
}
