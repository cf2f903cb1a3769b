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

#include "qcodes/tables.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "qcodes/code.hpp"
#include "qcodes/field.hpp"

namespace qcodes {

namespace {

void check_order(unsigned p, unsigned m) {
    if (group_order(p, m) + 1 > kMaxEnumerationOrder)
        throw std::length_error("enumeration limited to p^m <= " + std::to_string(kMaxEnumerationOrder));
}

std::vector<CodeSpec> candidate_specs(unsigned p, unsigned m) {
    std::vector<CodeSpec> out;
    for (const CosetSummary& c : all_coset_leaders(p, m)) {
        try {
            out.push_back(CodeSpec::make(p, m, c.leader));
        } catch (const InvalidSpec&) {
        }
    }
    return out;
}

struct Outcome {
    bool optimal = false;
    unsigned d = 0;
};

Outcome run_one(const FieldContext& ctx, const CodeSpec& spec) {
    const CodeVerdict v = verify_code(ctx, spec);
    return {v.optimal, v.d};
}

OptimalCatalog assemble(unsigned p, unsigned m, const std::vector<CodeSpec>& specs, const std::vector<Outcome>& res) {
    OptimalCatalog cat{p, m, {}, {}};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!res[i].optimal) continue;
        cat.cosets.push_back(coset_of(p, m, specs[i].e));
        cat.d.push_back(res[i].d);
    }
    return cat;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// Blank runs become one space; blanks next to commas disappear.
std::string normalize_row(std::string_view s) {
    std::string t = trim(s), out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(t[i]))) {
            std::size_t j = i;
            while (j < t.size() && std::isspace(static_cast<unsigned char>(t[j]))) ++j;
            const bool by_comma = (!out.empty() && out.back() == ',') || (j < t.size() && t[j] == ',');
            if (!by_comma) out.push_back(' ');
            i = j - 1;
        } else {
            out.push_back(t[i]);
        }
    }
    return out;
}

std::vector<u64> digit_runs(std::string_view s) {
    std::vector<u64> out;
    for (std::size_t i = 0; i < s.size();) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        u64 v = 0;
        if (std::from_chars(s.data() + i, s.data() + j, v).ec == std::errc()) out.push_back(v);
        i = j;
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

/// Empty string when the row is a valid coset, otherwise the reason.
std::string validate_row(const std::string& body, unsigned p, unsigned m, CyclotomicCoset& coset) {
    const u64 n = group_order(p, m);
    std::vector<u64> vals;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const std::string t = trim(tok);
        if (t.empty()) return "empty field";
        if (t.find_first_of(" \t") != std::string::npos) return "missing separator in '" + t + "'";
        u64 v = 0;
        if (std::from_chars(t.data(), t.data() + t.size(), v).ec != std::errc()) return "value '" + t + "' out of range";
        vals.push_back(v);
    }
    if (body.empty() || body.back() == ',') return "empty field";
    for (u64 v : vals)
        if (v >= n) return "value " + std::to_string(v) + " exceeds " + std::to_string(n - 1);
    std::set<u64> uniq(vals.begin(), vals.end());
    if (uniq.size() != vals.size()) return "repeated value";
    coset = coset_of(p, m, vals.front());
    if (std::vector<u64>(uniq.begin(), uniq.end()) != coset.elements) {
        for (u64 v : vals)
            if (!coset.contains(v)) return "values span more than one orbit";
        return "incomplete orbit (" + std::to_string(vals.size()) + " of " + std::to_string(coset.length()) + ")";
    }
    return {};
}

}  // namespace

std::vector<u64> OptimalCatalog::leaders() const {
    std::vector<u64> out;
    out.reserve(cosets.size());
    for (const auto& c : cosets) out.push_back(c.leader);
    return out;
}

OptimalCatalog enumerate_optimal_serial(unsigned p, unsigned m) {
    check_order(p, m);
    const FieldContext ctx = FieldContext::build(p, m);
    const auto specs = candidate_specs(p, m);
    std::vector<Outcome> res(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) res[i] = run_one(ctx, specs[i]);
    return assemble(p, m, specs, res);
}

OptimalCatalog enumerate_optimal(unsigned p, unsigned m, unsigned jobs) {
    check_order(p, m);
    const FieldContext ctx = FieldContext::build(p, m);
    if (ctx.has_tables()) (void)ctx.tables();
    const auto specs = candidate_specs(p, m);
    std::vector<Outcome> res(specs.size());
    const int threads = jobs == 0 ? omp_get_max_threads() : static_cast<int>(jobs);
    const auto count = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) res[i] = run_one(ctx, specs[i]);
    return assemble(p, m, specs, res);
}

TableFormatError::TableFormatError(const std::string& path, std::size_t line, const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

Errata load_errata(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read errata file " + path);
    Errata out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string reason;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            reason = trim(std::string_view(line).substr(hash + 1));
            line.resize(hash);
        }
        if (trim(line).empty()) continue;
        const auto arrow = line.find("=>");
        if (arrow == std::string::npos) throw TableFormatError(path, no, "expected 'raw => corrected'");
        const std::string raw = normalize_row(std::string_view(line).substr(0, arrow));
        const std::string fixed = normalize_row(std::string_view(line).substr(arrow + 2));
        if (raw.empty() || fixed.empty()) throw TableFormatError(path, no, "empty side in erratum");
        out.fixes[raw] = {fixed, reason};
    }
    return out;
}

ReferenceTable load_reference_table(const std::string& path, unsigned m, unsigned p, const Errata* errata) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read reference table " + path);
    ReferenceTable table;
    table.p = p;
    table.m = m;
    (void)group_order(p, m);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        bool studied = false;
        if (body.front() == '*') {
            studied = true;
            body = trim(std::string_view(body).substr(1));
        }
        const std::string raw = normalize_row(body);
        body = raw;
        if (errata) {
            if (auto it = errata->fixes.find(raw); it != errata->fixes.end()) {
                table.errata_applied.push_back({raw, it->second.corrected, it->second.reason, no});
                body = it->second.corrected;
            }
        }
        if (body.find_first_not_of("0123456789, \t") != std::string::npos)
            throw TableFormatError(path, no, "unexpected character in '" + raw + "'");
        CyclotomicCoset coset;
        std::string reason = validate_row(body, p, m, coset);
        if (reason.empty()) {
            table.entries.push_back({std::move(coset), studied, no, raw});
        } else {
            table.malformed.push_back({raw, std::move(reason), no, digit_runs(body), std::nullopt});
        }
    }
    return table;
}

bool TableDiff::explained_by_malformed() const {
    if (!missing_from_computed.empty()) return false;
    std::set<u64> excused;
    for (const auto& mal : malformed_reference_entries)
        if (mal.closest_leader) excused.insert(*mal.closest_leader);
    return std::all_of(missing_from_reference.begin(), missing_from_reference.end(),
                       [&](const CyclotomicCoset& c) { return excused.count(c.leader) > 0; });
}

TableDiff diff_tables(const OptimalCatalog& computed, const ReferenceTable& reference) {
    if (computed.m != reference.m || computed.p != reference.p)
        throw std::invalid_argument("catalog and reference describe different fields");
    TableDiff diff;
    std::map<u64, const CyclotomicCoset*> ref;
    for (const auto& e : reference.entries)
        if (!ref.emplace(e.coset.leader, &e.coset).second) diff.duplicate_reference_leaders.push_back(e.coset.leader);
    std::set<u64> comp;
    for (const auto& c : computed.cosets) {
        comp.insert(c.leader);
        if (!ref.count(c.leader)) diff.missing_from_reference.push_back(c);
    }
    for (const auto& [leader, coset] : ref)
        if (!comp.count(leader)) diff.missing_from_computed.push_back(*coset);
    const u64 n = group_order(computed.p, computed.m);
    for (MalformedEntry mal : reference.malformed) {
        std::size_t best = 0;
        for (const auto& c : computed.cosets) {
            std::size_t hits = 0;
            for (u64 v : mal.values)
                if (v < n && c.contains(v)) ++hits;
            if (hits > best) {
                best = hits;
                mal.closest_leader = c.leader;
            }
        }
        diff.malformed_reference_entries.push_back(std::move(mal));
    }
    return diff;
}

}  // namespace qcodes
