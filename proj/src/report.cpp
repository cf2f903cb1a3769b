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

#include "qcodes/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qcodes {

using json = nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

u64 parse_u64(const std::string& s) {
    u64 v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
        throw std::runtime_error("bad integer '" + s + "'");
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::runtime_error("bad boolean '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

template <class T, class F>
std::string join(const std::vector<T>& v, char sep, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += fmt(v[i]);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw std::runtime_error("unterminated quote in CSV line");
    out.push_back(cur);
    return out;
}

std::string to_str(u64 v) { return std::to_string(v); }
std::string to_str(unsigned v) { return std::to_string(v); }

json witness_json(const WitnessRecord& w) {
    return json{{"logs", w.logs}, {"coords", w.coords}, {"coeffs", w.coeffs}};
}

std::vector<u64> orbit_order(const CyclotomicCoset& c, unsigned p, unsigned m) {
    const u64 n = group_order(p, m);
    std::vector<u64> out;
    u64 x = c.leader;
    for (unsigned i = 0; i < c.length(); ++i) {
        out.push_back(x);
        x = (x * p) % n;
    }
    return out;
}

}  // namespace

u64 discrete_log(const FieldContext& ctx, const FieldElement& x) {
    if (x.is_zero()) throw std::domain_error("discrete log of 0");
    if (ctx.has_tables()) return ctx.tables().log[ctx.encode(x)];
    FieldElement cur = ctx.one();
    const FieldElement g = ctx.generator_power(1);
    for (u64 k = 0; k < ctx.q_minus_1(); ++k) {
        if (cur == x) return k;
        cur = ctx.mul(cur, g);
    }
    throw std::logic_error("element outside the multiplicative group");
}

ReportRecord make_record(const FieldContext& ctx, const CodeVerdict& verdict, std::string command,
                         std::vector<std::pair<std::string, std::string>> inputs, double elapsed_ms) {
    ReportRecord r;
    r.command = std::move(command);
    r.inputs = std::move(inputs);
    r.n = verdict.n;
    r.k = verdict.k;
    r.d = verdict.d;
    r.optimal = verdict.optimal;
    r.elapsed_ms = elapsed_ms;
    auto coords = [&](const FieldElement& x) {
        std::vector<unsigned> c;
        for (auto v : x.coeffs()) c.push_back(v);
        return c;
    };
    if (verdict.witness2) {
        const auto& w = *verdict.witness2;
        const FieldElement one = ctx.one();
        r.witness = WitnessRecord{{0, discrete_log(ctx, w.x)}, {coords(one), coords(w.x)}, {1, w.a}};
    } else if (verdict.witness3) {
        const auto& w = *verdict.witness3;
        WitnessRecord wr;
        for (const FieldElement* x : {&w.x1, &w.x2, &w.x3}) {
            wr.logs.push_back(discrete_log(ctx, *x));
            wr.coords.push_back(coords(*x));
        }
        wr.coeffs = {w.c1, w.c2, w.c3};
        r.witness = std::move(wr);
    }
    return r;
}

std::string to_jsonl(const ReportRecord& r) {
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    json j{{"command", r.command}, {"inputs", inputs}, {"n", r.n},           {"k", r.k},
           {"d", r.d},             {"optimal", r.optimal}, {"witness", nullptr}, {"elapsed_ms", r.elapsed_ms}};
    if (r.witness) j["witness"] = witness_json(*r.witness);
    return j.dump();
}

ReportRecord record_from_jsonl(const std::string& line) {
    try {
        const json j = json::parse(line);
        ReportRecord r;
        r.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
        r.n = j.at("n").get<u64>();
        r.k = j.at("k").get<u64>();
        r.d = j.at("d").get<unsigned>();
        r.optimal = j.at("optimal").get<bool>();
        if (const auto& w = j.at("witness"); !w.is_null()) {
            r.witness = WitnessRecord{w.at("logs").get<std::vector<u64>>(),
                                      w.at("coords").get<std::vector<std::vector<unsigned>>>(),
                                      w.at("coeffs").get<std::vector<unsigned>>()};
        }
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        return r;
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("malformed report line: ") + ex.what());
    }
}

void write_jsonl(std::ostream& out, const std::vector<ReportRecord>& records) {
    for (const auto& r : records) out << to_jsonl(r) << '\n';
}

std::vector<ReportRecord> read_jsonl(std::istream& in) {
    std::vector<ReportRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(record_from_jsonl(line));
    return out;
}

namespace {
constexpr const char* kRecordHeader = "command,inputs,n,k,d,optimal,witness_logs,witness_coords,witness_coeffs,elapsed_ms";
constexpr const char* kCatalogHeader = "leader,coset,length,d,optimal";
}  // namespace

void write_records_csv(std::ostream& out, const std::vector<ReportRecord>& records) {
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
        const std::string inputs =
            join(r.inputs, ';', [](const auto& kv) { return kv.first + "=" + kv.second; });
        std::string logs, coords, coeffs;
        if (r.witness) {
            logs = join(r.witness->logs, ';', [](u64 v) { return to_str(v); });
            coords = join(r.witness->coords, ';',
                          [](const std::vector<unsigned>& c) { return join(c, ':', [](unsigned v) { return to_str(v); }); });
            coeffs = join(r.witness->coeffs, ';', [](unsigned v) { return to_str(v); });
        }
        out << csv_field(r.command) << ',' << csv_field(inputs) << ',' << r.n << ',' << r.k << ',' << r.d << ','
            << (r.optimal ? "true" : "false") << ',' << logs << ',' << coords << ',' << coeffs << ','
            << format_double(r.elapsed_ms) << '\n';
    }
}

std::vector<ReportRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader) throw std::runtime_error("missing report CSV header");
    std::vector<ReportRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = parse_csv_line(line);
        if (f.size() != 10) throw std::runtime_error("report CSV row needs 10 fields: " + line);
        ReportRecord r;
        r.command = f[0];
        for (const auto& kv : split(f[1], ';')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::runtime_error("bad input pair '" + kv + "'");
            r.inputs.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
        r.n = parse_u64(f[2]);
        r.k = parse_u64(f[3]);
        r.d = static_cast<unsigned>(parse_u64(f[4]));
        r.optimal = parse_bool(f[5]);
        if (!f[6].empty()) {
            WitnessRecord w;
            for (const auto& s : split(f[6], ';')) w.logs.push_back(parse_u64(s));
            for (const auto& s : split(f[7], ';')) {
                std::vector<unsigned> c;
                for (const auto& t : split(s, ':')) c.push_back(static_cast<unsigned>(parse_u64(t)));
                w.coords.push_back(std::move(c));
            }
            for (const auto& s : split(f[8], ';')) w.coeffs.push_back(static_cast<unsigned>(parse_u64(s)));
            r.witness = std::move(w);
        }
        r.elapsed_ms = parse_double(f[9]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_catalog_csv(std::ostream& out, const OptimalCatalog& cat) {
    out << kCatalogHeader << '\n';
    for (std::size_t i = 0; i < cat.cosets.size(); ++i) {
        const auto& c = cat.cosets[i];
        out << c.leader << ',' << join(c.elements, ';', [](u64 v) { return to_str(v); }) << ',' << c.length() << ','
            << (i < cat.d.size() ? cat.d[i] : 0u) << ",true\n";
    }
}

OptimalCatalog read_catalog_csv(std::istream& in, unsigned p, unsigned m) {
    std::string line;
    if (!std::getline(in, line) || line != kCatalogHeader) throw std::runtime_error("missing catalog CSV header");
    OptimalCatalog cat{p, m, {}, {}};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = parse_csv_line(line);
        if (f.size() != 5) throw std::runtime_error("catalog CSV row needs 5 fields: " + line);
        const u64 leader = parse_u64(f[0]);
        CyclotomicCoset c = coset_of(p, m, leader);
        std::vector<u64> listed;
        for (const auto& s : split(f[1], ';')) listed.push_back(parse_u64(s));
        if (c.leader != leader || listed != c.elements || parse_u64(f[2]) != c.length())
            throw std::runtime_error("catalog row does not describe the coset of " + f[0]);
        if (!parse_bool(f[4])) throw std::runtime_error("catalog row for " + f[0] + " is not optimal");
        cat.cosets.push_back(std::move(c));
        cat.d.push_back(static_cast<unsigned>(parse_u64(f[3])));
    }
    return cat;
}

void write_catalog_table_text(std::ostream& out, const OptimalCatalog& cat) {
    out << "# optimal cosets for p = " << cat.p << ", m = " << cat.m << " (" << cat.count() << ")\n";
    for (const auto& c : cat.cosets)
        out << join(orbit_order(c, cat.p, cat.m), ',', [](u64 v) { return to_str(v); }) << '\n';
}

void write_diff_jsonl(std::ostream& out, const TableDiff& diff, const OptimalCatalog& computed,
                      const ReferenceTable& reference) {
    auto coset_json = [](const char* kind, const CyclotomicCoset& c) {
        return json{{"kind", kind}, {"leader", c.leader}, {"coset", c.elements}};
    };
    for (const auto& c : diff.missing_from_reference) out << coset_json("missing_from_reference", c).dump() << '\n';
    for (const auto& c : diff.missing_from_computed) out << coset_json("missing_from_computed", c).dump() << '\n';
    for (const auto& mal : diff.malformed_reference_entries) {
        json j{{"kind", "malformed"}, {"line", mal.line}, {"raw", mal.raw}, {"reason", mal.reason},
               {"closest_leader", nullptr}};
        if (mal.closest_leader) j["closest_leader"] = *mal.closest_leader;
        out << j.dump() << '\n';
    }
    for (u64 l : diff.duplicate_reference_leaders) out << json{{"kind", "duplicate"}, {"leader", l}}.dump() << '\n';
    for (const auto& e : reference.errata_applied)
        out << json{{"kind", "erratum"}, {"line", e.line}, {"raw", e.raw}, {"corrected", e.corrected}, {"reason", e.reason}}
                   .dump()
            << '\n';
    out << json{{"kind", "summary"},
                {"p", computed.p},
                {"m", computed.m},
                {"computed", computed.count()},
                {"reference", reference.entries.size()},
                {"malformed", reference.malformed.size()},
                {"clean", diff.clean()},
                {"explained_by_malformed", diff.explained_by_malformed()}}
               .dump()
        << '\n';
}

void write_diff_text(std::ostream& out, const TableDiff& diff, const OptimalCatalog& computed,
                     const ReferenceTable& reference) {
    auto show = [&](const char* title, const std::vector<CyclotomicCoset>& v) {
        out << title << ": " << v.size() << '\n';
        for (const auto& c : v)
            out << "  " << c.leader << "  {" << join(c.elements, ',', [](u64 x) { return to_str(x); }) << "}\n";
    };
    out << "computed " << computed.count() << " optimal cosets, reference lists " << reference.entries.size()
        << " valid rows (" << reference.malformed.size() << " malformed, " << reference.errata_applied.size()
        << " corrected by errata)\n";
    show("computed but not in reference", diff.missing_from_reference);
    show("in reference but not optimal", diff.missing_from_computed);
    out << "malformed reference rows: " << diff.malformed_reference_entries.size() << '\n';
    for (const auto& mal : diff.malformed_reference_entries) {
        out << "  line " << mal.line << ": '" << mal.raw << "' (" << mal.reason << ")";
        if (mal.closest_leader) out << ", closest computed coset " << *mal.closest_leader;
        out << '\n';
    }
    for (u64 l : diff.duplicate_reference_leaders) out << "duplicate reference coset " << l << '\n';
    out << (diff.clean() ? "clean" : diff.explained_by_malformed() ? "differences limited to malformed rows" : "tables differ")
        << '\n';
}

}  // namespace qcodes
