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

#include "qcodes/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "qcodes/cyclotomic.hpp"

namespace qcodes {

namespace {

__extension__ using u128 = unsigned __int128;

struct Ring {
    unsigned p;
    unsigned m;
    u64 n;  // p^m - 1
    u64 s;

    Ring(unsigned p_, unsigned m_) : p(p_), m(m_), n(group_order(p_, m_)), s(n / 2) {}

    u64 pw(u64 k) const { return powmod(p, k, n); }
    u64 mod(i64 v) const { return mod_canonical(v, n); }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) * b) % n); }
    u64 gcd_n(i64 v) const { return gcd_signed(v, n); }

    /// Every family presupposes e not in C_1 and e != s.
    bool admissible(u64 e) const { return e != 0 && e < n && e != s && !same_coset(p, m, e, 1); }
};

/// Keeps the first exponent seen in each cyclotomic coset.
class CosetFilter {
   public:
    CosetFilter(unsigned p, unsigned m) : p_(p), m_(m) {}
    bool insert(u64 e) { return seen_.insert(coset_leader(p_, m_, e)).second; }

   private:
    unsigned p_, m_;
    std::set<u64> seen_;
};

void require_m(unsigned m, unsigned lo = 2) {
    if (m < lo || m > 8) throw std::domain_error("m must be in [" + std::to_string(lo) + ", 8], got " + std::to_string(m));
}

ExponentFamily make_entry(const Ring& r, std::string name, std::vector<std::pair<std::string, i64>> params,
                          unsigned branch, u64 e) {
    ExponentFamily f;
    f.name = std::move(name);
    f.params = std::move(params);
    f.branch = branch;
    f.e = e;
    f.m = r.m;
    f.p = r.p;
    return f;
}

bool in(u64 v, std::initializer_list<u64> set) { return std::find(set.begin(), set.end(), v) != set.end(); }

unsigned thm1_branch(const Ring& r, u64 e, unsigned k) {
    const u64 g = r.gcd_n(static_cast<i64>(e) - static_cast<i64>(r.pw(k)));
    if (e % 4 == 0 && r.m % 2 == 1 && g == 1) return 1;
    if (e % 4 == 2 && r.m % 2 == 0 && in(g, {1, 3})) return 2;
    if (e % 4 == 3 && in(g, {2, 4, 6})) return 3;
    return 0;
}

unsigned thm2_branch(const Ring& r, u64 e, unsigned t, unsigned k) {
    const u64 gt = r.gcd_n(static_cast<i64>(e) - static_cast<i64>(r.pw(t)));
    const u64 gk = r.gcd_n(static_cast<i64>(e) - static_cast<i64>(r.pw(k)));
    if (e % 4 == 0 && r.m % 2 == 1 && gt == 1 && gk == 1) return 1;
    if (e % 4 == 2 && r.m % 2 == 0 && in(gt, {1, 3}) && in(gk, {1, 3})) return 2;
    if (e % 4 == 3 && in(gt, {2, 4, 6}) && in(gk, {2, 4, 6})) return 3;
    return 0;
}

std::optional<u64> type6_exponent(unsigned m) {
    if (m % 2 == 0) return std::nullopt;
    const u64 num = ipow(5, m + 1) - 1;
    const u64 den = ipow(5, (m + 1) / 2) + 1;
    if (num % den != 0 || (num / den) % 2 != 0) return std::nullopt;
    return num / den / 2 + (ipow(5, m) - 1) / 4;
}

u64 type5_exponent(unsigned m) { return (ipow(5, m) - 1) / 4 + (ipow(5, (m + 1) / 2) - 1) / 2; }

}  // namespace

i64 ExponentFamily::param(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    throw std::out_of_range("no parameter '" + key + "' in " + name);
}

std::vector<ExponentFamily> gen_thm1(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    for (unsigned h = 1; h <= m; ++h)
        for (unsigned t = 0; t <= m; ++t)
            for (unsigned k = 0; k <= m; ++k) {
                if (t == k || std::gcd(t > k ? t - k : k - t, m) != 1) continue;
                const u64 a = r.mod(static_cast<i64>(r.pw(h)) - 1);
                const u64 b = r.mod(static_cast<i64>(r.pw(t)) - static_cast<i64>(r.pw(k)));
                for (u64 e : linear_congruence_solutions(a, b, r.n)) {
                    if (!r.admissible(e)) continue;
                    const unsigned br = thm1_branch(r, e, k);
                    if (br == 0 || !seen.insert(e)) continue;
                    out.push_back(make_entry(r, "thm1", {{"h", h}, {"t", t}, {"k", k}}, br, e));
                }
            }
    return out;
}

std::vector<ExponentFamily> gen_thm2(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    for (unsigned h = 0; h < m; ++h)
        for (unsigned t = 0; t < m; ++t)
            for (unsigned k = 0; k < m; ++k) {
                const u64 a = (r.pw(h) + 1) % r.n;
                const u64 b = (r.pw(t) + r.pw(k)) % r.n;
                for (u64 e : linear_congruence_solutions(a, b, r.n)) {
                    if (e < 2 || !r.admissible(e)) continue;
                    const unsigned br = thm2_branch(r, e, t, k);
                    if (br == 0 || !seen.insert(e)) continue;
                    out.push_back(make_entry(r, "thm2", {{"h", h}, {"t", t}, {"k", k}}, br, e));
                }
            }
    return out;
}

std::vector<ExponentFamily> gen_thm3(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    for (unsigned h = 0; h < m; ++h) {
        if (m % 2 == 0 && h == m / 2) continue;
        const u64 e = (r.s + r.pw(h) + 1) % r.n;
        if (!r.admissible(e) || !seen.insert(e)) continue;
        out.push_back(make_entry(r, "thm3", {{"h", h}}, 0, e));
    }
    return out;
}

std::vector<ExponentFamily> gen_thm6(unsigned m) {
    require_m(m);
    if (m % 4 != 0) throw std::domain_error("e = 5^h + 1 family needs m = 0 mod 4, got m = " + std::to_string(m));
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    for (unsigned h = 0; h < m; ++h) {
        if (h == m / 2) continue;
        const unsigned g = std::gcd(h, m);
        unsigned br = 0;
        if (h == 0)
            br = 1;
        else if ((m / g) % 2 == 1)
            br = 2;
        else if (g == 1)
            br = 3;
        if (br == 0) continue;
        const u64 e = (r.pw(h) + 1) % r.n;
        if (!r.admissible(e) || !seen.insert(e)) continue;
        out.push_back(make_entry(r, "thm6", {{"h", h}}, br, e));
    }
    return out;
}

std::vector<ExponentFamily> gen_thm7(unsigned m, bool include_type6) {
    require_m(m);
    const Ring r(5, m);
    std::vector<ExponentFamily> out;
    auto emit = [&](unsigned type, std::vector<std::pair<std::string, i64>> params, u64 e) {
        e %= r.n;
        if (!r.admissible(e)) return;
        out.push_back(make_entry(r, "thm7_type" + std::to_string(type), std::move(params), type, e));
    };
    if (m % 2 == 1) emit(1, {}, r.n - 1);
    if (m % 2 == 0 && ipow(5, m / 2) % 3 == 1) emit(2, {}, ipow(5, m / 2) + 2);
    {
        CosetFilter seen(5, m);
        for (unsigned k = 1; k < 2 * m; ++k) {
            if (std::gcd(k, 2 * m) != 1) continue;
            const u64 e = ((ipow(5, k) + 1) / 2) % r.n;
            if (!r.admissible(e) || !seen.insert(e)) continue;
            out.push_back(make_entry(r, "thm7_type3", {{"k", k}}, 3, e));
        }
    }
    if (ipow(5, m) % 3 == 2) emit(4, {}, (2 * ipow(5, m) - 1) / 3);
    if (m % 2 == 1 && m > 1) emit(5, {}, type5_exponent(m));
    if (include_type6 && m % 4 == 3) {
        unsigned l = 0;
        while ((m + 1) % (1u << (l + 1)) == 0) ++l;
        if (auto e = type6_exponent(m)) emit(6, {{"l", l}}, *e);
    }
    return out;
}

std::vector<ExponentFamily> gen_thm8(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    for (unsigned h = 0; h < m; ++h) {
        unsigned br = 0;
        if (m % 2 == 1)
            br = 1;
        else if (m % 4 == 0 && (h == 0 || h == m / 2))
            br = 2;
        else if (m % 4 == 2 && (h == 0 || std::gcd(h, m) == 1 || std::gcd(h, m) == 2))
            br = 3;
        if (br == 0) continue;
        const u64 e = (r.pw(h) + 2) % r.n;
        if (!r.admissible(e) || !seen.insert(e)) continue;
        out.push_back(make_entry(r, "thm8", {{"h", h}}, br, e));
    }
    return out;
}

std::vector<ExponentFamily> gen_thm9(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    auto coprime = [&](u64 v) { return std::gcd(v, r.n) == 1; };
    for (unsigned br = 1; br <= 5; ++br) {
        const unsigned back = br + 1;  // h = m - 2, ..., m - 6
        if (back > m) continue;
        const unsigned h = m - back;
        if (h + 1 >= m) continue;
        bool ok = false;
        switch (br) {
            case 1: ok = m % 3 != 0; break;
            case 2: ok = coprime(131) && m % 62 != 0; break;
            case 3: ok = coprime(631) && m % 4 != 0; break;
            case 4: ok = coprime(101) && m % 3 != 0 && m % 4 != 0; break;
            case 5: ok = coprime(29) && m % 5 != 0 && m % 6 != 0 && m % 31 != 0; break;
        }
        if (!ok) continue;
        const u64 e = (r.pw(h + 1) + r.pw(h) + 1) % r.n;
        if (!r.admissible(e) || !seen.insert(e)) continue;
        out.push_back(make_entry(r, "thm9", {{"h", h}}, br, e));
    }
    return out;
}

const std::vector<OffsetRow>& thm10_rows() {
    static const std::vector<OffsetRow> rows = [] {
        std::vector<OffsetRow> v;
        auto odd = [](unsigned m) { return m % 2 == 1; };
        for (i64 h : {-15, -11, -10, -7, 9, 14, 17, 18}) v.push_back({h, 1, odd});
        v.push_back({-18, 2, [](unsigned m) { return (m % 2 == 1 && m % 11 != 0) || m % 4 == 0; }});
        v.push_back({-14, 3, [](unsigned m) { return m % 2 == 1 && m % 9 != 0; }});
        v.push_back({-13, 4, [](unsigned m) { return m % 2 == 0 && m % 12 != 0; }});
        for (i64 h : {-1, 10}) v.push_back({h, 5, [](unsigned m) { return m % 2 == 0; }});
        for (i64 h : {11, 19}) v.push_back({h, 6, [](unsigned m) { return m % 4 == 2 || m == 4; }});
        std::sort(v.begin(), v.end(), [](const OffsetRow& a, const OffsetRow& b) { return a.h < b.h; });
        return v;
    }();
    return rows;
}

std::vector<ExponentFamily> gen_thm10(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    const i64 s = static_cast<i64>(r.s);
    for (const OffsetRow& row : thm10_rows()) {
        if (!row.applies(m) || row.h <= -s || row.h >= s) continue;
        const u64 e = static_cast<u64>(s + row.h);
        if (!r.admissible(e) || !seen.insert(e)) continue;
        out.push_back(make_entry(r, "thm10", {{"h", row.h}}, row.branch, e));
    }
    return out;
}

const std::vector<MultiplierRow>& thm11_rows() {
    static const std::vector<MultiplierRow> rows = {
        {1, {}},          {2, {}},          {3, {9}},         {4, {}},
        {6, {3}},         {7, {15}},        {8, {29, 41}},    {9, {7, 9, 53}},
        {12, {51}},       {13, {7, 15}},    {14, {7}},        {16, {7, 11, 13}},
        {17, {3, 11, 33}}, {18, {9, 23, 31, 39, 41, 59}},
    };
    return rows;
}

std::vector<ExponentFamily> gen_thm11(unsigned m) {
    require_m(m, 3);
    if (m % 2 == 0) throw std::domain_error("e = h(5^(m-1) - 1) family needs odd m, got m = " + std::to_string(m));
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    const u64 base = r.pw(m - 1) - 1;
    for (const MultiplierRow& row : thm11_rows()) {
        if (!in(std::gcd(row.h, r.n), {1, 2, 4})) continue;
        if (std::any_of(row.forbidden_divisors.begin(), row.forbidden_divisors.end(),
                        [m](unsigned d) { return m % d == 0; }))
            continue;
        const u64 e = r.mul(row.h % r.n, base);
        if (!r.admissible(e) || !seen.insert(e)) continue;
        out.push_back(make_entry(r, "thm11", {{"h", static_cast<i64>(row.h)}}, 0, e));
    }
    return out;
}

std::vector<ExponentFamily> gen_remark2(unsigned m) {
    require_m(m);
    const Ring r(5, m);
    CosetFilter seen(5, m);
    std::vector<ExponentFamily> out;
    for (unsigned h = 0; h < m; ++h)
        for (unsigned t = 0; t < m; ++t)
            for (unsigned k = 0; k < m; ++k) {
                const u64 a = (r.pw(h) + 1) % r.n;
                const u64 b = r.mod(static_cast<i64>(r.pw(t)) - static_cast<i64>(r.pw(k)));
                for (u64 e : linear_congruence_solutions(a, b, r.n)) {
                    if (!r.admissible(e) || !seen.insert(e)) continue;
                    out.push_back(make_entry(r, "remark2", {{"h", h}, {"t", t}, {"k", k}}, 0, e));
                }
            }
    return out;
}

bool satisfies_definition(const ExponentFamily& f) {
    const Ring r(f.p, f.m);
    const u64 e = f.e % r.n;
    auto P = [&](const char* key) { return r.pw(static_cast<u64>(f.param(key))); };
    const std::string& nm = f.name;
    if (nm == "thm1")
        return r.mul(r.mod(static_cast<i64>(P("h")) - 1), e) ==
               r.mod(static_cast<i64>(P("t")) - static_cast<i64>(P("k")));
    if (nm == "thm2" || nm == "remark1_p7") return r.mul((P("h") + 1) % r.n, e) == (P("t") + P("k")) % r.n;
    if (nm == "remark2")
        return r.mul((P("h") + 1) % r.n, e) == r.mod(static_cast<i64>(P("t")) - static_cast<i64>(P("k")));
    if (nm == "thm3" || nm == "remark3_p7") return e == (r.s + P("h") + 1) % r.n;
    if (nm == "thm6") return e == (P("h") + 1) % r.n;
    if (nm == "thm8") return e == (P("h") + 2) % r.n;
    if (nm == "thm9") {
        const u64 h = static_cast<u64>(f.param("h"));
        return e == (r.pw(h + 1) + r.pw(h) + 1) % r.n;
    }
    if (nm == "thm10") return e == r.mod(static_cast<i64>(r.s) + f.param("h"));
    if (nm == "thm11") return e == r.mul(static_cast<u64>(f.param("h")) % r.n, r.pw(f.m - 1) + r.n - 1);
    if (nm == "thm7_type1") return e == r.mod(static_cast<i64>(ipow(5, f.m)) - 2);
    if (nm == "thm7_type2") return e == (r.pw(f.m / 2) + 2) % r.n;
    if (nm == "thm7_type3") return r.mul(2, e) == (P("k") + 1) % r.n;
    if (nm == "thm7_type4") return r.mul(3, e) == 1 % r.n;
    if (nm == "thm7_type5") return e == type5_exponent(f.m) % r.n;
    if (nm == "thm7_type6") {
        const auto v = type6_exponent(f.m);
        return v && e == *v % r.n;
    }
    throw std::invalid_argument("unknown family '" + nm + "'");
}

std::vector<VerifiedCandidate> verify_candidates(const std::vector<ExponentFamily>& fams) {
    std::map<std::pair<unsigned, unsigned>, FieldContext> contexts;
    std::vector<VerifiedCandidate> out;
    out.reserve(fams.size());
    for (const ExponentFamily& f : fams) {
        auto it = contexts.find({f.p, f.m});
        if (it == contexts.end()) it = contexts.emplace(std::make_pair(f.p, f.m), FieldContext::build(f.p, f.m)).first;
        out.push_back({f, verify_code(it->second, CodeSpec::make(f.p, f.m, f.e))});
    }
    return out;
}

std::vector<VerifiedCandidate> gen_remark_p7(unsigned m) {
    if (m != 2 && m != 3) throw std::length_error("p = 7 candidates are limited to m in {2, 3}");
    const Ring r(7, m);
    std::vector<ExponentFamily> fams;
    auto parity_ok = [&](u64 e) { return r.s % 2 == 0 || e % 2 == 0; };
    {
        CosetFilter seen(7, m);
        for (unsigned h = 0; h < m; ++h)
            for (unsigned t = 0; t < m; ++t)
                for (unsigned k = 0; k < m; ++k) {
                    const u64 a = (r.pw(h) + 1) % r.n;
                    const u64 b = (r.pw(t) + r.pw(k)) % r.n;
                    for (u64 e : linear_congruence_solutions(a, b, r.n)) {
                        if (!r.admissible(e)) continue;
                        if (r.gcd_n(static_cast<i64>(r.pw(t)) - static_cast<i64>(e)) != 1 ||
                            r.gcd_n(static_cast<i64>(r.pw(k)) - static_cast<i64>(e)) != 1)
                            continue;
                        if (!seen.insert(e)) continue;
                        ExponentFamily f = make_entry(r, "remark1_p7", {{"h", h}, {"t", t}, {"k", k}}, 0, e);
                        f.hypotheses_hold = parity_ok(e);
                        fams.push_back(std::move(f));
                    }
                }
    }
    {
        CosetFilter seen(7, m);
        for (unsigned h = 0; h < m; ++h) {
            if (m % 2 == 0 && h == m / 2) continue;
            const u64 e = (r.s + r.pw(h) + 1) % r.n;
            if (!r.admissible(e) || !seen.insert(e)) continue;
            ExponentFamily f = make_entry(r, "remark3_p7", {{"h", h}}, 0, e);
            f.hypotheses_hold = parity_ok(e);
            fams.push_back(std::move(f));
        }
    }
    return verify_candidates(fams);
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"thm1", "thm2",  "thm3",  "thm6",   "thm7",
                                                   "thm8", "thm9", "thm10", "thm11", "remark2"};
    return names;
}

std::vector<ExponentFamily> generate(const std::string& name, unsigned m) {
    if (name == "thm1") return gen_thm1(m);
    if (name == "thm2") return gen_thm2(m);
    if (name == "thm3") return gen_thm3(m);
    if (name == "thm6") return gen_thm6(m);
    if (name == "thm7") return gen_thm7(m);
    if (name.rfind("thm7_type", 0) == 0 && name.size() == 10 && name[9] >= '1' && name[9] <= '6') {
        auto all = gen_thm7(m, name[9] == '6');
        std::erase_if(all, [&](const ExponentFamily& f) { return f.name != name; });
        return all;
    }
    if (name == "thm8") return gen_thm8(m);
    if (name == "thm9") return gen_thm9(m);
    if (name == "thm10") return gen_thm10(m);
    if (name == "thm11") return gen_thm11(m);
    if (name == "remark2") return gen_remark2(m);
    throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace qcodes
