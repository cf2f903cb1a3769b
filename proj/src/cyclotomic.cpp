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

#include "qcodes/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qcodes {

namespace {

void check_range(u64 e, u64 n) {
    if (e >= n) throw std::out_of_range("exponent " + std::to_string(e) + " outside [0, " + std::to_string(n) + ")");
}

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<unsigned long long>(a) * b) % n); }

}  // namespace

bool CyclotomicCoset::contains(u64 e) const { return std::binary_search(elements.begin(), elements.end(), e); }

u64 group_order(unsigned p, unsigned m) {
    if (p < 2) throw std::invalid_argument("group_order: p must be at least 2");
    if (m < 1 || m > 8) throw std::invalid_argument("group_order: m must lie in [1, 8]");
    return ipow(p, m) - 1;
}

u64 canonical_exponent(i64 e, unsigned p, unsigned m) { return mod_canonical(e, group_order(p, m)); }

CyclotomicCoset coset_of(unsigned p, unsigned m, u64 e) {
    const u64 n = group_order(p, m);
    check_range(e, n);
    CyclotomicCoset c;
    u64 x = e;
    do {
        c.elements.push_back(x);
        x = mulmod(x, p, n);
    } while (x != e);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

unsigned coset_length(unsigned p, unsigned m, u64 e) {
    const u64 n = group_order(p, m);
    check_range(e, n);
    unsigned len = 1;
    for (u64 x = mulmod(e, p, n); x != e; x = mulmod(x, p, n)) ++len;
    return len;
}

u64 coset_leader(unsigned p, unsigned m, u64 e) {
    const u64 n = group_order(p, m);
    check_range(e, n);
    u64 best = e;
    for (u64 x = mulmod(e, p, n); x != e; x = mulmod(x, p, n)) best = std::min(best, x);
    return best;
}

bool same_coset(unsigned p, unsigned m, u64 e1, u64 e2) {
    const u64 n = group_order(p, m);
    check_range(e1, n);
    check_range(e2, n);
    u64 x = e1;
    do {
        if (x == e2) return true;
        x = mulmod(x, p, n);
    } while (x != e1);
    return false;
}

std::vector<CosetSummary> all_coset_leaders(unsigned p, unsigned m) {
    const u64 n = group_order(p, m);
    std::vector<bool> seen(n, false);
    std::vector<CosetSummary> out;
    for (u64 e = 0; e < n; ++e) {
        if (seen[e]) continue;
        unsigned len = 0;
        u64 x = e;
        do {
            seen[x] = true;
            ++len;
            x = mulmod(x, p, n);
        } while (x != e);
        out.push_back({e, len});
    }
    return out;
}

namespace length_laws {

std::optional<unsigned> small_gcd(unsigned p, unsigned m, u64 e) {
    const u64 n = group_order(p, m);
    if (e < 1 || e >= n) return std::nullopt;
    if (std::gcd(e, n) >= p) return std::nullopt;
    return m;
}

std::optional<unsigned> p_power_plus_one(unsigned p, unsigned m, unsigned h) {
    if (p % 2 == 0 || h >= m) return std::nullopt;
    if (m % 2 == 0 && 2 * h == m) return m / 2;
    return m;
}

std::vector<u64> quinary_linear_congruence_solutions(unsigned m, unsigned h, unsigned t, unsigned k) {
    if (h >= m || t >= m || k >= m) return {};
    const u64 n = group_order(5, m);
    const u64 a = (ipow(5, h) + 1) % n;
    const u64 b = (ipow(5, t) + ipow(5, k)) % n;
    return linear_congruence_solutions(a, b, n);
}

std::optional<unsigned> quinary_power_plus_two(unsigned m, unsigned h) {
    if (m <= 1 || h >= m) return std::nullopt;
    return m;
}

std::optional<unsigned> quinary_two_powers_plus_one(unsigned m, unsigned h) {
    if (m < 2 || h + 1 >= m) return std::nullopt;
    const u64 n = group_order(5, m);
    if (std::gcd(ipow(5, m - h) + 6, n) != 1) return std::nullopt;
    return m;
}

}  // namespace length_laws

}  // namespace qcodes
