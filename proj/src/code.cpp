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

#include "qcodes/code.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "qcodes/cyclotomic.hpp"

namespace qcodes {

namespace {

void check_context(const FieldContext& ctx, const CodeSpec& spec) {
    if (ctx.p() != spec.p || ctx.m() != spec.m) throw std::invalid_argument("field context does not match the code spec");
}

}  // namespace

CodeSpec CodeSpec::make(unsigned p, unsigned m, u64 e) {
    if (!is_prime(p) || p == 2) throw InvalidSpec("p must be an odd prime");
    if (m < 1 || m > kMaxExtensionDegree) throw InvalidSpec("m must lie in [1, 8]");
    const u64 n = group_order(p, m);
    const u64 s = n / 2;
    if (e == 0 || e >= n) throw InvalidSpec("e = " + std::to_string(e) + " outside [1, " + std::to_string(n - 1) + "]");
    if (e == s) throw InvalidSpec("e = s makes the generator polynomial degenerate");
    if (same_coset(p, m, 1, e)) throw InvalidSpec("e = " + std::to_string(e) + " lies in the cyclotomic coset of 1");
    return CodeSpec{p, m, e, s};
}

bool Weight3Witness::satisfies(const FieldContext& ctx, u64 e) const {
    const unsigned p = ctx.p();
    for (unsigned c : {c1, c2, c3})
        if (c == 0 || c >= p) return false;
    for (const auto* x : {&x1, &x2, &x3})
        if (x->is_zero()) return false;
    if (x1 == x2 || x1 == x3 || x2 == x3) return false;
    for (u64 k : {u64{1}, e, ctx.s()}) {
        FieldElement sum = ctx.zero();
        sum = ctx.add(sum, ctx.mul(ctx.constant(c1), ctx.pow(x1, k)));
        sum = ctx.add(sum, ctx.mul(ctx.constant(c2), ctx.pow(x2, k)));
        sum = ctx.add(sum, ctx.mul(ctx.constant(c3), ctx.pow(x3, k)));
        if (!sum.is_zero()) return false;
    }
    return true;
}

Weight3Witness Weight3Witness::scaled(const FieldContext& ctx, const FieldElement& mu) const {
    return Weight3Witness{ctx.mul(mu, x1), ctx.mul(mu, x2), ctx.mul(mu, x3), c1, c2, c3};
}

bool Weight2Witness::satisfies(const FieldContext& ctx, u64 e) const {
    if (a == 0 || a >= ctx.p() || x.is_zero() || x.is_one()) return false;
    for (u64 k : {u64{1}, e, ctx.s()})
        if (!ctx.add(ctx.one(), ctx.mul(ctx.constant(a), ctx.pow(x, k))).is_zero()) return false;
    return true;
}

u64 dimension(const CodeSpec& spec) { return spec.n() - 1 - spec.m - coset_length(spec.p, spec.m, spec.e); }

std::optional<Weight2Witness> weight2_search(const FieldContext& ctx, const CodeSpec& spec) {
    check_context(ctx, spec);
    // 1 + a x = 0 pins x = -1/a, so the pairs (a, x) reduce to one x per a.
    for (unsigned a = 1; a < spec.p; ++a) {
        Weight2Witness w{ctx.neg(ctx.inv(ctx.constant(a))), a};
        if (w.satisfies(ctx, spec.e)) return w;
    }
    return std::nullopt;
}

std::optional<Weight3Witness> weight3_oracle(const FieldContext& ctx, const CodeSpec& spec) {
    check_context(ctx, spec);
    if (spec.m > 3) throw std::length_error("weight3_oracle is limited to m <= 3");
    const unsigned p = spec.p;
    const u64 q = ctx.q();
    // Element codes 1..q-1 except the code of 1; powers precomputed per element.
    std::vector<FieldElement> xs;
    std::vector<FieldElement> xe;
    std::vector<FieldElement> xs_pow;
    for (u64 code = 1; code < q; ++code) {
        const auto x = ctx.decode(code);
        if (x.is_one()) continue;
        xs.push_back(x);
        xe.push_back(ctx.pow(x, spec.e));
        xs_pow.push_back(ctx.pow(x, spec.s));
    }
    const auto one = ctx.one();
    auto sum3 = [&](unsigned c1, unsigned c2, const FieldElement& a, unsigned c3, const FieldElement& b) {
        return ctx.add(ctx.add(ctx.constant(c1), ctx.mul(ctx.constant(c2), a)), ctx.mul(ctx.constant(c3), b)).is_zero();
    };
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            for (unsigned c1 = 1; c1 < p; ++c1)
                for (unsigned c2 = 1; c2 < p; ++c2)
                    for (unsigned c3 = 1; c3 < p; ++c3) {
                        if (!sum3(c1, c2, xs[i], c3, xs[j])) continue;
                        if (!sum3(c1, c2, xe[i], c3, xe[j])) continue;
                        if (!sum3(c1, c2, xs_pow[i], c3, xs_pow[j])) continue;
                        return Weight3Witness{one, xs[i], xs[j], c1, c2, c3};
                    }
        }
    return std::nullopt;
}

unsigned sphere_packing_max_d(u64 n, u64 k, unsigned p) {
    if (k < 1 || k > n) throw std::invalid_argument("sphere_packing_max_d: need 1 <= k <= n");
    using boost::multiprecision::cpp_int;
    const cpp_int budget = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(n - k));
    cpp_int volume = 1;
    cpp_int term = 1;  // C(n, t) (p-1)^t
    u64 t_max = 0;
    for (u64 t = 1; t <= n; ++t) {
        term = term * (n - t + 1) * (p - 1) / t;
        volume += term;
        if (volume > budget) break;
        t_max = t;
    }
    const u64 sphere = 2 * t_max + 2;
    const u64 singleton = n - k + 1;
    return static_cast<unsigned>(std::min(sphere, singleton));
}

CodeVerdict verify_code(const FieldContext& ctx, const CodeSpec& spec) {
    check_context(ctx, spec);
    CodeVerdict v;
    v.n = spec.n();
    v.coset_length_e = coset_length(spec.p, spec.m, spec.e);
    v.k = dimension(spec);
    if ((v.witness2 = weight2_search(ctx, spec))) {
        v.d = 2;
    } else if ((v.witness3 = weight3_search(ctx, spec))) {
        v.d = 3;
    } else {
        const unsigned cap = sphere_packing_max_d(v.n, v.k, spec.p);
        if (cap < 4) throw std::logic_error("no word of weight <= 3 but the packing bound is below 4");
        v.d = 4;
        v.d_certified = cap == 4;
    }
    const u64 k_optimal = v.n + 1 - 2 * spec.m - 2;
    v.optimal = v.k == k_optimal && v.d == 4 && v.d_certified;
    return v;
}

Weight3Witness theorem4_witness(const FieldContext& ctx, u64 e) {
    if (ctx.p() != 5) throw std::domain_error("theorem4_witness is defined for p = 5");
    const unsigned m = ctx.m();
    const u64 n = ctx.q_minus_1();
    if (e == 0 || e >= n) throw std::domain_error("exponent out of range");
    if (same_coset(5, m, 1, e)) throw std::domain_error("e lies in the coset of 1");
    if (coset_length(5, m, e) != m) throw std::domain_error("|C_e| < m");
    const bool m_even = m % 2 == 0;
    auto c = [&](i64 v) { return ctx.constant(v); };
    switch (e % 4) {
        case 0:
            if (m_even) return {c(1), c(2), c(-1), 1, 1, 3};
            break;
        case 1:
            if (m_even) return {c(1), c(2), c(3), 1, 3, 1};
            return {c(1), c(2), c(3), 1, 4, 2};
        case 2:
            if (!m_even) return {c(1), c(2), c(3), 1, 4, 2};
            break;
        default:
            break;
    }
    throw std::domain_error("e = " + std::to_string(e) + " is outside the weight-3 classes for m = " + std::to_string(m));
}

std::optional<OptimalityCondition> optimality_condition(unsigned m, u64 e) {
    switch (e % 4) {
        case 0:
            if (m % 2 == 1) return OptimalityCondition::C1;
            break;
        case 2:
            if (m % 2 == 0) return OptimalityCondition::C2;
            break;
        case 3:
            return OptimalityCondition::C3;
        default:
            break;
    }
    return std::nullopt;
}

std::string to_string(OptimalityCondition c) {
    switch (c) {
        case OptimalityCondition::C1:
            return "C1";
        case OptimalityCondition::C2:
            return "C2";
        case OptimalityCondition::C3:
            return "C3";
    }
    return "?";
}

}  // namespace qcodes
