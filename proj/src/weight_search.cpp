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

namespace qcodes {

std::optional<Weight3Witness> weight3_search(const FieldContext& ctx, const CodeSpec& spec) {
    if (ctx.p() != spec.p || ctx.m() != spec.m) throw std::invalid_argument("field context does not match the code spec");
    if (!ctx.has_tables()) return weight3_search_reference(ctx, spec);

    const LogTables& t = ctx.tables();
    const u64 n = ctx.q_minus_1();
    const u64 s = ctx.s();
    const u64 e = spec.e % n;
    const unsigned p = spec.p;
    const auto* zech = t.zech.data();

    for (unsigned a = 1; a < p; ++a) {
        const u64 la = t.log[a];
        for (unsigned b = 1; b < p; ++b) {
            const u64 lb = t.log[b];
            for (u64 i = 1; i < n; ++i) {
                // 1 + a x with x = alpha^i.
                u64 lax = la + i;
                if (lax >= n) lax -= n;
                if (lax == s) continue;  // y = 0
                const u64 z = zech[lax];
                // y = -(1 + a x)/b, and -1 = alpha^s.
                const u64 ly = (s + z + n - lb) % n;
                if (ly == 0 || ly == i) continue;  // y = 1 or y = x
                // 1 + a eta(x) + b eta(y) = 0 mod p, eta(alpha^k) = (-1)^k.
                const i64 third = 1 + static_cast<i64>(a) * ((i % 2 == 0) ? 1 : -1) + static_cast<i64>(b) * ((ly % 2 == 0) ? 1 : -1);
                if (mod_canonical(third, p) != 0) continue;
                // 1 + alpha^u + alpha^v = 0 with u = log(a x^e), v = log(b y^e); q < 2^32 keeps i * e in range.
                const u64 u = (la + i * e % n) % n;
                const u64 v = (lb + ly * e % n) % n;
                const u64 diff = (v + n - u) % n;
                if (diff == s) continue;
                if ((u + zech[diff]) % n != s) continue;
                return Weight3Witness{ctx.one(), ctx.decode(t.antilog[i]), ctx.decode(t.antilog[ly]), 1, a, b};
            }
        }
    }
    return std::nullopt;
}

std::optional<Weight3Witness> weight3_search_reference(const FieldContext& ctx, const CodeSpec& spec) {
    if (ctx.p() != spec.p || ctx.m() != spec.m) throw std::invalid_argument("field context does not match the code spec");
    const unsigned p = spec.p;
    const auto one = ctx.one();
    // x^e and eta(x) along the alpha-power order, computed once.
    std::vector<FieldElement> xs;
    std::vector<FieldElement> xe;
    std::vector<int> eta;
    xs.reserve(ctx.q_minus_1());
    for (const auto& x : ctx.enumerate_nonzero()) {
        xs.push_back(x);
        xe.push_back(ctx.pow(x, spec.e));
        eta.push_back(ctx.eta(x));
    }
    for (unsigned a = 1; a < p; ++a) {
        const auto ca = ctx.constant(a);
        for (unsigned b = 1; b < p; ++b) {
            const auto cb = ctx.constant(b);
            const auto neg_inv_b = ctx.neg(ctx.inv(cb));
            for (std::size_t i = 1; i < xs.size(); ++i) {
                const auto& x = xs[i];
                const auto y = ctx.mul(neg_inv_b, ctx.add(one, ctx.mul(ca, x)));
                if (y.is_zero() || y.is_one() || y == x) continue;
                const i64 third = 1 + static_cast<i64>(a) * eta[i] + static_cast<i64>(b) * ctx.eta(y);
                if (mod_canonical(third, p) != 0) continue;
                const auto second = ctx.add(ctx.add(one, ctx.mul(ca, xe[i])), ctx.mul(cb, ctx.pow(y, spec.e)));
                if (!second.is_zero()) continue;
                return Weight3Witness{one, x, y, 1, a, b};
            }
        }
    }
    return std::nullopt;
}

}  // namespace qcodes
