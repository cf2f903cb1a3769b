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

#include <functional>

#include "qcodes/code.hpp"
#include "qcodes/cyclotomic.hpp"

namespace qcodes {

namespace {

// One equation sign_a (x + shift)^e + sign_b x^e + constant = 0 with character constraints.
struct ShiftEquation {
    int shift;
    int sign_shifted;
    int sign_plain;
    int constant;
    int eta_x;           // required eta(x)
    int eta_offset;      // offset o in the constraint eta(x + o) = eta_value; 0 = unconstrained
    int eta_value;
};

std::vector<ShiftEquation> equations_for(OptimalityCondition c) {
    switch (c) {
        case OptimalityCondition::C1:
        case OptimalityCondition::C2:
            return {
                {3, 1, 1, 3, 1, -2, 1},       // (x+3)^e + x^e + 3, eta(x) = eta(x-2) = 1
                {-3, 1, 1, -3, -1, 2, -1},    // (x-3)^e + x^e - 3, eta(x) = eta(x+2) = -1
                {3, 1, -1, -3, 1, -2, -1},    // (x+3)^e - x^e - 3, eta(x) = 1, eta(x-2) = -1
            };
        case OptimalityCondition::C3:
            return {
                {3, 1, -1, -3, 1, 0, 0},      // (x+3)^e - x^e - 3, eta(x) = 1
                {-3, 1, -1, 3, -1, 2, -1},    // (x-3)^e - x^e + 3, eta(x) = eta(x+2) = -1
            };
    }
    return {};
}

}  // namespace

bool theorem5_check(const FieldContext& ctx, const CodeSpec& spec) {
    if (ctx.p() != spec.p || ctx.m() != spec.m) throw std::invalid_argument("field context does not match the code spec");
    if (spec.p != 5) throw std::domain_error("theorem5_check is defined for p = 5");
    if (same_coset(5, spec.m, 1, spec.e)) throw std::domain_error("e lies in the coset of 1");
    if (coset_length(5, spec.m, spec.e) != spec.m) throw std::domain_error("|C_e| < m");
    const auto cond = optimality_condition(spec.m, spec.e);
    if (!cond) throw std::domain_error("e = " + std::to_string(spec.e) + " is in weight-3 territory for m = " + std::to_string(spec.m));
    const auto eqs = equations_for(*cond);
    const u64 e = spec.e;
    const u64 n = ctx.q_minus_1();

    // Power and character of an element code; through the log tables when present.
    std::function<u64(u64)> power;
    std::function<int(u64)> eta;
    if (ctx.has_tables()) {
        const LogTables& t = ctx.tables();
        power = [&t, e, n](u64 code) -> u64 { return code == 0 ? 0 : t.antilog[static_cast<u64>(t.log[code]) * e % n]; };
        eta = [&t](u64 code) { return t.log[code] % 2 == 0 ? 1 : -1; };
    } else {
        power = [&ctx, e](u64 code) { return ctx.encode(ctx.pow(ctx.decode(code), e)); };
        eta = [&ctx](u64 code) { return ctx.eta(ctx.decode(code)); };
    }
    auto scaled = [&](int sign, u64 code) { return sign > 0 ? code : ctx.encode(ctx.neg(ctx.decode(code))); };

    for (u64 code = ctx.p(); code < ctx.q(); ++code) {  // codes below p are the prime subfield
        const int ex = eta(code);
        for (const auto& eq : eqs) {
            if (ex != eq.eta_x) continue;
            if (eq.eta_offset != 0 && eta(ctx.add_codes(code, mod_canonical(eq.eta_offset, 5))) != eq.eta_value) continue;
            const u64 shifted = ctx.add_codes(code, mod_canonical(eq.shift, 5));
            u64 sum = scaled(eq.sign_shifted, power(shifted));
            sum = ctx.add_codes(sum, scaled(eq.sign_plain, power(code)));
            sum = ctx.add_codes(sum, mod_canonical(eq.constant, 5));
            if (sum == 0) return false;
        }
    }
    return true;
}

}  // namespace qcodes
