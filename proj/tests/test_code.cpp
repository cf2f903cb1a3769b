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

#include <gtest/gtest.h>

#include <cmath>

#include "qcodes/code.hpp"
#include "qcodes/cyclotomic.hpp"

using namespace qcodes;

namespace {

const FieldContext& ctx5(unsigned m) {
    static const std::vector<FieldContext> ctxs = [] {
        std::vector<FieldContext> v;
        for (unsigned k = 1; k <= 6; ++k) v.push_back(FieldContext::build(5, k));
        return v;
    }();
    return ctxs.at(m - 1);
}

std::vector<CodeSpec> valid_specs(unsigned p, unsigned m, bool leaders_only) {
    std::vector<CodeSpec> out;
    const u64 n = group_order(p, m);
    for (u64 e = 1; e < n; ++e) {
        if (leaders_only && coset_leader(p, m, e) != e) continue;
        try {
            out.push_back(CodeSpec::make(p, m, e));
        } catch (const InvalidSpec&) {
        }
    }
    return out;
}

}  // namespace

TEST(CodeSpec, RejectsDegenerateExponents) {
    EXPECT_THROW(CodeSpec::make(5, 4, 0), InvalidSpec);
    EXPECT_THROW(CodeSpec::make(5, 4, 312), InvalidSpec);
    EXPECT_THROW(CodeSpec::make(5, 4, 5), InvalidSpec);
    EXPECT_THROW(CodeSpec::make(5, 4, 125), InvalidSpec);
    EXPECT_THROW(CodeSpec::make(5, 4, 624), InvalidSpec);
    EXPECT_THROW(CodeSpec::make(5, 2, 12), InvalidSpec);
    EXPECT_THROW(CodeSpec::make(4, 2, 3), InvalidSpec);
    auto s = CodeSpec::make(5, 4, 2);
    EXPECT_EQ(s.s, 312u);
    EXPECT_EQ(s.n(), 624u);
}

TEST(Dimension, Examples) {
    EXPECT_EQ(dimension(CodeSpec::make(5, 4, 2)), 615u);
    EXPECT_EQ(dimension(CodeSpec::make(5, 4, 26)), 617u);
    EXPECT_EQ(dimension(CodeSpec::make(5, 2, 7)), 19u);
}

TEST(Weight2, AbsentForQuinaryCodes) {
    EXPECT_TRUE(weight2_absent(ctx5(4), CodeSpec::make(5, 4, 2)));
    EXPECT_TRUE(weight2_absent(ctx5(5), CodeSpec::make(5, 5, 7)));
    EXPECT_TRUE(weight2_absent(ctx5(3), CodeSpec::make(5, 3, 11)));
    for (unsigned m = 1; m <= 4; ++m)
        for (const auto& spec : valid_specs(5, m, false)) ASSERT_TRUE(weight2_absent(ctx5(m), spec)) << m << " " << spec.e;
}

TEST(Weight2, PresentForOddExponentsWhenSIsOdd) {
    // p = 7, m = 3: s = 171 is odd, so x = -1 gives a weight-2 word for odd e.
    auto ctx = FieldContext::build(7, 3);
    for (const auto& spec : valid_specs(7, 3, true)) {
        auto w = weight2_search(ctx, spec);
        EXPECT_EQ(w.has_value(), spec.e % 2 == 1) << spec.e;
        if (w) {
            EXPECT_TRUE(w->satisfies(ctx, spec.e));
            EXPECT_EQ(verify_code(ctx, spec).d, 2u);
        }
    }
}

TEST(Weight3Search, Examples) {
    auto w = weight3_search(ctx5(4), CodeSpec::make(5, 4, 9));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->satisfies(ctx5(4), 9));
    EXPECT_FALSE(weight3_search(ctx5(4), CodeSpec::make(5, 4, 2)).has_value());
    EXPECT_FALSE(weight3_search(ctx5(5), CodeSpec::make(5, 5, 7)).has_value());
}

TEST(Weight3Search, OracleAgreesOnEveryExponent) {
    for (unsigned m : {2u, 3u}) {
        for (const auto& spec : valid_specs(5, m, false)) {
            auto fast = weight3_search(ctx5(m), spec);
            auto slow = weight3_oracle(ctx5(m), spec);
            ASSERT_EQ(fast.has_value(), slow.has_value()) << "m=" << m << " e=" << spec.e;
            if (slow) ASSERT_TRUE(slow->satisfies(ctx5(m), spec.e));
        }
    }
    EXPECT_THROW(weight3_oracle(ctx5(4), CodeSpec::make(5, 4, 2)), std::length_error);
}

TEST(Weight3Search, TableKernelMatchesCoordinateReference) {
    for (unsigned m : {2u, 3u, 4u}) {
        for (const auto& spec : valid_specs(5, m, true)) {
            auto fast = weight3_search(ctx5(m), spec);
            auto ref = weight3_search_reference(ctx5(m), spec);
            ASSERT_EQ(fast.has_value(), ref.has_value()) << spec.e;
            if (fast) {
                // Same scan order, so the same first witness.
                EXPECT_EQ(fast->x2, ref->x2);
                EXPECT_EQ(fast->x3, ref->x3);
                EXPECT_EQ(fast->c2, ref->c2);
                EXPECT_EQ(fast->c3, ref->c3);
            }
        }
    }
    for (u64 e : {3u, 7u, 8u, 9u, 620u, 1564u}) {
        auto spec = CodeSpec::make(5, 5, e);
        EXPECT_EQ(weight3_search(ctx5(5), spec).has_value(), weight3_search_reference(ctx5(5), spec).has_value()) << e;
    }
}

TEST(Weight3Search, WitnessesAreHomogeneous) {
    const auto& ctx = ctx5(3);
    for (const auto& spec : valid_specs(5, 3, true)) {
        auto w = weight3_search(ctx, spec);
        if (!w) continue;
        ASSERT_TRUE(w->satisfies(ctx, spec.e));
        for (const auto& mu : ctx.enumerate_nonzero()) ASSERT_TRUE(w->scaled(ctx, mu).satisfies(ctx, spec.e));
    }
}

TEST(SpherePacking, Examples) {
    EXPECT_EQ(sphere_packing_max_d(624, 615, 5), 4u);
    EXPECT_EQ(sphere_packing_max_d(3124, 3113, 5), 4u);
    EXPECT_EQ(sphere_packing_max_d(10, 10, 5), 1u);
    EXPECT_EQ(sphere_packing_max_d(24, 24, 5), 1u);
    for (unsigned m = 2; m <= 8; ++m) {
        const u64 n = ipow(5, m) - 1;
        EXPECT_EQ(sphere_packing_max_d(n, n + 1 - 2 * m - 2, 5), 4u) << m;
    }
    EXPECT_THROW(sphere_packing_max_d(5, 0, 5), std::invalid_argument);
    EXPECT_THROW(sphere_packing_max_d(5, 6, 5), std::invalid_argument);
}

TEST(SpherePacking, MatchesDirectVolumeForSmallCodes) {
    // Direct evaluation with doubles is exact enough here.
    for (u64 n = 2; n <= 12; ++n)
        for (u64 k = 1; k <= n; ++k) {
            double budget = std::pow(5.0, static_cast<double>(n - k));
            unsigned best = 1;
            for (unsigned d = 1; d <= n + 1; ++d) {
                const unsigned t = (d - 1) / 2;
                double vol = 0, term = 1;
                for (unsigned i = 0; i <= t; ++i) {
                    if (i > 0) term = term * static_cast<double>(n - i + 1) * 4 / i;
                    vol += term;
                }
                if (vol <= budget) best = d;
            }
            EXPECT_EQ(sphere_packing_max_d(n, k, 5), std::min<u64>(best, n - k + 1)) << n << " " << k;
        }
}

TEST(VerifyCode, Examples) {
    auto v = verify_code(ctx5(4), CodeSpec::make(5, 4, 314));
    EXPECT_TRUE(v.optimal);
    EXPECT_EQ(v.n, 624u);
    EXPECT_EQ(v.k, 615u);
    EXPECT_EQ(v.d, 4u);
    v = verify_code(ctx5(5), CodeSpec::make(5, 5, 1564));
    EXPECT_TRUE(v.optimal);
    EXPECT_EQ(v.n, 3124u);
    EXPECT_EQ(v.k, 3113u);
    v = verify_code(ctx5(4), CodeSpec::make(5, 4, 9));
    EXPECT_EQ(v.d, 3u);
    EXPECT_FALSE(v.optimal);
    ASSERT_TRUE(v.witness3.has_value());
    EXPECT_TRUE(v.witness3->satisfies(ctx5(4), 9));
    v = verify_code(ctx5(4), CodeSpec::make(5, 4, 26));
    EXPECT_EQ(v.k, 617u);
    EXPECT_FALSE(v.optimal);
    EXPECT_THROW(verify_code(ctx5(3), CodeSpec::make(5, 4, 2)), std::invalid_argument);
}

TEST(VerifyCode, VerdictIsConstantOnCosets) {
    for (const auto& spec : valid_specs(5, 3, false)) {
        const u64 leader = coset_leader(5, 3, spec.e);
        EXPECT_EQ(verify_code(ctx5(3), spec).optimal, verify_code(ctx5(3), CodeSpec::make(5, 3, leader)).optimal);
    }
}

TEST(ExplicitWeight3Witness, Examples) {
    auto w = theorem4_witness(ctx5(4), 8);
    EXPECT_EQ(w.c1, 1u);
    EXPECT_EQ(w.c2, 1u);
    EXPECT_EQ(w.c3, 3u);
    EXPECT_EQ(w.x3, ctx5(4).constant(-1));
    EXPECT_TRUE(w.satisfies(ctx5(4), 8));
    w = theorem4_witness(ctx5(5), 9);
    EXPECT_EQ(w.c2, 4u);
    EXPECT_EQ(w.c3, 2u);
    EXPECT_TRUE(w.satisfies(ctx5(5), 9));
    EXPECT_THROW(theorem4_witness(ctx5(4), 3), std::domain_error);
    EXPECT_THROW(theorem4_witness(ctx5(4), 26), std::domain_error);
    EXPECT_THROW(theorem4_witness(ctx5(4), 5), std::domain_error);
}

TEST(ExplicitWeight3Witness, EveryClassMemberHasWeightThree) {
    for (unsigned m : {2u, 3u, 4u, 5u}) {
        for (const auto& spec : valid_specs(5, m, false)) {
            if (coset_length(5, m, spec.e) != m || optimality_condition(m, spec.e)) continue;
            auto w = theorem4_witness(ctx5(m), spec.e);
            ASSERT_TRUE(w.satisfies(ctx5(m), spec.e)) << m << " " << spec.e;
        }
        for (const auto& spec : valid_specs(5, m, true)) {
            if (coset_length(5, m, spec.e) != m || optimality_condition(m, spec.e)) continue;
            EXPECT_EQ(verify_code(ctx5(m), spec).d, 3u);
        }
    }
}

TEST(CharacterSumCriterion, Examples) {
    EXPECT_TRUE(theorem5_check(ctx5(5), CodeSpec::make(5, 5, 7)));
    EXPECT_TRUE(theorem5_check(ctx5(4), CodeSpec::make(5, 4, 6)));
    EXPECT_TRUE(theorem5_check(ctx5(5), CodeSpec::make(5, 5, 620)));
    EXPECT_THROW(theorem5_check(ctx5(4), CodeSpec::make(5, 4, 9)), std::domain_error);
    EXPECT_THROW(theorem5_check(ctx5(4), CodeSpec::make(5, 4, 26)), std::domain_error);
    EXPECT_EQ(optimality_condition(5, 620), OptimalityCondition::C1);
    EXPECT_EQ(optimality_condition(4, 6), OptimalityCondition::C2);
    EXPECT_EQ(optimality_condition(4, 7), OptimalityCondition::C3);
    EXPECT_FALSE(optimality_condition(4, 8).has_value());
}

TEST(CharacterSumCriterion, EquivalentToDirectSearch) {
    for (unsigned m : {3u, 4u, 5u}) {
        unsigned checked = 0;
        for (const auto& spec : valid_specs(5, m, true)) {
            if (coset_length(5, m, spec.e) != m || !optimality_condition(m, spec.e)) continue;
            ASSERT_EQ(theorem5_check(ctx5(m), spec), verify_code(ctx5(m), spec).optimal) << "m=" << m << " e=" << spec.e;
            ++checked;
        }
        EXPECT_GT(checked, 0u);
    }
}

TEST(CharacterSumCriterion, OptimalExponentsFallInAllowedClasses) {
    for (unsigned m : {2u, 3u, 4u, 5u})
        for (const auto& spec : valid_specs(5, m, true))
            if (verify_code(ctx5(m), spec).optimal) EXPECT_TRUE(optimality_condition(m, spec.e).has_value()) << m << " " << spec.e;
}
