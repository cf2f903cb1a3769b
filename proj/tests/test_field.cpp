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

#include <random>
#include <set>
#include <thread>

#include "qcodes/extension.hpp"
#include "qcodes/field.hpp"

using namespace qcodes;

namespace {

// Product via polynomial multiplication and division by the modulus: an independent route to mul.
FieldElement mul_via_polynomials(const FieldContext& ctx, const FieldElement& a, const FieldElement& b) {
    auto to_poly = [&](const FieldElement& x) {
        std::vector<i64> c(x.coeffs().begin(), x.coeffs().end());
        return DensePolynomial(ctx.p(), c);
    };
    auto r = poly_divmod(to_poly(a) * to_poly(b), ctx.modulus()).remainder;
    std::vector<i64> c(r.coeffs().begin(), r.coeffs().end());
    return ctx.from_coeffs(c);
}

std::vector<FieldElement> all_elements(const FieldContext& ctx) {
    std::vector<FieldElement> out;
    for (u64 c = 0; c < ctx.q(); ++c) out.push_back(ctx.decode(c));
    return out;
}

}  // namespace

TEST(BuildContext, Parameters) {
    auto f51 = FieldContext::build(5, 1);
    EXPECT_EQ(f51.modulus(), parse_polynomial("x + 3", 5));
    EXPECT_EQ(f51.generator(), f51.constant(2));
    auto f52 = FieldContext::build(5, 2);
    EXPECT_EQ(f52.q_minus_1(), 24u);
    EXPECT_EQ(f52.s(), 12u);
    EXPECT_EQ(FieldContext::build(5, 4).s(), 312u);
    EXPECT_EQ(FieldContext::build(5, 5).s(), 1562u);
}

TEST(BuildContext, Guards) {
    EXPECT_THROW(FieldContext::build(4, 2), std::invalid_argument);
    EXPECT_THROW(FieldContext::build(2, 3), std::invalid_argument);
    EXPECT_THROW(FieldContext::build(5, 0), std::invalid_argument);
    EXPECT_THROW(FieldContext::build(5, 9), std::invalid_argument);
    EXPECT_NO_THROW(FieldContext::build(5, 8));
    EXPECT_NO_THROW(FieldContext::build(7, 3));
}

TEST(BuildContext, ModulusIsSmallestIrreducible) {
    for (unsigned p : {3u, 5u, 7u}) {
        for (unsigned m = 2; m <= 4; ++m) {
            auto ctx = FieldContext::build(p, m);
            const auto& f = ctx.modulus();
            ASSERT_EQ(f.degree(), static_cast<int>(m));
            ASSERT_TRUE(f.is_monic());
            ASSERT_TRUE(is_irreducible(f));
            // Any monic degree-m polynomial whose low coefficients compare smaller must be reducible.
            std::vector<i64> c(m + 1, 0);
            c[m] = 1;
            const u64 count = ipow(p, m);
            for (u64 idx = 0; idx < count; ++idx) {
                u64 v = idx;
                for (unsigned i = m; i-- > 0;) {
                    c[i] = static_cast<i64>(v % p);
                    v /= p;
                }
                DensePolynomial cand(p, c);
                if (cand == f) break;
                EXPECT_FALSE(is_irreducible(cand)) << cand;
            }
        }
    }
}

TEST(BuildContext, GeneratorIsPrimitiveAndDeterministic) {
    for (unsigned m = 1; m <= 6; ++m) {
        auto ctx = FieldContext::build(5, m);
        const auto& g = ctx.generator();
        EXPECT_TRUE(ctx.pow(g, ctx.q_minus_1()).is_one());
        for (u64 r : prime_divisors(ctx.q_minus_1())) EXPECT_FALSE(ctx.pow(g, ctx.q_minus_1() / r).is_one());
        EXPECT_EQ(FieldContext::build(5, m).generator(), g);
        EXPECT_EQ(FieldContext::build(5, m).modulus(), ctx.modulus());
        EXPECT_EQ(ctx.s() % 2, 0u);
    }
}

TEST(FieldArithmetic, PrimeFieldExamples) {
    auto ctx = FieldContext::build(5, 1);
    EXPECT_EQ(ctx.mul(ctx.constant(2), ctx.constant(3)), ctx.one());
    EXPECT_EQ(ctx.inv(ctx.constant(3)), ctx.constant(2));
    EXPECT_THROW(ctx.inv(ctx.zero()), std::domain_error);
    for (i64 a = 0; a < 5; ++a)
        for (i64 b = 0; b < 5; ++b) {
            EXPECT_EQ(ctx.mul(ctx.constant(a), ctx.constant(b)), ctx.constant(a * b));
            EXPECT_EQ(ctx.add(ctx.constant(a), ctx.constant(b)), ctx.constant(a + b));
            EXPECT_EQ(ctx.sub(ctx.constant(a), ctx.constant(b)), ctx.constant(a - b));
        }
}

TEST(FieldArithmetic, MulMatchesPolynomialReduction) {
    for (unsigned m : {2u, 3u}) {
        auto ctx = FieldContext::build(5, m);
        auto all = all_elements(ctx);
        for (const auto& a : all)
            for (const auto& b : all) ASSERT_EQ(ctx.mul(a, b), mul_via_polynomials(ctx, a, b));
    }
    std::mt19937_64 rng(5);
    for (unsigned m : {4u, 5u, 8u}) {
        auto ctx = FieldContext::build(5, m);
        std::uniform_int_distribution<u64> pick(0, ctx.q() - 1);
        for (int i = 0; i < 2000; ++i) {
            auto a = ctx.decode(pick(rng));
            auto b = ctx.decode(pick(rng));
            ASSERT_EQ(ctx.mul(a, b), mul_via_polynomials(ctx, a, b));
        }
    }
}

TEST(FieldArithmetic, InversePowAndFrobenius) {
    auto ctx = FieldContext::build(5, 4);
    EXPECT_TRUE(ctx.pow(ctx.generator(), 624).is_one());
    EXPECT_TRUE(ctx.pow(ctx.zero(), 0).is_one());
    for (const auto& x : ctx.enumerate_nonzero()) {
        ASSERT_TRUE(ctx.mul(x, ctx.inv(x)).is_one());
        ASSERT_TRUE(ctx.pow(x, ctx.q_minus_1()).is_one());
        ASSERT_TRUE(ctx.pow(x, 0).is_one());
    }
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<u64> pick(0, ctx.q() - 1);
    for (int i = 0; i < 1000; ++i) {
        auto a = ctx.decode(pick(rng));
        auto b = ctx.decode(pick(rng));
        EXPECT_EQ(ctx.pow(ctx.add(a, b), 5), ctx.add(ctx.pow(a, 5), ctx.pow(b, 5)));
    }
}

TEST(FieldArithmetic, EncodeDecodeRoundTrip) {
    auto ctx = FieldContext::build(5, 3);
    for (u64 c = 0; c < ctx.q(); ++c) EXPECT_EQ(ctx.encode(ctx.decode(c)), c);
    EXPECT_THROW(ctx.decode(ctx.q()), std::out_of_range);
    EXPECT_THROW(ctx.from_coeffs({1, 2, 3, 4}), std::invalid_argument);
    auto other = FieldContext::build(5, 2);
    EXPECT_THROW(ctx.mul(ctx.one(), other.one()), std::invalid_argument);
}

TEST(Eta, Examples) {
    for (unsigned m = 1; m <= 6; ++m) {
        auto ctx = FieldContext::build(5, m);
        EXPECT_EQ(ctx.eta(ctx.constant(-1)), 1);
        EXPECT_EQ(ctx.eta(ctx.constant(2)), m % 2 == 1 ? -1 : 1);
        EXPECT_EQ(ctx.eta(ctx.constant(3)), m % 2 == 1 ? -1 : 1);
        EXPECT_EQ(ctx.eta(ctx.constant(-2)), m % 2 == 1 ? -1 : 1);
        EXPECT_THROW(ctx.eta(ctx.zero()), std::domain_error);
    }
}

TEST(Eta, MultiplicativeAndMatchesSquares) {
    for (unsigned m = 1; m <= 3; ++m) {
        auto ctx = FieldContext::build(5, m);
        std::vector<FieldElement> nz(ctx.enumerate_nonzero().begin(), ctx.enumerate_nonzero().end());
        for (const auto& a : nz)
            for (const auto& b : nz) ASSERT_EQ(ctx.eta(a) * ctx.eta(b), ctx.eta(ctx.mul(a, b)));
    }
    std::mt19937_64 rng(4);
    for (unsigned m : {4u, 5u}) {
        auto ctx = FieldContext::build(5, m);
        std::uniform_int_distribution<u64> pick(1, ctx.q() - 1);
        for (int i = 0; i < 3000; ++i) {
            auto a = ctx.decode(pick(rng));
            auto b = ctx.decode(pick(rng));
            ASSERT_EQ(ctx.eta(a) * ctx.eta(b), ctx.eta(ctx.mul(a, b)));
        }
    }
    for (unsigned m = 1; m <= 5; ++m) {
        auto ctx = FieldContext::build(5, m);
        std::set<u64> squares;
        u64 plus = 0;
        for (const auto& x : ctx.enumerate_nonzero()) {
            squares.insert(ctx.encode(ctx.mul(x, x)));
            if (ctx.eta(x) == 1) ++plus;
        }
        EXPECT_EQ(plus, ctx.s());
        EXPECT_EQ(squares.size(), ctx.s());
        for (u64 c : squares) EXPECT_EQ(ctx.eta(ctx.decode(c)), 1);
    }
}

TEST(EnumerateNonzero, OrderAndCounts) {
    EXPECT_EQ(std::distance(FieldContext::build(5, 1).enumerate_nonzero().begin(), FieldContext::build(5, 1).enumerate_nonzero().end()), 4);
    auto ctx = FieldContext::build(5, 4);
    std::set<u64> seen;
    u64 k = 0;
    for (const auto& x : ctx.enumerate_nonzero()) {
        EXPECT_FALSE(x.is_zero());
        EXPECT_EQ(x, ctx.pow(ctx.generator(), k));
        seen.insert(ctx.encode(x));
        ++k;
    }
    EXPECT_EQ(k, 624u);
    EXPECT_EQ(seen.size(), 624u);
    auto c2 = FieldContext::build(5, 2);
    u64 n = 0;
    for ([[maybe_unused]] const auto& x : c2.enumerate_nonzero()) ++n;
    EXPECT_EQ(n, 24u);
}

TEST(PrimeSubfield, AgreesWithFrobeniusFixedPoints) {
    for (unsigned m = 1; m <= 4; ++m) {
        auto ctx = FieldContext::build(5, m);
        unsigned count = 0;
        for (const auto& x : all_elements(ctx)) {
            const bool fixed = ctx.pow(x, 5) == x;
            EXPECT_EQ(ctx.in_prime_subfield(x), fixed);
            count += fixed;
        }
        EXPECT_EQ(count, 5u);
    }
    auto ctx = FieldContext::build(5, 4);
    EXPECT_TRUE(ctx.in_prime_subfield(ctx.constant(3)));
    EXPECT_FALSE(ctx.in_prime_subfield(ctx.generator()));
}

TEST(LogTables, ConsistentWithArithmetic) {
    auto ctx = FieldContext::build(5, 4);
    const auto& t = ctx.tables();
    ASSERT_EQ(t.antilog.size(), 624u);
    EXPECT_EQ(t.log[0], LogTables::kNone);
    for (u64 k = 0; k < 624; ++k) {
        EXPECT_EQ(t.log[t.antilog[k]], k);
        EXPECT_EQ(ctx.decode(t.antilog[k]), ctx.pow(ctx.generator(), k));
        const auto sum = ctx.add(ctx.one(), ctx.decode(t.antilog[k]));
        if (k == ctx.s())
            EXPECT_EQ(t.zech[k], LogTables::kNone);
        else
            EXPECT_EQ(ctx.decode(t.antilog[t.zech[k]]), sum);
    }
    EXPECT_THROW(FieldContext::build(5, 7).tables(), std::length_error);
}

TEST(LogTables, ConcurrentFirstUseBuildsOnce) {
    auto ctx = FieldContext::build(5, 5);
    std::vector<const LogTables*> seen(8, nullptr);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < seen.size(); ++i) threads.emplace_back([&, i] { seen[i] = &ctx.tables(); });
    for (auto& th : threads) th.join();
    for (const auto* p : seen) EXPECT_EQ(p, seen[0]);
    EXPECT_EQ(seen[0]->antilog.size(), 3124u);
}

TEST(RootsInExtension, Examples) {
    auto c2 = FieldContext::build(5, 2);
    auto roots = roots_in_extension(c2, parse_polynomial("x^2 - 3", 5));
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& r : roots) EXPECT_EQ(c2.mul(r, r), c2.constant(3));
    // y = 2 +- sqrt(3) are the primitive cube roots of unity.
    for (const auto& r : roots) EXPECT_TRUE(c2.pow(c2.add(c2.constant(2), r), 3).is_one());

    auto c4 = FieldContext::build(5, 4);
    EXPECT_TRUE(roots_in_extension(c4, parse_polynomial("x^3 + 2x + 1", 5)).empty());
    auto lin = roots_in_extension(c4, parse_polynomial("x - 3", 5));
    ASSERT_EQ(lin.size(), 1u);
    EXPECT_EQ(lin[0], c4.constant(3));
    EXPECT_THROW(roots_in_extension(FieldContext::build(5, 7), parse_polynomial("x", 5)), std::length_error);
    EXPECT_THROW(roots_in_extension(c4, parse_polynomial("3", 5)), std::invalid_argument);
}

TEST(RootsInExtension, IrreducibleHasRootsExactlyWhenDegreeDividesM) {
    for (unsigned m = 1; m <= 4; ++m) {
        auto ctx = FieldContext::build(5, m);
        for (const char* text : {"x^2 + 2", "x^3 + 2x + 1", "x^4 + x^3 + x^2 + x + 3", "x^5 + 4x^4 + 2x^3 + 3x + 1", "x + 1"}) {
            auto f = parse_polynomial(text, 5);
            ASSERT_TRUE(is_irreducible(f));
            const auto d = static_cast<unsigned>(f.degree());
            EXPECT_EQ(roots_in_extension(ctx, f).size(), m % d == 0 ? d : 0u) << text << " m=" << m;
        }
    }
}

TEST(MinPoly, Examples) {
    auto ctx = FieldContext::build(5, 4);
    EXPECT_EQ(min_poly(ctx, ctx.constant(-1)), parse_polynomial("x + 1", 5));
    EXPECT_EQ(min_poly(ctx, ctx.one()), parse_polynomial("x + 4", 5));
    auto ma = min_poly(ctx, ctx.generator());
    EXPECT_EQ(ma.degree(), 4);
    EXPECT_TRUE(is_irreducible(ma));
    EXPECT_TRUE(poly_divmod(DensePolynomial::monomial(5, 1, 625) - DensePolynomial::x(5), ma).remainder.is_zero());
    for (const auto& x : ctx.enumerate_nonzero()) {
        auto f = min_poly(ctx, x);
        ASSERT_TRUE(ctx.evaluate(f, x).is_zero());
        ASSERT_TRUE(f.is_monic());
        ASSERT_EQ(4 % f.degree(), 0);
    }
}
