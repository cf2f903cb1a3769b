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

#include "qcodes/extension.hpp"

#include <stdexcept>

namespace qcodes {

std::vector<FieldElement> roots_in_extension(const FieldContext& ctx, const DensePolynomial& f) {
    if (f.p() != ctx.p()) throw std::invalid_argument("roots_in_extension: polynomial over a different prime field");
    if (f.degree() < 1) throw std::invalid_argument("roots_in_extension: polynomial must be nonconstant");
    if (ctx.q() > kMaxRootSearchOrder) throw std::length_error("roots_in_extension: field too large for exhaustive evaluation");
    std::vector<FieldElement> roots;
    if (f.coeff(0) == 0) roots.push_back(ctx.zero());
    for (const auto& x : ctx.enumerate_nonzero())
        if (ctx.evaluate(f, x).is_zero()) roots.push_back(x);
    return roots;
}

DensePolynomial min_poly(const FieldContext& ctx, const FieldElement& x) {
    // Coefficients of the product live in F_{p^m}; they land in Z_p at the end.
    std::vector<FieldElement> acc{ctx.one()};
    FieldElement conj = x;
    do {
        std::vector<FieldElement> next(acc.size() + 1, ctx.zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], acc[i]);
            next[i] = ctx.sub(next[i], ctx.mul(acc[i], conj));
        }
        acc = std::move(next);
        conj = ctx.pow(conj, ctx.p());
    } while (!(conj == x));

    std::vector<i64> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& c : acc) {
        if (!ctx.in_prime_subfield(c)) throw std::logic_error("min_poly: coefficient outside the prime field");
        coeffs.push_back(c[0]);
    }
    return DensePolynomial(ctx.p(), coeffs);
}

}  // namespace qcodes
