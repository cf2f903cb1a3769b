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

#ifndef QCODES_CODE_HPP
#define QCODES_CODE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qcodes/field.hpp"

namespace qcodes {

class InvalidSpec : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The triple (p, m, e) with s = (p^m - 1)/2 describing C_(1,e,s).
struct CodeSpec {
    unsigned p = 5;
    unsigned m = 0;
    u64 e = 0;
    u64 s = 0;

    /// Throws InvalidSpec when e is 0, s, outside [1, p^m - 2], or in the coset of 1.
    static CodeSpec make(unsigned p, unsigned m, u64 e);
    u64 n() const { return 2 * s; }
};

/// c1 x1 + c2 x2 + c3 x3 = 0 together with the same sums of e-th and s-th powers.
struct Weight3Witness {
    FieldElement x1, x2, x3;
    unsigned c1 = 0, c2 = 0, c3 = 0;

    /// Re-evaluates all three sums with plain exponentiation (no tables).
    bool satisfies(const FieldContext& ctx, u64 e) const;
    /// Same support scaled by mu != 0.
    Weight3Witness scaled(const FieldContext& ctx, const FieldElement& mu) const;
};

/// 1 + a x = 0 with matching e-th and s-th powers, x != 1.
struct Weight2Witness {
    FieldElement x;
    unsigned a = 0;

    bool satisfies(const FieldContext& ctx, u64 e) const;
};

struct CodeVerdict {
    u64 n = 0;
    u64 k = 0;
    unsigned d = 0;
    bool optimal = false;
    /// False only if no word of weight <= 3 exists but the packing ceiling exceeds 4.
    bool d_certified = true;
    unsigned coset_length_e = 0;
    std::optional<Weight2Witness> witness2;
    std::optional<Weight3Witness> witness3;
};

/// n - 1 - m - |C_e|.
u64 dimension(const CodeSpec& spec);

std::optional<Weight2Witness> weight2_search(const FieldContext& ctx, const CodeSpec& spec);
inline bool weight2_absent(const FieldContext& ctx, const CodeSpec& spec) { return !weight2_search(ctx, spec); }

/**
 * Normalized weight-3 search: for a, b in F_p^* ascending and x = alpha^i,
 * i = 1..q-2, put y = -(1 + a x)/b and test 1 + a x^e + b y^e = 0 and
 * 1 + a eta(x) + b eta(y) = 0. The first hit is returned as (1, x, y; 1, a, b).
 * Uses log/Zech tables when the context has them, else weight3_search_reference.
 */
std::optional<Weight3Witness> weight3_search(const FieldContext& ctx, const CodeSpec& spec);
/// Same scan and order as weight3_search, in coordinate arithmetic.
std::optional<Weight3Witness> weight3_search_reference(const FieldContext& ctx, const CodeSpec& spec);
/// Brute force with x1 = 1 over all distinct x2, x3 and all coefficient triples. Throws std::length_error for m > 3.
std::optional<Weight3Witness> weight3_oracle(const FieldContext& ctx, const CodeSpec& spec);

/// Largest d allowed by the sphere-packing bound, capped by the Singleton bound n - k + 1.
unsigned sphere_packing_max_d(u64 n, u64 k, unsigned p);

CodeVerdict verify_code(const FieldContext& ctx, const CodeSpec& spec);

/**
 * Explicit weight-3 codeword for p = 5 when e = 0 mod 4 with m even, e = 1 mod 4,
 * or e = 2 mod 4 with m odd. Throws std::domain_error outside these classes or
 * when e is in C_1 or |C_e| < m.
 */
Weight3Witness theorem4_witness(const FieldContext& ctx, u64 e);

enum class OptimalityCondition { C1, C2, C3 };

/// Condition selected by e mod 4 and the parity of m; nullopt in weight-3 territory.
std::optional<OptimalityCondition> optimality_condition(unsigned m, u64 e);

/**
 * Scans x in F_{5^m} \ F_5 against the equations of the selected condition
 * with their quadratic-character side constraints; true iff none has a solution.
 * Throws std::domain_error when e is in C_1, |C_e| < m, p != 5 or no condition applies.
 */
bool theorem5_check(const FieldContext& ctx, const CodeSpec& spec);

std::string to_string(OptimalityCondition c);

}  // namespace qcodes

#endif
