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

#ifndef QCODES_CONSTRUCTIONS_HPP
#define QCODES_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcodes/code.hpp"
#include "qcodes/numtheory.hpp"

namespace qcodes {

/// One exponent produced by a named family together with the parameters that produced it.
struct ExponentFamily {
    std::string name;  ///< "thm1", "thm7_type3", "remark2", "remark3_p7", ...
    std::vector<std::pair<std::string, i64>> params;
    unsigned branch = 0;  ///< which alternative of the family's condition list matched; 0 if none
    u64 e = 0;
    unsigned m = 0;
    unsigned p = 5;
    /// False only for candidates emitted although a stated hypothesis fails (p = 7 parity condition).
    bool hypotheses_hold = true;

    i64 param(const std::string& key) const;
};

/// Re-checks the defining congruence or formula of f.name by substitution.
bool satisfies_definition(const ExponentFamily& f);

/// (5^h - 1) e = 5^t - 5^k with 0 <= h, t, k <= m, h != 0, t != k, gcd(t - k, m) = 1.
std::vector<ExponentFamily> gen_thm1(unsigned m);
/// (5^h + 1) e = 5^t + 5^k with 0 <= h, t, k < m.
std::vector<ExponentFamily> gen_thm2(unsigned m);
/// e = s + 5^h + 1, h != m/2.
std::vector<ExponentFamily> gen_thm3(unsigned m);
/// e = 5^h + 1 for m = 0 mod 4; throws std::domain_error otherwise.
std::vector<ExponentFamily> gen_thm6(unsigned m);
/// APN exponents; type 6 is emitted only on request.
std::vector<ExponentFamily> gen_thm7(unsigned m, bool include_type6 = false);
/// e = 5^h + 2.
std::vector<ExponentFamily> gen_thm8(unsigned m);
/// e = 5^(h+1) + 5^h + 1 for h = m - 2, ..., m - 6.
std::vector<ExponentFamily> gen_thm9(unsigned m);
/// e = s + h for the offsets listed in thm10_rows().
std::vector<ExponentFamily> gen_thm10(unsigned m);
/// e = h (5^(m-1) - 1) for odd m; throws std::domain_error for even m.
std::vector<ExponentFamily> gen_thm11(unsigned m);
/// e (5^h + 1) = 5^t - 5^k; unproven candidates.
std::vector<ExponentFamily> gen_remark2(unsigned m);

/// Offset rows e = s + h with a predicate on m, kept as data.
struct OffsetRow {
    i64 h;
    unsigned branch;
    bool (*applies)(unsigned m);
};
const std::vector<OffsetRow>& thm10_rows();

/// h together with the integers that must not divide m.
struct MultiplierRow {
    u64 h;
    std::vector<unsigned> forbidden_divisors;
};
const std::vector<MultiplierRow>& thm11_rows();

struct VerifiedCandidate {
    ExponentFamily family;
    CodeVerdict verdict;
};

/**
 * p = 7 analogues: e (7^h + 1) = 7^t + 7^k with gcd(7^t - e, 7^m - 1) = gcd(7^k - e, 7^m - 1) = 1
 * ("remark1_p7") and e = s + 7^h + 1 ("remark3_p7"), each verified in F_{7^m}.
 * Entries whose s and e are both odd carry hypotheses_hold = false.
 * Throws std::length_error for m outside {2, 3}.
 */
std::vector<VerifiedCandidate> gen_remark_p7(unsigned m);

/// Runs verify_code on each entry in a context for (f.p, f.m).
std::vector<VerifiedCandidate> verify_candidates(const std::vector<ExponentFamily>& fams);

/// Family names accepted by generate().
const std::vector<std::string>& family_names();

/**
 * Dispatch by name ("thm1" ... "thm11", "thm7" also accepts "thm7_typeN", "remark2").
 * Throws std::invalid_argument for an unknown name and std::domain_error when
 * the family's precondition on m fails.
 */
std::vector<ExponentFamily> generate(const std::string& name, unsigned m);

}  // namespace qcodes

#endif
