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

#ifndef QCODES_CYCLOTOMIC_HPP
#define QCODES_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "qcodes/numtheory.hpp"

namespace qcodes {

/// Orbit of an exponent under multiplication by p modulo p^m - 1.
struct CyclotomicCoset {
    u64 leader = 0;
    std::vector<u64> elements;  ///< sorted ascending

    unsigned length() const noexcept { return static_cast<unsigned>(elements.size()); }
    bool contains(u64 e) const;

    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

struct CosetSummary {
    u64 leader = 0;
    unsigned length = 0;

    friend bool operator==(const CosetSummary&, const CosetSummary&) = default;
};

/// p^m - 1; throws std::invalid_argument for m outside [1, 8] or p < 2.
u64 group_order(unsigned p, unsigned m);

/// Reduce any integer exponent into [0, p^m - 2].
u64 canonical_exponent(i64 e, unsigned p, unsigned m);

/// All members below throw std::out_of_range unless 0 <= e < p^m - 1.
CyclotomicCoset coset_of(unsigned p, unsigned m, u64 e);
unsigned coset_length(unsigned p, unsigned m, u64 e);
u64 coset_leader(unsigned p, unsigned m, u64 e);
bool same_coset(unsigned p, unsigned m, u64 e1, u64 e2);

/// One entry per coset, ascending by leader; the lengths sum to p^m - 1.
std::vector<CosetSummary> all_coset_leaders(unsigned p, unsigned m);

/**
 * Closed-form coset lengths. Each returns the predicted |C_e| when its
 * hypothesis holds and nullopt otherwise. They exist to cross-check the orbit
 * computation and are never used as the source of truth.
 */
namespace length_laws {

/// gcd(e, p^m - 1) < p with 1 <= e < p^m - 1 gives |C_e| = m.
std::optional<unsigned> small_gcd(unsigned p, unsigned m, u64 e);

/// e = p^h + 1 with 0 <= h < m: m/2 when m is even and h = m/2, m otherwise.
std::optional<unsigned> p_power_plus_one(unsigned p, unsigned m, unsigned h);

/// Every solution e of (5^h + 1) e = 5^t + 5^k mod 5^m - 1, 0 <= h, t, k < m; each has |C_e| = m.
std::vector<u64> quinary_linear_congruence_solutions(unsigned m, unsigned h, unsigned t, unsigned k);

/// e = 5^h + 2 with 0 <= h < m and m > 1 gives |C_e| = m.
std::optional<unsigned> quinary_power_plus_two(unsigned m, unsigned h);

/// e = 5^(h+1) + 5^h + 1 with 0 <= h < m - 1 and gcd(5^(m-h) + 6, 5^m - 1) = 1 gives |C_e| = m.
std::optional<unsigned> quinary_two_powers_plus_one(unsigned m, unsigned h);

}  // namespace length_laws

}  // namespace qcodes

#endif
