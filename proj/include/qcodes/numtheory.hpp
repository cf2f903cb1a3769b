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

#ifndef QCODES_NUMTHEORY_HPP
#define QCODES_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace qcodes {

/// Exponents, coset members and field orders all fit comfortably in 64 bits.
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// base^exp over the integers; throws std::overflow_error on overflow.
u64 ipow(u64 base, unsigned exp);

/// base^exp mod modulus by square-and-multiply (modulus > 0).
u64 powmod(u64 base, u64 exp, u64 modulus);

/// Canonical residue of a (possibly negative) value in [0, modulus).
u64 mod_canonical(i64 value, u64 modulus);

/// gcd(value, modulus) for a signed value; gcd(0, n) = n.
u64 gcd_signed(i64 value, u64 modulus);

/// Every x in [0, n) with a x = b mod n, ascending; empty when gcd(a, n) does not divide b.
std::vector<u64> linear_congruence_solutions(u64 a, u64 b, u64 n);

bool is_prime(u64 n);

/// Distinct prime divisors in ascending order.
std::vector<u64> prime_divisors(u64 n);

}  // namespace qcodes

#endif
