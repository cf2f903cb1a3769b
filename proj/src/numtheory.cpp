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

#include "qcodes/numtheory.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qcodes {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

u64 ipow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<u64>::max() / base)
            throw std::overflow_error("ipow: result exceeds 64 bits");
        result *= base;
    }
    return result;
}

u64 powmod(u64 base, u64 exp, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("powmod: zero modulus");
    u128 result = 1 % modulus;
    u128 b = base % modulus;
    while (exp != 0) {
        if (exp & 1U) result = result * b % modulus;
        b = b * b % modulus;
        exp >>= 1U;
    }
    return static_cast<u64>(result);
}

u64 mod_canonical(i64 value, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_canonical: zero modulus");
    const auto mi = static_cast<i64>(modulus);
    i64 r = value % mi;
    if (r < 0) r += mi;
    return static_cast<u64>(r);
}

u64 gcd_signed(i64 value, u64 modulus) {
    return std::gcd(mod_canonical(value, modulus), modulus);
}

std::vector<u64> linear_congruence_solutions(u64 a, u64 b, u64 n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    std::vector<u64> out;
    a %= n;
    b %= n;
    const u64 g = std::gcd(a, n);
    if (b % g != 0) return out;
    const u64 ng = n / g;
    // a/g is a unit modulo n/g; invert it by the extended Euclidean algorithm.
    i64 r0 = static_cast<i64>(ng), r1 = static_cast<i64>((a / g) % ng);
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const i64 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    const u64 inv = mod_canonical(s0, ng);
    const u64 base = static_cast<u64>((static_cast<u128>((b / g) % ng) * inv) % ng);
    for (u64 i = 0; i < g; ++i) out.push_back(base + i * ng);
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace qcodes
