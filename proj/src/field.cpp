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

#include "qcodes/field.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace qcodes {

bool FieldElement::is_zero() const noexcept {
    for (unsigned i = 0; i < m_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElement::is_one() const noexcept {
    if (m_ == 0 || c_[0] != 1) return false;
    for (unsigned i = 1; i < m_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    os << '[';
    for (unsigned i = 0; i < x.degree_bound(); ++i) os << (i ? "," : "") << unsigned{x[i]};
    return os << ']';
}

struct FieldContext::Impl {
    unsigned p = 0;
    unsigned m = 0;
    u64 q = 0;
    DensePolynomial modulus;
    // x^m = -sum reduce[i] x^i, i.e. the low coefficients of the monic modulus.
    std::array<std::uint8_t, kMaxExtensionDegree> low{};
    FieldElement generator;

    mutable std::once_flag tables_once;
    mutable LogTables tables;
};

namespace {

FieldElement element_from_index_low_major(u64 idx, unsigned p, unsigned m) {
    // Coordinate 0 is the most significant digit so that increasing idx walks
    // coordinate vectors in lexicographic order, low degree first.
    FieldElement x(m);
    for (unsigned i = m; i-- > 0;) {
        x[i] = static_cast<std::uint8_t>(idx % p);
        idx /= p;
    }
    return x;
}

}  // namespace

FieldContext FieldContext::build(unsigned p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("build_context: p = " + std::to_string(p) + " is not prime");
    if (p == 2) throw std::invalid_argument("build_context: p must be odd (the quadratic character needs (q-1)/2)");
    if (p > 251) throw std::invalid_argument("build_context: p must be below 256");
    if (m < 1 || m > kMaxExtensionDegree)
        throw std::invalid_argument("build_context: m = " + std::to_string(m) + " outside [1, " + std::to_string(kMaxExtensionDegree) + "]");
    const u64 q = ipow(p, m);
    if (q > (u64{1} << 32U)) throw std::invalid_argument("build_context: field order exceeds 2^32");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = q;
    const auto group_primes = prime_divisors(q - 1);

    if (m == 1) {
        // The lexicographic rule would give x, whose root 0 generates nothing; use x - g instead.
        u64 g = 1;
        for (u64 cand = 2; cand < p; ++cand) {
            bool primitive = true;
            for (u64 r : group_primes)
                if (powmod(cand, (q - 1) / r, p) == 1) primitive = false;
            if (primitive) {
                g = cand;
                break;
            }
        }
        impl->modulus = DensePolynomial(p, {-static_cast<i64>(g), 1});
    } else {
        for (u64 idx = 0;; ++idx) {
            const FieldElement low = element_from_index_low_major(idx, p, m);
            std::vector<i64> coeffs(m + 1, 1);
            for (unsigned i = 0; i < m; ++i) coeffs[i] = low[i];
            DensePolynomial cand(p, coeffs);
            if (is_irreducible(cand)) {
                impl->modulus = std::move(cand);
                break;
            }
        }
    }
    for (unsigned i = 0; i < m; ++i) impl->low[i] = static_cast<std::uint8_t>(impl->modulus.coeff(i));

    FieldContext ctx(impl);
    for (u64 idx = 1; idx < q; ++idx) {
        const FieldElement cand = element_from_index_low_major(idx, p, m);
        bool primitive = true;
        for (u64 r : group_primes) {
            if (ctx.pow(cand, (q - 1) / r).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            impl->generator = cand;
            break;
        }
    }
    return ctx;
}

unsigned FieldContext::p() const noexcept { return impl_->p; }
unsigned FieldContext::m() const noexcept { return impl_->m; }
u64 FieldContext::q() const noexcept { return impl_->q; }
u64 FieldContext::q_minus_1() const noexcept { return impl_->q - 1; }
u64 FieldContext::s() const noexcept { return (impl_->q - 1) / 2; }
const DensePolynomial& FieldContext::modulus() const noexcept { return impl_->modulus; }
const FieldElement& FieldContext::generator() const noexcept { return impl_->generator; }

FieldElement FieldContext::zero() const { return FieldElement(m()); }

FieldElement FieldContext::one() const { return constant(1); }

FieldElement FieldContext::constant(i64 c) const {
    FieldElement x(m());
    x[0] = static_cast<std::uint8_t>(mod_canonical(c, p()));
    return x;
}

FieldElement FieldContext::from_coeffs(const std::vector<i64>& coeffs) const {
    if (coeffs.size() > m()) throw std::invalid_argument("from_coeffs: more than m coordinates");
    FieldElement x(m());
    for (std::size_t i = 0; i < coeffs.size(); ++i) x[i] = static_cast<std::uint8_t>(mod_canonical(coeffs[i], p()));
    return x;
}

void FieldContext::check(const FieldElement& x) const {
    if (x.degree_bound() != m()) throw std::invalid_argument("field element does not belong to this context");
}

u64 FieldContext::encode(const FieldElement& x) const {
    check(x);
    u64 code = 0;
    for (unsigned i = m(); i-- > 0;) code = code * p() + x[i];
    return code;
}

FieldElement FieldContext::decode(u64 code) const {
    if (code >= q()) throw std::out_of_range("decode: code outside field");
    FieldElement x(m());
    for (unsigned i = 0; i < m(); ++i) {
        x[i] = static_cast<std::uint8_t>(code % p());
        code /= p();
    }
    return x;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out(m());
    for (unsigned i = 0; i < m(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p());
    return out;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldContext::neg(const FieldElement& a) const {
    check(a);
    FieldElement out(m());
    for (unsigned i = 0; i < m(); ++i) out[i] = static_cast<std::uint8_t>((p() - a[i]) % p());
    return out;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    const unsigned n = m();
    const unsigned pp = p();
    std::array<unsigned, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + unsigned{a[i]} * b[j]) % pp;
    }
    // Reduce with x^n = -sum low[i] x^i.
    for (unsigned k = 2 * n - 1; k-- > n;) {
        const unsigned c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (pp - c) * impl_->low[i]) % pp;
    }
    FieldElement out(n);
    for (unsigned i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(prod[i]);
    return out;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero field element");
    return pow(a, q() - 2);
}

FieldElement FieldContext::pow(const FieldElement& a, u64 n) const {
    check(a);
    FieldElement result = one();
    FieldElement base = a;
    while (n != 0) {
        if (n & 1U) result = mul(result, base);
        n >>= 1U;
        if (n != 0) base = mul(base, base);
    }
    return result;
}

FieldElement FieldContext::generator_power(u64 k) const {
    k %= q_minus_1();
    if (has_tables()) return decode(tables().antilog[k]);
    return pow(generator(), k);
}

int FieldContext::eta(const FieldElement& x) const {
    check(x);
    if (x.is_zero()) throw std::domain_error("quadratic character is undefined at zero");
    return pow(x, s()).is_one() ? 1 : -1;
}

bool FieldContext::in_prime_subfield(const FieldElement& x) const {
    check(x);
    for (unsigned i = 1; i < m(); ++i)
        if (x[i] != 0) return false;
    return true;
}

FieldElement FieldContext::evaluate(const DensePolynomial& f, const FieldElement& x) const {
    if (f.p() != p()) throw std::invalid_argument("evaluate: polynomial over a different prime field");
    FieldElement acc = zero();
    for (int i = f.degree(); i >= 0; --i) acc = add(mul(acc, x), constant(f.coeff(static_cast<std::size_t>(i))));
    return acc;
}

u64 FieldContext::add_codes(u64 a, u64 b) const {
    const unsigned pp = p();
    u64 out = 0;
    u64 place = 1;
    for (unsigned i = 0; i < m(); ++i) {
        out += ((a % pp + b % pp) % pp) * place;
        a /= pp;
        b /= pp;
        place *= pp;
    }
    return out;
}

const LogTables& FieldContext::tables() const {
    if (!has_tables()) throw std::length_error("log tables are only built for m <= " + std::to_string(kMaxTableDegree));
    std::call_once(impl_->tables_once, [this] {
        LogTables& t = impl_->tables;
        const u64 n = q_minus_1();
        t.antilog.assign(n, 0);
        t.log.assign(q(), LogTables::kNone);
        FieldElement x = one();
        for (u64 k = 0; k < n; ++k) {
            const auto code = static_cast<std::uint32_t>(encode(x));
            t.antilog[k] = code;
            t.log[code] = static_cast<std::uint32_t>(k);
            x = mul(x, generator());
        }
        t.zech.assign(n, LogTables::kNone);
        for (u64 k = 0; k < n; ++k) t.zech[k] = t.log[add_codes(1, t.antilog[k])];
    });
    return impl_->tables;
}

NonzeroRange::iterator& NonzeroRange::iterator::operator++() {
    ++index_;
    current_ = ctx_->mul(current_, ctx_->generator());
    return *this;
}

NonzeroRange::iterator NonzeroRange::begin() const { return iterator(&ctx_, 0, ctx_.one()); }
NonzeroRange::iterator NonzeroRange::end() const { return iterator(&ctx_, ctx_.q_minus_1(), ctx_.zero()); }

}  // namespace qcodes
